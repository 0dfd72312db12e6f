//! Synthetic error/fix pairs made by corrupting compilable Java files.
//!
//! Each corruption is a single-token edit whose inverse is a fix-language
//! command, so the gold repair of every pair is known exactly.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagnostics::{self, CompileError, Compiler};
use crate::editdsl::{self, EditAction, EditCommand, Payload, MAX_LOCATION};
use crate::jlex::{self, Category};
use crate::par::{self, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ErrorCategory {
    Delimiter,
    Operator,
    Keyword,
    Other,
}

impl ErrorCategory {
    pub const ALL: [ErrorCategory; 4] =
        [ErrorCategory::Delimiter, ErrorCategory::Operator, ErrorCategory::Keyword, ErrorCategory::Other];

    pub fn of_token(cat: Category) -> Self {
        match cat {
            Category::Delimiter => ErrorCategory::Delimiter,
            Category::Operator => ErrorCategory::Operator,
            Category::Keyword => ErrorCategory::Keyword,
            _ => ErrorCategory::Other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCategory::Delimiter => "Delimiter",
            ErrorCategory::Operator => "Operator",
            ErrorCategory::Keyword => "Keyword",
            ErrorCategory::Other => "Other",
        }
    }
}

impl fmt::Display for ErrorCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Category of a repair: the payload's category for inserts and changes, the
/// removed token's category for deletes.
pub fn categorize(cmd: &EditCommand, line_tokens: &[String], location: usize) -> ErrorCategory {
    match cmd.payload() {
        Some(Payload::Token(t)) => ErrorCategory::of_token(jlex::category_of(t)),
        Some(Payload::Unk) => ErrorCategory::Other,
        None => line_tokens
            .get(location.wrapping_sub(1))
            .map(|t| ErrorCategory::of_token(jlex::category_of(t)))
            .unwrap_or(ErrorCategory::Other),
    }
}

pub const BUCKETS: [&str; 11] = [
    "1-100", "101-200", "201-300", "301-400", "401-500", "501-600", "601-700", "701-800", "801-900",
    "901-1000", ">1000",
];

pub fn length_bucket(tokens: usize) -> &'static str {
    if tokens > 1000 {
        BUCKETS[10]
    } else {
        BUCKETS[tokens.saturating_sub(1) / 100]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorruptionSpec {
    /// Delimiter, Operator, Keyword, Other.
    pub category_mixture: [f64; 4],
    /// Weights for 1, 2 and 3 edits per pair.
    pub edit_counts: [f64; 3],
    /// Share of all pairs whose corruption is a curly brace.
    pub nesting_fraction: f64,
    /// Share of multi-edit pairs whose edits share one line.
    pub same_line_fraction: f64,
    /// Weights for deleting, inserting and changing a token.
    pub op_weights: [f64; 3],
    pub max_attempts: usize,
    pub seed: u64,
}

impl Default for CorruptionSpec {
    fn default() -> Self {
        CorruptionSpec {
            category_mixture: [0.8037, 0.0587, 0.0504, 0.0872],
            edit_counts: [0.7, 0.2, 0.1],
            nesting_fraction: 0.22,
            same_line_fraction: 0.0,
            op_weights: [0.4, 0.3, 0.3],
            max_attempts: 10,
            seed: 0,
        }
    }
}

impl CorruptionSpec {
    /// Single-edit pairs only, as used for evaluation sets.
    pub fn single_edit(seed: u64) -> Self {
        CorruptionSpec { edit_counts: [1.0, 0.0, 0.0], seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), CorpusError> {
        let sum: f64 = self.category_mixture.iter().sum();
        if (sum - 1.0).abs() > 1e-9 || self.category_mixture.iter().any(|p| *p < 0.0) {
            return Err(CorpusError::InvalidSpec(format!("category mixture sums to {sum}")));
        }
        if !(0.0..=1.0).contains(&self.nesting_fraction) || self.nesting_fraction > self.category_mixture[0] {
            return Err(CorpusError::InvalidSpec("nesting fraction must lie in [0, P(Delimiter)]".into()));
        }
        if self.edit_counts.iter().sum::<f64>() <= 0.0 || self.op_weights.iter().sum::<f64>() <= 0.0 {
            return Err(CorpusError::InvalidSpec("weights must have a positive sum".into()));
        }
        if self.max_attempts == 0 {
            return Err(CorpusError::InvalidSpec("max_attempts must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("could not corrupt {file_id} into a non-compiling program")]
    CannotCorrupt { file_id: String },
    #[error("insufficient corpus: {0}")]
    InsufficientCorpus(String),
    #[error("invalid corruption spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("bad JSONL record at line {line}: {source}")]
    Json { line: usize, source: serde_json::Error },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldLabel {
    pub loc: usize,
    pub cmd: String,
}

impl GoldLabel {
    pub fn command(&self) -> Option<EditCommand> {
        EditCommand::parse(&self.cmd)
    }

    pub fn action(&self) -> Option<EditAction> {
        Some(EditAction { location: self.loc, command: self.command()? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldEdit {
    pub line: u32,
    pub loc: usize,
    pub cmd: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMeta {
    pub id: String,
    pub file_id: String,
    pub length_bucket: String,
    pub category: ErrorCategory,
    /// The compiler flags the line holding the gold edit.
    pub localized: bool,
    pub requires_blockfix: bool,
    pub num_edits: usize,
    pub same_line: bool,
    pub flagged_line: u32,
}

/// One line-level training example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainingPair {
    pub bad_line: String,
    pub message: String,
    pub ctx_before: String,
    pub ctx_after: String,
    pub gold: Vec<GoldLabel>,
    pub meta: PairMeta,
}

impl TrainingPair {
    pub fn gold_actions(&self) -> Vec<EditAction> {
        self.gold.iter().filter_map(GoldLabel::action).collect()
    }
}

/// A whole-program pair with its line-level view.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedPair {
    #[serde(flatten)]
    pub pair: TrainingPair,
    pub bad_source: String,
    pub fixed_source: String,
    pub gold_edits: Vec<GoldEdit>,
}

#[derive(Debug, Clone)]
pub struct SourceFile {
    pub id: String,
    pub text: String,
}

const STRAY_DELIMITERS: &[&str] = &[";", ",", "(", ")", "[", "]", "."];
const STRAY_OPERATORS: &[&str] = &["=", "+", "-", "*", "/", "<", ">", "==", "!", "&&", "||", "++", ":", "?", "%", "+="];
const STRAY_KEYWORDS: &[&str] = &[
    "int", "double", "if", "else", "for", "while", "return", "new", "public", "static", "void", "class", "boolean",
    "final", "break", "char",
];
const STRAY_LITERALS: &[&str] = &["0", "1", "2", "x", "i", "n", "\"\""];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Delete,
    Insert,
    Change,
}

struct Line {
    no: u32,
    tokens: Vec<String>,
    cats: Vec<Category>,
}

fn eligible_lines(source: &str) -> Vec<Line> {
    let stream = jlex::tokenize(source);
    let mut lines: Vec<Line> = Vec::new();
    for t in stream.significant() {
        if lines.last().map(|l| l.no) != Some(t.line) {
            lines.push(Line { no: t.line, tokens: Vec::new(), cats: Vec::new() });
        }
        let l = lines.last_mut().unwrap();
        l.tokens.push(t.text.clone());
        l.cats.push(t.category);
    }
    lines.retain(|l| l.tokens.len() <= MAX_LOCATION);
    lines
}

fn is_brace(t: &str) -> bool {
    t == "{" || t == "}"
}

fn matches_category(cat: Category, text: &str, want: ErrorCategory) -> bool {
    if is_brace(text) || text == "@" || text == "::" {
        return false;
    }
    ErrorCategory::of_token(cat) == want && !(want == ErrorCategory::Other && cat == Category::Other)
}

fn pool(cat: ErrorCategory, idents: &[String], rng: &mut ChaCha8Rng) -> String {
    match cat {
        ErrorCategory::Delimiter => STRAY_DELIMITERS.choose(rng).unwrap().to_string(),
        ErrorCategory::Operator => STRAY_OPERATORS.choose(rng).unwrap().to_string(),
        ErrorCategory::Keyword => STRAY_KEYWORDS.choose(rng).unwrap().to_string(),
        ErrorCategory::Other => {
            if !idents.is_empty() && rng.gen_bool(0.6) {
                idents.choose(rng).unwrap().clone()
            } else {
                STRAY_LITERALS.choose(rng).unwrap().to_string()
            }
        }
    }
}

fn weighted(weights: &[f64], rng: &mut ChaCha8Rng) -> usize {
    let total: f64 = weights.iter().sum();
    let mut x = rng.gen::<f64>() * total;
    for (i, w) in weights.iter().enumerate() {
        if x < *w {
            return i;
        }
        x -= w;
    }
    weights.iter().rposition(|w| *w > 0.0).unwrap_or(0)
}

/// A corruption of one line and the gold edit that undoes it.
struct Corruption {
    line: u32,
    apply: EditAction,
    gold: EditAction,
}

fn plan_corruption(
    lines: &[Line],
    cat: ErrorCategory,
    nesting: bool,
    op_weights: &[f64; 3],
    idents: &[String],
    exclude: &HashSet<u32>,
    rng: &mut ChaCha8Rng,
) -> Option<Corruption> {
    let candidates: Vec<(usize, usize)> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| !exclude.contains(&l.no))
        .flat_map(|(li, l)| {
            (0..l.tokens.len())
                .filter(move |&k| {
                    if nesting {
                        is_brace(&l.tokens[k])
                    } else {
                        matches_category(l.cats[k], &l.tokens[k], cat)
                    }
                })
                .map(move |k| (li, k))
        })
        .collect();
    let op = if nesting {
        [Op::Delete, Op::Delete, Op::Delete, Op::Insert][rng.gen_range(0..4)]
    } else {
        [Op::Delete, Op::Insert, Op::Change][weighted(op_weights, rng)]
    };
    match op {
        Op::Delete | Op::Change => {
            let &(li, k) = candidates.choose(rng)?;
            let line = &lines[li];
            let loc = k + 1;
            let orig = line.tokens[k].clone();
            if op == Op::Delete {
                return Some(Corruption {
                    line: line.no,
                    apply: EditAction { location: loc, command: EditCommand::Delete },
                    gold: EditAction { location: loc - 1, command: EditCommand::insert(orig) },
                });
            }
            let replacement_cat = if rng.gen_bool(0.5) { cat } else { *ErrorCategory::ALL.choose(rng).unwrap() };
            let new = pool(replacement_cat, idents, rng);
            if new == orig {
                return None;
            }
            Some(Corruption {
                line: line.no,
                apply: EditAction { location: loc, command: EditCommand::change(new) },
                gold: EditAction { location: loc, command: EditCommand::change(orig) },
            })
        }
        Op::Insert => {
            let usable: Vec<&Line> = lines.iter().filter(|l| !exclude.contains(&l.no) && l.tokens.len() < MAX_LOCATION).collect();
            let line = *usable.choose(rng)?;
            let after = rng.gen_range(0..=line.tokens.len());
            let tok = if nesting { "}".to_string() } else { pool(cat, idents, rng) };
            Some(Corruption {
                line: line.no,
                apply: EditAction { location: after, command: EditCommand::insert(tok) },
                gold: EditAction { location: after + 1, command: EditCommand::Delete },
            })
        }
    }
}

/// Gold actions, in `bad` coordinates, turning `bad` into `fixed` (LCS diff).
fn token_diff(bad: &[String], fixed: &[String]) -> Vec<EditAction> {
    let (n, m) = (bad.len(), fixed.len());
    let mut dp = vec![vec![0u32; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            dp[i][j] = if bad[i] == fixed[j] { dp[i + 1][j + 1] + 1 } else { dp[i + 1][j].max(dp[i][j + 1]) };
        }
    }
    let (mut i, mut j) = (0, 0);
    let mut dels: Vec<usize> = Vec::new();
    let mut ins: Vec<(usize, String)> = Vec::new();
    let mut actions = Vec::new();
    let flush = |dels: &mut Vec<usize>, ins: &mut Vec<(usize, String)>, actions: &mut Vec<EditAction>| {
        // pair deletions with insertions at the same spot as changes
        let pairs = dels.len().min(ins.len());
        for k in 0..pairs {
            actions.push(EditAction { location: dels[k] + 1, command: EditCommand::change(ins[k].1.clone()) });
        }
        for &d in &dels[pairs..] {
            actions.push(EditAction { location: d + 1, command: EditCommand::Delete });
        }
        // same-location inserts are applied last-first
        for (at, t) in ins[pairs..].iter().rev() {
            let at = if pairs > 0 { dels[pairs - 1] + 1 } else { *at };
            actions.push(EditAction { location: at, command: EditCommand::insert(t.clone()) });
        }
        dels.clear();
        ins.clear();
    };
    while i < n || j < m {
        if i < n && j < m && bad[i] == fixed[j] {
            flush(&mut dels, &mut ins, &mut actions);
            i += 1;
            j += 1;
        } else if j < m && (i == n || dp[i][j + 1] >= dp[i + 1][j]) {
            ins.push((i, fixed[j].clone()));
            j += 1;
        } else {
            dels.push(i);
            i += 1;
        }
    }
    flush(&mut dels, &mut ins, &mut actions);
    actions
}

fn line_text(source: &str, line: u32) -> String {
    if line == 0 {
        return String::new();
    }
    source.split('\n').nth(line as usize - 1).unwrap_or("").trim_end_matches('\r').to_string()
}

fn line_tokens(source: &str, line: u32) -> Vec<String> {
    jlex::tokenize(source)
        .line_tokens(line)
        .map(|ts| ts.into_iter().map(|t| t.text).collect())
        .unwrap_or_default()
}

/// Build the line-level view of a bad program from the compiler's verdict.
pub fn training_view(
    id: &str,
    file_id: &str,
    bad_source: &str,
    gold_edits: &[GoldEdit],
    category: ErrorCategory,
    requires_blockfix: bool,
    same_line: bool,
    compiler: &dyn Compiler,
) -> Result<TrainingPair, CorpusError> {
    let result = compiler.compile(bad_source)?;
    let target = diagnostics::select_target(&result.diagnostics);
    let flagged = target.map(|d| d.line).unwrap_or(0);
    let message = target.map(|d| d.headline().to_string()).unwrap_or_default();
    let gold: Vec<GoldLabel> = gold_edits
        .iter()
        .filter(|g| g.line == flagged)
        .map(|g| GoldLabel { loc: g.loc, cmd: g.cmd.clone() })
        .collect();
    let localized = !requires_blockfix && !gold.is_empty();
    let tokens = jlex::tokenize(bad_source).significant_count();
    Ok(TrainingPair {
        bad_line: line_text(bad_source, flagged),
        message,
        ctx_before: line_text(bad_source, flagged.saturating_sub(1)),
        ctx_after: if flagged == 0 { String::new() } else { line_text(bad_source, flagged + 1) },
        gold,
        meta: PairMeta {
            id: id.to_string(),
            file_id: file_id.to_string(),
            length_bucket: length_bucket(tokens).to_string(),
            category,
            localized,
            requires_blockfix,
            num_edits: gold_edits.len(),
            same_line,
            flagged_line: flagged,
        },
    })
}

/// Corrupt a compilable `source` into a non-compiling pair.
pub fn corrupt(
    id: &str,
    file: &SourceFile,
    spec: &CorruptionSpec,
    rng: &mut ChaCha8Rng,
    compiler: &dyn Compiler,
) -> Result<GeneratedPair, CorpusError> {
    let lines = eligible_lines(&file.text);
    let idents: Vec<String> = {
        let mut v: Vec<String> = jlex::tokenize(&file.text)
            .significant()
            .filter(|t| t.category == Category::Identifier)
            .map(|t| t.text.clone())
            .collect();
        v.sort();
        v.dedup();
        v
    };
    let nesting_given_delim = if spec.category_mixture[0] > 0.0 {
        spec.nesting_fraction / spec.category_mixture[0]
    } else {
        0.0
    };
    let category = ErrorCategory::ALL[weighted(&spec.category_mixture, rng)];
    let nesting = category == ErrorCategory::Delimiter && rng.gen_bool(nesting_given_delim.clamp(0.0, 1.0));
    let wanted_edits = if nesting { 1 } else { 1 + weighted(&spec.edit_counts, rng) };
    let same_line = wanted_edits > 1 && rng.gen_bool(spec.same_line_fraction.clamp(0.0, 1.0));
    let fixed_tokens = jlex::significant_texts(&file.text);

    'attempt: for _ in 0..spec.max_attempts {
        let mut bad = file.text.clone();
        let mut gold_edits: Vec<GoldEdit> = Vec::new();
        let mut used: HashSet<u32> = HashSet::new();
        let mut first_cat = None;
        if same_line {
            let Some(first) = plan_corruption(&lines, category, false, &spec.op_weights, &idents, &used, rng) else {
                continue;
            };
            let line_no = first.line;
            let orig_line = line_tokens(&file.text, line_no);
            let mut cur = orig_line.clone();
            let mut applied = vec![first.apply];
            cur = editdsl::apply_plan(&cur, &applied).ok().unwrap_or(cur);
            for _ in 1..wanted_edits {
                let single = [Line { no: line_no, cats: cur.iter().map(|t| jlex::category_of(t)).collect(), tokens: cur.clone() }];
                let cat = ErrorCategory::ALL[weighted(&spec.category_mixture, rng)];
                let Some(c) = plan_corruption(&single, cat, false, &spec.op_weights, &idents, &used, rng) else {
                    continue 'attempt;
                };
                let Ok(next) = editdsl::apply_plan(&cur, &[c.apply.clone()]) else { continue 'attempt };
                cur = next;
                applied.push(c.apply);
            }
            let gold = token_diff(&cur, &orig_line);
            if gold.is_empty() || editdsl::apply_plan(&cur, &gold).ok().as_ref() != Some(&orig_line) {
                continue;
            }
            // rebuild the bad line as text from its tokens
            let Ok(b) = replace_line_tokens(&file.text, line_no, &orig_line, &cur) else { continue };
            bad = b;
            first_cat = Some(categorize(&gold[0].command, &cur, gold[0].location));
            for g in gold {
                gold_edits.push(GoldEdit { line: line_no, loc: g.location, cmd: g.command.to_string() });
            }
        } else {
            for _ in 0..wanted_edits {
                let cat = if first_cat.is_none() { category } else { ErrorCategory::ALL[weighted(&spec.category_mixture, rng)] };
                let Some(c) = plan_corruption(&lines, cat, nesting, &spec.op_weights, &idents, &used, rng) else {
                    continue 'attempt;
                };
                let Ok(next) = editdsl::apply_plan_to_source(&bad, c.line, &[c.apply.clone()]) else {
                    continue 'attempt;
                };
                bad = next;
                used.insert(c.line);
                let bad_line = line_tokens(&bad, c.line);
                first_cat.get_or_insert(categorize(&c.gold.command, &bad_line, c.gold.location));
                gold_edits.push(GoldEdit { line: c.line, loc: c.gold.location, cmd: c.gold.command.to_string() });
            }
        }

        // the gold edits must restore the original token sequence exactly
        let actions = |g: &[&GoldEdit]| -> Vec<EditAction> {
            g.iter()
                .map(|g| EditAction { location: g.loc, command: EditCommand::parse(&g.cmd).expect("gold command") })
                .collect()
        };
        let mut restored = bad.clone();
        if same_line {
            let all: Vec<&GoldEdit> = gold_edits.iter().collect();
            match editdsl::apply_plan_to_source(&bad, gold_edits[0].line, &actions(&all)) {
                Ok(r) => restored = r,
                Err(_) => continue,
            }
        } else {
            for g in &gold_edits {
                match editdsl::apply_plan_to_source(&restored, g.line, &actions(&[g])) {
                    Ok(r) => restored = r,
                    Err(_) => continue 'attempt,
                }
            }
        }
        if jlex::significant_texts(&restored) != fixed_tokens {
            continue;
        }
        if compiler.compile(&bad)?.success {
            continue;
        }
        let pair = training_view(
            id,
            &file.id,
            &bad,
            &gold_edits,
            first_cat.unwrap_or(category),
            nesting,
            same_line,
            compiler,
        )?;
        return Ok(GeneratedPair { pair, bad_source: bad, fixed_source: file.text.clone(), gold_edits });
    }
    Err(CorpusError::CannotCorrupt { file_id: file.id.clone() })
}

/// Replace the tokens of one line, keeping its indentation.
fn replace_line_tokens(source: &str, line: u32, old: &[String], new: &[String]) -> Result<String, CorpusError> {
    let _ = old;
    let mut out = String::new();
    for (i, l) in source.split_inclusive('\n').enumerate() {
        if i as u32 + 1 == line {
            let indent: String = l.chars().take_while(|c| *c == ' ' || *c == '\t').collect();
            let body = l.trim_end_matches(['\n', '\r']);
            // keep a trailing comment, if any, after the rebuilt tokens
            let comment = body.find("//").map(|k| &body[k..]).unwrap_or("");
            out.push_str(&indent);
            out.push_str(&new.join(" "));
            if !comment.is_empty() {
                out.push(' ');
                out.push_str(comment);
            }
            out.push_str(&l[body.len()..]);
        } else {
            out.push_str(l);
        }
    }
    if jlex::tokenize(&out).line_tokens(line).map(|t| t.len()).unwrap_or(0) != new.len() {
        return Err(CorpusError::CannotCorrupt { file_id: String::new() });
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dataset {
    pub train: Vec<GeneratedPair>,
    pub val: Vec<GeneratedPair>,
    pub test: Vec<GeneratedPair>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.train.len() + self.val.len() + self.test.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn write_dir(&self, dir: &Path) -> Result<(), CorpusError> {
        std::fs::create_dir_all(dir)?;
        write_jsonl(&dir.join("train.jsonl"), &self.train)?;
        write_jsonl(&dir.join("val.jsonl"), &self.val)?;
        write_jsonl(&dir.join("test.jsonl"), &self.test)?;
        Ok(())
    }

    pub fn read_dir(dir: &Path) -> Result<Self, CorpusError> {
        Ok(Dataset {
            train: read_jsonl(&dir.join("train.jsonl"))?,
            val: read_jsonl(&dir.join("val.jsonl"))?,
            test: read_jsonl(&dir.join("test.jsonl"))?,
        })
    }
}

pub fn write_jsonl<T: Serialize>(path: &Path, items: &[T]) -> Result<(), CorpusError> {
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    for it in items {
        serde_json::to_writer(&mut w, it).map_err(|source| CorpusError::Json { line: 0, source })?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_jsonl<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>, CorpusError> {
    let r = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|source| CorpusError::Json { line: i + 1, source })?);
    }
    Ok(out)
}

/// All `.java` files under `dir`, sorted by relative path.
pub fn load_corpus_dir(dir: &Path) -> Result<Vec<SourceFile>, CorpusError> {
    let mut paths: Vec<PathBuf> = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d)? {
            let p = entry?.path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|e| e == "java") {
                paths.push(p);
            }
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let bytes = std::fs::read(&p)?;
            let id = p.strip_prefix(dir).unwrap_or(&p).to_string_lossy().replace('\\', "/");
            Ok(SourceFile { id, text: String::from_utf8_lossy(&bytes).into_owned() })
        })
        .collect()
}

fn pair_seed(seed: u64, i: usize) -> u64 {
    let mut z = seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 33)).wrapping_mul(0xff51_afd7_ed55_8ccd);
    z ^ (z >> 33)
}

/// `n` pairs, split 80/10/10 by file. Pair `i` lands in a split by `i % 10`
/// and draws its file round-robin within that split.
pub fn generate_dataset(
    files: &[SourceFile],
    spec: &CorruptionSpec,
    n: usize,
    compiler: &dyn Compiler,
) -> Result<Dataset, CorpusError> {
    generate_dataset_in(Execution::default(), files, spec, n, compiler)
}

pub fn generate_dataset_in(
    exec: Execution,
    files: &[SourceFile],
    spec: &CorruptionSpec,
    n: usize,
    compiler: &dyn Compiler,
) -> Result<Dataset, CorpusError> {
    spec.validate()?;
    let ok: Vec<bool> = par::map_slice_in(exec, files, |f| compiler.compile(&f.text).map(|r| r.success).unwrap_or(false));
    let mut usable: Vec<&SourceFile> = files.iter().zip(ok).filter(|(_, ok)| *ok).map(|(f, _)| f).collect();
    if usable.len() < 3 {
        return Err(CorpusError::InsufficientCorpus(format!(
            "{} compilable files; at least 3 are needed for a train/val/test split",
            usable.len()
        )));
    }
    usable.sort_by(|a, b| a.id.cmp(&b.id));
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    usable.shuffle(&mut rng);
    let n_files = usable.len();
    let n_val = (n_files / 10).max(1);
    let n_test = (n_files / 10).max(1);
    let n_train = n_files - n_val - n_test;
    let splits: [&[&SourceFile]; 3] =
        [&usable[..n_train], &usable[n_train..n_train + n_val], &usable[n_train + n_val..]];

    let pairs: Vec<Result<(usize, GeneratedPair), CorpusError>> = par::map_range_in(exec, n, |i| {
        let split = match i % 10 {
            0..=7 => 0,
            8 => 1,
            _ => 2,
        };
        let pool = splits[split];
        let round = if split == 0 { (i / 10) * 8 + i % 10 } else { i / 10 };
        let mut rng = ChaCha8Rng::seed_from_u64(pair_seed(spec.seed, i));
        for step in 0..pool.len().min(16) {
            let file = pool[(round + step * 7919) % pool.len()];
            let id = format!("p{i:06}");
            match corrupt(&id, file, spec, &mut rng, compiler) {
                Ok(p) => return Ok((split, p)),
                Err(CorpusError::CannotCorrupt { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(CorpusError::InsufficientCorpus(format!("no corruptible file for pair {i}")))
    });
    let mut ds = Dataset::default();
    for r in pairs {
        let (split, p) = r?;
        match split {
            0 => ds.train.push(p),
            1 => ds.val.push(p),
            _ => ds.test.push(p),
        }
    }
    Ok(ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostics::BuiltinCompiler;

    const PROGRAM: &str = "import java.util.Scanner;\n\npublic class Calc {\n    public static void main(String[] args) {\n        Scanner sc = new Scanner(System.in);\n        int a = sc.nextInt();\n        int b = sc.nextInt();\n        int res = a * b;\n        if (res > 10) {\n            System.out.println(\"big \" + res);\n        } else {\n            System.out.println(res - 1);\n        }\n    }\n}\n";

    fn file() -> SourceFile {
        SourceFile { id: "Calc.java".into(), text: PROGRAM.into() }
    }

    #[test]
    fn buckets() {
        assert_eq!(length_bucket(250), "201-300");
        assert_eq!(length_bucket(1), "1-100");
        assert_eq!(length_bucket(100), "1-100");
        assert_eq!(length_bucket(101), "101-200");
        assert_eq!(length_bucket(1000), "901-1000");
        assert_eq!(length_bucket(1001), ">1000");
    }

    #[test]
    fn categories() {
        let line: Vec<String> = ["if", "(", "x", ")"].map(String::from).to_vec();
        assert_eq!(categorize(&EditCommand::insert(";"), &line, 1), ErrorCategory::Delimiter);
        assert_eq!(categorize(&EditCommand::Delete, &line, 1), ErrorCategory::Keyword);
        assert_eq!(categorize(&EditCommand::change("total"), &line, 3), ErrorCategory::Other);
        assert_eq!(categorize(&EditCommand::change("*"), &line, 3), ErrorCategory::Operator);
    }

    #[test]
    fn corruptions_round_trip() {
        let c = BuiltinCompiler::default();
        let spec = CorruptionSpec { same_line_fraction: 0.3, ..CorruptionSpec::default() };
        let mut blockfix = 0;
        for s in 0..200u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let Ok(p) = corrupt("x", &file(), &spec, &mut rng, &c) else { continue };
            assert!(!c.compile(&p.bad_source).unwrap().success);
            assert_eq!(p.fixed_source, PROGRAM);
            blockfix += p.pair.meta.requires_blockfix as usize;
            if p.pair.meta.localized && !p.pair.meta.same_line {
                let toks = line_tokens(&p.bad_source, p.pair.meta.flagged_line);
                let fixed = editdsl::apply_plan(&toks, &p.pair.gold_actions()).unwrap();
                let fixed_line = line_tokens(PROGRAM, p.pair.meta.flagged_line);
                if p.gold_edits.len() == 1 {
                    assert_eq!(fixed, fixed_line);
                }
            }
        }
        assert!(blockfix > 0);
    }

    #[test]
    fn diff_recovers_multi_edits() {
        let t = |s: &str| jlex::significant_texts(s);
        for (bad, fixed) in [
            ("int x = a x b", "int x = a * b ;"),
            ("f ( ( a , b )", "f ( a , b ) ;"),
            ("", "x ;"),
            ("a b c", ""),
        ] {
            let acts = token_diff(&t(bad), &t(fixed));
            assert_eq!(editdsl::apply_plan(&t(bad), &acts).unwrap(), t(fixed), "{bad} -> {fixed}");
        }
    }

    #[test]
    fn dataset_is_deterministic_and_split_by_file() {
        let c = BuiltinCompiler::default();
        let files: Vec<SourceFile> = (0..10)
            .map(|k| SourceFile { id: format!("F{k}.java"), text: PROGRAM.replace("Calc", &format!("Calc{k}")) })
            .collect();
        let spec = CorruptionSpec { seed: 7, ..CorruptionSpec::default() };
        let a = generate_dataset(&files, &spec, 60, &c).unwrap();
        let b = generate_dataset(&files, &spec, 60, &c).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 60);
        let ids = |v: &[GeneratedPair]| v.iter().map(|p| p.pair.meta.file_id.clone()).collect::<HashSet<_>>();
        assert!(ids(&a.train).is_disjoint(&ids(&a.test)));
        assert!(ids(&a.train).is_disjoint(&ids(&a.val)));
        assert!(ids(&a.val).is_disjoint(&ids(&a.test)));
    }
}
