//! The token-level fix language and its application to lines and sources.
//!
//! A location is a 1-based index into the significant tokens of one line; 0
//! means "before the first token" and is only meaningful for inserts, which
//! place their payload after the addressed token.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::jlex::{self, Token};

/// Location classes: 0 (begin of line) and 1..=100.
pub const NUM_LOCATIONS: usize = 101;
pub const MAX_LOCATION: usize = NUM_LOCATIONS - 1;
pub const DEFAULT_FIX_CAP: usize = 154;
pub const DEFAULT_PLAN_CAP: usize = 32;

const MAGIC: &str = "SYNFIX-FIX 1";
const UNK_TEXT: &str = "<UNK>";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Payload {
    Token(String),
    Unk,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum EditCommand {
    Delete,
    Insert(Payload),
    Change(Payload),
}

impl EditCommand {
    pub fn insert(tok: impl Into<String>) -> Self {
        EditCommand::Insert(Payload::Token(tok.into()))
    }

    pub fn change(tok: impl Into<String>) -> Self {
        EditCommand::Change(Payload::Token(tok.into()))
    }

    pub fn payload(&self) -> Option<&Payload> {
        match self {
            EditCommand::Delete => None,
            EditCommand::Insert(p) | EditCommand::Change(p) => Some(p),
        }
    }

    pub fn is_unk(&self) -> bool {
        self.payload() == Some(&Payload::Unk)
    }

    /// The same command with its payload replaced by UNK.
    pub fn to_unk(&self) -> Self {
        match self {
            EditCommand::Delete => EditCommand::Delete,
            EditCommand::Insert(_) => EditCommand::Insert(Payload::Unk),
            EditCommand::Change(_) => EditCommand::Change(Payload::Unk),
        }
    }

    /// Fill an UNK payload with a concrete token.
    pub fn with_token(&self, tok: &str) -> Self {
        match self {
            EditCommand::Delete => EditCommand::Delete,
            EditCommand::Insert(_) => EditCommand::insert(tok),
            EditCommand::Change(_) => EditCommand::change(tok),
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        if text == "DEL" {
            return Some(EditCommand::Delete);
        }
        let (kind, rest) = text.split_once(' ')?;
        if rest.is_empty() {
            return None;
        }
        let payload = if rest == UNK_TEXT { Payload::Unk } else { Payload::Token(rest.to_string()) };
        match kind {
            "INS" => Some(EditCommand::Insert(payload)),
            "CHG" => Some(EditCommand::Change(payload)),
            _ => None,
        }
    }
}

impl fmt::Display for EditCommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let payload = |p: &Payload| match p {
            Payload::Token(t) => t.clone(),
            Payload::Unk => UNK_TEXT.to_string(),
        };
        match self {
            EditCommand::Delete => write!(f, "DEL"),
            EditCommand::Insert(p) => write!(f, "INS {}", payload(p)),
            EditCommand::Change(p) => write!(f, "CHG {}", payload(p)),
        }
    }
}

#[derive(Debug, Error)]
pub enum EditError {
    #[error("location {location} is out of range for a line of {len} tokens")]
    LocationOutOfRange { location: usize, len: usize },
    #[error("edit payload is still <UNK>")]
    UnresolvedUnk,
    #[error("no ground-truth edits to derive a fix vocabulary from")]
    EmptyDataset,
    #[error("malformed fix vocabulary at line {line}: {reason}")]
    Format { line: usize, reason: String },
    #[error("line {0} does not exist in the source")]
    NoSuchLine(u32),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The capped, ordered list of commands the classifier can emit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixVocab {
    commands: Vec<EditCommand>,
    index: HashMap<EditCommand, usize>,
}

impl FixVocab {
    fn from_commands(commands: Vec<EditCommand>) -> Self {
        let index = commands.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        FixVocab { commands, index }
    }

    fn floor() -> Vec<EditCommand> {
        vec![EditCommand::Delete, EditCommand::Insert(Payload::Unk), EditCommand::Change(Payload::Unk)]
    }

    /// Delete, the two UNK commands, then the `cap - 3` most frequent
    /// concrete commands (ties broken by token text).
    pub fn derive<'a>(edits: impl IntoIterator<Item = &'a EditCommand>, cap: usize) -> Result<Self, EditError> {
        let mut counts: HashMap<&EditCommand, usize> = HashMap::new();
        let mut any = false;
        for e in edits {
            any = true;
            if !e.is_unk() && *e != EditCommand::Delete {
                *counts.entry(e).or_default() += 1;
            }
        }
        if !any {
            return Err(EditError::EmptyDataset);
        }
        let mut ranked: Vec<(&EditCommand, usize)> = counts.into_iter().collect();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| (a.0.payload(), a.0).cmp(&(b.0.payload(), b.0))));
        let mut commands = Self::floor();
        commands.extend(ranked.into_iter().take(cap.saturating_sub(3)).map(|(c, _)| c.clone()));
        Ok(Self::from_commands(commands))
    }

    pub fn len(&self) -> usize {
        self.commands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.commands.is_empty()
    }

    pub fn commands(&self) -> &[EditCommand] {
        &self.commands
    }

    pub fn get(&self, i: usize) -> Option<&EditCommand> {
        self.commands.get(i)
    }

    pub fn index_of(&self, cmd: &EditCommand) -> Option<usize> {
        self.index.get(cmd).copied()
    }

    /// Map a ground-truth command into the vocabulary, escaping unknown
    /// payloads to the matching UNK command.
    pub fn relabel(&self, cmd: &EditCommand) -> EditCommand {
        if self.index.contains_key(cmd) {
            cmd.clone()
        } else {
            cmd.to_unk()
        }
    }

    pub fn label_of(&self, cmd: &EditCommand) -> usize {
        self.index[&self.relabel(cmd)]
    }

    pub fn write_to(&self, mut w: impl Write) -> Result<(), EditError> {
        writeln!(w, "{MAGIC}")?;
        for c in &self.commands {
            writeln!(w, "{c}")?;
        }
        Ok(())
    }

    pub fn read_from(r: impl BufRead) -> Result<Self, EditError> {
        let mut commands = Vec::new();
        let mut seen = HashSet::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            let bad = |reason: &str| EditError::Format { line: i + 1, reason: reason.into() };
            if i == 0 {
                if line.trim_end() != MAGIC {
                    return Err(bad("missing `SYNFIX-FIX 1` header"));
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let cmd = EditCommand::parse(&line).ok_or_else(|| bad("unrecognised command"))?;
            if !seen.insert(cmd.clone()) {
                return Err(bad("duplicate command"));
            }
            commands.push(cmd);
        }
        for required in Self::floor() {
            if !seen.contains(&required) {
                return Err(EditError::Format { line: 0, reason: format!("missing `{required}`") });
            }
        }
        Ok(Self::from_commands(commands))
    }

    pub fn save(&self, path: &Path) -> Result<(), EditError> {
        let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut w)?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, EditError> {
        Self::read_from(std::io::BufReader::new(std::fs::File::open(path)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EditAction {
    pub location: usize,
    pub command: EditCommand,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EditPlan {
    pub line: u32,
    pub actions: Vec<EditAction>,
    pub joint_prob: f64,
}

/// Apply one command to the token texts of a line.
pub fn apply_edit(tokens: &[String], location: usize, cmd: &EditCommand) -> Result<Vec<String>, EditError> {
    let len = tokens.len();
    let out_of_range = || EditError::LocationOutOfRange { location, len };
    let mut out = tokens.to_vec();
    match cmd {
        EditCommand::Delete => {
            if location == 0 || location > len {
                return Err(out_of_range());
            }
            out.remove(location - 1);
        }
        EditCommand::Change(p) => {
            if location == 0 || location > len {
                return Err(out_of_range());
            }
            let Payload::Token(t) = p else { return Err(EditError::UnresolvedUnk) };
            out[location - 1] = t.clone();
        }
        EditCommand::Insert(p) => {
            if location > len {
                return Err(out_of_range());
            }
            let Payload::Token(t) = p else { return Err(EditError::UnresolvedUnk) };
            out.insert(location, t.clone());
        }
    }
    Ok(out)
}

/// Application order: descending location; at one location inserts go
/// before changes and deletes, so every original location stays valid.
pub fn ordered_actions(actions: &[EditAction]) -> Vec<&EditAction> {
    let mut v: Vec<&EditAction> = actions.iter().collect();
    v.sort_by(|a, b| {
        b.location.cmp(&a.location).then_with(|| {
            let rank = |c: &EditCommand| if matches!(c, EditCommand::Insert(_)) { 0 } else { 1 };
            rank(&a.command).cmp(&rank(&b.command))
        })
    });
    v
}

pub fn apply_plan(tokens: &[String], actions: &[EditAction]) -> Result<Vec<String>, EditError> {
    let mut out = tokens.to_vec();
    for a in ordered_actions(actions) {
        out = apply_edit(&out, a.location, &a.command)?;
    }
    Ok(out)
}

/// Apply actions to line `line` of `source`, editing bytes so that untouched
/// text keeps its layout. The significant tokens of the result equal
/// [`apply_plan`] on the line's tokens.
pub fn apply_plan_to_source(source: &str, line: u32, actions: &[EditAction]) -> Result<String, EditError> {
    let stream = jlex::tokenize(source);
    if line == 0 || line > stream.line_count {
        return Err(EditError::NoSuchLine(line));
    }
    let offsets = stream.offsets();
    let toks: Vec<(usize, &Token)> = stream
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.line == line && !t.is_trivia())
        .map(|(i, t)| (offsets[i], t))
        .collect();
    let line_start = source
        .split_inclusive('\n')
        .take(line as usize - 1)
        .map(str::len)
        .sum::<usize>();
    // Validate against the token-level semantics first.
    let texts: Vec<String> = toks.iter().map(|(_, t)| t.text.clone()).collect();
    apply_plan(&texts, actions)?;

    let mut out = source.to_string();
    for a in ordered_actions(actions) {
        let l = a.location;
        match &a.command {
            EditCommand::Delete => {
                let (at, t) = toks[l - 1];
                let end = at + t.text.len();
                let before = out[..at].chars().next_back();
                let after = out[end..].chars().next();
                let glue = matches!((before, after), (Some(b), Some(c)) if !b.is_whitespace() && !c.is_whitespace());
                out.replace_range(at..end, if glue { " " } else { "" });
            }
            EditCommand::Change(Payload::Token(new)) => {
                let (at, t) = toks[l - 1];
                let end = at + t.text.len();
                let text = spaced(&out, at, end, new);
                out.replace_range(at..end, &text);
            }
            EditCommand::Insert(Payload::Token(new)) => {
                let at = if l == 0 {
                    toks.first().map(|(o, _)| *o).unwrap_or_else(|| line_start + indent_len(&source[line_start..]))
                } else {
                    toks[l - 1].0 + toks[l - 1].1.text.len()
                };
                let text = spaced(&out, at, at, new);
                out.replace_range(at..at, &text);
            }
            _ => return Err(EditError::UnresolvedUnk),
        }
    }
    Ok(out)
}

fn indent_len(line: &str) -> usize {
    line.len() - line.trim_start_matches([' ', '\t']).len()
}

/// `new` padded with a space on each side that touches a non-space char.
fn spaced(text: &str, start: usize, end: usize, new: &str) -> String {
    let mut s = String::new();
    if text[..start].chars().next_back().is_some_and(|c| !c.is_whitespace()) {
        s.push(' ');
    }
    s.push_str(new);
    if text[end..].chars().next().is_some_and(|c| !c.is_whitespace()) {
        s.push(' ');
    }
    s
}

fn argmax(p: &[f32]) -> usize {
    let mut best = 0;
    for (i, &v) in p.iter().enumerate() {
        if v > p[best] {
            best = i;
        }
    }
    best
}

fn above_half(p: &[f32]) -> Vec<usize> {
    let set: Vec<usize> = p.iter().enumerate().filter(|(_, &v)| v > 0.5).map(|(i, _)| i).collect();
    if set.is_empty() && !p.is_empty() {
        vec![argmax(p)]
    } else {
        set
    }
}

/// Threshold both heads at 0.5, falling back to the argmax.
pub fn resolve_labels(loc_probs: &[f32], fix_probs: &[f32]) -> (Vec<usize>, Vec<usize>) {
    (above_half(loc_probs), above_half(fix_probs))
}

#[derive(Debug, Clone, PartialEq)]
struct Candidate {
    joint: f64,
    /// Rank (into commands sorted by probability) chosen per location.
    ranks: Vec<usize>,
    /// Command index chosen per location; the tie-break key.
    key: Vec<usize>,
}

impl Eq for Candidate {}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.joint.total_cmp(&other.joint).then_with(|| other.key.cmp(&self.key))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn joint(locations: &[usize], choice: &[usize], loc_probs: &[f32], fix_probs: &[f32]) -> f64 {
    let mut j = 1.0f64;
    for (l, c) in locations.iter().zip(choice) {
        j *= loc_probs.get(*l).copied().unwrap_or(1.0) as f64;
        j *= fix_probs.get(*c).copied().unwrap_or(1.0) as f64;
    }
    j
}

/// Edit plans for the resolved label sets, most probable first.
///
/// One command: a single plan applying it at every location. Several: every
/// assignment of one command per location, ranked by joint probability with
/// ties broken by the command indices in location order, truncated at `cap`.
pub fn plan_combinations(
    line: u32,
    locations: &[usize],
    commands: &[usize],
    loc_probs: &[f32],
    fix_probs: &[f32],
    vocab: &FixVocab,
    cap: usize,
) -> Vec<EditPlan> {
    let mut locs = locations.to_vec();
    locs.sort_unstable();
    locs.dedup();
    let mut cmds = commands.to_vec();
    cmds.sort_unstable();
    cmds.dedup();
    if locs.is_empty() || cmds.is_empty() || cap == 0 {
        return Vec::new();
    }
    let make = |choice: &[usize]| EditPlan {
        line,
        actions: locs
            .iter()
            .zip(choice)
            .map(|(&location, &c)| EditAction { location, command: vocab.get(c).cloned().unwrap_or(EditCommand::Delete) })
            .collect(),
        joint_prob: joint(&locs, choice, loc_probs, fix_probs),
    };
    if cmds.len() == 1 {
        return vec![make(&vec![cmds[0]; locs.len()])];
    }
    // commands ordered by probability, ties by index
    let p = |c: usize| fix_probs.get(c).copied().unwrap_or(0.0);
    let mut by_prob = cmds.clone();
    by_prob.sort_by(|&a, &b| p(b).total_cmp(&p(a)).then(a.cmp(&b)));

    let m = locs.len();
    let total = (by_prob.len() as f64).powi(m as i32);
    if total <= 4096.0 {
        let mut all: Vec<Candidate> = Vec::new();
        let mut ranks = vec![0usize; m];
        loop {
            let key: Vec<usize> = ranks.iter().map(|&r| by_prob[r]).collect();
            all.push(Candidate { joint: joint(&locs, &key, loc_probs, fix_probs), ranks: ranks.clone(), key });
            let mut i = m;
            loop {
                if i == 0 {
                    all.sort_by(|a, b| b.cmp(a));
                    return all.into_iter().take(cap).map(|c| make(&c.key)).collect();
                }
                i -= 1;
                ranks[i] += 1;
                if ranks[i] < by_prob.len() {
                    break;
                }
                ranks[i] = 0;
            }
        }
    }
    // Too many assignments to enumerate: best-first search over rank vectors.
    let mut heap = BinaryHeap::new();
    let mut seen = HashSet::new();
    let start = vec![0usize; m];
    let key0: Vec<usize> = start.iter().map(|&r| by_prob[r]).collect();
    heap.push(Candidate { joint: joint(&locs, &key0, loc_probs, fix_probs), ranks: start.clone(), key: key0 });
    seen.insert(start);
    let mut out = Vec::new();
    while let Some(c) = heap.pop() {
        out.push(make(&c.key));
        if out.len() == cap {
            break;
        }
        for i in 0..m {
            if c.ranks[i] + 1 < by_prob.len() {
                let mut r = c.ranks.clone();
                r[i] += 1;
                if seen.insert(r.clone()) {
                    let key: Vec<usize> = r.iter().map(|&x| by_prob[x]).collect();
                    heap.push(Candidate { joint: joint(&locs, &key, loc_probs, fix_probs), ranks: r, key });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        jlex::significant_texts(s)
    }

    #[test]
    fn insert_after_location() {
        let line = toks("public static void (String args[])");
        let out = apply_edit(&line, 3, &EditCommand::insert("main")).unwrap();
        assert_eq!(out, toks("public static void main (String args[])"));
    }

    #[test]
    fn delete_and_begin_of_line() {
        let line = toks("double bmr = 5;");
        assert_eq!(apply_edit(&line, 1, &EditCommand::Delete).unwrap(), toks("bmr = 5;"));
        assert_eq!(apply_edit(&toks("x"), 0, &EditCommand::insert("}")).unwrap(), toks("} x"));
    }

    #[test]
    fn errors() {
        let line = toks("a b");
        assert!(matches!(apply_edit(&line, 3, &EditCommand::Delete), Err(EditError::LocationOutOfRange { .. })));
        assert!(matches!(apply_edit(&line, 0, &EditCommand::change("x")), Err(EditError::LocationOutOfRange { .. })));
        assert!(matches!(apply_edit(&line, 1, &EditCommand::Insert(Payload::Unk)), Err(EditError::UnresolvedUnk)));
    }

    #[test]
    fn source_edits_keep_layout() {
        let src = "class A {\n\tint res = a x b;\n}\n";
        let plan = [EditAction { location: 5, command: EditCommand::change("*") }];
        assert_eq!(apply_plan_to_source(src, 2, &plan).unwrap(), "class A {\n\tint res = a * b;\n}\n");
        let src = "f(a)\n";
        let plan = [EditAction { location: 3, command: EditCommand::Delete }];
        let out = apply_plan_to_source(src, 1, &plan).unwrap();
        assert_eq!(jlex::significant_texts(&out), toks("f()"));
        let plan = [
            EditAction { location: 1, command: EditCommand::insert(";") },
            EditAction { location: 4, command: EditCommand::insert(";") },
        ];
        let out = apply_plan_to_source("a+b c\n", 1, &plan).unwrap();
        assert_eq!(jlex::significant_texts(&out), toks("a ; + b c ;"));
    }

    #[test]
    fn labels_fall_back_to_argmax() {
        let mut loc = vec![0.1f32; NUM_LOCATIONS];
        loc[7] = 0.41;
        let fix = [0.2f32, 0.8, 0.1];
        assert_eq!(resolve_labels(&loc, &fix), (vec![7], vec![1]));
        let flat = [0.3f32, 0.3, 0.3];
        assert_eq!(resolve_labels(&flat, &flat).0, vec![0]);
    }

    #[test]
    fn vocab_derivation() {
        let edits = vec![
            EditCommand::insert(";"),
            EditCommand::insert(";"),
            EditCommand::change("myVar"),
            EditCommand::Delete,
            EditCommand::insert(")"),
        ];
        let v = FixVocab::derive(&edits, 5).unwrap();
        assert_eq!(v.commands()[..3], FixVocab::floor()[..]);
        assert_eq!(v.get(3), Some(&EditCommand::insert(";")));
        assert_eq!(v.get(4), Some(&EditCommand::insert(")")));
        assert_eq!(v.relabel(&EditCommand::change("myVar")), EditCommand::Change(Payload::Unk));
        assert_eq!(FixVocab::derive(&edits, 3).unwrap().len(), 3);
        assert!(matches!(FixVocab::derive(&[], 10), Err(EditError::EmptyDataset)));
        let mut buf = Vec::new();
        v.write_to(&mut buf).unwrap();
        assert_eq!(FixVocab::read_from(buf.as_slice()).unwrap(), v);
    }

    #[test]
    fn single_command_applies_everywhere() {
        let v = FixVocab::derive(&[EditCommand::insert(")")], 10).unwrap();
        let mut loc = vec![0.0f32; NUM_LOCATIONS];
        loc[4] = 0.6;
        loc[9] = 0.6;
        let fix = [0.0, 0.0, 0.0, 0.7];
        let (ls, cs) = resolve_labels(&loc, &fix);
        let plans = plan_combinations(2, &ls, &cs, &loc, &fix, &v, DEFAULT_PLAN_CAP);
        assert_eq!(plans.len(), 1);
        assert_eq!(plans[0].actions.len(), 2);
        assert!((plans[0].joint_prob - 0.6 * 0.7 * 0.6 * 0.7).abs() < 1e-6);
    }
}
