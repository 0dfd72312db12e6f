//! Curly-brace nesting: checking, skeleton abstraction and repair.
//!
//! A program is abstracted to a skeleton over `{OPEN, CLOSE, STMT, HDR}`.
//! Repairs are searched on the skeleton (all minimum-cost plans of single-brace
//! insertions and deletions), ranked, and projected back onto the source text.

use std::fmt;

use thiserror::Error;

use crate::jlex::{Category, Token, TokenStream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    UnmatchedClose,
    UnclosedOpen,
    /// Reserved for mixed-bracket checks; never produced for curly braces.
    Mismatched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub line: u32,
    pub col: u32,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestingReport {
    pub balanced: bool,
    pub first_violation: Option<Violation>,
    /// Running `{` minus `}` count after each significant token.
    pub depth_profile: Vec<i64>,
}

pub fn check_nesting(stream: &TokenStream) -> NestingReport {
    let mut stack: Vec<&Token> = Vec::new();
    let mut depth = 0i64;
    let mut profile = Vec::new();
    let mut first = None;
    for t in stream.significant() {
        if t.category == Category::Delimiter {
            match t.text.as_str() {
                "{" => {
                    depth += 1;
                    stack.push(t);
                }
                "}" => {
                    depth -= 1;
                    if stack.pop().is_none() && first.is_none() {
                        first = Some(Violation { line: t.line, col: t.col, kind: ViolationKind::UnmatchedClose });
                    }
                }
                _ => {}
            }
        }
        profile.push(depth);
    }
    if first.is_none() {
        if let Some(open) = stack.last() {
            first = Some(Violation { line: open.line, col: open.col, kind: ViolationKind::UnclosedOpen });
        }
    }
    NestingReport { balanced: first.is_none(), first_violation: first, depth_profile: profile }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    Open,
    Close,
    Stmt,
    Hdr,
}

impl Sym {
    pub fn as_char(self) -> char {
        match self {
            Sym::Open => '{',
            Sym::Close => '}',
            Sym::Stmt => 's',
            Sym::Hdr => 'h',
        }
    }
}

/// Where a skeleton symbol came from in the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    /// Index range into the significant tokens, inclusive.
    pub first_tok: usize,
    pub last_tok: usize,
    pub start_byte: usize,
    pub end_byte: usize,
    pub line: u32,
    pub end_line: u32,
    /// Indentation width (tabs count 4) of `line`.
    pub indent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Skeleton {
    pub symbols: Vec<Sym>,
    /// Empty for synthetic skeletons; otherwise one entry per symbol.
    pub origin: Vec<Origin>,
}

impl Skeleton {
    pub fn from_symbols(symbols: Vec<Sym>) -> Self {
        Skeleton { symbols, origin: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        braces_balanced(&self.symbols)
    }
}

impl fmt::Display for Skeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

pub fn braces_balanced(symbols: &[Sym]) -> bool {
    let mut depth = 0i64;
    for s in symbols {
        match s {
            Sym::Open => depth += 1,
            Sym::Close => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

fn line_indents(source: &str) -> Vec<u32> {
    source
        .split('\n')
        .map(|l| {
            l.chars()
                .take_while(|c| *c == ' ' || *c == '\t')
                .map(|c| if c == '\t' { 4 } else { 1 })
                .sum()
        })
        .collect()
}

pub fn abstract_skeleton(stream: &TokenStream) -> Skeleton {
    let offsets = stream.offsets();
    let indents = line_indents(&stream.source);
    let sig: Vec<(usize, &Token)> =
        stream.tokens.iter().enumerate().filter(|(_, t)| !t.is_trivia()).collect();
    let mut sk = Skeleton::default();
    let push = |sk: &mut Skeleton, sym: Sym, a: usize, b: usize| {
        let (ia, ta) = sig[a];
        let (ib, tb) = sig[b];
        let end_line = tb.line + tb.text.matches('\n').count() as u32;
        sk.symbols.push(sym);
        sk.origin.push(Origin {
            first_tok: a,
            last_tok: b,
            start_byte: offsets[ia],
            end_byte: offsets[ib] + tb.text.len(),
            line: ta.line,
            end_line,
            indent: indents.get(ta.line as usize - 1).copied().unwrap_or(0),
        });
    };
    let mut run: Option<usize> = None;
    let mut parens = 0i64;
    for (k, (_, t)) in sig.iter().enumerate() {
        let delim = t.category == Category::Delimiter;
        match t.text.as_str() {
            "{" if delim => {
                if let Some(s) = run.take() {
                    push(&mut sk, Sym::Hdr, s, k - 1);
                }
                push(&mut sk, Sym::Open, k, k);
                parens = 0;
            }
            "}" if delim => {
                if let Some(s) = run.take() {
                    push(&mut sk, Sym::Stmt, s, k - 1);
                }
                push(&mut sk, Sym::Close, k, k);
                parens = 0;
            }
            _ => {
                let s = *run.get_or_insert(k);
                match t.text.as_str() {
                    "(" if delim => parens += 1,
                    ")" if delim => parens = (parens - 1).max(0),
                    ";" if delim && parens == 0 => {
                        push(&mut sk, Sym::Stmt, s, k);
                        run = None;
                    }
                    _ => {}
                }
            }
        }
    }
    if let Some(s) = run {
        push(&mut sk, Sym::Stmt, s, sig.len() - 1);
    }
    sk
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EditKind {
    InsertClose,
    InsertOpen,
    DeleteSymbol,
}

/// Insertions go into the gap before symbol `position` (`position == len`
/// appends); deletions remove symbol `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkeletonEdit {
    pub kind: EditKind,
    pub position: usize,
    pub cost: u32,
}

impl SkeletonEdit {
    fn new(kind: EditKind, position: usize) -> Self {
        SkeletonEdit { kind, position, cost: 1 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RepairPlan {
    pub edits: Vec<SkeletonEdit>,
    pub cost: u32,
    pub score: f64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NestingError {
    #[error("no balanced repair within {budget} edits (needs {needed})")]
    NoRepairWithinBudget { budget: u32, needed: u32 },
    #[error("skeleton does not match the source text")]
    StaleSkeleton,
}

/// Scores a plan; higher is better. Only consulted between equal-cost plans.
pub trait PlanScorer {
    fn score(&self, sk: &Skeleton, edits: &[SkeletonEdit]) -> f64;
}

/// Prefers closing braces placed where indentation drops back to the level of
/// the block's opening line, and appending at end of file.
#[derive(Debug, Clone, Copy, Default)]
pub struct LayoutScorer;

impl PlanScorer for LayoutScorer {
    fn score(&self, sk: &Skeleton, edits: &[SkeletonEdit]) -> f64 {
        let indent = |i: usize| sk.origin.get(i).map(|o| o.indent as f64).unwrap_or(0.0);
        let line = |i: usize| sk.origin.get(i).map(|o| o.line).unwrap_or(0);
        let n = sk.len();
        let mut score = 0.0;
        // stack of indents of currently open blocks
        let mut stack: Vec<f64> = Vec::new();
        let mut e = 0;
        for p in 0..=n {
            while e < edits.len() && edits[e].position == p && edits[e].kind != EditKind::DeleteSymbol {
                match edits[e].kind {
                    EditKind::InsertClose => {
                        let open = stack.pop().unwrap_or(0.0);
                        if p == n {
                            score += 0.25 - open / 4.0;
                        } else {
                            // the next line should not be deeper than the block
                            score -= (indent(p) - open).max(0.0) / 4.0;
                            if p > 0 && line(p - 1) == line(p) && !sk.origin.is_empty() {
                                score -= 0.5;
                            }
                        }
                        // and the line before should belong to the block
                        if p > 0 && sk.symbols[p - 1] != Sym::Open && indent(p - 1) <= open && !sk.origin.is_empty() {
                            score -= 0.5;
                        }
                    }
                    EditKind::InsertOpen => {
                        score -= 1.0;
                        stack.push(if p > 0 { indent(p - 1) } else { 0.0 });
                    }
                    EditKind::DeleteSymbol => unreachable!(),
                }
                e += 1;
            }
            if p == n {
                break;
            }
            let deleted = e < edits.len() && edits[e].position == p;
            if deleted {
                score -= 0.5;
                e += 1;
                continue;
            }
            match sk.symbols[p] {
                Sym::Open => stack.push(if p > 0 { indent(p - 1) } else { indent(p) }),
                Sym::Close => {
                    let open = stack.pop().unwrap_or(0.0);
                    score -= (indent(p) - open).abs() / 4.0;
                }
                _ => {}
            }
        }
        score
    }
}

/// Apply a plan to the symbol list.
pub fn apply_edits(symbols: &[Sym], edits: &[SkeletonEdit]) -> Vec<Sym> {
    let mut out = Vec::with_capacity(symbols.len() + edits.len());
    let mut e = 0;
    for p in 0..=symbols.len() {
        let mut deleted = false;
        while e < edits.len() && edits[e].position == p {
            match edits[e].kind {
                EditKind::InsertClose => out.push(Sym::Close),
                EditKind::InsertOpen => out.push(Sym::Open),
                EditKind::DeleteSymbol => deleted = true,
            }
            e += 1;
        }
        if p < symbols.len() && !deleted {
            out.push(symbols[p]);
        }
    }
    out
}

/// Minimum number of single-brace edits that balance `symbols`.
pub fn min_repair_cost(symbols: &[Sym]) -> u32 {
    let mut depth = 0u32;
    let mut unmatched_close = 0u32;
    for s in symbols {
        match s {
            Sym::Open => depth += 1,
            Sym::Close if depth > 0 => depth -= 1,
            Sym::Close => unmatched_close += 1,
            _ => {}
        }
    }
    unmatched_close + depth
}

/// Upper bound on the number of plans enumerated.
const MAX_PLANS: usize = 20_000;

struct Search<'a> {
    symbols: &'a [Sym],
    /// For each suffix start i: (net depth change, minimum prefix depth).
    suffix: Vec<(i64, i64)>,
    target: u32,
    cur: Vec<SkeletonEdit>,
    plans: Vec<Vec<SkeletonEdit>>,
}

impl Search<'_> {
    /// Exact remaining cost to balance the suffix from `i` entered at `depth`.
    fn lower_bound(&self, i: usize, depth: i64) -> i64 {
        let (net, min) = self.suffix[i];
        let unmatched = (-min - depth).max(0);
        unmatched + depth + net + unmatched
    }

    fn gap(&mut self, i: usize, depth: i64, used: u32) {
        if self.plans.len() >= MAX_PLANS {
            return;
        }
        let budget = (self.target - used) as i64;
        // closes first, then opens
        for c in 0..=depth.min(budget) {
            for o in 0..=(budget - c) {
                let d = depth - c + o;
                let u = used + (c + o) as u32;
                if u as i64 + self.lower_bound(i, d) > self.target as i64 {
                    continue;
                }
                let mark = self.cur.len();
                self.cur.extend((0..c).map(|_| SkeletonEdit::new(EditKind::InsertClose, i)));
                self.cur.extend((0..o).map(|_| SkeletonEdit::new(EditKind::InsertOpen, i)));
                self.symbol(i, d, u);
                self.cur.truncate(mark);
            }
        }
    }

    fn symbol(&mut self, i: usize, depth: i64, used: u32) {
        if i == self.symbols.len() {
            if depth == 0 && used == self.target {
                self.plans.push(self.cur.clone());
            }
            return;
        }
        let sym = self.symbols[i];
        let keep_depth = match sym {
            Sym::Open => Some(depth + 1),
            Sym::Close if depth > 0 => Some(depth - 1),
            Sym::Close => None,
            _ => Some(depth),
        };
        if let Some(d) = keep_depth {
            if used as i64 + self.lower_bound(i + 1, d) <= self.target as i64 {
                self.gap(i + 1, d, used);
            }
        }
        if matches!(sym, Sym::Open | Sym::Close)
            && used < self.target
            && (used + 1) as i64 + self.lower_bound(i + 1, depth) <= self.target as i64
        {
            self.cur.push(SkeletonEdit::new(EditKind::DeleteSymbol, i));
            self.gap(i + 1, depth, used + 1);
            self.cur.pop();
        }
    }
}

/// Enumerate every minimum-cost plan that balances `symbols`.
pub fn min_cost_plans(symbols: &[Sym]) -> Vec<Vec<SkeletonEdit>> {
    let n = symbols.len();
    let mut suffix = vec![(0i64, 0i64); n + 1];
    for i in (0..n).rev() {
        let step = match symbols[i] {
            Sym::Open => 1,
            Sym::Close => -1,
            _ => 0,
        };
        let (net, min) = suffix[i + 1];
        suffix[i] = (step + net, 0.min(step + min).min(step));
    }
    let mut s = Search { symbols, suffix, target: min_repair_cost(symbols), cur: Vec::new(), plans: Vec::new() };
    s.gap(0, 0, 0);
    s.plans
}

pub fn repair_skeleton(sk: &Skeleton, max_edits: u32) -> Result<Vec<RepairPlan>, NestingError> {
    repair_skeleton_with(sk, max_edits, &LayoutScorer)
}

/// Ranked minimum-cost repairs: by cost, then scorer (descending), then the
/// leftmost edit positions.
pub fn repair_skeleton_with(
    sk: &Skeleton,
    max_edits: u32,
    scorer: &dyn PlanScorer,
) -> Result<Vec<RepairPlan>, NestingError> {
    let needed = min_repair_cost(&sk.symbols);
    if needed > max_edits {
        return Err(NestingError::NoRepairWithinBudget { budget: max_edits, needed });
    }
    let mut plans: Vec<RepairPlan> = min_cost_plans(&sk.symbols)
        .into_iter()
        .map(|edits| {
            let score = scorer.score(sk, &edits);
            RepairPlan { cost: edits.iter().map(|e| e.cost).sum(), edits, score }
        })
        .collect();
    plans.sort_by(|a, b| {
        a.cost
            .cmp(&b.cost)
            .then(b.score.total_cmp(&a.score))
            .then_with(|| {
                let ka: Vec<(usize, EditKind)> = a.edits.iter().map(|e| (e.position, e.kind)).collect();
                let kb: Vec<(usize, EditKind)> = b.edits.iter().map(|e| (e.position, e.kind)).collect();
                ka.cmp(&kb)
            })
    });
    Ok(plans)
}

/// Apply skeleton edits to the source text the skeleton was built from.
pub fn project_repair(source: &str, sk: &Skeleton, edits: &[SkeletonEdit]) -> Result<String, NestingError> {
    if edits.is_empty() {
        return Ok(source.to_string());
    }
    if sk.origin.len() != sk.symbols.len() {
        return Err(NestingError::StaleSkeleton);
    }
    for (sym, o) in sk.symbols.iter().zip(&sk.origin) {
        let text = source.get(o.start_byte..o.end_byte).ok_or(NestingError::StaleSkeleton)?;
        let ok = match sym {
            Sym::Open => text == "{",
            Sym::Close => text == "}",
            _ => !text.is_empty(),
        };
        if !ok {
            return Err(NestingError::StaleSkeleton);
        }
    }
    let line_end = |byte: usize| source[byte..].find('\n').map(|k| byte + k).unwrap_or(source.len());
    // (byte offset, removal length, insertion)
    let mut mods: Vec<(usize, usize, String)> = Vec::new();
    let n = sk.len();
    let mut k = 0;
    while k < edits.len() {
        let p = edits[k].position;
        if edits[k].kind == EditKind::DeleteSymbol {
            let o = &sk.origin[p];
            mods.push((o.start_byte, o.end_byte - o.start_byte, String::new()));
            k += 1;
            continue;
        }
        let mut closes = 0;
        let mut opens = 0;
        while k < edits.len() && edits[k].position == p && edits[k].kind != EditKind::DeleteSymbol {
            match edits[k].kind {
                EditKind::InsertClose => closes += 1,
                _ => opens += 1,
            }
            k += 1;
        }
        if p == 0 {
            let text = "} ".repeat(closes) + &"{ ".repeat(opens);
            mods.push((0, 0, text));
            continue;
        }
        let prev = &sk.origin[p - 1];
        let own_line = p == n || sk.origin[p].line > prev.end_line;
        let mut text = String::new();
        if closes > 0 && own_line {
            let at = line_end(prev.end_byte);
            let indent = if p == n { 0 } else { sk.origin[p].indent as usize };
            for _ in 0..closes {
                text.push('\n');
                text.push_str(&" ".repeat(indent));
                text.push('}');
            }
            if opens > 0 {
                text.push_str(&" {".repeat(opens));
            }
            mods.push((at, 0, text));
        } else {
            text.push_str(&" }".repeat(closes));
            text.push_str(&" {".repeat(opens));
            mods.push((prev.end_byte, 0, text));
        }
    }
    mods.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    let mut out = source.to_string();
    for (at, len, text) in mods {
        out.replace_range(at..at + len, &text);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jlex::tokenize;
    use Sym::*;

    fn parse(s: &str) -> Vec<Sym> {
        s.chars()
            .map(|c| match c {
                '{' => Open,
                '}' => Close,
                'h' => Hdr,
                _ => Stmt,
            })
            .collect()
    }

    #[test]
    fn lone_close_is_unmatched() {
        let r = check_nesting(&tokenize("}"));
        assert!(!r.balanced);
        assert_eq!(r.first_violation, Some(Violation { line: 1, col: 1, kind: ViolationKind::UnmatchedClose }));
        assert_eq!(r.depth_profile, vec![-1]);
    }

    #[test]
    fn braces_in_strings_and_comments_are_ignored() {
        let r = check_nesting(&tokenize("class A { String s = \"{\"; // }\n char c = '}'; /* { */ }"));
        assert!(r.balanced);
    }

    #[test]
    fn unclosed_reports_innermost_open() {
        let r = check_nesting(&tokenize("a {\n  b {\n"));
        assert_eq!(r.first_violation.unwrap().line, 2);
    }

    #[test]
    fn skeleton_of_a_small_class() {
        let sk = abstract_skeleton(&tokenize("class A { int x; }"));
        assert_eq!(sk.symbols, vec![Hdr, Open, Stmt, Close]);
        assert!(abstract_skeleton(&tokenize("")).is_empty());
        let sk = abstract_skeleton(&tokenize("for (int i = 0; i < n; i++) { f(); }"));
        assert_eq!(sk.to_string(), "h{s}");
    }

    #[test]
    fn missing_final_close_appends() {
        let sk = Skeleton::from_symbols(parse("h{h{s}s"));
        let plans = repair_skeleton(&sk, 2).unwrap();
        assert_eq!(plans[0].edits, vec![SkeletonEdit::new(EditKind::InsertClose, 7)]);
    }

    #[test]
    fn extra_close_is_deleted() {
        let sk = Skeleton::from_symbols(parse("h{s}}h{s}"));
        let plans = repair_skeleton(&sk, 2).unwrap();
        assert_eq!(plans[0].cost, 1);
        assert_eq!(plans[0].edits[0].kind, EditKind::DeleteSymbol);
        for p in &plans {
            assert!(braces_balanced(&apply_edits(&sk.symbols, &p.edits)));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let sk = Skeleton::from_symbols(parse("}}}"));
        assert_eq!(
            repair_skeleton(&sk, 2),
            Err(NestingError::NoRepairWithinBudget { budget: 2, needed: 3 })
        );
    }

    #[test]
    fn layout_puts_close_where_indentation_drops() {
        let src = "class A {\n    void f() {\n        int x = 1;\n\n    void g() {\n    }\n}\n";
        let sk = abstract_skeleton(&tokenize(src));
        let plans = repair_skeleton(&sk, 2).unwrap();
        let fixed = project_repair(src, &sk, &plans[0].edits).unwrap();
        assert_eq!(fixed, "class A {\n    void f() {\n        int x = 1;\n    }\n\n    void g() {\n    }\n}\n");
    }

    #[test]
    fn projection_appends_final_brace() {
        let src = "class A {\n  int x;\n";
        let sk = abstract_skeleton(&tokenize(src));
        let plans = repair_skeleton(&sk, 2).unwrap();
        let fixed = project_repair(src, &sk, &plans[0].edits).unwrap();
        assert_eq!(fixed, "class A {\n  int x;\n}\n");
        assert_eq!(project_repair(src, &sk, &[]).unwrap(), src);
    }

    #[test]
    fn stale_skeleton_is_detected() {
        let sk = abstract_skeleton(&tokenize("class A { int x; }"));
        let edit = [SkeletonEdit::new(EditKind::DeleteSymbol, 3)];
        assert_eq!(project_repair("class B ( int y; )", &sk, &edit), Err(NestingError::StaleSkeleton));
    }
}
