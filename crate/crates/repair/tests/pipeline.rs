use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use synfix_core::diagnostics::{BuiltinCompiler, CompileError, CompileResult, Compiler};
use synfix_core::jlex;
use synfix_core::editdsl::{EditCommand, FixVocab, Payload, NUM_LOCATIONS};
use synfix_neural::LinePrediction;
use synfix_repair::linefix::LineContext;
use synfix_repair::pipeline::{LinePredictor, TokenRecoverer};
use synfix_repair::unkfix::{TokenCandidate, UnkQuery};
use synfix_repair::{Budget, RepairError, Repairer, Stage, Status};

#[derive(Default)]
struct Counting {
    inner: BuiltinCompiler,
    calls: AtomicUsize,
}

impl Compiler for Counting {
    fn compile(&self, source: &str) -> Result<CompileResult, CompileError> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        self.inner.compile(source)
    }

    fn name(&self) -> &str {
        "counting"
    }
}

/// Always predicts the same labels.
struct Scripted {
    fixes: FixVocab,
    locs: Vec<usize>,
    cmds: Vec<usize>,
    calls: AtomicUsize,
}

impl Scripted {
    fn new(locs: &[usize], cmds: &[EditCommand]) -> Self {
        let mut all = vec![semicolon()];
        all.extend(cmds.iter().cloned());
        let fixes = FixVocab::derive(all.iter(), 64).unwrap();
        let cmds = cmds.iter().map(|c| fixes.index_of(c).unwrap()).collect();
        Scripted { fixes, locs: locs.to_vec(), cmds, calls: AtomicUsize::new(0) }
    }
}

impl LinePredictor for Scripted {
    fn predict(&self, _ctx: &LineContext<'_>) -> Result<LinePrediction, RepairError> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        let mut loc_probs = vec![0.01f32; NUM_LOCATIONS];
        let mut fix_probs = vec![0.01f32; self.fixes.len()];
        for &l in &self.locs {
            loc_probs[l] = 0.9;
        }
        for &c in &self.cmds {
            fix_probs[c] = 0.9;
        }
        Ok(LinePrediction { loc_probs, fix_probs })
    }

    fn fixes(&self) -> &FixVocab {
        &self.fixes
    }
}

struct Tokens(Vec<&'static str>, AtomicUsize);

impl Tokens {
    fn new(t: &[&'static str]) -> Self {
        Tokens(t.to_vec(), AtomicUsize::new(0))
    }
}

impl TokenRecoverer for Tokens {
    fn candidates(&self, _q: &UnkQuery<'_>, top_k: usize) -> Result<Vec<TokenCandidate>, RepairError> {
        self.1.fetch_add(1, Ordering::SeqCst);
        Ok(self.0.iter().take(top_k).map(|t| TokenCandidate { text: t.to_string(), score: Some(-1.0) }).collect())
    }
}

fn program(body: &str) -> String {
    format!("public class A {{\n    int f(int a, int b) {{\n{body}\n    }}\n}}\n")
}

fn repairer<'a>(c: &'a dyn Compiler, line: &'a dyn LinePredictor, unk: &'a dyn TokenRecoverer) -> Repairer<'a> {
    Repairer { compiler: c, line: Some(line), unk, budget: Budget::default(), deadline: None }
}

/// Some line of `source` has the same tokens as `want`.
fn has_line(source: &str, want: &str) -> bool {
    let want = jlex::significant_texts(want);
    source.lines().any(|l| jlex::significant_texts(l) == want)
}

fn semicolon() -> EditCommand {
    EditCommand::Insert(Payload::Token(";".into()))
}

#[test]
fn compiling_input_makes_no_model_calls() {
    let c = Counting::default();
    let lp = Scripted::new(&[4], &[semicolon()]);
    let unk = Tokens::new(&["x"]);
    let src = program("        return a + b;");
    let out = repairer(&c, &lp, &unk).repair_iterative(&src);
    assert_eq!(out.status, Status::Unchanged);
    assert!(out.compile_ok);
    assert_eq!(out.fixed_source, src);
    assert_eq!(out.stage, Stage::None);
    assert_eq!(out.compile_trials, 1);
    assert_eq!(lp.calls.load(Ordering::SeqCst), 0);
    assert_eq!(unk.1.load(Ordering::SeqCst), 0);
}

#[test]
fn linefix_repairs_a_missing_semicolon() {
    let c = Counting::default();
    let lp = Scripted::new(&[4], &[semicolon()]);
    let unk = Tokens::new(&[]);
    let src = program("        int x = 1\n        return x;");
    let out = repairer(&c, &lp, &unk).repair_iterative(&src);
    assert_eq!(out.status, Status::Fixed);
    assert_eq!(out.stage, Stage::LineFix);
    assert!(out.compile_ok);
    assert!(has_line(&out.fixed_source, "int x = 1;"));
    assert!(c.inner.compile(&out.fixed_source).unwrap().success);
    assert_eq!(out.compile_trials, c.calls.load(Ordering::SeqCst));
    assert_eq!(out.applied_edits.len(), 1);
    assert_eq!(out.applied_edits[0].line, 3);
}

#[test]
fn unk_candidates_are_tried_in_rank_order() {
    let c = Counting::default();
    let lp = Scripted::new(&[2], &[EditCommand::Insert(Payload::Unk)]);
    let unk = Tokens::new(&["foo", "+", "-"]);
    let src = program("        return a b;");
    let out = repairer(&c, &lp, &unk).repair_iterative(&src);
    assert_eq!(out.status, Status::Fixed);
    assert_eq!(out.stage, Stage::UnkFix);
    assert!(has_line(&out.fixed_source, "return a + b;"));
    // the initial compile, the failing first candidate, then the second
    assert_eq!(out.compile_trials, 3);
    assert!(out.applied_edits[0].edit.contains("INS +"));
}

#[test]
fn blockfix_runs_before_any_line_model() {
    let c = Counting::default();
    let lp = Scripted::new(&[4], &[semicolon()]);
    let unk = Tokens::new(&[]);
    let src = "public class A {\n    int f() {\n        return 1;\n    \n}\n";
    let out = repairer(&c, &lp, &unk).repair_iterative(src);
    assert_eq!(out.status, Status::Fixed);
    assert_eq!(out.stage, Stage::BlockFix);
    assert!(c.inner.compile(&out.fixed_source).unwrap().success);
    assert_eq!(lp.calls.load(Ordering::SeqCst), 0);
}

#[test]
fn wrong_prediction_is_best_effort_and_within_budget() {
    let c = Counting::default();
    // deleting the first token never fixes this line
    let lp = Scripted::new(&[1], &[EditCommand::Delete]);
    let unk = Tokens::new(&[]);
    let src = program("        return a b;");
    let r = repairer(&c, &lp, &unk);
    let out = r.repair_iterative(&src);
    assert_eq!(out.status, Status::BestEffort);
    assert!(!out.compile_ok);
    assert_ne!(out.fixed_source, src);
    assert!(out.rounds >= 1 && out.rounds <= r.budget.max_rounds);
    assert!(out.compile_trials <= out.rounds * r.budget.round_cap(0));
    assert!(out.note.is_some());
}

#[test]
fn without_a_line_model_the_source_is_returned_untouched() {
    let c = Counting::default();
    let unk = Tokens::new(&[]);
    let src = program("        return a b;");
    let r = Repairer { compiler: &c, line: None, unk: &unk, budget: Budget::default(), deadline: None };
    let out = r.repair_iterative(&src);
    assert_eq!(out.status, Status::Unchanged);
    assert!(!out.compile_ok);
    assert_eq!(out.fixed_source, src);
}

#[test]
fn fixed_output_is_a_fixed_point() {
    let c = Counting::default();
    let lp = Scripted::new(&[4], &[semicolon()]);
    let unk = Tokens::new(&[]);
    let r = repairer(&c, &lp, &unk);
    let first = r.repair_iterative(&program("        int x = 1\n        return x;"));
    assert_eq!(first.status, Status::Fixed);
    let again = r.repair_iterative(&first.fixed_source);
    assert_eq!(again.status, Status::Unchanged);
    assert_eq!(again.fixed_source, first.fixed_source);
}

#[test]
fn iteration_fixes_two_lines() {
    let c = Counting::default();
    let lp = Scripted::new(&[4], &[semicolon()]);
    let unk = Tokens::new(&[]);
    let src = program("        int x = 1\n        int y = 2\n        return x;");
    let r = repairer(&c, &lp, &unk);
    let once = r.repair_once(&src);
    assert_eq!(once.status, Status::BestEffort);
    assert_eq!(once.rounds, 1);
    let out = r.repair_iterative(&src);
    assert_eq!(out.status, Status::Fixed);
    assert_eq!(out.rounds, 2);
    assert_eq!(out.applied_edits.len(), 2);
}

#[test]
fn an_expired_deadline_stops_before_compiling() {
    let c = Counting::default();
    let lp = Scripted::new(&[4], &[semicolon()]);
    let unk = Tokens::new(&[]);
    let mut r = repairer(&c, &lp, &unk);
    r.deadline = Some(Instant::now() - Duration::from_millis(1));
    let out = r.repair_iterative(&program("        int x = 1"));
    assert!(out.timed_out);
    assert_eq!(out.compile_trials, 0);
    assert_eq!(out.status, Status::Unchanged);
}
