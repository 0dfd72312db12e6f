//! The end-to-end repair loop: nesting repair, compiler localisation, line
//! classification, UNK recovery and compile verification.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use synfix_core::bpe::SubtokenVocab;
use synfix_core::diagnostics::{self, CompileResult, Compiler};
use synfix_core::editdsl::{self, EditAction, EditPlan, FixVocab, DEFAULT_PLAN_CAP};
use synfix_core::jlex;
use synfix_core::nesting;
use synfix_neural::{LinePrediction, Model};

use crate::linefix::{LineContext, LineFixModel};
use crate::unkfix::{self, TokenCandidate, UnkQuery, DEFAULT_TOP_K};
use crate::RepairError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    BlockFix,
    LineFix,
    UnkFix,
    None,
}

impl Stage {
    pub fn as_str(self) -> &'static str {
        match self {
            Stage::BlockFix => "blockfix",
            Stage::LineFix => "linefix",
            Stage::UnkFix => "unkfix",
            Stage::None => "none",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Fixed,
    Unchanged,
    BestEffort,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedEdit {
    pub stage: Stage,
    pub line: u32,
    pub edit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepairOutcome {
    pub status: Status,
    pub fixed_source: String,
    pub stage: Stage,
    pub applied_edits: Vec<AppliedEdit>,
    pub compile_ok: bool,
    pub rounds: usize,
    pub compile_trials: usize,
    pub latency_ms: u64,
    /// The deadline passed before the pipeline finished.
    pub timed_out: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Ranked nesting repairs compiled before moving on.
    pub blockfix: usize,
    /// Largest nesting repair searched for.
    pub nesting_edits: u32,
    pub combinations: usize,
    /// Compile trials per UNK payload.
    pub unk_trials: usize,
    pub max_rounds: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { blockfix: 8, nesting_edits: 6, combinations: DEFAULT_PLAN_CAP, unk_trials: DEFAULT_TOP_K, max_rounds: 3 }
    }
}

impl Budget {
    /// Upper bound on compiles in one round for plans with `unks` UNK
    /// payloads in total.
    pub fn round_cap(&self, unks: usize) -> usize {
        1 + self.blockfix + self.combinations + self.unk_trials * unks
    }
}

/// Predicts edit labels for a flagged line.
pub trait LinePredictor: Send + Sync {
    fn predict(&self, ctx: &LineContext<'_>) -> Result<LinePrediction, RepairError>;
    fn fixes(&self) -> &FixVocab;
}

/// Proposes concrete tokens for an UNK payload.
pub trait TokenRecoverer: Send + Sync {
    fn candidates(&self, q: &UnkQuery<'_>, top_k: usize) -> Result<Vec<TokenCandidate>, RepairError>;
}

/// A LineFix model with its subtoken vocabulary.
pub struct NeuralLineFix<'a> {
    pub model: &'a LineFixModel,
    pub vocab: &'a SubtokenVocab,
}

impl LinePredictor for NeuralLineFix<'_> {
    fn predict(&self, ctx: &LineContext<'_>) -> Result<LinePrediction, RepairError> {
        self.model.predict(self.vocab, ctx)
    }

    fn fixes(&self) -> &FixVocab {
        &self.model.fixes
    }
}

/// Masked-LM candidates (when a model is present) merged with the file's
/// identifiers.
pub struct NeuralUnkFix<'a> {
    pub mlm: Option<&'a Model<f32>>,
    pub vocab: &'a SubtokenVocab,
}

impl TokenRecoverer for NeuralUnkFix<'_> {
    fn candidates(&self, q: &UnkQuery<'_>, top_k: usize) -> Result<Vec<TokenCandidate>, RepairError> {
        unkfix::candidate_pool(self.mlm.map(|m| (m, self.vocab)), q, top_k)
    }
}

pub struct Repairer<'a> {
    pub compiler: &'a dyn Compiler,
    pub line: Option<&'a dyn LinePredictor>,
    pub unk: &'a dyn TokenRecoverer,
    pub budget: Budget,
    pub deadline: Option<Instant>,
}

struct Trials<'a> {
    compiler: &'a dyn Compiler,
    used: usize,
    deadline: Option<Instant>,
}

impl Trials<'_> {
    fn compile(&mut self, source: &str) -> Result<CompileResult, RepairError> {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(RepairError::Timeout);
        }
        self.used += 1;
        Ok(self.compiler.compile(source)?)
    }
}

/// One round's result before accumulation.
struct Round {
    status: Status,
    source: String,
    stage: Stage,
    edits: Vec<AppliedEdit>,
    compile_ok: bool,
    /// The best-effort source moved the first error past the flagged line.
    advanced: bool,
    note: Option<String>,
}

fn first_error_line(r: &CompileResult) -> Option<u32> {
    diagnostics::select_target(&r.diagnostics).map(|d| d.line)
}

fn describe(actions: &[EditAction]) -> String {
    actions.iter().map(|a| format!("{}@{}", a.command, a.location)).collect::<Vec<_>>().join(", ")
}

/// The plan with UNKs filled and its compile verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedPlan {
    pub actions: Vec<EditAction>,
    pub source: String,
    pub compile_ok: bool,
    pub trials: usize,
    /// First-error line after applying, when it does not compile.
    pub error_line: Option<u32>,
}

impl Repairer<'_> {
    /// Fill UNK payloads, trying each UNK's candidates in rank order with
    /// the others at their first choice; the first compiling variant wins.
    /// Otherwise every UNK keeps its first candidate.
    fn resolve_plan(&self, trials: &mut Trials<'_>, source: &str, plan: &EditPlan) -> Result<Option<ResolvedPlan>, RepairError> {
        let unk_idx: Vec<usize> = plan.actions.iter().enumerate().filter(|(_, a)| a.command.is_unk()).map(|(i, _)| i).collect();
        let mut pools: Vec<Vec<TokenCandidate>> = Vec::new();
        for &i in &unk_idx {
            let q = UnkQuery::for_action(source, plan.line, &plan.actions[i]).expect("unk action");
            match self.unk.candidates(&q, self.budget.unk_trials) {
                Ok(c) if !c.is_empty() => pools.push(c),
                Ok(_) | Err(RepairError::NoCandidates) | Err(RepairError::BadQuery(_)) => return Ok(None),
                Err(e) => return Err(e),
            }
        }
        let fill = |choice: &[usize]| -> Vec<EditAction> {
            let mut acts = plan.actions.clone();
            for (k, &i) in unk_idx.iter().enumerate() {
                acts[i].command = acts[i].command.with_token(&pools[k][choice[k]].text);
            }
            acts
        };
        let start = trials.used;
        let first = vec![0; unk_idx.len()];
        let mut fallback: Option<ResolvedPlan> = None;
        let mut tried = std::collections::HashSet::new();
        for k in 0..unk_idx.len().max(1) {
            let n = if unk_idx.is_empty() { 1 } else { pools[k].len().min(self.budget.unk_trials) };
            for c in 0..n {
                let mut choice = first.clone();
                if !unk_idx.is_empty() {
                    choice[k] = c;
                }
                if !tried.insert(choice.clone()) {
                    continue;
                }
                let acts = fill(&choice);
                let Ok(text) = editdsl::apply_plan_to_source(source, plan.line, &acts) else { continue };
                let r = trials.compile(&text)?;
                let resolved = ResolvedPlan {
                    actions: acts,
                    source: text,
                    compile_ok: r.success,
                    trials: trials.used - start,
                    error_line: first_error_line(&r),
                };
                if r.success {
                    return Ok(Some(resolved));
                }
                if fallback.is_none() {
                    fallback = Some(resolved);
                }
            }
        }
        Ok(fallback.map(|mut f| {
            f.trials = trials.used - start;
            f
        }))
    }

    fn round(&self, source: &str, trials: &mut Trials<'_>) -> Result<Round, RepairError> {
        let unchanged = |note: Option<String>| Round {
            status: Status::Unchanged,
            source: source.to_string(),
            stage: Stage::None,
            edits: Vec::new(),
            compile_ok: false,
            advanced: false,
            note,
        };
        let initial = trials.compile(source)?;
        if initial.success {
            return Ok(Round { compile_ok: true, ..unchanged(None) });
        }
        let mut cur = source.to_string();
        let mut cur_result = initial;
        let mut edits = Vec::new();
        let mut stage = Stage::None;

        let stream = jlex::tokenize(source);
        if !nesting::check_nesting(&stream).balanced {
            let sk = nesting::abstract_skeleton(&stream);
            if let Ok(plans) = nesting::repair_skeleton(&sk, self.budget.nesting_edits) {
                let mut best: Option<(String, CompileResult, &nesting::RepairPlan)> = None;
                for plan in plans.iter().take(self.budget.blockfix) {
                    let Ok(text) = nesting::project_repair(source, &sk, &plan.edits) else { continue };
                    let r = trials.compile(&text)?;
                    if r.success {
                        return Ok(Round {
                            status: Status::Fixed,
                            source: text,
                            stage: Stage::BlockFix,
                            edits: blockfix_edits(&sk, plan),
                            compile_ok: true,
                            advanced: true,
                            note: None,
                        });
                    }
                    if best.is_none() {
                        best = Some((text, r, plan));
                    }
                }
                if let Some((text, r, plan)) = best {
                    edits = blockfix_edits(&sk, plan);
                    cur = text;
                    cur_result = r;
                    stage = Stage::BlockFix;
                }
            }
        }
        let after_blockfix = |note: &str| {
            if stage == Stage::BlockFix {
                Round {
                    status: Status::BestEffort,
                    source: cur.clone(),
                    stage,
                    edits: edits.clone(),
                    compile_ok: false,
                    advanced: true,
                    note: Some(note.to_string()),
                }
            } else {
                unchanged(Some(note.to_string()))
            }
        };
        let Some(target) = diagnostics::select_target(&cur_result.diagnostics).cloned() else {
            return Ok(after_blockfix("no source-editable diagnostic"));
        };
        let Some(line_model) = self.line else {
            return Ok(after_blockfix("no line model loaded"));
        };
        let lines: Vec<&str> = cur.split('\n').collect();
        let text_of = |n: u32| -> &str {
            if n == 0 {
                ""
            } else {
                lines.get(n as usize - 1).copied().unwrap_or("")
            }
        };
        let ctx = LineContext {
            line: text_of(target.line),
            message: target.headline(),
            ctx_before: text_of(target.line.saturating_sub(1)),
            ctx_after: text_of(target.line + 1),
        };
        let pred = match line_model.predict(&ctx) {
            Ok(p) => p,
            Err(RepairError::EmptyLine) => return Ok(after_blockfix("flagged line has no tokens")),
            Err(e) => return Err(e),
        };
        let line_tokens: Vec<String> = jlex::significant_texts(ctx.line);
        let (locs, cmds) = editdsl::resolve_labels(&pred.loc_probs, &pred.fix_probs);
        let plans = editdsl::plan_combinations(
            target.line,
            &locs,
            &cmds,
            &pred.loc_probs,
            &pred.fix_probs,
            line_model.fixes(),
            self.budget.combinations,
        );
        let mut top: Option<(ResolvedPlan, bool)> = None;
        let mut advancing: Option<(ResolvedPlan, bool)> = None;
        for plan in &plans {
            let has_unk = plan.actions.iter().any(|a| a.command.is_unk());
            // reject plans that do not fit the line before compiling anything
            let probe: Vec<EditAction> = plan
                .actions
                .iter()
                .map(|a| if a.command.is_unk() { EditAction { location: a.location, command: a.command.with_token("x") } } else { a.clone() })
                .collect();
            if editdsl::apply_plan(&line_tokens, &probe).is_err() {
                continue;
            }
            let Some(resolved) = self.resolve_plan(trials, &cur, plan)? else { continue };
            if resolved.compile_ok {
                let s = if has_unk { Stage::UnkFix } else { Stage::LineFix };
                edits.push(AppliedEdit { stage: s, line: plan.line, edit: describe(&resolved.actions) });
                return Ok(Round {
                    status: Status::Fixed,
                    source: resolved.source,
                    stage: s,
                    edits,
                    compile_ok: true,
                    advanced: true,
                    note: None,
                });
            }
            let advances = resolved.error_line.is_some_and(|l| l > target.line);
            if advances && advancing.is_none() {
                advancing = Some((resolved.clone(), has_unk));
            }
            if top.is_none() {
                top = Some((resolved, has_unk));
            }
        }
        let advanced = advancing.is_some();
        match advancing.or(top) {
            Some((r, has_unk)) => {
                let s = if has_unk { Stage::UnkFix } else { Stage::LineFix };
                edits.push(AppliedEdit { stage: s, line: target.line, edit: describe(&r.actions) });
                Ok(Round {
                    status: Status::BestEffort,
                    source: r.source,
                    stage: s,
                    edits,
                    compile_ok: false,
                    advanced,
                    note: Some("no candidate compiled".into()),
                })
            }
            None => Ok(after_blockfix("no applicable edit plan")),
        }
    }

    /// A single round of the pipeline.
    pub fn repair_once(&self, source: &str) -> RepairOutcome {
        self.run(source, 1)
    }

    /// Rounds on the evolving source until it compiles, nothing advances or
    /// `budget.max_rounds` is reached.
    pub fn repair_iterative(&self, source: &str) -> RepairOutcome {
        self.run(source, self.budget.max_rounds.max(1))
    }

    fn run(&self, source: &str, max_rounds: usize) -> RepairOutcome {
        let start = Instant::now();
        let mut trials = Trials { compiler: self.compiler, used: 0, deadline: self.deadline };
        let mut cur = source.to_string();
        let mut edits: Vec<AppliedEdit> = Vec::new();
        let mut stage = Stage::None;
        let mut rounds = 0;
        let mut note = None;
        let mut status = Status::Unchanged;
        let mut compile_ok = false;
        let mut timed_out = false;
        while rounds < max_rounds {
            rounds += 1;
            let r = match self.round(&cur, &mut trials) {
                Ok(r) => r,
                Err(e) => {
                    timed_out = matches!(e, RepairError::Timeout);
                    note = Some(e.to_string());
                    break;
                }
            };
            note = r.note.clone();
            match r.status {
                Status::Fixed => {
                    edits.extend(r.edits);
                    cur = r.source;
                    stage = r.stage;
                    status = Status::Fixed;
                    compile_ok = true;
                    break;
                }
                Status::Unchanged => {
                    compile_ok = r.compile_ok;
                    break;
                }
                Status::BestEffort => {
                    edits.extend(r.edits);
                    cur = r.source;
                    stage = r.stage;
                    status = Status::BestEffort;
                    if !r.advanced {
                        break;
                    }
                }
            }
        }
        if status == Status::Unchanged && cur != source {
            status = Status::BestEffort;
        }
        if status == Status::Unchanged {
            cur = source.to_string();
            stage = Stage::None;
            edits.clear();
        }
        RepairOutcome {
            status,
            fixed_source: cur,
            stage,
            applied_edits: edits,
            compile_ok,
            rounds,
            compile_trials: trials.used,
            latency_ms: start.elapsed().as_millis() as u64,
            timed_out,
            note,
        }
    }
}

fn blockfix_edits(sk: &nesting::Skeleton, plan: &nesting::RepairPlan) -> Vec<AppliedEdit> {
    plan.edits
        .iter()
        .map(|e| {
            let line = sk
                .origin
                .get(e.position)
                .or(sk.origin.last())
                .map(|o| o.line)
                .unwrap_or(1);
            let what = match e.kind {
                nesting::EditKind::InsertClose => "insert }",
                nesting::EditKind::InsertOpen => "insert {",
                nesting::EditKind::DeleteSymbol => "delete brace",
            };
            AppliedEdit { stage: Stage::BlockFix, line, edit: what.to_string() }
        })
        .collect()
}
