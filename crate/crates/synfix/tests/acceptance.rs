//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fail.

mod common;
#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synfix::server::AppState;
use synfix::workflow::{self, DeskConfig};
use synfix_core::corpusgen::{self, CorruptionSpec, Dataset, GeneratedPair, SourceFile};
use synfix_core::diagnostics::BuiltinCompiler;
use synfix_core::editdsl::{apply_plan, EditAction, EditCommand};
use synfix_core::jlex;
use synfix_core::nesting::{check_nesting, repair_skeleton, Skeleton, Sym};
use synfix_neural::gradcheck::{check, GradcheckOptions};
use synfix_neural::{apply_masking, EncoderConfig, MaskingPolicy, Model, ModelConfig, Sequence, Tape, Tensor};
use synfix_repair::eval::EvalReport;
use synfix_repair::Models;

type Outcome = Result<String, String>;

fn fixtures() -> Vec<SourceFile> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java");
    corpusgen::load_corpus_dir(&dir).expect("fixture corpus")
}

fn verdict(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn lexer_round_trip(files: &[SourceFile]) -> Outcome {
    let start = Instant::now();
    let bad: Vec<&str> = files.iter().filter(|f| jlex::detokenize(&jlex::tokenize(&f.text)) != f.text).map(|f| f.id.as_str()).collect();
    let secs = start.elapsed().as_secs_f64();
    verdict(files.len() >= 200 && bad.is_empty() && secs < 5.0, format!("{} files, {} mismatches, {secs:.2}s", files.len(), bad.len()))
}

fn pda_equivalence() -> Outcome {
    let nest = |s: &str| check_nesting(&jlex::tokenize(s)).first_violation.map(|v| (v.line, v.col, v.kind));
    let mut exhaustive = 0;
    let mut wrong = 0;
    for len in 0..=10 {
        for s in oracle::all_strings(&['{', '}', ';'], len) {
            exhaustive += 1;
            wrong += usize::from(nest(&s) != oracle::stack_verdict(&s));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let alphabet = ['{', '}', ';', ' ', '\n', 'x'];
    for _ in 0..10_000 {
        let len = rng.gen_range(11..160);
        let s: String = (0..len)
            .map(|_| if rng.gen_bool(0.6) { ['{', '}'][rng.gen_range(0..2)] } else { alphabet[rng.gen_range(0..6)] })
            .collect();
        wrong += usize::from(nest(&s) != oracle::stack_verdict(&s));
    }
    verdict(wrong == 0, format!("{exhaustive} exhaustive + 10000 random strings, {wrong} disagreements"))
}

fn random_balanced(rng: &mut ChaCha8Rng, len: usize) -> Vec<Sym> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    while out.len() + depth < len {
        let s = match rng.gen_range(0..4) {
            0 => Sym::Open,
            1 if depth > 0 => Sym::Close,
            2 => Sym::Hdr,
            _ => Sym::Stmt,
        };
        match s {
            Sym::Open => depth += 1,
            Sym::Close => depth -= 1,
            _ => {}
        }
        out.push(s);
    }
    out.extend(std::iter::repeat_n(Sym::Close, depth));
    out
}

fn nesting_minimality() -> Outcome {
    let start = Instant::now();
    // every 1-corruption of every brace word up to 15 symbols, then random
    // full-alphabet skeletons up to 30
    let mut cases: Vec<Vec<Sym>> = (0..=7).flat_map(oracle::dyck_words).flat_map(|w| oracle::one_corruptions(&w)).collect();
    cases.sort();
    cases.dedup();
    let exhaustive = cases.len();
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20_000 {
        let len = rng.gen_range(2..30);
        let base = random_balanced(&mut rng, len);
        let options = oracle::one_corruptions(&base);
        cases.push(options[rng.gen_range(0..options.len())].clone());
    }
    let mut wrong = 0;
    for sk in &cases {
        let got = repair_skeleton(&Skeleton::from_symbols(sk.clone()), 2).ok().map(|p| p[0].cost);
        wrong += usize::from(got != oracle::bfs_min_cost(sk, 2));
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(
        wrong == 0 && secs < 60.0,
        format!("{exhaustive} exhaustive + 20000 random skeletons, {wrong} non-minimal, {secs:.1}s"),
    )
}

fn line_texts(source: &str, line: u32) -> Vec<String> {
    jlex::tokenize(source).line_tokens(line).unwrap_or_default().into_iter().map(|t| t.text).collect()
}

fn edit_algebra(files: &[SourceFile]) -> Outcome {
    let spec = CorruptionSpec { seed: 77, ..CorruptionSpec::default() };
    let ds = corpusgen::generate_dataset(files, &spec, 10_000, &BuiltinCompiler::default()).map_err(|e| e.to_string())?;
    let all: Vec<&GeneratedPair> = ds.train.iter().chain(&ds.val).chain(&ds.test).collect();
    let ok = all
        .iter()
        .filter(|p| {
            let mut by_line: BTreeMap<u32, Vec<EditAction>> = BTreeMap::new();
            for g in &p.gold_edits {
                let Some(command) = EditCommand::parse(&g.cmd) else { return false };
                by_line.entry(g.line).or_default().push(EditAction { location: g.loc, command });
            }
            by_line.iter().all(|(&l, acts)| apply_plan(&line_texts(&p.bad_source, l), acts).ok() == Some(line_texts(&p.fixed_source, l)))
        })
        .count();
    verdict(all.len() >= 10_000 && ok == all.len(), format!("{ok}/{} pairs reproduce the reference", all.len()))
}

fn masking_statistics() -> Outcome {
    let policy = MaskingPolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut total, mut sel, mut counts) = (0usize, 0usize, [0usize; 3]);
    while total < 120_000 {
        let ids: Vec<u32> = (0..rng.gen_range(50..500)).map(|_| rng.gen_range(7..1024)).collect();
        let m = apply_masking(&ids, &policy, 3, 7, 1024, &mut rng);
        total += ids.len();
        sel += m.positions.len();
        for a in &m.actions {
            counts[*a as usize] += 1;
        }
    }
    let frac = sel as f64 / total as f64;
    let share: Vec<f64> = counts.iter().map(|&c| c as f64 / sel as f64).collect();
    let ok = (0.14..=0.16).contains(&frac)
        && (share[0] - 0.8).abs() <= 0.03
        && (share[1] - 0.1).abs() <= 0.03
        && (share[2] - 0.1).abs() <= 0.03;
    verdict(ok, format!("{total} positions, selected {frac:.4}, split {:.3}/{:.3}/{:.3}", share[0], share[1], share[2]))
}

fn gradcheck_tiny() -> Outcome {
    let start = Instant::now();
    let shapes = [(1, 8, 2, 16, 11), (2, 8, 1, 8, 9), (1, 12, 3, 12, 13), (2, 8, 4, 16, 7), (3, 4, 2, 8, 10)];
    let mut worst = 0.0f64;
    let mut checked = 0;
    for (k, &(layers, hidden, heads, ffn, vocab)) in shapes.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(500 + k as u64);
        let enc = EncoderConfig { layers, hidden, heads, ffn, vocab_size: vocab, ..EncoderConfig::tiny(vocab, k as u64) };
        let (nloc, nfix) = (3 + k, 2 + k);
        let mut model = Model::<f64>::new(ModelConfig::linefix(enc, nloc, nfix)).map_err(|e| e.to_string())?;
        let ids: Vec<_> = model.params.ids().collect();
        for id in ids {
            for x in &mut model.params.get_mut(id).data {
                *x += rng.gen_range(-0.3..0.3);
            }
        }
        let seqs: Vec<Sequence> = (0..2)
            .map(|_| {
                let len = rng.gen_range(2..7);
                Sequence {
                    ids: (0..len).map(|_| rng.gen_range(0..vocab as u32)).collect(),
                    word_index: (0..len).map(|_| rng.gen_range(0..8)).collect(),
                }
            })
            .collect();
        let refs: Vec<&Sequence> = seqs.iter().collect();
        let batch = model.batch(&refs).map_err(|e| e.to_string())?;
        let mut hot = |c: usize| Tensor::from_vec(2, c, (0..2 * c).map(|_| if rng.gen_bool(0.3) { 1.0 } else { 0.0 }).collect());
        let (loc, fix) = (hot(nloc), hot(nfix));
        let r = check(
            &mut model,
            |m: &Model<f64>, tape: &mut Tape<'_, f64>| m.linefix_loss(tape, &batch, &loc, &fix).unwrap(),
            |_| true,
            GradcheckOptions::default(),
        );
        worst = worst.max(r.max_rel_err);
        checked += r.checked;
    }
    let secs = start.elapsed().as_secs_f64();
    verdict(worst < 1e-4 && secs < 120.0, format!("5 configs, {checked} entries, max rel err {worst:.2e}, {secs:.1}s"))
}

struct Desk {
    dataset: Dataset,
    models: Models,
    outcome: Outcome,
}

fn desk_learning(files: &[SourceFile]) -> Result<Desk, String> {
    let start = Instant::now();
    let spec = CorruptionSpec::single_edit(2024);
    let dataset = corpusgen::generate_dataset(files, &spec, 25_000, &BuiltinCompiler::default()).map_err(|e| e.to_string())?;
    eprintln!("  generated {} pairs in {:.0}s", dataset.len(), start.elapsed().as_secs_f64());
    let cfg = DeskConfig::new(2024);
    let train_start = Instant::now();
    let (models, report) = workflow::train_desk(files, &dataset, &cfg, |m| eprintln!("  {m}")).map_err(|e| e.to_string())?;
    let train_secs = train_start.elapsed().as_secs_f64();
    let exact = report.finetune.held_out.exact;
    let gain = exact - report.majority_baseline;
    let ok = report.train_pairs >= 20_000 && report.fixes <= 64 && gain >= 0.25 && train_secs < 7200.0;
    let detail = format!(
        "{} train pairs, {} fixes, held-out exact {:.4} vs majority {:.4} (+{:.1} pp), trained in {:.0}s",
        report.train_pairs,
        report.fixes,
        exact,
        report.majority_baseline,
        100.0 * gain,
        train_secs
    );
    Ok(Desk { dataset, models, outcome: verdict(ok, detail) })
}

fn message_ablation(desk: &Desk) -> Outcome {
    let train = workflow::pairs(&desk.dataset.train);
    let test = workflow::pairs(&desk.dataset.test);
    let mut deltas = Vec::new();
    for seed in [1u64, 2, 3] {
        let mut acc = [0.0; 2];
        for (k, with_message) in [true, false].into_iter().enumerate() {
            let mut cfg = DeskConfig::new(seed);
            cfg.with_message = with_message;
            cfg.encoder = desk.models.mlm.as_ref().map(|m| m.config.encoder.clone()).unwrap_or(cfg.encoder);
            cfg.encoder.seed = seed;
            let (_, r, _) = workflow::finetune_linefix(&desk.models.vocab, desk.models.mlm.as_ref(), &train, &test, &cfg, |_, _| {})
                .map_err(|e| e.to_string())?;
            acc[k] = r.held_out.exact;
        }
        eprintln!("  seed {seed}: with {:.4}, without {:.4}", acc[0], acc[1]);
        deltas.push(acc[0] - acc[1]);
    }
    let mean = deltas.iter().sum::<f64>() / deltas.len() as f64;
    let each: Vec<String> = deltas.iter().map(|d| format!("{:+.4}", d)).collect();
    verdict(mean >= 0.0, format!("delta per seed [{}], mean {mean:+.4}", each.join(", ")))
}

fn run_eval(bin: &str, models: &Path, dataset: &Path, out: &Path) -> Result<(), String> {
    let status = Command::new(bin)
        .env("SYNFIX_MODEL_DIR", models)
        .env_remove("SYNFIX_JAVAC")
        .env("RUST_LOG", "warn")
        .args(["eval", "--dataset"])
        .arg(dataset)
        .arg("--out")
        .arg(out)
        .status()
        .map_err(|e| e.to_string())?;
    if status.success() {
        Ok(())
    } else {
        Err(format!("synfix eval exited with {status}"))
    }
}

/// Soundness and the report, both from the `synfix eval` binary.
fn eval_criteria(desk: &Desk, tmp: &Path) -> (Outcome, Outcome) {
    let run = || -> Result<(EvalReport, bool, f64), String> {
        let model_dir = tmp.join("models");
        desk.models.save(&model_dir).map_err(|e| e.to_string())?;
        let held = Dataset { train: vec![], val: vec![], test: desk.dataset.test.iter().take(2000).cloned().collect() };
        if held.test.len() < 2000 {
            return Err(format!("only {} held-out pairs", held.test.len()));
        }
        let data_dir = tmp.join("data");
        held.write_dir(&data_dir).map_err(|e| e.to_string())?;
        let bin = env!("CARGO_BIN_EXE_synfix");
        let start = Instant::now();
        let mut bytes = Vec::new();
        for (k, ext) in ["json", "json", "md"].iter().enumerate() {
            let out = tmp.join(format!("report{k}.{ext}"));
            run_eval(bin, &model_dir, &data_dir, &out)?;
            bytes.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        }
        let secs = start.elapsed().as_secs_f64();
        let identical = bytes[0] == bytes[1] && !bytes[2].is_empty();
        let report: EvalReport = serde_json::from_slice(&bytes[0]).map_err(|e| e.to_string())?;
        Ok((report, identical, secs))
    };
    match run() {
        Err(e) => (Err(e.clone()), Err(e)),
        Ok((r, identical, secs)) => {
            let identity = |b: &synfix_repair::eval::BucketRow| {
                b.exact + b.compilable_nonmatching + b.failures == b.n && b.compilable_overall == b.exact + b.compilable_nonmatching
            };
            let buckets_ok = r.per_bucket.iter().all(identity) && identity(&r.totals) && r.per_bucket.iter().map(|b| b.n).sum::<usize>() == r.totals.n;
            let stages_sum = r.per_stage.iter().map(|s| s.exact).sum::<usize>();
            let sound = verdict(
                r.unsound_fixed == 0 && buckets_ok && stages_sum == r.totals.exact,
                format!(
                    "{} unsound fixed outcomes, accounting identity holds in {}/{} buckets and the total",
                    r.unsound_fixed,
                    r.per_bucket.iter().filter(|b| identity(b)).count(),
                    r.per_bucket.len()
                ),
            );
            let stage = |n: &str| r.per_stage.iter().find(|s| s.stage == n).map_or(0.0, |s| s.contribution);
            let complete = r.totals.n == 2000 && !r.per_bucket.is_empty() && r.per_stage.len() == 3 && !r.per_category.is_empty();
            let report = verdict(
                complete && identical,
                format!(
                    "{} pairs, exact {:.2}% (blockfix {:.2}, linefix {:.2}, unkfix {:.2}), compilable {:.2}%, {} categories, byte-identical reruns: {identical}, 3 runs in {secs:.0}s",
                    r.totals.n,
                    r.exact_accuracy,
                    stage("blockfix"),
                    stage("linefix"),
                    stage("unkfix"),
                    100.0 * r.totals.compilable_overall as f64 / r.totals.n.max(1) as f64,
                    r.per_category.len()
                ),
            );
            (sound, report)
        }
    }
}

fn server_latency(desk: Desk) -> Outcome {
    let mut programs: Vec<&str> = desk
        .dataset
        .test
        .iter()
        .chain(&desk.dataset.val)
        .map(|p| p.bad_source.as_str())
        .filter(|s| jlex::tokenize(s).significant_count() <= 1000)
        .take(200)
        .collect();
    if programs.len() < 200 {
        return Err(format!("only {} programs of at most 1000 tokens", programs.len()));
    }
    let state = AppState::new(Box::new(BuiltinCompiler::default()), 4);
    state.install(desk.models);
    let addr = common::start(state);
    let mut ms = Vec::with_capacity(programs.len());
    let mut fixed = 0;
    for src in programs.drain(..) {
        let body = serde_json::to_vec(&serde_json::json!({ "source": src })).unwrap();
        let t = Instant::now();
        let (code, resp) = common::http(addr, "POST", "/v1/fix", &body);
        ms.push(t.elapsed().as_secs_f64() * 1000.0);
        if code != 200 {
            return Err(format!("HTTP {code}: {resp}"));
        }
        fixed += usize::from(resp.contains("\"status\":\"fixed\""));
    }
    ms.sort_by(f64::total_cmp);
    let median = (ms[99] + ms[100]) / 2.0;
    let p95 = ms[(0.95 * ms.len() as f64).ceil() as usize - 1];
    verdict(median < 2000.0 && p95 < 5000.0, format!("200 requests, median {median:.0} ms, p95 {p95:.0} ms, max {:.0} ms, {fixed} fixed", ms[199]))
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
    })
}

fn main() {
    let files = fixtures();
    let mut lines: Vec<(&str, Outcome)> = Vec::new();
    let mut record = |name: &'static str, o: Outcome| {
        match &o {
            Ok(d) => println!("PASS {name}: {d}"),
            Err(d) => println!("FAIL {name}: {d}"),
        }
        lines.push((name, o));
    };
    record("lexer-round-trip", guarded(|| lexer_round_trip(&files)));
    record("pda-equivalence", guarded(pda_equivalence));
    record("nesting-minimality", guarded(nesting_minimality));
    record("edit-algebra", guarded(|| edit_algebra(&files)));
    record("masking-statistics", guarded(masking_statistics));
    record("gradcheck", guarded(gradcheck_tiny));

    let desk = catch_unwind(AssertUnwindSafe(|| desk_learning(&files))).unwrap_or_else(|_| Err("panicked".into()));
    match desk {
        Err(e) => {
            for name in ["desk-learning", "message-ablation", "pipeline-soundness", "eval-report", "server-latency"] {
                record(name, Err(format!("desk training failed: {e}")));
            }
        }
        Ok(desk) => {
            record("desk-learning", desk.outcome.clone());
            record("message-ablation", guarded(|| message_ablation(&desk)));
            let tmp = tempfile::tempdir().expect("tempdir");
            let (sound, report) = catch_unwind(AssertUnwindSafe(|| eval_criteria(&desk, tmp.path())))
                .unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
            record("pipeline-soundness", sound);
            record("eval-report", report);
            record("server-latency", guarded(|| server_latency(desk)));
        }
    }
    let failed = lines.iter().filter(|(_, o)| o.is_err()).count();
    println!("{} of {} criteria passed", lines.len() - failed, lines.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
