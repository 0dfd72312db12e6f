use proptest::prelude::*;
use synfix_core::bpe::{self, SubtokenVocab};
use synfix_core::corpusgen::{ErrorCategory, BUCKETS};
use synfix_core::editdsl::{EditCommand, FixVocab, Payload};
use synfix_neural::{EncoderConfig, MaskingPolicy};
use synfix_repair::eval::{self, PairResult, ReportFormat, Verdict};
use synfix_repair::linefix::{self, build_input, LineContext, LineFixModel, INPUT_BUDGET};
use synfix_repair::mlm::{self, PretrainConfig};
use synfix_repair::unkfix::{self, build_window, UnkKind, UnkQuery};
use synfix_repair::{Models, RepairError, Stage, Status};

const SAMPLE: &str = "public class Counter {\n    private int count = 0;\n    public void increment() {\n        count = count + 1;\n    }\n    public int get() {\n        return count;\n    }\n}\n";

fn vocab() -> SubtokenVocab {
    bpe::train_vocab([SAMPLE, "int x = y + z ; return x ;"], 320, 0).unwrap()
}

fn segment(ids: &[u32], from: u32, to: Option<u32>) -> Vec<u32> {
    let start = ids.iter().position(|&i| i == from).map(|p| p + 1).unwrap_or(ids.len());
    let end = to.and_then(|t| ids[start..].iter().position(|&i| i == t)).map(|p| start + p).unwrap_or(ids.len());
    ids[start..end].to_vec()
}

#[test]
fn input_layout_puts_line_context_and_message_in_order() {
    let v = vocab();
    let ctx = LineContext {
        line: "count = count + 1",
        message: "';' expected",
        ctx_before: "public void increment() {",
        ctx_after: "}",
    };
    let s = build_input(&v, &ctx, true).unwrap();
    assert_eq!(s.ids[0], bpe::CLS);
    assert_eq!(s.ids.len(), s.word_index.len());
    let ctx_at = s.ids.iter().position(|&i| i == bpe::CTX).unwrap();
    let bol_at = s.ids.iter().position(|&i| i == bpe::BOL).unwrap();
    let sep_at = s.ids.iter().position(|&i| i == bpe::SEP).unwrap();
    assert!(ctx_at < bol_at && bol_at < sep_at);
    assert_eq!(v.decode(&s.ids[1..ctx_at]).unwrap(), "count=count+1");
    assert_eq!(v.decode(&segment(&s.ids, bpe::SEP, None)).unwrap(), "';' expected");
    // word indices number the five line tokens and nothing else
    let line_words: Vec<u32> = s.word_index[1..ctx_at].to_vec();
    assert_eq!(*line_words.first().unwrap(), 1);
    assert_eq!(*line_words.last().unwrap(), 5);
    assert!(s.word_index[ctx_at..].iter().all(|&w| w == 0));
    let plain = build_input(&v, &ctx, false).unwrap();
    assert!(!plain.ids.contains(&bpe::SEP));
}

#[test]
fn the_message_shrinks_before_the_line() {
    let v = vocab();
    let line = (0..70).map(|i| format!("v{i} ")).collect::<String>();
    let msg = "a very long compiler message ".repeat(10);
    let ctx = LineContext { line: &line, message: &msg, ctx_before: "x", ctx_after: "y" };
    let s = build_input(&v, &ctx, true).unwrap();
    assert!(s.len() <= INPUT_BUDGET);
    let line_ids = v.encode(&line.replace(' ', ""));
    let sep_at = s.ids.iter().position(|&i| i == bpe::SEP).unwrap();
    let msg_ids = &s.ids[sep_at + 1..];
    if line_ids.len() + 2 + 40 > INPUT_BUDGET {
        assert!(msg_ids.len() < 40);
    }
    assert!(msg_ids.len() <= 40);
    assert!(matches!(
        build_input(&v, &LineContext { line: "  // only a comment", ..ctx }, true),
        Err(RepairError::EmptyLine)
    ));
}

proptest! {
    #[test]
    fn inputs_respect_the_budget(words in prop::collection::vec("[a-z]{1,12}", 1..120), msg in "[a-z ]{0,300}", before in "[a-z ;]{0,200}") {
        let v = vocab();
        let line = words.join(" ");
        let ctx = LineContext { line: &line, message: &msg, ctx_before: &before, ctx_after: &before };
        let s = build_input(&v, &ctx, true).unwrap();
        prop_assert!(s.len() <= INPUT_BUDGET);
        prop_assert_eq!(s.ids[0], bpe::CLS);
        prop_assert_eq!(s.ids.len(), s.word_index.len());
        // line word indices never decrease and start at 1
        let first_zero = s.word_index[1..].iter().position(|&w| w == 0).map(|p| p + 1).unwrap_or(s.len());
        let line_words = &s.word_index[1..first_zero];
        prop_assert!(!line_words.is_empty() && line_words[0] == 1);
        prop_assert!(line_words.windows(2).all(|w| w[0] <= w[1] && w[1] - w[0] <= 1));
    }
}

#[test]
fn micro_f1_matches_a_hand_count() {
    // tp = 2, fp = 1, fn = 1
    let f = linefix::micro_f1(&[vec![1, 2], vec![3]], &[vec![1], vec![3, 4]]);
    assert!((f - 4.0 / 6.0).abs() < 1e-12);
    assert_eq!(linefix::micro_f1(&[vec![]], &[vec![1]]), 0.0);
    assert_eq!(linefix::micro_f1(&[vec![5]], &[vec![5]]), 1.0);
}

fn long_source(lines: usize) -> String {
    let mut s = String::from("public class Long {\n    void f() {\n");
    for i in 0..lines {
        s.push_str(&format!("        int value{i} = value{i} + {i};\n"));
    }
    s.push_str("    }\n}\n");
    s
}

#[test]
fn unk_windows_hold_contiguous_masks_within_budget() {
    let v = vocab();
    let src = long_source(80);
    for slots in 1..=5 {
        let q = UnkQuery { source: &src, line: 40, location: 2, kind: UnkKind::Change, budget: 150 };
        let w = build_window(&v, &q, slots).unwrap();
        assert!(w.seq.len() <= 150);
        assert_eq!(w.seq.ids[0], bpe::CLS);
        assert_eq!(w.seq.ids.iter().filter(|&&i| i == bpe::MASK).count(), slots);
        assert!(w.seq.ids[w.mask_at..w.mask_at + slots].iter().all(|&i| i == bpe::MASK));
        // all masks share the replaced token's word index
        assert!(w.seq.word_index[w.mask_at..w.mask_at + slots].iter().all(|&x| x == 2));
        // lines are taken symmetrically: the counts above and below differ by at most one
        let bols: Vec<usize> = w.seq.ids.iter().enumerate().filter(|(_, &i)| i == bpe::BOL).map(|(p, _)| p).collect();
        let above = bols.iter().filter(|&&p| p < w.mask_at).count() - 1;
        let below = bols.len() - above - 1;
        assert!(above.abs_diff(below) <= 1, "{above} above, {below} below");
        assert!(above >= 1);
    }
    let bad = UnkQuery { source: &src, line: 40, location: 99, kind: UnkKind::Change, budget: 150 };
    assert!(matches!(build_window(&v, &bad, 1), Err(RepairError::BadQuery(_))));
    let missing = UnkQuery { source: &src, line: 10_000, location: 1, kind: UnkKind::Insert, budget: 150 };
    assert!(build_window(&v, &missing, 1).is_err());
}

#[test]
fn unk_window_of_a_huge_line_is_cropped_around_the_mask() {
    let v = vocab();
    let line = (0..400).map(|i| format!("a{i}")).collect::<Vec<_>>().join(" + ");
    let src = format!("class A {{\n    int x = {line};\n}}\n");
    let q = UnkQuery { source: &src, line: 2, location: 300, kind: UnkKind::Insert, budget: 150 };
    let w = build_window(&v, &q, 3).unwrap();
    assert!(w.seq.len() <= 150);
    assert!(w.seq.ids[w.mask_at..w.mask_at + 3].iter().all(|&i| i == bpe::MASK));
}

#[test]
fn identifier_pool_is_frequency_ranked() {
    assert_eq!(unkfix::file_identifiers(SAMPLE)[0], "count");
    let q = UnkQuery { source: SAMPLE, line: 4, location: 3, kind: UnkKind::Change, budget: 150 };
    let c = unkfix::candidate_pool(None, &q, 2).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(c[0].text, "count");
    assert!(c.iter().all(|t| t.score.is_none()));
    assert!(unkfix::is_single_token("count"));
    assert!(unkfix::is_single_token("42"));
    assert!(!unkfix::is_single_token("a b"));
    assert!(!unkfix::is_single_token(";"));
}

#[test]
fn tiny_mlm_pretrains_and_offers_single_token_candidates() {
    let v = vocab();
    let mut m = mlm::new_mlm(EncoderConfig::tiny(v.size(), 1)).unwrap();
    let cfg = PretrainConfig { steps: 30, batch_size: 4, window: 64, policy: MaskingPolicy::default(), ..PretrainConfig::default() };
    let r = mlm::pretrain(&mut m, &v, &[SAMPLE], &[SAMPLE], &cfg, |_, _| {}).unwrap();
    assert!(r.first_loss.is_finite() && r.final_loss.is_finite());
    assert!(r.held_out_perplexity.is_finite() && r.unigram_perplexity.is_finite());
    let q = UnkQuery { source: SAMPLE, line: 4, location: 3, kind: UnkKind::Change, budget: 150 };
    match unkfix::recover_unk(&m, &v, &q, 5) {
        Ok(c) => {
            assert!(c.len() <= 5);
            assert!(c.iter().all(|t| unkfix::is_single_token(&t.text)));
            assert!(c.windows(2).all(|w| w[0].score >= w[1].score));
        }
        Err(RepairError::NoCandidates) => {}
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn model_directory_round_trips() {
    let v = vocab();
    let cmds = [EditCommand::Insert(Payload::Token(";".into()))];
    let fixes = FixVocab::derive(cmds.iter(), 8).unwrap();
    let lf = LineFixModel::new(EncoderConfig::tiny(v.size(), 2), fixes, false).unwrap();
    let models = Models { vocab: v.clone(), linefix: Some(lf), mlm: Some(mlm::new_mlm(EncoderConfig::tiny(v.size(), 3)).unwrap()) };
    let dir = tempfile::tempdir().unwrap();
    models.save(dir.path()).unwrap();
    let back = Models::load(dir.path()).unwrap();
    assert_eq!(back.vocab, v);
    let (a, b) = (models.linefix.as_ref().unwrap(), back.linefix.as_ref().unwrap());
    assert_eq!(a.fixes, b.fixes);
    assert_eq!(a.with_message, b.with_message);
    assert_eq!(a.model.params, b.model.params);
    assert_eq!(models.mlm.unwrap().params, back.mlm.unwrap().params);
    let only_vocab = tempfile::tempdir().unwrap();
    Models { vocab: v, linefix: None, mlm: None }.save(only_vocab.path()).unwrap();
    let partial = Models::load(only_vocab.path()).unwrap();
    assert!(partial.linefix.is_none() && partial.mlm.is_none());
    assert!(Models::load(&dir.path().join("missing")).is_err());
}

#[test]
fn exact_match_ignores_layout_and_comments() {
    assert!(eval::exact_match("int x=1;", "int  x = 1 ; // note"));
    assert!(!eval::exact_match("int x=1;", "int x = 2;"));
}

fn result(i: usize, verdict: Verdict, stage: Stage, edits: usize) -> PairResult {
    PairResult {
        id: format!("p{i}"),
        bucket: BUCKETS[i % BUCKETS.len()].to_string(),
        category: ErrorCategory::ALL[i % 4],
        num_edits: edits,
        verdict,
        stage,
        status: if verdict == Verdict::Failure { Status::BestEffort } else { Status::Fixed },
        unsound: false,
    }
}

fn sample_results() -> Vec<PairResult> {
    let verdicts = [Verdict::Exact, Verdict::CompilableNonMatch, Verdict::Failure];
    let stages = [Stage::BlockFix, Stage::LineFix, Stage::UnkFix, Stage::None];
    (0..97).map(|i| result(i, verdicts[i % 3], stages[i % 4], 1 + i % 3)).collect()
}

#[test]
fn report_accounting_matches_an_independent_count() {
    let rs = sample_results();
    let r = eval::aggregate(&rs, "builtin");
    assert_eq!(r.totals.n, 97);
    assert_eq!(r.per_bucket.len(), BUCKETS.len());
    for b in r.per_bucket.iter().chain([&r.totals]) {
        assert!(b.identity_holds(), "{b:?}");
    }
    let exact = rs.iter().filter(|p| p.verdict == Verdict::Exact).count();
    assert_eq!(r.totals.exact, exact);
    assert_eq!(r.per_bucket.iter().map(|b| b.n).sum::<usize>(), 97);
    let stage_sum: usize = r.per_stage.iter().map(|s| s.exact).sum();
    let by_none = rs.iter().filter(|p| p.verdict == Verdict::Exact && p.stage == Stage::None).count();
    assert_eq!(stage_sum + by_none, exact);
    let prev: f64 = r.per_category.iter().map(|c| c.prevalence).sum();
    assert!((prev - 1.0).abs() < 1e-9);
    let two = rs.iter().filter(|p| p.num_edits == 2).count();
    assert_eq!(r.multi_edit[0].n, two);
}

#[test]
fn reports_round_trip_through_json_and_tsv() {
    let r = eval::aggregate(&sample_results(), "builtin");
    let json = eval::render_report(&r, ReportFormat::Json);
    let back: eval::EvalReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    let tsv = eval::render_report(&r, ReportFormat::Tsv);
    assert_eq!(eval::parse_tsv(&tsv).unwrap(), r);
    assert!(eval::parse_tsv("#buckets\tbucket\nnot\ta\trow\n").is_err());
    let md = eval::render_report(&r, ReportFormat::Markdown);
    assert_eq!(md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("|---")).count(), 1 + BUCKETS.len() + 1 + 1 + 4 + 1 + 3 + 1 + 2);
    assert_eq!(ReportFormat::from_extension("md"), Some(ReportFormat::Markdown));
    assert_eq!(ReportFormat::from_extension("csv"), None);
}

#[test]
fn evaluation_is_identical_sequentially_and_in_parallel() {
    use synfix_core::corpusgen::{self, CorruptionSpec};
    use synfix_core::diagnostics::BuiltinCompiler;
    use synfix_core::par::Execution;
    use synfix_repair::pipeline::NeuralUnkFix;
    use synfix_repair::{Budget, Repairer};

    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java");
    let files = corpusgen::load_corpus_dir(&dir).unwrap();
    let c = BuiltinCompiler::default();
    let ds = corpusgen::generate_dataset(&files[..30], &CorruptionSpec::single_edit(5), 60, &c).unwrap();
    let v = vocab();
    let unk = NeuralUnkFix { mlm: None, vocab: &v };
    let r = Repairer { compiler: &c, line: None, unk: &unk, budget: Budget::default(), deadline: None };
    let seq = eval::evaluate_in(Execution::Sequential, &r, &ds.test).unwrap();
    let par = eval::evaluate_in(Execution::Parallel, &r, &ds.test).unwrap();
    assert_eq!(seq, par);
    assert_eq!(seq.totals.n, ds.test.len());
    assert!(seq.totals.identity_holds());
    assert_eq!(seq.unsound_fixed, 0);
    // only nesting repairs are possible without a line model
    assert!(seq.per_stage.iter().filter(|s| s.stage != "blockfix").all(|s| s.exact == 0));
}
