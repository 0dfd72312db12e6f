mod oracle;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synfix_core::jlex;
use synfix_core::nesting::{
    abstract_skeleton, apply_edits, braces_balanced, check_nesting, min_repair_cost, project_repair,
    repair_skeleton, Skeleton, Sym, ViolationKind,
};

fn verdict(text: &str) -> Option<(u32, u32, ViolationKind)> {
    check_nesting(&jlex::tokenize(text)).first_violation.map(|v| (v.line, v.col, v.kind))
}

#[test]
fn check_matches_stack_oracle_exhaustively() {
    let mut checked = 0;
    for len in 0..=10 {
        for s in oracle::all_strings(&['{', '}', ';'], len) {
            assert_eq!(verdict(&s), oracle::stack_verdict(&s), "{s:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, (0..=10).map(|k| 3usize.pow(k)).sum::<usize>());
}

#[test]
fn check_matches_stack_oracle_on_random_long_strings() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alphabet = ['{', '}', ';', ' ', '\n', 'x'];
    for _ in 0..10_000 {
        let len = rng.gen_range(11..120);
        // bias towards near-balanced strings so UnclosedOpen cases are common
        let s: String = (0..len)
            .map(|_| if rng.gen_bool(0.6) { ['{', '}'][rng.gen_range(0..2)] } else { alphabet[rng.gen_range(0..6)] })
            .collect();
        let report = check_nesting(&jlex::tokenize(&s));
        let expected = oracle::stack_verdict(&s);
        assert_eq!(report.first_violation.map(|v| (v.line, v.col, v.kind)), expected, "{s:?}");
        assert_eq!(report.balanced, expected.is_none());
    }
}

#[test]
fn braces_in_strings_and_comments_are_ignored() {
    let src = "class A { String s = \"}\"; char c = '{'; // }\n /* { */ }";
    assert!(check_nesting(&jlex::tokenize(src)).balanced);
}

fn exhaustive_one_corruptions(max_pairs: usize) -> Vec<Vec<Sym>> {
    let mut all: Vec<Vec<Sym>> = (0..=max_pairs)
        .flat_map(oracle::dyck_words)
        .flat_map(|w| oracle::one_corruptions(&w))
        .collect();
    all.sort();
    all.dedup();
    all
}

#[test]
fn top_repair_is_minimal_on_all_small_corruptions() {
    let cases = exhaustive_one_corruptions(6);
    assert!(cases.len() > 1000);
    for sk in cases {
        let plans = repair_skeleton(&Skeleton::from_symbols(sk.clone()), 2).unwrap();
        let best = &plans[0];
        assert_eq!(Some(best.cost), oracle::bfs_min_cost(&sk, 3), "{sk:?}");
        for p in &plans {
            assert!(braces_balanced(&apply_edits(&sk, &p.edits)), "{sk:?} {p:?}");
            assert_eq!(p.cost, best.cost);
        }
    }
}

fn random_balanced(rng: &mut ChaCha8Rng, len: usize) -> Vec<Sym> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    while out.len() + depth < len {
        let r = rng.gen_range(0..4);
        let s = match r {
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

#[test]
fn top_repair_is_minimal_on_random_long_corruptions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3000 {
        let len = rng.gen_range(10..30);
        let base = random_balanced(&mut rng, len);
        let options = oracle::one_corruptions(&base);
        let sk = options[rng.gen_range(0..options.len())].clone();
        let plans = repair_skeleton(&Skeleton::from_symbols(sk.clone()), 2).unwrap();
        assert_eq!(Some(plans[0].cost), oracle::bfs_min_cost(&sk, 2), "{sk:?}");
    }
}

#[test]
fn budget_error_when_repair_needs_more_edits() {
    let sk = Skeleton::from_symbols(vec![Sym::Close, Sym::Close, Sym::Close]);
    assert!(repair_skeleton(&sk, 2).is_err());
    assert_eq!(repair_skeleton(&sk, 3).unwrap()[0].cost, 3);
}

#[test]
fn deleted_close_on_fixtures_is_restored() {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java");
    let files = synfix_core::corpusgen::load_corpus_dir(&dir).unwrap();
    let (mut total, mut exact) = (0, 0);
    for f in files.iter().take(60) {
        let original = jlex::significant_texts(&f.text);
        let lines: Vec<&str> = f.text.split_inclusive('\n').collect();
        for (i, l) in lines.iter().enumerate() {
            if l.trim() != "}" {
                continue;
            }
            let bad: String = lines.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, l)| *l).collect();
            let sk = abstract_skeleton(&jlex::tokenize(&bad));
            let plans = repair_skeleton(&sk, 2).unwrap();
            let fixed = project_repair(&bad, &sk, &plans[0].edits).unwrap();
            assert!(check_nesting(&jlex::tokenize(&fixed)).balanced);
            total += 1;
            if jlex::significant_texts(&fixed) == original {
                exact += 1;
            }
        }
    }
    assert!(total > 100);
    assert_eq!(exact, total, "{exact}/{total} restored exactly");
}

proptest! {
    #[test]
    fn every_plan_balances_and_costs_the_minimum(syms in prop::collection::vec(0u8..4, 0..24)) {
        let sk: Vec<Sym> = syms.iter().map(|&b| [Sym::Open, Sym::Close, Sym::Stmt, Sym::Hdr][b as usize]).collect();
        let need = min_repair_cost(&sk);
        prop_assume!(need <= 4);
        let plans = repair_skeleton(&Skeleton::from_symbols(sk.clone()), 4).unwrap();
        prop_assert!(!plans.is_empty());
        for p in plans.iter().take(200) {
            prop_assert_eq!(p.cost, need);
            prop_assert!(braces_balanced(&apply_edits(&sk, &p.edits)));
        }
    }

    #[test]
    fn skeleton_is_no_longer_than_token_count(src in "[a-z{};() =\n]{0,80}") {
        let stream = jlex::tokenize(&src);
        prop_assert!(abstract_skeleton(&stream).len() <= stream.significant_count());
    }
}

