use std::path::PathBuf;
use std::time::Instant;

use synfix_core::corpusgen::load_corpus_dir;
use synfix_core::diagnostics::{BuiltinCompiler, Compiler};
use synfix_core::jlex;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java")
}

#[test]
fn lexer_round_trip_on_fixture_corpus() {
    let files = load_corpus_dir(&fixture_dir()).unwrap();
    assert!(files.len() >= 200, "only {} fixtures", files.len());
    let start = Instant::now();
    for f in &files {
        let stream = jlex::tokenize(&f.text);
        assert_eq!(jlex::detokenize(&stream), f.text, "{}", f.id);
    }
    assert!(start.elapsed().as_secs_f64() < 5.0);
}

#[test]
fn fixtures_compile_and_span_lengths() {
    let files = load_corpus_dir(&fixture_dir()).unwrap();
    let compiler = BuiltinCompiler::default();
    let mut lengths = Vec::new();
    for f in &files {
        let r = compiler.compile(&f.text).unwrap();
        assert!(r.success, "{}: {:?}", f.id, r.diagnostics);
        lengths.push(jlex::tokenize(&f.text).significant_count());
    }
    lengths.sort();
    assert!(lengths[0] >= 20, "shortest fixture has {} tokens", lengths[0]);
    assert!(*lengths.last().unwrap() <= 2500);
    assert!(lengths.iter().filter(|&&n| n <= 1000).count() >= 180);
    assert!(lengths.iter().any(|&n| n > 500));
}
