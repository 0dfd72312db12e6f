mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::{rigged_models, MULTIPLICATION};

fn synfix(args: &[&str], model_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_synfix"))
        .args(args)
        .env("SYNFIX_MODEL_DIR", model_dir)
        .env_remove("SYNFIX_JAVAC")
        .env("RUST_LOG", "warn")
        .output()
        .expect("run synfix")
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java")
}

#[test]
fn lex_prints_one_token_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("A.java");
    std::fs::write(&f, "int res = a x b;").unwrap();
    let out = synfix(&["lex", f.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let sig: Vec<&str> = text.lines().filter(|l| !l.contains("\tWhitespace\t")).collect();
    assert_eq!(sig.len(), 7);
    assert_eq!(sig[4], "1\t13\tIdentifier\tx");
}

#[test]
fn train_bpe_corrupt_and_eval_work_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let models = dir.path().join("models");
    let vocab = dir.path().join("vocab.txt");
    let out = synfix(&["train-bpe", "--size", "400", "--out", vocab.to_str().unwrap(), fixtures().to_str().unwrap()], &models);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(synfix_core::bpe::SubtokenVocab::load(&vocab).unwrap().size() <= 400);

    let data = dir.path().join("data");
    let out = synfix(
        &["corrupt", "--corpus", fixtures().to_str().unwrap(), "--n", "50", "--seed", "3", "--out", data.to_str().unwrap(), "--single-edit"],
        &models,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let ds = synfix_core::corpusgen::Dataset::read_dir(&data).unwrap();
    assert_eq!(ds.len(), 50);

    rigged_models().save(&models).unwrap();
    let report = dir.path().join("report.tsv");
    let out = synfix(&["eval", "--dataset", data.to_str().unwrap(), "--out", report.to_str().unwrap()], &models);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed = synfix_repair::eval::parse_tsv(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed.totals.n, ds.test.len());
    let bad = synfix(&["eval", "--dataset", data.to_str().unwrap(), "--out", "report.csv"], &models);
    assert!(!bad.status.success());
}

#[test]
fn fix_repairs_a_file_with_a_model_directory() {
    let dir = tempfile::tempdir().unwrap();
    rigged_models().save(dir.path()).unwrap();
    let f = dir.path().join("Multiplication.java");
    std::fs::write(&f, MULTIPLICATION).unwrap();
    let out = synfix(&["fix", f.to_str().unwrap()], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), MULTIPLICATION.replace("a x b", "a * b"));
    let out = synfix(&["fix", "--json", f.to_str().unwrap()], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "fixed");
}

#[test]
fn missing_models_fail_with_a_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("A.java");
    std::fs::write(&f, MULTIPLICATION).unwrap();
    let out = synfix(&["fix", f.to_str().unwrap()], &dir.path().join("nothing"));
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn serve_exits_nonzero_on_a_bad_model_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = synfix(&["serve", "--port", "0"], &dir.path().join("nothing"));
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("loading models"));
}
