use std::collections::BTreeMap;
use std::path::PathBuf;

use synfix_core::corpusgen::{generate_dataset, load_corpus_dir, CorruptionSpec, ErrorCategory, GeneratedPair};
use synfix_core::diagnostics::{BuiltinCompiler, Compiler};
use synfix_core::editdsl::{apply_plan, EditAction, EditCommand};
use synfix_core::jlex;

fn fixtures() -> Vec<synfix_core::corpusgen::SourceFile> {
    load_corpus_dir(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java")).unwrap()
}

fn line_texts(source: &str, line: u32) -> Vec<String> {
    jlex::tokenize(source).line_tokens(line).unwrap().into_iter().map(|t| t.text).collect()
}

/// Line by line: the gold edits for a line turn the corrupted line's tokens
/// into the reference line's tokens.
fn gold_reproduces_reference(p: &GeneratedPair) -> bool {
    let mut by_line: BTreeMap<u32, Vec<EditAction>> = BTreeMap::new();
    for g in &p.gold_edits {
        let command = EditCommand::parse(&g.cmd).expect("gold command parses");
        by_line.entry(g.line).or_default().push(EditAction { location: g.loc, command });
    }
    by_line.iter().all(|(&line, actions)| {
        let bad = line_texts(&p.bad_source, line);
        apply_plan(&bad, actions).ok() == Some(line_texts(&p.fixed_source, line))
    })
}

#[test]
fn gold_edits_reproduce_reference_tokens() {
    let spec = CorruptionSpec { seed: 99, ..CorruptionSpec::default() };
    let ds = generate_dataset(&fixtures(), &spec, 10_000, &BuiltinCompiler::default()).unwrap();
    assert_eq!(ds.len(), 10_000);
    let all: Vec<&GeneratedPair> = ds.train.iter().chain(&ds.val).chain(&ds.test).collect();
    let ok = all.iter().filter(|p| gold_reproduces_reference(p)).count();
    assert_eq!(ok, all.len());
    // whole-program view agrees with the line view
    for p in all.iter().take(500) {
        assert_eq!(p.bad_source.lines().count(), p.fixed_source.lines().count());
    }
}

#[test]
fn corrupted_programs_fail_and_references_compile() {
    let spec = CorruptionSpec::single_edit(3);
    let c = BuiltinCompiler::default();
    let ds = generate_dataset(&fixtures(), &spec, 400, &c).unwrap();
    for p in ds.train.iter().chain(&ds.test) {
        assert!(!c.compile(&p.bad_source).unwrap().success, "{}", p.pair.meta.id);
        assert!(c.compile(&p.fixed_source).unwrap().success);
        assert_eq!(p.gold_edits.len(), 1);
    }
}

#[test]
fn category_mixture_and_nesting_share_follow_the_configuration() {
    let spec = CorruptionSpec::single_edit(8);
    let ds = generate_dataset(&fixtures(), &spec, 4000, &BuiltinCompiler::default()).unwrap();
    let all: Vec<&GeneratedPair> = ds.train.iter().chain(&ds.val).chain(&ds.test).collect();
    let n = all.len() as f64;
    for (k, cat) in ErrorCategory::ALL.iter().enumerate() {
        let got = all.iter().filter(|p| p.pair.meta.category == *cat).count() as f64 / n;
        assert!((got - spec.category_mixture[k]).abs() < 0.04, "{cat:?}: {got}");
    }
    let nesting = all.iter().filter(|p| p.pair.meta.requires_blockfix).count() as f64 / n;
    assert!((nesting - spec.nesting_fraction).abs() < 0.03, "nesting share {nesting}");
}

#[test]
fn splits_are_disjoint_by_file_and_deterministic() {
    let spec = CorruptionSpec::single_edit(21);
    let c = BuiltinCompiler::default();
    let a = generate_dataset(&fixtures(), &spec, 300, &c).unwrap();
    let b = generate_dataset(&fixtures(), &spec, 300, &c).unwrap();
    assert_eq!(a, b);
    let files = |v: &[GeneratedPair]| v.iter().map(|p| p.pair.meta.file_id.clone()).collect::<std::collections::HashSet<_>>();
    assert!(files(&a.train).is_disjoint(&files(&a.test)));
    assert!(files(&a.train).is_disjoint(&files(&a.val)));
    assert!(files(&a.val).is_disjoint(&files(&a.test)));
    assert_eq!((a.train.len(), a.val.len(), a.test.len()), (240, 30, 30));
}
