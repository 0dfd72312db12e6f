use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use synfix_core::corpusgen::{generate_dataset_in, load_corpus_dir, CorruptionSpec};
use synfix_core::diagnostics::{BuiltinCompiler, Compiler};
use synfix_core::jlex;
use synfix_core::nesting::{abstract_skeleton, repair_skeleton};
use synfix_core::par::{map_slice_in, Execution};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn corpus() -> Vec<synfix_core::corpusgen::SourceFile> {
    load_corpus_dir(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java")).unwrap()
}

fn compile_corpus(c: &mut Criterion) {
    let files = corpus();
    let compiler = BuiltinCompiler::default();
    let mut g = c.benchmark_group("compile_corpus");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| map_slice_in(exec, &files, |f| compiler.compile(&f.text).unwrap().success))
        });
    }
    g.finish();
}

fn block_repair(c: &mut Criterion) {
    // every fixture with its last closing brace removed
    let broken: Vec<String> = corpus()
        .into_iter()
        .map(|f| {
            let k = f.text.rfind('}').unwrap();
            format!("{}{}", &f.text[..k], &f.text[k + 1..])
        })
        .collect();
    let mut g = c.benchmark_group("block_repair");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                map_slice_in(exec, &broken, |src| {
                    let sk = abstract_skeleton(&jlex::tokenize(src));
                    repair_skeleton(&sk, 2).map(|p| p.len()).unwrap_or(0)
                })
            })
        });
    }
    g.finish();
}

fn corpus_generation(c: &mut Criterion) {
    let files = corpus();
    let compiler = BuiltinCompiler::default();
    let spec = CorruptionSpec::single_edit(1);
    let mut g = c.benchmark_group("generate_500_pairs");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| generate_dataset_in(exec, &files, &spec, 500, &compiler).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, compile_corpus, block_repair, corpus_generation);
criterion_main!(benches);
