use std::path::Path;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use synfix_core::bpe;
use synfix_core::corpusgen::{self, CorruptionSpec};
use synfix_core::diagnostics::BuiltinCompiler;
use synfix_core::par::Execution;
use synfix_repair::eval;
use synfix_repair::pipeline::NeuralUnkFix;
use synfix_repair::{Budget, Repairer};

fn bench(c: &mut Criterion) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/java");
    let files = corpusgen::load_corpus_dir(&dir).unwrap();
    let compiler = BuiltinCompiler::default();
    let ds = corpusgen::generate_dataset(&files, &CorruptionSpec::single_edit(11), 400, &compiler).unwrap();
    let vocab = bpe::train_vocab(files.iter().map(|f| f.text.as_str()), 512, 0).unwrap();
    let unk = NeuralUnkFix { mlm: None, vocab: &vocab };
    let r = Repairer { compiler: &compiler, line: None, unk: &unk, budget: Budget::default(), deadline: None };
    let mut g = c.benchmark_group("blockfix_eval");
    g.sample_size(10);
    for (name, exec) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| eval::evaluate_in(exec, &r, &ds.train).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
