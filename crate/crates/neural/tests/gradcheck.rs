use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synfix_neural::gradcheck::{check, GradcheckOptions};
use synfix_neural::{EncoderConfig, Model, ModelConfig, Sequence, Tape, Tensor};

fn random_seq(rng: &mut ChaCha8Rng, len: usize, vocab: usize, words: u32) -> Sequence {
    Sequence {
        ids: (0..len).map(|_| rng.gen_range(0..vocab as u32)).collect(),
        word_index: (0..len).map(|_| rng.gen_range(0..words)).collect(),
    }
}

fn multi_hot(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Tensor<f64> {
    Tensor::from_vec(rows, cols, (0..rows * cols).map(|_| if rng.gen_bool(0.3) { 1.0 } else { 0.0 }).collect())
}

/// Perturb the init so LayerNorm gains and biases are not at symmetric points.
fn jitter(model: &mut Model<f64>, rng: &mut ChaCha8Rng, scale: f64) {
    let ids: Vec<_> = model.params.ids().collect();
    for id in ids {
        for x in &mut model.params.get_mut(id).data {
            *x += rng.gen_range(-scale..scale);
        }
    }
}

struct Case {
    layers: usize,
    hidden: usize,
    heads: usize,
    ffn: usize,
    vocab: usize,
    lens: &'static [usize],
}

const CASES: [Case; 5] = [
    Case { layers: 1, hidden: 8, heads: 2, ffn: 16, vocab: 11, lens: &[5] },
    Case { layers: 2, hidden: 8, heads: 1, ffn: 8, vocab: 9, lens: &[4, 6] },
    Case { layers: 1, hidden: 12, heads: 3, ffn: 12, vocab: 13, lens: &[3, 1, 5] },
    Case { layers: 2, hidden: 8, heads: 4, ffn: 16, vocab: 7, lens: &[7] },
    Case { layers: 3, hidden: 4, heads: 2, ffn: 8, vocab: 10, lens: &[2, 4] },
];

#[test]
fn encoder_and_both_heads_match_finite_differences() {
    let start = Instant::now();
    for (k, c) in CASES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + k as u64);
        let enc = EncoderConfig {
            layers: c.layers,
            hidden: c.hidden,
            heads: c.heads,
            ffn: c.ffn,
            vocab_size: c.vocab,
            ..EncoderConfig::tiny(c.vocab, k as u64)
        };
        let (nloc, nfix) = (4 + k, 3 + k);
        let mut model = Model::<f64>::new(ModelConfig::linefix(enc, nloc, nfix)).unwrap();
        jitter(&mut model, &mut rng, 0.3);
        let seqs: Vec<Sequence> = c.lens.iter().map(|&l| random_seq(&mut rng, l, c.vocab, 12)).collect();
        let refs: Vec<&Sequence> = seqs.iter().collect();
        let batch = model.batch(&refs).unwrap();
        let loc = multi_hot(&mut rng, seqs.len(), nloc);
        let fix = multi_hot(&mut rng, seqs.len(), nfix);
        let report = check(
            &mut model,
            |m: &Model<f64>, tape: &mut Tape<'_, f64>| m.linefix_loss(tape, &batch, &loc, &fix).unwrap(),
            |_| true,
            GradcheckOptions::default(),
        );
        assert!(report.max_rel_err < 1e-4, "case {k}: {report:?}");
        assert!(report.checked > 100);
    }
    assert!(start.elapsed().as_secs() < 120);
}

#[test]
fn masked_lm_head_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let enc = EncoderConfig { layers: 1, hidden: 8, heads: 2, ffn: 8, ..EncoderConfig::tiny(9, 3) };
    let mut model = Model::<f64>::new(ModelConfig::mlm(enc)).unwrap();
    jitter(&mut model, &mut rng, 0.3);
    let seqs = [random_seq(&mut rng, 5, 9, 12), random_seq(&mut rng, 3, 9, 12)];
    let batch = model.batch(&[&seqs[0], &seqs[1]]).unwrap();
    let rows = [0, 2, 6];
    let targets = [1, 8, 4];
    let report = check(
        &mut model,
        |m: &Model<f64>, tape: &mut Tape<'_, f64>| m.mlm_loss(tape, &batch, &rows, &targets).unwrap(),
        |_| true,
        GradcheckOptions::default(),
    );
    assert!(report.max_rel_err < 1e-4, "{report:?}");
}

#[test]
fn a_wrong_gradient_is_detected() {
    // scaling the loss after backward must not go unnoticed
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut model = Model::<f64>::new(ModelConfig::linefix(EncoderConfig::tiny(6, 1), 2, 2)).unwrap();
    jitter(&mut model, &mut rng, 0.3);
    let seq = random_seq(&mut rng, 3, 6, 4);
    let batch = model.batch(&[&seq]).unwrap();
    let t = Tensor::from_vec(1, 2, vec![1.0, 0.0]);
    // the loss value depends on a parameter through a path the tape does not see
    let report = check(
        &mut model,
        |m: &Model<f64>, tape: &mut Tape<'_, f64>| {
            let l = m.linefix_loss(tape, &batch, &t, &t).unwrap();
            let hidden = m.params.get(m.params.id("head.loc.b").unwrap()).data[0];
            let extra = tape.input(Tensor::scalar(hidden * hidden));
            tape.sum(&[l, extra])
        },
        |n| n == "head.loc.b",
        GradcheckOptions::default(),
    );
    assert!(report.failures > 0);
    assert_eq!(report.worst.unwrap().0, "head.loc.b");
}
