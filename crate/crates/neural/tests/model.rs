use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synfix_neural::train::{linefix_step, mask_batch, mlm_step, MaskVocab};
use synfix_neural::{
    checkpoint, Adam, AdamConfig, EncoderConfig, Grads, MaskingPolicy, Model, ModelConfig, NeuralError, Sequence,
    Tape, Tensor,
};

fn seq(ids: &[u32]) -> Sequence {
    Sequence::new(ids.to_vec())
}

fn small(vocab: usize) -> EncoderConfig {
    EncoderConfig { layers: 2, hidden: 16, heads: 2, ffn: 32, ..EncoderConfig::tiny(vocab, 5) }
}

#[test]
fn attention_rows_are_distributions() {
    let model = Model::<f64>::new(ModelConfig::mlm(small(20))).unwrap();
    let (a, b) = (seq(&[1, 5, 7, 9]), seq(&[3, 4]));
    let batch = model.batch(&[&a, &b]).unwrap();
    let mut tape = Tape::new(&model.params);
    let h = model.encode(&mut tape, &batch);
    assert_eq!(tape.value(h).shape(), (6, 16));
    let mut found = 0;
    for p in tape.attention_maps() {
        found += 1;
        // heads × (16 + 4) entries, rows of width 4 then 2
        assert_eq!(p.len(), 2 * (16 + 4));
        let mut off = 0;
        for &len in &[4usize, 2] {
            for _ in 0..2 * len {
                let s: f64 = p[off..off + len].iter().sum();
                assert!((s - 1.0).abs() < 1e-12);
                off += len;
            }
        }
    }
    assert_eq!(found, 2);
}

#[test]
fn packed_sequences_do_not_see_each_other() {
    let model = Model::<f32>::new(ModelConfig::linefix(small(20), 5, 4)).unwrap();
    let a = seq(&[1, 5, 7, 9]);
    let alone = model.predict_linefix(&a).unwrap();
    let with_b = model.predict_linefix_batch(&[&a, &seq(&[3, 4, 11])]).unwrap();
    let with_c = model.predict_linefix_batch(&[&seq(&[19, 18]), &a]).unwrap();
    for (x, y) in alone.loc_probs.iter().zip(&with_b[0].loc_probs).chain(alone.loc_probs.iter().zip(&with_c[1].loc_probs)) {
        assert!((x - y).abs() < 1e-6);
    }
}

#[test]
fn positions_and_word_indices_change_the_encoding() {
    let model = Model::<f32>::new(ModelConfig::mlm(small(20))).unwrap();
    let a = model.encode_sequence(&seq(&[4, 4, 4])).unwrap();
    assert_ne!(a.row(0), a.row(1));
    let mut w = seq(&[4, 4, 4]);
    w.word_index = vec![1, 1, 2];
    let b = model.encode_sequence(&w).unwrap();
    assert_ne!(a.row(2), b.row(2));
}

#[test]
fn construction_is_deterministic_per_seed() {
    let a = Model::<f32>::new(ModelConfig::mlm(small(20))).unwrap();
    let b = Model::<f32>::new(ModelConfig::mlm(small(20))).unwrap();
    assert_eq!(a.params, b.params);
    let c = Model::<f32>::new(ModelConfig::mlm(EncoderConfig { seed: 6, ..small(20) })).unwrap();
    assert_ne!(a.params, c.params);
}

#[test]
fn initial_losses_match_uninformed_predictions() {
    let vocab = 50;
    let model = Model::<f64>::new(ModelConfig { mlm: true, ..ModelConfig::linefix(small(vocab), 6, 5) }).unwrap();
    let s = seq(&[3, 9, 12, 40, 7, 8]);
    let batch = model.batch(&[&s]).unwrap();
    let mut tape = Tape::new(&model.params);
    let l = model.mlm_loss(&mut tape, &batch, &[1, 3, 5], &[9, 40, 8]).unwrap();
    let ce = tape.value(l).data[0];
    assert!((ce - (vocab as f64).ln()).abs() < 0.1, "{ce}");
    let mut tape = Tape::new(&model.params);
    let t6 = Tensor::from_vec(1, 6, vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    let t5 = Tensor::from_vec(1, 5, vec![1.0, 0.0, 0.0, 1.0, 0.0]);
    let (loc, fix) = model.linefix_logits(&mut tape, &batch).unwrap();
    for (v, t) in [(loc, &t6), (fix, &t5)] {
        let b = tape.bce_with_logits(v, t);
        assert!((tape.value(b).data[0] - std::f64::consts::LN_2).abs() < 0.05);
    }
}

#[test]
fn heads_read_only_the_first_position() {
    let model = Model::<f64>::new(ModelConfig::linefix(small(20), 5, 4)).unwrap();
    let s = seq(&[2, 6, 8, 10]);
    let batch = model.batch(&[&s]).unwrap();
    let mut tape = Tape::new(&model.params);
    let h = model.encode(&mut tape, &batch);
    let mut zeroed = tape.value(h).clone();
    for r in 1..zeroed.rows {
        zeroed.row_mut(r).fill(0.0);
    }
    let full = model.linefix_from_hidden(&mut tape, h, &batch);
    let z = tape.input(zeroed);
    let only_first = model.linefix_from_hidden(&mut tape, z, &batch);
    assert_eq!(tape.value(full.0), tape.value(only_first.0));
    assert_eq!(tape.value(full.1), tape.value(only_first.1));
}

#[test]
fn batch_validation_errors() {
    let cfg = small(20);
    assert!(matches!(
        Model::<f32>::new(ModelConfig::mlm(EncoderConfig { heads: 3, ..cfg.clone() })),
        Err(NeuralError::Config(_))
    ));
    let model = Model::<f32>::new(ModelConfig::mlm(cfg)).unwrap();
    assert!(matches!(model.batch(&[&seq(&[])]), Err(NeuralError::EmptySequence)));
    assert!(matches!(model.batch(&[&seq(&[20])]), Err(NeuralError::TokenOutOfRange { id: 20, vocab: 20 })));
    let long = seq(&vec![1; 151]);
    assert!(matches!(model.batch(&[&long]), Err(NeuralError::SequenceTooLong { len: 151, max: 150 })));
    assert!(matches!(model.predict_linefix(&seq(&[1])), Err(NeuralError::MissingHead("linefix"))));
}

#[test]
fn masked_lm_learns_a_toy_language() {
    // sequences count upward from a random start, so every masked token is
    // predictable from its neighbours
    let vocab = 24u32;
    let mut model = Model::<f32>::new(ModelConfig::mlm(small(vocab as usize))).unwrap();
    let mut opt = Adam::new(AdamConfig { lr: 1e-2, total_steps: 400, ..Default::default() }, &model.params);
    let mut grads = Grads::zeros_like(&model.params);
    let mv = MaskVocab { mask_id: 3, first_regular: 4, vocab_size: vocab };
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let data: Vec<Sequence> = (0..16).map(|s| seq(&(0..8).map(|i| 4 + (s + i) % 20).collect::<Vec<_>>())).collect();
    let refs: Vec<&Sequence> = data.iter().collect();
    let mut losses = Vec::new();
    for _ in 0..400 {
        let mb = mask_batch(&refs, &MaskingPolicy::default(), mv, &mut rng);
        if let Some(l) = mlm_step(&mut model, &mut opt, &mut grads, &mb).unwrap() {
            losses.push(l);
        }
    }
    let head: f64 = losses[..20].iter().sum::<f64>() / 20.0;
    let tail: f64 = losses[losses.len() - 20..].iter().sum::<f64>() / 20.0;
    assert!(tail < head * 0.5, "{head} -> {tail}");
}

#[test]
fn classifier_fits_a_separable_task() {
    let mut model = Model::<f32>::new(ModelConfig::linefix(small(12), 3, 2)).unwrap();
    let mut opt = Adam::new(AdamConfig { lr: 1e-2, total_steps: 300, ..Default::default() }, &model.params);
    let mut grads = Grads::zeros_like(&model.params);
    // location = position of token 9; fix = whether token 10 appears
    let data = [
        (seq(&[1, 9, 5, 6]), [1.0, 0.0, 0.0], [1.0, 0.0]),
        (seq(&[1, 5, 9, 10]), [0.0, 1.0, 0.0], [0.0, 1.0]),
        (seq(&[1, 5, 6, 9]), [0.0, 0.0, 1.0], [1.0, 0.0]),
        (seq(&[1, 10, 9, 6]), [0.0, 1.0, 0.0], [0.0, 1.0]),
    ];
    let refs: Vec<&Sequence> = data.iter().map(|d| &d.0).collect();
    let loc = Tensor::from_vec(4, 3, data.iter().flat_map(|d| d.1).collect());
    let fix = Tensor::from_vec(4, 2, data.iter().flat_map(|d| d.2).collect());
    for _ in 0..300 {
        linefix_step(&mut model, &mut opt, &mut grads, &refs, &loc, &fix).unwrap();
    }
    for (p, d) in model.predict_linefix_batch(&refs).unwrap().iter().zip(&data) {
        for (x, t) in p.loc_probs.iter().zip(d.1).chain(p.fix_probs.iter().zip(d.2)) {
            assert!((x - t).abs() < 0.3, "{p:?}");
        }
    }
}

#[test]
fn checkpoints_round_trip_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let model = Model::<f32>::new(ModelConfig::linefix(small(30), 7, 3)).unwrap();
    let meta = serde_json::json!({"labels": ["a", "b"]});
    let (p1, p2) = (dir.path().join("a.bin"), dir.path().join("b.bin"));
    checkpoint::save(&model, &meta, &p1).unwrap();
    let back = checkpoint::load(&p1).unwrap();
    assert_eq!(back.model.params, model.params);
    assert_eq!(back.model.config, model.config);
    assert_eq!(back.meta, meta);
    checkpoint::save(&back.model, &back.meta, &p2).unwrap();
    assert_eq!(std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    let s = seq(&[1, 2, 3]);
    assert_eq!(model.predict_linefix(&s).unwrap(), back.model.predict_linefix(&s).unwrap());
}

#[test]
fn checkpoint_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.bin");
    std::fs::write(&bad, b"NOTAMODEL....").unwrap();
    assert!(matches!(checkpoint::load(&bad), Err(NeuralError::BadMagic)));
    std::fs::write(&bad, b"SYN").unwrap();
    assert!(matches!(checkpoint::load(&bad), Err(NeuralError::BadMagic)));

    // pretrained encoder with another vocabulary cannot be loaded
    let mlm = Model::<f32>::new(ModelConfig::mlm(small(30))).unwrap();
    let path = dir.path().join("mlm.bin");
    checkpoint::save(&mlm, &serde_json::Value::Null, &path).unwrap();
    let mut other = Model::<f32>::new(ModelConfig::linefix(small(31), 4, 4)).unwrap();
    assert!(matches!(
        checkpoint::load_into(&mut other, &path, |n| n.starts_with("enc.")),
        Err(NeuralError::ShapeMismatch { .. })
    ));
    let mut same = Model::<f32>::new(ModelConfig::linefix(small(30), 4, 4)).unwrap();
    let n = checkpoint::load_into(&mut same, &path, |n| n.starts_with("enc.")).unwrap();
    assert_eq!(n, mlm.params.iter().filter(|(n, _)| n.starts_with("enc.")).count());
    assert_eq!(same.params.get(same.params.id("enc.tok_emb").unwrap()), mlm.params.get(mlm.params.id("enc.tok_emb").unwrap()));
}
