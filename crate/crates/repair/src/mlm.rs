//! Masked-LM pretraining over source windows, and the encoding those
//! windows share with token recovery.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use synfix_core::bpe::{self, SubtokenVocab};
use synfix_core::jlex;
use synfix_neural::train::{mask_batch, mlm_step, MaskVocab};
use synfix_neural::{Adam, AdamConfig, EncoderConfig, Grads, MaskingPolicy, Model, ModelConfig, Sequence, Tape};

use crate::linefix::encode_tokens;
use crate::RepairError;

/// One source line encoded as `[BOL] subtokens`, word indices restarting at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedLine {
    pub line: u32,
    pub ids: Vec<u32>,
    pub words: Vec<u32>,
}

pub fn encode_lines(vocab: &SubtokenVocab, source: &str) -> Vec<EncodedLine> {
    let stream = jlex::tokenize(source);
    let mut out: Vec<EncodedLine> = Vec::new();
    let mut cur: Vec<String> = Vec::new();
    let mut cur_line = 0;
    let flush = |line: u32, toks: &mut Vec<String>, out: &mut Vec<EncodedLine>| {
        if toks.is_empty() {
            return;
        }
        let (ids, words) = encode_tokens(vocab, toks, 1);
        out.push(EncodedLine {
            line,
            ids: std::iter::once(bpe::BOL).chain(ids).collect(),
            words: std::iter::once(0).chain(words).collect(),
        });
        toks.clear();
    };
    for t in stream.significant() {
        if t.line != cur_line {
            flush(cur_line, &mut cur, &mut out);
            cur_line = t.line;
        }
        cur.push(t.text.clone());
    }
    flush(cur_line, &mut cur, &mut out);
    out
}

/// Consecutive-line windows of at most `max_len` ids (including `[CLS]`),
/// one starting at every `stride`-th line. Lines longer than a window are
/// cut.
pub fn windows(lines: &[EncodedLine], max_len: usize, stride: usize) -> Vec<Sequence> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < lines.len() {
        let mut s = Sequence { ids: vec![bpe::CLS], word_index: vec![0] };
        for l in &lines[start..] {
            if s.len() + l.ids.len() > max_len {
                if s.len() == 1 {
                    let take = max_len - 1;
                    s.ids.extend(&l.ids[..take]);
                    s.word_index.extend(&l.words[..take]);
                }
                break;
            }
            s.ids.extend(&l.ids);
            s.word_index.extend(&l.words);
        }
        out.push(s);
        start += stride.max(1);
    }
    out
}

pub fn mask_vocab(vocab: &SubtokenVocab) -> MaskVocab {
    MaskVocab { mask_id: bpe::MASK, first_regular: bpe::NUM_SPECIAL, vocab_size: vocab.size() as u32 }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PretrainConfig {
    pub steps: usize,
    pub batch_size: usize,
    pub window: usize,
    pub stride: usize,
    pub adam: AdamConfig,
    pub policy: MaskingPolicy,
    pub seed: u64,
}

impl Default for PretrainConfig {
    fn default() -> Self {
        PretrainConfig {
            steps: 2000,
            batch_size: 16,
            window: 128,
            stride: 2,
            adam: AdamConfig { lr: 1e-3, ..AdamConfig::default() },
            policy: MaskingPolicy::default(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PretrainReport {
    pub first_loss: f64,
    /// Mean loss over the last tenth of the steps.
    pub final_loss: f64,
    pub held_out_perplexity: f64,
    /// Perplexity of the training-set unigram distribution on the same
    /// held-out targets.
    pub unigram_perplexity: f64,
}

/// Pretrain `model` on windows of `train_sources`.
pub fn pretrain(
    model: &mut Model<f32>,
    vocab: &SubtokenVocab,
    train_sources: &[&str],
    held_out_sources: &[&str],
    cfg: &PretrainConfig,
    mut progress: impl FnMut(usize, f64),
) -> Result<PretrainReport, RepairError> {
    let make = |srcs: &[&str]| -> Vec<Sequence> {
        srcs.iter().flat_map(|s| windows(&encode_lines(vocab, s), cfg.window, cfg.stride)).collect()
    };
    let data = make(train_sources);
    if data.is_empty() {
        return Err(RepairError::EmptyDataset);
    }
    let mv = mask_vocab(vocab);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut opt = Adam::new(AdamConfig { total_steps: cfg.steps, ..cfg.adam }, &model.params);
    let mut grads = Grads::zeros_like(&model.params);
    let mut order: Vec<usize> = (0..data.len()).collect();
    order.shuffle(&mut rng);
    let mut cursor = 0;
    let mut losses = Vec::with_capacity(cfg.steps);
    // with a static policy every window keeps the mask drawn on first use
    let mut fixed: Vec<Option<synfix_neural::train::MlmBatch>> = vec![None; if cfg.policy.dynamic { 0 } else { data.len() }];
    while losses.len() < cfg.steps {
        if cursor + cfg.batch_size > order.len() {
            order.shuffle(&mut rng);
            cursor = 0;
        }
        let idx = &order[cursor..(cursor + cfg.batch_size).min(order.len())];
        cursor += cfg.batch_size;
        let batch = if cfg.policy.dynamic {
            let refs: Vec<&Sequence> = idx.iter().map(|&i| &data[i]).collect();
            mask_batch(&refs, &cfg.policy, mv, &mut rng)
        } else {
            let mut parts = Vec::new();
            for &i in idx {
                if fixed[i].is_none() {
                    fixed[i] = Some(mask_batch(&[&data[i]], &cfg.policy, mv, &mut rng));
                }
                parts.push(fixed[i].clone().unwrap());
            }
            concat(parts)
        };
        if let Some(l) = mlm_step(model, &mut opt, &mut grads, &batch)? {
            progress(losses.len(), l);
            losses.push(l);
        }
    }
    let tail = (losses.len() / 10).max(1);
    let final_loss = losses[losses.len() - tail..].iter().sum::<f64>() / tail as f64;

    // held-out perplexity against a unigram model of the training windows
    let mut counts = vec![1.0f64; vocab.size()];
    for s in &data {
        for &id in &s.ids {
            counts[id as usize] += 1.0;
        }
    }
    let total: f64 = counts.iter().sum();
    let held = make(held_out_sources);
    let mut eval_rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    let (mut nll, mut uni, mut n) = (0.0, 0.0, 0usize);
    for chunk in held.chunks(cfg.batch_size.max(1)) {
        let refs: Vec<&Sequence> = chunk.iter().collect();
        let mb = mask_batch(&refs, &cfg.policy, mv, &mut eval_rng);
        if mb.rows.is_empty() {
            continue;
        }
        let seqs: Vec<&Sequence> = mb.seqs.iter().collect();
        let packed = model.batch(&seqs)?;
        let mut tape = Tape::new(&model.params);
        let l = model.mlm_loss(&mut tape, &packed, &mb.rows, &mb.targets)?;
        nll += tape.value(l).data[0] as f64 * mb.rows.len() as f64;
        uni += mb.targets.iter().map(|&t| -(counts[t] / total).ln()).sum::<f64>();
        n += mb.rows.len();
    }
    let ppl = |x: f64| if n == 0 { f64::NAN } else { (x / n as f64).exp() };
    Ok(PretrainReport {
        first_loss: losses[0],
        final_loss,
        held_out_perplexity: ppl(nll),
        unigram_perplexity: ppl(uni),
    })
}

fn concat(parts: Vec<synfix_neural::train::MlmBatch>) -> synfix_neural::train::MlmBatch {
    let mut out = synfix_neural::train::MlmBatch { seqs: Vec::new(), rows: Vec::new(), targets: Vec::new() };
    let mut offset = 0;
    for p in parts {
        out.rows.extend(p.rows.iter().map(|r| r + offset));
        out.targets.extend(p.targets);
        for s in p.seqs {
            offset += s.len();
            out.seqs.push(s);
        }
    }
    out
}

/// A fresh masked-LM model.
pub fn new_mlm(encoder: EncoderConfig) -> Result<Model<f32>, RepairError> {
    Ok(Model::new(ModelConfig::mlm(encoder))?)
}
