//! Line-level repair: input construction, the two-head classifier wrapper,
//! fine-tuning and label metrics.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use synfix_core::bpe::{self, SubtokenVocab};
use synfix_core::corpusgen::TrainingPair;
use synfix_core::editdsl::{self, EditCommand, FixVocab, NUM_LOCATIONS};
use synfix_core::jlex;
use synfix_neural::train::linefix_step;
use synfix_neural::{Adam, AdamConfig, Grads, LinePrediction, Model, ModelConfig, Sequence, Tensor};

use crate::RepairError;

pub const INPUT_BUDGET: usize = 150;
pub const MESSAGE_BUDGET: usize = 40;

/// Encode Java tokens one at a time; every subtoken carries the 1-based
/// index of its token.
pub fn encode_tokens(vocab: &SubtokenVocab, tokens: &[String], first_index: u32) -> (Vec<u32>, Vec<u32>) {
    let mut ids = Vec::new();
    let mut words = Vec::new();
    for (i, t) in tokens.iter().enumerate() {
        let pieces = vocab.encode(t);
        words.extend(std::iter::repeat(first_index + i as u32).take(pieces.len()));
        ids.extend(pieces);
    }
    (ids, words)
}

fn significant(text: &str) -> Vec<String> {
    jlex::significant_texts(text)
}

/// Everything the classifier sees about one flagged line.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LineContext<'a> {
    pub line: &'a str,
    pub message: &'a str,
    pub ctx_before: &'a str,
    pub ctx_after: &'a str,
}

impl<'a> LineContext<'a> {
    pub fn of_pair(p: &'a TrainingPair) -> Self {
        LineContext { line: &p.bad_line, message: &p.message, ctx_before: &p.ctx_before, ctx_after: &p.ctx_after }
    }
}

/// `[CLS] line [CTX] before [BOL] after [SEP] message`, at most 150 ids.
///
/// The line comes first, then up to 40 message subtokens; context fills what
/// remains. When the line and message alone overflow, the message shrinks
/// before the line tail is cut.
pub fn build_input(vocab: &SubtokenVocab, ctx: &LineContext<'_>, with_message: bool) -> Result<Sequence, RepairError> {
    let tokens = significant(ctx.line);
    if tokens.is_empty() {
        return Err(RepairError::EmptyLine);
    }
    let (mut line, mut line_words) = encode_tokens(vocab, &tokens, 1);
    let mut msg: Vec<u32> = if with_message { vocab.encode(ctx.message.trim()) } else { Vec::new() };
    msg.truncate(MESSAGE_BUDGET);
    let sep = usize::from(with_message);
    let room = INPUT_BUDGET - 1;
    if line.len() + sep + msg.len() > room {
        let keep_msg = room.saturating_sub(line.len() + sep);
        msg.truncate(keep_msg);
        line.truncate(room - sep - msg.len());
        line_words.truncate(line.len());
    }
    let mut free = room - line.len() - sep - msg.len();
    let mut ids = vec![bpe::CLS];
    let mut words = vec![0];
    ids.extend(&line);
    words.extend(&line_words);
    // a context segment needs its two markers plus at least one subtoken
    if free >= 3 {
        free -= 2;
        let before = encode_tokens(vocab, &significant(ctx.ctx_before), 0).0;
        let after = encode_tokens(vocab, &significant(ctx.ctx_after), 0).0;
        // symmetric share, unused room passes to the other side
        let half = free / 2;
        let (nb, na) = if before.len() <= half {
            (before.len(), after.len().min(free - before.len()))
        } else if after.len() <= free - half {
            (before.len().min(free - after.len()), after.len())
        } else {
            (half, free - half)
        };
        ids.push(bpe::CTX);
        ids.extend(&before[before.len() - nb..]);
        ids.push(bpe::BOL);
        ids.extend(&after[..na]);
        words.extend(std::iter::repeat(0).take(nb + na + 2));
    }
    if with_message {
        ids.push(bpe::SEP);
        ids.extend(&msg);
        words.extend(std::iter::repeat(0).take(msg.len() + 1));
    }
    debug_assert!(ids.len() <= INPUT_BUDGET);
    Ok(Sequence { ids, word_index: words })
}

/// Multi-hot targets for one pair: location classes and fix-vocabulary
/// indices, with out-of-vocabulary payloads relabelled to UNK.
pub fn targets(pair: &TrainingPair, fixes: &FixVocab) -> (Vec<usize>, Vec<usize>) {
    let mut locs = BTreeSet::new();
    let mut cmds = BTreeSet::new();
    for g in &pair.gold {
        let Some(cmd) = g.command() else { continue };
        if g.loc < NUM_LOCATIONS {
            locs.insert(g.loc);
            cmds.insert(fixes.label_of(&cmd));
        }
    }
    (locs.into_iter().collect(), cmds.into_iter().collect())
}

fn multi_hot(rows: &[Vec<usize>], width: usize) -> Tensor<f32> {
    let mut t = Tensor::zeros(rows.len(), width);
    for (r, labels) in rows.iter().enumerate() {
        for &l in labels {
            t.row_mut(r)[l] = 1.0;
        }
    }
    t
}

/// A trained (or fresh) classifier with the vocabularies it was built on.
#[derive(Debug, Clone)]
pub struct LineFixModel {
    pub model: Model<f32>,
    pub fixes: FixVocab,
    pub with_message: bool,
}

impl LineFixModel {
    pub fn new(encoder: synfix_neural::EncoderConfig, fixes: FixVocab, with_message: bool) -> Result<Self, RepairError> {
        let model = Model::new(ModelConfig::linefix(encoder, NUM_LOCATIONS, fixes.len()))?;
        Ok(LineFixModel { model, fixes, with_message })
    }

    pub fn input(&self, vocab: &SubtokenVocab, ctx: &LineContext<'_>) -> Result<Sequence, RepairError> {
        build_input(vocab, ctx, self.with_message)
    }

    pub fn predict(&self, vocab: &SubtokenVocab, ctx: &LineContext<'_>) -> Result<LinePrediction, RepairError> {
        Ok(self.model.predict_linefix(&self.input(vocab, ctx)?)?)
    }

    pub fn predict_batch(&self, seqs: &[Sequence]) -> Result<Vec<LinePrediction>, RepairError> {
        let refs: Vec<&Sequence> = seqs.iter().collect();
        let mut out = Vec::with_capacity(seqs.len());
        for chunk in refs.chunks(32) {
            out.extend(self.model.predict_linefix_batch(chunk)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FinetuneConfig {
    pub epochs: usize,
    pub batch_size: usize,
    pub adam: AdamConfig,
    pub seed: u64,
}

impl Default for FinetuneConfig {
    fn default() -> Self {
        FinetuneConfig { epochs: 5, batch_size: 16, adam: AdamConfig::default(), seed: 0 }
    }
}

/// Label-level scores on a labelled set.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct LabelMetrics {
    pub n: usize,
    pub loc_f1: f64,
    pub fix_f1: f64,
    /// Both predicted label sets equal the gold sets.
    pub exact: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FinetuneReport {
    /// Mean loss per epoch.
    pub epoch_loss: Vec<f64>,
    pub first_loss: f64,
    pub steps: usize,
    pub held_out: LabelMetrics,
}

/// Encoded examples with their label sets.
pub struct Encoded {
    pub seqs: Vec<Sequence>,
    pub locs: Vec<Vec<usize>>,
    pub fixes: Vec<Vec<usize>>,
}

pub fn encode_pairs(
    vocab: &SubtokenVocab,
    fixes: &FixVocab,
    pairs: &[TrainingPair],
    with_message: bool,
) -> Result<Encoded, RepairError> {
    let mut e = Encoded { seqs: Vec::new(), locs: Vec::new(), fixes: Vec::new() };
    for p in pairs {
        let (l, f) = targets(p, fixes);
        if l.is_empty() {
            continue;
        }
        e.seqs.push(build_input(vocab, &LineContext::of_pair(p), with_message)?);
        e.locs.push(l);
        e.fixes.push(f);
    }
    Ok(e)
}

/// Fine-tune every parameter on `train`, scoring `held_out` at the end.
/// Pairs without an in-range gold label on the flagged line are skipped.
pub fn finetune(
    lf: &mut LineFixModel,
    vocab: &SubtokenVocab,
    train: &[TrainingPair],
    held_out: &[TrainingPair],
    cfg: &FinetuneConfig,
    mut progress: impl FnMut(usize, f64),
) -> Result<FinetuneReport, RepairError> {
    let data = encode_pairs(vocab, &lf.fixes, train, lf.with_message)?;
    if data.seqs.is_empty() {
        return Err(RepairError::EmptyDataset);
    }
    let bs = cfg.batch_size.max(1);
    let steps_per_epoch = data.seqs.len().div_ceil(bs);
    let adam = AdamConfig { total_steps: steps_per_epoch * cfg.epochs, ..cfg.adam };
    let mut opt = Adam::new(adam, &lf.model.params);
    let mut grads = Grads::zeros_like(&lf.model.params);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut order: Vec<usize> = (0..data.seqs.len()).collect();
    let mut report = FinetuneReport::default();
    let nfix = lf.fixes.len();
    for epoch in 0..cfg.epochs {
        order.shuffle(&mut rng);
        let mut total = 0.0;
        for chunk in order.chunks(bs) {
            let seqs: Vec<&Sequence> = chunk.iter().map(|&i| &data.seqs[i]).collect();
            let loc = multi_hot(&chunk.iter().map(|&i| data.locs[i].clone()).collect::<Vec<_>>(), NUM_LOCATIONS);
            let fix = multi_hot(&chunk.iter().map(|&i| data.fixes[i].clone()).collect::<Vec<_>>(), nfix);
            let l = linefix_step(&mut lf.model, &mut opt, &mut grads, &seqs, &loc, &fix)?;
            if report.steps == 0 {
                report.first_loss = l;
            }
            report.steps += 1;
            total += l;
        }
        let mean = total / steps_per_epoch as f64;
        report.epoch_loss.push(mean);
        progress(epoch, mean);
    }
    report.held_out = evaluate_labels(lf, vocab, held_out)?;
    Ok(report)
}

/// Micro-averaged F1 over label sets.
pub fn micro_f1(pred: &[Vec<usize>], gold: &[Vec<usize>]) -> f64 {
    let (mut tp, mut fp, mut fneg) = (0usize, 0usize, 0usize);
    for (p, g) in pred.iter().zip(gold) {
        let ps: BTreeSet<_> = p.iter().collect();
        let gs: BTreeSet<_> = g.iter().collect();
        tp += ps.intersection(&gs).count();
        fp += ps.difference(&gs).count();
        fneg += gs.difference(&ps).count();
    }
    if tp == 0 {
        return 0.0;
    }
    2.0 * tp as f64 / (2 * tp + fp + fneg) as f64
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

pub fn evaluate_labels(lf: &LineFixModel, vocab: &SubtokenVocab, pairs: &[TrainingPair]) -> Result<LabelMetrics, RepairError> {
    let data = encode_pairs(vocab, &lf.fixes, pairs, lf.with_message)?;
    let preds = lf.predict_batch(&data.seqs)?;
    let (mut pl, mut pf) = (Vec::new(), Vec::new());
    for p in &preds {
        let (l, f) = editdsl::resolve_labels(&p.loc_probs, &p.fix_probs);
        pl.push(sorted(l));
        pf.push(sorted(f));
    }
    let exact = pl.iter().zip(&pf).zip(data.locs.iter().zip(&data.fixes)).filter(|((a, b), (c, d))| a == c && b == d).count();
    let n = data.seqs.len();
    Ok(LabelMetrics {
        n,
        loc_f1: micro_f1(&pl, &data.locs),
        fix_f1: micro_f1(&pf, &data.fixes),
        exact: if n == 0 { 0.0 } else { exact as f64 / n as f64 },
    })
}

/// Accuracy of always answering the most frequent training label pair.
pub fn majority_baseline(fixes: &FixVocab, train: &[TrainingPair], held_out: &[TrainingPair]) -> f64 {
    let key = |p: &TrainingPair| targets(p, fixes);
    let mut counts: HashMap<(Vec<usize>, Vec<usize>), usize> = HashMap::new();
    for p in train {
        let k = key(p);
        if !k.0.is_empty() {
            *counts.entry(k).or_default() += 1;
        }
    }
    let Some(best) = counts.into_iter().max_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0))).map(|(k, _)| k) else {
        return 0.0;
    };
    let held: Vec<_> = held_out.iter().map(key).filter(|k| !k.0.is_empty()).collect();
    if held.is_empty() {
        return 0.0;
    }
    held.iter().filter(|k| **k == best).count() as f64 / held.len() as f64
}

/// The fix vocabulary for a training set.
pub fn derive_fix_vocab(train: &[TrainingPair], cap: usize) -> Result<FixVocab, RepairError> {
    let cmds: Vec<EditCommand> = train.iter().flat_map(|p| p.gold.iter().filter_map(|g| g.command())).collect();
    Ok(FixVocab::derive(cmds.iter(), cap)?)
}
