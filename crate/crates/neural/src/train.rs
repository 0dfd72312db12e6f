//! Single optimisation steps for the two training objectives.

use rand::Rng;

use crate::masking::{apply_masking, MaskingPolicy};
use crate::model::{Model, Sequence};
use crate::optim::Adam;
use crate::params::Grads;
use crate::tape::Tape;
use crate::tensor::Tensor;
use crate::NeuralError;

/// Vocabulary layout the masking step needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaskVocab {
    pub mask_id: u32,
    /// Ids below this are special tokens and never selected.
    pub first_regular: u32,
    pub vocab_size: u32,
}

/// A packed masked-LM batch: corrupted sequences plus, for every selected
/// position, its packed row and original id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlmBatch {
    pub seqs: Vec<Sequence>,
    pub rows: Vec<usize>,
    pub targets: Vec<usize>,
}

pub fn mask_batch(seqs: &[&Sequence], policy: &MaskingPolicy, vocab: MaskVocab, rng: &mut impl Rng) -> MlmBatch {
    let mut out = MlmBatch { seqs: Vec::with_capacity(seqs.len()), rows: Vec::new(), targets: Vec::new() };
    let mut offset = 0;
    for s in seqs {
        let m = apply_masking(&s.ids, policy, vocab.mask_id, vocab.first_regular, vocab.vocab_size, rng);
        out.rows.extend(m.positions.iter().map(|p| offset + p));
        out.targets.extend(m.targets.iter().map(|&t| t as usize));
        offset += s.len();
        out.seqs.push(Sequence { ids: m.ids, word_index: s.word_index.clone() });
    }
    out
}

fn finish(model: &mut Model<f32>, opt: &mut Adam<f32>, grads: &mut Grads<f32>, loss: f64) -> Result<f64, NeuralError> {
    if !loss.is_finite() {
        return Err(NeuralError::NonFiniteLoss { step: opt.steps_taken() });
    }
    opt.step(&mut model.params, grads);
    Ok(loss)
}

/// One masked-LM update. Returns the loss, or `None` when nothing was
/// selected for prediction.
pub fn mlm_step(
    model: &mut Model<f32>,
    opt: &mut Adam<f32>,
    grads: &mut Grads<f32>,
    batch: &MlmBatch,
) -> Result<Option<f64>, NeuralError> {
    if batch.rows.is_empty() {
        return Ok(None);
    }
    grads.zero();
    let refs: Vec<&Sequence> = batch.seqs.iter().collect();
    let loss = {
        let packed = model.batch(&refs)?;
        let mut tape = Tape::new(&model.params);
        let l = model.mlm_loss(&mut tape, &packed, &batch.rows, &batch.targets)?;
        tape.backward(l, grads);
        tape.value(l).data[0] as f64
    };
    finish(model, opt, grads, loss).map(Some)
}

/// One update of both classification heads and the encoder. `loc` and `fix`
/// hold one multi-hot row per sequence.
pub fn linefix_step(
    model: &mut Model<f32>,
    opt: &mut Adam<f32>,
    grads: &mut Grads<f32>,
    seqs: &[&Sequence],
    loc: &Tensor<f32>,
    fix: &Tensor<f32>,
) -> Result<f64, NeuralError> {
    grads.zero();
    let loss = {
        let packed = model.batch(seqs)?;
        let mut tape = Tape::new(&model.params);
        let l = model.linefix_loss(&mut tape, &packed, loc, fix)?;
        tape.backward(l, grads);
        tape.value(l).data[0] as f64
    };
    finish(model, opt, grads, loss)
}
