//! Transformer encoder with a two-head multi-label classifier on the first
//! position and a masked-token prediction head.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::params::{ParamId, ParamStore};
use crate::tape::{sigmoid, Tape, Var};
use crate::tensor::{Float, Tensor};
use crate::NeuralError;

const LN_EPS: f64 = 1e-5;
const INIT_STD: f64 = 0.02;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncoderConfig {
    pub layers: usize,
    pub hidden: usize,
    pub heads: usize,
    /// Feed-forward width.
    pub ffn: usize,
    pub max_positions: usize,
    pub vocab_size: usize,
    /// Size of the token-in-line index embedding (index 0 means "none").
    pub word_positions: usize,
    pub seed: u64,
}

impl EncoderConfig {
    /// Desk-scale defaults: 4 layers, 128 hidden, 4 heads.
    pub fn desk(vocab_size: usize, seed: u64) -> Self {
        EncoderConfig {
            layers: 4,
            hidden: 128,
            heads: 4,
            ffn: 512,
            max_positions: 160,
            vocab_size,
            word_positions: 102,
            seed,
        }
    }

    pub fn tiny(vocab_size: usize, seed: u64) -> Self {
        EncoderConfig {
            layers: 1,
            hidden: 8,
            heads: 2,
            ffn: 16,
            max_positions: 150,
            vocab_size,
            word_positions: 12,
            seed,
        }
    }

    pub fn validate(&self) -> Result<(), NeuralError> {
        let bad = |m: String| Err(NeuralError::Config(m));
        if self.heads == 0 || self.hidden % self.heads != 0 {
            return bad(format!("hidden {} is not divisible by heads {}", self.hidden, self.heads));
        }
        if self.max_positions < 150 {
            return bad(format!("max_positions {} is below the 150-subtoken input budget", self.max_positions));
        }
        if self.vocab_size == 0 || self.ffn == 0 || self.word_positions == 0 {
            return bad("vocab_size, ffn and word_positions must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub encoder: EncoderConfig,
    /// Width of the location head; 0 when absent.
    pub locations: usize,
    /// Width of the fix-command head; 0 when absent.
    pub fixes: usize,
    pub mlm: bool,
}

impl ModelConfig {
    pub fn linefix(encoder: EncoderConfig, locations: usize, fixes: usize) -> Self {
        ModelConfig { encoder, locations, fixes, mlm: false }
    }

    pub fn mlm(encoder: EncoderConfig) -> Self {
        ModelConfig { encoder, locations: 0, fixes: 0, mlm: true }
    }

    pub fn has_linefix(&self) -> bool {
        self.locations > 0 && self.fixes > 0
    }
}

/// One input sequence: subtoken ids and, per subtoken, the 1-based index of
/// the source token it belongs to (0 when it belongs to none).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Sequence {
    pub ids: Vec<u32>,
    pub word_index: Vec<u32>,
}

impl Sequence {
    pub fn new(ids: Vec<u32>) -> Self {
        let word_index = vec![0; ids.len()];
        Sequence { ids, word_index }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

/// Sequences concatenated row-wise; attention stays within each segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Batch {
    pub ids: Vec<usize>,
    pub positions: Vec<usize>,
    pub words: Vec<usize>,
    pub segments: Vec<(usize, usize)>,
}

impl Batch {
    pub fn pack(cfg: &EncoderConfig, seqs: &[&Sequence]) -> Result<Self, NeuralError> {
        let mut b = Batch { ids: Vec::new(), positions: Vec::new(), words: Vec::new(), segments: Vec::new() };
        for s in seqs {
            if s.ids.is_empty() {
                return Err(NeuralError::EmptySequence);
            }
            if s.ids.len() > cfg.max_positions {
                return Err(NeuralError::SequenceTooLong { len: s.ids.len(), max: cfg.max_positions });
            }
            assert_eq!(s.ids.len(), s.word_index.len(), "word_index length");
            b.segments.push((b.ids.len(), s.ids.len()));
            for (p, (&id, &w)) in s.ids.iter().zip(&s.word_index).enumerate() {
                if id as usize >= cfg.vocab_size {
                    return Err(NeuralError::TokenOutOfRange { id, vocab: cfg.vocab_size });
                }
                b.ids.push(id as usize);
                b.positions.push(p);
                b.words.push((w as usize).min(cfg.word_positions - 1));
            }
        }
        Ok(b)
    }

    pub fn rows(&self) -> usize {
        self.ids.len()
    }

    /// Row of each segment's first position.
    pub fn first_rows(&self) -> Vec<usize> {
        self.segments.iter().map(|&(s, _)| s).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
struct LayerIds {
    ln1_g: ParamId,
    ln1_b: ParamId,
    qkv_w: ParamId,
    qkv_b: ParamId,
    out_w: ParamId,
    out_b: ParamId,
    ln2_g: ParamId,
    ln2_b: ParamId,
    ff1_w: ParamId,
    ff1_b: ParamId,
    ff2_w: ParamId,
    ff2_b: ParamId,
}

#[derive(Debug, Clone, PartialEq)]
struct Ids {
    tok: ParamId,
    pos: ParamId,
    word: ParamId,
    emb_ln_g: ParamId,
    emb_ln_b: ParamId,
    layers: Vec<LayerIds>,
    final_ln_g: ParamId,
    final_ln_b: ParamId,
    loc: Option<(ParamId, ParamId)>,
    fix: Option<(ParamId, ParamId)>,
    mlm: Option<MlmIds>,
}

#[derive(Debug, Clone, PartialEq)]
struct MlmIds {
    dense_w: ParamId,
    dense_b: ParamId,
    ln_g: ParamId,
    ln_b: ParamId,
    bias: ParamId,
}

/// Head outputs for one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct LinePrediction {
    pub loc_probs: Vec<f32>,
    pub fix_probs: Vec<f32>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model<T> {
    pub config: ModelConfig,
    pub params: ParamStore<T>,
    ids: Ids,
}

fn declare<T: Float>(store: &mut ParamStore<T>, cfg: &ModelConfig, rng: &mut ChaCha8Rng) -> Ids {
    let e = &cfg.encoder;
    let h = e.hidden;
    let tok = store.add_normal("enc.tok_emb", e.vocab_size, h, INIT_STD, rng);
    let pos = store.add_normal("enc.pos_emb", e.max_positions, h, INIT_STD, rng);
    let word = store.add_normal("enc.word_emb", e.word_positions, h, INIT_STD, rng);
    let emb_ln_g = store.add_const("enc.emb_ln.g", 1, h, 1.0);
    let emb_ln_b = store.add_const("enc.emb_ln.b", 1, h, 0.0);
    let layers = (0..e.layers)
        .map(|l| {
            let p = |s: &str| format!("enc.layer{l}.{s}");
            LayerIds {
                ln1_g: store.add_const(&p("ln1.g"), 1, h, 1.0),
                ln1_b: store.add_const(&p("ln1.b"), 1, h, 0.0),
                qkv_w: store.add_normal(&p("attn.qkv.w"), h, 3 * h, INIT_STD, rng),
                qkv_b: store.add_const(&p("attn.qkv.b"), 1, 3 * h, 0.0),
                out_w: store.add_normal(&p("attn.out.w"), h, h, INIT_STD, rng),
                out_b: store.add_const(&p("attn.out.b"), 1, h, 0.0),
                ln2_g: store.add_const(&p("ln2.g"), 1, h, 1.0),
                ln2_b: store.add_const(&p("ln2.b"), 1, h, 0.0),
                ff1_w: store.add_normal(&p("ffn.in.w"), h, e.ffn, INIT_STD, rng),
                ff1_b: store.add_const(&p("ffn.in.b"), 1, e.ffn, 0.0),
                ff2_w: store.add_normal(&p("ffn.out.w"), e.ffn, h, INIT_STD, rng),
                ff2_b: store.add_const(&p("ffn.out.b"), 1, h, 0.0),
            }
        })
        .collect();
    let final_ln_g = store.add_const("enc.final_ln.g", 1, h, 1.0);
    let final_ln_b = store.add_const("enc.final_ln.b", 1, h, 0.0);
    let (loc, fix) = if cfg.has_linefix() {
        (
            Some((
                store.add_normal("head.loc.w", h, cfg.locations, INIT_STD, rng),
                store.add_const("head.loc.b", 1, cfg.locations, 0.0),
            )),
            Some((
                store.add_normal("head.fix.w", h, cfg.fixes, INIT_STD, rng),
                store.add_const("head.fix.b", 1, cfg.fixes, 0.0),
            )),
        )
    } else {
        (None, None)
    };
    let mlm = cfg.mlm.then(|| MlmIds {
        dense_w: store.add_normal("mlm.dense.w", h, h, INIT_STD, rng),
        dense_b: store.add_const("mlm.dense.b", 1, h, 0.0),
        ln_g: store.add_const("mlm.ln.g", 1, h, 1.0),
        ln_b: store.add_const("mlm.ln.b", 1, h, 0.0),
        bias: store.add_const("mlm.bias", 1, e.vocab_size, 0.0),
    });
    Ids { tok, pos, word, emb_ln_g, emb_ln_b, layers, final_ln_g, final_ln_b, loc, fix, mlm }
}

impl<T: Float> Model<T> {
    pub fn new(config: ModelConfig) -> Result<Self, NeuralError> {
        config.encoder.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.encoder.seed);
        let mut params = ParamStore::new();
        let ids = declare(&mut params, &config, &mut rng);
        Ok(Model { config, params, ids })
    }

    /// Rebuild a model around existing parameters; names and shapes must match.
    pub fn from_params(config: ModelConfig, params: ParamStore<T>) -> Result<Self, NeuralError> {
        let mut fresh = Model::<T>::new(config)?;
        fresh.copy_matching(&params, |_| true, true)?;
        Ok(fresh)
    }

    /// Copy parameters whose name satisfies `filter` from `src`. With
    /// `require_all`, every parameter of `self` must be present in `src`.
    pub fn copy_matching(
        &mut self,
        src: &ParamStore<T>,
        filter: impl Fn(&str) -> bool,
        require_all: bool,
    ) -> Result<usize, NeuralError> {
        let mut copied = 0;
        let ids: Vec<ParamId> = self.params.ids().collect();
        for id in ids {
            let name = self.params.name(id).to_string();
            if !filter(&name) {
                continue;
            }
            match src.id(&name) {
                Some(sid) => {
                    let s = src.get(sid);
                    let d = self.params.get_mut(id);
                    if s.shape() != d.shape() {
                        return Err(NeuralError::ShapeMismatch { name, expected: d.shape(), found: s.shape() });
                    }
                    d.data.copy_from_slice(&s.data);
                    copied += 1;
                }
                None if require_all => {
                    return Err(NeuralError::ShapeMismatch { name, expected: self.params.get(id).shape(), found: (0, 0) })
                }
                None => {}
            }
        }
        Ok(copied)
    }

    pub fn cast<U: Float>(&self) -> Model<U> {
        Model { config: self.config.clone(), params: self.params.cast(), ids: self.ids.clone() }
    }

    pub fn batch(&self, seqs: &[&Sequence]) -> Result<Batch, NeuralError> {
        Batch::pack(&self.config.encoder, seqs)
    }

    /// Contextual embeddings for every packed row.
    pub fn encode(&self, tape: &mut Tape<'_, T>, batch: &Batch) -> Var {
        let heads = self.config.encoder.heads;
        let ids = &self.ids;
        let tok = tape.param(ids.tok);
        let pos = tape.param(ids.pos);
        let word = tape.param(ids.word);
        let a = tape.gather(tok, &batch.ids);
        let b = tape.gather(pos, &batch.positions);
        let c = tape.gather(word, &batch.words);
        let ab = tape.add(a, b);
        let x0 = tape.add(ab, c);
        let (g, bb) = (tape.param(ids.emb_ln_g), tape.param(ids.emb_ln_b));
        let mut x = tape.layer_norm(x0, g, bb, LN_EPS);
        for l in &ids.layers {
            let (g, b) = (tape.param(l.ln1_g), tape.param(l.ln1_b));
            let a = tape.layer_norm(x, g, b, LN_EPS);
            let (w, b) = (tape.param(l.qkv_w), tape.param(l.qkv_b));
            let qkv = tape.linear(a, w, b);
            let att = tape.attention(qkv, &batch.segments, heads);
            let (w, b) = (tape.param(l.out_w), tape.param(l.out_b));
            let o = tape.linear(att, w, b);
            x = tape.add(x, o);
            let (g, b) = (tape.param(l.ln2_g), tape.param(l.ln2_b));
            let f = tape.layer_norm(x, g, b, LN_EPS);
            let (w, b) = (tape.param(l.ff1_w), tape.param(l.ff1_b));
            let f = tape.linear(f, w, b);
            let f = tape.gelu(f);
            let (w, b) = (tape.param(l.ff2_w), tape.param(l.ff2_b));
            let f = tape.linear(f, w, b);
            x = tape.add(x, f);
        }
        let (g, b) = (tape.param(ids.final_ln_g), tape.param(ids.final_ln_b));
        tape.layer_norm(x, g, b, LN_EPS)
    }

    /// Location and fix logits from each segment's first-position embedding.
    pub fn linefix_logits(&self, tape: &mut Tape<'_, T>, batch: &Batch) -> Result<(Var, Var), NeuralError> {
        if self.ids.loc.is_none() || self.ids.fix.is_none() {
            return Err(NeuralError::MissingHead("linefix"));
        }
        let h = self.encode(tape, batch);
        Ok(self.linefix_from_hidden(tape, h, batch))
    }

    /// The heads alone, applied to precomputed hidden states.
    pub fn linefix_from_hidden(&self, tape: &mut Tape<'_, T>, hidden: Var, batch: &Batch) -> (Var, Var) {
        let ((lw, lb), (fw, fb)) = (self.ids.loc.expect("loc head"), self.ids.fix.expect("fix head"));
        let cls = tape.select_rows(hidden, &batch.first_rows());
        let (w, b) = (tape.param(lw), tape.param(lb));
        let loc = tape.linear(cls, w, b);
        let (w, b) = (tape.param(fw), tape.param(fb));
        let fix = tape.linear(cls, w, b);
        (loc, fix)
    }

    /// BCE(locations) + BCE(fixes), each averaged over its labels and the batch.
    pub fn linefix_loss(
        &self,
        tape: &mut Tape<'_, T>,
        batch: &Batch,
        loc_targets: &Tensor<T>,
        fix_targets: &Tensor<T>,
    ) -> Result<Var, NeuralError> {
        let (loc, fix) = self.linefix_logits(tape, batch)?;
        let a = tape.bce_with_logits(loc, loc_targets);
        let b = tape.bce_with_logits(fix, fix_targets);
        Ok(tape.sum(&[a, b]))
    }

    pub fn predict_linefix(&self, seq: &Sequence) -> Result<LinePrediction, NeuralError> {
        Ok(self.predict_linefix_batch(&[seq])?.pop().expect("one prediction"))
    }

    pub fn predict_linefix_batch(&self, seqs: &[&Sequence]) -> Result<Vec<LinePrediction>, NeuralError> {
        let batch = self.batch(seqs)?;
        let mut tape = Tape::new(&self.params);
        let (loc, fix) = self.linefix_logits(&mut tape, &batch)?;
        let probs = |t: &Tensor<T>, r: usize| t.row(r).iter().map(|&z| sigmoid(z).to_f64_lossy() as f32).collect();
        let (lv, fv) = (tape.value(loc), tape.value(fix));
        Ok((0..seqs.len()).map(|r| LinePrediction { loc_probs: probs(lv, r), fix_probs: probs(fv, r) }).collect())
    }

    /// Vocabulary logits at the selected packed rows.
    pub fn mlm_logits(&self, tape: &mut Tape<'_, T>, batch: &Batch, rows: &[usize]) -> Result<Var, NeuralError> {
        let Some(m) = self.ids.mlm.clone() else {
            return Err(NeuralError::MissingHead("mlm"));
        };
        let h = self.encode(tape, batch);
        let sel = tape.select_rows(h, rows);
        let (w, b) = (tape.param(m.dense_w), tape.param(m.dense_b));
        let t = tape.linear(sel, w, b);
        let t = tape.gelu(t);
        let (g, b) = (tape.param(m.ln_g), tape.param(m.ln_b));
        let t = tape.layer_norm(t, g, b, LN_EPS);
        // decoder tied to the input embedding
        let emb = tape.param(self.ids.tok);
        let logits = tape.matmul_t(t, emb);
        let bias = tape.param(m.bias);
        Ok(tape.add_row(logits, bias))
    }

    pub fn mlm_loss(
        &self,
        tape: &mut Tape<'_, T>,
        batch: &Batch,
        rows: &[usize],
        targets: &[usize],
    ) -> Result<Var, NeuralError> {
        let logits = self.mlm_logits(tape, batch, rows)?;
        Ok(tape.cross_entropy(logits, targets))
    }

    /// Softmax distribution over the vocabulary at `position` of `seq`.
    pub fn mlm_distribution(&self, seq: &Sequence, position: usize) -> Result<Vec<f64>, NeuralError> {
        let batch = self.batch(&[seq])?;
        let mut tape = Tape::new(&self.params);
        let logits = self.mlm_logits(&mut tape, &batch, &[position])?;
        let row: Vec<f64> = tape.value(logits).row(0).iter().map(|x| x.to_f64_lossy()).collect();
        let mx = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let exps: Vec<f64> = row.iter().map(|x| (x - mx).exp()).collect();
        let s: f64 = exps.iter().sum();
        Ok(exps.into_iter().map(|e| e / s).collect())
    }

    /// Contextual embedding matrix `len × hidden` for one sequence.
    pub fn encode_sequence(&self, seq: &Sequence) -> Result<Tensor<T>, NeuralError> {
        let batch = self.batch(&[seq])?;
        let mut tape = Tape::new(&self.params);
        let h = self.encode(&mut tape, &batch);
        Ok(tape.value(h).clone())
    }
}
