//! Desk-scale training recipes shared by the CLI and the acceptance run.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use synfix_core::bpe::{self, SubtokenVocab};
use synfix_core::corpusgen::{Dataset, SourceFile, TrainingPair};
use synfix_neural::{AdamConfig, EncoderConfig, MaskingPolicy, Model};
use synfix_repair::linefix::{self, FinetuneConfig, FinetuneReport, LineFixModel};
use synfix_repair::mlm::{self, PretrainConfig, PretrainReport};
use synfix_repair::{Models, RepairError};

/// Two layers of width 64: small enough to train on one CPU core in minutes.
pub fn desk_encoder(vocab_size: usize, seed: u64) -> EncoderConfig {
    EncoderConfig { layers: 2, hidden: 64, heads: 4, ffn: 256, ..EncoderConfig::desk(vocab_size, seed) }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeskConfig {
    pub vocab_size: usize,
    pub fix_cap: usize,
    pub encoder: EncoderConfig,
    /// Zero steps skips pretraining; UnkFix then falls back to file identifiers.
    pub pretrain: PretrainConfig,
    pub finetune: FinetuneConfig,
    pub with_message: bool,
}

impl DeskConfig {
    pub fn new(seed: u64) -> Self {
        let vocab_size = 1024;
        DeskConfig {
            vocab_size,
            fix_cap: 64,
            encoder: desk_encoder(vocab_size, seed),
            pretrain: PretrainConfig {
                steps: 1500,
                batch_size: 16,
                window: 128,
                stride: 2,
                adam: AdamConfig { lr: 3e-3, warmup_frac: 0.05, ..AdamConfig::default() },
                policy: MaskingPolicy::default(),
                seed,
            },
            finetune: FinetuneConfig {
                epochs: 3,
                batch_size: 32,
                adam: AdamConfig { lr: 3e-3, warmup_frac: 0.05, ..AdamConfig::default() },
                seed,
            },
            with_message: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DeskReport {
    pub pretrain: Option<PretrainReport>,
    pub finetune: FinetuneReport,
    pub majority_baseline: f64,
    pub fixes: usize,
    pub train_pairs: usize,
}

pub fn pairs(split: &[synfix_core::corpusgen::GeneratedPair]) -> Vec<TrainingPair> {
    split.iter().map(|g| g.pair.clone()).collect()
}

/// Source files behind a split, in corpus order.
pub fn sources_of<'a>(files: &'a [SourceFile], split: &[synfix_core::corpusgen::GeneratedPair]) -> Vec<&'a str> {
    let ids: BTreeSet<&str> = split.iter().map(|p| p.pair.meta.file_id.as_str()).collect();
    files.iter().filter(|f| ids.contains(f.id.as_str())).map(|f| f.text.as_str()).collect()
}

pub fn train_vocab(sources: &[&str], size: usize, seed: u64) -> Result<SubtokenVocab, RepairError> {
    Ok(bpe::train_vocab(sources.iter().copied(), size, seed)?)
}

/// Pretrain a masked LM on the training files, scoring on the validation files.
pub fn pretrain_mlm(
    vocab: &SubtokenVocab,
    train: &[&str],
    held_out: &[&str],
    cfg: &DeskConfig,
    progress: impl FnMut(usize, f64),
) -> Result<(Model<f32>, PretrainReport), RepairError> {
    let mut enc = cfg.encoder.clone();
    enc.vocab_size = vocab.size();
    let mut m = mlm::new_mlm(enc)?;
    let r = mlm::pretrain(&mut m, vocab, train, held_out, &cfg.pretrain, progress)?;
    Ok((m, r))
}

/// Fine-tune a LineFix classifier, starting from the encoder of `mlm` when given.
pub fn finetune_linefix(
    vocab: &SubtokenVocab,
    mlm: Option<&Model<f32>>,
    train: &[TrainingPair],
    held_out: &[TrainingPair],
    cfg: &DeskConfig,
    progress: impl FnMut(usize, f64),
) -> Result<(LineFixModel, FinetuneReport, f64), RepairError> {
    let fixes = linefix::derive_fix_vocab(train, cfg.fix_cap)?;
    let baseline = linefix::majority_baseline(&fixes, train, held_out);
    let mut enc = cfg.encoder.clone();
    enc.vocab_size = vocab.size();
    let mut lf = LineFixModel::new(enc, fixes, cfg.with_message)?;
    if let Some(m) = mlm {
        lf.model.copy_matching(&m.params, |n| n.starts_with("enc."), true)?;
    }
    let r = linefix::finetune(&mut lf, vocab, train, held_out, &cfg.finetune, progress)?;
    Ok((lf, r, baseline))
}

/// The whole recipe: subtoken vocabulary, masked-LM pretraining and LineFix
/// fine-tuning on `dataset`, scored on its test split.
pub fn train_desk(
    files: &[SourceFile],
    dataset: &Dataset,
    cfg: &DeskConfig,
    mut log: impl FnMut(&str),
) -> Result<(Models, DeskReport), RepairError> {
    let train_src = sources_of(files, &dataset.train);
    let val_src = sources_of(files, &dataset.val);
    let vocab = train_vocab(&train_src, cfg.vocab_size, cfg.encoder.seed)?;
    log(&format!("subtoken vocabulary: {} ids", vocab.size()));
    let (mlm, pre) = if cfg.pretrain.steps > 0 {
        let every = (cfg.pretrain.steps / 10).max(1);
        let (m, r) = pretrain_mlm(&vocab, &train_src, &val_src, cfg, |s, l| {
            if s % every == 0 {
                log(&format!("pretrain step {s}: loss {l:.4}"));
            }
        })?;
        log(&format!(
            "pretrain: held-out perplexity {:.2} (unigram {:.2})",
            r.held_out_perplexity, r.unigram_perplexity
        ));
        (Some(m), Some(r))
    } else {
        (None, None)
    };
    let train = pairs(&dataset.train);
    let test = pairs(&dataset.test);
    let (lf, ft, baseline) =
        finetune_linefix(&vocab, mlm.as_ref(), &train, &test, cfg, |e, l| log(&format!("finetune epoch {e}: loss {l:.4}")))?;
    log(&format!("linefix held-out exact {:.4}, majority baseline {:.4}", ft.held_out.exact, baseline));
    let report = DeskReport { pretrain: pre, fixes: lf.fixes.len(), finetune: ft, majority_baseline: baseline, train_pairs: train.len() };
    Ok((Models { vocab, linefix: Some(lf), mlm }, report))
}
