//! A small transformer encoder with reverse-mode autodiff, written for
//! syntax-repair models that run on a CPU.

pub mod checkpoint;
pub mod gradcheck;
pub mod masking;
pub mod model;
pub mod optim;
pub mod params;
pub mod tape;
pub mod tensor;
pub mod train;

pub use checkpoint::{load, save, Checkpoint};
pub use masking::{apply_masking, MaskAction, Masked, MaskingPolicy};
pub use model::{Batch, EncoderConfig, LinePrediction, Model, ModelConfig, Sequence};
pub use optim::{Adam, AdamConfig};
pub use params::{Grads, ParamId, ParamStore};
pub use tape::{Tape, Var};
pub use tensor::{Float, Tensor};

#[derive(Debug, thiserror::Error)]
pub enum NeuralError {
    #[error("sequence of {len} subtokens exceeds the maximum of {max}")]
    SequenceTooLong { len: usize, max: usize },
    #[error("empty input sequence")]
    EmptySequence,
    #[error("token id {id} is outside the vocabulary of {vocab}")]
    TokenOutOfRange { id: u32, vocab: usize },
    #[error("loss became non-finite at step {step}")]
    NonFiniteLoss { step: usize },
    #[error("not a model checkpoint (bad magic)")]
    BadMagic,
    #[error("parameter {name}: expected shape {expected:?}, found {found:?}")]
    ShapeMismatch { name: String, expected: (usize, usize), found: (usize, usize) },
    #[error("checkpoint is truncated")]
    TruncatedFile,
    #[error("model has no {0} head")]
    MissingHead(&'static str),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("checkpoint header: {0}")]
    Json(#[from] serde_json::Error),
}
