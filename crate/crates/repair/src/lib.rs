//! Neural repair stages on top of `synfix-core`: LineFix classification,
//! masked-LM pretraining and UNK recovery, the staged pipeline and the
//! evaluation harness.

pub mod bundle;
pub mod eval;
pub mod linefix;
pub mod mlm;
pub mod pipeline;
pub mod unkfix;

pub use bundle::Models;
pub use pipeline::{Budget, RepairOutcome, Repairer, Stage, Status};

use synfix_core::bpe::BpeError;
use synfix_core::corpusgen::CorpusError;
use synfix_core::diagnostics::CompileError;
use synfix_core::editdsl::EditError;
use synfix_neural::NeuralError;

#[derive(Debug, thiserror::Error)]
pub enum RepairError {
    #[error("the line to repair has no tokens")]
    EmptyLine,
    #[error("no training examples")]
    EmptyDataset,
    #[error("no token candidates survived filtering")]
    NoCandidates,
    #[error("invalid UNK query: {0}")]
    BadQuery(&'static str),
    #[error("repair deadline exceeded")]
    Timeout,
    #[error("model unavailable: {0}")]
    ModelUnavailable(&'static str),
    #[error("malformed report: {0}")]
    Report(String),
    #[error(transparent)]
    Neural(#[from] NeuralError),
    #[error(transparent)]
    Edit(#[from] EditError),
    #[error(transparent)]
    Compile(#[from] CompileError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Bpe(#[from] BpeError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
