pub mod bpe;
pub mod corpusgen;
pub mod diagnostics;
pub mod editdsl;
pub mod javasyn;
pub mod jlex;
pub mod nesting;
pub mod par;
