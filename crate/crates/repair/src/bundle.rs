//! A model directory: subtoken vocabulary, fix vocabulary and the two
//! checkpoints.

use std::fs;
use std::path::Path;

use serde_json::json;
use synfix_core::bpe::SubtokenVocab;
use synfix_core::editdsl::FixVocab;
use synfix_neural::{checkpoint, Model};

use crate::linefix::LineFixModel;
use crate::pipeline::{NeuralLineFix, NeuralUnkFix};
use crate::RepairError;

pub const VOCAB_FILE: &str = "bpe.txt";
pub const FIXES_FILE: &str = "fixes.txt";
pub const LINEFIX_FILE: &str = "linefix.bin";
pub const MLM_FILE: &str = "mlm.bin";

#[derive(Debug, Clone)]
pub struct Models {
    pub vocab: SubtokenVocab,
    pub linefix: Option<LineFixModel>,
    pub mlm: Option<Model<f32>>,
}

impl Models {
    /// Load whatever is present; only the vocabulary is required.
    pub fn load(dir: &Path) -> Result<Self, RepairError> {
        let vocab = SubtokenVocab::load(&dir.join(VOCAB_FILE))?;
        let linefix = if dir.join(LINEFIX_FILE).exists() {
            let fixes = FixVocab::load(&dir.join(FIXES_FILE))?;
            let ck = checkpoint::load(&dir.join(LINEFIX_FILE))?;
            if !ck.model.config.has_linefix() {
                return Err(RepairError::ModelUnavailable("linefix checkpoint has no classification heads"));
            }
            let with_message = ck.meta.get("with_message").and_then(|v| v.as_bool()).unwrap_or(true);
            Some(LineFixModel { model: ck.model, fixes, with_message })
        } else {
            None
        };
        let mlm = if dir.join(MLM_FILE).exists() { Some(checkpoint::load(&dir.join(MLM_FILE))?.model) } else { None };
        Ok(Models { vocab, linefix, mlm })
    }

    pub fn save(&self, dir: &Path) -> Result<(), RepairError> {
        fs::create_dir_all(dir)?;
        self.vocab.save(&dir.join(VOCAB_FILE))?;
        if let Some(lf) = &self.linefix {
            lf.fixes.save(&dir.join(FIXES_FILE))?;
            checkpoint::save(&lf.model, &json!({ "with_message": lf.with_message }), &dir.join(LINEFIX_FILE))?;
        }
        if let Some(m) = &self.mlm {
            checkpoint::save(m, &json!({}), &dir.join(MLM_FILE))?;
        }
        Ok(())
    }

    pub fn line_predictor(&self) -> Option<NeuralLineFix<'_>> {
        self.linefix.as_ref().map(|model| NeuralLineFix { model, vocab: &self.vocab })
    }

    pub fn token_recoverer(&self) -> NeuralUnkFix<'_> {
        NeuralUnkFix { mlm: self.mlm.as_ref(), vocab: &self.vocab }
    }
}
