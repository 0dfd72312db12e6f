//! Binary checkpoints: an 8-byte magic, a little-endian `u32` header length,
//! a JSON header (config, free-form metadata, tensor table) and then every
//! tensor as little-endian `f32` in table order.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::model::{Model, ModelConfig};
use crate::params::ParamStore;
use crate::tensor::{Float, Tensor};
use crate::NeuralError;

pub const MAGIC: &[u8; 8] = b"SYNFIX01";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct TensorEntry {
    name: String,
    rows: usize,
    cols: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct Header {
    config: ModelConfig,
    meta: serde_json::Value,
    tensors: Vec<TensorEntry>,
}

/// A loaded checkpoint: the model and whatever metadata was saved with it.
#[derive(Debug, Clone)]
pub struct Checkpoint {
    pub model: Model<f32>,
    pub meta: serde_json::Value,
}

pub fn write_to<T: Float>(model: &Model<T>, meta: &serde_json::Value, w: &mut impl Write) -> Result<(), NeuralError> {
    let header = Header {
        config: model.config.clone(),
        meta: meta.clone(),
        tensors: model
            .params
            .iter()
            .map(|(name, t)| TensorEntry { name: name.to_string(), rows: t.rows, cols: t.cols })
            .collect(),
    };
    let json = serde_json::to_vec(&header)?;
    let len = u32::try_from(json.len()).map_err(|_| NeuralError::Config("checkpoint header too large".into()))?;
    w.write_all(MAGIC)?;
    w.write_all(&len.to_le_bytes())?;
    w.write_all(&json)?;
    let mut buf = Vec::new();
    for (_, t) in model.params.iter() {
        buf.clear();
        for x in &t.data {
            buf.extend_from_slice(&(x.to_f64_lossy() as f32).to_le_bytes());
        }
        w.write_all(&buf)?;
    }
    Ok(())
}

fn read_exact(r: &mut impl Read, buf: &mut [u8]) -> Result<(), NeuralError> {
    r.read_exact(buf).map_err(|e| match e.kind() {
        std::io::ErrorKind::UnexpectedEof => NeuralError::TruncatedFile,
        _ => NeuralError::Io(e),
    })
}

pub fn read_from(r: &mut impl Read) -> Result<Checkpoint, NeuralError> {
    let mut magic = [0u8; 8];
    read_exact(r, &mut magic).map_err(|e| match e {
        NeuralError::TruncatedFile => NeuralError::BadMagic,
        e => e,
    })?;
    if &magic != MAGIC {
        return Err(NeuralError::BadMagic);
    }
    let mut len = [0u8; 4];
    read_exact(r, &mut len)?;
    let mut json = vec![0u8; u32::from_le_bytes(len) as usize];
    read_exact(r, &mut json)?;
    let header: Header = serde_json::from_slice(&json)?;
    let mut store = ParamStore::<f32>::new();
    for e in &header.tensors {
        let mut bytes = vec![0u8; e.rows * e.cols * 4];
        read_exact(r, &mut bytes)?;
        let data = bytes.chunks_exact(4).map(|c| f32::from_le_bytes([c[0], c[1], c[2], c[3]])).collect();
        store.add(e.name.clone(), Tensor::from_vec(e.rows, e.cols, data));
    }
    let model = Model::from_params(header.config, store)?;
    Ok(Checkpoint { model, meta: header.meta })
}

pub fn save<T: Float>(model: &Model<T>, meta: &serde_json::Value, path: &Path) -> Result<(), NeuralError> {
    let mut buf = Vec::new();
    write_to(model, meta, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<Checkpoint, NeuralError> {
    let bytes = fs::read(path)?;
    read_from(&mut bytes.as_slice())
}

/// Load `path` and copy the parameters accepted by `filter` into `model`,
/// checking shapes. Returns how many tensors were copied.
pub fn load_into(model: &mut Model<f32>, path: &Path, filter: impl Fn(&str) -> bool) -> Result<usize, NeuralError> {
    let ck = load(path)?;
    model.copy_matching(&ck.model.params, filter, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EncoderConfig;

    #[test]
    fn truncated_data_is_reported() {
        let m = Model::<f32>::new(ModelConfig::mlm(EncoderConfig::tiny(10, 1))).unwrap();
        let mut buf = Vec::new();
        write_to(&m, &serde_json::Value::Null, &mut buf).unwrap();
        buf.truncate(buf.len() - 3);
        assert!(matches!(read_from(&mut buf.as_slice()), Err(NeuralError::TruncatedFile)));
    }
}
