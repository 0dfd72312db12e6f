//! Named parameter storage and matching gradient buffers.

use std::collections::HashMap;

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::tensor::{Float, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamId(pub usize);

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamStore<T> {
    names: Vec<String>,
    tensors: Vec<Tensor<T>>,
    index: HashMap<String, ParamId>,
}

impl<T: Float> ParamStore<T> {
    pub fn new() -> Self {
        ParamStore { names: Vec::new(), tensors: Vec::new(), index: HashMap::new() }
    }

    pub fn add(&mut self, name: impl Into<String>, t: Tensor<T>) -> ParamId {
        let name = name.into();
        assert!(!self.index.contains_key(&name), "duplicate parameter {name}");
        let id = ParamId(self.tensors.len());
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.tensors.push(t);
        id
    }

    /// Weights drawn from N(0, std²).
    pub fn add_normal(&mut self, name: &str, rows: usize, cols: usize, std: f64, rng: &mut impl Rng) -> ParamId {
        let normal = Normal::new(0.0, std).expect("finite std");
        let data = (0..rows * cols).map(|_| T::from_f64_lossy(normal.sample(rng))).collect();
        self.add(name, Tensor::from_vec(rows, cols, data))
    }

    pub fn add_const(&mut self, name: &str, rows: usize, cols: usize, v: f64) -> ParamId {
        self.add(name, Tensor::filled(rows, cols, T::from_f64_lossy(v)))
    }

    pub fn get(&self, id: ParamId) -> &Tensor<T> {
        &self.tensors[id.0]
    }

    pub fn get_mut(&mut self, id: ParamId) -> &mut Tensor<T> {
        &mut self.tensors[id.0]
    }

    pub fn id(&self, name: &str) -> Option<ParamId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: ParamId) -> &str {
        &self.names[id.0]
    }

    pub fn len(&self) -> usize {
        self.tensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ParamId> {
        (0..self.tensors.len()).map(ParamId)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Tensor<T>)> {
        self.names.iter().map(String::as_str).zip(&self.tensors)
    }

    /// Total number of scalar parameters.
    pub fn numel(&self) -> usize {
        self.tensors.iter().map(Tensor::len).sum()
    }

    pub fn cast<U: Float>(&self) -> ParamStore<U> {
        ParamStore {
            names: self.names.clone(),
            tensors: self.tensors.iter().map(Tensor::cast).collect(),
            index: self.index.clone(),
        }
    }
}

/// Gradient buffers shaped like a [`ParamStore`].
#[derive(Debug, Clone, PartialEq)]
pub struct Grads<T> {
    pub tensors: Vec<Tensor<T>>,
}

impl<T: Float> Grads<T> {
    pub fn zeros_like(store: &ParamStore<T>) -> Self {
        Grads { tensors: store.tensors.iter().map(|t| Tensor::zeros(t.rows, t.cols)).collect() }
    }

    pub fn get(&self, id: ParamId) -> &Tensor<T> {
        &self.tensors[id.0]
    }

    pub fn get_mut(&mut self, id: ParamId) -> &mut Tensor<T> {
        &mut self.tensors[id.0]
    }

    pub fn zero(&mut self) {
        self.tensors.iter_mut().for_each(Tensor::fill_zero);
    }

    pub fn global_norm(&self) -> f64 {
        self.tensors
            .iter()
            .flat_map(|t| t.data.iter())
            .map(|x| {
                let v = x.to_f64_lossy();
                v * v
            })
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&mut self, s: T) {
        for t in &mut self.tensors {
            t.data.iter_mut().for_each(|x| *x = *x * s);
        }
    }
}
