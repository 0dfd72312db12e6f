//! Adam with linear warmup and linear decay.

use serde::{Deserialize, Serialize};

use crate::params::{Grads, ParamStore};
use crate::tensor::{Float, Tensor};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdamConfig {
    pub lr: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub eps: f64,
    pub weight_decay: f64,
    /// Fraction of `total_steps` spent warming up linearly from zero.
    pub warmup_frac: f64,
    pub total_steps: usize,
    /// Clip the global gradient norm to this value, when set.
    pub clip_norm: Option<f64>,
}

impl Default for AdamConfig {
    fn default() -> Self {
        AdamConfig {
            lr: 5e-5,
            beta1: 0.9,
            beta2: 0.999,
            eps: 1e-8,
            weight_decay: 0.0,
            warmup_frac: 0.05,
            total_steps: 1000,
            clip_norm: Some(1.0),
        }
    }
}

impl AdamConfig {
    /// Learning rate for 0-based `step`.
    pub fn lr_at(&self, step: usize) -> f64 {
        let total = self.total_steps.max(1) as f64;
        let warm = (self.warmup_frac * total).ceil().max(1.0);
        let s = step as f64 + 1.0;
        if s <= warm {
            self.lr * s / warm
        } else {
            self.lr * ((total - s + 1.0) / (total - warm + 1.0)).max(0.0)
        }
    }
}

#[derive(Debug, Clone)]
pub struct Adam<T> {
    pub config: AdamConfig,
    m: Vec<Tensor<T>>,
    v: Vec<Tensor<T>>,
    step: usize,
}

impl<T: Float> Adam<T> {
    pub fn new(config: AdamConfig, params: &ParamStore<T>) -> Self {
        let zeros = || params.iter().map(|(_, t)| Tensor::zeros(t.rows, t.cols)).collect::<Vec<_>>();
        Adam { config, m: zeros(), v: zeros(), step: 0 }
    }

    pub fn steps_taken(&self) -> usize {
        self.step
    }

    /// One update from `grads` (which are clipped in place when configured).
    pub fn step(&mut self, params: &mut ParamStore<T>, grads: &mut Grads<T>) {
        let c = self.config;
        if let Some(max) = c.clip_norm {
            let norm = grads.global_norm();
            if norm > max {
                grads.scale(T::from_f64_lossy(max / norm));
            }
        }
        let lr = c.lr_at(self.step);
        self.step += 1;
        let t = self.step as i32;
        let bc1 = 1.0 - c.beta1.powi(t);
        let bc2 = 1.0 - c.beta2.powi(t);
        let (b1, b2) = (T::from_f64_lossy(c.beta1), T::from_f64_lossy(c.beta2));
        let (one_b1, one_b2) = (T::one() - b1, T::one() - b2);
        let step_size = T::from_f64_lossy(lr / bc1);
        let inv_bc2 = T::from_f64_lossy(1.0 / bc2);
        let eps = T::from_f64_lossy(c.eps);
        let decay = T::from_f64_lossy(lr * c.weight_decay);
        for (k, id) in params.ids().collect::<Vec<_>>().into_iter().enumerate() {
            let p = params.get_mut(id);
            let g = grads.get(id);
            let (m, v) = (&mut self.m[k], &mut self.v[k]);
            for i in 0..p.data.len() {
                let gi = g.data[i];
                m.data[i] = b1 * m.data[i] + one_b1 * gi;
                v.data[i] = b2 * v.data[i] + one_b2 * gi * gi;
                let denom = (v.data[i] * inv_bc2).sqrt() + eps;
                p.data[i] = p.data[i] - step_size * m.data[i] / denom - decay * p.data[i];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_warms_up_then_decays() {
        let c = AdamConfig { lr: 1.0, total_steps: 100, ..Default::default() };
        assert!((c.lr_at(0) - 0.2).abs() < 1e-12);
        assert!((c.lr_at(4) - 1.0).abs() < 1e-12);
        assert!(c.lr_at(50) < 1.0 && c.lr_at(50) > c.lr_at(90));
        assert!(c.lr_at(99) > 0.0);
    }

    #[test]
    fn minimizes_a_quadratic() {
        let mut store = ParamStore::<f64>::new();
        let id = store.add("x", Tensor::from_vec(1, 2, vec![3.0, -2.0]));
        let mut opt = Adam::new(AdamConfig { lr: 0.1, total_steps: 500, clip_norm: None, ..Default::default() }, &store);
        let mut grads = Grads::zeros_like(&store);
        for _ in 0..500 {
            grads.zero();
            let x = store.get(id).data.clone();
            grads.get_mut(id).data = x.iter().map(|v| 2.0 * v).collect();
            opt.step(&mut store, &mut grads);
        }
        assert!(store.get(id).data.iter().all(|v| v.abs() < 0.05), "{:?}", store.get(id).data);
    }
}
