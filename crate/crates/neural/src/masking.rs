//! Token selection and corruption for masked-language-model training.

use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaskingPolicy {
    pub select_rate: f64,
    pub mask_rate: f64,
    pub keep_rate: f64,
    pub random_rate: f64,
    /// Draw a fresh pattern every epoch instead of fixing one per sequence.
    pub dynamic: bool,
}

impl Default for MaskingPolicy {
    fn default() -> Self {
        MaskingPolicy { select_rate: 0.15, mask_rate: 0.8, keep_rate: 0.1, random_rate: 0.1, dynamic: true }
    }
}

impl MaskingPolicy {
    pub fn is_valid(&self) -> bool {
        let rates = [self.select_rate, self.mask_rate, self.keep_rate, self.random_rate];
        rates.iter().all(|r| (0.0..=1.0).contains(r))
            && (self.mask_rate + self.keep_rate + self.random_rate - 1.0).abs() < 1e-9
    }
}

/// What happened to a selected position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaskAction {
    Masked,
    Kept,
    Randomized,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Masked {
    pub ids: Vec<u32>,
    pub positions: Vec<usize>,
    pub targets: Vec<u32>,
    pub actions: Vec<MaskAction>,
}

/// Select positions holding ids `>= first_regular` with probability
/// `select_rate`; replace them with `mask_id`, keep them, or swap in a uniform
/// random regular id per the policy split.
pub fn apply_masking(
    ids: &[u32],
    policy: &MaskingPolicy,
    mask_id: u32,
    first_regular: u32,
    vocab_size: u32,
    rng: &mut impl Rng,
) -> Masked {
    let mut out = Masked { ids: ids.to_vec(), positions: Vec::new(), targets: Vec::new(), actions: Vec::new() };
    for (i, &id) in ids.iter().enumerate() {
        if id < first_regular || !rng.gen_bool(policy.select_rate) {
            continue;
        }
        let u: f64 = rng.gen();
        let action = if u < policy.mask_rate {
            out.ids[i] = mask_id;
            MaskAction::Masked
        } else if u < policy.mask_rate + policy.keep_rate || vocab_size <= first_regular {
            MaskAction::Kept
        } else {
            out.ids[i] = rng.gen_range(first_regular..vocab_size);
            MaskAction::Randomized
        };
        out.positions.push(i);
        out.targets.push(id);
        out.actions.push(action);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_rate_changes_nothing() {
        let policy = MaskingPolicy { select_rate: 0.0, ..Default::default() };
        let ids: Vec<u32> = (7..100).collect();
        let m = apply_masking(&ids, &policy, 3, 7, 200, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(m.ids, ids);
        assert!(m.positions.is_empty());
    }

    #[test]
    fn specials_are_never_selected() {
        let policy = MaskingPolicy { select_rate: 1.0, ..Default::default() };
        let ids = vec![1, 9, 2, 9, 0];
        let m = apply_masking(&ids, &policy, 3, 7, 200, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(m.positions, vec![1, 3]);
    }

    #[test]
    fn default_policy_is_valid() {
        assert!(MaskingPolicy::default().is_valid());
        assert!(!MaskingPolicy { keep_rate: 0.3, ..Default::default() }.is_valid());
    }
}
