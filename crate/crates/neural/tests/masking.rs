use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use synfix_neural::{apply_masking, MaskAction, MaskingPolicy};

#[test]
fn selection_and_split_rates() {
    let policy = MaskingPolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ids: Vec<u32> = (0..1000).map(|i| 5 + (i * 37 % 500)).collect();
    let (mut total, mut sel, mut counts) = (0usize, 0usize, [0usize; 3]);
    for _ in 0..200 {
        let m = apply_masking(&ids, &policy, 4, 5, 505, &mut rng);
        total += ids.len();
        sel += m.positions.len();
        for a in &m.actions {
            counts[*a as usize] += 1;
        }
    }
    assert!(total >= 100_000);
    let frac = sel as f64 / total as f64;
    assert!((0.14..=0.16).contains(&frac), "{frac}");
    let share = |c: usize| c as f64 / sel as f64;
    assert!((share(counts[0]) - 0.8).abs() <= 0.03);
    assert!((share(counts[1]) - 0.1).abs() <= 0.03);
    assert!((share(counts[2]) - 0.1).abs() <= 0.03);
}

proptest! {
    #[test]
    fn masking_only_touches_selected_regular_positions(ids in prop::collection::vec(0u32..40, 0..80), seed: u64) {
        let m = apply_masking(&ids, &MaskingPolicy::default(), 3, 5, 40, &mut ChaCha8Rng::seed_from_u64(seed));
        for (i, (&a, &b)) in ids.iter().zip(&m.ids).enumerate() {
            if let Some(k) = m.positions.iter().position(|&p| p == i) {
                prop_assert!(a >= 5);
                prop_assert_eq!(m.targets[k], a);
                match m.actions[k] {
                    MaskAction::Masked => prop_assert_eq!(b, 3),
                    MaskAction::Kept => prop_assert_eq!(b, a),
                    MaskAction::Randomized => prop_assert!(b >= 5),
                }
            } else {
                prop_assert_eq!(a, b);
            }
        }
    }
}
