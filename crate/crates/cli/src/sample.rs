//! Seeded random elements of `[σ, ω]` for covering-index queries.

use bruhat_core::bruhat::{is_cover_move, leq_horizon, Relation};
use bruhat_core::{PatternPermutation, Transposition};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `count` random elements `σ ∘ π` with `π` supported in `[1, support]`, each
/// below `ω`, produced by random upward walks of cover moves from `σ`.
///
/// Assumes `σ <= ω`. Rows from `support` on then agree with those of `σ`, so
/// checking rows `1..=support` certifies each step.
pub fn sample_below(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    support: usize,
    count: usize,
    seed: u64,
) -> Vec<PatternPermutation> {
    let mut rng = StdRng::seed_from_u64(seed);
    let max_steps = support * support.saturating_sub(1) / 2;
    (0..count)
        .map(|_| {
            let mut nu = sigma.clone();
            let steps = rng.random_range(0..=max_steps);
            for _ in 0..steps {
                let moves: Vec<(Transposition, PatternPermutation)> = (1..=support)
                    .flat_map(|p| (p + 1..=support).map(move |q| Transposition::new(p, q).unwrap()))
                    .filter(|&t| is_cover_move(&nu, t))
                    .map(|t| (t, nu.compose_transposition(t)))
                    .filter(|(_, up)| leq_horizon(up, omega, support).relation == Relation::LessOrEqual)
                    .collect();
                if moves.is_empty() {
                    break;
                }
                nu = moves[rng.random_range(0..moves.len())].1.clone();
            }
            nu
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bruhat_core::bruhat::leq_exact;
    use bruhat_core::perm::agreement_index;

    #[test]
    fn samples_lie_in_the_interval() {
        let e = PatternPermutation::identity();
        let w0 = PatternPermutation::from_window(vec![4, 3, 2, 1]).unwrap();
        for nu in sample_below(&e, &w0, 4, 30, 1) {
            assert!(leq_exact(&nu, &w0).unwrap());
        }
        let theta = PatternPermutation::theta();
        let samples = sample_below(&e, &theta, 10, 30, 2);
        assert!(samples.iter().any(|nu| nu != &e));
        for nu in samples {
            assert!(agreement_index(&nu, &e).unwrap() <= 11);
        }
        assert_eq!(sample_below(&e, &theta, 10, 5, 3), sample_below(&e, &theta, 10, 5, 3));
    }
}
