//! Finite representations of permutations of the positive integers and the
//! pointwise and permutation-matrix statistics used by the order machinery.
//!
//! Positions and values are 1-based throughout, matching one-line notation.

mod finite;
mod pattern;
mod relative;
mod transposition;

use std::ops::RangeInclusive;

use serde::Serialize;

pub use finite::FiniteSupportPermutation;
pub use pattern::PatternPermutation;
pub use relative::RelativePermutation;
pub use transposition::Transposition;

use crate::error::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Positions beyond `max(N_σ, N_τ)` follow both tail rules; one common period
/// past that point decides every later position.
fn tail_horizon(sigma: &PatternPermutation, tau: &PatternPermutation) -> (usize, usize) {
    let start = sigma.prefix_len().max(tau.prefix_len());
    (start, start + lcm(sigma.period(), tau.period()))
}

/// Pointwise equality.
///
/// Both operands are normalized on construction, so this agrees with `==`;
/// it is kept as an explicit scan over the shared prefix and one common tail
/// period so the two routes can be checked against each other.
pub fn equals(sigma: &PatternPermutation, tau: &PatternPermutation) -> bool {
    let (_, end) = tail_horizon(sigma, tau);
    (1..=end).all(|n| sigma.eval(n) == tau.eval(n))
}

/// Least `i₀` such that `σ(i) = τ(i)` for every `i >= i₀`, or `None` when the
/// two permutations differ at infinitely many positions.
pub fn agreement_index(sigma: &PatternPermutation, tau: &PatternPermutation) -> Option<usize> {
    let (start, end) = tail_horizon(sigma, tau);
    if (start + 1..=end).any(|n| sigma.eval(n) != tau.eval(n)) {
        return None;
    }
    let last_diff = (1..=start).rev().find(|&n| sigma.eval(n) != tau.eval(n));
    Some(last_diff.map_or(1, |n| n + 1))
}

/// `d(σ, ω)`: the first position where the two permutations differ.
pub fn first_difference(sigma: &PatternPermutation, omega: &PatternPermutation) -> Result<usize> {
    let (_, end) = tail_horizon(sigma, omega);
    (1..=end)
        .find(|&n| sigma.eval(n) != omega.eval(n))
        .ok_or(Error::EqualPermutations)
}

/// Number of ones of the permutation matrix in the given rows (values) and
/// columns (positions): `#{n ∈ cols : σ(n) ∈ rows}`.
pub fn rank_count(
    sigma: &PatternPermutation,
    rows: RangeInclusive<usize>,
    cols: RangeInclusive<usize>,
) -> usize {
    let first = (*cols.start()).max(1);
    (first..=*cols.end())
        .filter(|&n| rows.contains(&sigma.eval(n)))
        .count()
}

/// `r_{a,b}(σ)`: ones in the upper-left `a × b` corner.
pub fn rank_corner(sigma: &PatternPermutation, a: usize, b: usize) -> usize {
    rank_count(sigma, 1..=a, 1..=b)
}

/// The statistics `d`, `m` and `f` of a strictly increasing pair `σ < ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dmf {
    pub d: usize,
    pub m: usize,
    pub f: usize,
}

impl Dmf {
    pub fn transposition(&self) -> Transposition {
        Transposition::new(self.d, self.m).expect("d < m by construction")
    }
}

/// Computes `d = d(σ, ω)`, `f = σ⁻¹(ω(d))` and the least `m` with
/// `d < m <= f` and `σ(d) < σ(m) <= σ(f)`.
///
/// The caller is responsible for `σ < ω`; when that fails the search for `m`
/// comes up empty and [`Error::MNotFound`] is returned.
pub fn dmf(sigma: &PatternPermutation, omega: &PatternPermutation) -> Result<Dmf> {
    let d = first_difference(sigma, omega)?;
    let f = sigma.inverse_value(omega.eval(d));
    let (low, high) = (sigma.eval(d), sigma.eval(f));
    let m = (d + 1..=f)
        .find(|&l| {
            let v = sigma.eval(l);
            low < v && v <= high
        })
        .ok_or(Error::MNotFound { d, f })?;
    Ok(Dmf { d, m, f })
}

/// `(ℓ_1(σ), …, ℓ_k(σ))` where `ℓ_i` accumulates `|D_n| = #{j > n : σ(j) < σ(n)}`
/// over `n <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PseudoLengthPrefix(Vec<u64>);

impl PseudoLengthPrefix {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn last(&self) -> u64 {
        self.0.last().copied().unwrap_or(0)
    }
}

pub fn pseudo_length_prefix(sigma: &PatternPermutation, k: usize) -> PseudoLengthPrefix {
    let mut seen: Vec<usize> = Vec::with_capacity(k);
    let mut total = 0u64;
    let mut values = Vec::with_capacity(k);
    for i in 1..=k {
        let v = sigma.eval(i);
        let pos = seen.partition_point(|&x| x < v);
        // Values below σ(i) not used by earlier positions appear later.
        total += (v - 1 - pos) as u64;
        seen.insert(pos, v);
        values.push(total);
    }
    PseudoLengthPrefix(values)
}

/// Decides membership in the finitely supported permutations; for those,
/// also returns the classical length (number of inversions).
pub fn detect_finite_support(sigma: &PatternPermutation) -> (bool, Option<u64>) {
    if sigma.is_finite_support() {
        let len = pseudo_length_prefix(sigma, sigma.prefix_len()).last();
        (true, Some(len))
    } else {
        (false, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> PatternPermutation {
        PatternPermutation::from_window(v.to_vec()).unwrap()
    }

    fn t(p: usize, q: usize) -> Transposition {
        Transposition::new(p, q).unwrap()
    }

    #[test]
    fn agreement() {
        let e = PatternPermutation::identity();
        assert_eq!(agreement_index(&e, &w(&[2, 1])), Some(3));
        assert_eq!(agreement_index(&e, &e), Some(1));
        assert_eq!(
            agreement_index(&PatternPermutation::theta(), &PatternPermutation::rho()),
            None
        );
        assert_eq!(agreement_index(&e, &PatternPermutation::theta()), None);
    }

    #[test]
    fn theta_rho_differ_at_every_odd_position() {
        let (theta, rho) = (PatternPermutation::theta(), PatternPermutation::rho());
        for n in (1..200).step_by(2) {
            assert_ne!(theta.eval(n), rho.eval(n));
        }
    }

    #[test]
    fn first_difference_examples() {
        let (theta, rho) = (PatternPermutation::theta(), PatternPermutation::rho());
        assert_eq!(first_difference(&theta, &rho), Ok(1));
        let e = PatternPermutation::identity();
        assert_eq!(first_difference(&e, &PatternPermutation::from_transposition(t(3, 4))), Ok(3));
        assert_eq!(first_difference(&rho, &rho), Err(Error::EqualPermutations));
        // Difference appearing only deep in the tail of a long period.
        let a = PatternPermutation::new(vec![], 4, vec![0, 0, 1, -1]).unwrap();
        let b = PatternPermutation::new(vec![], 4, vec![0, 0, 0, 0]).unwrap();
        assert_eq!(first_difference(&a, &b), Ok(2));
    }

    #[test]
    fn equals_examples() {
        let theta = PatternPermutation::theta();
        let reencoded =
            PatternPermutation::new(vec![2, 1, 4, 3, 6, 5], 2, vec![-1, 1]).unwrap();
        assert!(equals(&theta, &reencoded));
        assert!(!equals(&theta, &PatternPermutation::rho()));
        assert!(!equals(
            &PatternPermutation::identity(),
            &PatternPermutation::from_transposition(t(1, 2))
        ));
    }

    #[test]
    fn rank_counts() {
        let theta = PatternPermutation::theta();
        // θ = [2, 1, …]: the corner [1,1]×[1,1] is empty, [1,2]×[1,2] is full.
        assert_eq!(rank_count(&theta, 1..=1, 1..=1), 0);
        assert_eq!(rank_count(&theta, 1..=2, 1..=2), 2);
        let e = PatternPermutation::identity();
        for a in 1..8 {
            for b in 1..8 {
                assert_eq!(rank_corner(&e, a, b), a.min(b));
            }
        }
    }

    #[test]
    fn dmf_examples() {
        let (theta, rho) = (PatternPermutation::theta(), PatternPermutation::rho());
        assert_eq!(dmf(&theta, &rho), Ok(Dmf { d: 1, m: 4, f: 4 }));
        let e = PatternPermutation::identity();
        assert_eq!(dmf(&e, &w(&[2, 1])), Ok(Dmf { d: 1, m: 2, f: 2 }));
        assert_eq!(dmf(&e, &w(&[3, 2, 1])), Ok(Dmf { d: 1, m: 2, f: 3 }));
        assert_eq!(dmf(&e, &e), Err(Error::EqualPermutations));
        // [2,1] is not below the identity.
        assert!(matches!(dmf(&w(&[2, 1]), &e), Err(Error::MNotFound { .. })));
    }

    #[test]
    fn pseudo_lengths() {
        let theta = pseudo_length_prefix(&PatternPermutation::theta(), 6);
        assert_eq!(theta.values(), &[1, 1, 2, 2, 3, 3]);
        let rho = pseudo_length_prefix(&PatternPermutation::rho(), 6);
        assert_eq!(rho.values(), &[2, 2, 4, 4, 6, 6]);
        let e = pseudo_length_prefix(&PatternPermutation::identity(), 5);
        assert_eq!(e.values(), &[0; 5]);
    }

    #[test]
    fn finite_support_detection() {
        assert_eq!(
            detect_finite_support(&PatternPermutation::from_transposition(t(1, 2))),
            (true, Some(1))
        );
        assert_eq!(detect_finite_support(&PatternPermutation::theta()), (false, None));
        assert_eq!(detect_finite_support(&PatternPermutation::identity()), (true, Some(0)));
    }
}
