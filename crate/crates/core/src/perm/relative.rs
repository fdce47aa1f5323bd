use std::fmt;
use std::hash::{Hash, Hasher};

use super::{agreement_index, FiniteSupportPermutation, PatternPermutation, Transposition};
use crate::error::{Error, Result};

/// `base ∘ factor` for a finitely supported `factor`; always eventually equal
/// to `base`.
///
/// Equality and hashing only look at `base` and `factor` (the composite is
/// determined by them). The composite is materialized once at construction.
#[derive(Debug, Clone)]
pub struct RelativePermutation {
    base: PatternPermutation,
    factor: FiniteSupportPermutation,
    value: PatternPermutation,
}

impl RelativePermutation {
    pub fn new(base: PatternPermutation, factor: FiniteSupportPermutation) -> Self {
        let value = base.compose_finite(&factor);
        Self {
            base,
            factor,
            value,
        }
    }

    /// The base itself, with trivial factor.
    pub fn at_base(base: PatternPermutation) -> Self {
        Self::new(base, FiniteSupportPermutation::identity())
    }

    /// Writes `nu` as `base ∘ π`; fails unless `nu` is eventually equal to `base`.
    pub fn from_pattern(base: PatternPermutation, nu: &PatternPermutation) -> Result<Self> {
        let i0 = agreement_index(&base, nu).ok_or(Error::NotEventuallyEqual)?;
        let window = (1..i0).map(|i| base.inverse_value(nu.eval(i))).collect();
        let factor = FiniteSupportPermutation::canonical(window);
        Ok(Self {
            base,
            factor,
            value: nu.clone(),
        })
    }

    pub fn base(&self) -> &PatternPermutation {
        &self.base
    }

    pub fn factor(&self) -> &FiniteSupportPermutation {
        &self.factor
    }

    /// The composite `base ∘ factor` as a pattern permutation.
    pub fn pattern(&self) -> &PatternPermutation {
        &self.value
    }

    pub fn into_pattern(self) -> PatternPermutation {
        self.value
    }

    pub fn eval(&self, n: usize) -> usize {
        self.value.eval(n)
    }

    pub fn inverse_value(&self, v: usize) -> usize {
        self.value.inverse_value(v)
    }

    /// `(base ∘ factor) ∘ t`, folded into the factor.
    pub fn compose_transposition(&self, t: Transposition) -> Self {
        Self {
            base: self.base.clone(),
            factor: self.factor.compose_transposition(t),
            value: self.value.compose_transposition(t),
        }
    }
}

impl PartialEq for RelativePermutation {
    fn eq(&self, other: &Self) -> bool {
        self.factor == other.factor && self.base == other.base
    }
}

impl Eq for RelativePermutation {}

impl Hash for RelativePermutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.base.hash(state);
        self.factor.hash(state);
    }
}

impl AsRef<PatternPermutation> for RelativePermutation {
    fn as_ref(&self) -> &PatternPermutation {
        &self.value
    }
}

impl fmt::Display for RelativePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self
            .factor
            .support_bound()
            .max(self.base.prefix_len() + 2 * self.base.period().max(2));
        f.write_str(&self.value.one_line_string(len))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_matches_pointwise_composition() {
        let theta = PatternPermutation::theta();
        let pi = FiniteSupportPermutation::new(vec![3, 1, 2]).unwrap();
        let nu = RelativePermutation::new(theta.clone(), pi.clone());
        for n in 1..20 {
            assert_eq!(nu.eval(n), theta.eval(pi.eval(n)));
        }
        let back = RelativePermutation::from_pattern(theta, nu.pattern()).unwrap();
        assert_eq!(back, nu);
        assert_eq!(back.factor(), &pi);
    }

    #[test]
    fn compose_keeps_factor_canonical() {
        let t = Transposition::new(2, 5).unwrap();
        let nu = RelativePermutation::at_base(PatternPermutation::rho());
        let up = nu.compose_transposition(t);
        assert_eq!(up.factor().window(), &[1, 5, 3, 4, 2]);
        assert_eq!(up.compose_transposition(t), nu);
        assert_eq!(up.pattern(), &PatternPermutation::rho().compose_transposition(t));
    }

    #[test]
    fn not_eventually_equal_is_rejected() {
        let err = RelativePermutation::from_pattern(
            PatternPermutation::identity(),
            &PatternPermutation::theta(),
        )
        .unwrap_err();
        assert_eq!(err, Error::NotEventuallyEqual);
    }
}
