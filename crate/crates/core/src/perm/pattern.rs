use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FiniteSupportPermutation, Transposition};
use crate::error::InvalidPermutation;

/// A bijection of the positive integers given by a finite prefix and a
/// periodic affine tail.
///
/// Positions `1..=N` map to `prefix`; a position `n > N` maps to
/// `n + offsets[n % period]`. Values are always stored normalized (minimal
/// period, then minimal prefix), so structural equality is pointwise equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PatternRepr", into = "PatternRepr")]
pub struct PatternPermutation {
    prefix: Vec<usize>,
    period: usize,
    offsets: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct PatternRepr {
    prefix: Vec<usize>,
    period: usize,
    offsets: Vec<i64>,
}

impl TryFrom<PatternRepr> for PatternPermutation {
    type Error = InvalidPermutation;

    fn try_from(repr: PatternRepr) -> Result<Self, Self::Error> {
        Self::new(repr.prefix, repr.period, repr.offsets)
    }
}

impl From<PatternPermutation> for PatternRepr {
    fn from(perm: PatternPermutation) -> Self {
        PatternRepr {
            prefix: perm.prefix,
            period: perm.period,
            offsets: perm.offsets,
        }
    }
}

impl PatternPermutation {
    /// Validates the representation and normalizes it.
    pub fn new(
        prefix: Vec<usize>,
        period: usize,
        offsets: Vec<i64>,
    ) -> Result<Self, InvalidPermutation> {
        let perm = Self {
            prefix,
            period,
            offsets,
        };
        perm.validate()?;
        Ok(perm.normalized())
    }

    pub fn identity() -> Self {
        Self {
            prefix: Vec::new(),
            period: 1,
            offsets: vec![0],
        }
    }

    /// The finitely supported permutation with the given one-line window.
    pub fn from_window(window: Vec<usize>) -> Result<Self, InvalidPermutation> {
        Ok(Self::from(&FiniteSupportPermutation::new(window)?))
    }

    pub fn from_transposition(t: Transposition) -> Self {
        Self::from(&FiniteSupportPermutation::from_transposition(t))
    }

    /// `[2, 1, 4, 3, 6, 5, …]`: odd `n` goes to `n + 1`, even `n` to `n - 1`.
    pub fn theta() -> Self {
        Self::new(Vec::new(), 2, vec![-1, 1]).expect("theta is a valid pattern")
    }

    /// `[3, 1, 5, 2, 7, 4, …]`: odd `n` goes to `n + 2`, `2` to `1`, other
    /// even `n` to `n - 2`.
    pub fn rho() -> Self {
        Self::new(vec![3, 1], 2, vec![-2, 2]).expect("rho is a valid pattern")
    }

    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix.len()
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    /// `D = max(N, max |offset|, max prefix entry)`; every position moves by
    /// at most `D`.
    pub fn displacement_bound(&self) -> usize {
        let max_offset = self.offsets.iter().map(|o| o.unsigned_abs() as usize).max();
        let max_prefix = self.prefix.iter().copied().max();
        self.prefix
            .len()
            .max(max_offset.unwrap_or(0))
            .max(max_prefix.unwrap_or(0))
    }

    fn tail(&self, n: usize) -> i64 {
        n as i64 + self.offsets[n % self.period]
    }

    /// `σ(n)` for `n >= 1`.
    pub fn eval(&self, n: usize) -> usize {
        assert!(n >= 1, "positions are 1-based");
        match self.prefix.get(n - 1) {
            Some(&v) => v,
            None => self.tail(n) as usize,
        }
    }

    /// The unique `n` with `σ(n) = v`.
    pub fn inverse_value(&self, v: usize) -> usize {
        assert!(v >= 1, "values are 1-based");
        if let Some(i) = self.prefix.iter().position(|&x| x == v) {
            return i + 1;
        }
        let n_prefix = self.prefix.len() as i64;
        for (r, &o) in self.offsets.iter().enumerate() {
            let n = v as i64 - o;
            if n > n_prefix && n as usize % self.period == r {
                return n as usize;
            }
        }
        unreachable!("validated pattern permutations are surjective")
    }

    /// `σ⁻¹`, again as a pattern: beyond `N + 2D` every value is hit from the
    /// tail, where `n + o[r]` inverts to `m - o[r]`.
    pub fn inverse(&self) -> Self {
        let p = self.period;
        let mut offsets = vec![0i64; p];
        for (r, &o) in self.offsets.iter().enumerate() {
            offsets[(r as i64 + o).rem_euclid(p as i64) as usize] = -o;
        }
        let len = self.prefix.len() + 2 * self.displacement_bound();
        let prefix = (1..=len).map(|v| self.inverse_value(v)).collect();
        Self::new(prefix, p, offsets).expect("inverse of a valid pattern")
    }

    /// One-line entries for positions `1..=len`.
    pub fn one_line(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|n| self.eval(n)).collect()
    }

    /// `"[a1, a2, …, ak, …]"` showing `len` entries.
    pub fn one_line_string(&self, len: usize) -> String {
        let mut out = String::from("[");
        for v in self.one_line(len) {
            out.push_str(&v.to_string());
            out.push_str(", ");
        }
        out.push_str("…]");
        out
    }

    /// Whether the tail is the identity, i.e. the permutation has finite support.
    pub fn is_finite_support(&self) -> bool {
        self.offsets.iter().all(|&o| o == 0)
    }

    pub fn to_finite(&self) -> Option<FiniteSupportPermutation> {
        self.is_finite_support()
            .then(|| FiniteSupportPermutation::canonical(self.prefix.clone()))
    }

    /// `σ ∘ (p, q)`: swaps the one-line entries at `p` and `q`.
    pub fn compose_transposition(&self, t: Transposition) -> Self {
        let len = self.prefix.len().max(t.q());
        let mut prefix = self.one_line(len);
        prefix.swap(t.p() - 1, t.q() - 1);
        self.with_prefix(prefix)
    }

    /// `σ ∘ π` for a finitely supported `π`.
    pub fn compose_finite(&self, pi: &FiniteSupportPermutation) -> Self {
        let len = self.prefix.len().max(pi.support_bound());
        let prefix = (1..=len).map(|n| self.eval(pi.eval(n))).collect();
        self.with_prefix(prefix)
    }

    /// Same tail, new prefix. The caller guarantees the result is a bijection.
    fn with_prefix(&self, prefix: Vec<usize>) -> Self {
        Self {
            prefix,
            period: self.period,
            offsets: self.offsets.clone(),
        }
        .normalized()
    }

    fn validate(&self) -> Result<(), InvalidPermutation> {
        let p = self.period;
        if p == 0 {
            return Err(InvalidPermutation::ZeroPeriod);
        }
        if self.offsets.len() != p {
            return Err(InvalidPermutation::OffsetCount {
                expected: p,
                found: self.offsets.len(),
            });
        }
        if let Some(i) = self.prefix.iter().position(|&v| v == 0) {
            return Err(InvalidPermutation::NonPositiveEntry { position: i + 1 });
        }
        let mut hit = vec![false; p];
        for (r, &o) in self.offsets.iter().enumerate() {
            let image = (r as i64 + o).rem_euclid(p as i64) as usize;
            if std::mem::replace(&mut hit[image], true) {
                return Err(InvalidPermutation::ResidueMapNotBijective);
            }
        }
        let sum: i64 = self.offsets.iter().sum();
        if sum != 0 {
            return Err(InvalidPermutation::OffsetSumNonzero { sum });
        }
        let n_prefix = self.prefix.len();
        // The smallest tail position in each residue class lies in N+1..=N+p.
        for n in n_prefix + 1..=n_prefix + p {
            if self.tail(n) < 1 {
                return Err(InvalidPermutation::TailBelowOne { position: n });
            }
        }
        // Displacements are bounded by D, so nothing outside the window can
        // land in the coverage range and the tail beyond it is already
        // injective and onto by the residue conditions.
        let d = self.displacement_bound();
        let window = n_prefix + 2 * p + 2 * d;
        let mut preimage = vec![0usize; window + d + 1];
        for n in 1..=window {
            let v = self.eval(n);
            if v < preimage.len() {
                if preimage[v] != 0 {
                    return Err(InvalidPermutation::NotInjective {
                        first: preimage[v],
                        second: n,
                        value: v,
                    });
                }
                preimage[v] = n;
            }
        }
        if let Some(value) = (1..=window - d).find(|&v| preimage[v] == 0) {
            return Err(InvalidPermutation::NotSurjective { value });
        }
        Ok(())
    }

    fn normalized(mut self) -> Self {
        let p = self.period;
        if let Some(q) = (1..p)
            .filter(|q| p % q == 0)
            .find(|&q| (0..p).all(|r| self.offsets[r] == self.offsets[r % q]))
        {
            self.offsets.truncate(q);
            self.period = q;
        }
        while let Some(&last) = self.prefix.last() {
            let n = self.prefix.len();
            if self.tail(n) != last as i64 {
                break;
            }
            self.prefix.pop();
        }
        self
    }
}

impl From<&FiniteSupportPermutation> for PatternPermutation {
    fn from(pi: &FiniteSupportPermutation) -> Self {
        Self {
            prefix: pi.window().to_vec(),
            period: 1,
            offsets: vec![0],
        }
    }
}

impl fmt::Display for PatternPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.prefix.len() + 2 * self.period.max(2);
        f.write_str(&self.one_line_string(len))
    }
}
