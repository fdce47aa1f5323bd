use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::InvalidPermutation;

/// The transposition swapping `p` and `q`, always stored with `p < q`.
///
/// The derived ordering compares `p` first and then `q`, which is the
/// lexicographic order used for edge labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Transposition {
    p: usize,
    q: usize,
}

impl Transposition {
    /// Builds `(p, q)`; requires `1 <= p < q`.
    pub fn new(p: usize, q: usize) -> Result<Self, InvalidPermutation> {
        if p == 0 || p >= q {
            return Err(InvalidPermutation::BadTransposition { p, q });
        }
        Ok(Self { p, q })
    }

    /// Builds the transposition of two distinct positions given in any order.
    pub fn between(a: usize, b: usize) -> Result<Self, InvalidPermutation> {
        Self::new(a.min(b), a.max(b))
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    /// Image of `n` under the transposition.
    pub fn apply(self, n: usize) -> usize {
        if n == self.p {
            self.q
        } else if n == self.q {
            self.p
        } else {
            n
        }
    }
}

impl TryFrom<[usize; 2]> for Transposition {
    type Error = InvalidPermutation;

    fn try_from([p, q]: [usize; 2]) -> Result<Self, Self::Error> {
        Self::new(p, q)
    }
}

impl From<Transposition> for [usize; 2] {
    fn from(t: Transposition) -> Self {
        [t.p, t.q]
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unordered_and_zero() {
        assert!(Transposition::new(2, 2).is_err());
        assert!(Transposition::new(3, 1).is_err());
        assert!(Transposition::new(0, 1).is_err());
        assert_eq!(Transposition::between(4, 2).unwrap(), Transposition::new(2, 4).unwrap());
    }

    #[test]
    fn lex_order() {
        let t = |p, q| Transposition::new(p, q).unwrap();
        assert!(t(1, 5) < t(2, 3));
        assert!(t(2, 3) < t(2, 4));
    }

    #[test]
    fn json_is_a_pair() {
        let t = Transposition::new(1, 4).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), "[1,4]");
        assert!(serde_json::from_str::<Transposition>("[4,1]").is_err());
    }
}
