use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Transposition;
use crate::error::InvalidPermutation;

/// A permutation of the positive integers fixing everything beyond its window.
///
/// `window[i]` is the image of `i + 1`. The window is kept canonical: trailing
/// fixed points are stripped, so the identity has an empty window.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WindowRepr", into = "WindowRepr")]
pub struct FiniteSupportPermutation {
    window: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WindowRepr {
    window: Vec<usize>,
}

impl TryFrom<WindowRepr> for FiniteSupportPermutation {
    type Error = InvalidPermutation;

    fn try_from(repr: WindowRepr) -> Result<Self, Self::Error> {
        Self::new(repr.window)
    }
}

impl From<FiniteSupportPermutation> for WindowRepr {
    fn from(perm: FiniteSupportPermutation) -> Self {
        WindowRepr {
            window: perm.window,
        }
    }
}

impl FiniteSupportPermutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Validates that `window` is a permutation of `1..=window.len()`.
    pub fn new(window: Vec<usize>) -> Result<Self, InvalidPermutation> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(InvalidPermutation::BadWindow { len: n });
            }
        }
        Ok(Self::canonical(window))
    }

    pub(crate) fn canonical(mut window: Vec<usize>) -> Self {
        while window.last() == Some(&window.len()) {
            window.pop();
        }
        Self { window }
    }

    pub fn from_transposition(t: Transposition) -> Self {
        let mut window: Vec<usize> = (1..=t.q()).collect();
        window.swap(t.p() - 1, t.q() - 1);
        Self { window }
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Every position beyond this bound is fixed.
    pub fn support_bound(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    pub fn eval(&self, n: usize) -> usize {
        assert!(n >= 1, "positions are 1-based");
        self.window.get(n - 1).copied().unwrap_or(n)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { window: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.window.len().max(other.window.len());
        Self::canonical((1..=n).map(|i| self.eval(other.eval(i))).collect())
    }

    /// `self ∘ t`, i.e. swap the entries at positions `p` and `q`.
    pub fn compose_transposition(&self, t: Transposition) -> Self {
        let n = self.window.len().max(t.q());
        let mut window: Vec<usize> = (1..=n).map(|i| self.eval(i)).collect();
        window.swap(t.p() - 1, t.q() - 1);
        Self::canonical(window)
    }

    /// Classical length: the number of inversions.
    pub fn inversions(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// One-line entries for positions `1..=len`.
    pub fn one_line(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|i| self.eval(i)).collect()
    }
}

/// Lexicographic comparison of one-line notations.
impl Ord for FiniteSupportPermutation {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.window.len().max(other.window.len());
        (1..=n)
            .map(|i| self.eval(i).cmp(&other.eval(i)))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

impl PartialOrd for FiniteSupportPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FiniteSupportPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.window.iter().map(usize::to_string).collect();
        write!(f, "[{}]", entries.join(","))
    }
}
