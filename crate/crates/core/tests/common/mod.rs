//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use bruhat_core::{PatternPermutation, Transposition};

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
        .sum()
}

pub fn pattern(w: &[usize]) -> PatternPermutation {
    PatternPermutation::from_window(w.to_vec()).unwrap()
}

/// Classical Bruhat order on `S_n`: covers are `w < w ∘ (i, j)` with length
/// going up by exactly one; the order is their reflexive-transitive closure.
pub struct BruteBruhat {
    pub perms: Vec<Vec<usize>>,
    pub index: HashMap<Vec<usize>, usize>,
    /// `(upper index, label)` for every cover above each element.
    pub covers: Vec<Vec<(usize, Transposition)>>,
    /// `up[x][y]` iff `x <= y`.
    pub up: Vec<Vec<bool>>,
}

impl BruteBruhat {
    pub fn new(n: usize) -> Self {
        let perms = permutations(n);
        let index: HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let lengths: Vec<usize> = perms.iter().map(|w| inversions(w)).collect();
        let mut covers = vec![Vec::new(); perms.len()];
        for (x, w) in perms.iter().enumerate() {
            for p in 0..n {
                for q in p + 1..n {
                    let mut v = w.clone();
                    v.swap(p, q);
                    let y = index[&v];
                    if lengths[y] == lengths[x] + 1 {
                        covers[x].push((y, Transposition::new(p + 1, q + 1).unwrap()));
                    }
                }
            }
        }
        let mut by_length: Vec<usize> = (0..perms.len()).collect();
        by_length.sort_by_key(|&x| std::cmp::Reverse(lengths[x]));
        let mut up = vec![vec![false; perms.len()]; perms.len()];
        for &x in &by_length {
            up[x][x] = true;
            for &(y, _) in &covers[x] {
                let above = up[y].clone();
                for (slot, reach) in up[x].iter_mut().zip(above) {
                    *slot |= reach;
                }
            }
        }
        Self {
            perms,
            index,
            covers,
            up,
        }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x][y]
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.covers[x].iter().any(|&(z, _)| z == y)
    }

    pub fn length(&self, x: usize) -> usize {
        inversions(&self.perms[x])
    }

    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len()).filter(|&z| self.up[x][z] && self.up[z][y]).collect()
    }
}

/// Bases used to build random patterns: infinite-support examples and the
/// identity.
pub fn pattern_bases() -> Vec<PatternPermutation> {
    vec![
        PatternPermutation::identity(),
        PatternPermutation::theta(),
        PatternPermutation::rho(),
        PatternPermutation::new(vec![], 3, vec![-1, 2, -1]).unwrap(),
        PatternPermutation::new(vec![2, 3, 1], 1, vec![0]).unwrap(),
    ]
}

/// Definitional check: for each later facet, the faces it shares with the
/// earlier facets form a complex whose maximal faces all have codimension one.
pub fn slow_is_shelling(facets: &[Vec<usize>]) -> bool {
    for i in 1..facets.len() {
        let f = &facets[i];
        let shared: Vec<BTreeSet<usize>> = (0u32..1 << f.len())
            .map(|mask| (0..f.len()).filter(|k| mask >> k & 1 == 1).map(|k| f[k]).collect::<BTreeSet<_>>())
            .filter(|g| facets[..i].iter().any(|h| g.iter().all(|v| h.contains(v))))
            .collect();
        let maximal = shared
            .iter()
            .filter(|g| !shared.iter().any(|h| h.len() > g.len() && g.is_subset(h)));
        let mut any = false;
        for g in maximal {
            any = true;
            if g.len() + 1 != f.len() {
                return false;
            }
        }
        if !any {
            return false;
        }
    }
    true
}
