//! Finite Bruhat intervals `[μ, ν]` between eventually equal permutations.
//!
//! Elements are stored relative to a common base (`μ` for enumerated
//! intervals) and ordered by rank, then by one-line notation of the factor,
//! so indices are stable across runs. Cover edges carry their transposition
//! label `(p, q)` with `upper = lower ∘ (p, q)`.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::bruhat::{dm_chain, is_cover, leq_exact, relative_candidates, relative_length, CoverVerdict};
use crate::error::{Error, Result};
use crate::perm::{
    agreement_index, FiniteSupportPermutation, PatternPermutation, RelativePermutation,
    Transposition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverEdge {
    pub from: usize,
    pub to: usize,
    pub label: Transposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntervalJson", into = "IntervalJson")]
pub struct IntervalPoset {
    base: PatternPermutation,
    elements: Vec<RelativePermutation>,
    ranks: Vec<usize>,
    covers: Vec<CoverEdge>,
    /// Edge indices leaving each element, sorted by label.
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    /// Reflexive down-set of each element along the stored cover edges.
    below: Vec<FixedBitSet>,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    id: usize,
    window: Vec<usize>,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    base: PatternPermutation,
    elements: Vec<ElementJson>,
    covers: Vec<CoverEdge>,
}

impl TryFrom<IntervalJson> for IntervalPoset {
    type Error = Error;

    fn try_from(json: IntervalJson) -> Result<Self> {
        let mut elements = Vec::with_capacity(json.elements.len());
        let mut ranks = Vec::with_capacity(json.elements.len());
        for (k, el) in json.elements.into_iter().enumerate() {
            if el.id != k {
                return Err(Error::InvalidArgument(format!(
                    "element ids must be 0..n in order; found {} at position {k}",
                    el.id
                )));
            }
            let factor = FiniteSupportPermutation::new(el.window)?;
            elements.push(RelativePermutation::new(json.base.clone(), factor));
            ranks.push(el.rank);
        }
        IntervalPoset::from_parts(json.base, elements, ranks, json.covers)
    }
}

impl From<IntervalPoset> for IntervalJson {
    fn from(ip: IntervalPoset) -> Self {
        let elements = ip
            .elements
            .iter()
            .zip(&ip.ranks)
            .enumerate()
            .map(|(id, (el, &rank))| ElementJson {
                id,
                window: el.factor().window().to_vec(),
                rank,
            })
            .collect();
        IntervalJson {
            base: ip.base,
            elements,
            covers: ip.covers,
        }
    }
}

impl IntervalPoset {
    /// Assembles a poset from explicit parts without checking any order
    /// property; see [`grading_check`] for validation.
    pub fn from_parts(
        base: PatternPermutation,
        elements: Vec<RelativePermutation>,
        ranks: Vec<usize>,
        covers: Vec<CoverEdge>,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 || ranks.len() != n {
            return Err(Error::InvalidArgument(
                "an interval needs at least one element and one rank per element".into(),
            ));
        }
        if elements.iter().any(|e| e.base() != &base) {
            return Err(Error::BaseMismatch);
        }
        if let Some(c) = covers.iter().find(|c| c.from >= n || c.to >= n || c.from == c.to) {
            return Err(Error::InvalidArgument(format!(
                "cover edge {} -> {} is out of range",
                c.from, c.to
            )));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (k, c) in covers.iter().enumerate() {
            up[c.from].push(k);
            down[c.to].push(k);
        }
        for edges in &mut up {
            edges.sort_by_key(|&k| covers[k].label);
        }
        let below = down_sets(n, &covers, &up, &down);
        Ok(Self {
            base,
            elements,
            ranks,
            covers,
            up,
            down,
            below,
        })
    }

    pub fn base(&self) -> &PatternPermutation {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[RelativePermutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &RelativePermutation {
        &self.elements[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn covers(&self) -> &[CoverEdge] {
        &self.covers
    }

    pub fn bottom_index(&self) -> usize {
        0
    }

    pub fn top_index(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn bottom(&self) -> &RelativePermutation {
        &self.elements[0]
    }

    pub fn top(&self) -> &RelativePermutation {
        &self.elements[self.top_index()]
    }

    pub fn index_of(&self, el: &RelativePermutation) -> Option<usize> {
        self.elements.iter().position(|x| x == el)
    }

    /// Order relation along the stored cover edges.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below[j].contains(i)
    }

    /// Cover edges leaving `i`, in label order.
    pub fn upper_covers(&self, i: usize) -> impl Iterator<Item = &CoverEdge> {
        self.up[i].iter().map(|&k| &self.covers[k])
    }

    pub fn lower_covers(&self, i: usize) -> impl Iterator<Item = &CoverEdge> {
        self.down[i].iter().map(|&k| &self.covers[k])
    }

    /// `(i₀ - 1)!` for `i₀ = agreement_index(bottom, top)`, saturating.
    pub fn cardinality_bound(&self) -> u128 {
        let i0 = agreement_index(self.bottom().pattern(), self.top().pattern())
            .expect("elements share a base");
        (1..i0 as u128).try_fold(1u128, |acc, k| acc.checked_mul(k)).unwrap_or(u128::MAX)
    }

    /// Number of entries needed to show every element's one-line window.
    pub fn display_len(&self) -> usize {
        self.elements
            .iter()
            .map(|e| e.factor().support_bound())
            .max()
            .unwrap_or(0)
            .max(self.base.prefix_len())
            .max(1)
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let len = self.display_len();
        let mut out = String::from("digraph interval {\n");
        for (i, el) in self.elements.iter().enumerate() {
            let line: Vec<String> = el.pattern().one_line(len).iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("  n{i} [label=\"[{}]\"];\n", line.join(",")));
        }
        for c in &self.covers {
            out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", c.from, c.to, c.label));
        }
        out.push_str("}\n");
        out
    }

    /// Sub-interval membership: `x <= z <= y`.
    fn between(&self, x: usize, z: usize, y: usize) -> bool {
        self.leq(x, z) && self.leq(z, y)
    }
}

fn down_sets(
    n: usize,
    covers: &[CoverEdge],
    up: &[Vec<usize>],
    down: &[Vec<usize>],
) -> Vec<FixedBitSet> {
    let mut below: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(i);
            s
        })
        .collect();
    // Kahn order along up-edges; elements on a cycle keep the trivial set.
    let mut indegree: Vec<usize> = down.iter().map(Vec::len).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    while let Some(i) = queue.pop_front() {
        for &k in &up[i] {
            let j = covers[k].to;
            let (src, dst) = if i < j {
                let (a, b) = below.split_at_mut(j);
                (&a[i], &mut b[0])
            } else {
                let (a, b) = below.split_at_mut(i);
                (&b[0], &mut a[j])
            };
            dst.union_with(src);
            indegree[j] -= 1;
            if indegree[j] == 0 {
                queue.push_back(j);
            }
        }
    }
    below
}

/// Enumerates `[μ, ν]` by breadth-first closure under relative candidates.
///
/// Both ends must share their base; the result uses that base. Every element
/// lies on a saturated chain from `μ` whose steps are relative candidates for
/// `ν`, so the closure is complete and its edges are exactly the covers.
pub fn enumerate_interval(mu: &RelativePermutation, nu: &RelativePermutation) -> Result<IntervalPoset> {
    if mu.base() != nu.base() {
        return Err(Error::BaseMismatch);
    }
    if !leq_exact(mu.pattern(), nu.pattern())? {
        return Err(Error::NotOrdered);
    }
    let base = mu.base().clone();
    let mut found: Vec<(RelativePermutation, usize)> = vec![(mu.clone(), 0)];
    let mut index: HashMap<RelativePermutation, usize> = HashMap::from([(mu.clone(), 0)]);
    let mut raw_covers = Vec::new();
    let mut frontier = vec![0usize];
    let mut rank = 0;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            let current = found[i].0.clone();
            for t in relative_candidates(current.pattern(), nu.pattern())? {
                let up = current.compose_transposition(t);
                let j = *index.entry(up.clone()).or_insert_with(|| {
                    found.push((up, rank + 1));
                    next.push(found.len() - 1);
                    found.len() - 1
                });
                raw_covers.push(CoverEdge {
                    from: i,
                    to: j,
                    label: t,
                });
            }
        }
        frontier = next;
        rank += 1;
    }

    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| {
        (found[a].1, found[a].0.factor()).cmp(&(found[b].1, found[b].0.factor()))
    });
    let mut position = vec![0; found.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let ranks = order.iter().map(|&old| found[old].1).collect();
    let mut slots: Vec<Option<RelativePermutation>> = found.into_iter().map(|(e, _)| Some(e)).collect();
    let elements = order.iter().map(|&old| slots[old].take().expect("each index once")).collect();
    let mut covers: Vec<CoverEdge> = raw_covers
        .into_iter()
        .map(|c| CoverEdge {
            from: position[c.from],
            to: position[c.to],
            label: c.label,
        })
        .collect();
    covers.sort_by_key(|c| (c.from, c.label));
    IntervalPoset::from_parts(base, elements, ranks, covers)
}

/// Convenience wrapper: `[μ, ν]` relative to base `μ`.
pub fn enumerate_between(mu: &PatternPermutation, nu: &PatternPermutation) -> Result<IntervalPoset> {
    let bottom = RelativePermutation::at_base(mu.clone());
    let top = RelativePermutation::from_pattern(mu.clone(), nu)?;
    enumerate_interval(&bottom, &top)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GradingViolation {
    /// Some element other than the bottom has no lower cover.
    ExtraMinimum { element: usize },
    /// No saturated chain from the bottom reaches the element.
    Unreachable { element: usize },
    /// Saturated chains from the bottom have different lengths, or the
    /// common length is not the relative length.
    ChainLength {
        element: usize,
        shortest: usize,
        longest: usize,
        expected: u64,
    },
    /// Stored rank differs from the relative length.
    Rank { element: usize, stored: usize, expected: u64 },
    /// A stored edge is not a cover with that label.
    BadEdge { from: usize, to: usize },
    /// Two elements one rank apart form a cover with no stored edge.
    MissingEdge { from: usize, to: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub passed: bool,
    pub ranks: Vec<usize>,
    pub violation: Option<GradingViolation>,
}

/// Checks the unique minimum, saturated chains to every element, equal
/// chain lengths matching the relative length, and that the stored edges
/// are exactly the cover relations. Reports the first violation.
pub fn grading_check(ip: &IntervalPoset) -> GradingReport {
    let violation = find_grading_violation(ip);
    GradingReport {
        passed: violation.is_none(),
        ranks: ip.ranks.clone(),
        violation,
    }
}

fn find_grading_violation(ip: &IntervalPoset) -> Option<GradingViolation> {
    use GradingViolation::*;
    let n = ip.len();
    if let Some(element) = (1..n).find(|&i| ip.down[i].is_empty()) {
        return Some(ExtraMinimum { element });
    }
    // Shortest and longest chain lengths from the bottom, by relaxation in
    // rank order (edges of a valid interval increase the rank by one).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| ip.ranks[i]);
    let mut shortest = vec![usize::MAX; n];
    let mut longest = vec![0usize; n];
    shortest[0] = 0;
    for &i in &order {
        if shortest[i] == usize::MAX {
            continue;
        }
        for c in ip.upper_covers(i) {
            shortest[c.to] = shortest[c.to].min(shortest[i] + 1);
            longest[c.to] = longest[c.to].max(longest[i] + 1);
        }
    }
    let bottom = ip.bottom().pattern();
    for i in 0..n {
        if shortest[i] == usize::MAX {
            return Some(Unreachable { element: i });
        }
        let Ok(expected) = relative_length(bottom, ip.elements[i].pattern()) else {
            return Some(Unreachable { element: i });
        };
        if shortest[i] as u64 != expected || longest[i] as u64 != expected {
            return Some(ChainLength {
                element: i,
                shortest: shortest[i],
                longest: longest[i],
                expected,
            });
        }
        if ip.ranks[i] as u64 != expected {
            return Some(Rank {
                element: i,
                stored: ip.ranks[i],
                expected,
            });
        }
    }
    for c in &ip.covers {
        let verdict = is_cover(ip.elements[c.from].pattern(), ip.elements[c.to].pattern());
        if verdict != CoverVerdict::Cover(c.label) {
            return Some(BadEdge { from: c.from, to: c.to });
        }
    }
    let mut by_rank: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let r = ip.ranks[i];
        if by_rank.len() <= r {
            by_rank.resize(r + 1, Vec::new());
        }
        by_rank[r].push(i);
    }
    for r in 1..by_rank.len() {
        for &to in &by_rank[r] {
            for &from in &by_rank[r - 1] {
                let stored = ip.down[to].iter().any(|&k| ip.covers[k].from == from);
                if !stored && is_cover(ip.elements[from].pattern(), ip.elements[to].pattern()).holds()
                {
                    return Some(MissingEdge { from, to });
                }
            }
        }
    }
    None
}

/// Sequence of edge labels along a chain, compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct JHWord(pub Vec<Transposition>);

impl JHWord {
    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }
}

impl std::fmt::Display for JHWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Transposition::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A saturated chain given by element indices, with its label word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalChain {
    pub elements: Vec<usize>,
    pub word: JHWord,
}

/// All saturated chains from `x` to `y` inside the interval, depth first in
/// label order (so the result is sorted by word).
pub fn chains_between(ip: &IntervalPoset, x: usize, y: usize) -> Vec<MaximalChain> {
    let mut out = Vec::new();
    if !ip.leq(x, y) {
        return out;
    }
    let mut path = vec![x];
    let mut word = Vec::new();
    collect_chains(ip, y, &mut path, &mut word, &mut out);
    out
}

fn collect_chains(
    ip: &IntervalPoset,
    y: usize,
    path: &mut Vec<usize>,
    word: &mut Vec<Transposition>,
    out: &mut Vec<MaximalChain>,
) {
    let current = *path.last().expect("non-empty path");
    if current == y {
        out.push(MaximalChain {
            elements: path.clone(),
            word: JHWord(word.clone()),
        });
        return;
    }
    for c in ip.upper_covers(current) {
        if ip.leq(c.to, y) {
            path.push(c.to);
            word.push(c.label);
            collect_chains(ip, y, path, word, out);
            path.pop();
            word.pop();
        }
    }
}

/// All maximal chains bottom → top with their label words.
pub fn maximal_chains(ip: &IntervalPoset) -> Vec<MaximalChain> {
    chains_between(ip, ip.bottom_index(), ip.top_index())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ElViolationKind {
    NoIncreasingChain,
    SeveralIncreasingChains,
    /// The lexicographically first chain is not increasing.
    LexFirstNotIncreasing,
    /// The increasing chain differs from the greedy `(d, m)` chain.
    DmChainMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElViolation {
    pub lower: usize,
    pub upper: usize,
    pub kind: ElViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElReport {
    pub passed: bool,
    pub pairs_checked: usize,
    pub violations: Vec<ElViolation>,
}

/// Lexicographically first saturated chain `x → y`: all saturated chains in
/// a graded interval have the same length and labels out of one element are
/// distinct, so taking the least label at every step is lex-first.
pub fn lex_first_chain(ip: &IntervalPoset, x: usize, y: usize) -> Option<MaximalChain> {
    if !ip.leq(x, y) {
        return None;
    }
    let mut elements = vec![x];
    let mut word = Vec::new();
    let mut current = x;
    while current != y {
        let edge = ip.upper_covers(current).find(|c| ip.leq(c.to, y))?;
        current = edge.to;
        elements.push(current);
        word.push(edge.label);
    }
    Some(MaximalChain {
        elements,
        word: JHWord(word),
    })
}

/// Number of saturated chains `x → y` with strictly increasing labels,
/// counting at most `cap`.
pub fn count_increasing_chains(ip: &IntervalPoset, x: usize, y: usize, cap: usize) -> usize {
    fn walk(
        ip: &IntervalPoset,
        at: usize,
        y: usize,
        last: Option<Transposition>,
        found: &mut usize,
        cap: usize,
    ) {
        if *found >= cap {
            return;
        }
        if at == y {
            *found += 1;
            return;
        }
        for c in ip.upper_covers(at) {
            if last.is_none_or(|l| l < c.label) && ip.between(at, c.to, y) {
                walk(ip, c.to, y, Some(c.label), found, cap);
            }
        }
    }
    let mut found = 0;
    if ip.leq(x, y) {
        walk(ip, x, y, None, &mut found, cap);
    }
    found
}

/// Checks, for every pair `x < y`, that exactly one saturated chain of
/// `[x, y]` has an increasing label word, that it is the lexicographically
/// first chain, and that it coincides with the greedy `(d, m)` chain.
pub fn el_check(ip: &IntervalPoset) -> ElReport {
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for y in 0..ip.len() {
        for x in ip.below[y].ones() {
            if x == y {
                continue;
            }
            pairs_checked += 1;
            let mut flag = |kind| violations.push(ElViolation { lower: x, upper: y, kind });
            let increasing = count_increasing_chains(ip, x, y, 2);
            match increasing {
                0 => flag(ElViolationKind::NoIncreasingChain),
                1 => {}
                _ => flag(ElViolationKind::SeveralIncreasingChains),
            }
            let Some(first) = lex_first_chain(ip, x, y) else {
                flag(ElViolationKind::NoIncreasingChain);
                continue;
            };
            if !first.word.is_increasing() {
                flag(ElViolationKind::LexFirstNotIncreasing);
            }
            let greedy = dm_chain(ip.elements[x].pattern(), ip.elements[y].pattern(), first.word.0.len() + 1);
            let matches = greedy.is_ok_and(|g| g.reached_target && g.labels() == first.word.0);
            if !matches {
                flag(ElViolationKind::DmChainMismatch);
            }
        }
    }
    ElReport {
        passed: violations.is_empty(),
        pairs_checked,
        violations,
    }
}

/// The increasing union `[σ, σ₁] ⊆ [σ, σ₂] ⊆ …` along the greedy chain
/// `σ ⋖ σ₁ ⋖ σ₂ ⋖ …` towards `ω`.
#[derive(Debug, Clone)]
pub struct Filtration {
    sigma: PatternPermutation,
    omega: PatternPermutation,
    /// `σ₁, σ₂, …` relative to `σ`; may extend past `intervals`.
    anchors: Vec<RelativePermutation>,
    labels: Vec<Transposition>,
    intervals: Vec<IntervalPoset>,
    max_depth: usize,
}

/// How far anchors may be extended on demand unless configured otherwise.
pub const DEFAULT_MAX_DEPTH: usize = 64;

impl Filtration {
    pub fn sigma(&self) -> &PatternPermutation {
        &self.sigma
    }

    pub fn omega(&self) -> &PatternPermutation {
        &self.omega
    }

    pub fn anchors(&self) -> &[RelativePermutation] {
        &self.anchors
    }

    pub fn labels(&self) -> &[Transposition] {
        &self.labels
    }

    pub fn intervals(&self) -> &[IntervalPoset] {
        &self.intervals
    }

    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn set_max_depth(&mut self, max_depth: usize) {
        self.max_depth = max_depth.max(self.anchors.len());
    }

    /// Whether the anchors reached `ω` itself.
    pub fn reached_target(&self) -> bool {
        self.anchors
            .last()
            .is_some_and(|a| a.pattern() == &self.omega)
    }

    /// Element sets of consecutive intervals are nested, level by level.
    pub fn nesting(&self) -> Vec<bool> {
        self.intervals
            .windows(2)
            .map(|pair| pair[0].elements().iter().all(|e| pair[1].index_of(e).is_some()))
            .collect()
    }

    /// Appends one greedy step; returns false once `ω` or the depth limit is hit.
    fn extend(&mut self) -> Result<bool> {
        if self.anchors.len() >= self.max_depth || self.reached_target() {
            return Ok(false);
        }
        let last = self
            .anchors
            .last()
            .cloned()
            .unwrap_or_else(|| RelativePermutation::at_base(self.sigma.clone()));
        let t = crate::perm::dmf(last.pattern(), &self.omega)?.transposition();
        self.anchors.push(last.compose_transposition(t));
        self.labels.push(t);
        Ok(true)
    }
}

/// Anchors from `dm_chain(σ, ω, depth)` and the intervals `[σ, σₙ]`.
pub fn build_filtration(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    depth: usize,
) -> Result<Filtration> {
    if depth == 0 {
        return Err(Error::InvalidArgument("depth must be at least 1".into()));
    }
    let chain = dm_chain(sigma, omega, depth)?;
    let bottom = chain.start.clone();
    let mut intervals = Vec::with_capacity(chain.steps.len());
    for (_, anchor) in &chain.steps {
        intervals.push(enumerate_interval(&bottom, anchor)?);
    }
    Ok(Filtration {
        sigma: sigma.clone(),
        omega: omega.clone(),
        labels: chain.labels(),
        anchors: chain.steps.into_iter().map(|(_, a)| a).collect(),
        intervals,
        max_depth: DEFAULT_MAX_DEPTH.max(depth),
    })
}

/// Least `n` (1-based) with `ν <= σₙ`, for `ν` in `[σ, ω]` eventually equal
/// to `σ`.
///
/// Once an anchor agrees with `ω` on `[1, i₀]` (with `i₀` the agreement index
/// of `ν` and `σ`) it lies above `ν`, so the scan stops there. Anchors are
/// extended on demand up to the filtration's maximum depth.
pub fn find_covering_index(filtration: &mut Filtration, nu: &PatternPermutation) -> Result<usize> {
    let i0 = agreement_index(nu, &filtration.sigma).ok_or(Error::NotEventuallyEqual)?;
    let mut n = 0;
    loop {
        if n == filtration.anchors.len() && !filtration.extend()? {
            return Err(if filtration.reached_target() {
                Error::NotOrdered
            } else {
                Error::DepthExhausted {
                    depth: filtration.max_depth,
                }
            });
        }
        let anchor = filtration.anchors[n].pattern();
        n += 1;
        if leq_exact(nu, anchor)? {
            return Ok(n);
        }
        if (1..=i0).all(|i| anchor.eval(i) == filtration.omega.eval(i)) {
            // Past the bound the element must lie below; it is not below ω.
            return Err(Error::NotOrdered);
        }
    }
}
