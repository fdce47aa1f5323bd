//! Order complexes of intervals, shelling verification, f- and h-vectors,
//! and Stanley–Reisner generators.
//!
//! Complexes are stored by their facets only; faces are implied.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::bruhat::leq_exact;
use crate::error::{Error, Result};
use crate::interval::{
    el_check, find_covering_index, grading_check, maximal_chains, Filtration, IntervalPoset,
};
use crate::perm::PatternPermutation;

/// A finite simplicial complex on vertices `0..vertex_count`, given by its
/// facets (sorted vertex lists, pairwise incomparable).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    vertex_labels: Vec<String>,
    facets: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;

    fn try_from(json: ComplexJson) -> Result<Self> {
        SimplicialComplex::new(json.vertices, json.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(sc: SimplicialComplex) -> Self {
        ComplexJson {
            vertices: sc.vertex_labels,
            facets: sc.facets,
        }
    }
}

impl SimplicialComplex {
    /// Sorts each facet and drops duplicates and facets contained in others,
    /// keeping first occurrences in order.
    pub fn new(vertex_labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        let n = vertex_labels.len();
        let mut sorted: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
            }
            sorted.push(f);
        }
        let mut keep: Vec<Vec<usize>> = Vec::with_capacity(sorted.len());
        for (i, f) in sorted.iter().enumerate() {
            let dominated = sorted.iter().enumerate().any(|(j, g)| {
                j != i && is_subset(f, g) && (f.len() < g.len() || j < i)
            });
            if !dominated {
                keep.push(f.clone());
            }
        }
        Ok(Self {
            vertex_labels,
            facets: keep,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Common facet size, or the first facet breaking purity.
    pub fn purity(&self) -> Result<usize> {
        let Some(first) = self.facets.first() else {
            return Ok(0);
        };
        let expected = first.len();
        match self.facets.iter().position(|f| f.len() != expected) {
            None => Ok(expected),
            Some(facet) => Err(Error::NotPure {
                facet,
                expected,
                found: self.facets[facet].len(),
            }),
        }
    }

    /// Whether `face` (sorted) lies in some facet.
    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }
}

/// Both slices sorted ascending.
fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.by_ref().any(|w| w == v))
}

/// Vertices are the interval elements (labelled by one-line windows); facets
/// are the maximal chains, in lexicographic order of their label words.
pub fn order_complex(ip: &IntervalPoset) -> SimplicialComplex {
    let len = ip.display_len();
    let labels = ip
        .elements()
        .iter()
        .map(|e| {
            let line: Vec<String> = e.pattern().one_line(len).iter().map(|v| v.to_string()).collect();
            format!("[{}]", line.join(","))
        })
        .collect();
    let facets = maximal_chains(ip).into_iter().map(|c| c.elements).collect();
    SimplicialComplex::new(labels, facets).expect("chains use interval vertices")
}

/// A facet ordering with its shelling verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingOrder {
    /// Facet indices in shelling order.
    pub order: Vec<usize>,
    pub passed: bool,
    /// 1-based position in `order` of the first facet breaking the condition.
    pub failure_index: Option<usize>,
    /// `|R(F_i)|` for each checked position, where `R(F_i)` is the set of
    /// vertices whose removal gives a face of an earlier facet.
    pub restriction_sizes: Vec<usize>,
}

impl ShellingOrder {
    /// `h_j = #{i : |R(F_i)| = j}`, valid when the order is a shelling.
    pub fn h_vector(&self, facet_size: usize) -> Vec<u64> {
        let mut h = vec![0u64; facet_size + 1];
        for &r in &self.restriction_sizes {
            h[r] += 1;
        }
        h
    }
}

/// Checks that each facet after the first meets the union of the earlier ones
/// in a non-empty union of its codimension-one faces.
///
/// Equivalently, with `R(F_i)` the vertices `v` such that `F_i \ {v}` lies in
/// an earlier facet: `R(F_i)` is non-empty and no earlier facet contains all
/// of it (for every earlier `F_j` some `F_i \ {v}` with `v ∈ R(F_i)` contains
/// `F_i ∩ F_j`).
pub fn verify_shelling(sc: &SimplicialComplex, order: &[usize]) -> Result<ShellingOrder> {
    sc.purity()?;
    let m = sc.facets.len();
    let mut seen = vec![false; m];
    if order.len() != m || order.iter().any(|&i| i >= m || std::mem::replace(&mut seen[i], true)) {
        return Err(Error::InvalidArgument(
            "shelling order must be a permutation of the facet indices".into(),
        ));
    }
    let mut ridges: HashSet<Vec<usize>> = HashSet::new();
    let mut containing: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(m); sc.vertex_count()];
    let mut restriction_sizes = Vec::with_capacity(m);
    let mut failure_index = None;
    for (pos, &fi) in order.iter().enumerate() {
        let facet = &sc.facets[fi];
        let restriction: Vec<usize> = (0..facet.len())
            .filter(|&k| ridges.contains(&without(facet, k)))
            .map(|k| facet[k])
            .collect();
        if pos > 0 && (restriction.is_empty() || earlier_contains(&containing, &restriction)) {
            failure_index = Some(pos + 1);
            break;
        }
        restriction_sizes.push(restriction.len());
        for k in 0..facet.len() {
            ridges.insert(without(facet, k));
        }
        for &v in facet {
            containing[v].insert(pos);
        }
    }
    Ok(ShellingOrder {
        order: order.to_vec(),
        passed: failure_index.is_none(),
        failure_index,
        restriction_sizes,
    })
}

fn without(facet: &[usize], k: usize) -> Vec<usize> {
    let mut face = facet.to_vec();
    face.remove(k);
    face
}

/// Whether some already-placed facet contains every vertex of `face`.
fn earlier_contains(containing: &[FixedBitSet], face: &[usize]) -> bool {
    let sets: Vec<&[fixedbitset::Block]> = face.iter().map(|&v| containing[v].as_slice()).collect();
    let words = sets.iter().map(|s| s.len()).min().unwrap_or(0);
    (0..words).any(|w| sets.iter().fold(!0, |acc, s| acc & s[w]) != 0)
}

/// Orders the maximal chains of `ip` lexicographically by label word (ties,
/// if any, broken by the elements' windows) and verifies the result.
pub fn lex_shelling_order(ip: &IntervalPoset) -> Result<(SimplicialComplex, ShellingOrder)> {
    let sc = order_complex(ip);
    let chains = maximal_chains(ip);
    let position: HashMap<&[usize], usize> = sc
        .facets
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut keyed: Vec<(&crate::interval::JHWord, Vec<_>, usize)> = chains
        .iter()
        .map(|c| {
            let mut sorted = c.elements.clone();
            sorted.sort_unstable();
            let windows = c.elements.iter().map(|&e| ip.element(e).factor()).collect::<Vec<_>>();
            (&c.word, windows, position[sorted.as_slice()])
        })
        .collect();
    keyed.sort();
    let order: Vec<usize> = keyed.into_iter().map(|(_, _, i)| i).collect();
    let shelling = verify_shelling(&sc, &order)?;
    Ok((sc, shelling))
}

/// Whether `small`, mapped into `big` by `injection`, is a full subcomplex:
/// its faces are faces of `big`, and every face of `big` on the image vertices
/// is the image of a face of `small`.
pub fn is_full_subcomplex(
    small: &SimplicialComplex,
    big: &SimplicialComplex,
    injection: &[usize],
) -> Result<bool> {
    if injection.len() != small.vertex_count() {
        return Err(Error::InvalidArgument("injection must map every vertex".into()));
    }
    let mut image = FixedBitSet::with_capacity(big.vertex_count());
    for &v in injection {
        if v >= big.vertex_count() || image.put(v) {
            return Err(Error::InvalidArgument("vertex map is not injective into the larger complex".into()));
        }
    }
    let mapped: Vec<Vec<usize>> = small
        .facets
        .iter()
        .map(|f| {
            let mut g: Vec<usize> = f.iter().map(|&v| injection[v]).collect();
            g.sort_unstable();
            g
        })
        .collect();
    let big_index = facet_index(big.vertex_count(), &big.facets);
    if mapped.iter().any(|f| !covered(&big_index, f, big.facets.len())) {
        return Ok(false);
    }
    let small_index = facet_index(big.vertex_count(), &mapped);
    for f in &big.facets {
        let restricted: Vec<usize> = f.iter().copied().filter(|&v| image.contains(v)).collect();
        if !restricted.is_empty() && !covered(&small_index, &restricted, mapped.len()) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn facet_index(vertex_count: usize, facets: &[Vec<usize>]) -> Vec<FixedBitSet> {
    let mut index = vec![FixedBitSet::with_capacity(facets.len()); vertex_count];
    for (i, f) in facets.iter().enumerate() {
        for &v in f {
            index[v].insert(i);
        }
    }
    index
}

fn covered(index: &[FixedBitSet], face: &[usize], facet_count: usize) -> bool {
    if face.is_empty() {
        return facet_count > 0;
    }
    earlier_contains(index, face)
}

/// `f[i]` counts faces with `i` vertices (`f[0] = 1` for the empty face);
/// `h` is its binomial transform. Faces are enumerated exhaustively.
pub fn f_h_vectors(sc: &SimplicialComplex) -> Result<(Vec<u64>, Vec<i64>)> {
    let d = sc.purity()?;
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    for facet in &sc.facets {
        for mask in 0u64..(1 << facet.len()) {
            let face: Vec<usize> = (0..facet.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| facet[k])
                .collect();
            faces.insert(face);
        }
    }
    let mut f = vec![0u64; d + 1];
    for face in &faces {
        f[face.len()] += 1;
    }
    if sc.facets.is_empty() {
        f[0] = 1;
    }
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) as i64 * f[i] as i64
                })
                .sum()
        })
        .collect();
    Ok((f, h))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Incomparable pairs `(i, j)`, `i < j`, of interval elements: the quadratic
/// monomials `x_i x_j` generating the Stanley–Reisner ideal of the order
/// complex.
pub fn stanley_reisner_generators(ip: &IntervalPoset) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..ip.len() {
        for j in i + 1..ip.len() {
            if !ip.leq(i, j) && !ip.leq(j, i) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Plain-text ideal export: a header mapping variables to one-line windows,
/// then one `x_i * x_j` line per generator.
pub fn ideal_text(ip: &IntervalPoset, generators: &[(usize, usize)]) -> String {
    let labels = order_complex_labels(ip);
    let mut out = String::new();
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("# x_{i} = {label}\n"));
    }
    if generators.is_empty() {
        out.push_str("# zero ideal: every pair of elements is comparable\n");
    }
    for (i, j) in generators {
        out.push_str(&format!("x_{i} * x_{j}\n"));
    }
    out
}

/// Macaulay2 snippet defining the ring and the monomial ideal.
pub fn ideal_m2(ip: &IntervalPoset, generators: &[(usize, usize)]) -> String {
    let mut out = format!("R = QQ[x_0..x_{}];\n", ip.len() - 1);
    if generators.is_empty() {
        out.push_str("I = monomialIdeal(0_R);\n");
    } else {
        let gens: Vec<String> = generators.iter().map(|(i, j)| format!("x_{i}*x_{j}")).collect();
        out.push_str(&format!("I = monomialIdeal({});\n", gens.join(", ")));
    }
    out
}

fn order_complex_labels(ip: &IntervalPoset) -> Vec<String> {
    let len = ip.display_len();
    ip.elements()
        .iter()
        .map(|e| {
            let line: Vec<String> = e.pattern().one_line(len).iter().map(|v| v.to_string()).collect();
            format!("[{}]", line.join(","))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    /// `n` for the interval `[σ, σₙ]`.
    pub level: usize,
    pub interval_size: usize,
    pub facet_count: usize,
    pub graded: bool,
    pub el_labeling: bool,
    pub shelling: bool,
    /// Full-subcomplex check into the next level; `None` for the last level.
    pub full_in_next: Option<bool>,
}

impl LevelReport {
    pub fn passed(&self) -> bool {
        self.graded && self.el_labeling && self.shelling && self.full_in_next != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageSample {
    pub element: PatternPermutation,
    /// The anchor index found, or the reason none was.
    pub anchor: std::result::Result<usize, String>,
    /// `ν <= σₙ` re-checked exactly for the returned anchor.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedShellabilityReport {
    pub levels: Vec<LevelReport>,
    pub coverage: Vec<CoverageSample>,
    pub passed: bool,
}

/// Per level: grading, EL-labeling, lexicographic shelling, and the
/// full-subcomplex embedding into the next level; plus a covering anchor for
/// each supplied sample element.
pub fn nested_shellability_report(
    filtration: &mut Filtration,
    samples: &[PatternPermutation],
) -> Result<NestedShellabilityReport> {
    let intervals = filtration.intervals().to_vec();
    let complexes: Vec<SimplicialComplex> = intervals.iter().map(order_complex).collect();
    let mut levels = Vec::with_capacity(intervals.len());
    for (n, ip) in intervals.iter().enumerate() {
        let (_, shelling) = lex_shelling_order(ip)?;
        let full_in_next = match intervals.get(n + 1) {
            None => None,
            Some(next) => {
                let injection: Option<Vec<usize>> = ip.elements().iter().map(|e| next.index_of(e)).collect();
                Some(match injection {
                    Some(map) => is_full_subcomplex(&complexes[n], &complexes[n + 1], &map)?,
                    None => false,
                })
            }
        };
        levels.push(LevelReport {
            level: n + 1,
            interval_size: ip.len(),
            facet_count: complexes[n].facets().len(),
            graded: grading_check(ip).passed,
            el_labeling: el_check(ip).passed,
            shelling: shelling.passed,
            full_in_next,
        });
    }
    let mut coverage = Vec::with_capacity(samples.len());
    for nu in samples {
        let (anchor, verified) = match find_covering_index(filtration, nu) {
            Ok(n) => {
                let above = filtration.anchors()[n - 1].pattern();
                (Ok(n), leq_exact(nu, above).unwrap_or(false))
            }
            Err(e) => (Err(e.to_string()), false),
        };
        coverage.push(CoverageSample {
            element: nu.clone(),
            anchor,
            verified,
        });
    }
    let passed = levels.iter().all(LevelReport::passed) && coverage.iter().all(|c| c.verified);
    Ok(NestedShellabilityReport {
        levels,
        coverage,
        passed,
    })
}
