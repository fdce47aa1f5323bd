//! Bruhat order comparisons, cover relations, relative candidates and the
//! greedy `(d, m)` saturated chain.
//!
//! Comparisons between eventually equal permutations are exact. For pairs
//! that differ at infinitely many positions only refutations are certified:
//! a violated tableau row is a finite witness, while agreement up to a
//! horizon is reported as uncertified.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{
    agreement_index, dmf, first_difference, pseudo_length_prefix, rank_corner, PatternPermutation,
    RelativePermutation, Transposition,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    LessOrEqual,
    NotLessOrEqual,
}

/// Row `n` of the tableau where the lower permutation's sorted prefix is not
/// dominated entrywise by the upper one's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableauWitness {
    pub n: usize,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

/// Outcome of an order comparison.
///
/// `NotLessOrEqual` always carries a witness and is certified.
/// `LessOrEqual` is certified only when the comparison covered every row that
/// can fail; otherwise it only means no violation was found up to the horizon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub relation: Relation,
    pub certified: bool,
    pub witness: Option<TableauWitness>,
}

impl OrderVerdict {
    /// No violation found, but rows beyond the horizon were not covered.
    pub fn is_inconclusive(&self) -> bool {
        self.relation == Relation::LessOrEqual && !self.certified
    }
}

/// First tableau row in `1..=rows` where `{σ(1..n)} <= {ω(1..n)}` fails.
fn tableau_violation(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    rows: usize,
) -> Option<TableauWitness> {
    let mut lower: Vec<usize> = Vec::with_capacity(rows);
    let mut upper: Vec<usize> = Vec::with_capacity(rows);
    for n in 1..=rows {
        let (a, b) = (sigma.eval(n), omega.eval(n));
        lower.insert(lower.partition_point(|&x| x < a), a);
        upper.insert(upper.partition_point(|&x| x < b), b);
        if lower.iter().zip(&upper).any(|(x, y)| x > y) {
            return Some(TableauWitness { n, lower, upper });
        }
    }
    None
}

/// Exact `σ <= ω` for eventually equal permutations.
///
/// Beyond row `i₀ - 1` the two prefix sets coincide (both are the complement
/// of the shared tail image), so only the rows before it are checked.
pub fn leq_exact(sigma: &PatternPermutation, omega: &PatternPermutation) -> Result<bool> {
    let i0 = agreement_index(sigma, omega).ok_or(Error::NotEventuallyEqual)?;
    Ok(tableau_violation(sigma, omega, i0.saturating_sub(1)).is_none())
}

/// Tableau comparison over rows `1..=horizon`.
pub fn leq_horizon(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    horizon: usize,
) -> OrderVerdict {
    if let Some(witness) = tableau_violation(sigma, omega, horizon) {
        return OrderVerdict {
            relation: Relation::NotLessOrEqual,
            certified: true,
            witness: Some(witness),
        };
    }
    let certified = agreement_index(sigma, omega).is_some_and(|i0| horizon + 1 >= i0);
    OrderVerdict {
        relation: Relation::LessOrEqual,
        certified,
        witness: None,
    }
}

/// Exact comparison when the pair is eventually equal, horizon-bounded
/// otherwise.
pub fn compare(sigma: &PatternPermutation, omega: &PatternPermutation, horizon: usize) -> OrderVerdict {
    match agreement_index(sigma, omega) {
        Some(i0) => leq_horizon(sigma, omega, i0.saturating_sub(1)),
        None => leq_horizon(sigma, omega, horizon),
    }
}

/// Rank-matrix form of the order over the `window × window` corner: the first
/// `(a, b)` with `r_{a,b}(σ) < r_{a,b}(ω)`, if any.
pub fn rank_violation(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    window: usize,
) -> Option<(usize, usize)> {
    for b in 1..=window {
        for a in 1..=window {
            if rank_corner(sigma, a, b) < rank_corner(omega, a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `σ < σ ∘ (p, q)`, which holds exactly when `σ(p) < σ(q)`.
pub fn goes_up(sigma: &PatternPermutation, t: Transposition) -> bool {
    sigma.eval(t.p()) < sigma.eval(t.q())
}

/// First position `p < l < q` with `σ(p) < σ(l) < σ(q)`.
fn intermediate_position(sigma: &PatternPermutation, t: Transposition) -> Option<usize> {
    let (low, high) = (sigma.eval(t.p()), sigma.eval(t.q()));
    (t.p() + 1..t.q()).find(|&l| {
        let v = sigma.eval(l);
        low < v && v < high
    })
}

/// Whether `σ ⋖ σ ∘ t` (the going-up condition plus no intermediate value).
pub fn is_cover_move(sigma: &PatternPermutation, t: Transposition) -> bool {
    goes_up(sigma, t) && intermediate_position(sigma, t).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NotCoverReason {
    Equal,
    NotEventuallyEqual,
    /// `σ⁻¹ ∘ ν` is not a single transposition.
    NotATransposition,
    /// `σ(p) > σ(q)`: the move goes down.
    GoesDown,
    /// A value between `σ(p)` and `σ(q)` sits between positions `p` and `q`.
    Intermediate { position: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CoverVerdict {
    Cover(Transposition),
    NotCover(NotCoverReason),
}

impl CoverVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CoverVerdict::Cover(_))
    }

    pub fn label(&self) -> Option<Transposition> {
        match *self {
            CoverVerdict::Cover(t) => Some(t),
            CoverVerdict::NotCover(_) => None,
        }
    }
}

/// Decides `σ ⋖ ν` and returns the unique label `(p, q)` with `ν = σ ∘ (p, q)`.
pub fn is_cover(sigma: &PatternPermutation, nu: &PatternPermutation) -> CoverVerdict {
    use NotCoverReason::*;
    let Some(i0) = agreement_index(sigma, nu) else {
        return CoverVerdict::NotCover(NotEventuallyEqual);
    };
    let moved: Vec<usize> = (1..i0).filter(|&i| sigma.eval(i) != nu.eval(i)).collect();
    let t = match moved[..] {
        [] => return CoverVerdict::NotCover(Equal),
        [p, q] if sigma.eval(p) == nu.eval(q) && sigma.eval(q) == nu.eval(p) => {
            Transposition::new(p, q).expect("p < q")
        }
        _ => return CoverVerdict::NotCover(NotATransposition),
    };
    if !goes_up(sigma, t) {
        return CoverVerdict::NotCover(GoesDown);
    }
    match intermediate_position(sigma, t) {
        Some(position) => CoverVerdict::NotCover(Intermediate { position }),
        None => CoverVerdict::Cover(t),
    }
}

/// Whether `σ ⋖ σ ∘ t <= ω`, given that the caller has established `σ < ω`.
///
/// Checks the cover conditions and the strict rank inequality
/// `r_{a,b}(σ) > r_{a,b}(ω)` on the rectangle `σ(p) <= a < σ(q)`,
/// `p <= b < q`. The non-strict inequality everywhere else is the caller's
/// order certificate.
pub fn is_relative_candidate(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    t: Transposition,
) -> bool {
    if !is_cover_move(sigma, t) {
        return false;
    }
    let (low, high) = (sigma.eval(t.p()), sigma.eval(t.q()));
    let span = high - low;
    let mut below_sigma = vec![0usize; span];
    let mut below_omega = vec![0usize; span];
    // below_x[k] counts positions n <= b with x(n) <= low + k.
    let bump = |counts: &mut [usize], v: usize| {
        if v < high {
            for c in &mut counts[v.saturating_sub(low)..] {
                *c += 1;
            }
        }
    };
    for n in 1..t.p() {
        bump(&mut below_sigma, sigma.eval(n));
        bump(&mut below_omega, omega.eval(n));
    }
    for b in t.p()..t.q() {
        bump(&mut below_sigma, sigma.eval(b));
        bump(&mut below_omega, omega.eval(b));
        if below_sigma.iter().zip(&below_omega).any(|(s, o)| s <= o) {
            return false;
        }
    }
    true
}

/// All relative candidates for `ν < ω`, sorted lexicographically.
///
/// Requires `ν` eventually equal to `ω`: every element of `[ν, ω]` then agrees
/// with both from `i₀` on, so candidates satisfy `q < i₀`.
pub fn relative_candidates(
    nu: &PatternPermutation,
    omega: &PatternPermutation,
) -> Result<Vec<Transposition>> {
    let i0 = agreement_index(nu, omega).ok_or(Error::NotEventuallyEqual)?;
    let mut out = Vec::new();
    for p in 1..i0 {
        for q in p + 1..i0 {
            let t = Transposition::new(p, q).expect("p < q");
            if is_relative_candidate(nu, omega, t) {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// One greedy step: `((d, m), σ ∘ (d, m))` for `σ < ω`.
pub fn dm_step(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
) -> Result<(Transposition, PatternPermutation)> {
    let t = dmf(sigma, omega)?.transposition();
    Ok((t, sigma.compose_transposition(t)))
}

/// A saturated chain built by repeated [`dm_step`]s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DMChain {
    pub start: RelativePermutation,
    pub steps: Vec<(Transposition, RelativePermutation)>,
    pub reached_target: bool,
    /// `d(last, ω)`; `None` once the target is reached. Growing values
    /// indicate convergence towards the target.
    pub final_d: Option<usize>,
}

impl DMChain {
    pub fn labels(&self) -> Vec<Transposition> {
        self.steps.iter().map(|(t, _)| *t).collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = &RelativePermutation> {
        std::iter::once(&self.start).chain(self.steps.iter().map(|(_, e)| e))
    }

    pub fn last(&self) -> &RelativePermutation {
        self.steps.last().map_or(&self.start, |(_, e)| e)
    }
}

/// Iterates [`dm_step`] from `σ` towards `ω` for at most `max_steps` steps.
///
/// Elements are expressed relative to `σ`. When `σ` is eventually equal to
/// `ω` the chain reaches `ω` after exactly `ℓ_σ(ω)` steps.
pub fn dm_chain(
    sigma: &PatternPermutation,
    omega: &PatternPermutation,
    max_steps: usize,
) -> Result<DMChain> {
    let start = RelativePermutation::at_base(sigma.clone());
    let mut current = start.clone();
    let mut steps = Vec::new();
    while steps.len() < max_steps && current.pattern() != omega {
        let t = dmf(current.pattern(), omega)?.transposition();
        current = current.compose_transposition(t);
        steps.push((t, current.clone()));
    }
    let final_d = first_difference(current.pattern(), omega).ok();
    Ok(DMChain {
        start,
        steps,
        reached_target: final_d.is_none(),
        final_d,
    })
}

/// `ℓ_σ(ν)`: the stabilized difference of pseudo-lengths, for `σ <= ν`
/// eventually equal.
pub fn relative_length(sigma: &PatternPermutation, nu: &PatternPermutation) -> Result<u64> {
    let i0 = agreement_index(sigma, nu).ok_or(Error::NotEventuallyEqual)?;
    let upper = pseudo_length_prefix(nu, i0).last();
    let lower = pseudo_length_prefix(sigma, i0).last();
    upper.checked_sub(lower).ok_or(Error::NotOrdered)
}

/// The lexicographically least label of a cover above `σ`.
pub fn up_transposition(sigma: &PatternPermutation) -> Transposition {
    // For p = 1 the first later position with a larger value is already a
    // cover, so the scan never leaves p = 1; the loop keeps the lex order
    // explicit.
    for p in 1.. {
        let v = sigma.eval(p);
        if let Some(q) = (p + 1..).find(|&q| sigma.eval(q) > v) {
            return Transposition::new(p, q).expect("p < q");
        }
    }
    unreachable!("every permutation has a cover above it")
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

    fn e() -> PatternPermutation {
        PatternPermutation::identity()
    }

    #[test]
    fn exact_order_examples() {
        assert_eq!(leq_exact(&e(), &w(&[3, 1, 2])), Ok(true));
        assert_eq!(leq_exact(&w(&[2, 1, 3]), &w(&[1, 3, 2])), Ok(false));
        assert_eq!(leq_exact(&w(&[1, 3, 2]), &w(&[2, 1, 3])), Ok(false));
        assert_eq!(leq_exact(&w(&[1, 3, 2]), &w(&[2, 3, 1])), Ok(true));
        assert_eq!(
            leq_exact(&e(), &PatternPermutation::theta()),
            Err(Error::NotEventuallyEqual)
        );
    }

    #[test]
    fn horizon_verdicts() {
        let (theta, rho) = (PatternPermutation::theta(), PatternPermutation::rho());
        let v = leq_horizon(&theta, &rho, 1000);
        assert_eq!(v.relation, Relation::LessOrEqual);
        assert!(!v.certified);
        assert!(v.is_inconclusive());

        let v = leq_horizon(&rho, &theta, 10);
        assert_eq!(v.relation, Relation::NotLessOrEqual);
        assert!(v.certified);
        assert_eq!(
            v.witness,
            Some(TableauWitness {
                n: 1,
                lower: vec![3],
                upper: vec![2]
            })
        );

        for s in [theta, rho, e()] {
            let v = leq_horizon(&s, &s, 5);
            assert_eq!(v.relation, Relation::LessOrEqual);
            assert!(v.certified);
        }
    }

    #[test]
    fn rank_form_agrees_on_theta_rho() {
        let (theta, rho) = (PatternPermutation::theta(), PatternPermutation::rho());
        assert_eq!(rank_violation(&theta, &rho, 30), None);
        assert!(rank_violation(&rho, &theta, 30).is_some());
    }

    #[test]
    fn going_up() {
        assert!(goes_up(&e(), t(1, 2)));
        assert!(!goes_up(&PatternPermutation::theta(), t(1, 2)));
        assert!(goes_up(&PatternPermutation::rho(), t(2, 4)));
    }

    #[test]
    fn covers() {
        assert_eq!(is_cover(&w(&[1, 3, 2]), &w(&[2, 3, 1])), CoverVerdict::Cover(t(1, 3)));
        assert_eq!(
            is_cover(&e(), &w(&[3, 2, 1])),
            CoverVerdict::NotCover(NotCoverReason::Intermediate { position: 2 })
        );
        assert_eq!(is_cover(&e(), &e()), CoverVerdict::NotCover(NotCoverReason::Equal));
        assert_eq!(
            is_cover(&w(&[2, 1]), &e()),
            CoverVerdict::NotCover(NotCoverReason::GoesDown)
        );
        assert_eq!(
            is_cover(&e(), &w(&[2, 3, 1])),
            CoverVerdict::NotCover(NotCoverReason::NotATransposition)
        );
        assert_eq!(
            is_cover(&e(), &PatternPermutation::theta()),
            CoverVerdict::NotCover(NotCoverReason::NotEventuallyEqual)
        );
    }

    #[test]
    fn candidates() {
        let (theta, rho) = (PatternPermutation::theta(), PatternPermutation::rho());
        assert!(is_relative_candidate(&theta, &rho, t(1, 4)));
        assert!(is_relative_candidate(&e(), &w(&[2, 1]), t(1, 2)));
        assert!(!is_relative_candidate(&e(), &w(&[3, 2, 1]), t(1, 3)));

        assert_eq!(relative_candidates(&e(), &w(&[2, 1])), Ok(vec![t(1, 2)]));
        assert_eq!(relative_candidates(&e(), &w(&[3, 2, 1])), Ok(vec![t(1, 2), t(2, 3)]));
        assert_eq!(
            relative_candidates(&w(&[1, 3, 2]), &w(&[3, 2, 1])),
            Ok(vec![t(1, 2), t(1, 3)])
        );
        assert_eq!(
            relative_candidates(&e(), &theta),
            Err(Error::NotEventuallyEqual)
        );
    }

    #[test]
    fn identity_theta_candidates_are_unbounded() {
        let theta = PatternPermutation::theta();
        for k in 1..50 {
            assert!(is_relative_candidate(&e(), &theta, t(2 * k - 1, 2 * k)));
        }
    }

    #[test]
    fn dm_steps() {
        let (step, next) = dm_step(&e(), &PatternPermutation::theta()).unwrap();
        assert_eq!(step, t(1, 2));
        assert_eq!(next.one_line(4), vec![2, 1, 3, 4]);

        let (step, next) = dm_step(&w(&[2, 1, 3]), &w(&[3, 2, 1])).unwrap();
        assert_eq!(step, t(1, 3));
        assert_eq!(next, w(&[3, 1, 2]));

        let s = w(&[2, 4, 1, 3]);
        let (step, _) = dm_step(&s, &s.compose_transposition(t(1, 2))).unwrap();
        assert_eq!(step, t(1, 2));
    }

    #[test]
    fn dm_chain_towards_theta() {
        let chain = dm_chain(&e(), &PatternPermutation::theta(), 3).unwrap();
        assert_eq!(chain.labels(), vec![t(1, 2), t(3, 4), t(5, 6)]);
        let lines: Vec<Vec<usize>> =
            chain.steps.iter().map(|(_, el)| el.pattern().one_line(8)).collect();
        assert_eq!(
            lines,
            vec![
                vec![2, 1, 3, 4, 5, 6, 7, 8],
                vec![2, 1, 4, 3, 5, 6, 7, 8],
                vec![2, 1, 4, 3, 6, 5, 7, 8],
            ]
        );
        assert!(!chain.reached_target);
        assert_eq!(chain.final_d, Some(7));
    }

    #[test]
    fn dm_chain_to_longest_element() {
        let chain = dm_chain(&e(), &w(&[3, 2, 1]), 10).unwrap();
        assert_eq!(chain.labels(), vec![t(1, 2), t(1, 3), t(2, 3)]);
        assert!(chain.reached_target);
        assert_eq!(chain.final_d, None);

        let s = w(&[1, 3, 2]);
        let chain = dm_chain(&s, &w(&[2, 3, 1]), 10).unwrap();
        assert_eq!(chain.labels(), vec![t(1, 3)]);
        assert!(chain.reached_target);
    }

    #[test]
    fn relative_lengths() {
        assert_eq!(relative_length(&w(&[1, 3, 2]), &w(&[2, 3, 1])), Ok(1));
        let theta = PatternPermutation::theta();
        assert_eq!(relative_length(&theta, &theta), Ok(0));
        assert_eq!(relative_length(&e(), &w(&[2, 1, 4, 3])), Ok(2));
        assert_eq!(relative_length(&w(&[2, 1]), &e()), Err(Error::NotOrdered));
        let up = theta.compose_transposition(t(2, 3));
        assert_eq!(relative_length(&theta, &up), Ok(1));
    }

    #[test]
    fn up_transpositions() {
        assert_eq!(up_transposition(&e()), t(1, 2));
        // θ = [2, 1, 4, …]: (1,3) is already a cover (θ(2) = 1 is below θ(1)).
        let theta = PatternPermutation::theta();
        assert_eq!(up_transposition(&theta), t(1, 3));
        assert!(is_cover(&theta, &theta.compose_transposition(t(1, 3))).holds());
        assert_eq!(up_transposition(&w(&[3, 2, 1])), t(1, 4));
    }
}
