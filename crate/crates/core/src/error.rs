use thiserror::Error;

/// A violated representation invariant, named so callers can report it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidPermutation {
    #[error("period must be at least 1")]
    ZeroPeriod,
    #[error("expected {expected} offsets for the period, found {found}")]
    OffsetCount { expected: usize, found: usize },
    #[error("entry at position {position} is not a positive integer")]
    NonPositiveEntry { position: usize },
    #[error("tail residue map is not a bijection on residues")]
    ResidueMapNotBijective,
    #[error("offset sum nonzero (sum = {sum})")]
    OffsetSumNonzero { sum: i64 },
    #[error("tail sends {position} below 1")]
    TailBelowOne { position: usize },
    #[error("not injective: positions {first} and {second} both map to {value}")]
    NotInjective {
        first: usize,
        second: usize,
        value: usize,
    },
    #[error("not surjective: {value} is never attained")]
    NotSurjective { value: usize },
    #[error("window is not a permutation of 1..={len}")]
    BadWindow { len: usize },
    #[error("transposition ({p},{q}) needs 1 <= p < q")]
    BadTransposition { p: usize, q: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    Invalid(#[from] InvalidPermutation),
    #[error("the permutations are equal")]
    EqualPermutations,
    #[error("no m with d < m <= f (d = {d}, f = {f}); the pair is not strictly increasing in Bruhat order")]
    MNotFound { d: usize, f: usize },
    #[error("the permutations are not eventually equal; use a horizon-bounded comparison")]
    NotEventuallyEqual,
    #[error("the pair is not ordered: lower element is not below upper element")]
    NotOrdered,
    #[error("relative permutations have different base permutations")]
    BaseMismatch,
    #[error("no anchor within depth {depth} lies above the element")]
    DepthExhausted { depth: usize },
    #[error("complex is not pure: facet {facet} has {found} vertices, expected {expected}")]
    NotPure {
        facet: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
