//! Exact computation in the Bruhat order on permutations of the positive
//! integers.
//!
//! Permutations are represented finitely ([`PatternPermutation`]: a finite
//! prefix followed by a periodic affine tail), which covers every finitely
//! supported permutation as well as infinite-support examples such as
//! `[2, 1, 4, 3, 6, 5, …]`. On top of that representation the crate provides
//!
//! * order comparisons, cover relations and the greedy `(d, m)` saturated
//!   chain ([`bruhat`]),
//! * exact enumeration of finite intervals with grading and EL-labeling
//!   checks ([`interval`]),
//! * order complexes, shelling verification and Stanley–Reisner generators
//!   ([`complex`]).

pub mod bruhat;
pub mod complex;
pub mod error;
pub mod interval;
pub mod perm;

pub use error::{Error, InvalidPermutation, Result};
pub use perm::{
    FiniteSupportPermutation, PatternPermutation, PseudoLengthPrefix, RelativePermutation,
    Transposition,
};
