use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::RunConfig;

/// Exact computations in the Bruhat order on permutations of the positive
/// integers.
///
/// Permutations are given as a name (`theta`, `rho`, `identity`), an inline
/// one-line window such as `[2,1,3]`, a JSON object
/// (`{"prefix":[3,1],"period":2,"offsets":[-2,2]}` or `{"window":[2,1]}`),
/// or `@path` to a file holding such JSON.
#[derive(Debug, Parser)]
#[command(name = "bruhat", version)]
pub struct Cli {
    /// Rows checked when comparing permutations that differ infinitely often.
    #[arg(long, global = true, env = "BRUHAT_HORIZON", default_value_t = RunConfig::default().horizon,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub horizon: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
    M2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Single-permutation queries.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Order, covers and greedy chains.
    #[command(subcommand)]
    Bruhat(BruhatCommand),
    /// Finite intervals between eventually equal permutations.
    #[command(subcommand)]
    Interval(IntervalCommand),
    /// Order complexes and shellings.
    #[command(subcommand)]
    Complex(ComplexCommand),
}

#[derive(Debug, Subcommand)]
pub enum PermCommand {
    /// σ(n).
    Eval { perm: String, n: usize },
    /// The inverse permutation.
    Invert { perm: String },
    /// The first entries of the one-line notation.
    Oneline {
        perm: String,
        #[arg(long, default_value_t = 10)]
        len: usize,
    },
    /// Pseudo-lengths ℓ_1 … ℓ_k.
    Pseudolen {
        perm: String,
        #[arg(long, default_value_t = 10)]
        len: usize,
    },
    /// Checks the representation and prints its canonical form.
    Validate { perm: String },
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Lower permutation.
    pub lower: String,
    /// Upper permutation.
    pub upper: String,
}

#[derive(Debug, Subcommand)]
pub enum BruhatCommand {
    /// Whether lower <= upper: exact for eventually equal inputs, otherwise
    /// up to the horizon.
    Leq {
        #[command(flatten)]
        pair: Pair,
    },
    /// Whether upper covers lower, with the cover label.
    Cover {
        #[command(flatten)]
        pair: Pair,
    },
    /// The statistics d, m, f of a pair lower < upper.
    Dmf {
        #[command(flatten)]
        pair: Pair,
    },
    /// The greedy (d, m) chain from lower towards upper.
    Chain {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = RunConfig::default().max_steps,
              value_parser = clap::value_parser!(u64).range(1..))]
        max_steps: u64,
    },
    /// Transpositions t with lower ⋖ lower∘t <= upper.
    Candidates {
        #[command(flatten)]
        pair: Pair,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntervalOut {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum IntervalCommand {
    /// All elements and cover edges.
    Enum {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = IntervalOut::Json)]
        out: IntervalOut,
    },
    /// Checks the rank function and the cover edges.
    Grading {
        #[command(flatten)]
        pair: Pair,
    },
    /// Checks the transposition labeling is an EL-labeling.
    Elcheck {
        #[command(flatten)]
        pair: Pair,
    },
    /// Maximal chains with their label words.
    Chains {
        #[command(flatten)]
        pair: Pair,
    },
}

#[derive(Debug, Subcommand)]
pub enum ComplexCommand {
    /// Verifies the lexicographic shelling of the order complex.
    Shelling {
        #[command(flatten)]
        pair: Pair,
    },
    /// f- and h-vectors of the order complex.
    Fhvec {
        #[command(flatten)]
        pair: Pair,
    },
    /// Stanley–Reisner generators of the order complex.
    Srideal {
        #[command(flatten)]
        pair: Pair,
        /// Emit a Macaulay2 snippet.
        #[arg(long)]
        m2: bool,
    },
    /// The order complex as JSON.
    Order {
        #[command(flatten)]
        pair: Pair,
    },
    /// Per-level report along the greedy filtration from lower towards upper.
    Nested {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = RunConfig::default().depth,
              value_parser = clap::value_parser!(u64).range(1..))]
        depth: u64,
        /// Random elements of the interval to locate in the filtration.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Sampled elements are lower∘π with π supported in [1, support].
        #[arg(long, default_value_t = 10)]
        support: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
