use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cyclotomic conductors differ: {0} vs {1}")]
    ConductorMismatch(u32, u32),

    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),

    #[error(
        "size bound exceeded: {what} has {size} elements (limit {limit}); use --force to override"
    )]
    SizeBound {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("k must be nonzero")]
    ZeroK,

    #[error("{which} is not rational: {value}")]
    NonRational { which: String, value: String },

    #[error("H parameters must sum to zero (sum is {0})")]
    UnbalancedH(String),

    #[error("parameter is not {p}-cyclic")]
    NotCyclic { p: u32 },

    #[error("partition is not stable under the C_d rotation: {0}")]
    NotRotationStable(String),

    #[error("families are not computed on the hyperplane n_R0 = 0 (k = 0 regime)")]
    UnsupportedHyperplane,

    #[error("parse error: {0}")]
    Parse(String),
}
