use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("negative exponent at byte {pos}")]
    NegativeExponent { pos: usize },

    #[error("exponent at byte {pos} exceeds 2^31 - 1")]
    ExponentOverflow { pos: usize },

    #[error("ambient dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("operation `{op}` is undefined for the {which} ideal")]
    Degenerate {
        op: &'static str,
        which: &'static str,
    },

    #[error("m(u) is undefined for the monomial 1")]
    UnitMonomial,

    #[error(
        "ideal is not of Borel type: I:(x_1..x_{failing_index})^inf != I:x_{failing_index}^inf"
    )]
    NotBorelType { failing_index: usize },

    #[error("precondition of `{op}` fails: {detail}")]
    Precondition { op: &'static str, detail: String },

    #[error("component {component:?} has support that is not an initial segment")]
    InconsistentSupport { component: Vec<u32> },

    #[error("oracle scale guard exceeded: {detail} (set BOREL_SCALE_GUARD to raise)")]
    ScaleGuard { detail: String },

    #[error("homology sanity check failed: {0}")]
    InconsistentHomology(String),

    #[error("truncation search passed cap {cap} without finding a stable truncation")]
    CapExceeded { cap: u64 },

    #[error("invalid fuzz configuration: {0}")]
    Config(String),
}

impl Error {
    /// Short machine-readable tag, used in error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable { .. } => "unknown_variable",
            Error::NegativeExponent { .. } => "negative_exponent",
            Error::ExponentOverflow { .. } => "exponent_overflow",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::Degenerate { .. } => "degenerate_ideal",
            Error::UnitMonomial => "unit_monomial",
            Error::NotBorelType { .. } => "not_borel_type",
            Error::Precondition { .. } => "precondition",
            Error::InconsistentSupport { .. } => "inconsistent_support",
            Error::ScaleGuard { .. } => "scale_guard",
            Error::InconsistentHomology(_) => "inconsistent_homology",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Config(_) => "config",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
