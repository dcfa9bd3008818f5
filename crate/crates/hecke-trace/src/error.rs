use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `NonDivisible` deserves a note: every final trace value is a Laurent
/// polynomial, but two of the pipelines pass through a division (by
/// `q^n - 1` in the residue sum, by `((q-1)(q^-1-1))^(n-1)` in the Tesler
/// sum). When the algebra upstream is correct those divisions are exact,
/// so a `NonDivisible` on a valid input signals a broken identity, not a
/// bad argument.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("exact division failed: remainder is nonzero")]
    NonDivisible,

    #[error("q-integer index {0} is negative")]
    NegativeIndex(i64),

    #[error("rank parameter n = {0} must be at least 2")]
    RankTooSmall(usize),

    #[error("chamber index m = {m} is outside [1, {}] for n = {n}", n - 1)]
    OutOfRange { n: usize, m: usize },

    #[error("basis vectors are linearly dependent")]
    SingularBasis,

    #[error("not a chamber-interior weight: {0}")]
    NotInChamberInterior(String),

    #[error("total degree {needed} exceeds the truncation cap {cap}")]
    OutOfTruncation { needed: i64, cap: usize },

    #[error("{what} = {got} exceeds the configured limit {limit} (override via {env})")]
    ResourceLimit {
        what: &'static str,
        got: i64,
        limit: i64,
        env: &'static str,
    },

    #[error("{0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable code for reports and exit-code mapping.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::NonDivisible => "NonDivisible",
            Error::NegativeIndex(_) => "NegativeIndex",
            Error::RankTooSmall(_) => "RankTooSmall",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::SingularBasis => "SingularBasis",
            Error::NotInChamberInterior(_) => "NotInChamberInterior",
            Error::OutOfTruncation { .. } => "OutOfTruncation",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
