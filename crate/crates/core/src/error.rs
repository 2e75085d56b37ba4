use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator of degree {found} does not match group degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("{what} exceeds the order limit {limit}")]
    OrderLimitExceeded { what: String, limit: usize },
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("operation needs a nontrivial group")]
    TrivialGroup,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("invalid invariant factors: {0}")]
    InvalidFactors(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no prime found in the progression 1 + k*{modulus} for k <= {cap}")]
    SearchBoundExceeded { modulus: u64, cap: u64 },
    #[error("character table computation failed: {0}")]
    InternalPrimeSearchFailure(String),
    #[error("{0} irreducibles is too many for exhaustive enumeration")]
    TooManyIrreducibles(usize),
    #[error("characters do not have trivial common kernel")]
    UnfaithfulCharacters,
    #[error("monomial dimension {size} exceeds the limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("jordan table is empty")]
    EmptyTable,
}

impl Error {
    /// Short machine-readable tag naming the failure.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::DegreeMismatch { .. } => "InvalidPermutation",
            Error::OrderLimitExceeded { .. } => "OrderLimitExceeded",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::NotPrime(_) => "NotPrime",
            Error::TrivialGroup => "TrivialGroup",
            Error::NotAbelian => "NotAbelian",
            Error::InvalidFactors(_) => "InvalidFactors",
            Error::InvalidInput(_) => "InvalidInput",
            Error::SearchBoundExceeded { .. } => "SearchBoundExceeded",
            Error::InternalPrimeSearchFailure(_) => "InternalPrimeSearchFailure",
            Error::TooManyIrreducibles(_) => "TooManyIrreducibles",
            Error::UnfaithfulCharacters => "UnfaithfulCharacters",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::EmptyTable => "EmptyTable",
        }
    }

    /// The module the error originates from.
    pub fn module(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_)
            | Error::DegreeMismatch { .. }
            | Error::OrderLimitExceeded { .. }
            | Error::InvalidSpec(_)
            | Error::NotPrime(_)
            | Error::TrivialGroup
            | Error::NotAbelian => "group-core",
            Error::InternalPrimeSearchFailure(_) => "chartab",
            Error::InvalidFactors(_) | Error::TooManyIrreducibles(_) => "repdim",
            Error::InvalidInput(_) | Error::SearchBoundExceeded { .. } | Error::EmptyTable => {
                "edbounds"
            }
            Error::UnfaithfulCharacters | Error::SizeLimitExceeded { .. } => "monomial",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
