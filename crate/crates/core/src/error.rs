use thiserror::Error;

use crate::pc::Inconsistency;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("F_2 has no quadratic non-residue")]
    NoNonresidue,

    #[error("the zero polynomial has every element as a root")]
    DegenerateQuadratic,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid presentation: {0}")]
    Presentation(String),

    #[error("inconsistent presentation: {0}")]
    Inconsistent(Box<Inconsistency>),

    #[error("elements belong to different presentations")]
    MixedPresentation,

    #[error("element is not central: {0}")]
    NotCentral(String),

    #[error("central element does not lie in the central elementary abelian suffix: {0}")]
    NotInSocle(String),

    #[error("amalgamated subgroups have different orders ({left} vs {right})")]
    OrderMismatch { left: u64, right: u64 },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("search space of {required} maps exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
