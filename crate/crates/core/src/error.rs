use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} catalytic variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("unsupported arity {0}; catalytic polynomials carry at most 3 variables")]
    UnsupportedArity(usize),

    #[error("geometric expansion needs a monomial of positive t-degree")]
    NonConvergent,

    #[error("series is not invertible: constant term must be a nonzero scalar")]
    Singular,

    #[error("unsupported square-root branch: {0}")]
    UnsupportedBranch(String),

    #[error("width bound violated at t^{t_degree}: catalytic degree {degree} exceeds {t_degree}")]
    WidthBound { t_degree: usize, degree: u32 },

    #[error("fixed-point step must raise the minimal t-degree (t_gain = 0 diverges)")]
    Divergent,

    #[error("polynomial relation must have a nonzero quadratic coefficient")]
    DegenerateRelation,

    #[error("no quadratic root matches the requested prefix")]
    NoMatchingRoot,

    #[error("both quadratic roots match the requested prefix")]
    AmbiguousRoot,

    #[error("not enough series terms: ansatz has {unknowns} unknowns, {available} terms supplied (need {required})")]
    InsufficientTerms {
        unknowns: usize,
        available: usize,
        required: usize,
    },

    #[error("{0}")]
    Usage(String),
}
