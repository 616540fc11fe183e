use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {index} is out of range for a quiver on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("exchange matrix is not skew-symmetric at ({i}, {j})")]
    NotSkewSymmetric { i: usize, j: usize },

    #[error("arrow multiplicity overflows a machine integer")]
    Overflow,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("cannot parse expression: {0}")]
    Expr(String),

    #[error("{dividend} is not exactly divisible by {divisor}")]
    NonExactDivision { dividend: String, divisor: String },

    #[error("the zero polynomial has no denominator vector")]
    ZeroPolynomial,

    #[error("positivity test needs a polynomial, got {0}")]
    NegativeExponent(String),

    #[error("mismatched variable counts: {0} vs {1}")]
    Arity(usize, usize),

    #[error("closure requested for a quiver that is not of finite type ({0})")]
    ClosureRefused(String),

    #[error("enumeration budget exhausted after {seeds} seeds without reaching closure")]
    BudgetExhausted { seeds: usize },

    #[error("engine invariant violated: {0}")]
    Invariant(String),

    #[error("unsupported quiver class: {0}")]
    Unsupported(String),

    #[error("no exceptional object with dimension vector {0:?} in the inventory")]
    Unresolved(Vec<i64>),

    #[error("not a cluster-tilting object: Ext^1 between summands {0} and {1} is nonzero")]
    NotClusterTilting(usize, usize),
}

impl Error {
    /// Errors that come from running out of search depth or inventory, as
    /// opposed to a computed mismatch or malformed input.
    pub fn is_resolution_failure(&self) -> bool {
        matches!(self, Error::Unresolved(_) | Error::BudgetExhausted { .. } | Error::ClosureRefused(_))
    }
}
