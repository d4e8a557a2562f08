use thiserror::Error;

use crate::exact::Var;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("denominator is identically zero")]
    ZeroDenominator,

    #[error("coefficient of x^{k} lies outside the certified range [{first}, {end})")]
    OutOfRange { k: i64, first: i64, end: i64 },

    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),

    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    #[error("tau vanishes at n = {0}")]
    SingularTau(i64),

    #[error("interpolation nodes collide: {0}")]
    NodeCollision(String),

    #[error("node k+eps+2i vanishes (k = {k}, eps = {eps}, i = {i})")]
    ZeroNode { k: i64, eps: u8, i: usize },

    #[error("polynomial is not odd")]
    NotOddPolynomial,

    #[error("argument must be positive, got {0}")]
    NonpositiveArgument(f64),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("lattice window too small: boundary influence {bound:e} exceeds {limit:e}")]
    WindowTooSmall { bound: f64, limit: f64 },

    #[error("contour quadrature did not converge with {nodes} nodes")]
    NoConvergence { nodes: usize },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("cannot parse {0:?} as an exact rational (expected \"p/q\" or \"p\")")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
