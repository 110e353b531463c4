use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sample must contain at least one observation")]
    EmptySample,

    #[error("observation {index} has a negative response")]
    NegativeResponse { index: usize },

    #[error("observation {index} is not finite")]
    NonFinite { index: usize },

    #[error("no observation carries positive kernel weight around x = {x}")]
    EmptyWindow { x: f64 },

    #[error("abscissae have zero spread; bandwidth rule is undefined")]
    ZeroSpread,

    #[error("sample of size {n} is too small (need at least {min})")]
    TooFewObservations { n: usize, min: usize },

    #[error("moment matrix is singular for degree {degree}")]
    SingularMoments { degree: usize },

    #[error("adaptive quadrature did not reach tolerance {tol:e} (estimate error {err:e})")]
    QuadratureNotConverged { tol: f64, err: f64 },

    #[error("every grid point has an empty window")]
    AllEmpty,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
