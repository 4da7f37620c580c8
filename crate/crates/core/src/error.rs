//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("incompatible operands: {0}")]
    Incompatible(String),

    #[error("potential shift too small: V + M = {value} <= 0 at {point:?}")]
    ShiftTooSmall { point: Vec<f64>, value: f64 },

    #[error("not in H1(Gamma): vertex {vertex} has incident-edge mismatch {discrepancy:.3e} (tol {tol:.3e})")]
    NotInH1 {
        vertex: usize,
        discrepancy: f64,
        tol: f64,
    },

    #[error("sampled profile carries no derivative data")]
    MissingDerivative,

    #[error("ratio undefined for zero input")]
    UndefinedRatio,

    #[error("resolvent system singular or near-singular: {0}")]
    ResolventSingular(String),

    #[error("edge spectrum hit: |sin(k' ell)| = {0:.3e} too close to zero")]
    EdgeSingular(f64),

    #[error("operator-norm estimation failed to converge after {iterations} iterations (last estimate {last})")]
    EstimationFailure { iterations: usize, last: f64 },

    #[error("fixed-point iteration did not converge: history {0:?}")]
    NonConvergence(Vec<f64>),

    #[error("invalid search interval: {0}")]
    InvalidInterval(String),

    #[error("window boundary {boundary} collides with eigenvalue {eigenvalue} (separation {separation:.3e})")]
    BoundaryCollision {
        boundary: f64,
        eigenvalue: f64,
        separation: f64,
    },

    #[error("empty set has no Hausdorff distance")]
    EmptySet,

    #[error("inverse shift violated: eigenvalue {0} <= -M = {1}")]
    ShiftViolation(f64, f64),

    #[error("grid resolution insufficient: Richardson estimate {estimate:.3e} above tolerance {tol:.3e}")]
    InsufficientResolution { estimate: f64, tol: f64 },

    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
