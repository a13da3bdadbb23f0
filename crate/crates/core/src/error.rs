//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("non-invertible coordinate change")]
    SingularChange,
    #[error("point not in chart: coordinate {chart} is zero")]
    PointNotInChart { chart: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VariableMismatch { expected: usize, got: usize },
    #[error("polynomial is not homogeneous; offending monomials: {0}")]
    NotHomogeneous(String),
    #[error("zero polynomial does not define a hypersurface")]
    ZeroPolynomial,
    #[error("hypersurface degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("point does not lie on the hypersurface")]
    PointNotOnHypersurface,
    #[error("point is not singular: the local equation has a nonzero {0} part")]
    NotSingular(&'static str),
    #[error("isolated-singularity certificate failed: no Nakayama certificate up to truncation {reached} (cap {cap})")]
    CertificateFailed { reached: usize, cap: usize },
    #[error("no stabilization: singularities may be non-isolated")]
    NoStabilization,
    #[error("tuple is not a syzygy: the components do not annihilate the gradient")]
    NotASyzygy,
    #[error("record chart {record} does not match requested chart {requested}")]
    ChartMismatch { record: usize, requested: usize },
    #[error("hyperplane x_{chart}=0 is not transversal ({reason}); apply find_transversal_coordinates first")]
    NotTransversal { chart: usize, reason: String },
    #[error("no transversal coordinate system found in {trials} trials; last failure: {last}")]
    NoTransversalCoordinates { trials: usize, last: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
