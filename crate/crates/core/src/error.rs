use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed polygon: {0}")]
    MalformedPolygon(String),

    #[error("malformed input file: {0}")]
    MalformedInput(String),

    #[error("invalid fold index {index}: valid indices are 0..{limit}")]
    InvalidFoldIndex { index: usize, limit: usize },

    #[error("two-link closure impossible: gap chord {gap} exceeds 2")]
    NoClosure { gap: f64 },

    #[error("closure candidate rejected: {0}")]
    ClosureRejected(String),

    #[error("sampling budget exhausted after {attempts} attempts")]
    SamplingExhausted { attempts: usize },

    #[error("gluing invariant violated: {0}")]
    GluingInvariant(String),

    #[error("Gauss-Bonnet residual {residual:e} exceeds tolerance")]
    GaussBonnet { residual: f64 },

    #[error("no geodesic from cone point {source_point} to {target} within budget {budget}")]
    GeodesicNotFound {
        source_point: usize,
        target: usize,
        budget: f64,
    },

    #[error("geodesic search inconclusive after {developments} developments")]
    SearchInconclusive { developments: usize },

    #[error("metric invariant violated: {0}")]
    InvalidMetric(String),

    #[error("metric is not realizable in space: {0}")]
    NonRealizable(String),

    #[error("angle sum at vertex {vertex} disagrees with curvature by {residual:e}")]
    CurvatureMismatch { vertex: usize, residual: f64 },

    #[error("cut set is not a Hamiltonian path: {0}")]
    NonHamiltonian(String),

    #[error("nothing to render")]
    EmptyScene,

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
