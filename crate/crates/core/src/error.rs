use thiserror::Error;

/// Errors produced by graph construction, spectral computation, entropy
/// evaluation, and bound evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    InvalidCount,

    #[error("edge endpoint {0} out of range for {1} vertices")]
    IndexOutOfRange(usize, usize),

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph would have {required} vertices, exceeding the cap of {cap}")]
    SizeCapExceeded { required: u128, cap: usize },

    #[error("matrix is not symmetric within tolerance (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("eigenvalue {0:e} is below the PSD tolerance; matrix is not positive semidefinite")]
    NotPositiveSemidefinite(f64),

    #[error("graph has no edges; density matrix is undefined")]
    EmptyGraph,

    #[error("moment order q must be positive (got {0})")]
    NonPositiveQ(f64),

    #[error("no closed-form spectrum for this family and matrix kind")]
    UnsupportedCombination,

    #[error("product spectrum formula requires regular factors")]
    RegularityRequired,

    #[error("missing auxiliary data for product spectrum: {0}")]
    MissingAux(&'static str),

    #[error("product spectrum formulas apply to Laplacian spectra only")]
    LaplacianRequired,

    #[error("parameter within limit tolerance of a removable singularity (q={q}, r={r}); route to the limiting family")]
    ParameterAtLimit { q: f64, r: f64 },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is too small for this bound (need at least {0} vertices)")]
    TooSmall(usize),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph has {0} vertices; exact clique search is capped at {1}")]
    TooLarge(usize, usize),

    #[error("graph has {0} edges; spanning-subgraph enumeration is capped at {1}")]
    TooManyEdges(usize, usize),

    #[error("failed to parse edge list: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
