use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("coin vector is not normalized (norm² = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("site {site} lies outside the lattice [-{half_width}, {half_width}]")]
    SiteOutsideLattice { site: i64, half_width: usize },

    #[error(
        "coin table covers sites {table_min}..={table_max}, lattice is {lattice_min}..={lattice_max}"
    )]
    TableMismatch {
        table_min: i64,
        table_max: i64,
        lattice_min: i64,
        lattice_max: i64,
    },

    /// Amplitude would be pushed off the truncated lattice.
    #[error("boundary guard violated at site {site} (|ψ| = {magnitude:e}); lattice too small")]
    BoundaryGuard { site: i64, magnitude: f64 },

    #[error("lattice half-width {half_width} too small; need at least {required}")]
    LatticeTooSmall { half_width: usize, required: usize },

    #[error("matrix is not unitary (deviation {deviation:e})")]
    NonUnitary { deviation: f64 },

    #[error("operator dimensions differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    #[error("element cannot be lifted: {0}")]
    NotLiftable(String),

    #[error("verification failed: fidelity {fidelity}, relative distance {distance:e}")]
    VerificationFailed { fidelity: f64, distance: f64 },

    #[error("invalid config: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status used by the command-line front-end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_)
            | Error::Json(_)
            | Error::NotNormalized { .. }
            | Error::SiteOutsideLattice { .. }
            | Error::TableMismatch { .. } => 2,
            Error::BoundaryGuard { .. } | Error::LatticeTooSmall { .. } => 3,
            Error::VerificationFailed { .. } => 4,
            _ => 1,
        }
    }
}
