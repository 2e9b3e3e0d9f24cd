//! Error type shared across the toolkit.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GcwtError {
    #[error("parameter outside the admissible domain: {0}")]
    Domain(String),

    #[error("signals live on different lattices")]
    LatticeMismatch,

    #[error("transformed support falls mostly outside the lattice window ({lost:.1}% mass lost)")]
    Resample { lost: f64 },

    #[error("requested grid window is empty")]
    EmptyGrid,

    #[error("wavelet is not admissible for this group")]
    NotAdmissible,

    #[error("probe frequency hits the singular set of the admissibility criterion")]
    SingularProbe,

    #[error("(psi1, psi2) is not an admissible pair")]
    NotAdmissiblePair,

    #[error("scale band is empty or reversed: A1 = {a1}, A2 = {a2}")]
    BadBand { a1: f64, a2: f64 },

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("unknown catalog signal: {0}")]
    UnknownSignal(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, GcwtError>;
