//! Continuous wavelet transforms attached to square-integrable group
//! representations: a catalog of concrete semidirect-product groups, their
//! unitary actions on sampled signals, admissibility constants, analysis /
//! reconstruction operators and numerical certificates for the associated
//! isometry, concentration, support-growth and uncertainty inequalities.
//!
//! The core is generic over the scalar type through [`scalar::Scalar`]
//! (implemented for `f32` and `f64`); the aliases below fix the common
//! double-precision instantiations.

pub mod admissibility;
pub mod error;
pub mod group;
pub mod quad;
pub mod scalar;
pub mod signal;

pub use error::{GcwtError, Result};

/// Double-precision sampled signal.
pub type Signal64 = signal::SampledSignal<f64>;
/// Double-precision spectrum.
pub type Spectrum64 = signal::Spectrum<f64>;
/// Double-precision lattice.
pub type Lattice64 = signal::Lattice<f64>;
/// Double-precision group element.
pub type GroupPoint64 = group::GroupPoint<f64>;
/// Double-precision Haar quadrature grid.
pub type HaarGrid64 = group::HaarGrid<f64>;
/// Double-precision admissibility report.
pub type AdmissibilityReport64 = admissibility::AdmissibilityReport<f64>;

/// Single-precision sampled signal.
pub type Signal32 = signal::SampledSignal<f32>;
