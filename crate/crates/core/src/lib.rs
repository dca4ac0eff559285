//! Simulation of one-dimensional quantum walks and their compilation to
//! idealized polarization/OAM optics.
//!
//! The crate is split into:
//!
//! * [`walk`]: walker states on a truncated lattice and the discrete-time,
//!   split-step, position-dependent-coin and electric walk evolutions.
//! * [`optics`]: Jones matrices for J-plates and waveplates, their lift to
//!   operators on the coin ⊗ lattice space, and global-phase-insensitive
//!   operator comparison.
//! * [`compiler`]: decomposition of walk steps into ordered element trains
//!   and verification against the abstract walk operator.
//! * [`continuum`]: the split-step continuum right-hand side and a residual
//!   diagnostic on Gaussian wavepackets.
//! * [`batch`]: JSON configs, CSV/JSON outputs and the `run`, `compile` and
//!   `localize` pipelines used by the command-line front-end.

pub mod batch;
pub mod compiler;
pub mod continuum;
mod error;
pub mod mat2;
pub mod optics;
pub mod walk;

pub use error::{Error, Result};
pub use mat2::Mat2;

#[allow(non_camel_case_types)]
pub type c64 = num_complex::Complex64;
