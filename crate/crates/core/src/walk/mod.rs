//! Walker states on a truncated integer lattice and the walk evolutions
//! built from coin, shift and electric-phase operations.
//!
//! Coin basis convention: index 0 is `|0⟩ ↔ |H⟩`, the left-moving component
//! ψˡ; index 1 is `|1⟩ ↔ |V⟩`, the right-moving component ψʳ.

mod coin;
mod evolve;
mod state;
mod stats;

pub use coin::{coin_matrix, u2_matrix, CoinParams, CoinTable};
pub use evolve::{evolve, step, Trajectory, WalkKind, WalkSpec};
pub use state::{WalkerState, GUARD_TOL};
pub use stats::{moments, Distribution};

/// Tolerance for the unit-norm check on user-supplied coin vectors.
pub const NORM_TOL: f64 = 1e-12;
