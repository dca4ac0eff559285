//! Idealized polarization/OAM optics.
//!
//! Polarization `{|H⟩, |V⟩}` plays the coin and the OAM index `ℓ` plays the
//! lattice site. Every element is modelled by its Jones matrix; elements
//! whose phase profile winds with the azimuth shift `ℓ` and so act on the
//! whole coin ⊗ lattice space via [`lift`].

mod compare;
mod element;
mod jones;
mod lattice;

pub use compare::{equal_up_to_phase, PhaseComparison};
pub use element::{compose, lift, JPlateSpec, ModeArray, OpticalElement};
pub use jones::{half_wave_plate, jplate_pointwise, rotator, variable_wave_plate, JonesMatrix};
pub use lattice::LatticeOperator;
