//! Compilation of walk steps into optical trains, and verification of a
//! train against the abstract step operator.
//!
//! Split-step recipe, for coins `C₁, C₂` with `C₃ = C₂C₁` and `|u₁⟩` the
//! first column of `C₁†`:
//!
//! ```text
//! S₊C₂S₋C₁ = S₊ C₃ (C₁† S₋ C₁)
//! C₁† S₋ C₁ = e^{i(π−β)σ₃/2} J(−φ, 0, α) e^{−i(π−β)σ₃/2}
//! C₃       = (−i) e^{i(γ₁+π)σ₃/2} HWP(γ₂/4) e^{iγ₃σ₃/2}
//! S₊ e^{i(γ₁+π)σ₃/2} = J((γ₁+π)/2, φ − (γ₁+π)/2, 0)
//! ```
//!
//! giving five elements per step: two J-plates, one half-wave plate and two
//! variable wave plates, with an overall factor `−i`.

mod column;
mod euler;
mod pdc;
mod reference;
mod ssqw;
mod verify;

pub use column::{column_params, ColumnParams};
pub use euler::{euler_decompose, split_phase, EulerAngles};
pub use pdc::{compile_pdc, PdcCompilation, PdcSite};
pub use reference::{ssqw_operator, walk_step_operator};
pub use ssqw::{
    compile_generalized, compile_ssqw, compile_ssqw_with, CompiledStep, OutputPlateConstant,
    TrainElement,
};
pub use verify::{verify, FactorDiagnostic, VerificationReport, VERIFY_TOL};

/// Wraps an angle into `(−π, π]`.
pub(crate) fn wrap_phase(a: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let w = (a + PI).rem_euclid(TAU) - PI;
    if w <= -PI {
        w + TAU
    } else {
        w
    }
}
