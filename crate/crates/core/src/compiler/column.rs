use std::f64::consts::{PI, TAU};

use crate::optics::{JPlateSpec, OpticalElement};
use crate::Mat2;

const VANISHING: f64 = 1e-14;

/// `|u₁⟩ ∝ (cos α, e^{iβ} sin α)`, the first column of `C₁†` up to phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ColumnParams {
    /// In `[0, π/2]`.
    pub alpha: f64,
    /// In `[0, 2π)`; zero whenever one component of `|u₁⟩` vanishes.
    pub beta: f64,
}

pub fn column_params(c1: &Mat2) -> ColumnParams {
    // first column of C₁† = conjugate of the first row of C₁
    let u0 = c1.get(0, 0).conj();
    let u1 = c1.get(0, 1).conj();
    let alpha = u1.norm().atan2(u0.norm());
    if u0.norm() <= VANISHING || u1.norm() <= VANISHING {
        return ColumnParams { alpha, beta: 0.0 };
    }
    let mut beta = (u1.arg() - u0.arg()).rem_euclid(TAU);
    if beta >= TAU {
        beta = 0.0;
    }
    ColumnParams { alpha, beta }
}

impl ColumnParams {
    /// `e^{i(π−β)σ₃/2} J(−φ, 0, α) e^{−i(π−β)σ₃/2}` in application order.
    pub fn conjugated_shift(&self) -> [OpticalElement; 3] {
        let zeta = PI - self.beta;
        [
            OpticalElement::VariableWavePlate { zeta: -zeta },
            OpticalElement::JPlate(JPlateSpec::new(-1, 0.0, 0, 0.0, self.alpha)),
            OpticalElement::VariableWavePlate { zeta },
        ]
    }
}
