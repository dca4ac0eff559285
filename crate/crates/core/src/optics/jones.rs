use crate::{c64, Mat2};

/// Jones matrices are plain 2×2 complex matrices in the `{|H⟩, |V⟩}` basis.
pub type JonesMatrix = Mat2;

/// `R_ϑ = e^{−iϑσ₂}`
pub fn rotator(vartheta: f64) -> JonesMatrix {
    Mat2::exp_i_y(-vartheta)
}

/// J-plate response at one transverse point:
/// `R_{−ϑ} · diag(e^{iδx}, e^{iδy}) · R_ϑ`.
pub fn jplate_pointwise(delta_x: f64, delta_y: f64, vartheta: f64) -> JonesMatrix {
    rotator(-vartheta) * Mat2::diag(c64::cis(delta_x), c64::cis(delta_y)) * rotator(vartheta)
}

/// Half-wave plate with fast axis at `ρ`: `[[cos 2ρ, sin 2ρ], [sin 2ρ, −cos 2ρ]]`.
pub fn half_wave_plate(rho: f64) -> JonesMatrix {
    let (s, c) = (2.0 * rho).sin_cos();
    Mat2::new(c.into(), s.into(), s.into(), (-c).into())
}

/// Variable retarder `e^{iζσ₃/2} = diag(e^{iζ/2}, e^{−iζ/2})`.
pub fn variable_wave_plate(zeta: f64) -> JonesMatrix {
    Mat2::exp_i_z(zeta / 2.0)
}
