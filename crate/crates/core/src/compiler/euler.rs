use crate::{c64, Error, Mat2, Result};

/// Tolerance on `U†U = I` and `det U = 1` for decomposition inputs.
pub const SU2_TOL: f64 = 1e-10;

/// Below this modulus an off-diagonal (or diagonal) entry counts as zero and
/// the `(γ₁, γ₃)` split is fixed by `γ₃ = 0`.
const DEGENERATE_TOL: f64 = 1e-14;

/// `U = e^{iγ₁σ₃/2} e^{iγ₂σ₂/2} e^{iγ₃σ₃/2}` with `γ₂ ∈ [0, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerAngles {
    pub gamma1: f64,
    pub gamma2: f64,
    pub gamma3: f64,
}

impl EulerAngles {
    pub fn matrix(&self) -> Mat2 {
        Mat2::exp_i_z(self.gamma1 / 2.0)
            * Mat2::exp_i_y(self.gamma2 / 2.0)
            * Mat2::exp_i_z(self.gamma3 / 2.0)
    }
}

fn check_unitary(u: &Mat2) -> Result<()> {
    if !u.is_finite() {
        return Err(Error::NonUnitary {
            deviation: f64::INFINITY,
        });
    }
    let deviation = u.unitarity_error();
    if deviation > SU2_TOL {
        return Err(Error::NonUnitary { deviation });
    }
    Ok(())
}

/// Splits a U(2) matrix as `U = e^{iχ} V` with `det V = 1`, returning `(χ, V)`.
///
/// `χ = arg(det U)/2`; the other root `χ + π` is never chosen.
pub fn split_phase(u: &Mat2) -> Result<(f64, Mat2)> {
    check_unitary(u)?;
    let chi = u.det().arg() / 2.0;
    Ok((chi, u.scale(c64::cis(-chi))))
}

/// ZYZ-type Euler angles of an SU(2) matrix.
pub fn euler_decompose(u: &Mat2) -> Result<EulerAngles> {
    check_unitary(u)?;
    let det_err = (u.det() - 1.0).norm();
    if det_err > SU2_TOL {
        return Err(Error::NonUnitary { deviation: det_err });
    }
    // U = [[e^{i(γ₁+γ₃)/2} cos(γ₂/2), e^{i(γ₁−γ₃)/2} sin(γ₂/2)], [·, ·]]
    let a = u.get(0, 0);
    let b = u.get(0, 1);
    if b.norm() <= DEGENERATE_TOL {
        return Ok(EulerAngles {
            gamma1: 2.0 * a.arg(),
            gamma2: 0.0,
            gamma3: 0.0,
        });
    }
    if a.norm() <= DEGENERATE_TOL {
        return Ok(EulerAngles {
            gamma1: 2.0 * b.arg(),
            gamma2: std::f64::consts::PI,
            gamma3: 0.0,
        });
    }
    Ok(EulerAngles {
        gamma1: a.arg() + b.arg(),
        gamma2: 2.0 * b.norm().atan2(a.norm()),
        gamma3: a.arg() - b.arg(),
    })
}
