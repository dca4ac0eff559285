//! Continuum form of the split-step walk.
//!
//! For smooth fields, one split-step with coins `C_{θ₁}`, `C_{θ₂}` moves
//! `ψ` by approximately
//!
//! ```text
//! ∂ₜψ = cos θ₂ · M₁ · ∂ₓψ + M₂ · ψ
//! M₁ = [[cos θ₁, −i sin θ₁], [i sin θ₁, −cos θ₁]]
//! M₂ = [[cos(θ₁+θ₂) − 1, −i sin(θ₁+θ₂)], [−i sin(θ₁+θ₂), cos(θ₁+θ₂) − 1]]
//! ```
//!
//! [`continuum_residual`] measures how far one discrete step (`Δt = 1`) is
//! from that right-hand side on a Gaussian wavepacket, with `∂ₓ` taken by
//! central differences.

use crate::walk::{step, CoinParams, WalkSpec, WalkerState, NORM_TOL};
use crate::{c64, Error, Mat2, Result};

/// Smallest accepted packet width, in sites.
pub const MIN_WIDTH: f64 = 4.0;

/// Distance, in widths, beyond which the envelope is below the guard level.
const TAIL_WIDTHS: f64 = 11.0;

/// Gaussian packet `exp(−(x−x_c)²/(4σ₀²)) · e^{ik₀x} · coin`, normalized.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WavepacketSpec {
    pub center: i64,
    pub width: f64,
    pub momentum: f64,
    pub coin: [c64; 2],
}

impl WavepacketSpec {
    pub fn new(center: i64, width: f64, momentum: f64, coin: [c64; 2]) -> Self {
        WavepacketSpec {
            center,
            width,
            momentum,
            coin,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.width.is_finite() && self.width >= MIN_WIDTH) {
            return Err(Error::Config(format!(
                "packet width {} must be at least {MIN_WIDTH}",
                self.width
            )));
        }
        if !self.momentum.is_finite() {
            return Err(Error::Config("packet momentum is not finite".into()));
        }
        let norm_sqr = self.coin[0].norm_sqr() + self.coin[1].norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(())
    }

    /// Half-width that keeps the packet inside the guard for `steps` steps.
    pub fn required_half_width(&self, steps: usize) -> usize {
        self.center.unsigned_abs() as usize + (TAIL_WIDTHS * self.width).ceil() as usize + steps + 2
    }

    pub fn state(&self, half_width: usize) -> Result<WalkerState> {
        self.validate()?;
        let l = half_width as i64;
        let mut amps: Vec<[c64; 2]> = (-l..=l)
            .map(|x| {
                let d = (x - self.center) as f64;
                let env = c64::from_polar(
                    (-d * d / (4.0 * self.width * self.width)).exp(),
                    self.momentum * x as f64,
                );
                [self.coin[0] * env, self.coin[1] * env]
            })
            .collect();
        let norm = amps
            .iter()
            .map(|a| a[0].norm_sqr() + a[1].norm_sqr())
            .sum::<f64>()
            .sqrt();
        for a in &mut amps {
            a[0] /= norm;
            a[1] /= norm;
        }
        let state = WalkerState::from_amplitudes(-l, amps);
        state.check_guard()?;
        Ok(state)
    }
}

/// `M₁`, the transport matrix.
pub fn transport_matrix(theta1: f64) -> Mat2 {
    let (s, c) = theta1.sin_cos();
    Mat2::new(c.into(), c64::new(0.0, -s), c64::new(0.0, s), (-c).into())
}

/// `M₂`, the mass matrix.
pub fn mass_matrix(theta1: f64, theta2: f64) -> Mat2 {
    let (s, c) = (theta1 + theta2).sin_cos();
    Mat2::new(
        (c - 1.0).into(),
        c64::new(0.0, -s),
        c64::new(0.0, -s),
        (c - 1.0).into(),
    )
}

/// `cos θ₂ · M₁ · ∂ₓψ + M₂ · ψ` at every site of `state`.
pub fn dirac_rhs(state: &WalkerState, theta1: f64, theta2: f64) -> Result<Vec<[c64; 2]>> {
    state.check_guard()?;
    let transport = transport_matrix(theta1).scale(theta2.cos().into());
    let mass = mass_matrix(theta1, theta2);
    let amps = state.amplitudes();
    let zero = [c64::new(0.0, 0.0); 2];
    Ok((0..amps.len())
        .map(|i| {
            let prev = if i == 0 { zero } else { amps[i - 1] };
            let next = amps.get(i + 1).copied().unwrap_or(zero);
            let grad = [(next[0] - prev[0]) * 0.5, (next[1] - prev[1]) * 0.5];
            let t = transport.apply(grad);
            let m = mass.apply(amps[i]);
            [t[0] + m[0], t[1] + m[1]]
        })
        .collect())
}

/// `‖(W_ss ψ − ψ) − rhs(ψ)‖₂ / ‖ψ‖₂` for the packet `wp`.
pub fn continuum_residual(theta1: f64, theta2: f64, wp: &WavepacketSpec) -> Result<f64> {
    let l = wp.required_half_width(1);
    let psi = wp.state(l)?;
    residual_on(&psi, theta1, theta2)
}

/// [`continuum_residual`] for an arbitrary in-guard state.
pub fn residual_on(psi: &WalkerState, theta1: f64, theta2: f64) -> Result<f64> {
    let l = (psi.len() / 2) as i64;
    if psi.lattice_min() != -l || psi.len().is_multiple_of(2) {
        return Err(Error::Config(
            "residual needs a lattice symmetric about 0".into(),
        ));
    }
    let spec = WalkSpec::ssqw(
        CoinParams::rotation(theta1),
        CoinParams::rotation(theta2),
        1,
        l as usize,
    );
    let stepped = step(psi, &spec)?;
    let rhs = dirac_rhs(psi, theta1, theta2)?;
    let err: f64 = stepped
        .amplitudes()
        .iter()
        .zip(psi.amplitudes())
        .zip(&rhs)
        .map(|((w, p), r)| (0..2).map(|k| (w[k] - p[k] - r[k]).norm_sqr()).sum::<f64>())
        .sum();
    Ok((err / psi.norm_sqr()).sqrt())
}
