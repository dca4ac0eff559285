use std::f64::consts::{FRAC_PI_4, TAU};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{c64, Error, Mat2, Result};

/// `[[cos θ, −i sin θ], [−i sin θ, cos θ]]`, the homogeneous walk coin.
pub fn coin_matrix(theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    Mat2::new(c.into(), c64::new(0.0, -s), c64::new(0.0, -s), c.into())
}

/// `e^{iχ} e^{iξσ₂} e^{iησ₃} e^{iθσ₂}`, multiplied in that order.
pub fn u2_matrix(p: &CoinParams) -> Mat2 {
    (Mat2::exp_i_y(p.xi) * Mat2::exp_i_z(p.eta) * Mat2::exp_i_y(p.theta)).scale(c64::cis(p.chi))
}

/// Angles of a single U(2) coin, in radians.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoinParams {
    #[serde(default)]
    pub chi: f64,
    #[serde(default)]
    pub xi: f64,
    #[serde(default)]
    pub eta: f64,
    #[serde(default)]
    pub theta: f64,
}

impl CoinParams {
    pub const IDENTITY: CoinParams = CoinParams {
        chi: 0.0,
        xi: 0.0,
        eta: 0.0,
        theta: 0.0,
    };

    pub const fn new(chi: f64, xi: f64, eta: f64, theta: f64) -> Self {
        CoinParams {
            chi,
            xi,
            eta,
            theta,
        }
    }

    /// Parameters reproducing [`coin_matrix`]`(theta)`.
    ///
    /// `e^{−iθσ₁} = e^{iπσ₂/4} e^{iθσ₃} e^{−iπσ₂/4}`.
    pub const fn rotation(theta: f64) -> Self {
        CoinParams {
            chi: 0.0,
            xi: FRAC_PI_4,
            eta: theta,
            theta: -FRAC_PI_4,
        }
    }

    pub fn matrix(&self) -> Mat2 {
        u2_matrix(self)
    }

    pub fn is_finite(&self) -> bool {
        [self.chi, self.xi, self.eta, self.theta]
            .iter()
            .all(|a| a.is_finite())
    }
}

/// Per-site coin parameters over a contiguous run of lattice sites.
#[derive(Clone, Debug, PartialEq)]
pub struct CoinTable {
    lattice_min: i64,
    params: Vec<CoinParams>,
}

impl CoinTable {
    /// The same coin on every site of `[-L, L]`.
    pub fn homogeneous(params: CoinParams, half_width: usize) -> Self {
        CoinTable {
            lattice_min: -(half_width as i64),
            params: vec![params; 2 * half_width + 1],
        }
    }

    pub fn from_sites(lattice_min: i64, params: Vec<CoinParams>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::Config("coin table has no sites".into()));
        }
        if let Some(i) = params.iter().position(|p| !p.is_finite()) {
            return Err(Error::Config(format!(
                "coin angles at site {} are not finite",
                lattice_min + i as i64
            )));
        }
        Ok(CoinTable {
            lattice_min,
            params,
        })
    }

    /// θ(x) uniform in `[0, 2π)`, other angles zero, drawn in ascending `x`.
    pub fn random_theta<R: Rng + ?Sized>(half_width: usize, rng: &mut R) -> Self {
        let params = (0..2 * half_width + 1)
            .map(|_| CoinParams {
                theta: rng.gen_range(0.0..TAU),
                ..CoinParams::IDENTITY
            })
            .collect();
        CoinTable {
            lattice_min: -(half_width as i64),
            params,
        }
    }

    pub fn lattice_min(&self) -> i64 {
        self.lattice_min
    }

    pub fn lattice_max(&self) -> i64 {
        self.lattice_min + self.params.len() as i64 - 1
    }

    pub fn params(&self) -> &[CoinParams] {
        &self.params
    }

    pub fn get(&self, x: i64) -> Option<&CoinParams> {
        usize::try_from(x - self.lattice_min)
            .ok()
            .and_then(|i| self.params.get(i))
    }

    /// `Some(p)` when every site carries the same parameters.
    pub fn homogeneous_params(&self) -> Option<CoinParams> {
        let first = *self.params.first()?;
        self.params.iter().all(|p| *p == first).then_some(first)
    }

    pub fn sites(&self) -> impl Iterator<Item = (i64, &CoinParams)> {
        (self.lattice_min..).zip(self.params.iter())
    }

    pub(crate) fn check_covers(&self, min: i64, max: i64) -> Result<()> {
        if self.lattice_min > min || self.lattice_max() < max {
            return Err(Error::TableMismatch {
                table_min: self.lattice_min,
                table_max: self.lattice_max(),
                lattice_min: min,
                lattice_max: max,
            });
        }
        Ok(())
    }
}
