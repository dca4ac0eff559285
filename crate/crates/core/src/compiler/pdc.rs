use std::f64::consts::PI;

use crate::optics::{JPlateSpec, ModeArray, OpticalElement};
use crate::walk::{CoinParams, CoinTable};
use crate::Mat2;

/// Plates placed on one sorted OAM mode. Light meets the half-wave plate
/// first, then `q1`, then `q2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PdcSite {
    pub site: i64,
    /// `J(χ+η, χ−η, ξ)`
    pub q2: JPlateSpec,
    /// `J(0, π, (θ+ξ)/2)`
    pub q1: JPlateSpec,
    /// Fast-axis angle of the half-wave plate; always 0, i.e. `σ₃`.
    pub hwp_rho: f64,
}

impl PdcSite {
    pub fn from_params(site: i64, p: &CoinParams) -> Self {
        PdcSite {
            site,
            q2: JPlateSpec::uniform(p.chi + p.eta, p.chi - p.eta, p.xi),
            q1: JPlateSpec::uniform(0.0, PI, (p.theta + p.xi) / 2.0),
            hwp_rho: 0.0,
        }
    }

    /// `Q₂ · Q₁ · HWP`
    pub fn pointwise_product(&self) -> Mat2 {
        self.q2.jones_at(0.0)
            * self.q1.jones_at(0.0)
            * OpticalElement::HalfWavePlate { rho: self.hwp_rho }
                .pointwise_jones()
                .unwrap()
    }
}

/// Per-mode plates realizing a position-dependent coin.
#[derive(Clone, Debug, PartialEq)]
pub struct PdcCompilation {
    pub sites: Vec<PdcSite>,
}

pub fn compile_pdc(table: &CoinTable) -> PdcCompilation {
    PdcCompilation {
        sites: table
            .sites()
            .map(|(x, p)| PdcSite::from_params(x, p))
            .collect(),
    }
}

impl PdcCompilation {
    pub fn first_site(&self) -> i64 {
        self.sites.first().map_or(0, |s| s.site)
    }

    /// Three mode-array stages in application order: HWP, `Q₁`, `Q₂`.
    pub fn elements(&self) -> [OpticalElement; 3] {
        let stage = |pick: &dyn Fn(&PdcSite) -> OpticalElement| {
            OpticalElement::ModeArray(ModeArray {
                first_site: self.first_site(),
                elements: self.sites.iter().map(pick).collect(),
            })
        };
        [
            stage(&|s| OpticalElement::HalfWavePlate { rho: s.hwp_rho }),
            stage(&|s| OpticalElement::JPlate(s.q1)),
            stage(&|s| OpticalElement::JPlate(s.q2)),
        ]
    }
}
