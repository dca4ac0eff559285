use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::walk::{CoinParams, CoinTable, Distribution, WalkerState};
use crate::{c64, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkKind {
    /// `S·C`
    Dtqw,
    /// `S₊·C₂·S₋·C₁` with homogeneous coins.
    Ssqw,
    /// `S₊·C₂·S₋·C₁` with position-dependent coins.
    Generalized,
    /// `F_E·S·C`, where `F_E = e^{iφ_E x}`.
    ElectricDtqw,
}

impl WalkKind {
    pub fn uses_second_coin(self) -> bool {
        matches!(self, WalkKind::Ssqw | WalkKind::Generalized)
    }

    pub fn name(self) -> &'static str {
        match self {
            WalkKind::Dtqw => "dtqw",
            WalkKind::Ssqw => "ssqw",
            WalkKind::Generalized => "generalized",
            WalkKind::ElectricDtqw => "electric_dtqw",
        }
    }
}

/// Everything needed to reproduce one trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkSpec {
    pub kind: WalkKind,
    pub steps: usize,
    pub initial_coin: [c64; 2],
    pub start_site: i64,
    pub half_width: usize,
    pub coin1: CoinTable,
    pub coin2: Option<CoinTable>,
    pub electric_phase: f64,
    /// Seed the coin tables were drawn from, when they are random.
    pub seed: u64,
}

impl WalkSpec {
    /// `(|0⟩ + |1⟩)/√2`. It is a σ₁ eigenvector, so for rotation coins the
    /// DTQW distribution stays mirror-symmetric about the start site.
    pub const SYMMETRIC_COIN: [c64; 2] =
        [c64::new(FRAC_1_SQRT_2, 0.0), c64::new(FRAC_1_SQRT_2, 0.0)];

    pub fn dtqw(theta: f64, steps: usize, half_width: usize) -> Self {
        Self::base(
            WalkKind::Dtqw,
            steps,
            half_width,
            CoinTable::homogeneous(CoinParams::rotation(theta), half_width),
            None,
        )
    }

    pub fn electric_dtqw(theta: f64, phi_e: f64, steps: usize, half_width: usize) -> Self {
        let mut spec = Self::dtqw(theta, steps, half_width);
        spec.kind = WalkKind::ElectricDtqw;
        spec.electric_phase = phi_e;
        spec
    }

    pub fn ssqw(c1: CoinParams, c2: CoinParams, steps: usize, half_width: usize) -> Self {
        Self::base(
            WalkKind::Ssqw,
            steps,
            half_width,
            CoinTable::homogeneous(c1, half_width),
            Some(CoinTable::homogeneous(c2, half_width)),
        )
    }

    pub fn generalized(
        coin1: CoinTable,
        coin2: CoinTable,
        steps: usize,
        half_width: usize,
    ) -> Self {
        Self::base(WalkKind::Generalized, steps, half_width, coin1, Some(coin2))
    }

    fn base(
        kind: WalkKind,
        steps: usize,
        half_width: usize,
        coin1: CoinTable,
        coin2: Option<CoinTable>,
    ) -> Self {
        WalkSpec {
            kind,
            steps,
            initial_coin: Self::SYMMETRIC_COIN,
            start_site: 0,
            half_width,
            coin1,
            coin2,
            electric_phase: 0.0,
            seed: 0,
        }
    }

    pub fn with_initial_coin(mut self, coin: [c64; 2]) -> Self {
        self.initial_coin = coin;
        self
    }

    pub fn with_start_site(mut self, x0: i64) -> Self {
        self.start_site = x0;
        self
    }

    /// Smallest half-width that keeps every shift inside the guard.
    pub fn required_half_width(&self) -> usize {
        self.start_site.unsigned_abs() as usize + self.steps + 2
    }

    pub fn validate(&self) -> Result<()> {
        let required = self.required_half_width();
        if self.half_width < required {
            return Err(Error::LatticeTooSmall {
                half_width: self.half_width,
                required,
            });
        }
        let l = self.half_width as i64;
        self.coin1.check_covers(-l, l)?;
        match (self.kind.uses_second_coin(), &self.coin2) {
            (true, None) => {
                return Err(Error::Config(format!(
                    "{} walk needs a second coin",
                    self.kind.name()
                )))
            }
            (true, Some(c2)) => c2.check_covers(-l, l)?,
            (false, _) => {}
        }
        if self.kind == WalkKind::Ssqw {
            let homogeneous = self.coin1.homogeneous_params().is_some()
                && self
                    .coin2
                    .as_ref()
                    .and_then(CoinTable::homogeneous_params)
                    .is_some();
            if !homogeneous {
                return Err(Error::Config(
                    "ssqw coins must be position independent".into(),
                ));
            }
        }
        if !self.electric_phase.is_finite() {
            return Err(Error::Config("electric phase is not finite".into()));
        }
        Ok(())
    }

    pub fn initial_state(&self) -> Result<WalkerState> {
        WalkerState::new(self.initial_coin, self.start_site, self.half_width)
    }

    fn second_coin(&self) -> Result<&CoinTable> {
        self.coin2
            .as_ref()
            .ok_or_else(|| Error::Config(format!("{} walk needs a second coin", self.kind.name())))
    }
}

/// One walk step of the kind named by `spec`.
pub fn step(state: &WalkerState, spec: &WalkSpec) -> Result<WalkerState> {
    match spec.kind {
        WalkKind::Dtqw => state.apply_coin(&spec.coin1)?.shift_full(),
        WalkKind::Ssqw | WalkKind::Generalized => state
            .apply_coin(&spec.coin1)?
            .shift_minus()?
            .apply_coin(spec.second_coin()?)?
            .shift_plus(),
        WalkKind::ElectricDtqw => Ok(state
            .apply_coin(&spec.coin1)?
            .shift_full()?
            .electric_phase(spec.electric_phase)),
    }
}

/// States at `t = 0..=steps`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    states: Vec<WalkerState>,
}

impl Trajectory {
    pub fn states(&self) -> &[WalkerState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn last(&self) -> &WalkerState {
        self.states
            .last()
            .expect("trajectory always holds the initial state")
    }

    pub fn distributions(&self) -> Vec<Distribution> {
        self.states.iter().map(WalkerState::probability).collect()
    }

    /// σ(t) for every recorded step.
    pub fn std_devs(&self) -> Vec<f64> {
        self.states
            .iter()
            .map(|s| s.probability().std_dev())
            .collect()
    }
}

pub fn evolve(spec: &WalkSpec) -> Result<Trajectory> {
    spec.validate()?;
    let mut states = Vec::with_capacity(spec.steps + 1);
    states.push(spec.initial_state()?);
    for _ in 0..spec.steps {
        let next = step(states.last().unwrap(), spec)?;
        states.push(next);
    }
    Ok(Trajectory { states })
}
