use std::f64::consts::FRAC_PI_4;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::walk::{CoinParams, CoinTable, WalkKind, WalkSpec};
use crate::{c64, Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest accepted lattice half-width.
pub const MAX_HALF_WIDTH: usize = 1 << 20;

/// How a coin table is specified in a config file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoinSpec {
    /// `[[cos θ, −i sin θ], [−i sin θ, cos θ]]` on every site.
    Rotation { theta: f64 },
    /// The same `(χ, ξ, η, θ)` on every site.
    Params {
        #[serde(default)]
        chi: f64,
        #[serde(default)]
        xi: f64,
        #[serde(default)]
        eta: f64,
        #[serde(default)]
        theta: f64,
    },
    /// Explicit parameters for consecutive sites starting at `first_site`.
    Sites {
        first_site: i64,
        params: Vec<CoinParams>,
    },
    /// θ(x) uniform in `[0, 2π)` from the run seed, other angles zero.
    RandomTheta,
}

impl CoinSpec {
    fn is_random(&self) -> bool {
        matches!(self, CoinSpec::RandomTheta)
    }

    fn table(&self, half_width: usize, rng: &mut ChaCha8Rng) -> Result<CoinTable> {
        match self {
            CoinSpec::Rotation { theta } => Ok(CoinTable::homogeneous(
                CoinParams::rotation(*theta),
                half_width,
            )),
            CoinSpec::Params {
                chi,
                xi,
                eta,
                theta,
            } => Ok(CoinTable::homogeneous(
                CoinParams::new(*chi, *xi, *eta, *theta),
                half_width,
            )),
            CoinSpec::Sites { first_site, params } => {
                CoinTable::from_sites(*first_site, params.clone())
            }
            CoinSpec::RandomTheta => Ok(CoinTable::random_theta(half_width, rng)),
        }
    }

    fn check(&self, which: &str) -> Result<()> {
        let finite = match self {
            CoinSpec::Rotation { theta } => theta.is_finite(),
            CoinSpec::Params {
                chi,
                xi,
                eta,
                theta,
            } => [chi, xi, eta, theta].iter().all(|a| a.is_finite()),
            CoinSpec::Sites { params, .. } => {
                !params.is_empty() && params.iter().all(CoinParams::is_finite)
            }
            CoinSpec::RandomTheta => true,
        };
        if finite {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "{which} has empty or non-finite parameters"
            )))
        }
    }
}

fn default_coin() -> [c64; 2] {
    WalkSpec::SYMMETRIC_COIN
}

fn default_ensemble() -> usize {
    1
}

/// A walk specification as read from disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    pub walk: WalkKind,
    pub steps: usize,
    pub half_width: usize,
    #[serde(default)]
    pub start_site: i64,
    /// `[[re, im], [re, im]]`; defaults to `(|0⟩ + i|1⟩)/√2`.
    #[serde(default = "default_coin")]
    pub initial_coin: [c64; 2],
    pub coin1: CoinSpec,
    #[serde(default)]
    pub coin2: Option<CoinSpec>,
    #[serde(default)]
    pub electric_phase: f64,
    #[serde(default)]
    pub seed: u64,
    /// Emit every lattice site in the distribution CSV, not only `P > 0`.
    #[serde(default)]
    pub emit_all_rows: bool,
    /// Verify compiled trains against the walk operator.
    #[serde(default)]
    pub verify: bool,
    #[serde(default = "default_ensemble")]
    pub ensemble_size: usize,
}

impl RunConfig {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("config always serializes")
    }

    /// Schema checks that need no computation.
    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        if self.half_width == 0 || self.half_width > MAX_HALF_WIDTH {
            return Err(Error::Config(format!(
                "half_width must be in 1..={MAX_HALF_WIDTH}"
            )));
        }
        if self.ensemble_size == 0 {
            return Err(Error::Config("ensemble_size must be at least 1".into()));
        }
        if !self.electric_phase.is_finite() {
            return Err(Error::Config("electric_phase is not finite".into()));
        }
        let coin_ok = self
            .initial_coin
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite());
        if !coin_ok {
            return Err(Error::Config("initial_coin is not finite".into()));
        }
        self.coin1.check("coin1")?;
        match (&self.coin2, self.walk.uses_second_coin()) {
            (None, true) => {
                return Err(Error::Config(format!(
                    "{} walk needs coin2",
                    self.walk.name()
                )))
            }
            (Some(_), false) => {
                return Err(Error::Config(format!(
                    "{} walk takes no coin2",
                    self.walk.name()
                )))
            }
            (Some(c), true) => c.check("coin2")?,
            (None, false) => {}
        }
        if self.walk == WalkKind::Ssqw {
            let position_dependent =
                |c: &CoinSpec| matches!(c, CoinSpec::Sites { .. } | CoinSpec::RandomTheta);
            if position_dependent(&self.coin1)
                || self.coin2.as_ref().is_some_and(position_dependent)
            {
                return Err(Error::Config(
                    "ssqw coins must be rotation or params".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn has_random_coins(&self) -> bool {
        self.coin1.is_random() || self.coin2.as_ref().is_some_and(CoinSpec::is_random)
    }

    /// Walk with any random tables drawn from `seed`, coin1 first, each in
    /// ascending site order.
    pub fn walk_spec_with_seed(&self, seed: u64) -> Result<WalkSpec> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coin1 = self.coin1.table(self.half_width, &mut rng)?;
        let coin2 = self
            .coin2
            .as_ref()
            .map(|c| c.table(self.half_width, &mut rng))
            .transpose()?;
        Ok(WalkSpec {
            kind: self.walk,
            steps: self.steps,
            initial_coin: self.initial_coin,
            start_site: self.start_site,
            half_width: self.half_width,
            coin1,
            coin2,
            electric_phase: self.electric_phase,
            seed,
        })
    }

    pub fn walk_spec(&self) -> Result<WalkSpec> {
        self.walk_spec_with_seed(self.seed)
    }

    /// The same config with every random coin replaced by `θ = π/4`.
    pub fn ballistic_baseline(&self) -> RunConfig {
        let fix = |c: &CoinSpec| {
            if c.is_random() {
                CoinSpec::Params {
                    chi: 0.0,
                    xi: 0.0,
                    eta: 0.0,
                    theta: FRAC_PI_4,
                }
            } else {
                c.clone()
            }
        };
        RunConfig {
            coin1: fix(&self.coin1),
            coin2: self.coin2.as_ref().map(fix),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DTQW: &str = r#"{
        "schema_version": 1, "walk": "dtqw", "steps": 3, "half_width": 8,
        "initial_coin": [[1.0, 0.0], [0.0, 0.0]],
        "coin1": {"kind": "rotation", "theta": 0.7853981633974483}
    }"#;

    #[test]
    fn parses_minimal_config() {
        let cfg = RunConfig::from_json_str(DTQW).unwrap();
        assert_eq!(cfg.walk, WalkKind::Dtqw);
        assert_eq!(cfg.start_site, 0);
        assert_eq!(cfg.ensemble_size, 1);
        assert!(!cfg.emit_all_rows);
        let spec = cfg.walk_spec().unwrap();
        assert_eq!(
            spec.coin1.homogeneous_params(),
            Some(CoinParams::rotation(FRAC_PI_4))
        );
    }

    #[test]
    fn round_trips_through_json() {
        let cfg = RunConfig::from_json_str(DTQW).unwrap();
        assert_eq!(
            RunConfig::from_json_str(&cfg.to_json_string()).unwrap(),
            cfg
        );
    }

    #[test]
    fn rejects_unknown_keys() {
        let bad = DTQW.replace("\"steps\": 3", "\"steps\": 3, \"colour\": 1");
        assert!(matches!(
            RunConfig::from_json_str(&bad),
            Err(Error::Config(_))
        ));
        let bad = DTQW.replace(
            "\"theta\": 0.7853981633974483",
            "\"theta\": 0.1, \"phi\": 2",
        );
        assert!(matches!(
            RunConfig::from_json_str(&bad),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn rejects_wrong_schema_and_missing_coin() {
        let bad = DTQW.replace("\"schema_version\": 1", "\"schema_version\": 2");
        assert!(matches!(
            RunConfig::from_json_str(&bad),
            Err(Error::Config(_))
        ));
        let bad = DTQW.replace("\"dtqw\"", "\"ssqw\"");
        assert!(matches!(
            RunConfig::from_json_str(&bad),
            Err(Error::Config(_))
        ));
        let bad = DTQW.replace("\"dtqw\"", "\"hadamard\"");
        assert!(matches!(
            RunConfig::from_json_str(&bad),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn random_tables_follow_seed() {
        let cfg = RunConfig {
            walk: WalkKind::Generalized,
            coin1: CoinSpec::RandomTheta,
            coin2: Some(CoinSpec::RandomTheta),
            ..RunConfig::from_json_str(DTQW).unwrap()
        };
        cfg.validate().unwrap();
        assert!(cfg.has_random_coins());
        let a = cfg.walk_spec_with_seed(5).unwrap();
        let b = cfg.walk_spec_with_seed(5).unwrap();
        let c = cfg.walk_spec_with_seed(6).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.coin1, c.coin1);
        assert_ne!(a.coin1, a.coin2.clone().unwrap());

        let base = cfg.ballistic_baseline();
        assert!(!base.has_random_coins());
        assert_eq!(
            base.coin1,
            CoinSpec::Params {
                chi: 0.0,
                xi: 0.0,
                eta: 0.0,
                theta: FRAC_PI_4
            }
        );
    }

    #[test]
    fn ssqw_rejects_site_tables() {
        let cfg = RunConfig {
            walk: WalkKind::Ssqw,
            coin2: Some(CoinSpec::RandomTheta),
            ..RunConfig::from_json_str(DTQW).unwrap()
        };
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
    }
}
