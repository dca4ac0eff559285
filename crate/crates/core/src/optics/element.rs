use serde::{Deserialize, Serialize};

use crate::optics::jones::{half_wave_plate, jplate_pointwise, rotator, variable_wave_plate};
use crate::optics::{JonesMatrix, LatticeOperator};
use crate::{c64, Error, Mat2, Result};

/// J-plate with affine azimuthal phase profiles.
///
/// The eigenpolarization along the rotated x axis picks up
/// `δx(φ) = m_x·φ + c_x`, the other `δy(φ) = m_y·φ + c_y`. A winding
/// `e^{imφ}` maps OAM `|ℓ⟩ → |ℓ+m⟩`, so only integer `m` can be represented
/// in the OAM basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JPlateSpec {
    pub m_x: i32,
    pub c_x: f64,
    pub m_y: i32,
    pub c_y: f64,
    /// Plate orientation `ϑ`.
    pub rotation: f64,
}

impl JPlateSpec {
    pub const fn new(m_x: i32, c_x: f64, m_y: i32, c_y: f64, rotation: f64) -> Self {
        JPlateSpec {
            m_x,
            c_x,
            m_y,
            c_y,
            rotation,
        }
    }

    /// Constant-phase plate `J(c_x, c_y, ϑ)`; acts identically on every mode.
    pub const fn uniform(c_x: f64, c_y: f64, rotation: f64) -> Self {
        JPlateSpec {
            m_x: 0,
            c_x,
            m_y: 0,
            c_y,
            rotation,
        }
    }

    /// Builds a plate from real-valued winding numbers, rejecting any that
    /// are not integers.
    pub fn from_windings(m_x: f64, c_x: f64, m_y: f64, c_y: f64, rotation: f64) -> Result<Self> {
        let to_int = |m: f64| -> Result<i32> {
            if m.is_finite() && m.fract() == 0.0 && m.abs() <= i32::MAX as f64 {
                Ok(m as i32)
            } else {
                Err(Error::NotLiftable(format!(
                    "OAM winding {m} is not an integer"
                )))
            }
        };
        Ok(JPlateSpec::new(
            to_int(m_x)?,
            c_x,
            to_int(m_y)?,
            c_y,
            rotation,
        ))
    }

    /// Jones matrix at azimuth `φ`.
    pub fn jones_at(&self, phi: f64) -> JonesMatrix {
        jplate_pointwise(
            self.m_x as f64 * phi + self.c_x,
            self.m_y as f64 * phi + self.c_y,
            self.rotation,
        )
    }

    pub fn shifts_oam(&self) -> bool {
        self.m_x != 0 || self.m_y != 0
    }

    fn is_finite(&self) -> bool {
        self.c_x.is_finite() && self.c_y.is_finite() && self.rotation.is_finite()
    }
}

/// One entry of an optical train.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(
    tag = "element_type",
    content = "parameters",
    rename_all = "snake_case"
)]
pub enum OpticalElement {
    JPlate(JPlateSpec),
    #[serde(rename = "hwp")]
    HalfWavePlate {
        rho: f64,
    },
    #[serde(rename = "vwp")]
    VariableWavePlate {
        zeta: f64,
    },
    /// Mode-sorted stage: the beam is split by OAM, each mode passes its own
    /// non-shifting element, and the modes are recombined.
    ModeArray(ModeArray),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeArray {
    pub first_site: i64,
    pub elements: Vec<OpticalElement>,
}

impl ModeArray {
    pub fn element_at(&self, x: i64) -> Option<&OpticalElement> {
        usize::try_from(x - self.first_site)
            .ok()
            .and_then(|i| self.elements.get(i))
    }
}

impl OpticalElement {
    /// Jones matrix for elements that leave OAM untouched.
    pub fn pointwise_jones(&self) -> Option<JonesMatrix> {
        match self {
            OpticalElement::JPlate(p) if !p.shifts_oam() => Some(p.jones_at(0.0)),
            OpticalElement::JPlate(_) => None,
            OpticalElement::HalfWavePlate { rho } => Some(half_wave_plate(*rho)),
            OpticalElement::VariableWavePlate { zeta } => Some(variable_wave_plate(*zeta)),
            OpticalElement::ModeArray(_) => None,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            OpticalElement::JPlate(_) => "j_plate",
            OpticalElement::HalfWavePlate { .. } => "hwp",
            OpticalElement::VariableWavePlate { .. } => "vwp",
            OpticalElement::ModeArray(_) => "mode_array",
        }
    }

    pub(crate) fn check_finite(&self) -> Result<()> {
        let finite = match self {
            OpticalElement::JPlate(p) => p.is_finite(),
            OpticalElement::HalfWavePlate { rho } => rho.is_finite(),
            OpticalElement::VariableWavePlate { zeta } => zeta.is_finite(),
            OpticalElement::ModeArray(m) => {
                return m.elements.iter().try_for_each(OpticalElement::check_finite);
            }
        };
        if finite {
            Ok(())
        } else {
            Err(Error::NotLiftable(format!(
                "{} has non-finite parameters",
                self.type_name()
            )))
        }
    }
}

/// Action of one element on `coin ⊗ lattice` over `[-L, L]`.
pub fn lift(element: &OpticalElement, half_width: usize) -> Result<LatticeOperator> {
    element.check_finite()?;
    match element {
        OpticalElement::JPlate(p) => Ok(lift_jplate(p, half_width)),
        OpticalElement::HalfWavePlate { .. } | OpticalElement::VariableWavePlate { .. } => Ok(
            LatticeOperator::coin(&element.pointwise_jones().unwrap(), half_width),
        ),
        OpticalElement::ModeArray(array) => {
            let l = half_width as i64;
            let mut per_site = Vec::with_capacity(2 * half_width + 1);
            for x in -l..=l {
                let e = array.element_at(x).ok_or_else(|| {
                    Error::NotLiftable(format!("mode array has no element for mode {x}"))
                })?;
                e.check_finite()?;
                let j = e.pointwise_jones().ok_or_else(|| {
                    Error::NotLiftable(format!(
                        "{} at mode {x} shifts OAM inside a mode array",
                        e.type_name()
                    ))
                })?;
                per_site.push(j);
            }
            Ok(LatticeOperator::site_coins(half_width, |x| {
                per_site[(x + l) as usize]
            }))
        }
    }
}

/// `(R_{−ϑ}⊗I) · (e^{ic_x}|H⟩⟨H|⊗T^{m_x} + e^{ic_y}|V⟩⟨V|⊗T^{m_y}) · (R_ϑ⊗I)`
fn lift_jplate(p: &JPlateSpec, half_width: usize) -> LatticeOperator {
    let back = rotator(-p.rotation);
    let forward = rotator(p.rotation);
    let mut op = LatticeOperator::zeros(half_width);
    let l = half_width as i64;
    for (k, m, c) in [(0usize, p.m_x as i64, p.c_x), (1usize, p.m_y as i64, p.c_y)] {
        // e^{ic} R_{−ϑ}|k⟩⟨k|R_ϑ
        let mut proj = Mat2::ZERO;
        for a in 0..2 {
            for b in 0..2 {
                proj.0[a][b] = back.get(a, k) * forward.get(k, b) * c64::cis(c);
            }
        }
        for x in (-l..=l).filter(|x| (-l..=l).contains(&(x + m))) {
            for a in 0..2 {
                for b in 0..2 {
                    let r = op.index(a, x + m).unwrap();
                    let col = op.index(b, x).unwrap();
                    op.matrix_mut()[[r, col]] += proj.get(a, b);
                }
            }
        }
    }
    op
}

/// Product of the lifted elements, first element applied first.
pub fn compose(elements: &[OpticalElement], half_width: usize) -> Result<LatticeOperator> {
    elements
        .iter()
        .try_fold(LatticeOperator::identity(half_width), |acc, e| {
            lift(e, half_width)?.then_after(&acc)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> c64 {
        c64::new(1.0, 0.0)
    }

    #[test]
    fn minus_plate_shifts_h_only() {
        let op = lift(
            &OpticalElement::JPlate(JPlateSpec::new(-1, 0.0, 0, 0.0, 0.0)),
            4,
        )
        .unwrap();
        for x in -3..=4 {
            assert_eq!(op.entry((0, x - 1), (0, x)), one());
        }
        for x in -4..=4 {
            assert_eq!(op.entry((1, x), (1, x)), one());
        }
        assert_eq!(op.bandwidth(), 1);
    }

    #[test]
    fn half_wave_plate_at_zero_is_sigma_z() {
        let op = lift(&OpticalElement::HalfWavePlate { rho: 0.0 }, 3).unwrap();
        assert_eq!(op, LatticeOperator::coin(&Mat2::PAULI_Z, 3));
    }

    #[test]
    fn empty_train_is_identity() {
        assert_eq!(compose(&[], 3).unwrap(), LatticeOperator::identity(3));
    }

    #[test]
    fn hwp_squared_is_identity() {
        let hwp = OpticalElement::HalfWavePlate { rho: 0.37 };
        let op = compose(&[hwp.clone(), hwp], 3).unwrap();
        assert!(op.max_abs_diff(&LatticeOperator::identity(3)).unwrap() < 1e-15);
    }

    #[test]
    fn non_integer_winding_rejected() {
        assert!(matches!(
            JPlateSpec::from_windings(-0.5, 0.0, 0.0, 0.0, 0.0),
            Err(Error::NotLiftable(_))
        ));
        assert_eq!(
            JPlateSpec::from_windings(-1.0, 0.2, 1.0, 0.0, 0.1).unwrap(),
            JPlateSpec::new(-1, 0.2, 1, 0.0, 0.1)
        );
    }

    #[test]
    fn mode_array_rules() {
        let too_short = OpticalElement::ModeArray(ModeArray {
            first_site: -1,
            elements: vec![OpticalElement::HalfWavePlate { rho: 0.0 }; 3],
        });
        assert!(matches!(lift(&too_short, 2), Err(Error::NotLiftable(_))));

        let shifting = OpticalElement::ModeArray(ModeArray {
            first_site: -1,
            elements: vec![OpticalElement::JPlate(JPlateSpec::new(1, 0.0, 0, 0.0, 0.0)); 3],
        });
        assert!(matches!(lift(&shifting, 1), Err(Error::NotLiftable(_))));

        let ok = OpticalElement::ModeArray(ModeArray {
            first_site: -1,
            elements: vec![
                OpticalElement::HalfWavePlate { rho: 0.0 },
                OpticalElement::VariableWavePlate { zeta: 0.4 },
                OpticalElement::JPlate(JPlateSpec::uniform(0.1, 0.2, 0.3)),
            ],
        });
        let op = lift(&ok, 1).unwrap();
        assert_eq!(op.entry((1, -1), (1, -1)), c64::new(-1.0, 0.0));
        assert!((op.entry((0, 0), (0, 0)) - c64::cis(0.2)).norm() < 1e-15);
        assert!(op.interior_isometry_error() < 1e-14);
    }

    #[test]
    fn element_json_shape() {
        let e = OpticalElement::JPlate(JPlateSpec::new(-1, 0.0, 0, 0.0, 0.5));
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["element_type"], "j_plate");
        assert_eq!(v["parameters"]["m_x"], -1);
        let back: OpticalElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, e);

        let bad = serde_json::json!({"element_type": "j_plate",
            "parameters": {"m_x": 0.5, "c_x": 0.0, "m_y": 0, "c_y": 0.0, "rotation": 0.0}});
        assert!(serde_json::from_value::<OpticalElement>(bad).is_err());
    }
}
