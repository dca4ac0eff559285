use std::f64::consts::PI;

use crate::compiler::{
    column_params, compile_pdc, euler_decompose, split_phase, ssqw_operator, wrap_phase, VERIFY_TOL,
};
use crate::optics::{compose, equal_up_to_phase, JPlateSpec, LatticeOperator, OpticalElement};
use crate::walk::WalkSpec;
use crate::{Error, Mat2, Result};

/// Lattice used for the self-check inside [`compile_ssqw`].
const SELF_CHECK_HALF_WIDTH: usize = 3;

/// An element together with the factor of the step operator it realizes.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainElement {
    pub element: OpticalElement,
    pub provenance: String,
}

impl TrainElement {
    fn new(element: OpticalElement, provenance: impl Into<String>) -> Self {
        TrainElement {
            element,
            provenance: provenance.into(),
        }
    }
}

/// Optical train for one walk step, in the order light meets it.
#[derive(Clone, Debug, PartialEq)]
pub struct CompiledStep {
    pub elements: Vec<TrainElement>,
    /// Predicted `ϕ` with `step operator = e^{iϕ} · train`.
    pub global_phase: f64,
}

impl CompiledStep {
    pub fn optical_elements(&self) -> Vec<OpticalElement> {
        self.elements.iter().map(|e| e.element.clone()).collect()
    }

    pub fn lift(&self, half_width: usize) -> Result<LatticeOperator> {
        compose(&self.optical_elements(), half_width)
    }
}

/// Constant phase on the H arm of the output J-plate, which absorbs
/// `S₊ e^{i(γ₁+π)σ₃/2}` into `J(c, φ − (γ₁+π)/2, 0)`.
///
/// Only [`OutputPlateConstant::Gamma1`] reproduces the step operator.
/// `Gamma2` puts `(γ₂+π)/2` on the H arm instead and exists to show that
/// this variant fails verification.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputPlateConstant {
    /// `(γ₁ + π)/2`
    #[default]
    Gamma1,
    /// `(γ₂ + π)/2`
    Gamma2,
}

/// Five-element train for `S₊ C₂ S₋ C₁`, self-checked on a small lattice.
pub fn compile_ssqw(c1: &Mat2, c2: &Mat2) -> Result<CompiledStep> {
    let compiled = compile_ssqw_with(c1, c2, OutputPlateConstant::Gamma1)?;
    let l = SELF_CHECK_HALF_WIDTH;
    let check = equal_up_to_phase(&ssqw_operator(c1, c2, l), &compiled.lift(l)?, VERIFY_TOL)?;
    if !check.equal {
        return Err(Error::VerificationFailed {
            fidelity: check.fidelity,
            distance: check.distance,
        });
    }
    Ok(compiled)
}

/// [`compile_ssqw`] without the self-check and with a selectable output
/// plate constant.
pub fn compile_ssqw_with(
    c1: &Mat2,
    c2: &Mat2,
    constant: OutputPlateConstant,
) -> Result<CompiledStep> {
    let (chi1, v1) = split_phase(c1)?;
    let (chi2, v2) = split_phase(c2)?;
    let col = column_params(&v1);
    let euler = euler_decompose(&(v2 * v1))?;
    let c_v = (euler.gamma1 + PI) / 2.0;
    let c_h = match constant {
        OutputPlateConstant::Gamma1 => c_v,
        OutputPlateConstant::Gamma2 => (euler.gamma2 + PI) / 2.0,
    };
    let [pre, plate, post] = col.conjugated_shift();
    let OpticalElement::VariableWavePlate { zeta: post_zeta } = post else {
        unreachable!()
    };
    let elements = vec![
        TrainElement::new(pre, "e^{-i(pi-beta)s3/2}: right factor of C1^dag S- C1"),
        TrainElement::new(plate, "J(-phi, 0, alpha): C1^dag S- C1 core"),
        TrainElement::new(
            OpticalElement::VariableWavePlate { zeta: post_zeta + euler.gamma3 },
            "e^{i(pi-beta+gamma3)s3/2}: left factor of C1^dag S- C1 merged with Euler e^{i gamma3 s3/2}",
        ),
        TrainElement::new(
            OpticalElement::HalfWavePlate { rho: euler.gamma2 / 4.0 },
            "HWP(gamma2/4): middle Euler factor of C3 = C2 C1",
        ),
        TrainElement::new(
            OpticalElement::JPlate(JPlateSpec::new(0, c_h, 1, -c_v, 0.0)),
            match constant {
                OutputPlateConstant::Gamma1 => {
                    "J((gamma1+pi)/2, phi-(gamma1+pi)/2, 0): S+ merged with e^{i(gamma1+pi)s3/2}"
                }
                OutputPlateConstant::Gamma2 => {
                    "J((gamma2+pi)/2, phi-(gamma1+pi)/2, 0): gamma2 variant, not a valid realization"
                }
            },
        ),
    ];
    Ok(CompiledStep {
        elements,
        global_phase: wrap_phase(chi1 + chi2 - PI / 2.0),
    })
}

/// One train per step for a position-dependent split-step walk.
///
/// Each step is `[C₁⁽ˣ⁾ stages, S₋ plate, C₂⁽ˣ⁾ stages, S₊ plate]`, where each
/// coin is the three mode-array stages from [`compile_pdc`].
pub fn compile_generalized(spec: &WalkSpec) -> Result<Vec<CompiledStep>> {
    if !spec.kind.uses_second_coin() {
        return Err(Error::Config(format!(
            "cannot compile a {} walk as a split-step train",
            spec.kind.name()
        )));
    }
    spec.validate()?;
    let table2 = spec.coin2.as_ref().expect("validated above");
    let stage_names = [
        "HWP (sigma3)",
        "Q1 = J(0, pi, (theta+xi)/2)",
        "Q2 = J(chi+eta, chi-eta, xi)",
    ];
    let mut elements = Vec::with_capacity(8);
    for (coin, table) in [("C1(x)", &spec.coin1), ("C2(x)", table2)] {
        for (e, name) in compile_pdc(table).elements().into_iter().zip(stage_names) {
            elements.push(TrainElement::new(e, format!("{coin}: {name} per mode")));
        }
        let (shift, plate) = if coin == "C1(x)" {
            ("S-: J(-phi, 0, 0)", JPlateSpec::new(-1, 0.0, 0, 0.0, 0.0))
        } else {
            ("S+: J(0, phi, 0)", JPlateSpec::new(0, 0.0, 1, 0.0, 0.0))
        };
        elements.push(TrainElement::new(OpticalElement::JPlate(plate), shift));
    }
    let step = CompiledStep {
        elements,
        global_phase: 0.0,
    };
    Ok(vec![step; spec.steps])
}
