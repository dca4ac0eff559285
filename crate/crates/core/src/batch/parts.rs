use serde::{Deserialize, Serialize};

use crate::batch::{MAX_DENSE_HALF_WIDTH, SCHEMA_VERSION};
use crate::compiler::{CompiledStep, TrainElement, VerificationReport, VERIFY_TOL};
use crate::optics::{compose, LatticeOperator, OpticalElement};
use crate::walk::WalkKind;
use crate::{Error, Result};

/// One element of a step block. `order` counts from 0 in the order light
/// meets the elements.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartRecord {
    pub order: usize,
    #[serde(flatten)]
    pub element: OpticalElement,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StepBlock {
    pub step: usize,
    /// `ϕ` with `step operator = e^{iϕ} · train`.
    pub global_phase: f64,
    pub elements: Vec<PartRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationRecord {
    pub tolerance: f64,
    pub fidelity: f64,
    pub phase: f64,
    pub distance: f64,
    pub pass: bool,
}

impl From<&VerificationReport> for VerificationRecord {
    fn from(r: &VerificationReport) -> Self {
        VerificationRecord {
            tolerance: VERIFY_TOL,
            fidelity: r.fidelity,
            phase: r.phase,
            distance: r.distance,
            pass: r.pass,
        }
    }
}

/// Ordered optical parts for a whole walk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartsList {
    pub schema_version: u32,
    pub walk: WalkKind,
    pub half_width: usize,
    pub steps: Vec<StepBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationRecord>,
}

impl StepBlock {
    pub fn from_compiled(step: usize, cs: &CompiledStep) -> Self {
        StepBlock {
            step,
            global_phase: cs.global_phase,
            elements: cs
                .elements
                .iter()
                .enumerate()
                .map(|(order, e)| PartRecord {
                    order,
                    element: e.element.clone(),
                    provenance: e.provenance.clone(),
                })
                .collect(),
        }
    }

    pub fn to_compiled(&self) -> CompiledStep {
        CompiledStep {
            elements: self
                .elements
                .iter()
                .map(|r| TrainElement {
                    element: r.element.clone(),
                    provenance: r.provenance.clone(),
                })
                .collect(),
            global_phase: self.global_phase,
        }
    }

    pub fn optical_elements(&self) -> Vec<OpticalElement> {
        self.elements.iter().map(|r| r.element.clone()).collect()
    }
}

impl PartsList {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let list: PartsList = serde_json::from_str(s).map_err(|e| Error::Config(e.to_string()))?;
        list.validate()?;
        Ok(list)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("parts list always serializes");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Config(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        for (i, block) in self.steps.iter().enumerate() {
            if block.step != i {
                return Err(Error::Config(format!(
                    "step block {i} is labelled {}",
                    block.step
                )));
            }
            if !block.global_phase.is_finite() {
                return Err(Error::Config(format!(
                    "step {i} has a non-finite global phase"
                )));
            }
            for (j, r) in block.elements.iter().enumerate() {
                if r.order != j {
                    return Err(Error::Config(format!(
                        "step {i}: record {j} has order {}",
                        r.order
                    )));
                }
                r.element
                    .check_finite()
                    .map_err(|e| Error::Config(format!("step {i}: {e}")))?;
            }
        }
        Ok(())
    }

    /// Operator of step block `step` on the recorded lattice.
    pub fn lift_step(&self, step: usize) -> Result<LatticeOperator> {
        if self.half_width > MAX_DENSE_HALF_WIDTH {
            return Err(Error::Config(format!(
                "half_width {} is too large to lift densely (max {MAX_DENSE_HALF_WIDTH})",
                self.half_width
            )));
        }
        let block = self
            .steps
            .get(step)
            .ok_or_else(|| Error::Config(format!("parts list has no step {step}")))?;
        compose(&block.optical_elements(), self.half_width)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compiler::compile_ssqw;
    use crate::walk::coin_matrix;

    fn sample() -> PartsList {
        let cs = compile_ssqw(&coin_matrix(0.3), &coin_matrix(1.1)).unwrap();
        PartsList {
            schema_version: SCHEMA_VERSION,
            walk: WalkKind::Ssqw,
            half_width: 4,
            steps: vec![
                StepBlock::from_compiled(0, &cs),
                StepBlock::from_compiled(1, &cs),
            ],
            verification: None,
        }
    }

    #[test]
    fn record_layout() {
        let v = serde_json::to_value(sample()).unwrap();
        let rec = &v["steps"][0]["elements"][1];
        assert_eq!(rec["order"], 1);
        assert_eq!(rec["element_type"], "j_plate");
        assert_eq!(rec["parameters"]["m_x"], -1);
        assert!(rec["provenance"].is_string());
        assert!(v.get("verification").is_none());
    }

    #[test]
    fn json_round_trip() {
        let list = sample();
        let back = PartsList::from_json_str(&list.to_json_string()).unwrap();
        assert_eq!(back, list);
        assert_eq!(back.lift_step(1).unwrap(), list.lift_step(1).unwrap());
        assert!(back.lift_step(2).is_err());
    }

    #[test]
    fn rejects_misordered_records() {
        let mut list = sample();
        list.steps[0].elements.swap(0, 1);
        assert!(PartsList::from_json_str(&list.to_json_string()).is_err());
        let mut list = sample();
        list.steps[1].step = 5;
        assert!(PartsList::from_json_str(&list.to_json_string()).is_err());
    }
}
