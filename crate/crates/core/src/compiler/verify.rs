use crate::compiler::{wrap_phase, CompiledStep};
use crate::optics::{equal_up_to_phase, lift, LatticeOperator};
use crate::Result;

/// Relative Frobenius distance (modulo global phase) a compiled train may
/// have from its reference operator.
pub const VERIFY_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct FactorDiagnostic {
    pub order: usize,
    pub element_type: &'static str,
    pub provenance: String,
    /// `U†U − I` on basis states away from the lattice edge.
    pub isometry_error: f64,
    /// Largest OAM change the element produces.
    pub bandwidth: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub fidelity: f64,
    /// Measured `ϕ` with `reference = e^{iϕ} · train`.
    pub phase: f64,
    pub distance: f64,
    pub pass: bool,
    /// Measured minus predicted global phase, wrapped to `(−π, π]`.
    pub phase_error: f64,
    pub factors: Vec<FactorDiagnostic>,
}

/// Compares the lifted train of `cs` with `reference` on the reference's
/// lattice.
pub fn verify(cs: &CompiledStep, reference: &LatticeOperator) -> Result<VerificationReport> {
    let l = reference.half_width();
    let mut factors = Vec::with_capacity(cs.elements.len());
    let mut train = LatticeOperator::identity(l);
    for (order, e) in cs.elements.iter().enumerate() {
        let op = lift(&e.element, l)?;
        factors.push(FactorDiagnostic {
            order,
            element_type: e.element.type_name(),
            provenance: e.provenance.clone(),
            isometry_error: op.interior_isometry_error(),
            bandwidth: op.bandwidth(),
        });
        train = op.then_after(&train)?;
    }
    let cmp = equal_up_to_phase(&train, reference, VERIFY_TOL)?;
    Ok(VerificationReport {
        fidelity: cmp.fidelity,
        phase: cmp.phase,
        distance: cmp.distance,
        pass: cmp.equal,
        phase_error: wrap_phase(cmp.phase - cs.global_phase),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compiler::{compile_ssqw, ssqw_operator};
    use crate::optics::OpticalElement;
    use crate::walk::coin_matrix;

    #[test]
    fn train_against_its_own_lift() {
        let cs = compile_ssqw(&coin_matrix(0.4), &coin_matrix(-1.2)).unwrap();
        let own = cs.lift(4).unwrap();
        let report = verify(&cs, &own).unwrap();
        assert!(report.pass);
        assert!((report.fidelity - 1.0).abs() < 1e-14);
        assert_eq!(report.factors.len(), 5);
        assert_eq!(report.factors[1].bandwidth, 1);
        assert!(report.factors.iter().all(|f| f.isometry_error < 1e-13));
    }

    #[test]
    fn perturbed_waveplate_fails() {
        let (c1, c2) = (coin_matrix(0.4), coin_matrix(-1.2));
        let mut cs = compile_ssqw(&c1, &c2).unwrap();
        let OpticalElement::VariableWavePlate { zeta } = &mut cs.elements[0].element else {
            panic!("first element should be a variable wave plate")
        };
        *zeta += 1e-3;
        let report = verify(&cs, &ssqw_operator(&c1, &c2, 4)).unwrap();
        assert!(!report.pass);
        assert!(report.fidelity < 1.0 - 1e-8, "fidelity {}", report.fidelity);
    }

    #[test]
    fn lattice_coverage_errors() {
        let cs = compile_ssqw(&coin_matrix(0.4), &coin_matrix(-1.2)).unwrap();
        assert!(verify(&cs, &LatticeOperator::identity(2)).is_ok());
        // reference on a different lattice than a mode array covers
        let spec = crate::walk::WalkSpec::generalized(
            crate::walk::CoinTable::homogeneous(Default::default(), 3),
            crate::walk::CoinTable::homogeneous(Default::default(), 3),
            1,
            3,
        );
        let steps = crate::compiler::compile_generalized(&spec).unwrap();
        assert!(verify(&steps[0], &LatticeOperator::identity(5)).is_err());
    }
}
