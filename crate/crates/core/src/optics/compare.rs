use crate::optics::LatticeOperator;
use crate::{c64, Error, Result};

/// Outcome of comparing two operators modulo a global phase.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseComparison {
    /// `min_ϕ ‖A − e^{iϕ}B‖_F / max(‖A‖_F, ‖B‖_F) ≤ tol`
    pub equal: bool,
    /// `|tr(A†B)| / (‖A‖_F ‖B‖_F)`; equals `|tr(A†B)|/dim` for unitaries.
    pub fidelity: f64,
    /// `arg tr(A†B)`, so that `B ≈ e^{i·phase} A`.
    pub phase: f64,
    /// The minimized relative Frobenius distance.
    pub distance: f64,
}

/// Compares `a` and `b` up to a global phase.
pub fn equal_up_to_phase(
    a: &LatticeOperator,
    b: &LatticeOperator,
    tol: f64,
) -> Result<PhaseComparison> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let overlap: c64 = a
        .matrix()
        .iter()
        .zip(b.matrix().iter())
        .map(|(x, y)| x.conj() * y)
        .sum();
    let norm_a = a.frobenius_norm();
    let norm_b = b.frobenius_norm();
    if norm_a == 0.0 || norm_b == 0.0 {
        let both = norm_a == norm_b;
        return Ok(PhaseComparison {
            equal: both,
            fidelity: if both { 1.0 } else { 0.0 },
            phase: 0.0,
            distance: if both { 0.0 } else { 1.0 },
        });
    }
    let phase = if overlap.norm() > 0.0 {
        overlap.arg()
    } else {
        0.0
    };
    // A ≈ e^{−i·phase} B minimizes the distance.
    let back = c64::cis(-phase);
    let diff_sqr: f64 = a
        .matrix()
        .iter()
        .zip(b.matrix().iter())
        .map(|(x, y)| (x - y * back).norm_sqr())
        .sum();
    let distance = diff_sqr.sqrt() / norm_a.max(norm_b);
    Ok(PhaseComparison {
        equal: distance <= tol,
        fidelity: (overlap.norm() / (norm_a * norm_b)).min(1.0),
        phase,
        distance,
    })
}
