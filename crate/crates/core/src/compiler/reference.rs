use crate::optics::LatticeOperator;
use crate::walk::{WalkKind, WalkSpec};
use crate::{Mat2, Result};

/// Dense `S₊ C₂ S₋ C₁` for homogeneous coins on `[-L, L]`.
pub fn ssqw_operator(c1: &Mat2, c2: &Mat2, half_width: usize) -> LatticeOperator {
    let minus = LatticeOperator::conditional_shift(half_width, -1, 0);
    let plus = LatticeOperator::conditional_shift(half_width, 0, 1);
    let coin1 = LatticeOperator::coin(c1, half_width);
    let coin2 = LatticeOperator::coin(c2, half_width);
    &(&(&plus * &coin2) * &minus) * &coin1
}

/// Dense single-step operator of any walk kind.
pub fn walk_step_operator(spec: &WalkSpec) -> Result<LatticeOperator> {
    let l = spec.half_width;
    let coin1 = LatticeOperator::coin_table(&spec.coin1, l)?;
    match spec.kind {
        WalkKind::Dtqw => Ok(&LatticeOperator::conditional_shift(l, -1, 1) * &coin1),
        WalkKind::ElectricDtqw => Ok(&(&LatticeOperator::electric_phase(spec.electric_phase, l)
            * &LatticeOperator::conditional_shift(l, -1, 1))
            * &coin1),
        WalkKind::Ssqw | WalkKind::Generalized => {
            let table2 = spec.coin2.as_ref().ok_or_else(|| {
                crate::Error::Config(format!("{} walk needs a second coin", spec.kind.name()))
            })?;
            let coin2 = LatticeOperator::coin_table(table2, l)?;
            let minus = LatticeOperator::conditional_shift(l, -1, 0);
            let plus = LatticeOperator::conditional_shift(l, 0, 1);
            Ok(&(&(&plus * &coin2) * &minus) * &coin1)
        }
    }
}
