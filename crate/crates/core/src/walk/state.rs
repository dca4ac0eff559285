use std::f64::consts::TAU;

use crate::walk::{CoinTable, Distribution, NORM_TOL};
use crate::{c64, Error, Result};

/// Amplitudes above this magnitude may not be pushed off the lattice edge.
pub const GUARD_TOL: f64 = 1e-12;

const ZERO: [c64; 2] = [c64::new(0.0, 0.0), c64::new(0.0, 0.0)];

/// Coin ⊗ position wavefunction on the sites `lattice_min..lattice_min + len`.
///
/// Each site holds the pair `(ψˡ, ψʳ)`. Operations return new states; the
/// receiver is never modified.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkerState {
    lattice_min: i64,
    amps: Vec<[c64; 2]>,
}

impl WalkerState {
    /// All amplitude on site `x0` with coin vector `coin`, on `[-L, L]`.
    pub fn new(coin: [c64; 2], x0: i64, half_width: usize) -> Result<Self> {
        let norm_sqr = coin[0].norm_sqr() + coin[1].norm_sqr();
        if !norm_sqr.is_finite() || (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm_sqr });
        }
        let l = half_width as i64;
        if x0.abs() >= l {
            return Err(Error::SiteOutsideLattice {
                site: x0,
                half_width,
            });
        }
        let mut amps = vec![ZERO; 2 * half_width + 1];
        amps[(x0 + l) as usize] = coin;
        Ok(WalkerState {
            lattice_min: -l,
            amps,
        })
    }

    /// Wraps raw amplitudes without normalizing them.
    pub fn from_amplitudes(lattice_min: i64, amps: Vec<[c64; 2]>) -> Self {
        WalkerState { lattice_min, amps }
    }

    pub fn lattice_min(&self) -> i64 {
        self.lattice_min
    }

    pub fn lattice_max(&self) -> i64 {
        self.lattice_min + self.amps.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn amplitudes(&self) -> &[[c64; 2]] {
        &self.amps
    }

    pub fn sites(&self) -> impl Iterator<Item = i64> {
        self.lattice_min..=self.lattice_max()
    }

    pub fn amplitude(&self, x: i64) -> Option<[c64; 2]> {
        let idx = usize::try_from(x - self.lattice_min).ok()?;
        self.amps.get(idx).copied()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps
            .iter()
            .map(|a| a[0].norm_sqr() + a[1].norm_sqr())
            .sum()
    }

    /// Fails if either edge site carries more than [`GUARD_TOL`].
    pub fn check_guard(&self) -> Result<()> {
        for (site, amp) in [
            (self.lattice_min, self.amps.first()),
            (self.lattice_max(), self.amps.last()),
        ] {
            if let Some(a) = amp {
                let magnitude = a[0].norm().max(a[1].norm());
                if magnitude > GUARD_TOL {
                    return Err(Error::BoundaryGuard { site, magnitude });
                }
            }
        }
        Ok(())
    }

    /// `S`: ψˡ moves one site left, ψʳ one site right.
    pub fn shift_full(&self) -> Result<Self> {
        self.shifted(-1, 1)
    }

    /// `S₋`: only ψˡ moves left.
    pub fn shift_minus(&self) -> Result<Self> {
        self.shifted(-1, 0)
    }

    /// `S₊`: only ψʳ moves right.
    pub fn shift_plus(&self) -> Result<Self> {
        self.shifted(0, 1)
    }

    fn shifted(&self, left: i64, right: i64) -> Result<Self> {
        let n = self.amps.len() as i64;
        let mut out = vec![ZERO; self.amps.len()];
        for (i, a) in self.amps.iter().enumerate() {
            for (c, offset) in [(0usize, left), (1usize, right)] {
                let j = i as i64 + offset;
                if (0..n).contains(&j) {
                    out[j as usize][c] = a[c];
                } else if a[c].norm() > GUARD_TOL {
                    return Err(Error::BoundaryGuard {
                        site: self.lattice_min + i as i64,
                        magnitude: a[c].norm(),
                    });
                }
            }
        }
        Ok(WalkerState {
            lattice_min: self.lattice_min,
            amps: out,
        })
    }

    /// Applies `table[x]` to the coin pair at every site `x`.
    pub fn apply_coin(&self, table: &CoinTable) -> Result<Self> {
        table.check_covers(self.lattice_min, self.lattice_max())?;
        let offset = (self.lattice_min - table.lattice_min()) as usize;
        let amps = self
            .amps
            .iter()
            .zip(&table.params()[offset..])
            .map(|(a, p)| p.matrix().apply(*a))
            .collect();
        Ok(WalkerState {
            lattice_min: self.lattice_min,
            amps,
        })
    }

    /// Multiplies the pair at site `x` by `e^{iφ_E x}`.
    ///
    /// `φ_E` is reduced mod 2π first, so shifting it by an exactly
    /// representable multiple of 2π leaves the result bit-identical.
    pub fn electric_phase(&self, phi_e: f64) -> Self {
        let phi_e = phi_e.rem_euclid(TAU);
        let amps = self
            .sites()
            .zip(&self.amps)
            .map(|(x, a)| {
                let ph = c64::cis(phi_e * x as f64);
                [a[0] * ph, a[1] * ph]
            })
            .collect();
        WalkerState {
            lattice_min: self.lattice_min,
            amps,
        }
    }

    /// `P(x) = |ψˡ_x|² + |ψʳ_x|²`
    pub fn probability(&self) -> Distribution {
        Distribution::new(
            self.lattice_min,
            self.amps
                .iter()
                .map(|a| a[0].norm_sqr() + a[1].norm_sqr())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::CoinParams;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI};

    fn c(re: f64, im: f64) -> c64 {
        c64::new(re, im)
    }

    fn only_nonzero(s: &WalkerState) -> Vec<(i64, usize, c64)> {
        s.sites()
            .zip(s.amplitudes())
            .flat_map(|(x, a)| (0..2).map(move |k| (x, k, a[k])))
            .filter(|(_, _, z)| z.norm() > 0.0)
            .collect()
    }

    #[test]
    fn basis_states() {
        let s = WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], 0, 8).unwrap();
        assert_eq!(only_nonzero(&s), vec![(0, 0, c(1.0, 0.0))]);
        assert_eq!(s.lattice_min(), -8);
        assert_eq!(s.lattice_max(), 8);

        let s = WalkerState::new([c(0.0, 0.0), c(1.0, 0.0)], 3, 8).unwrap();
        assert_eq!(only_nonzero(&s), vec![(3, 1, c(1.0, 0.0))]);
    }

    #[test]
    fn symmetric_coin_state() {
        let s = WalkerState::new([c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)], 0, 8).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() < 1e-15);
        assert!((s.probability().at(0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn make_state_rejects_bad_input() {
        assert!(matches!(
            WalkerState::new([c(1.0, 0.0), c(1.0, 0.0)], 0, 8),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], 8, 8),
            Err(Error::SiteOutsideLattice { .. })
        ));
        assert!(matches!(
            WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], -9, 8),
            Err(Error::SiteOutsideLattice { .. })
        ));
    }

    #[test]
    fn shift_minus_moves_only_h() {
        let h = WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], 0, 4).unwrap();
        assert_eq!(
            only_nonzero(&h.shift_minus().unwrap()),
            vec![(-1, 0, c(1.0, 0.0))]
        );
        let v = WalkerState::new([c(0.0, 0.0), c(1.0, 0.0)], 0, 4).unwrap();
        assert_eq!(v.shift_minus().unwrap(), v);
    }

    #[test]
    fn shift_plus_moves_only_v() {
        let v = WalkerState::new([c(0.0, 0.0), c(1.0, 0.0)], 0, 4).unwrap();
        assert_eq!(
            only_nonzero(&v.shift_plus().unwrap()),
            vec![(1, 1, c(1.0, 0.0))]
        );
        let h = WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], 0, 4).unwrap();
        assert_eq!(h.shift_plus().unwrap(), h);
    }

    #[test]
    fn shift_off_lattice_is_guard_error() {
        let s = WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], -3, 4).unwrap();
        let s = s.shift_minus().unwrap();
        assert_eq!(s.probability().at(-4), 1.0);
        assert!(matches!(
            s.check_guard(),
            Err(Error::BoundaryGuard { site: -4, .. })
        ));
        assert!(matches!(
            s.shift_minus(),
            Err(Error::BoundaryGuard { site: -4, .. })
        ));
        // The V component at the left edge stays put under S₋ but leaves under S.
        assert!(s.shift_plus().is_ok());
    }

    #[test]
    fn coin_at_single_site() {
        let s = WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], 0, 4).unwrap();
        let table = CoinTable::homogeneous(CoinParams::new(0.0, 0.0, 0.0, FRAC_PI_4), 4);
        let out = s.apply_coin(&table).unwrap();
        let a = out.amplitude(0).unwrap();
        assert!((a[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((a[1] - c(-FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn coin_table_must_cover_lattice() {
        let s = WalkerState::new([c(1.0, 0.0), c(0.0, 0.0)], 0, 4).unwrap();
        let table = CoinTable::homogeneous(CoinParams::default(), 3);
        assert!(matches!(
            s.apply_coin(&table),
            Err(Error::TableMismatch { .. })
        ));
        // A wider table is fine.
        let table = CoinTable::homogeneous(CoinParams::default(), 6);
        assert_eq!(s.apply_coin(&table).unwrap(), s);
    }

    #[test]
    fn electric_phase_values() {
        let s = WalkerState::new([c(0.6, 0.0), c(0.0, 0.8)], 1, 4).unwrap();
        assert_eq!(s.electric_phase(0.0), s);
        let neg = s.electric_phase(PI);
        let a = neg.amplitude(1).unwrap();
        assert!((a[0] + c(0.6, 0.0)).norm() < 1e-15);
        assert!((a[1] + c(0.0, 0.8)).norm() < 1e-15);
        assert_eq!(s.electric_phase(2.0 * PI), s);
    }
}
