use std::ops::Mul;

use ndarray::Array2;

use crate::walk::{CoinTable, WalkerState};
use crate::{c64, Error, Mat2, Result};

/// Dense operator on `coin ⊗ position` over the sites `[-L, L]`.
///
/// Basis index of `|c⟩ ⊗ |x⟩` is `c·(2L+1) + (x + L)`. Shifts are truncated:
/// amplitude that would leave the lattice is dropped, so operators are only
/// unitary on states whose edge sites are empty.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeOperator {
    half_width: usize,
    mat: Array2<c64>,
}

impl LatticeOperator {
    pub fn identity(half_width: usize) -> Self {
        let dim = 2 * (2 * half_width + 1);
        LatticeOperator {
            half_width,
            mat: Array2::eye(dim),
        }
    }

    pub fn zeros(half_width: usize) -> Self {
        let dim = 2 * (2 * half_width + 1);
        LatticeOperator {
            half_width,
            mat: Array2::zeros((dim, dim)),
        }
    }

    pub fn from_matrix(half_width: usize, mat: Array2<c64>) -> Result<Self> {
        let dim = 2 * (2 * half_width + 1);
        if mat.dim() != (dim, dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: mat.nrows(),
            });
        }
        Ok(LatticeOperator { half_width, mat })
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn sites(&self) -> usize {
        2 * self.half_width + 1
    }

    pub fn matrix(&self) -> &Array2<c64> {
        &self.mat
    }

    pub(crate) fn matrix_mut(&mut self) -> &mut Array2<c64> {
        &mut self.mat
    }

    pub fn into_matrix(self) -> Array2<c64> {
        self.mat
    }

    /// Basis index of `|coin⟩ ⊗ |x⟩`, or `None` off the lattice.
    pub fn index(&self, coin: usize, x: i64) -> Option<usize> {
        let l = self.half_width as i64;
        (coin < 2 && (-l..=l).contains(&x)).then(|| coin * self.sites() + (x + l) as usize)
    }

    pub fn entry(&self, row: (usize, i64), col: (usize, i64)) -> c64 {
        match (self.index(row.0, row.1), self.index(col.0, col.1)) {
            (Some(r), Some(c)) => self.mat[[r, c]],
            _ => c64::new(0.0, 0.0),
        }
    }

    /// `J ⊗ I`
    pub fn coin(jones: &Mat2, half_width: usize) -> Self {
        Self::site_coins(half_width, |_| *jones)
    }

    /// `Σ_x J(x) ⊗ |x⟩⟨x|`
    pub fn site_coins(half_width: usize, mut jones: impl FnMut(i64) -> Mat2) -> Self {
        let mut op = Self::zeros(half_width);
        let l = half_width as i64;
        for x in -l..=l {
            let j = jones(x);
            for a in 0..2 {
                for b in 0..2 {
                    let (r, c) = (op.index(a, x).unwrap(), op.index(b, x).unwrap());
                    op.mat[[r, c]] = j.get(a, b);
                }
            }
        }
        op
    }

    /// Position-dependent coin from a table covering the lattice.
    pub fn coin_table(table: &CoinTable, half_width: usize) -> Result<Self> {
        let l = half_width as i64;
        table.check_covers(-l, l)?;
        Ok(Self::site_coins(half_width, |x| {
            table.get(x).unwrap().matrix()
        }))
    }

    /// `Σ_x |0⟩⟨0| ⊗ |x+h⟩⟨x| + |1⟩⟨1| ⊗ |x+v⟩⟨x|`, truncated.
    pub fn conditional_shift(half_width: usize, h_offset: i64, v_offset: i64) -> Self {
        let mut op = Self::zeros(half_width);
        let l = half_width as i64;
        for x in -l..=l {
            for (c, off) in [(0, h_offset), (1, v_offset)] {
                if let Some(r) = op.index(c, x + off) {
                    let col = op.index(c, x).unwrap();
                    op.mat[[r, col]] = c64::new(1.0, 0.0);
                }
            }
        }
        op
    }

    /// `e^{iφ_E x̂} ⊗`-style diagonal phase per site.
    pub fn electric_phase(phi_e: f64, half_width: usize) -> Self {
        let phi_e = phi_e.rem_euclid(std::f64::consts::TAU);
        Self::site_coins(half_width, |x| {
            Mat2::IDENTITY.scale(c64::cis(phi_e * x as f64))
        })
    }

    /// `self · rhs`, i.e. `rhs` acts first.
    pub fn then_after(&self, rhs: &LatticeOperator) -> Result<LatticeOperator> {
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: rhs.dim(),
            });
        }
        Ok(LatticeOperator {
            half_width: self.half_width,
            mat: self.mat.dot(&rhs.mat),
        })
    }

    pub fn adjoint(&self) -> Self {
        LatticeOperator {
            half_width: self.half_width,
            mat: self.mat.t().mapv(|z| z.conj()),
        }
    }

    pub fn scale(&self, k: c64) -> Self {
        LatticeOperator {
            half_width: self.half_width,
            mat: self.mat.mapv(|z| z * k),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &LatticeOperator) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .mat
            .iter()
            .zip(other.mat.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Largest deviation of `U†U` from `I` restricted to basis states off the
    /// two edge sites.
    pub fn interior_isometry_error(&self) -> f64 {
        let l = self.half_width as i64;
        let interior: Vec<usize> = (0..2)
            .flat_map(|c| (-l + 1..l).map(move |x| (c, x)))
            .filter_map(|(c, x)| self.index(c, x))
            .collect();
        let mut worst = 0.0_f64;
        for &i in &interior {
            for &j in &interior {
                let g: c64 = self
                    .mat
                    .column(i)
                    .iter()
                    .zip(self.mat.column(j))
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - target).norm());
            }
        }
        worst
    }

    /// Largest `|x − x'|` over non-zero entries `⟨·,x|U|·,x'⟩`.
    pub fn bandwidth(&self) -> usize {
        let n = self.sites();
        let mut band = 0;
        for ((r, c), z) in self.mat.indexed_iter() {
            if z.norm() > 0.0 {
                band = band.max((r % n).abs_diff(c % n));
            }
        }
        band
    }

    pub fn apply(&self, state: &WalkerState) -> Result<WalkerState> {
        let l = self.half_width as i64;
        if state.lattice_min() != -l || state.len() != self.sites() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: 2 * state.len(),
            });
        }
        let n = self.sites();
        let mut v = ndarray::Array1::zeros(self.dim());
        for (i, a) in state.amplitudes().iter().enumerate() {
            v[i] = a[0];
            v[n + i] = a[1];
        }
        let w = self.mat.dot(&v);
        let amps = (0..n).map(|i| [w[i], w[n + i]]).collect();
        Ok(WalkerState::from_amplitudes(-l, amps))
    }
}

impl Mul for &LatticeOperator {
    type Output = LatticeOperator;

    /// Panics on mismatched dimensions; use [`LatticeOperator::then_after`]
    /// for a fallible product.
    fn mul(self, rhs: &LatticeOperator) -> LatticeOperator {
        self.then_after(rhs)
            .expect("lattice operator dimensions differ")
    }
}
