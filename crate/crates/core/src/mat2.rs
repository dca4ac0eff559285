//! Dense 2×2 complex matrices.
//!
//! Coins, Jones matrices and Euler factors are all 2×2, so they get a small
//! stack type instead of a general linear-algebra dependency.

use std::ops::{Add, Mul, MulAssign};

use serde::{Deserialize, Serialize};

use crate::c64;

const ZERO: c64 = c64::new(0.0, 0.0);
const ONE: c64 = c64::new(1.0, 0.0);
const I: c64 = c64::new(0.0, 1.0);

/// Row-major 2×2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mat2(pub [[c64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);
    pub const ZERO: Mat2 = Mat2([[ZERO, ZERO], [ZERO, ZERO]]);
    /// σ₁
    pub const PAULI_X: Mat2 = Mat2([[ZERO, ONE], [ONE, ZERO]]);
    /// σ₂
    pub const PAULI_Y: Mat2 = Mat2([[ZERO, c64::new(0.0, -1.0)], [I, ZERO]]);
    /// σ₃
    pub const PAULI_Z: Mat2 = Mat2([[ONE, ZERO], [ZERO, c64::new(-1.0, 0.0)]]);

    pub const fn new(a: c64, b: c64, c: c64, d: c64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn diag(a: c64, d: c64) -> Self {
        Mat2([[a, ZERO], [ZERO, d]])
    }

    /// `e^{iaσ₂} = cos a·I + i sin a·σ₂ = [[cos a, sin a], [−sin a, cos a]]`
    pub fn exp_i_y(a: f64) -> Self {
        let (s, c) = a.sin_cos();
        Mat2::new(c.into(), s.into(), (-s).into(), c.into())
    }

    /// `e^{iaσ₃} = diag(e^{ia}, e^{−ia})`
    pub fn exp_i_z(a: f64) -> Self {
        Mat2::diag(c64::cis(a), c64::cis(-a))
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> c64 {
        self.0[row][col]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn det(&self) -> c64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> c64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn scale(&self, k: c64) -> Self {
        let m = &self.0;
        Mat2::new(m[0][0] * k, m[0][1] * k, m[1][0] * k, m[1][1] * k)
    }

    pub fn apply(&self, v: [c64; 2]) -> [c64; 2] {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }

    /// Largest entrywise deviation of `M†M` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Mat2::IDENTITY)
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Default for Mat2 {
    fn default() -> Self {
        Mat2::IDENTITY
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

impl MulAssign for Mat2 {
    fn mul_assign(&mut self, rhs: Mat2) {
        *self = *self * rhs;
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, rhs: Mat2) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}
