//! Reference constructions built straight from the definitions, sharing no
//! code with the library beyond the state and operator containers.
#![allow(dead_code)]

use ndarray::Array2;
use qwalk_core::c64;
use qwalk_core::optics::LatticeOperator;
use qwalk_core::walk::{CoinParams, WalkerState};
use qwalk_core::Mat2;
use rand::Rng;
use rand_distr::StandardNormal;

pub const I: c64 = c64::new(0.0, 1.0);

pub fn dim(l: usize) -> usize {
    2 * (2 * l + 1)
}

pub fn idx(l: usize, coin: usize, x: i64) -> usize {
    coin * (2 * l + 1) + (x + l as i64) as usize
}

fn op(l: usize, m: Array2<c64>) -> LatticeOperator {
    LatticeOperator::from_matrix(l, m).unwrap()
}

/// `Σ_x |c⟩⟨c| ⊗ |x+d_c⟩⟨x|`, dropping moves that leave `[-L, L]`.
fn shift(l: usize, d: [i64; 2]) -> LatticeOperator {
    let n = dim(l);
    let li = l as i64;
    let mut m = Array2::zeros((n, n));
    for c in 0..2 {
        for x in -li..=li {
            let y = x + d[c];
            if (-li..=li).contains(&y) {
                m[[idx(l, c, y), idx(l, c, x)]] = c64::new(1.0, 0.0);
            }
        }
    }
    op(l, m)
}

pub fn shift_full(l: usize) -> LatticeOperator {
    shift(l, [-1, 1])
}

pub fn shift_minus(l: usize) -> LatticeOperator {
    shift(l, [-1, 0])
}

pub fn shift_plus(l: usize) -> LatticeOperator {
    shift(l, [0, 1])
}

pub fn site_coins(l: usize, mut f: impl FnMut(i64) -> [[c64; 2]; 2]) -> LatticeOperator {
    let n = dim(l);
    let li = l as i64;
    let mut m = Array2::zeros((n, n));
    for x in -li..=li {
        let u = f(x);
        for r in 0..2 {
            for c in 0..2 {
                m[[idx(l, r, x), idx(l, c, x)]] = u[r][c];
            }
        }
    }
    op(l, m)
}

pub fn coin(l: usize, u: [[c64; 2]; 2]) -> LatticeOperator {
    site_coins(l, |_| u)
}

pub fn field(l: usize, phi: f64) -> LatticeOperator {
    site_coins(l, |x| {
        let p = c64::from_polar(1.0, phi * x as f64);
        [[p, c64::new(0.0, 0.0)], [c64::new(0.0, 0.0), p]]
    })
}

pub fn mul(a: &LatticeOperator, b: &LatticeOperator) -> LatticeOperator {
    op(a.half_width(), a.matrix().dot(b.matrix()))
}

pub fn adjoint(a: &LatticeOperator) -> LatticeOperator {
    op(a.half_width(), a.matrix().t().mapv(|z| z.conj()))
}

pub fn mat_mul(a: [[c64; 2]; 2], b: [[c64; 2]; 2]) -> [[c64; 2]; 2] {
    let mut out = [[c64::new(0.0, 0.0); 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    out
}

/// Taylor series with scaling and squaring.
pub fn expm(a: [[c64; 2]; 2]) -> [[c64; 2]; 2] {
    let norm: f64 = a.iter().flatten().map(|z| z.norm()).sum();
    let mut k = 0;
    while norm / 2f64.powi(k) > 0.5 {
        k += 1;
    }
    let s = 2f64.powi(k);
    let a = a.map(|row| row.map(|z| z / s));
    let one = c64::new(1.0, 0.0);
    let zero = c64::new(0.0, 0.0);
    let mut sum = [[one, zero], [zero, one]];
    let mut term = sum;
    for n in 1..30 {
        term = mat_mul(term, a).map(|row| row.map(|z| z / n as f64));
        for r in 0..2 {
            for c in 0..2 {
                sum[r][c] += term[r][c];
            }
        }
    }
    for _ in 0..k {
        sum = mat_mul(sum, sum);
    }
    sum
}

pub fn sigma(k: usize) -> [[c64; 2]; 2] {
    let o = c64::new(0.0, 0.0);
    let one = c64::new(1.0, 0.0);
    match k {
        1 => [[o, one], [one, o]],
        2 => [[o, -I], [I, o]],
        3 => [[one, o], [o, -one]],
        _ => unreachable!(),
    }
}

/// `e^{i a σ_k}`.
pub fn exp_sigma(k: usize, a: f64) -> [[c64; 2]; 2] {
    expm(sigma(k).map(|row| row.map(|z| z * I * a)))
}

/// `e^{iχ} e^{iξσ₂} e^{iησ₃} e^{iθσ₂}` from exponentials.
pub fn u2(p: &CoinParams) -> [[c64; 2]; 2] {
    let m = mat_mul(
        mat_mul(exp_sigma(2, p.xi), exp_sigma(3, p.eta)),
        exp_sigma(2, p.theta),
    );
    m.map(|row| row.map(|z| z * c64::from_polar(1.0, p.chi)))
}

/// `e^{-iθσ₁}`.
pub fn rotation_coin(theta: f64) -> [[c64; 2]; 2] {
    exp_sigma(1, -theta)
}

pub fn rows(m: &Mat2) -> [[c64; 2]; 2] {
    m.0
}

pub fn to_mat2(m: [[c64; 2]; 2]) -> Mat2 {
    Mat2(m)
}

pub fn max_diff(a: [[c64; 2]; 2], b: [[c64; 2]; 2]) -> f64 {
    (0..4)
        .map(|i| (a[i / 2][i % 2] - b[i / 2][i % 2]).norm())
        .fold(0.0, f64::max)
}

/// Haar SU(2) from a normalized Gaussian quaternion.
pub fn random_su2<R: Rng>(rng: &mut R) -> Mat2 {
    let q: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let a = c64::new(q[0], q[1]) / n;
    let b = c64::new(q[2], q[3]) / n;
    Mat2([[a, -b.conj()], [b, a.conj()]])
}

/// Random U(2): SU(2) times a random phase.
pub fn random_u2<R: Rng>(rng: &mut R) -> Mat2 {
    let phase = c64::from_polar(1.0, rng.gen_range(-3.0..3.0));
    let m = random_su2(rng);
    Mat2(m.0.map(|row| row.map(|z| z * phase)))
}

pub fn random_params<R: Rng>(rng: &mut R) -> CoinParams {
    let mut a = || rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
    CoinParams::new(a(), a(), a(), a())
}

pub fn random_state<R: Rng>(rng: &mut R, l: usize, support: i64) -> WalkerState {
    let li = l as i64;
    let mut amps: Vec<[c64; 2]> = (-li..=li)
        .map(|x| {
            if x.abs() <= support {
                std::array::from_fn(|_| {
                    c64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                })
            } else {
                [c64::new(0.0, 0.0); 2]
            }
        })
        .collect();
    let n = amps
        .iter()
        .flatten()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt();
    for a in &mut amps {
        a[0] /= n;
        a[1] /= n;
    }
    WalkerState::from_amplitudes(-li, amps)
}

/// Dense matrix-vector product on the state's amplitudes.
pub fn apply(u: &LatticeOperator, s: &WalkerState) -> WalkerState {
    let l = u.half_width();
    let li = l as i64;
    let n = dim(l);
    let mut v = vec![c64::new(0.0, 0.0); n];
    for (i, a) in s.amplitudes().iter().enumerate() {
        v[i] = a[0];
        v[2 * l + 1 + i] = a[1];
    }
    let m = u.matrix();
    let out: Vec<c64> = (0..n)
        .map(|r| (0..n).map(|c| m[[r, c]] * v[c]).sum())
        .collect();
    let amps = (0..2 * l + 1)
        .map(|i| [out[i], out[2 * l + 1 + i]])
        .collect();
    WalkerState::from_amplitudes(-li, amps)
}

pub fn probabilities(s: &WalkerState) -> Vec<f64> {
    s.amplitudes()
        .iter()
        .map(|a| a[0].norm_sqr() + a[1].norm_sqr())
        .collect()
}

pub fn sigma_of(s: &WalkerState) -> f64 {
    let p = probabilities(s);
    let x0 = s.lattice_min();
    let mean: f64 = p
        .iter()
        .enumerate()
        .map(|(i, q)| (x0 + i as i64) as f64 * q)
        .sum();
    let var: f64 = p
        .iter()
        .enumerate()
        .map(|(i, q)| ((x0 + i as i64) as f64 - mean).powi(2) * q)
        .sum();
    var.sqrt()
}
