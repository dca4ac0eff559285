/// Position distribution `P(x)` over a contiguous run of sites.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    lattice_min: i64,
    probs: Vec<f64>,
}

impl Distribution {
    pub fn new(lattice_min: i64, probs: Vec<f64>) -> Self {
        Distribution { lattice_min, probs }
    }

    pub fn lattice_min(&self) -> i64 {
        self.lattice_min
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    /// `P(x)`, zero outside the lattice.
    pub fn at(&self, x: i64) -> f64 {
        usize::try_from(x - self.lattice_min)
            .ok()
            .and_then(|i| self.probs.get(i).copied())
            .unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        (self.lattice_min..).zip(self.probs.iter().copied())
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(x, p)| x as f64 * p).sum()
    }

    pub fn variance(&self) -> f64 {
        let m = self.mean();
        self.iter().map(|(x, p)| (x as f64 - m).powi(2) * p).sum()
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }
}

/// `(mean, variance)` of `P` over `x`.
pub fn moments(p: &Distribution) -> (f64, f64) {
    (p.mean(), p.variance())
}
