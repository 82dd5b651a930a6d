use std::fmt;
use std::str::FromStr;

use crate::scheme::{complete_scheme, validate, wreath, AssociationScheme};
use crate::linalg::ExactMatrix;

use super::WreathError;

/// Factor orders `(n_1, ..., n_d)` of `K_{n_1} wr K_{n_2} wr ... wr K_{n_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathParams {
    factors: Vec<usize>,
}

impl WreathParams {
    /// Requires at least one factor and every factor `>= 2`.
    pub fn new(factors: Vec<usize>) -> Result<Self, WreathError> {
        if factors.is_empty() {
            return Err(WreathError::NoFactors);
        }
        if let Some((index, &value)) = factors.iter().enumerate().find(|(_, &n)| n < 2) {
            return Err(WreathError::FactorTooSmall { index, value });
        }
        Ok(WreathParams { factors })
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// Number of classes `d`.
    pub fn classes(&self) -> usize {
        self.factors.len()
    }

    /// `v = n_1 n_2 ... n_d`.
    pub fn order(&self) -> usize {
        self.factors.iter().product()
    }

    /// `k_0 = 1`, `k_i = (k_0 + ... + k_{i-1})(n_i - 1)`.
    pub fn valencies(&self) -> Vec<u64> {
        let mut ks = vec![1u64];
        let mut total = 1u64;
        for &n in &self.factors {
            let k = total * (n as u64 - 1);
            ks.push(k);
            total += k;
        }
        ks
    }

    /// Number `b` of factors equal to 2.
    pub fn twos(&self) -> usize {
        self.factors.iter().filter(|&&n| n == 2).count()
    }

    /// `d(d+1)/2 - b`, the number of one-dimensional summands of `T(x)`.
    pub fn central_count(&self) -> usize {
        let d = self.classes();
        d * (d + 1) / 2 - self.twos()
    }

    /// `(d+1)^2 + d(d+1)/2 - b`.
    pub fn terwilliger_dim(&self) -> usize {
        let d = self.classes();
        (d + 1) * (d + 1) + self.central_count()
    }

    /// `1 + d(d+1)/2 - b`: one central idempotent per simple summand.
    pub fn center_dim(&self) -> usize {
        1 + self.central_count()
    }

    /// Recovers the factors from valencies `k_0 = 1, k_1, ..., k_d` via
    /// `n_i = k_i / (k_0 + ... + k_{i-1}) + 1`; `None` if some division is inexact.
    pub fn from_valencies(valencies: &[u64]) -> Option<WreathParams> {
        if valencies.len() < 2 || valencies[0] != 1 {
            return None;
        }
        let mut total = 1u64;
        let mut factors = Vec::with_capacity(valencies.len() - 1);
        for &k in &valencies[1..] {
            if k == 0 || k % total != 0 {
                return None;
            }
            factors.push((k / total + 1) as usize);
            total += k;
        }
        WreathParams::new(factors).ok()
    }

    /// The parameters without the last factor, if any remain.
    pub fn without_last(&self) -> Option<WreathParams> {
        (self.factors.len() > 1)
            .then(|| WreathParams { factors: self.factors[..self.factors.len() - 1].to_vec() })
    }
}

impl fmt::Display for WreathParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for WreathParams {
    type Err = WreathError;

    /// Parses a comma-separated factor list such as `2,3,4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| WreathError::BadFactor(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        WreathParams::new(factors)
    }
}

/// `K_{n_1} wr ... wr K_{n_d}`, folded left to right.
pub fn build(params: &WreathParams) -> AssociationScheme {
    let mut factors = params.factors.iter();
    let first = *factors.next().expect("at least one factor");
    let start = complete_scheme(first).expect("factor >= 2");
    factors.fold(start, |acc, &n| wreath(&acc, &complete_scheme(n).expect("factor >= 2")))
}

/// The trivial one-point scheme, the left unit of the wreath product.
pub(crate) fn trivial_scheme() -> AssociationScheme {
    validate(vec![ExactMatrix::identity(1)]).expect("I_1 is a scheme")
}
