//! Exact fitting of `e_n = λ n + μ p^n + ν` to a sequence of exponents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Points a fit must explain: three unknowns plus one confirmation.
pub const MIN_FIT_POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IwasawaFit {
    pub p: u64,
    pub lambda: i64,
    pub mu: i64,
    pub nu: i64,
    /// First index from which the formula holds.
    pub n0: usize,
    pub sequence: Vec<i64>,
}

impl IwasawaFit {
    /// `λ n + μ p^n + ν`.
    pub fn predict(&self, n: usize) -> BigInt {
        model(self.p, self.lambda.into(), self.mu.into(), self.nu.into(), n)
    }
}

fn model(p: u64, lambda: BigInt, mu: BigInt, nu: BigInt, n: usize) -> BigInt {
    lambda * n + mu * BigInt::from(p).pow(n as u32) + nu
}

/// The fit with the smallest `n0` such that `e_n = λ n + μ p^n + ν` for every
/// `n >= n0`, with at least [`MIN_FIT_POINTS`] points in the tail and
/// `λ, μ >= 0`.
pub fn fit_growth(p: u64, e: &[i64]) -> Result<IwasawaFit> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if e.len() < MIN_FIT_POINTS {
        return Err(Error::TooFewPoints(e.len()));
    }
    let seq: Vec<BigInt> = e.iter().map(|&x| BigInt::from(x)).collect();
    let pb = BigInt::from(p);
    for n0 in 0..=e.len() - MIN_FIT_POINTS {
        // Δ_n = λ + μ p^n (p-1), Δ_{n+1} - Δ_n = μ p^n (p-1)²
        let d0 = &seq[n0 + 1] - &seq[n0];
        let d1 = &seq[n0 + 2] - &seq[n0 + 1];
        let scale = pb.pow(n0 as u32) * (&pb - 1u32);
        let (mu, rem) = (&d1 - &d0).div_rem(&(&scale * (&pb - 1u32)));
        if !rem.is_zero() || mu.is_negative() {
            continue;
        }
        let lambda = &d0 - &mu * &scale;
        if lambda.is_negative() {
            continue;
        }
        let nu = &seq[n0] - &lambda * n0 - &mu * pb.pow(n0 as u32);
        let holds = (n0..seq.len())
            .all(|n| model(p, lambda.clone(), mu.clone(), nu.clone(), n) == seq[n]);
        if !holds {
            continue;
        }
        let (Some(lambda), Some(mu), Some(nu)) = (lambda.to_i64(), mu.to_i64(), nu.to_i64()) else {
            continue;
        };
        return Ok(IwasawaFit { p, lambda, mu, nu, n0, sequence: e.to_vec() });
    }
    Err(Error::NoFit)
}
