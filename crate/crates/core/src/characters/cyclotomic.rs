//! Exact arithmetic in `Q(ζ_m)` on the power basis `1, ζ, …, ζ^{φ(m)-1}`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{divisors, euler_phi};
use crate::error::{Error, Result};

/// Coefficients of Φ_m, constant term first. Monic of degree φ(m).
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return Arc::clone(p);
    }
    assert!(m >= 1);
    // Φ_m = (x^m - 1) / ∏_{d | m, d < m} Φ_d
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    let poly = Arc::new(num);
    cache.lock().unwrap().insert(m, Arc::clone(&poly));
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &di) in den.iter().enumerate() {
                rem[k + i] -= c * di;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of the `m`-th cyclotomic field, canonical at its level.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    level: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(level: u64) -> Self {
        CyclotomicNumber {
            level,
            coeffs: vec![BigRational::zero(); euler_phi(level) as usize],
        }
    }

    pub fn rational(level: u64, value: BigRational) -> Self {
        let mut x = Self::zero(level);
        x.coeffs[0] = value;
        x
    }

    pub fn from_integer(level: u64, value: i64) -> Self {
        Self::rational(level, BigRational::from_integer(value.into()))
    }

    pub fn one(level: u64) -> Self {
        Self::from_integer(level, 1)
    }

    /// `ζ_m^k`.
    pub fn zeta_power(level: u64, k: u64) -> Self {
        let mut sums = vec![BigInt::zero(); level as usize];
        sums[(k % level) as usize] = BigInt::one();
        Self::from_power_sums(level, &sums, &BigInt::one())
    }

    /// `(1/denominator) · Σ_k sums[k] ζ_m^k` for `k` in `0..m`.
    pub fn from_power_sums(level: u64, sums: &[BigInt], denominator: &BigInt) -> Self {
        assert_eq!(sums.len() as u64, level);
        let reduced = reduce_integer_poly(level, sums.to_vec());
        CyclotomicNumber {
            level,
            coeffs: reduced
                .into_iter()
                .map(|c| BigRational::new(c, denominator.clone()))
                .collect(),
        }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, when every non-constant coordinate vanishes.
    pub fn is_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(CyclotomicNumber {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(CyclotomicNumber {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Exact product reduced mod Φ_m. Both operands must share a level.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Ok(CyclotomicNumber {
            level: self.level,
            coeffs: reduce_rational_poly(self.level, prod),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        CyclotomicNumber {
            level: self.level,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The same field element at level `target`, via `ζ_m = ζ_M^{M/m}`.
    pub fn lift(&self, target: u64) -> Result<Self> {
        if target % self.level != 0 {
            return Err(Error::LevelNotDivisible {
                from: self.level,
                to: target,
            });
        }
        if target == self.level {
            return Ok(self.clone());
        }
        let step = (target / self.level) as usize;
        let mut poly = vec![BigRational::zero(); target as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Ok(CyclotomicNumber {
            level: target,
            coeffs: reduce_rational_poly(target, poly),
        })
    }
}

/// Reduce an integer polynomial in ζ_m (any length) to canonical coordinates.
fn reduce_integer_poly(level: u64, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_polynomial(level);
    let deg = phi.len() - 1;
    fold_exponents(level, &mut poly);
    for k in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[k]);
        if c.is_zero() {
            continue;
        }
        for (i, &pi) in phi.iter().enumerate().take(deg) {
            if pi != 0 {
                poly[k - deg + i] -= &c * pi;
            }
        }
    }
    poly.truncate(deg);
    poly.resize(deg, BigInt::zero());
    poly
}

fn reduce_rational_poly(level: u64, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(level);
    let deg = phi.len() - 1;
    fold_exponents(level, &mut poly);
    for k in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[k]);
        if c.is_zero() {
            continue;
        }
        for (i, &pi) in phi.iter().enumerate().take(deg) {
            if pi != 0 {
                poly[k - deg + i] -= &c * BigRational::from_integer(pi.into());
            }
        }
    }
    poly.truncate(deg);
    poly.resize(deg, BigRational::zero());
    poly
}

/// Uses ζ^m = 1 to fold exponents `>= m` back into `0..m`.
fn fold_exponents<T: Zero + Clone + std::ops::AddAssign>(level: u64, poly: &mut Vec<T>) {
    let m = level as usize;
    if poly.len() > m {
        for k in m..poly.len() {
            let c = std::mem::replace(&mut poly[k], T::zero());
            poly[k % m] += c;
        }
        poly.truncate(m);
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})*z{}^{k}", self.level)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
