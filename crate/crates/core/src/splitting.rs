//! How odd rational primes split in the layers of the cyclotomic
//! Z₂-extension of `Q`, and of `k·Q_∞` where `k` is the degree-`p` real
//! subfield of `Q(ζ_{p²})` for a Fermat prime `p`.
//!
//! Everything is read off the Frobenius in an abelian Galois group: `Q_n` is
//! the real subfield of `Q(ζ_{2^{n+2}})`, so `Gal(Q_n/Q) ≅ (Z/2^{n+2})^×/{±1}`
//! and the residue degree of `q` is the order of `q` there.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, is_squarefree, lcm, multiplicative_order, ord2_u64, pow_mod};
use crate::error::{Error, Result};

/// Fermat primes accepted as bases of the generalized tower. These are the
/// ones for which the base field is known to have odd class number.
pub const FERMAT_BASES: [u64; 5] = [2, 3, 5, 17, 257];

/// Every known Fermat prime.
pub const FERMAT_PRIMES: [u64; 5] = [3, 5, 17, 257, 65537];

/// Largest level handled; `2^{n+2}` must fit in a machine word.
pub const MAX_LEVEL: u32 = 61;

/// Ground field of the tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Base {
    Rationals,
    Fermat { p: u64 },
}

impl Base {
    /// `[k : Q]`: 1 over `Q`, `p` for a Fermat base (for `p = 2`, `k = Q(√2)`).
    pub fn degree(self) -> u64 {
        match self {
            Base::Rationals => 1,
            Base::Fermat { p } => p,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Rationals => write!(f, "rationals"),
            Base::Fermat { p } => write!(f, "fermat({p})"),
        }
    }
}

/// Decomposition `(g, f, e)` of `q` at level `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceSplittingReport {
    pub q: u64,
    pub n: u32,
    pub g: u64,
    pub f: u64,
    pub e: u64,
    pub base: Base,
}

impl PlaceSplittingReport {
    /// Degree of the level field over `Q`.
    pub fn degree(&self) -> u64 {
        self.e * self.f * self.g
    }
}

/// A level of the tower, finite or the whole `Z₂`-extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Finite(u32),
    Infinity,
}

/// Odd primes of `d` with the number of places of `K` above each. These are
/// the places ramified in `K(√-d)/K` away from 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamifiedSet {
    pub d: u64,
    pub base: Base,
    pub level: Level,
    pub entries: Vec<(u64, u64)>,
    pub total: u64,
}

fn check_odd_prime(q: u64) -> Result<()> {
    if q == 2 {
        return Err(Error::NotOddPrime(q));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(())
}

fn check_level(n: u32, bound: u32) -> Result<()> {
    if n > bound {
        return Err(Error::LevelBound { n, bound });
    }
    Ok(())
}

pub(crate) fn check_fermat_base(p: u64) -> Result<()> {
    if FERMAT_BASES.contains(&p) {
        Ok(())
    } else if FERMAT_PRIMES.contains(&p) {
        Err(Error::UnsupportedBase(p))
    } else {
        Err(Error::NotFermatPrime(p))
    }
}

/// Order of `q` in `(Z/2^{n+2})^× / {±1}`, a cyclic group of order `2^n`.
#[allow(non_snake_case)]
pub fn residue_degree_in_Qn(q: u64, n: u32) -> Result<u64> {
    check_odd_prime(q)?;
    check_level(n, MAX_LEVEL)?;
    let modulus = 1u64 << (n + 2);
    let mut x = q % modulus;
    let mut f = 1u64;
    // every element has 2-power order, so square until we land on ±1
    while x != 1 && x != modulus - 1 {
        x = ((x as u128 * x as u128) % modulus as u128) as u64;
        f *= 2;
    }
    Ok(f)
}

/// `(g, f, e)` for `q` in `Q_n`.
#[allow(non_snake_case)]
pub fn splitting_in_Qn(q: u64, n: u32) -> Result<PlaceSplittingReport> {
    let f = residue_degree_in_Qn(q, n)?;
    Ok(PlaceSplittingReport { q, n, g: (1u64 << n) / f, f, e: 1, base: Base::Rationals })
}

/// `2^{ord₂(q²-1) - 3}`, the number of primes of `Q_∞` above `q`.
#[allow(non_snake_case)]
pub fn primes_above_in_Qinf(q: u64) -> Result<u64> {
    check_odd_prime(q)?;
    Ok(1u64 << stable_exponent(q))
}

/// `ord₂(q²-1) - 3`, computed without squaring `q`.
fn stable_exponent(q: u64) -> u32 {
    ord2_u64(q - 1) + ord2_u64(q + 1) - 3
}

/// Order of `q` in the quotient of order `p` of `(Z/p²)^×`: `p` when
/// `q^{p-1} ≢ 1 (mod p²)`, else 1.
fn order_in_degree_p_quotient(q: u64, p: u64) -> u64 {
    let p2 = p * p;
    if pow_mod(q % p2, p - 1, p2) == 1 {
        1
    } else {
        p
    }
}

/// `(g, f, e)` for `q` in `k·Q_n`. For `p = 2` this is `Q_{n+1}`.
pub fn primes_above_in_fermat_tower(q: u64, p: u64, n: u32) -> Result<PlaceSplittingReport> {
    check_fermat_base(p)?;
    check_odd_prime(q)?;
    if q == p {
        return Err(Error::InvalidArgument(format!("q = {q} is ramified in the base field")));
    }
    let base = Base::Fermat { p };
    if p == 2 {
        check_level(n, MAX_LEVEL - 1)?;
        let f = residue_degree_in_Qn(q, n + 1)?;
        return Ok(PlaceSplittingReport { q, n, g: (2u64 << n) / f, f, e: 1, base });
    }
    let f_n = residue_degree_in_Qn(q, n)?;
    let f = lcm(order_in_degree_p_quotient(q, p), f_n);
    Ok(PlaceSplittingReport { q, n, g: (p << n) / f, f, e: 1, base })
}

/// Number of primes of `k·Q_∞` above `q`.
pub fn stable_primes_above_in_fermat_tower(q: u64, p: u64) -> Result<u64> {
    check_fermat_base(p)?;
    check_odd_prime(q)?;
    if q == p {
        return Err(Error::InvalidArgument(format!("q = {q} is ramified in the base field")));
    }
    if p == 2 {
        return primes_above_in_Qinf(q);
    }
    Ok(p / order_in_degree_p_quotient(q, p) << stable_exponent(q))
}

/// Places of `K = k_n` (or `k_∞`) above the odd primes of `d`.
pub fn ramified_set(d: u64, p: u64, level: Level) -> Result<RamifiedSet> {
    check_fermat_base(p)?;
    if d <= 2 {
        return Err(Error::DTooSmall(d));
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let g = gcd(d, p);
    if g > 2 {
        return Err(Error::GcdCondition { d, p, gcd: g });
    }
    let entries = factorize(d)
        .into_iter()
        .map(|(q, _)| q)
        .filter(|&q| q != 2)
        .map(|q| {
            let count = match level {
                Level::Finite(n) => primes_above_in_fermat_tower(q, p, n)?.g,
                Level::Infinity => stable_primes_above_in_fermat_tower(q, p)?,
            };
            Ok((q, count))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = entries.iter().map(|e| e.1).sum();
    Ok(RamifiedSet { d, base: Base::Fermat { p }, level, entries, total })
}

/// `F_j = 2^{2^j} + 1`.
pub fn fermat_number(j: u32) -> BigInt {
    (BigInt::one() << (1usize << j)) + 1
}

/// `F_j - 2 = F_0 F_1 ⋯ F_{j-1}`.
pub fn fermat_identity_check(j: u32) -> Result<bool> {
    if j == 0 {
        return Err(Error::InvalidArgument("fermat identity needs j >= 1".into()));
    }
    let product: BigInt = (0..j).map(fermat_number).product();
    Ok(fermat_number(j) - 2 == product)
}

/// Whether 2 is inert in the degree-`p` subfield of `Q(ζ_{p²})`, i.e.
/// `p | ord_{p²}(2)`. For `p = 2` the base is `Q(√2)`, where 2 ramifies but
/// there is still exactly one prime above it, so the answer is `true`.
pub fn two_inert_in_k(p: u64) -> Result<bool> {
    if p == 2 {
        return Ok(true);
    }
    if !FERMAT_PRIMES.contains(&p) {
        return Err(Error::NotFermatPrime(p));
    }
    Ok(multiplicative_order(2, p * p)? % p == 0)
}

/// Number of real places of the level-`n` field: `[k_n : Q]`.
pub fn t_infinity(n: u32, base_degree: u64) -> u64 {
    base_degree << n
}

/// `χ(Gal, O^×) = t_∞ - 1` for a CM quadratic extension of a totally real
/// field with `t_∞` real places.
pub fn unit_euler_char(t_inf: u64) -> i64 {
    t_inf as i64 - 1
}
