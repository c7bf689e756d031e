//! Closed-form λ computations and the relations between them.
//!
//! `ferrero_lambda` sums over the odd primes of `d` directly. `main_lambda`
//! goes the long way round: λ of the base tower from the vanishing criterion,
//! then Riemann–Hurwitz for `K(√-d)/K` with the ramified places counted by
//! [`crate::splitting::ramified_set`]. For `p = 2` the two must agree.

mod fit;

pub use fit::{fit_growth, IwasawaFit, MIN_FIT_POINTS};

use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, is_squarefree, ord2_u64};
use crate::error::{Error, Result};
use crate::splitting::{check_fermat_base, ramified_set, two_inert_in_k, Base, Level, FERMAT_BASES};

/// `χ(G, P_L)` for `L = K(√-d)` over a Fermat base, from `|H¹| = 1`,
/// `|H²| = 2`. Not computable here; taken as given.
pub const CHI_P_L: i64 = 1;

/// Bases whose class number is odd (external input).
pub const ODD_CLASS_NUMBER_BASES: [u64; 5] = FERMAT_BASES;

pub const ASSUME_MU_ZERO: &str = "mu = 0";
pub const ASSUME_CHI_P_L: &str = "chi(G, P_L) = 1 from |H^1(G, P_L)| = 1, |H^2(G, P_L)| = 2 (not computed)";
pub const ASSUME_ODD_CLASS_NUMBER: &str = "base field has odd class number";
pub const ASSUME_PLUS_PART: &str = "plus-part 2-trivial: h(Q_n) odd at every level used";
pub const ASSUME_UNIT_INDEX: &str = "Hasse unit index Q in {1, 2} not computed; lambda read from first differences";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FerreroFormula,
    MainTheorem,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaResult {
    pub d: u64,
    pub base: Base,
    pub lambda: i64,
    /// `(q, contribution)` per odd prime of `d`; empty for the oracle.
    pub breakdown: Vec<(u64, u64)>,
    pub method: Method,
    pub assumptions: Vec<String>,
    /// `(n, ord₂ h⁻_n)` for the oracle; empty for formulas.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub levels: Vec<(u32, i64)>,
}

/// `(λ, μ, ν)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IwasawaInvariants {
    pub lambda: u64,
    pub mu: u64,
    pub nu: i64,
}

pub(crate) fn check_d(d: u64) -> Result<()> {
    if d <= 2 {
        return Err(Error::DTooSmall(d));
    }
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    Ok(())
}

/// `λ₂(Q(√-d)) = -1 + Σ_{q | d odd} 2^{ord₂(q²-1) - 3}`.
pub fn ferrero_lambda(d: u64) -> Result<LambdaResult> {
    check_d(d)?;
    let breakdown: Vec<(u64, u64)> = crate::arith::factorize(d)
        .into_iter()
        .map(|(q, _)| q)
        .filter(|&q| q != 2)
        .map(|q| (q, 1u64 << (ord2_u64(q - 1) + ord2_u64(q + 1) - 3)))
        .collect();
    let lambda = breakdown.iter().map(|b| b.1 as i64).sum::<i64>() - 1;
    Ok(LambdaResult {
        d,
        base: Base::Rationals,
        lambda,
        breakdown,
        method: Method::FerreroFormula,
        assumptions: vec![],
        levels: vec![],
    })
}

/// `λ₂(k(√-d)) = -1 + |S|` for `k` the degree-`p` real subfield of
/// `Q(ζ_{2p²})`, via the vanishing criterion and Riemann–Hurwitz.
pub fn main_lambda(d: u64, p: u64) -> Result<LambdaResult> {
    check_fermat_base(p)?;
    check_d(d)?;
    let s = ramified_set(d, p, Level::Infinity)?;
    let one_prime_above_2 = two_inert_in_k(p)?;
    let two_divides_h = !ODD_CLASS_NUMBER_BASES.contains(&p);
    let base = vanishing_criterion(one_prime_above_2, two_divides_h).ok_or(Error::UnsupportedBase(p))?;
    let lambda = riemann_hurwitz(&RHInput {
        p: 2,
        lambda_k: base.lambda,
        chi_p: CHI_P_L,
        ram: vec![2; s.total as usize],
    })?;
    Ok(LambdaResult {
        d,
        base: s.base,
        lambda,
        breakdown: s.entries,
        method: Method::MainTheorem,
        assumptions: vec![
            ASSUME_MU_ZERO.into(),
            ASSUME_CHI_P_L.into(),
            ASSUME_ODD_CLASS_NUMBER.into(),
        ],
        levels: vec![],
    })
}

/// `λ⁻ = δ - τ - 1 + dim₂ A* + s_n` with `δ, τ ∈ {0, 1}`.
pub fn kida_general(delta: u8, tau: u8, dim2_narrow: u64, s_n: u64) -> Result<i64> {
    if delta > 1 || tau > 1 {
        return Err(Error::InvalidArgument(format!(
            "delta and tau must be 0 or 1, got {delta} and {tau}"
        )));
    }
    Ok(delta as i64 - tau as i64 - 1 + dim2_narrow as i64 + s_n as i64)
}

/// Inputs of the Riemann–Hurwitz relation for a degree-`p` extension `L/K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RHInput {
    pub p: u64,
    pub lambda_k: u64,
    pub chi_p: i64,
    /// Ramification indices of finite places not above `p`.
    pub ram: Vec<u64>,
}

/// `λ_L = p λ_K - (p-1) χ(G, P_L) + Σ (e(w) - 1)`, assuming `μ_K = 0`.
pub fn riemann_hurwitz(input: &RHInput) -> Result<i64> {
    let p = input.p;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(&e) = input.ram.iter().find(|&&e| e != 1 && e != p) {
        return Err(Error::InvalidRamification { e, p });
    }
    let p = p as i64;
    let ramified: i64 = input.ram.iter().map(|&e| e as i64 - 1).sum();
    Ok(p * input.lambda_k as i64 - (p - 1) * input.chi_p + ramified)
}

/// `(0, 0, 0)` when exactly one prime lies above `p` and `p ∤ h`.
pub fn vanishing_criterion(one_prime_above_p: bool, p_divides_class_number: bool) -> Option<IwasawaInvariants> {
    (one_prime_above_p && !p_divides_class_number).then_some(IwasawaInvariants { lambda: 0, mu: 0, nu: 0 })
}

/// One member `Z_p^a ⊕ (Z_pG)^b ⊕ (I_pG)^c` of the decomposition family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub lambda_l: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFamily {
    pub p: u64,
    pub lambda_k: u64,
    pub chi_p: i64,
    pub s: u64,
    pub a_min: u64,
    pub a_max: u64,
    pub members: Vec<Decomposition>,
    pub lambda_l: i64,
    /// The same `λ_L` through [`riemann_hurwitz`] with `s` places of index `p`.
    pub riemann_hurwitz: i64,
}

/// Every `a` with `max(0, χ - s) <= a <= λ_K`, with `b = λ_K - a` and
/// `c = s - χ + a`.
pub fn decomposition_solve(p: u64, lambda_k: u64, chi_p: i64, s: u64) -> Result<DecompositionFamily> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let empty = Error::EmptyDecomposition { lambda_k, chi: chi_p, s };
    let a_min = (chi_p - s as i64).max(0);
    if a_min > lambda_k as i64 {
        return Err(empty);
    }
    let a_min = a_min as u64;
    let members: Vec<Decomposition> = (a_min..=lambda_k)
        .map(|a| {
            let b = lambda_k - a;
            let c = (s as i64 - chi_p + a as i64) as u64;
            let lambda_l = (a + p * b + (p - 1) * c) as i64;
            Decomposition { a, b, c, lambda_l }
        })
        .collect();
    let lambda_l = members[0].lambda_l;
    debug_assert!(members.iter().all(|m| m.lambda_l == lambda_l));
    let rh = riemann_hurwitz(&RHInput { p, lambda_k, chi_p, ram: vec![p; s as usize] })?;
    Ok(DecompositionFamily {
        p,
        lambda_k,
        chi_p,
        s,
        a_min,
        a_max: lambda_k,
        members,
        lambda_l,
        riemann_hurwitz: rh,
    })
}

/// The two routes to `λ₂(Q(√-d))` agree.
pub fn consistency_check(d: u64) -> Result<bool> {
    Ok(ferrero_lambda(d)?.lambda == main_lambda(d, 2)?.lambda)
}
