//! An independent route to λ: 2-adic valuations of the relative class numbers
//! of `ℓ_n = Q_n(√-d)` from generalized Bernoulli numbers, and class numbers of
//! the base field from binary quadratic forms.
//!
//! `h⁻_n = Q w ∏ (-B₁(χ)/2)` over the `2^n` odd characters of `ℓ_n`. The unit
//! index `Q ∈ {1, 2}` is left out (taken as 1), which is why λ is read from
//! first differences of `ord₂ h⁻_n` rather than from the values themselves.

mod forms;

pub use forms::{dirichlet_class_number, reduced_forms, roots_of_unity, FormClassGroup};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::{gcd, lcm, ord_p_rational};
use crate::characters::{
    even_two_power_characters, imaginary_quadratic_discriminant, kronecker_character, CyclotomicNumber,
    DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::lambda::{check_d, LambdaResult, Method, ASSUME_MU_ZERO, ASSUME_PLUS_PART, ASSUME_UNIT_INDEX};
use crate::splitting::Base;

/// Highest level `h_minus` computes unless told otherwise.
pub const DEFAULT_LEVEL_BOUND: u32 = 5;

/// Whether the reported `h⁻` is exact or off by the unknown unit index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QAmbiguity {
    Exact,
    PlusMinusOneBit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassNumberReport {
    pub d: u64,
    pub n: u32,
    pub conductor: u64,
    /// Characters of `ℓ_n`, even and odd.
    pub character_count: u64,
    pub odd_character_count: u64,
    pub w: u64,
    /// `w ∏ (-B₁(χ)/2)`, i.e. `h⁻` with `Q = 1`.
    #[serde(serialize_with = "as_string")]
    pub h_minus: BigRational,
    pub ord2: i64,
    pub q_ambiguity: QAmbiguity,
}

fn as_string<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// `B₁(χ) = (1/f) Σ_{a=1}^{f} χ(a) a` for primitive nontrivial χ of conductor `f`.
#[allow(non_snake_case)]
pub fn generalized_bernoulli_B1(chi: &DirichletCharacter) -> Result<CyclotomicNumber> {
    let f = chi.modulus();
    if chi.is_trivial() || !chi.is_primitive() {
        return Err(Error::NotPrimitive { modulus: f, conductor: chi.conductor() });
    }
    let o = chi.order();
    // collect Σ a over each value ζ_o^k before touching the field
    let mut sums = vec![0u128; o as usize];
    for a in 1..f {
        if let Some(k) = chi.value_exponent(a as i64) {
            sums[k as usize] += a as u128;
        }
    }
    let sums: Vec<BigInt> = sums.into_iter().map(BigInt::from).collect();
    Ok(CyclotomicNumber::from_power_sums(o, &sums, &BigInt::from(f)))
}

/// The `2^n` odd characters of `ℓ_n`, primitivized: `χ_D ψ` for `ψ` running
/// over the even characters of conductor dividing `2^{n+2}`.
pub fn odd_characters_of_level(d: u64, n: u32) -> Result<Vec<DirichletCharacter>> {
    check_d(d)?;
    let chi_d = kronecker_character(imaginary_quadratic_discriminant(d)?)?;
    even_two_power_characters(n)?
        .iter()
        .map(|psi| chi_d.mul(psi)?.primitive())
        .collect()
}

/// `w` for `ℓ_n`: 6 when `√-3 ∈ ℓ_n`, else 2.
pub fn roots_of_unity_in_level(d: u64, n: u32) -> u64 {
    if d == 3 || (d == 6 && n >= 1) {
        6
    } else {
        2
    }
}

pub fn h_minus(d: u64, n: u32) -> Result<ClassNumberReport> {
    h_minus_bounded(d, n, DEFAULT_LEVEL_BOUND)
}

/// `ord₂ h⁻_n` and friends, refusing levels above `bound`.
pub fn h_minus_bounded(d: u64, n: u32, bound: u32) -> Result<ClassNumberReport> {
    if n > bound {
        return Err(Error::LevelBound { n, bound });
    }
    let chars = odd_characters_of_level(d, n)?;
    let factors: Vec<CyclotomicNumber> = chars
        .par_iter()
        .map(|chi| {
            let b1 = generalized_bernoulli_B1(chi)?;
            Ok(b1.scale(&BigRational::new(BigInt::from(-1), BigInt::from(2))))
        })
        .collect::<Result<_>>()?;

    // multiply orbit by orbit, smallest conductor first
    let mut order: Vec<usize> = (0..chars.len()).collect();
    order.sort_by_key(|&i| (chars[i].modulus(), chars[i].exponents().to_vec()));
    let mut used = vec![false; chars.len()];
    let mut product = BigRational::one();
    for &i in &order {
        if used[i] {
            continue;
        }
        let chi = &chars[i];
        let o = chi.order();
        let mut orbit_product = CyclotomicNumber::one(o);
        let mut size = 0;
        for k in (1..=o).filter(|&k| gcd(k, o) == 1) {
            let conj = chi.pow(k);
            let Some(j) = (0..chars.len()).find(|&j| !used[j] && chars[j] == conj) else {
                return Err(Error::OrbitNotRational { conductor: chi.modulus() });
            };
            used[j] = true;
            size += 1;
            orbit_product = orbit_product.try_mul(&factors[j])?;
        }
        debug_assert_eq!(size, crate::arith::euler_phi(o));
        match orbit_product.is_rational() {
            Some(r) if r.is_positive() => product *= r,
            _ => return Err(Error::OrbitNotRational { conductor: chi.modulus() }),
        }
    }

    let w = roots_of_unity_in_level(d, n);
    let h = product * BigInt::from(w);
    let ord2 = ord_p_rational(&h, 2)?;
    let mut conductor = chars.iter().fold(1, |acc, c| lcm(acc, c.modulus()));
    if n >= 1 {
        conductor = lcm(conductor, 1 << (n + 2));
    }
    Ok(ClassNumberReport {
        d,
        n,
        conductor,
        character_count: 2 << n,
        odd_character_count: 1 << n,
        w,
        h_minus: h,
        ord2,
        q_ambiguity: if n == 0 { QAmbiguity::Exact } else { QAmbiguity::PlusMinusOneBit },
    })
}

pub fn lambda_from_oracle(d: u64, n_max: u32) -> Result<LambdaResult> {
    lambda_from_oracle_bounded(d, n_max, DEFAULT_LEVEL_BOUND)
}

/// λ as the common value of the last two first differences of `ord₂ h⁻_n`,
/// `n = 1..=n_max`.
pub fn lambda_from_oracle_bounded(d: u64, n_max: u32, bound: u32) -> Result<LambdaResult> {
    check_d(d)?;
    if n_max < 3 {
        return Err(Error::InvalidArgument(format!("n_max must be at least 3, got {n_max}")));
    }
    if n_max > bound {
        return Err(Error::LevelBound { n: n_max, bound });
    }
    let levels: Vec<(u32, i64)> = (1..=n_max)
        .map(|n| Ok((n, h_minus_bounded(d, n, bound)?.ord2)))
        .collect::<Result<_>>()?;
    let diffs: Vec<i64> = levels.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let lambda = stabilized_difference(&diffs)?;
    Ok(LambdaResult {
        d,
        base: Base::Rationals,
        lambda,
        breakdown: vec![],
        method: Method::Oracle,
        assumptions: vec![ASSUME_MU_ZERO.into(), ASSUME_PLUS_PART.into(), ASSUME_UNIT_INDEX.into()],
        levels,
    })
}

/// The last difference if the last two agree (and are nonnegative). Three or
/// more differences whose increments keep at least doubling look like `μ > 0`.
fn stabilized_difference(diffs: &[i64]) -> Result<i64> {
    let k = diffs.len();
    if k >= 2 && diffs[k - 1] == diffs[k - 2] && diffs[k - 1] >= 0 {
        return Ok(diffs[k - 1]);
    }
    if k >= 3 {
        let (a, b) = (diffs[k - 2] - diffs[k - 3], diffs[k - 1] - diffs[k - 2]);
        if a > 0 && b >= 2 * a {
            return Err(Error::MuSignature { diffs: diffs.to_vec() });
        }
    }
    Err(Error::NotStabilized { diffs: diffs.to_vec() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn b1_examples() {
        let b = generalized_bernoulli_B1(&kronecker_character(-4).unwrap()).unwrap();
        assert_eq!(b.is_rational(), Some(rat(-1, 2)));
        let b = generalized_bernoulli_B1(&kronecker_character(-3).unwrap()).unwrap();
        assert_eq!(b.is_rational(), Some(rat(-1, 3)));
        let even = kronecker_character(5).unwrap();
        assert!(generalized_bernoulli_B1(&even).unwrap().is_zero());
        let triv = DirichletCharacter::trivial(5).unwrap();
        assert!(matches!(generalized_bernoulli_B1(&triv), Err(Error::NotPrimitive { .. })));
        let imprimitive = kronecker_character(-4).unwrap().mul(&DirichletCharacter::trivial(3).unwrap()).unwrap();
        assert_eq!(
            generalized_bernoulli_B1(&imprimitive),
            Err(Error::NotPrimitive { modulus: 12, conductor: 4 })
        );
    }

    #[test]
    fn odd_characters() {
        let c = odd_characters_of_level(7, 0).unwrap();
        assert_eq!(c, vec![kronecker_character(-7).unwrap()]);
        let c = odd_characters_of_level(7, 1).unwrap();
        let conductors: Vec<u64> = c.iter().map(|x| x.modulus()).collect();
        assert_eq!(conductors, vec![7, 56]);
        for n in 0..4 {
            let c = odd_characters_of_level(15, n).unwrap();
            assert_eq!(c.len(), 1 << n);
            assert!(c.iter().all(|x| x.is_odd() && x.is_primitive()));
        }
    }

    #[test]
    fn base_level() {
        let r = h_minus(7, 0).unwrap();
        assert_eq!((r.h_minus.clone(), r.ord2, r.q_ambiguity), (rat(1, 1), 0, QAmbiguity::Exact));
        assert_eq!(h_minus(3, 0).unwrap().h_minus, rat(1, 1));
        assert_eq!(h_minus(5, 0).unwrap().h_minus, rat(2, 1));
        assert_eq!(h_minus(23, 0).unwrap().h_minus, rat(3, 1));
        assert_eq!(h_minus(7, 6), Err(Error::LevelBound { n: 6, bound: 5 }));
    }

    #[test]
    fn stabilization_rules() {
        assert_eq!(stabilized_difference(&[0, 1, 1]), Ok(1));
        assert_eq!(stabilized_difference(&[1, 2]), Err(Error::NotStabilized { diffs: vec![1, 2] }));
        assert_eq!(stabilized_difference(&[1, 2, 4]), Err(Error::MuSignature { diffs: vec![1, 2, 4] }));
        assert_eq!(stabilized_difference(&[2, 1, 3]), Err(Error::NotStabilized { diffs: vec![2, 1, 3] }));
        assert!(stabilized_difference(&[-1, -1]).is_err());
    }

    #[test]
    fn roots_of_unity_rule() {
        assert_eq!(roots_of_unity_in_level(3, 0), 6);
        assert_eq!(roots_of_unity_in_level(6, 0), 2);
        assert_eq!(roots_of_unity_in_level(6, 1), 6);
        assert_eq!(roots_of_unity_in_level(7, 3), 2);
    }
}
