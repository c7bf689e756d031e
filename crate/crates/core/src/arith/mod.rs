//! Exact integer arithmetic and integer linear algebra.
//!
//! Big integers and rationals come from `num-bigint` / `num-rational`
//! (`BigRational` is always kept in lowest terms with a positive
//! denominator). Moduli, primes and orders live in `u64`: every modulus the
//! crate touches is at desk scale, and modular products go through `u128`.

mod matrix;
mod smith;
mod units;

pub use matrix::IntMatrix;
pub use smith::{smith_normal_form, SmithDecomposition};
pub use units::{unit_group_structure, UnitGroup};

pub use num_bigint::BigInt as Integer;
pub use num_rational::BigRational as Rational;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Largest `e` with `p^e | n`.
pub fn ord_p<N: Into<BigInt>>(n: N, p: u64) -> Result<u32> {
    let n: BigInt = n.into();
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut e = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Ok(e);
        }
        n = q;
        e += 1;
    }
}

/// 2-adic order of a nonzero machine integer.
pub(crate) fn ord2_u64(n: u64) -> u32 {
    debug_assert!(n != 0);
    n.trailing_zeros()
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Reduce a signed value into `[0, m)`.
pub fn residue(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

const TRIAL_LIMIT: u64 = 1 << 16;
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Trial division below 2^16, deterministic Miller-Rabin above.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < TRIAL_LIMIT {
        let mut d = 2u64;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let s = (n - 1).trailing_zeros();
    let t = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, t, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Prime factorisation by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Sorted positive divisors.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Least `k >= 1` with `a^k = 1 (mod m)`.
pub fn multiplicative_order(a: i64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    let a_res = residue(a, m);
    if gcd(a_res, m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    Ok(order_mod(a_res, m, euler_phi(m)))
}

/// Order of a unit `a` modulo `m`, given a multiple of it.
pub(crate) fn order_mod(a: u64, m: u64, multiple: u64) -> u64 {
    let mut ord = multiple;
    for (q, _) in factorize(multiple) {
        while ord % q == 0 && pow_mod(a, ord / q, m) == 1 {
            ord /= q;
        }
    }
    ord
}

/// `base^exp` as a big integer.
pub fn big_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `p`-adic order of a nonzero rational (may be negative).
pub fn ord_p_rational(x: &Rational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let num = ord_p(x.numer().clone(), p)? as i64;
    let den = ord_p(x.denom().clone(), p)? as i64;
    Ok(num - den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ord_p_examples() {
        assert_eq!(ord_p(48, 2).unwrap(), 4);
        assert_eq!(ord_p(8, 2).unwrap(), 3);
        assert_eq!(ord_p(7, 2).unwrap(), 0);
        assert_eq!(ord_p(-48, 2).unwrap(), 4);
        assert_eq!(ord_p(0, 2), Err(Error::ZeroValuation));
        assert_eq!(ord_p(12, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn multiplicative_order_examples() {
        assert_eq!(multiplicative_order(2, 9).unwrap(), 6);
        assert_eq!(multiplicative_order(2, 25).unwrap(), 20);
        assert_eq!(multiplicative_order(1, 97).unwrap(), 1);
        assert_eq!(multiplicative_order(-1, 7).unwrap(), 2);
        assert!(matches!(
            multiplicative_order(3, 12),
            Err(Error::NotCoprime { .. })
        ));
    }

    fn brute_order(a: u64, m: u64) -> u64 {
        let mut x = a % m;
        let mut k = 1;
        while x != 1 {
            x = x * a % m;
            k += 1;
        }
        k
    }

    #[test]
    fn multiplicative_order_matches_powering() {
        for m in 2..200u64 {
            for a in 1..m {
                if gcd(a, m) == 1 {
                    assert_eq!(multiplicative_order(a as i64, m).unwrap(), brute_order(a, m));
                }
            }
        }
    }

    #[test]
    fn primality_agrees_with_trial_division_around_threshold() {
        let slow = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in (TRIAL_LIMIT - 500)..(TRIAL_LIMIT + 3000) {
            assert_eq!(is_prime(n), slow(n), "n = {n}");
        }
        assert!(is_prime(65537));
        assert!(is_prime(4_294_967_291));
        assert!(!is_prime(4_294_967_297)); // F_5 = 641 * 6700417
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
    }

    #[test]
    fn divisors_and_phi() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(36), 12);
        assert!(is_squarefree(105));
        assert!(!is_squarefree(12));
    }

    proptest! {
        #[test]
        fn ord_p_is_additive(a in 1i64..1_000_000, b in 1i64..1_000_000, pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let lhs = ord_p(BigInt::from(a) * BigInt::from(b), p).unwrap();
            prop_assert_eq!(lhs, ord_p(a, p).unwrap() + ord_p(b, p).unwrap());
        }

        #[test]
        fn order_divides_group_order(m in 2u64..3000, a in 1i64..3000) {
            prop_assume!(gcd(residue(a, m), m) == 1);
            let ord = multiplicative_order(a, m).unwrap();
            let group: u64 = unit_group_structure(m).unwrap().iter().map(|g| g.1).product();
            prop_assert_eq!(group % ord, 0);
        }
    }
}
