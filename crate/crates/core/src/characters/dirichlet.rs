//! Dirichlet characters stored as exponents on the fixed generators of
//! `(Z/m)^×` produced by [`UnitGroup`].

use std::fmt;
use std::sync::Arc;

use crate::arith::{divisors, gcd, is_squarefree, lcm, residue, UnitGroup};
use crate::error::{Error, Result};

use super::CyclotomicNumber;

/// `χ(g_i) = ζ_{n_i}^{e_i}` where `g_i` has order `n_i` in `(Z/m)^×`.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    exponents: Vec<u64>,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    pub fn trivial(modulus: u64) -> Result<Self> {
        let group = UnitGroup::cached(modulus)?;
        let exponents = vec![0; group.rank()];
        Ok(DirichletCharacter { group, exponents })
    }

    /// From raw exponents on the generators of `(Z/m)^×`; each is reduced mod
    /// the generator's order.
    pub fn from_exponents(modulus: u64, exponents: &[u64]) -> Result<Self> {
        let group = UnitGroup::cached(modulus)?;
        if exponents.len() != group.rank() {
            return Err(Error::InvalidArgument(format!(
                "(Z/{modulus})^x has {} generators, got {} exponents",
                group.rank(),
                exponents.len()
            )));
        }
        let exponents = exponents.iter().zip(group.orders()).map(|(e, n)| e % n).collect();
        Ok(DirichletCharacter { group, exponents })
    }

    /// The character with `χ(g_i) = ζ_level^{k_i}`. Each `ζ_level^{k_i}` must
    /// have order dividing the order of `g_i`.
    fn from_generator_values(group: Arc<UnitGroup>, values: &[u64], level: u64) -> Self {
        let exponents = values
            .iter()
            .zip(group.orders())
            .map(|(&k, n)| {
                let scaled = k as u128 * n as u128;
                assert!(
                    scaled % level as u128 == 0,
                    "value ζ_{level}^{k} has order not dividing {n}"
                );
                (scaled / level as u128) as u64 % n
            })
            .collect();
        DirichletCharacter { group, exponents }
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Order of χ in the character group.
    pub fn order(&self) -> u64 {
        self.exponents
            .iter()
            .zip(self.group.orders())
            .fold(1, |acc, (&e, n)| lcm(acc, n / gcd(e, n)))
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `χ(a) = ζ_o^k` with `o = order(χ)`; `None` when `gcd(a, m) > 1`.
    pub fn value_exponent(&self, a: i64) -> Option<u64> {
        let o = self.order();
        let logs = self.group.discrete_log(residue(a, self.modulus()))?;
        Some(self.exponent_from_logs(&logs, o))
    }

    fn exponent_from_logs(&self, logs: &[u64], o: u64) -> u64 {
        // χ(a) = ∏ ζ_{n_i}^{e_i l_i}; each factor, written as a primitive
        // root of unity ζ_n^t, has n | o.
        let mut k = 0u128;
        for ((&l, &e), n) in logs.iter().zip(&self.exponents).zip(self.group.orders()) {
            let t = (e as u128 * l as u128) % n as u128; // ζ_n^t
            if t == 0 {
                continue;
            }
            let g = gcd(t as u64, n) as u128;
            let (t, n) = (t / g, n as u128 / g); // primitive ζ_n^t with n | o
            k += t * (o as u128 / n);
        }
        (k % o as u128) as u64
    }

    /// `χ(a)` at level `order(χ)`; zero for non-units.
    pub fn eval(&self, a: i64) -> CyclotomicNumber {
        let o = self.order();
        match self.value_exponent(a) {
            Some(k) => CyclotomicNumber::zeta_power(o, k),
            None => CyclotomicNumber::zero(o),
        }
    }

    /// `χ(-1) = -1`.
    pub fn is_odd(&self) -> bool {
        let o = self.order();
        match self.value_exponent(-1) {
            Some(k) => o % 2 == 0 && k == o / 2,
            None => false,
        }
    }

    /// Pointwise product at modulus `lcm(m1, m2)`; not primitivized.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let m = lcm(self.modulus(), other.modulus());
        let group = UnitGroup::cached(m)?;
        let (o1, o2) = (self.order(), other.order());
        let level = lcm(o1, o2);
        let values: Vec<u64> = group
            .generators()
            .into_iter()
            .map(|(g, _)| {
                let k1 = self.value_exponent(g as i64).expect("generator is a unit");
                let k2 = other.value_exponent(g as i64).expect("generator is a unit");
                (k1 * (level / o1) + k2 * (level / o2)) % level
            })
            .collect();
        Ok(Self::from_generator_values(group, &values, level))
    }

    pub fn pow(&self, k: u64) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(self.group.orders())
            .map(|(&e, n)| ((e as u128 * k as u128) % n as u128) as u64)
            .collect();
        DirichletCharacter { group: Arc::clone(&self.group), exponents }
    }

    /// Smallest `f | m` such that χ is trivial on units `≡ 1 (mod f)`.
    pub fn conductor(&self) -> u64 {
        let m = self.modulus();
        divisors(m)
            .into_iter()
            .find(|&f| {
                (0..m / f)
                    .map(|t| (1 + t * f) as i64)
                    .all(|a| self.value_exponent(a).is_none_or(|k| k == 0))
            })
            .unwrap_or(m)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus()
    }

    /// The primitive character mod the conductor that induces χ.
    pub fn primitive(&self) -> Result<Self> {
        let f = self.conductor();
        let m = self.modulus();
        if f == m {
            return Ok(self.clone());
        }
        let group = UnitGroup::cached(f)?;
        let level = self.order();
        let values: Vec<u64> = group
            .generators()
            .into_iter()
            .map(|(g, _)| {
                let lift = (0..m / f.max(1) + 1)
                    .map(|t| g + t * f)
                    .find(|&a| gcd(a, m) == 1)
                    .expect("every unit mod f lifts to a unit mod m");
                self.value_exponent(lift as i64).expect("lift is a unit")
            })
            .collect();
        Ok(Self::from_generator_values(group, &values, level))
    }

    /// Values on `0..m` as `Some(k)` meaning `ζ_o^k`.
    pub fn value_table(&self) -> Vec<Option<u64>> {
        (0..self.modulus() as i64).map(|a| self.value_exponent(a)).collect()
    }
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DirichletCharacter(mod {}, exponents {:?}, order {})",
            self.modulus(),
            self.exponents,
            self.order()
        )
    }
}

/// Kronecker symbol `(a / n)` for `n >= 0`.
pub fn kronecker_symbol(a: i64, n: u64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut sign = 1;
    let v = n.trailing_zeros();
    let mut n = n >> v;
    if v > 0 {
        if a % 2 == 0 {
            return 0;
        }
        let a8 = a.rem_euclid(8);
        if v % 2 == 1 && (a8 == 3 || a8 == 5) {
            sign = -sign;
        }
    }
    if n == 1 {
        return sign;
    }
    // Jacobi symbol (a / n), n odd.
    let mut a = residue(a, n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Discriminant of `Q(√-d)` for squarefree `d > 0`: `-d` when `d ≡ 3 (mod 4)`, else `-4d`.
pub fn imaginary_quadratic_discriminant(d: u64) -> Result<i64> {
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let d = d as i64;
    Ok(if d % 4 == 3 { -d } else { -4 * d })
}

/// The primitive quadratic character mod `|D|` attached to `Q(√D)`.
pub fn kronecker_character(disc: i64) -> Result<DirichletCharacter> {
    if !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamental(disc));
    }
    let m = disc.unsigned_abs();
    let group = UnitGroup::cached(m)?;
    let values: Vec<u64> = group
        .generators()
        .into_iter()
        .map(|(g, _)| match kronecker_symbol(disc, g) {
            1 => 0,
            -1 => 1,
            _ => unreachable!("generators are units"),
        })
        .collect();
    let chi = DirichletCharacter::from_generator_values(group, &values, 2);
    debug_assert!(chi.is_primitive());
    Ok(chi)
}

/// The `2^n` even characters mod `2^{n+2}`, i.e. the characters of
/// `(Z/2^{n+2})^× / {±1}`, ordered by their exponent on the generator 5.
pub fn even_two_power_characters(n: u32) -> Result<Vec<DirichletCharacter>> {
    let m = 1u64
        .checked_shl(n + 2)
        .ok_or_else(|| Error::InvalidArgument(format!("level {n} too large")))?;
    if n == 0 {
        return Ok(vec![DirichletCharacter::trivial(m)?]);
    }
    (0..1u64 << n)
        .map(|j| DirichletCharacter::from_exponents(m, &[0, j]))
        .collect()
}
