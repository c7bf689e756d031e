//! Structure of `(Z/m)^×` with explicit generators and discrete logarithms.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{factorize, gcd, mul_mod, order_mod, pow_mod};
use crate::error::{Error, Result};

/// One cyclic factor of `(Z/m)^×`, supported on a single prime power.
#[derive(Debug, Clone)]
struct Factor {
    prime_power: u64,
    /// The generator as a residue mod `m`, congruent to 1 at every other prime power.
    generator: u64,
    order: u64,
}

/// A prime power `q^k` of `m` together with a table mapping each residue mod
/// `q^k` to its exponents on the factors living at `q^k`.
#[derive(Debug)]
struct Local {
    prime_power: u64,
    first_factor: usize,
    /// `logs[r]` holds one exponent per local factor; empty when `r` is not a unit.
    logs: Vec<Vec<u64>>,
}

/// `(Z/m)^×` as a direct product of cyclic groups, built by CRT from the
/// prime-power parts. At `2^k` with `k >= 3` the factors are `-1` (order 2)
/// and `5` (order `2^(k-2)`); at 4 the single factor is `-1`.
#[derive(Debug)]
pub struct UnitGroup {
    modulus: u64,
    factors: Vec<Factor>,
    locals: Vec<Local>,
}

fn crt_lift(residue: u64, prime_power: u64, m: u64) -> u64 {
    // x = residue mod prime_power, x = 1 mod m / prime_power
    let rest = m / prime_power;
    if rest == 1 {
        return residue % m;
    }
    let mut x = residue % prime_power;
    while x % rest != 1 % rest {
        x += prime_power;
    }
    x
}

fn smallest_primitive_root(pk: u64, phi: u64) -> u64 {
    (2..pk)
        .find(|&g| gcd(g, pk) == 1 && order_mod(g, pk, phi) == phi)
        .expect("odd prime powers are cyclic")
}

impl UnitGroup {
    /// `m = 1` gives the trivial group.
    pub fn new(m: u64) -> Result<Self> {
        if m < 1 {
            return Err(Error::ModulusTooSmall { m, min: 1 });
        }
        let mut factors = Vec::new();
        let mut locals = Vec::new();
        for (q, e) in factorize(m) {
            let pk = q.pow(e);
            let first_factor = factors.len();
            let mut logs = vec![Vec::new(); pk as usize];
            if q == 2 {
                if e == 1 {
                    logs[1] = vec![];
                } else if e == 2 {
                    factors.push(Factor { prime_power: pk, generator: crt_lift(3, pk, m), order: 2 });
                    logs[1] = vec![0];
                    logs[3] = vec![1];
                } else {
                    let half = pk >> 2;
                    factors.push(Factor { prime_power: pk, generator: crt_lift(pk - 1, pk, m), order: 2 });
                    factors.push(Factor { prime_power: pk, generator: crt_lift(5, pk, m), order: half });
                    let mut x = 1u64;
                    for t in 0..half {
                        logs[x as usize] = vec![0, t];
                        logs[(pk - x) as usize] = vec![1, t];
                        x = x * 5 % pk;
                    }
                }
            } else {
                let phi = pk / q * (q - 1);
                let g = smallest_primitive_root(pk, phi);
                factors.push(Factor { prime_power: pk, generator: crt_lift(g, pk, m), order: phi });
                let mut x = 1u64;
                for t in 0..phi {
                    logs[x as usize] = vec![t];
                    x = mul_mod(x, g, pk);
                }
            }
            locals.push(Local { prime_power: pk, first_factor, logs });
        }
        Ok(UnitGroup { modulus: m, factors, locals })
    }

    /// Shared instance for `m`; tables are built once per modulus.
    pub fn cached(m: u64) -> Result<Arc<UnitGroup>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<UnitGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().unwrap().get(&m) {
            return Ok(Arc::clone(g));
        }
        let g = Arc::new(UnitGroup::new(m)?);
        cache.lock().unwrap().insert(m, Arc::clone(&g));
        Ok(g)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// `(generator, order)` pairs.
    pub fn generators(&self) -> Vec<(u64, u64)> {
        self.factors.iter().map(|f| (f.generator, f.order)).collect()
    }

    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|f| f.order)
    }

    pub fn order(&self) -> u64 {
        self.orders().product()
    }

    /// Exponents of `a` on the generators, or `None` if `a` is not a unit.
    pub fn discrete_log(&self, a: u64) -> Option<Vec<u64>> {
        let mut out = vec![0u64; self.factors.len()];
        for local in &self.locals {
            let r = (a % local.prime_power) as usize;
            let logs = &local.logs[r];
            let n_local = self.factors[local.first_factor..]
                .iter()
                .take_while(|f| f.prime_power == local.prime_power)
                .count();
            if logs.len() != n_local {
                return None;
            }
            out[local.first_factor..local.first_factor + n_local].copy_from_slice(logs);
        }
        if gcd(a % self.modulus, self.modulus) != 1 {
            return None;
        }
        Some(out)
    }

    /// Product of generator powers, reduced mod `m`.
    pub fn element(&self, exponents: &[u64]) -> u64 {
        self.factors
            .iter()
            .zip(exponents)
            .fold(1 % self.modulus, |acc, (f, &e)| {
                mul_mod(acc, pow_mod(f.generator, e, self.modulus), self.modulus)
            })
    }
}

/// Generators of `(Z/m)^×` with their orders; empty for the trivial group.
pub fn unit_group_structure(m: u64) -> Result<Vec<(u64, u64)>> {
    if m < 2 {
        return Err(Error::ModulusTooSmall { m, min: 2 });
    }
    Ok(UnitGroup::cached(m)?.generators())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;

    #[test]
    fn small_examples() {
        assert_eq!(unit_group_structure(8).unwrap(), vec![(7, 2), (5, 2)]);
        assert_eq!(unit_group_structure(5).unwrap(), vec![(2, 4)]);
        assert_eq!(unit_group_structure(2).unwrap(), vec![]);
        assert_eq!(unit_group_structure(4).unwrap(), vec![(3, 2)]);
        assert!(unit_group_structure(1).is_err());
    }

    #[test]
    fn product_of_orders_is_phi() {
        for m in 2..2000 {
            let order: u64 = unit_group_structure(m).unwrap().iter().map(|g| g.1).product();
            assert_eq!(order, euler_phi(m), "m = {m}");
        }
    }

    #[test]
    fn discrete_log_inverts_element() {
        for m in [2u64, 3, 4, 8, 12, 15, 16, 24, 45, 64, 84, 105, 224, 1000] {
            let g = UnitGroup::new(m).unwrap();
            let mut seen = std::collections::HashSet::new();
            for a in 0..m {
                match g.discrete_log(a) {
                    Some(e) => {
                        assert_eq!(gcd(a, m), 1);
                        assert_eq!(g.element(&e), a % m, "m = {m}, a = {a}");
                        assert!(seen.insert(e));
                    }
                    None => assert_ne!(gcd(a, m), 1, "m = {m}, a = {a}"),
                }
            }
            assert_eq!(seen.len() as u64, euler_phi(m));
        }
    }

    #[test]
    fn generator_orders_are_exact() {
        for m in [9u64, 20, 32, 63, 100, 256, 945] {
            for (gen, ord) in unit_group_structure(m).unwrap() {
                assert_eq!(crate::arith::multiplicative_order(gen as i64, m).unwrap(), ord);
            }
        }
    }
}
