//! Cohomology of a finite module by listing every element. Only used as an
//! independent check on the lattice computation.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{CohomologyReport, CyclicGModule};
use crate::arith::factorize;
use crate::error::{Error, Result};

/// Largest `|M|` the enumeration will accept.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

/// Elements of `⊕ Z/d_i` packed into a mixed-radix index.
struct Enumerated {
    moduli: Vec<u64>,
    size: u64,
}

impl Enumerated {
    fn decode(&self, mut idx: u64) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&d| {
                let c = idx % d;
                idx /= d;
                c
            })
            .collect()
    }

    fn encode(&self, coords: &[u64]) -> u64 {
        self.moduli
            .iter()
            .zip(coords)
            .rev()
            .fold(0, |acc, (&d, &c)| acc * d + c % d)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(u, v)| u + v).collect();
        self.encode(&sum)
    }

    fn scale(&self, a: u64, k: u64) -> u64 {
        let x = self.decode(a);
        let out: Vec<u64> = x
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &d)| ((c as u128 * k as u128) % d as u128) as u64)
            .collect();
        self.encode(&out)
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        let neg_b: Vec<u64> = self
            .decode(b)
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &d)| (d - c) % d)
            .collect();
        self.add(a, self.encode(&neg_b))
    }
}

/// Same report as [`super::cohomology`], found by enumerating `M`.
/// Needs `M` finite with at most [`ENUMERATION_LIMIT`] elements.
pub fn brute_force_cohomology(m: &CyclicGModule) -> Result<CohomologyReport> {
    let (moduli, action) = m.canonical_form()?;
    let size = moduli.iter().product::<BigInt>();
    let size = size
        .to_u64()
        .filter(|&s| s <= ENUMERATION_LIMIT)
        .ok_or_else(|| Error::ModuleTooLarge(format!("|M| = {size}")))?;
    let moduli: Vec<u64> = moduli.iter().map(|d| d.to_u64().expect("bounded by |M|")).collect();
    let r = moduli.len();
    let a: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| action[(i, j)].to_u64().expect("reduced mod d_i"))
                .collect()
        })
        .collect();
    let space = Enumerated { moduli, size };

    let act: Vec<u64> = (0..size)
        .map(|idx| {
            let x = space.decode(idx);
            let y: Vec<u64> = (0..r)
                .map(|i| {
                    let d = space.moduli[i] as u128;
                    (0..r).fold(0u128, |acc, j| (acc + a[i][j] as u128 * x[j] as u128) % d) as u64
                })
                .collect();
            space.encode(&y)
        })
        .collect();

    let norm: Vec<u64> = (0..size)
        .map(|idx| {
            let mut acc = 0;
            let mut x = idx;
            for _ in 0..m.group_order() {
                acc = space.add(acc, x);
                x = act[x as usize];
            }
            acc
        })
        .collect();

    let n = size as usize;
    let mut fixed = vec![false; n];
    let mut norms = vec![false; n];
    let mut norm_kernel = vec![false; n];
    let mut coboundaries = vec![false; n];
    for idx in 0..size {
        let i = idx as usize;
        fixed[i] = act[i] == idx;
        norms[norm[i] as usize] = true;
        norm_kernel[i] = norm[i] == 0;
        coboundaries[space.sub(act[i], idx) as usize] = true;
    }

    let h2 = subquotient(&space, &fixed, &norms);
    let h1 = subquotient(&space, &norm_kernel, &coboundaries);
    Ok(CohomologyReport::from_invariants(m.p(), h1, h2))
}

/// Invariant factors of `outer / inner` for subgroups given as membership
/// masks, found from the sizes of the `ℓ^j`-torsion of the quotient.
fn subquotient(space: &Enumerated, outer: &[bool], inner: &[bool]) -> Vec<BigInt> {
    let outer_size = outer.iter().filter(|&&b| b).count() as u64;
    let inner_size = inner.iter().filter(|&&b| b).count() as u64;
    let quotient = outer_size / inner_size;
    // exponents[k] for a prime ℓ: the ℓ-parts of the cyclic factors, largest first
    let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
    for (ell, _) in factorize(quotient) {
        let mut torsion_logs = vec![0u32];
        let mut power = 1u64;
        loop {
            power *= ell;
            let count = (0..space.size)
                .filter(|&x| outer[x as usize] && inner[space.scale(x, power) as usize])
                .count() as u64;
            let log = ilog(count / inner_size, ell);
            if log == *torsion_logs.last().unwrap() {
                break;
            }
            torsion_logs.push(log);
        }
        // at least j: torsion_logs[j] - torsion_logs[j-1]
        let at_least: Vec<u32> = torsion_logs.windows(2).map(|w| w[1] - w[0]).collect();
        let cyclic = at_least[0] as usize;
        let mut exps = vec![0u32; cyclic];
        for (j, &k) in at_least.iter().enumerate() {
            for e in exps.iter_mut().take(k as usize) {
                *e = j as u32 + 1;
            }
        }
        per_prime.push((ell, exps));
    }
    let count = per_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut out: Vec<BigInt> = (0..count)
        .map(|k| {
            per_prime.iter().fold(BigInt::from(1), |acc, (ell, exps)| {
                acc * BigInt::from(*ell).pow(exps.get(k).copied().unwrap_or(0))
            })
        })
        .collect();
    out.reverse();
    out
}

fn ilog(mut n: u64, base: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        n /= base;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntMatrix;

    #[test]
    fn rejects_infinite_and_large() {
        let z = CyclicGModule::new(2, 2, IntMatrix::zeros(1, 0), IntMatrix::identity(1)).unwrap();
        assert_eq!(brute_force_cohomology(&z), Err(Error::InfiniteModule));
        let big = CyclicGModule::new(2, 2, IntMatrix::diagonal([1_000_003]), IntMatrix::identity(1)).unwrap();
        assert!(matches!(brute_force_cohomology(&big), Err(Error::ModuleTooLarge(_))));
    }

    #[test]
    fn trivial_action_on_z2_z4() {
        // H² = M / 2M = Z/2 × Z/2, H¹ = M[2] = Z/2 × Z/2
        let m = CyclicGModule::new(2, 2, IntMatrix::diagonal([2, 4]), IntMatrix::identity(2)).unwrap();
        let rep = brute_force_cohomology(&m).unwrap();
        let two = vec![BigInt::from(2), BigInt::from(2)];
        assert_eq!(rep, CohomologyReport { h1: two.clone(), h2: two, chi: Some(0) });
    }

    #[test]
    fn ninth_roots_with_trivial_action() {
        // G = Z/3 on Z/9 trivially: H² = Z/9 / 3 = Z/3, H¹ = Z/9[3] = Z/3
        let m = CyclicGModule::new(3, 3, IntMatrix::diagonal([9]), IntMatrix::identity(1)).unwrap();
        let rep = brute_force_cohomology(&m).unwrap();
        assert_eq!(rep.h1, vec![BigInt::from(3)]);
        assert_eq!(rep.h2, vec![BigInt::from(3)]);
    }
}
