//! Random G-module presentations shared by the integration tests.
#![allow(dead_code)]

use iwasawa::arith::{pow_mod, IntMatrix};
use iwasawa::cohomology::{CyclicGModule, Indecomposable};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Action block and its size for one summand of a random permutation-like module.
fn random_block(rng: &mut ChaCha8Rng, p: u64, n: u64) -> IntMatrix {
    match rng.gen_range(0..4) {
        0 => IntMatrix::identity(1),
        1 => CyclicGModule::indecomposable(p, Indecomposable::Regular).unwrap().action().clone(),
        2 => CyclicGModule::indecomposable(p, Indecomposable::Augmentation).unwrap().action().clone(),
        _ => {
            // a scalar u with u^p = 1 mod n
            let units: Vec<u64> = (1..n.max(2)).filter(|&u| pow_mod(u, p, n) == 1 % n).collect();
            let u = units[rng.gen_range(0..units.len())];
            IntMatrix::diagonal([u as i64])
        }
    }
}

/// Random unimodular matrix as a product of elementary operations, with its inverse.
pub fn random_unimodular(rng: &mut ChaCha8Rng, r: usize) -> (IntMatrix, IntMatrix) {
    let mut w = IntMatrix::identity(r);
    let mut w_inv = IntMatrix::identity(r);
    if r < 2 {
        return (w, w_inv);
    }
    for _ in 0..rng.gen_range(0..6) {
        let i = rng.gen_range(0..r);
        let mut j = rng.gen_range(0..r);
        while j == i {
            j = rng.gen_range(0..r);
        }
        let c: i64 = rng.gen_range(-2..=2);
        let mut e = IntMatrix::identity(r);
        e[(i, j)] = c.into();
        let mut e_inv = IntMatrix::identity(r);
        e_inv[(i, j)] = (-c).into();
        w = e.mul(&w);
        w_inv = w_inv.mul(&e_inv);
    }
    (w, w_inv)
}

/// A random finite module over `Z/p` with at most `limit` elements: a direct
/// sum of permutation and scalar blocks modulo `n Z^r`, optionally cut down by
/// the G-orbit of a random vector, then rewritten in a random basis.
pub fn random_finite_module(rng: &mut ChaCha8Rng, p: u64, limit: u64) -> CyclicGModule {
    loop {
        // cohomology lives at p, so lean towards moduli divisible by p
        let n: u64 = if rng.gen_bool(0.75) {
            p.pow(rng.gen_range(1..=3)) * [1, 1, 2, 3][rng.gen_range(0..4)]
        } else {
            rng.gen_range(2..=12)
        };
        let mut action = IntMatrix::zeros(0, 0);
        for _ in 0..rng.gen_range(1..=3) {
            action = action.block_diag(&random_block(rng, p, n));
        }
        let r = action.rows();
        if (n as f64).powi(r as i32) > limit as f64 {
            continue;
        }
        let mut relations = IntMatrix::diagonal(vec![n as i64; r]);
        if rng.gen_bool(0.5) {
            let v: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
            let mut orbit = vec![v.iter().map(|&x| x.into()).collect::<Vec<_>>()];
            for _ in 1..p {
                let next = action.mul_vec(orbit.last().unwrap());
                orbit.push(next);
            }
            relations = relations.hcat(&IntMatrix::from_columns(r, &orbit));
        }
        let module = CyclicGModule::new(p, p, relations, action).expect("construction is G-stable");
        let (w, w_inv) = random_unimodular(rng, r);
        return module.conjugate(&w, &w_inv).expect("conjugate of a valid module");
    }
}

/// Like `random_finite_module` but sometimes keeps free summands.
pub fn random_module(rng: &mut ChaCha8Rng, p: u64) -> CyclicGModule {
    if rng.gen_bool(0.5) {
        return random_finite_module(rng, p, 10_000);
    }
    let mut m = CyclicGModule::indecomposable(p, Indecomposable::ALL[rng.gen_range(0..3)]).unwrap();
    for _ in 0..rng.gen_range(0..2) {
        let other = CyclicGModule::indecomposable(p, Indecomposable::ALL[rng.gen_range(0..3)]).unwrap();
        m = m.direct_sum(&other).unwrap();
    }
    let (w, w_inv) = random_unimodular(rng, m.generator_count());
    m.conjugate(&w, &w_inv).unwrap()
}
