use iwasawa::arith::is_prime;
use iwasawa::splitting::*;
use iwasawa::Error;

/// Smallest `k >= 1` with `q^k ≡ ±1 (mod 2^{n+2})`, by stepping through powers.
fn frobenius_order_in_qn(q: u64, n: u32) -> u64 {
    let m = 1u64 << (n + 2);
    let mut x = q % m;
    let mut k = 1;
    while x != 1 && x != m - 1 {
        x = x * (q % m) % m;
        k += 1;
    }
    k
}

/// Order of Frobenius in `Gal(k·Q_n / Q)` for odd Fermat `p`: smallest `k`
/// with `q^k ≡ ±1 (mod 2^{n+2})` and `q^{k(p-1)} ≡ 1 (mod p²)`.
fn frobenius_order_in_fermat(q: u64, p: u64, n: u32) -> u64 {
    let m = 1u64 << (n + 2);
    let p2 = p * p;
    let in_kernel = |x: u64| (0..p - 1).fold(1u64, |acc, _| acc * x % p2) == 1;
    let (mut x2, mut xp, mut k) = (q % m, q % p2, 1);
    while !((x2 == 1 || x2 == m - 1) && in_kernel(xp)) {
        x2 = x2 * (q % m) % m;
        xp = xp * (q % p2) % p2;
        k += 1;
    }
    k
}

fn odd_primes_below(bound: u64) -> impl Iterator<Item = u64> {
    (3..bound).filter(|&q| is_prime(q))
}

#[test]
fn residue_degree_matches_enumeration() {
    for q in odd_primes_below(1000) {
        for n in 0..=12 {
            let f = residue_degree_in_Qn(q, n).unwrap();
            assert_eq!(f, frobenius_order_in_qn(q, n), "q = {q}, n = {n}");
            let r = splitting_in_Qn(q, n).unwrap();
            assert_eq!(r.e * r.f * r.g, 1 << n);
        }
    }
}

#[test]
fn prime_count_stabilizes_at_the_stable_value() {
    for q in odd_primes_below(1000) {
        let stable = primes_above_in_Qinf(q).unwrap();
        let v = stable.trailing_zeros();
        let gs: Vec<u64> = (0..=12).map(|n| splitting_in_Qn(q, n).unwrap().g).collect();
        for w in gs.windows(2) {
            assert!(w[0] <= w[1], "q = {q}: {gs:?}");
        }
        for (n, &g) in gs.iter().enumerate() {
            assert!(g <= stable);
            if n as u32 >= v {
                assert_eq!(g, stable, "q = {q}, n = {n}");
            }
        }
        // once g is stable the residue degree doubles
        let fs: Vec<u64> = (v..=12).map(|n| residue_degree_in_Qn(q, n).unwrap()).collect();
        for w in fs.windows(2) {
            assert_eq!(w[1], 2 * w[0]);
        }
    }
}

#[test]
fn fermat_tower_matches_product_group() {
    for p in [3u64, 5, 17] {
        for q in odd_primes_below(400).filter(|&q| q != p) {
            let stable = stable_primes_above_in_fermat_tower(q, p).unwrap();
            for n in 0..=8 {
                let r = primes_above_in_fermat_tower(q, p, n).unwrap();
                assert_eq!(r.f, frobenius_order_in_fermat(q, p, n), "p = {p}, q = {q}, n = {n}");
                assert_eq!(r.e * r.f * r.g, p << n);
                assert!(r.g <= stable);
            }
            assert_eq!(primes_above_in_fermat_tower(q, p, 12).unwrap().g, stable);
        }
    }
}

#[test]
fn fermat_numbers_pairwise_coprime() {
    use num_integer::Integer;
    let f: Vec<_> = (0..=6).map(fermat_number).collect();
    for i in 0..f.len() {
        for j in 0..i {
            assert_eq!(f[i].gcd(&f[j]), 1.into());
        }
    }
}

#[test]
fn ramified_set_total_is_sum() {
    for d in 3..300u64 {
        for p in FERMAT_BASES {
            match ramified_set(d, p, Level::Infinity) {
                Ok(s) => {
                    assert_eq!(s.total, s.entries.iter().map(|e| e.1).sum::<u64>());
                    assert!(s.entries.iter().all(|&(q, _)| q % 2 == 1 && d % q == 0));
                    assert!(s.total >= 1 || d.is_power_of_two());
                }
                Err(Error::NotSquarefree(_)) | Err(Error::GcdCondition { .. }) => {}
                Err(e) => panic!("d = {d}, p = {p}: {e}"),
            }
        }
    }
}
