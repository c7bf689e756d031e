mod common;

use iwasawa::arith::IntMatrix;
use iwasawa::cohomology::*;
use num_bigint::BigInt;
use proptest::prelude::*;

fn big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn table_two() {
    for p in [2u64, 3, 5, 17] {
        // (kind, rank, rank of M^G, H², H¹, χ)
        let rows = [
            (Indecomposable::Trivial, 1, 1, big(&[p]), big(&[]), 1),
            (Indecomposable::Regular, p as usize, 1, big(&[]), big(&[]), 0),
            (Indecomposable::Augmentation, p as usize - 1, 0, big(&[]), big(&[p]), -1),
        ];
        for (kind, rank, fixed_rank, h2, h1, chi) in rows {
            let m = CyclicGModule::indecomposable(p, kind).unwrap();
            assert_eq!(m.rank(), rank, "p = {p}, {kind:?}");
            assert_eq!(m.fixed_invariants().len(), fixed_rank);
            let rep = cohomology(&m);
            assert_eq!((rep.h2, rep.h1, rep.chi), (h2, h1, Some(chi)), "p = {p}, {kind:?}");
        }
    }
}

#[test]
fn norm_element_examples() {
    let swap = CyclicGModule::indecomposable(2, Indecomposable::Regular).unwrap();
    assert_eq!(norm_element_matrix(&swap), IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]], 2).unwrap());
    let identity_order_9 = CyclicGModule::new(3, 9, IntMatrix::zeros(2, 0), IntMatrix::identity(2)).unwrap();
    assert_eq!(norm_element_matrix(&identity_order_9), IntMatrix::diagonal([9, 9]));
}

#[test]
fn brute_force_agrees_on_small_examples() {
    let z5 = CyclicGModule::new(2, 2, IntMatrix::diagonal([5]), IntMatrix::identity(1)).unwrap();
    assert_eq!(brute_force_cohomology(&z5).unwrap(), cohomology(&z5));
    assert_eq!(cohomology(&z5).chi, Some(0));
    // regular module mod 4 over Z/2: a permutation module, cohomologically trivial
    let reg = CyclicGModule::new(
        2,
        2,
        IntMatrix::diagonal([4, 4]),
        CyclicGModule::indecomposable(2, Indecomposable::Regular).unwrap().action().clone(),
    )
    .unwrap();
    let rep = cohomology(&reg);
    assert_eq!(rep, CohomologyReport { h1: vec![], h2: vec![], chi: Some(0) });
    assert_eq!(brute_force_cohomology(&reg).unwrap(), rep);
}

#[test]
fn higher_order_groups() {
    // Z/9 acting on Z[Z/9]/(3) ... cyclic shift of order 9 mod 3
    let mut a = IntMatrix::zeros(9, 9);
    for i in 0..9 {
        a[((i + 1) % 9, i)] = 1.into();
    }
    let m = CyclicGModule::new(3, 9, IntMatrix::diagonal(vec![3; 9]), a).unwrap();
    assert_eq!(cohomology(&m), brute_force_cohomology(&m).unwrap());
    let z = CyclicGModule::new(3, 9, IntMatrix::zeros(1, 0), IntMatrix::identity(1)).unwrap();
    assert_eq!(cohomology(&z).h2, big(&[9]));
    assert_eq!(cohomology(&z).chi, Some(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_enumeration(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let m = common::random_finite_module(&mut common::rng(seed), p, 10_000);
        prop_assert_eq!(cohomology(&m), brute_force_cohomology(&m).unwrap());
    }

    #[test]
    fn dual_swaps_h1_and_h2(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let m = common::random_finite_module(&mut common::rng(seed), p, 10_000);
        let dual = m.dual().unwrap();
        prop_assert_eq!(dual.cardinality(), m.cardinality());
        let (a, b) = (cohomology(&m), cohomology(&dual));
        prop_assert_eq!(&b.h2, &a.h1);
        prop_assert_eq!(&b.h1, &a.h2);
        prop_assert_eq!(b.chi.unwrap(), -a.chi.unwrap());
        prop_assert_eq!(a.chi, Some(0));
    }

    #[test]
    fn chi_is_additive(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let mut rng = common::rng(seed);
        let a = common::random_module(&mut rng, p);
        let b = common::random_module(&mut rng, p);
        prop_assert!(chi_additivity_check(&a, &b).unwrap());
    }

    #[test]
    fn change_of_basis_preserves_cohomology(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let mut rng = common::rng(seed);
        let m = common::random_module(&mut rng, p);
        let (w, w_inv) = common::random_unimodular(&mut rng, m.generator_count());
        prop_assert_eq!(cohomology(&m.conjugate(&w, &w_inv).unwrap()), cohomology(&m));
    }
}
