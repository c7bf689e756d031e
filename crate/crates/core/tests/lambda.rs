use iwasawa::arith::{gcd, is_squarefree};
use iwasawa::lambda::*;
use iwasawa::splitting::FERMAT_BASES;
use iwasawa::Error;
use proptest::prelude::*;

#[test]
fn ferrero_and_main_theorem_agree_below_500() {
    for d in (3..500u64).filter(|&d| is_squarefree(d)) {
        assert!(consistency_check(d).unwrap(), "d = {d}");
    }
}

#[test]
fn main_lambda_is_nonnegative() {
    for p in FERMAT_BASES {
        for d in (3..400u64).filter(|&d| is_squarefree(d) && gcd(d, p) <= 2) {
            let r = main_lambda(d, p).unwrap();
            assert!(r.lambda >= 0, "d = {d}, p = {p}");
            assert_eq!(r.lambda, r.breakdown.iter().map(|b| b.1 as i64).sum::<i64>() - 1);
        }
    }
}

fn odd_squarefree() -> impl Strategy<Value = u64> {
    (1u64..2000).prop_map(|k| 2 * k + 1).prop_filter("squarefree", |&d| is_squarefree(d))
}

fn valid_rh_tuple() -> impl Strategy<Value = (u64, u64, i64, u64)> {
    (prop::sample::select(vec![2u64, 3, 5, 7, 11, 17]), 0u64..20, -10i64..10, 0u64..20)
        .prop_filter("nonempty family", |&(_, lk, chi, s)| chi - (s as i64) <= lk as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn decomposition_agrees_with_riemann_hurwitz((p, lk, chi, s) in valid_rh_tuple()) {
        let fam = decomposition_solve(p, lk, chi, s).unwrap();
        let rh = riemann_hurwitz(&RHInput { p, lambda_k: lk, chi_p: chi, ram: vec![p; s as usize] }).unwrap();
        prop_assert_eq!(fam.lambda_l, rh);
        prop_assert_eq!(fam.riemann_hurwitz, rh);
        prop_assert_eq!(fam.a_min as i64, (chi - s as i64).max(0));
        prop_assert_eq!(fam.members.len() as u64, lk - fam.a_min + 1);
        for m in &fam.members {
            prop_assert_eq!(m.lambda_l, rh);
            prop_assert_eq!(m.a + m.b, lk);
            prop_assert_eq!(m.c as i64, s as i64 - chi + m.a as i64);
        }
    }
}

proptest! {
    #[test]
    fn ferrero_is_additive_over_coprime_parts(d1 in odd_squarefree(), d2 in odd_squarefree()) {
        prop_assume!(d1 > 2 && d2 > 2 && gcd(d1, d2) == 1);
        let l1 = ferrero_lambda(d1).unwrap().lambda;
        let l2 = ferrero_lambda(d2).unwrap().lambda;
        prop_assert_eq!(ferrero_lambda(d1 * d2).unwrap().lambda + 1, (l1 + 1) + (l2 + 1));
    }

    #[test]
    fn refitting_reproduces_the_fit(
        p in prop::sample::select(vec![2u64, 3, 5]),
        lambda in 0i64..6, mu in 0i64..3, nu in -5i64..5,
        head in prop::collection::vec(-20i64..20, 0..3),
        tail_len in 4usize..8,
    ) {
        let n0 = head.len();
        let mut e = head.clone();
        e.extend((n0..n0 + tail_len).map(|n| lambda * n as i64 + mu * (p as i64).pow(n as u32) + nu));
        let fit = fit_growth(p, &e).unwrap();
        // the head may happen to continue the pattern, never the other way
        prop_assert!(fit.n0 <= n0);
        prop_assert_eq!((fit.lambda, fit.mu, fit.nu), (lambda, mu, nu));
        let regenerated: Vec<i64> = (0..e.len())
            .map(|n| if n < fit.n0 { e[n] } else { fit.predict(n).try_into().unwrap() })
            .collect();
        prop_assert_eq!(&regenerated, &e);
        let refit = fit_growth(p, &regenerated).unwrap();
        prop_assert_eq!(refit, fit);
    }

    #[test]
    fn fit_refuses_short_or_inconsistent_tails(e in prop::collection::vec(0i64..50, 0..4)) {
        prop_assert_eq!(fit_growth(2, &e), Err(Error::TooFewPoints(e.len())));
    }
}
