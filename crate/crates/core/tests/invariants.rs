//! Randomized structural invariants across the public API.

use cherednik_core::category_o::{
    anti_involution_check, classify, oss_predicate, pi_weight_shift, pi_weight_shift_inv,
    KappaSpec, StandardModule,
};
use cherednik_core::dunkl::{dunkl_u, dunkl_y};
use cherednik_core::pbw::AlgebraParams;
use cherednik_core::symgroup::{Partition, SnModule};
use cherednik_core::{Monomial, Perm, Poly, PolyContext, Scalar};
use proptest::prelude::*;

fn arb_kappa() -> impl Strategy<Value = Scalar> {
    (-7i64..=7, 1i64..=4)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn arb_partition(nmax: usize) -> impl Strategy<Value = Partition> {
    (1..=nmax).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Perm::from_window(w).unwrap())
}

/// A homogeneous polynomial of degree `d` in `n` variables.
fn arb_homogeneous(n: usize, d: u32) -> impl Strategy<Value = Poly> {
    let monos = Monomial::all_of_degree(n, d);
    proptest::collection::vec(((0..monos.len()), -3i64..=3), 1..5).prop_map(move |terms| {
        let mut p = Poly::zero(n, PolyContext::Polynomial);
        for (i, c) in terms {
            p = p
                .add(&Poly::monomial(
                    monos[i].clone(),
                    Scalar::from(c),
                    PolyContext::Polynomial,
                ))
                .unwrap();
        }
        p
    })
}

fn degree_is(p: &Poly, d: i64) -> bool {
    p.is_zero() || (p.is_homogeneous() && p.total_degree() == Some(d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dunkl_operators_shift_degree(
        (n, f) in (2usize..=4, 0u32..=4).prop_flat_map(|(n, d)| (Just(n), arb_homogeneous(n, d))),
        kappa in arb_kappa(),
    ) {
        let params = AlgebraParams::new(n, kappa).unwrap();
        let d = f.total_degree().unwrap_or(0);
        for i in 0..n {
            prop_assert!(degree_is(&dunkl_y(&params, i, &f).unwrap(), d - 1));
            prop_assert!(degree_is(&dunkl_u(&params, i, &f).unwrap(), d));
            prop_assert!(degree_is(&Poly::var(n, i).mul(&f).unwrap(), d + 1));
        }
    }

    #[test]
    fn specht_form_is_invariant(
        (lambda, w) in arb_partition(5).prop_flat_map(|l| { let n = l.n(); (Just(l), arb_perm(n)) }),
    ) {
        let m = SnModule::specht(&lambda);
        let f = m.form_matrix();
        let lhs = m.perm_matrix(&w).transpose().mul(&f);
        let rhs = f.mul(&m.perm_matrix(&w.inverse()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weights_obey_the_sum_rule(
        lambda in arb_partition(3).prop_filter("n ≥ 2", |l| l.n() >= 2),
        kappa in arb_kappa(),
        d in 0usize..=3,
    ) {
        let expected = &(&kappa * &Scalar::from(d as i64)) + &Scalar::from(lambda.content_sum());
        let sm = StandardModule::with(lambda.n(), kappa, lambda).unwrap();
        let spectrum = sm.weight_spectrum(d).unwrap();
        let total: usize = spectrum.iter().map(|w| w.multiplicity).sum();
        prop_assert_eq!(total, sm.dim(d));
        for w in &spectrum {
            let s: Scalar = w.weight.iter().sum();
            prop_assert_eq!(&s, &expected);
        }
    }

    #[test]
    fn pi_shift_inverts_and_wraps(
        zeta in proptest::collection::vec((-9i64..=9, 1i64..=3), 2..=6),
        kappa in arb_kappa(),
    ) {
        let zeta: Vec<Scalar> = zeta.into_iter().map(|(p, q)| Scalar::ratio(p, q)).collect();
        prop_assert_eq!(pi_weight_shift_inv(&pi_weight_shift(&zeta, &kappa), &kappa), zeta.clone());
        let mut z = zeta.clone();
        for _ in 0..zeta.len() {
            z = pi_weight_shift(&z, &kappa);
        }
        let plus: Vec<Scalar> = zeta.iter().map(|c| c + &kappa).collect();
        prop_assert_eq!(z, plus);
    }

    #[test]
    fn membership_flips_with_conjugation(lambda in arb_partition(7), kappa in arb_kappa()) {
        let a = oss_predicate(&lambda, &KappaSpec::Rational(kappa.clone())).unwrap();
        let b = oss_predicate(&lambda.conjugate(), &KappaSpec::Rational(-kappa)).unwrap();
        prop_assert_eq!(a.in_oss, b.in_oss);
        prop_assert_eq!(a.in_oss, a.witness.unwrap() >= 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn anti_involution_preserves_relations(n in 2usize..=4, kappa in arb_kappa()) {
        let params = AlgebraParams::new(n, kappa).unwrap();
        for r in anti_involution_check(&params).unwrap() {
            prop_assert!(r.passed, "{}: {:?}", r.name, r.counterexample);
        }
    }

    #[test]
    fn gram_is_symmetric_and_kills_singular_vectors(
        lambda in arb_partition(3).prop_filter("n ≥ 2", |l| l.n() >= 2),
        kappa in arb_kappa(),
        d in 1usize..=3,
    ) {
        let sm = StandardModule::with(lambda.n(), kappa, lambda).unwrap();
        let g = sm.contravariant_gram(d).unwrap();
        prop_assert!(g.is_symmetric());
        for v in sm.singular_vectors(d).unwrap() {
            prop_assert!(g.mul_vec(&v).iter().all(Scalar::is_zero));
        }
    }
}

#[test]
fn irrational_kappa_admits_everything() {
    for n in 2..=6 {
        assert!(classify(n, &KappaSpec::Irrational)
            .unwrap()
            .iter()
            .all(|e| e.in_oss && e.witness.is_none()));
    }
}
