use std::collections::BTreeMap;

use super::*;
use crate::dunkl::dunkl_y;
use crate::exactpoly::Poly;

fn q(a: i64, b: i64) -> Scalar {
    Scalar::ratio(a, b)
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn sm(n: usize, k: Scalar, l: &[usize]) -> StandardModule {
    StandardModule::with(n, k, part(l)).unwrap()
}

fn weights(ws: &[WeightMultiplicity]) -> Vec<(Vec<Scalar>, usize)> {
    ws.iter()
        .map(|w| (w.weight.clone(), w.multiplicity))
        .collect()
}

fn s(v: i64) -> Scalar {
    Scalar::from(v)
}

#[test]
fn degree_zero_actions() {
    let m = sm(3, q(2, 3), &[2, 1]);
    for i in 0..3 {
        let y = m.standard_action(&Generator::Y(i), 0).unwrap();
        assert_eq!((y.rows(), y.cols()), (0, 2));
    }
    for w in Perm::all(3) {
        let a = m.standard_action(&Generator::Perm(w.clone()), 0).unwrap();
        assert_eq!(*a, m.module().perm_matrix(&w));
    }
    let us = m.u_matrices(0).unwrap();
    for (i, u) in us.iter().enumerate() {
        assert_eq!(**u, m.module().jucys_murphy(i));
    }
}

#[test]
fn two_variable_u_matrices() {
    for k in [q(5, 3), s(-2), s(1)] {
        let m = sm(2, k.clone(), &[2]);
        let us = m.u_matrices(1).unwrap();
        let k1 = &k + &Scalar::one();
        let u1 = Matrix::from_rows(vec![vec![k1.clone(), s(-1)], vec![s(0), s(0)]]);
        let u2 = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(0), k1.clone()]]);
        assert_eq!(*us[0], u1);
        assert_eq!(*us[1], u2);
        let spec = weights(&m.weight_spectrum(1).unwrap());
        let mut expect = vec![(vec![k1.clone(), s(0)], 1), (vec![s(0), k1.clone()], 1)];
        expect.sort();
        assert_eq!(spec, expect);
    }
}

#[test]
fn trivial_module_matches_dunkl_operators() {
    let k = q(-3, 4);
    let m = sm(3, k.clone(), &[3]);
    let params = m.params().clone();
    for d in 1..=3usize {
        let src = m.monomials(d);
        let dst = m.monomials(d - 1);
        for i in 0..3 {
            let y = m.standard_action(&Generator::Y(i), d).unwrap();
            for (c, mono) in src.iter().enumerate() {
                let f = Poly::monomial(mono.clone(), Scalar::one(), PolyContext::Polynomial);
                let g = dunkl_y(&params, i, &f).unwrap();
                for (r, target) in dst.iter().enumerate() {
                    assert_eq!(y[(r, c)], g.coeff(target));
                }
            }
        }
    }
}

#[test]
fn degree_zero_spectra_are_contents() {
    for n in 2..=4 {
        for l in Partition::all(n) {
            let m = StandardModule::with(n, q(7, 2), l.clone()).unwrap();
            let spec = m.weight_spectrum(0).unwrap();
            let mut expect: BTreeMap<Vec<Scalar>, usize> = BTreeMap::new();
            for t in m.module().tableaux() {
                *expect
                    .entry((0..n).map(|i| Scalar::from(t.content(i))).collect())
                    .or_default() += 1;
            }
            assert_eq!(weights(&spec), expect.into_iter().collect::<Vec<_>>());
        }
    }
    let m = sm(4, s(1), &[4]);
    assert_eq!(
        weights(&m.weight_spectrum(0).unwrap()),
        vec![(vec![s(0), s(1), s(2), s(3)], 1)]
    );
}

#[test]
fn spectra_obey_weight_sum_rule() {
    for l in Partition::all(3) {
        for k in [s(-2), q(5, 3), s(3)] {
            let m = StandardModule::with(3, k.clone(), l.clone()).unwrap();
            for d in 0..=3 {
                let spec = m.weight_spectrum(d).unwrap();
                let total: usize = spec.iter().map(|w| w.multiplicity).sum();
                assert_eq!(total, m.dim(d));
                let expect = &(&k * &Scalar::from(d)) + &Scalar::from(l.content_sum());
                for w in spec {
                    assert_eq!(w.weight.iter().sum::<Scalar>(), expect);
                }
            }
        }
    }
}

#[test]
fn singular_vectors_and_gram() {
    let m = sm(2, s(-2), &[2]);
    let sv = m.singular_vectors(1).unwrap();
    assert_eq!(sv.len(), 1);
    assert_eq!(&sv[0][0] + &sv[0][1], Scalar::zero());
    assert!(!sv[0][0].is_zero());
    let g = m.contravariant_gram(1).unwrap();
    assert_eq!(g.rank(), 1);
    assert!(is_zero_mul(&g, &sv[0]));
    assert_eq!(m.simple_quotient_dims(1).unwrap(), vec![1, 1]);

    let m = sm(2, q(5, 3), &[2]);
    for d in 1..=6 {
        assert!(m.singular_vectors(d).unwrap().is_empty());
    }
    for d in 0..=4 {
        assert!(!m.contravariant_gram(d).unwrap().det().is_zero());
    }
    assert_eq!(m.simple_quotient_dims(4).unwrap(), vec![1, 2, 3, 4, 5]);
    assert!(m.singular_vectors(0).is_err());
}

fn is_zero_mul(g: &Matrix, v: &[Scalar]) -> bool {
    g.mul_vec(v).iter().all(Scalar::is_zero)
}

#[test]
fn gram_is_symmetric_with_singular_vectors_in_radical() {
    for l in Partition::all(3) {
        for k in [s(-1), s(2), q(-1, 3), q(1, 2)] {
            let m = StandardModule::with(3, k, l.clone()).unwrap();
            let g0 = m.contravariant_gram(0).unwrap();
            assert_eq!(g0, m.module().form_matrix());
            for d in 1..=3 {
                let g = m.contravariant_gram(d).unwrap();
                assert!(g.is_symmetric(), "{l} d={d}");
                for v in m.singular_vectors(d).unwrap() {
                    assert!(is_zero_mul(&g, &v));
                }
            }
        }
    }
}

#[test]
fn diagonalizability_examples() {
    for l in Partition::all(3) {
        assert!(StandardModule::with(3, s(2), l)
            .unwrap()
            .is_u_diagonalizable(0, Piece::Simple)
            .unwrap());
    }
    assert!(sm(2, q(5, 3), &[2])
        .is_u_diagonalizable(1, Piece::Standard)
        .unwrap());
    let bad = sm(2, s(-1), &[2]);
    assert!(!bad.is_u_diagonalizable(1, Piece::Standard).unwrap());
}

#[test]
fn predicate_examples() {
    let k1 = KappaSpec::Rational(s(1));
    let out = classify(2, &k1).unwrap();
    assert_eq!(
        out.iter()
            .map(|e| (e.lambda.to_string(), e.in_oss))
            .collect::<Vec<_>>(),
        vec![("[2]".to_string(), true), ("[1,1]".to_string(), false)]
    );
    assert_eq!(out[0].witness, Some(0));
    assert_eq!(out[1].witness, Some(-1));
    let e = oss_predicate(&part(&[2, 1]), &KappaSpec::Rational(s(3))).unwrap();
    assert_eq!((e.in_oss, e.witness), (true, Some(0)));
    assert!(classify(4, &KappaSpec::Irrational)
        .unwrap()
        .iter()
        .all(|e| e.in_oss));
    assert!(oss_predicate(&part(&[2]), &KappaSpec::Rational(s(0))).is_err());
    // κ = −1: (1,1) is in exactly because its conjugate (2) is in for κ = 1
    let neg = classify(2, &KappaSpec::Rational(s(-1))).unwrap();
    assert_eq!(
        neg.iter().map(|e| e.in_oss).collect::<Vec<_>>(),
        vec![false, true]
    );
    // the numerator is what counts
    let e = oss_predicate(&part(&[1, 1]), &KappaSpec::Rational(q(2, 7))).unwrap();
    assert_eq!(e.witness, Some(0));
    assert_eq!(
        "irrational".parse::<KappaSpec>().unwrap(),
        KappaSpec::Irrational
    );
}

#[test]
fn pi_shift_examples() {
    let k = q(3, 5);
    let z = vec![&k + &Scalar::one(), s(0)];
    assert_eq!(
        pi_weight_shift(&z, &k),
        vec![k.clone(), &k + &Scalar::one()]
    );
    assert_eq!(pi_weight_shift(&[s(0), s(1)], &s(1)), vec![s(2), s(0)]);
    let z = vec![s(4), q(1, 2), s(-3), s(0)];
    assert_eq!(pi_weight_shift_inv(&pi_weight_shift(&z, &k), &k), z);
    let mut w = z.clone();
    for _ in 0..4 {
        w = pi_weight_shift(&w, &k);
    }
    assert_eq!(w, z.iter().map(|c| c + &k).collect::<Vec<_>>());
}

#[test]
fn induced_slices() {
    let k = q(5, 3);
    let m = sm(2, k.clone(), &[2]);
    let data = induced_weight_spectrum(&m, 1, -1, 1).unwrap();
    assert!(data.is_shift_closed());
    assert!(data.n_fold_shift_adds_kappa());
    let zero = data.slices.iter().find(|sl| sl.k == 0).unwrap();
    let base: Vec<WeightMultiplicity> = data.base.iter().flatten().cloned().collect();
    let mut sorted = base.clone();
    sorted.sort();
    assert_eq!(zero.weights, sorted);
    let k1 = &k + &Scalar::one();
    let mut expect = vec![
        vec![s(0), s(1)],
        vec![k1.clone(), s(0)],
        vec![s(0), k1.clone()],
    ];
    expect.sort();
    assert_eq!(
        zero.weights
            .iter()
            .map(|w| w.weight.clone())
            .collect::<Vec<_>>(),
        expect
    );
    let plus: Vec<Vec<Scalar>> = data.slices[2]
        .weights
        .iter()
        .map(|w| w.weight.clone())
        .collect();
    assert!(plus.contains(&vec![k.clone(), k1.clone()]));
    assert!(induced_weight_spectrum(&m, 1, 2, 1).is_err());
}

#[test]
fn jack_examples() {
    for n in 2..=3 {
        let p = AlgebraParams::new(n, q(5, 3)).unwrap();
        let j = jack_polynomial(&p, &vec![0; n]).unwrap();
        assert_eq!(j.to_string(), "1");
        assert_eq!(j.weight, (0..n).map(Scalar::from).collect::<Vec<_>>());
    }
    let k = q(5, 3);
    let p = AlgebraParams::new(2, k.clone()).unwrap();
    let k1 = &k + &Scalar::one();
    let j = jack_polynomial(&p, &[1, 0]).unwrap();
    assert_eq!(j.to_string(), "x1");
    assert_eq!(j.weight, vec![k1.clone(), s(0)]);
    let j = jack_polynomial(&p, &[0, 1]).unwrap();
    let expect = Poly::parse("x2", 2)
        .unwrap()
        .add(&Poly::parse("x1", 2).unwrap().scale(&k1.recip()))
        .unwrap();
    assert_eq!(j.poly, expect);
    assert_eq!(j.weight, vec![s(0), k1]);
    let p2 = AlgebraParams::new(2, s(2)).unwrap();
    let j = jack_polynomial(&p2, &[0, 1]).unwrap();
    assert_eq!(j.to_string(), "x2 + 1/3*x1");
    assert_eq!(j.weight, vec![s(0), s(3)]);
    let degenerate = AlgebraParams::new(2, s(-1)).unwrap();
    assert!(matches!(
        jack_polynomial(&degenerate, &[0, 1]),
        Err(Error::DegenerateParameter(_))
    ));
}

#[test]
fn jack_order_is_canonical() {
    let names: Vec<String> = jack_order(2, 2)
        .into_iter()
        .map(|m| Poly::monomial(m, Scalar::one(), PolyContext::Polynomial).to_string())
        .collect();
    assert_eq!(names, vec!["x1*x2", "x1^2", "x2^2"]);
}
