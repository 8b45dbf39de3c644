//! The embedding `ι: H_κ → H̃_κ`, its inverse `ȷ` on the localization, the
//! family `ι_{a,b}` on the degenerate affine Hecke algebra, and the sign twist
//! `σ: H̃_κ → H̃_{-κ}`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::Monomial;
use crate::pbw::relations::{self, check_in, Gen, RelationOutcome};
use crate::pbw::{
    AlgebraParams, Elem, Flavor, LocRatElem, LocalizedAlgebra, RatElem, RationalAlgebra,
    TrigAlgebra, TrigElem, Word,
};
use crate::scalar::Scalar;

/// Image of `c · x^α w d^β` as `c · X(α) · w · Π D_i^{β_i}`.
fn substitute<F: Flavor, G: Flavor>(
    tgt: &crate::pbw::Algebra<G>,
    e: &Elem<F>,
    d_images: &[Elem<G>],
    x_image: &dyn Fn(&Monomial) -> Elem<G>,
) -> Elem<G> {
    let mut acc = tgt.zero();
    for (w, c) in e.terms() {
        let mut img = tgt.mul(&x_image(&w.x), &tgt.perm(w.w.clone()));
        for (i, &b) in w.d.exps().iter().enumerate() {
            for _ in 0..b {
                img = tgt.mul(&img, &d_images[i]);
            }
        }
        acc = acc.add(&img.scale(c));
    }
    acc
}

fn x_identity<G: Flavor>(m: &Monomial) -> Elem<G> {
    Elem::x_mono(m.clone())
}

/// `ι(y_i) = x_i^{-1}(u_i - Σ_{j<i} s_ji)`.
pub fn iota_y(tgt: &TrigAlgebra, i: usize) -> TrigElem {
    let inner = (0..i).fold(tgt.d(i), |acc, j| acc.sub(&tgt.s_ij(j, i)));
    tgt.mul(&tgt.x_inv(i), &inner)
}

/// `ȷ_a(u_i) = a x_i + x_i y_i + Σ_{j<i} s_ji`.
pub fn jmath_a_u(tgt: &LocalizedAlgebra, a: &Scalar, i: usize) -> LocRatElem {
    crate::pbw::fuzz::jmath_u(tgt, i).add(&tgt.x(i).scale(a))
}

/// `ι_{a,b}(u_i) = a x_i + b y_i + x_i y_i + Σ_{j<i} s_ji`.
pub fn iota_ab_u(tgt: &RationalAlgebra, a: &Scalar, b: &Scalar, i: usize) -> RatElem {
    let base = (0..i).fold(tgt.mul(&tgt.x(i), &tgt.d(i)), |acc, j| {
        acc.add(&tgt.s_ij(j, i))
    });
    base.add(&tgt.x(i).scale(a)).add(&tgt.d(i).scale(b))
}

pub fn iota(tgt: &TrigAlgebra, a: &RatElem) -> TrigElem {
    let ys: Vec<TrigElem> = (0..tgt.n()).map(|i| iota_y(tgt, i)).collect();
    substitute(tgt, a, &ys, &x_identity)
}

/// `ι` extended to the localization (`x_i^{-1} ↦ x_i^{-1}`).
pub fn iota_localized(tgt: &TrigAlgebra, a: &LocRatElem) -> TrigElem {
    let ys: Vec<TrigElem> = (0..tgt.n()).map(|i| iota_y(tgt, i)).collect();
    substitute(tgt, a, &ys, &x_identity)
}

pub fn jmath(tgt: &LocalizedAlgebra, a: &TrigElem) -> LocRatElem {
    jmath_a(tgt, &Scalar::zero(), a)
}

/// The isomorphism `ȷ_a` extending `ι_{a,0}` by `x_i ↦ x_i`.
pub fn jmath_a(tgt: &LocalizedAlgebra, a: &Scalar, e: &TrigElem) -> LocRatElem {
    let us: Vec<LocRatElem> = (0..tgt.n()).map(|i| jmath_a_u(tgt, a, i)).collect();
    substitute(tgt, e, &us, &x_identity)
}

/// `ι_{a,b}` on an element with no `x` part.
pub fn iota_ab(tgt: &RationalAlgebra, a: &Scalar, b: &Scalar, e: &TrigElem) -> Result<RatElem> {
    if e.terms().any(|(w, _)| !w.x.is_one()) {
        return Err(Error::InvalidArgument(format!(
            "{e} has an x part and is not in the degenerate affine Hecke algebra"
        )));
    }
    let us: Vec<RatElem> = (0..tgt.n()).map(|i| iota_ab_u(tgt, a, b, i)).collect();
    Ok(substitute(tgt, e, &us, &|_| tgt.one()))
}

/// Sign of `σ` on the word `x^α w u^β`: `(-1)^{(n-1)|α| + ℓ(w) + |β|}`.
pub fn sigma_sign(w: &Word) -> Scalar {
    let n = w.n() as i64;
    let e = (n - 1) * w.x.degree() + w.w.length() as i64 + w.d.degree();
    Scalar::from(if e.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// `σ(a)`, to be read in `H̃_{-κ}`.
pub fn sigma(a: &TrigElem) -> TrigElem {
    a.map_coeffs(|w, c| c * &sigma_sign(w))
}

/// The restriction of `σ` to `H_κ → H_{-κ}`, by the word sign
/// `(-1)^{(n-1)|α| + ℓ(w) + n|β|}`.
pub fn sigma_rational(a: &RatElem) -> RatElem {
    a.map_coeffs(|w, c| {
        let n = w.n() as i64;
        let e = (n - 1) * w.x.degree() + w.w.length() as i64 + n * w.d.degree();
        if e.rem_euclid(2) == 0 {
            c.clone()
        } else {
            -c
        }
    })
}

/// Which map to check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapId {
    Iota,
    Jmath,
    JmathA(Scalar),
    IotaAb(Scalar, Scalar),
    Sigma,
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapId::Iota => f.write_str("iota"),
            MapId::Jmath => f.write_str("jmath"),
            MapId::JmathA(a) => write!(f, "jmath-a(a={a})"),
            MapId::IotaAb(a, b) => write!(f, "iota-ab(a={a},b={b})"),
            MapId::Sigma => f.write_str("sigma"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismReport {
    pub map: String,
    pub n: usize,
    pub kappa: String,
    pub relations: Vec<RelationOutcome>,
    pub valid: bool,
}

impl MorphismReport {
    pub fn first_failure(&self) -> Option<&RelationOutcome> {
        self.relations.iter().find(|r| !r.passed)
    }
}

fn perm_image<G: Flavor>(alg: &crate::pbw::Algebra<G>, g: &Gen) -> Option<Elem<G>> {
    match g {
        Gen::S(k) => Some(alg.s(*k)),
        Gen::T(i, j) => Some(alg.s_ij(*i, *j)),
        _ => None,
    }
}

/// Pushes every defining relation of the source algebra through `map` and
/// compares the two sides in the target's normal form.
pub fn homomorphism_check(map: &MapId, params: &AlgebraParams) -> Result<MorphismReport> {
    let n = params.n;
    let kappa = &params.kappa;
    let outcomes = match map {
        MapId::Iota => {
            let tgt = TrigAlgebra::new(params.clone());
            let ys: Vec<TrigElem> = (0..n).map(|i| iota_y(&tgt, i)).collect();
            let image = |g: &Gen| -> Result<TrigElem> {
                Ok(match g {
                    Gen::X(i) => tgt.x(*i),
                    Gen::D(i) => ys[*i].clone(),
                    _ => perm_image(&tgt, g).ok_or_else(|| unexpected(g))?,
                })
            };
            check_in(&tgt, &relations::rational(n, kappa), &image)?
        }
        MapId::Jmath | MapId::JmathA(_) => {
            let a = match map {
                MapId::JmathA(a) => a.clone(),
                _ => Scalar::zero(),
            };
            let tgt = LocalizedAlgebra::new(params.clone());
            let trig = TrigAlgebra::new(params.clone());
            let us: Vec<LocRatElem> = (0..n).map(|i| jmath_a_u(&tgt, &a, i)).collect();
            let image = |g: &Gen| -> Result<LocRatElem> {
                Ok(match g {
                    Gen::X(i) => tgt.x(*i),
                    Gen::XInv(i) => tgt.x_inv(*i),
                    Gen::D(i) => us[*i].clone(),
                    Gen::S0 => trig.s0().recast(),
                    Gen::Pi => trig.pi().recast(),
                    Gen::PiInv => trig.pi_inv().recast(),
                    _ => perm_image(&tgt, g).ok_or_else(|| unexpected(g))?,
                })
            };
            let mut rels = relations::trigonometric(n, kappa);
            rels.extend(relations::pi_presentation(n, kappa));
            check_in(&tgt, &rels, &image)?
        }
        MapId::IotaAb(a, b) => {
            let tgt = RationalAlgebra::new(params.clone());
            let us: Vec<RatElem> = (0..n).map(|i| iota_ab_u(&tgt, a, b, i)).collect();
            let image = |g: &Gen| -> Result<RatElem> {
                Ok(match g {
                    Gen::D(i) => us[*i].clone(),
                    _ => perm_image(&tgt, g).ok_or_else(|| unexpected(g))?,
                })
            };
            check_in(&tgt, &relations::affine_hecke(n), &image)?
        }
        MapId::Sigma => {
            let tgt = TrigAlgebra::new(params.negated());
            let src = TrigAlgebra::new(params.clone());
            let image = |g: &Gen| -> Result<TrigElem> {
                let e = match g {
                    Gen::X(i) => src.x(*i),
                    Gen::XInv(i) => src.x_inv(*i),
                    Gen::D(i) => src.d(*i),
                    Gen::S0 => src.s0(),
                    Gen::Pi => src.pi(),
                    Gen::PiInv => src.pi_inv(),
                    _ => perm_image(&src, g).ok_or_else(|| unexpected(g))?,
                };
                Ok(sigma(&e))
            };
            let mut rels = relations::trigonometric(n, kappa);
            rels.extend(relations::pi_presentation(n, kappa));
            check_in(&tgt, &rels, &image)?
        }
    };
    let valid = outcomes.iter().all(|o| o.passed);
    Ok(MorphismReport {
        map: map.to_string(),
        n,
        kappa: kappa.to_string(),
        relations: outcomes,
        valid,
    })
}

fn unexpected(g: &Gen) -> Error {
    Error::Internal(format!("generator {g} is not in the source algebra"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::fuzz::random_elem;
    use crate::pbw::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(a: i64, b: i64) -> Scalar {
        Scalar::ratio(a, b)
    }

    #[test]
    fn iota_generators() {
        let k = q(3, 2);
        let t = TrigAlgebra::with(3, k.clone()).unwrap();
        let r = RationalAlgebra::with(3, k).unwrap();
        assert_eq!(iota(&t, &r.d(0)), t.parse("x1^-1*u1").unwrap());
        assert_eq!(iota(&t, &r.x(2)), t.x(2));
        assert_eq!(iota(&t, &r.s(1)), t.s(1));
        let y2 = iota(&t, &r.d(1));
        assert_eq!(y2, t.parse("x2^-1*u2 - x2^-1*s12").unwrap());
    }

    #[test]
    fn jmath_generators() {
        let l = LocalizedAlgebra::with(2, q(-1, 2)).unwrap();
        let t = TrigAlgebra::with(2, q(-1, 2)).unwrap();
        assert_eq!(jmath(&l, &t.d(0)), l.parse("x1*y1").unwrap());
        assert_eq!(jmath(&l, &t.d(1)), l.parse("x2*y2 + s12").unwrap());
        let y1 = iota(&t, &RationalAlgebra::with(2, q(-1, 2)).unwrap().d(0));
        assert_eq!(jmath(&l, &y1), l.d(0));
    }

    #[test]
    fn iota_ab_examples() {
        let r = RationalAlgebra::with(2, q(4, 3)).unwrap();
        let t = TrigAlgebra::with(2, q(4, 3)).unwrap();
        let l = LocalizedAlgebra::with(2, q(4, 3)).unwrap();
        let e = t.parse("s1*u1 - u2*s1 + 1").unwrap();
        assert!(e.is_zero());
        // the same relation pushed through ι_{1,0} factor by factor
        let (a, b) = (Scalar::one(), Scalar::zero());
        let lhs = r.mul(&r.s(0), &iota_ab_u(&r, &a, &b, 0));
        let rhs = r.mul(&iota_ab_u(&r, &a, &b, 1), &r.s(0)).sub(&r.one());
        assert_eq!(lhs, rhs);
        let h = t.parse("u1*u2*s1 + 2*u2").unwrap();
        let zero = Scalar::zero();
        assert_eq!(
            iota_ab(&r, &zero, &zero, &h).unwrap().to_localized(),
            jmath(&l, &h)
        );
        assert!(iota_ab(&r, &a, &b, &t.x(0)).is_err());
    }

    #[test]
    fn sigma_examples() {
        let t = TrigAlgebra::with(4, Scalar::one()).unwrap();
        assert_eq!(sigma(&t.s(0)), t.s(0).neg());
        assert_eq!(sigma(&t.s0()), t.s0().neg());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a: TrigElem = random_elem(4, 2, 3, &mut rng);
            assert_eq!(sigma(&sigma(&a)), a);
        }
        let s14 = t.s_ij(0, 3);
        assert_eq!(sigma(&s14), s14.neg());
    }

    #[test]
    fn homomorphism_checks_pass() {
        for n in 2..=3 {
            let p = AlgebraParams::new(n, q(5, 3)).unwrap();
            for map in [
                MapId::Iota,
                MapId::Jmath,
                MapId::JmathA(q(2, 1)),
                MapId::IotaAb(q(2, 1), q(3, 1)),
                MapId::Sigma,
            ] {
                let rep = homomorphism_check(&map, &p).unwrap();
                assert!(rep.valid, "{map}: {:?}", rep.first_failure());
            }
        }
    }

    #[test]
    fn round_trips_and_sigma_restriction() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let k = q(-7, 3);
        let t = TrigAlgebra::with(3, k.clone()).unwrap();
        let l = LocalizedAlgebra::with(3, k.clone()).unwrap();
        let l_neg = LocalizedAlgebra::with(3, -&k).unwrap();
        let t_neg = TrigAlgebra::with(3, -&k).unwrap();
        for _ in 0..10 {
            let a: RatElem = random_elem::<Rational, _>(3, 2, 2, &mut rng);
            let ia = iota(&t, &a);
            assert_eq!(jmath(&l, &ia), a.to_localized());
            let back = jmath(&l_neg, &sigma(&ia));
            assert!(back.is_x_polynomial());
            assert_eq!(back, sigma_rational(&a).to_localized());
            let b: TrigElem = random_elem(3, 2, 2, &mut rng);
            assert_eq!(iota_localized(&t, &jmath(&l, &b)), b);
            // σ is multiplicative into H̃_{-κ}
            assert_eq!(sigma(&t.mul(&ia, &b)), t_neg.mul(&sigma(&ia), &sigma(&b)));
        }
    }
}
