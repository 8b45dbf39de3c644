//! The polynomial representation of `H_κ`: Dunkl operators `Y_i`, the
//! trigonometric operators `U_i = x_i Y_i + Σ_{j<i} s_ji`, and application of
//! arbitrary normal-form elements.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Poly, PolyContext};
use crate::pbw::relations::{self, Gen, RelationOutcome};
use crate::pbw::{AlgebraParams, RatElem, RationalAlgebra};
use crate::scalar::Scalar;
use crate::weyl::Perm;

fn require_polynomial(f: &Poly, n: usize) -> Result<()> {
    if f.n() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: f.n(),
        });
    }
    if f.context() != PolyContext::Polynomial {
        return Err(Error::ContextMismatch(
            "Dunkl operators act on polynomials".into(),
        ));
    }
    Ok(())
}

/// `Y_i f = κ ∂_i f + Σ_{j≠i} (f - s_ij f)/(x_i - x_j)` (0-based `i`).
pub fn dunkl_y(params: &AlgebraParams, i: usize, f: &Poly) -> Result<Poly> {
    require_polynomial(f, params.n)?;
    let mut out = f.partial(i).scale(&params.kappa);
    for j in (0..params.n).filter(|&j| j != i) {
        out = out.add(&f.divided_difference(i, j)?)?;
    }
    Ok(out)
}

/// `U_i f = x_i Y_i f + Σ_{j<i} s_ji f`.
pub fn dunkl_u(params: &AlgebraParams, i: usize, f: &Poly) -> Result<Poly> {
    let y = dunkl_y(params, i, f)?;
    let mut out = y.mul_monomial(&Monomial::unit(params.n, i), &Scalar::one());
    for j in 0..i {
        out = out.add(&f.perm_act(&Perm::transposition(params.n, j, i)))?;
    }
    Ok(out)
}

/// Applies `x^α w y^β` word by word: the `y` part first, then `w`, then `x^α`.
pub fn apply_rat(params: &AlgebraParams, a: &RatElem, f: &Poly) -> Result<Poly> {
    require_polynomial(f, params.n)?;
    let mut out = Poly::zero(params.n, PolyContext::Polynomial);
    for (w, c) in a.terms() {
        let mut g = f.clone();
        for (i, &b) in w.d.exps().iter().enumerate() {
            for _ in 0..b {
                g = dunkl_y(params, i, &g)?;
            }
        }
        let g = g.perm_act(&w.w).mul_monomial(&w.x, c);
        out = out.add(&g)?;
    }
    Ok(out)
}

/// A named operator on `F[x]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Operator {
    Y(usize),
    U(usize),
    X(usize),
    Perm(Perm),
    Elem(RatElem),
}

impl Operator {
    pub fn apply(&self, params: &AlgebraParams, f: &Poly) -> Result<Poly> {
        require_polynomial(f, params.n)?;
        match self {
            Operator::Y(i) => dunkl_y(params, *i, f),
            Operator::U(i) => dunkl_u(params, *i, f),
            Operator::X(i) => Ok(f.mul_monomial(&Monomial::unit(params.n, *i), &Scalar::one())),
            Operator::Perm(w) => Ok(f.perm_act(w)),
            Operator::Elem(a) => apply_rat(params, a, f),
        }
    }

    /// `Y3`, `U1`, `X2`, or any element expression of `H_κ`.
    pub fn parse(src: &str, alg: &RationalAlgebra) -> Result<Operator> {
        let t = src.trim();
        if let Some((head, idx)) = crate::text::split_ident(t) {
            if matches!(head, "Y" | "U" | "X") {
                let i = usize::from_str(idx).map_err(|_| Error::Parse(t.into()))?;
                if i == 0 || i > alg.n() {
                    return Err(Error::Parse(format!(
                        "operator index out of range in {t:?}"
                    )));
                }
                return Ok(match head {
                    "Y" => Operator::Y(i - 1),
                    "U" => Operator::U(i - 1),
                    _ => Operator::X(i - 1),
                });
            }
        }
        Ok(Operator::Elem(alg.parse(t)?))
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Y(i) => write!(f, "Y{}", i + 1),
            Operator::U(i) => write!(f, "U{}", i + 1),
            Operator::X(i) => write!(f, "X{}", i + 1),
            Operator::Perm(w) => write!(f, "{w}"),
            Operator::Elem(a) => write!(f, "{a}"),
        }
    }
}

/// All monomials of degree at most `dmax`.
pub fn monomial_basis(n: usize, dmax: u32) -> Vec<Poly> {
    (0..=dmax)
        .flat_map(|d| Monomial::all_of_degree(n, d))
        .map(|m| Poly::monomial(m, Scalar::one(), PolyContext::Polynomial))
        .collect()
}

/// Checks every defining relation of `H_κ` as an identity of operators on
/// the monomials of degree at most `dmax`.
pub fn representation_check(params: &AlgebraParams, dmax: u32) -> Result<Vec<RelationOutcome>> {
    let n = params.n;
    let zero = Poly::zero(n, PolyContext::Polynomial);
    let act = |g: &Gen, f: &Poly| -> Result<Poly> {
        match g {
            Gen::X(i) => Operator::X(*i).apply(params, f),
            Gen::D(i) => dunkl_y(params, *i, f),
            Gen::S(k) => Ok(f.perm_act(&Perm::simple(n, *k))),
            Gen::T(i, j) => Ok(f.perm_act(&Perm::transposition(n, *i, *j))),
            other => Err(Error::Internal(format!("{other} does not act on F[x]"))),
        }
    };
    let add = |a: &Poly, b: &Poly| a.add(b);
    let scale = |c: &Scalar, a: &Poly| a.scale(c);
    let basis = monomial_basis(n, dmax);
    relations::rational(n, &params.kappa)
        .iter()
        .map(|r| {
            let diff = r.difference();
            for f in &basis {
                let v = diff.apply(f, &act, &add, &scale, &zero)?;
                if !v.is_zero() {
                    return Ok(RelationOutcome {
                        name: r.name.clone(),
                        passed: false,
                        counterexample: Some(format!("on {f}: {v}")),
                    });
                }
            }
            Ok(RelationOutcome {
                name: r.name.clone(),
                passed: true,
                counterexample: None,
            })
        })
        .collect()
}
