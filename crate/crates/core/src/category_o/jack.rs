//! Nonsymmetric Jack polynomials as joint eigenvectors of `U_1..U_n` on
//! `F[x]`, solved triangularly in the Jack order.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::StandardModule;
use crate::dunkl::dunkl_u;
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Poly, PolyContext};
use crate::pbw::AlgebraParams;
use crate::scalar::Scalar;
use crate::symgroup::Partition;

fn sorted_desc(m: &Monomial) -> Vec<i32> {
    let mut v = m.exps().to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `Less` means lower: smaller degree, then less dominant sorted exponent
/// vector (lexicographically), then, within an `S_n`-orbit, the
/// lexicographically larger composition. `U_i` is upper triangular for the
/// lowest-first ordering.
pub fn jack_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| sorted_desc(a).cmp(&sorted_desc(b)))
        .then_with(|| b.exps().cmp(a.exps()))
}

/// Monomials of degree `d`, lowest first.
pub fn jack_order(n: usize, d: u32) -> Vec<Monomial> {
    let mut v = Monomial::all_of_degree(n, d);
    v.sort_by(jack_cmp);
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct Jack {
    pub mu: Vec<u32>,
    #[serde(serialize_with = "ser_display")]
    pub poly: Poly,
    pub weight: Vec<Scalar>,
    /// Support order used for printing, leading monomial first.
    #[serde(skip)]
    pub order: Vec<Monomial>,
}

fn ser_display<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

impl Jack {
    /// Terms in decreasing Jack order.
    pub fn to_ordered_string(&self) -> String {
        self.poly.fmt_ordered(&self.order)
    }
}

impl fmt::Display for Jack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ordered_string())
    }
}

/// The monic joint `U`-eigenvector with leading monomial `x^μ`.
pub fn jack_polynomial(params: &AlgebraParams, mu: &[u32]) -> Result<Jack> {
    let n = params.n;
    if mu.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: mu.len(),
        });
    }
    let d = mu.iter().sum::<u32>() as usize;
    let sm = StandardModule::new(params.clone(), Partition::new(vec![n])?)?;
    let us = sm.u_matrices(d)?;
    let monos = sm.monomials(d);
    let refs: Vec<&_> = us.iter().map(|u| u.as_ref()).collect();
    if !sm.is_jack_triangular(d, &refs) {
        return Err(Error::Internal(format!(
            "U is not triangular in degree {d}"
        )));
    }
    let order = sm.jack_positions(d);
    let target = Monomial::new(mu.iter().map(|&e| e as i32).collect());
    let top = order
        .iter()
        .position(|&a| monos[a] == target)
        .ok_or_else(|| Error::Internal("leading monomial missing".into()))?;
    let head = order[top];
    let weight: Vec<Scalar> = us.iter().map(|u| u[(head, head)].clone()).collect();

    let mut coeff = vec![Scalar::zero(); monos.len()];
    coeff[head] = Scalar::one();
    for p in (0..top).rev() {
        let b = order[p];
        let mut solved = false;
        for (i, u) in us.iter().enumerate() {
            let pivot = &u[(b, b)] - &weight[i];
            if pivot.is_zero() {
                continue;
            }
            let rhs: Scalar = order[p + 1..=top]
                .iter()
                .map(|&g| &u[(b, g)] * &coeff[g])
                .sum();
            coeff[b] = -&rhs / &pivot;
            solved = true;
            break;
        }
        if !solved {
            return Err(Error::DegenerateParameter(format!(
                "κ = {}: no pivot at {} for μ = {mu:?}",
                params.kappa,
                Poly::monomial(monos[b].clone(), Scalar::one(), PolyContext::Polynomial)
            )));
        }
    }
    let poly = Poly::from_terms(n, PolyContext::Polynomial, monos.iter().cloned().zip(coeff));
    for (i, z) in weight.iter().enumerate() {
        if dunkl_u(params, i, &poly)? != poly.scale(z) {
            return Err(Error::DegenerateParameter(format!(
                "κ = {}: triangular solution for μ = {mu:?} is not a U{}-eigenvector",
                params.kappa,
                i + 1
            )));
        }
    }
    let mut print_order: Vec<Monomial> = order.iter().map(|&a| monos[a].clone()).collect();
    print_order.reverse();
    Ok(Jack {
        mu: mu.to_vec(),
        poly,
        weight,
        order: print_order,
    })
}
