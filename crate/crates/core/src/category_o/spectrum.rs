//! Joint generalized `u`-weights and `F[u]`-semisimplicity of graded pieces.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{jack_cmp, StandardModule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `(ζ_1,…,ζ_n)`.
pub fn weight_string(w: &[Scalar]) -> String {
    let parts: Vec<String> = w.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WeightMultiplicity {
    pub weight: Vec<Scalar>,
    pub multiplicity: usize,
}

/// Which graded piece a test runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    Standard,
    Simple,
}

/// Joint generalized eigenvalues of pairwise commuting square matrices, with
/// the dimensions of the joint generalized eigenspaces.
pub fn joint_spectrum(mats: &[Matrix]) -> Result<Vec<WeightMultiplicity>> {
    fn rec(
        mats: &[Matrix],
        prefix: &mut Vec<Scalar>,
        out: &mut BTreeMap<Vec<Scalar>, usize>,
    ) -> Result<()> {
        let Some((head, rest)) = mats.split_first() else {
            return Ok(());
        };
        for (c, m) in head.charpoly().split_rational()? {
            let kernel = head.shift(&c).pow(m as u32).kernel();
            if kernel.len() != m {
                return Err(Error::Internal(format!(
                    "generalized eigenspace of {c} has wrong dimension"
                )));
            }
            let basis = Matrix::from_columns(head.rows(), &kernel);
            let restricted: Vec<Matrix> = rest
                .iter()
                .map(|a| {
                    basis
                        .solve_columns(&a.mul(&basis))
                        .ok_or_else(|| Error::Internal("matrices do not commute".into()))
                })
                .collect::<Result<_>>()?;
            prefix.push(c);
            if restricted.is_empty() {
                *out.entry(prefix.clone()).or_default() += m;
            } else {
                rec(&restricted, prefix, out)?;
            }
            prefix.pop();
        }
        Ok(())
    }
    let mut out = BTreeMap::new();
    if mats.first().is_some_and(|m| m.rows() > 0) {
        rec(mats, &mut Vec::new(), &mut out)?;
    }
    Ok(out
        .into_iter()
        .map(|(weight, multiplicity)| WeightMultiplicity {
            weight,
            multiplicity,
        })
        .collect())
}

fn merge(into: &mut BTreeMap<Vec<Scalar>, usize>, part: Vec<WeightMultiplicity>) {
    for w in part {
        *into.entry(w.weight).or_default() += w.multiplicity;
    }
}

impl StandardModule {
    /// Monomial positions sorted lowest-first in the Jack order.
    pub(super) fn jack_positions(&self, d: usize) -> Vec<usize> {
        let monos = self.monomials(d);
        let mut idx: Vec<usize> = (0..monos.len()).collect();
        idx.sort_by(|&a, &b| jack_cmp(&monos[a], &monos[b]));
        idx
    }

    /// Whether every `u_i` is block upper triangular for the Jack order with
    /// one `dim E_λ` block per monomial.
    pub(super) fn is_jack_triangular(&self, d: usize, us: &[&Matrix]) -> bool {
        let e = self.module().dim();
        let order = self.jack_positions(d);
        let mut rank = vec![0; order.len()];
        for (p, &a) in order.iter().enumerate() {
            rank[a] = p;
        }
        us.iter().all(|u| {
            (0..u.rows())
                .all(|r| (0..u.cols()).all(|c| u[(r, c)].is_zero() || rank[r / e] <= rank[c / e]))
        })
    }

    /// Joint generalized weights of `u_1..u_n` on `Δ_d`, sorted. Every weight
    /// is checked against `Σζ_i = κd + Σ_b content(b)`.
    pub fn weight_spectrum(&self, d: usize) -> Result<Vec<WeightMultiplicity>> {
        let us = self.u_matrices(d)?;
        let refs: Vec<&Matrix> = us.iter().map(|u| u.as_ref()).collect();
        let e = self.module().dim();
        let mut acc = BTreeMap::new();
        if self.is_jack_triangular(d, &refs) {
            for a in 0..self.monomials(d).len() {
                let idx: Vec<usize> = (a * e..(a + 1) * e).collect();
                let blocks: Vec<Matrix> = refs
                    .iter()
                    .map(|u| u.select_rows(&idx).select_columns(&idx))
                    .collect();
                merge(&mut acc, joint_spectrum(&blocks)?);
            }
        } else {
            let full: Vec<Matrix> = refs.iter().map(|u| (*u).clone()).collect();
            merge(&mut acc, joint_spectrum(&full)?);
        }
        let expected =
            &(self.kappa() * &Scalar::from(d)) + &Scalar::from(self.lambda().content_sum());
        let out: Vec<WeightMultiplicity> = acc
            .into_iter()
            .map(|(weight, multiplicity)| WeightMultiplicity {
                weight,
                multiplicity,
            })
            .collect();
        for w in &out {
            let sum: Scalar = w.weight.iter().sum();
            if sum != expected {
                return Err(Error::Internal(format!(
                    "weight {} violates the weight-sum rule in degree {d}",
                    weight_string(&w.weight)
                )));
            }
        }
        let total: usize = out.iter().map(|w| w.multiplicity).sum();
        if total != self.dim(d) {
            return Err(Error::Internal(format!(
                "spectrum of degree {d} misses {} dimensions",
                self.dim(d) - total
            )));
        }
        Ok(out)
    }

    /// Whether `u_1..u_n` act semisimply on `Δ_d` or on `L(λ)_d`: with `S_i`
    /// the distinct eigenvalues of `u_i` on `Δ_d`, test that
    /// `Π_{c∈S_i}(u_i − c)` maps `Δ_d` into the radical. The radical is the
    /// kernel of the Gram matrix, so the test is `G·Π(u_i − c) = 0`.
    pub fn is_u_diagonalizable(&self, d: usize, piece: Piece) -> Result<bool> {
        let spectrum = self.weight_spectrum(d)?;
        let start = match piece {
            Piece::Standard => Matrix::identity(self.dim(d)),
            Piece::Simple => self.contravariant_gram(d)?,
        };
        if start.is_zero() {
            return Ok(true);
        }
        let us = self.u_matrices(d)?;
        for (i, u) in us.iter().enumerate() {
            let mut roots: Vec<&Scalar> = spectrum.iter().map(|w| &w.weight[i]).collect();
            roots.sort();
            roots.dedup();
            let mut m = start.clone();
            for c in roots {
                m = m.mul(&u.shift(c));
                if m.is_zero() {
                    break;
                }
            }
            if !m.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
