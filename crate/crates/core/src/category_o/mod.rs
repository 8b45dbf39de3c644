//! Standard modules `Δ(λ) = F[x] ⊗ E_λ` over `H_κ` and their graded pieces.
//!
//! The degree-`d` piece has basis `x^α ⊗ e_T` for `|α| = d`, indexed
//! `a·dim(E_λ) + t` where `a` is the position of `α` in
//! [`Monomial::all_of_degree`]. Matrices act on columns.

mod classify;
mod jack;
mod spectrum;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use classify::{
    classify, coherence_check, induced_weight_spectrum, oss_predicate, pi_weight_shift,
    pi_weight_shift_inv, ClassificationEntry, CoherenceRow, InducedSlice, InducedWeightData,
    KappaSpec,
};
pub use jack::{jack_cmp, jack_order, jack_polynomial, Jack};
pub use spectrum::{joint_spectrum, weight_string, Piece, WeightMultiplicity};

use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Poly, PolyContext};
use crate::linalg::Matrix;
use crate::pbw::relations::{self, FreeExpr, Gen, RelationOutcome};
use crate::pbw::{AlgebraParams, Elem, RatElem, RationalAlgebra};
use crate::scalar::Scalar;
use crate::symgroup::{Partition, SnModule};
use crate::weyl::Perm;

/// The anti-involution `x_i ↔ y_i`, `w ↦ w^{-1}` on a free expression.
fn anti(e: &FreeExpr) -> FreeExpr {
    FreeExpr(
        e.0.iter()
            .map(|(c, word)| {
                let w = word
                    .iter()
                    .rev()
                    .map(|g| match g {
                        Gen::X(i) => Gen::D(*i),
                        Gen::D(i) => Gen::X(*i),
                        other => other.clone(),
                    })
                    .collect();
                (c.clone(), w)
            })
            .collect(),
    )
}

/// Checks that the anti-involution underlying the contravariant form sends
/// every defining relation of `H_κ` to an identity.
pub fn anti_involution_check(params: &AlgebraParams) -> Result<Vec<RelationOutcome>> {
    let alg = RationalAlgebra::new(params.clone());
    let image = relations::standard_image(&alg);
    relations::rational(params.n, &params.kappa)
        .iter()
        .map(|r| {
            let diff = anti(&r.difference()).eval_in(&alg, &image)?;
            Ok(RelationOutcome {
                name: r.name.clone(),
                passed: diff.is_zero(),
                counterexample: (!diff.is_zero()).then(|| diff.to_string()),
            })
        })
        .collect()
}

/// Generators whose action is tabulated per degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    X(usize),
    Y(usize),
    Perm(Perm),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Key {
    Gen(Generator),
    U(usize),
}

struct DegreeBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

pub struct StandardModule {
    alg: RationalAlgebra,
    lambda: Partition,
    module: SnModule,
    bases: Mutex<HashMap<usize, Arc<DegreeBasis>>>,
    actions: Mutex<HashMap<(Key, usize), Arc<Matrix>>>,
    perms: Mutex<HashMap<Perm, Arc<Matrix>>>,
    /// Per degree, the maps `y^α : Δ_d → Δ_0` in monomial order.
    lowering: Mutex<HashMap<usize, Arc<Vec<Matrix>>>>,
}

impl StandardModule {
    pub fn new(params: AlgebraParams, lambda: Partition) -> Result<Self> {
        if lambda.n() != params.n {
            return Err(Error::RankMismatch {
                expected: params.n,
                got: lambda.n(),
            });
        }
        Ok(StandardModule {
            module: SnModule::specht(&lambda),
            alg: RationalAlgebra::new(params),
            lambda,
            bases: Mutex::default(),
            actions: Mutex::default(),
            perms: Mutex::default(),
            lowering: Mutex::default(),
        })
    }

    pub fn with(n: usize, kappa: Scalar, lambda: Partition) -> Result<Self> {
        StandardModule::new(AlgebraParams::new(n, kappa)?, lambda)
    }

    pub fn params(&self) -> &AlgebraParams {
        self.alg.params()
    }

    pub fn n(&self) -> usize {
        self.alg.n()
    }

    pub fn kappa(&self) -> &Scalar {
        self.alg.kappa()
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn module(&self) -> &SnModule {
        &self.module
    }

    pub fn algebra(&self) -> &RationalAlgebra {
        &self.alg
    }

    fn basis(&self, d: usize) -> Arc<DegreeBasis> {
        if let Some(b) = self.bases.lock().unwrap().get(&d) {
            return b.clone();
        }
        let monomials = Monomial::all_of_degree(self.n(), d as u32);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let b = Arc::new(DegreeBasis { monomials, index });
        self.bases.lock().unwrap().entry(d).or_insert(b).clone()
    }

    pub fn monomials(&self, d: usize) -> Vec<Monomial> {
        self.basis(d).monomials.clone()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis(d).monomials.len() * self.module.dim()
    }

    /// `ρ(w)` on `E_λ`.
    pub fn rho(&self, w: &Perm) -> Arc<Matrix> {
        if let Some(m) = self.perms.lock().unwrap().get(w) {
            return m.clone();
        }
        let m = Arc::new(self.module.perm_matrix(w));
        self.perms
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert(m)
            .clone()
    }

    fn cached(
        &self,
        key: Key,
        d: usize,
        build: impl FnOnce() -> Result<Matrix>,
    ) -> Result<Arc<Matrix>> {
        if let Some(m) = self.actions.lock().unwrap().get(&(key.clone(), d)) {
            return Ok(m.clone());
        }
        let m = Arc::new(build()?);
        Ok(self
            .actions
            .lock()
            .unwrap()
            .entry((key, d))
            .or_insert(m)
            .clone())
    }

    /// Matrix of a generator from `Δ_d` to the piece it lands in.
    pub fn standard_action(&self, g: &Generator, d: usize) -> Result<Arc<Matrix>> {
        self.check_generator(g)?;
        self.cached(Key::Gen(g.clone()), d, || match g {
            Generator::X(i) => Ok(self.x_matrix(*i, d)),
            Generator::Perm(w) => Ok(self.perm_action(w, d)),
            Generator::Y(i) => {
                if d == 0 {
                    return Ok(Matrix::zeros(0, self.dim(0)));
                }
                Ok(self.element_matrix(&self.alg.d(*i), d)?.1)
            }
        })
    }

    fn check_generator(&self, g: &Generator) -> Result<()> {
        let ok = match g {
            Generator::X(i) | Generator::Y(i) => *i < self.n(),
            Generator::Perm(w) => w.n() == self.n(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "{g:?} is not a generator for n = {}",
                self.n()
            )))
        }
    }

    fn x_matrix(&self, i: usize, d: usize) -> Matrix {
        let (src, dst) = (self.basis(d), self.basis(d + 1));
        let e = self.module.dim();
        let mut m = Matrix::zeros(dst.monomials.len() * e, src.monomials.len() * e);
        for (a, mono) in src.monomials.iter().enumerate() {
            let b = dst.index[&mono.with_delta(i, 1)];
            for t in 0..e {
                m[(b * e + t, a * e + t)] = Scalar::one();
            }
        }
        m
    }

    fn perm_action(&self, w: &Perm, d: usize) -> Matrix {
        let basis = self.basis(d);
        let e = self.module.dim();
        let rho = self.rho(w);
        let mut m = Matrix::zeros(basis.monomials.len() * e, basis.monomials.len() * e);
        for (a, mono) in basis.monomials.iter().enumerate() {
            let b = basis.index[&mono.permuted(w)];
            for s in 0..e {
                for t in 0..e {
                    m[(b * e + s, a * e + t)] = rho[(s, t)].clone();
                }
            }
        }
        m
    }

    /// Action of a homogeneous element on `Δ_d`: straighten `a·x^α` and
    /// evaluate each word `x^β w y^γ` on `1 ⊗ e_T`, where `y^γ` kills unless
    /// `γ = 0`. Returns the target degree and the matrix.
    pub fn element_matrix(&self, a: &RatElem, d: usize) -> Result<(usize, Matrix)> {
        if a.n() != self.n() {
            return Err(Error::RankMismatch {
                expected: self.n(),
                got: a.n(),
            });
        }
        let shift: Option<i64> = {
            let mut shifts = a.terms().map(|(w, _)| w.x.degree() - w.d.degree());
            let first = shifts.next().unwrap_or(0);
            shifts.all(|s| s == first).then_some(first)
        };
        let shift =
            shift.ok_or_else(|| Error::InvalidArgument(format!("{a} is not homogeneous")))?;
        let target = d as i64 + shift;
        if target < 0 {
            return Err(Error::InvalidArgument(format!(
                "{a} maps degree {d} below zero"
            )));
        }
        let target = target as usize;
        let (src, dst) = (self.basis(d), self.basis(target));
        let e = self.module.dim();
        let mut m = Matrix::zeros(dst.monomials.len() * e, src.monomials.len() * e);
        for (col, mono) in src.monomials.iter().enumerate() {
            let prod = self.alg.mul(a, &Elem::x_mono(mono.clone()));
            for (word, c) in prod.terms() {
                if !word.d.is_one() {
                    continue;
                }
                let row = dst.index[&word.x];
                let rho = self.rho(&word.w);
                for s in 0..e {
                    for t in 0..e {
                        if !rho[(s, t)].is_zero() {
                            let v = &m[(row * e + s, col * e + t)] + &(c * &rho[(s, t)]);
                            m[(row * e + s, col * e + t)] = v;
                        }
                    }
                }
            }
        }
        Ok((target, m))
    }

    /// `u_i = x_i y_i + Σ_{j<i} s_ji` on `Δ_d`.
    pub fn u_matrix(&self, i: usize, d: usize) -> Result<Arc<Matrix>> {
        if i >= self.n() {
            return Err(Error::InvalidArgument(format!(
                "u index {} out of range",
                i + 1
            )));
        }
        self.cached(Key::U(i), d, || {
            let mut u = Matrix::zeros(self.dim(d), self.dim(d));
            if d > 0 {
                let y = self.standard_action(&Generator::Y(i), d)?;
                let x = self.standard_action(&Generator::X(i), d - 1)?;
                u = x.mul(&y);
            }
            for j in 0..i {
                let t = Perm::transposition(self.n(), j, i);
                let t = self.standard_action(&Generator::Perm(t), d)?;
                u = u.add(&t);
            }
            Ok(u)
        })
    }

    /// All `u_i` on `Δ_d`, checked to commute pairwise.
    pub fn u_matrices(&self, d: usize) -> Result<Vec<Arc<Matrix>>> {
        let us: Vec<Arc<Matrix>> = (0..self.n())
            .map(|i| self.u_matrix(i, d))
            .collect::<Result<_>>()?;
        for i in 0..us.len() {
            for j in 0..i {
                if !us[i].commutator(&us[j]).is_zero() {
                    return Err(Error::Internal(format!(
                        "u{} and u{} do not commute in degree {d}",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(us)
    }

    /// Basis of `{v ∈ Δ_d : y_i v = 0 for all i}`.
    pub fn singular_vectors(&self, d: usize) -> Result<Vec<Vec<Scalar>>> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "singular vectors need degree at least 1".into(),
            ));
        }
        let ys: Vec<Matrix> = (0..self.n())
            .map(|i| {
                self.standard_action(&Generator::Y(i), d)
                    .map(|m| (*m).clone())
            })
            .collect::<Result<_>>()?;
        Ok(Matrix::vstack(&ys).kernel())
    }

    fn lowering_maps(&self, d: usize) -> Result<Arc<Vec<Matrix>>> {
        if let Some(m) = self.lowering.lock().unwrap().get(&d) {
            return Ok(m.clone());
        }
        let maps = if d == 0 {
            vec![Matrix::identity(self.module.dim())]
        } else {
            let prev = self.lowering_maps(d - 1)?;
            let below = self.basis(d - 1);
            let mut ys: Vec<Option<Arc<Matrix>>> = vec![None; self.n()];
            let mut out = Vec::new();
            for mono in &self.basis(d).monomials {
                let i = (0..self.n()).find(|&i| mono.get(i) > 0).unwrap_or(0);
                if ys[i].is_none() {
                    ys[i] = Some(self.standard_action(&Generator::Y(i), d)?);
                }
                let a = below.index[&mono.with_delta(i, -1)];
                out.push(prev[a].mul(ys[i].as_ref().unwrap()));
            }
            out
        };
        let maps = Arc::new(maps);
        Ok(self
            .lowering
            .lock()
            .unwrap()
            .entry(d)
            .or_insert(maps)
            .clone())
    }

    /// `⟨x^α ⊗ u, x^β ⊗ v⟩ = ⟨u, y^α(x^β ⊗ v)⟩_{E_λ}` for the anti-involution
    /// `x_i ↔ y_i`, `w ↦ w^{-1}`.
    pub fn contravariant_gram(&self, d: usize) -> Result<Matrix> {
        let maps = self.lowering_maps(d)?;
        let e = self.module.dim();
        let form = self.module.form();
        let n = self.dim(d);
        let mut g = Matrix::zeros(n, n);
        for (a, low) in maps.iter().enumerate() {
            for u in 0..e {
                for col in 0..n {
                    g[(a * e + u, col)] = &form[u] * &low[(u, col)];
                }
            }
        }
        Ok(g)
    }

    /// `dim L(λ)_d` for `d ∈ [0, dmax]`, as ranks of the contravariant form.
    pub fn simple_quotient_dims(&self, dmax: usize) -> Result<Vec<usize>> {
        (0..=dmax)
            .map(|d| Ok(self.contravariant_gram(d)?.rank()))
            .collect()
    }

    /// Rows spanning the linear functionals that cut out `L(λ)_d`: the
    /// nonzero rows of `rref(Gram)`, whose kernel is the radical.
    pub fn quotient_rows(&self, d: usize) -> Result<Matrix> {
        let (r, pivots) = self.contravariant_gram(d)?.rref();
        Ok(r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()))
    }

    /// `u_i` on `L(λ)_d` in the coordinates `v ↦ R v`: `Q_i = (R u_i)[:, pivots]`.
    pub fn quotient_u_matrices(&self, d: usize) -> Result<Vec<Matrix>> {
        let (r, pivots) = self.contravariant_gram(d)?.rref();
        let r = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        self.u_matrices(d)?
            .iter()
            .map(|u| Ok(r.mul(u).select_columns(&pivots)))
            .collect()
    }

    /// Renders a vector of `Δ_d` as `Σ_T p_T ⊗ e_T`, or a bare polynomial
    /// when `E_λ` is one-dimensional.
    pub fn format_vector(&self, d: usize, v: &[Scalar]) -> String {
        let basis = self.basis(d);
        let e = self.module.dim();
        let comps: Vec<(usize, Poly)> = (0..e)
            .map(|t| {
                let terms = basis
                    .monomials
                    .iter()
                    .enumerate()
                    .map(|(a, m)| (m.clone(), v[a * e + t].clone()));
                (
                    t,
                    Poly::from_terms(self.n(), PolyContext::Polynomial, terms),
                )
            })
            .filter(|(_, p)| !p.is_zero())
            .collect();
        if e == 1 {
            return comps.first().map_or("0".into(), |(_, p)| p.to_string());
        }
        if comps.is_empty() {
            return "0".into();
        }
        comps
            .iter()
            .map(|(t, p)| format!("({p})⊗[{}]", self.module.tableaux()[*t]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests;
