//! Defining relations as expressions in free generators, so that the same
//! list can be pushed through an algebra map or applied as operators.

use std::fmt;

use super::{Algebra, Elem, Flavor};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::weyl::Perm;

/// A free generator (0-based indices). `D` is `y_i` or `u_i` by context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    X(usize),
    XInv(usize),
    D(usize),
    /// Simple reflection `s_{k+1}`.
    S(usize),
    /// Transposition `s_ij`.
    T(usize, usize),
    S0,
    Pi,
    PiInv,
}

/// `Σ c · g_1 g_2 ⋯ g_k`; the empty word is `1`.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeExpr(pub Vec<(Scalar, Vec<Gen>)>);

impl FreeExpr {
    pub fn word(gens: Vec<Gen>) -> Self {
        FreeExpr(vec![(Scalar::one(), gens)])
    }

    pub fn gen(g: Gen) -> Self {
        Self::word(vec![g])
    }

    pub fn scalar(c: Scalar) -> Self {
        FreeExpr(vec![(c, Vec::new())])
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn zero() -> Self {
        FreeExpr(Vec::new())
    }

    pub fn plus(mut self, other: FreeExpr) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn times(self, c: Scalar) -> Self {
        FreeExpr(self.0.into_iter().map(|(a, w)| (&a * &c, w)).collect())
    }

    /// Evaluates in `alg` with `image` giving each generator's value.
    pub fn eval_in<F: Flavor>(
        &self,
        alg: &Algebra<F>,
        image: &dyn Fn(&Gen) -> Result<Elem<F>>,
    ) -> Result<Elem<F>> {
        let mut acc = alg.zero();
        for (c, word) in &self.0 {
            let mut prod = alg.scalar(c.clone());
            for g in word {
                prod = alg.mul(&prod, &image(g)?);
            }
            acc = acc.add(&prod);
        }
        Ok(acc)
    }

    /// Applies as an operator: generators act right to left on `v`.
    pub fn apply<V>(
        &self,
        v: &V,
        act: &dyn Fn(&Gen, &V) -> Result<V>,
        add: &dyn Fn(&V, &V) -> Result<V>,
        scale: &dyn Fn(&Scalar, &V) -> V,
        zero: &V,
    ) -> Result<V>
    where
        V: Clone,
    {
        let mut acc = zero.clone();
        for (c, word) in &self.0 {
            let mut cur = v.clone();
            for g in word.iter().rev() {
                cur = act(g, &cur)?;
            }
            acc = add(&acc, &scale(c, &cur))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::X(i) => write!(f, "x{}", i + 1),
            Gen::XInv(i) => write!(f, "x{}^-1", i + 1),
            Gen::D(i) => write!(f, "d{}", i + 1),
            Gen::S(k) => write!(f, "s{}", k + 1),
            Gen::T(i, j) => write!(f, "s[{},{}]", i + 1, j + 1),
            Gen::S0 => f.write_str("s0"),
            Gen::Pi => f.write_str("pi"),
            Gen::PiInv => f.write_str("pi^-1"),
        }
    }
}

/// A named identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: FreeExpr,
    pub rhs: FreeExpr,
}

impl Relation {
    fn new(name: String, lhs: FreeExpr, rhs: FreeExpr) -> Self {
        Relation { name, lhs, rhs }
    }

    /// `lhs - rhs`.
    pub fn difference(&self) -> FreeExpr {
        self.lhs
            .clone()
            .plus(self.rhs.clone().times(-Scalar::one()))
    }
}

fn w(gens: Vec<Gen>) -> FreeExpr {
    FreeExpr::word(gens)
}

fn commuting(name: &str, n: usize, g: fn(usize) -> Gen) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Relation::new(
                format!("{name}[{},{}]", i + 1, j + 1),
                w(vec![g(i), g(j)]),
                w(vec![g(j), g(i)]),
            ));
        }
    }
    out
}

/// `s_k² = 1`, braid and distant commutation.
pub fn coxeter(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for k in 0..n - 1 {
        out.push(Relation::new(
            format!("ss[{}]", k + 1),
            w(vec![Gen::S(k), Gen::S(k)]),
            FreeExpr::one(),
        ));
        if k + 2 < n {
            out.push(Relation::new(
                format!("braid[{}]", k + 1),
                w(vec![Gen::S(k), Gen::S(k + 1), Gen::S(k)]),
                w(vec![Gen::S(k + 1), Gen::S(k), Gen::S(k + 1)]),
            ));
        }
        for l in k + 2..n - 1 {
            out.push(Relation::new(
                format!("far[{},{}]", k + 1, l + 1),
                w(vec![Gen::S(k), Gen::S(l)]),
                w(vec![Gen::S(l), Gen::S(k)]),
            ));
        }
    }
    out
}

/// `s_k g_j = g_{s_k(j)} s_k` for a family of generators `g`.
fn equivariant(name: &str, n: usize, g: fn(usize) -> Gen) -> Vec<Relation> {
    let mut out = Vec::new();
    for k in 0..n - 1 {
        let sk = Perm::simple(n, k);
        for j in 0..n {
            out.push(Relation::new(
                format!("{name}[{},{}]", k + 1, j + 1),
                w(vec![Gen::S(k), g(j)]),
                w(vec![g(sk.apply(j)), Gen::S(k)]),
            ));
        }
    }
    out
}

/// Transpositions in terms of simple reflections, tying `T` to `S`.
fn transpositions(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let word: Vec<Gen> = Perm::transposition(n, i, j)
                .reduced_word()
                .into_iter()
                .map(Gen::S)
                .collect();
            out.push(Relation::new(
                format!("t[{},{}]", i + 1, j + 1),
                w(vec![Gen::T(i, j)]),
                w(word),
            ));
        }
    }
    out
}

/// `[y_i, x_j] = κ + Σ_{k≠i} s_ik` (i = j), `-s_ij` otherwise.
fn rational_cross(n: usize, kappa: &Scalar) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let rhs = if i == j {
                (0..n)
                    .filter(|&k| k != i)
                    .fold(FreeExpr::scalar(kappa.clone()), |acc, k| {
                        acc.plus(w(vec![Gen::T(i.min(k), i.max(k))]))
                    })
            } else {
                w(vec![Gen::T(i.min(j), i.max(j))]).times(-Scalar::one())
            };
            out.push(Relation::new(
                format!("yx[{},{}]", i + 1, j + 1),
                w(vec![Gen::D(i), Gen::X(j)])
                    .plus(w(vec![Gen::X(j), Gen::D(i)]).times(-Scalar::one())),
                rhs,
            ));
        }
    }
    out
}

/// The relations of `H_κ`.
pub fn rational(n: usize, kappa: &Scalar) -> Vec<Relation> {
    let mut out = commuting("xx", n, Gen::X);
    out.extend(commuting("yy", n, Gen::D));
    out.extend(coxeter(n));
    out.extend(transpositions(n));
    out.extend(equivariant("sx", n, Gen::X));
    out.extend(equivariant("sy", n, Gen::D));
    out.extend(rational_cross(n, kappa));
    out
}

fn inverses(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(Relation::new(
            format!("xinv[{}]", i + 1),
            w(vec![Gen::X(i), Gen::XInv(i)]),
            FreeExpr::one(),
        ));
        out.push(Relation::new(
            format!("invx[{}]", i + 1),
            w(vec![Gen::XInv(i), Gen::X(i)]),
            FreeExpr::one(),
        ));
    }
    out.extend(equivariant("sxinv", n, Gen::XInv));
    out
}

/// The relations of the localization `F[x^{±1}] ⊗ H_κ`.
pub fn localized(n: usize, kappa: &Scalar) -> Vec<Relation> {
    let mut out = rational(n, kappa);
    out.extend(inverses(n));
    out
}

/// `s_k u_k = u_{k+1} s_k - 1`, `s_k u_{k+1} = u_k s_k + 1`, `s_k u_j = u_j s_k`.
fn hecke_cross(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for k in 0..n - 1 {
        for j in 0..n {
            let rhs = if j == k {
                w(vec![Gen::D(k + 1), Gen::S(k)]).plus(FreeExpr::scalar(-Scalar::one()))
            } else if j == k + 1 {
                w(vec![Gen::D(k), Gen::S(k)]).plus(FreeExpr::one())
            } else {
                w(vec![Gen::D(j), Gen::S(k)])
            };
            out.push(Relation::new(
                format!("su[{},{}]", k + 1, j + 1),
                w(vec![Gen::S(k), Gen::D(j)]),
                rhs,
            ));
        }
    }
    out
}

/// The relations of the degenerate affine Hecke algebra `FS_n · F[u]`.
pub fn affine_hecke(n: usize) -> Vec<Relation> {
    let mut out = commuting("uu", n, Gen::D);
    out.extend(coxeter(n));
    out.extend(transpositions(n));
    out.extend(hecke_cross(n));
    out
}

/// `[u_i, x_j]` per the trigonometric cross relations.
fn trig_cross(n: usize, kappa: &Scalar) -> Vec<Relation> {
    let t = |a: usize, b: usize| Gen::T(a.min(b), a.max(b));
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let rhs = if i == j {
                let mut r = w(vec![Gen::X(i)]).times(kappa.clone());
                for k in 0..i {
                    r = r.plus(w(vec![Gen::X(k), t(k, i)]));
                }
                for k in i + 1..n {
                    r = r.plus(w(vec![Gen::X(i), t(i, k)]));
                }
                r
            } else if i > j {
                w(vec![Gen::X(j), t(j, i)]).times(-Scalar::one())
            } else {
                w(vec![Gen::X(i), t(i, j)]).times(-Scalar::one())
            };
            out.push(Relation::new(
                format!("ux[{},{}]", i + 1, j + 1),
                w(vec![Gen::D(i), Gen::X(j)])
                    .plus(w(vec![Gen::X(j), Gen::D(i)]).times(-Scalar::one())),
                rhs,
            ));
        }
    }
    out
}

/// The relations of `H̃_κ`.
pub fn trigonometric(n: usize, kappa: &Scalar) -> Vec<Relation> {
    let mut out = commuting("xx", n, Gen::X);
    out.extend(inverses(n));
    out.extend(affine_hecke(n));
    out.extend(equivariant("sx", n, Gen::X));
    out.extend(trig_cross(n, kappa));
    out
}

/// Relations of the alternative presentation with `π^{±1}` and `s_0`, to be
/// checked through their expansions: `π π^{-1} = 1`, `π s_k = s_{k+1} π`,
/// `π² s_{n-1} = s_1 π²`, `s_0 = π s_{n-1} π^{-1}`, `π x_i = x_{i+1} π`,
/// `π x_n = x_1 π`, `π u_i = u_{i+1} π`, `π u_n = (u_1 - κ) π`.
pub fn pi_presentation(n: usize, kappa: &Scalar) -> Vec<Relation> {
    let mut out = vec![
        Relation::new(
            "pipiinv".into(),
            w(vec![Gen::Pi, Gen::PiInv]),
            FreeExpr::one(),
        ),
        Relation::new(
            "piinvpi".into(),
            w(vec![Gen::PiInv, Gen::Pi]),
            FreeExpr::one(),
        ),
        Relation::new(
            "s0conj".into(),
            w(vec![Gen::S0]),
            w(vec![Gen::Pi, Gen::S(n - 2), Gen::PiInv]),
        ),
        Relation::new("s0sq".into(), w(vec![Gen::S0, Gen::S0]), FreeExpr::one()),
    ];
    for k in 0..n - 2 {
        out.push(Relation::new(
            format!("pis[{}]", k + 1),
            w(vec![Gen::Pi, Gen::S(k)]),
            w(vec![Gen::S(k + 1), Gen::Pi]),
        ));
    }
    for i in 0..n {
        let next = (i + 1) % n;
        out.push(Relation::new(
            format!("pix[{}]", i + 1),
            w(vec![Gen::Pi, Gen::X(i)]),
            w(vec![Gen::X(next), Gen::Pi]),
        ));
        let rhs = if i + 1 < n {
            w(vec![Gen::D(i + 1), Gen::Pi])
        } else {
            w(vec![Gen::D(0), Gen::Pi]).plus(w(vec![Gen::Pi]).times(-kappa))
        };
        out.push(Relation::new(
            format!("piu[{}]", i + 1),
            w(vec![Gen::Pi, Gen::D(i)]),
            rhs,
        ));
    }
    out
}

/// Result of checking one relation.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationOutcome {
    pub name: String,
    pub passed: bool,
    /// Printed `image(lhs) - image(rhs)` when the check fails.
    pub counterexample: Option<String>,
}

/// Maps both sides of each relation with `image` and compares normal forms.
pub fn check_in<F: Flavor>(
    alg: &Algebra<F>,
    relations: &[Relation],
    image: &dyn Fn(&Gen) -> Result<Elem<F>>,
) -> Result<Vec<RelationOutcome>> {
    relations
        .iter()
        .map(|r| {
            let diff = r.difference().eval_in(alg, image)?;
            Ok(RelationOutcome {
                name: r.name.clone(),
                passed: diff.is_zero(),
                counterexample: (!diff.is_zero()).then(|| diff.to_string()),
            })
        })
        .collect()
}

/// The tautological generator images inside `alg` itself.
pub fn standard_image<F: Flavor>(alg: &Algebra<F>) -> impl Fn(&Gen) -> Result<Elem<F>> + '_ {
    move |g| {
        Ok(match g {
            Gen::X(i) => alg.x(*i),
            Gen::XInv(i) => alg.x_inv(*i),
            Gen::D(i) => alg.d(*i),
            Gen::S(k) => alg.s(*k),
            Gen::T(i, j) => alg.s_ij(*i, *j),
            Gen::S0 => alg.parse("s0")?,
            Gen::Pi => alg.parse("pi")?,
            Gen::PiInv => alg.parse("pi^-1")?,
        })
    }
}
