//! PBW normal forms for the rational Cherednik algebra `H_κ`, its
//! localization `F[x^{±1}] ⊗ H_κ`, and the trigonometric algebra `H̃_κ`.
//!
//! Every element is a sparse combination of words `x^α · w · d^β` where `d`
//! stands for `y` (rational flavors) or `u` (trigonometric). Multiplication
//! straightens one generator at a time; each correction term lowers the
//! total `|x| + |d|` degree (rational) or the `d`-degree (trigonometric), which
//! bounds the recursion.

mod engine;
mod expr;
pub mod fuzz;
pub mod relations;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::exactpoly::Monomial;
use crate::scalar::Scalar;
use crate::weyl::Perm;

pub use engine::CacheStats;

/// Which algebra a word lives in.
pub trait Flavor: Copy + Eq + Ord + std::hash::Hash + fmt::Debug + Send + Sync + 'static {
    const NAME: &'static str;
    /// Negative `x` exponents allowed.
    const LAURENT: bool;
    /// `d` is `u` with the trigonometric relations, otherwise `y`.
    const TRIG: bool;
    const DVAR: char;
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational;
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LocalizedRational;
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Trigonometric;

impl Flavor for Rational {
    const NAME: &'static str = "rat";
    const LAURENT: bool = false;
    const TRIG: bool = false;
    const DVAR: char = 'y';
}

impl Flavor for LocalizedRational {
    const NAME: &'static str = "locrat";
    const LAURENT: bool = true;
    const TRIG: bool = false;
    const DVAR: char = 'y';
}

impl Flavor for Trigonometric {
    const NAME: &'static str = "trig";
    const LAURENT: bool = true;
    const TRIG: bool = true;
    const DVAR: char = 'u';
}

/// Rank and parameter of an algebra instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    pub n: usize,
    pub kappa: Scalar,
}

impl AlgebraParams {
    pub fn new(n: usize, kappa: Scalar) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!(
                "rank n must be at least 2, got {n}"
            )));
        }
        if n > 64 {
            return Err(Error::InvalidParams(format!("rank n = {n} is too large")));
        }
        if kappa.is_zero() {
            return Err(Error::InvalidParams("kappa must be nonzero".into()));
        }
        Ok(AlgebraParams { n, kappa })
    }

    pub fn negated(&self) -> Self {
        AlgebraParams {
            n: self.n,
            kappa: -&self.kappa,
        }
    }
}

/// The PBW word `x^x · w · d^d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    pub x: Monomial,
    pub w: Perm,
    pub d: Monomial,
}

impl Word {
    pub fn one(n: usize) -> Self {
        Word {
            x: Monomial::one(n),
            w: Perm::identity(n),
            d: Monomial::one(n),
        }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    pub fn is_one(&self) -> bool {
        self.x.is_one() && self.w.is_identity() && self.d.is_one()
    }
}

/// Print order: total degree descending, then the `x` part descending, then
/// the `d` part descending, then the permutation window ascending.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        let da = self.x.degree() + self.d.degree();
        let db = other.x.degree() + other.d.degree();
        db.cmp(&da)
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| other.d.cmp(&self.d))
            .then_with(|| self.w.cmp(&other.w))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A normal-form element. Two elements are equal iff their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem<F: Flavor> {
    n: usize,
    terms: BTreeMap<Word, Scalar>,
    _flavor: PhantomData<F>,
}

pub type RatElem = Elem<Rational>;
pub type LocRatElem = Elem<LocalizedRational>;
pub type TrigElem = Elem<Trigonometric>;

impl<F: Flavor> Elem<F> {
    pub fn zero(n: usize) -> Self {
        Elem {
            n,
            terms: BTreeMap::new(),
            _flavor: PhantomData,
        }
    }

    pub fn scalar(n: usize, c: Scalar) -> Self {
        Self::from_word(Word::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Scalar::one())
    }

    pub fn from_word(word: Word, c: Scalar) -> Self {
        assert!(
            F::LAURENT || word.x.is_polynomial(),
            "negative x exponent in a polynomial flavor"
        );
        let mut e = Self::zero(word.n());
        e.add_term(word, &c);
        e
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut e = Self::zero(n);
        for (w, c) in terms {
            e.add_term(w, &c);
        }
        e
    }

    /// `x_i` (0-based).
    pub fn x(n: usize, i: usize) -> Self {
        Self::x_mono(Monomial::unit(n, i))
    }

    pub fn x_mono(m: Monomial) -> Self {
        let n = m.n();
        Self::from_word(
            Word {
                x: m,
                w: Perm::identity(n),
                d: Monomial::one(n),
            },
            Scalar::one(),
        )
    }

    /// `y_i` or `u_i` (0-based).
    pub fn d(n: usize, i: usize) -> Self {
        Self::from_word(
            Word {
                x: Monomial::one(n),
                w: Perm::identity(n),
                d: Monomial::unit(n, i),
            },
            Scalar::one(),
        )
    }

    pub fn perm(w: Perm) -> Self {
        let n = w.n();
        Self::from_word(
            Word {
                x: Monomial::one(n),
                w,
                d: Monomial::one(n),
            },
            Scalar::one(),
        )
    }

    /// The transposition `s_ij` (0-based, `i != j`).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        Self::perm(Perm::transposition(n, i, j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in print order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Elem {
            n: self.n,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
            _flavor: PhantomData,
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Word, &Scalar) -> Scalar) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(w, c)| (w.clone(), f(w, c))))
    }

    /// Same words read in another flavor. Panics if `G` cannot hold negative
    /// `x` exponents that are present.
    pub fn recast<G: Flavor>(&self) -> Elem<G> {
        Elem::<G>::from_terms(
            self.n,
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    /// Whether every word has nonnegative `x` exponents.
    pub fn is_x_polynomial(&self) -> bool {
        self.terms.keys().all(|w| w.x.is_polynomial())
    }

    /// Largest `|x| + |d|` over the words, `None` for zero.
    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|w| w.x.degree() + w.d.degree()).max()
    }
}

impl LocRatElem {
    /// The same element in `H_κ` when all `x` exponents are nonnegative.
    pub fn to_rational(&self) -> Result<RatElem> {
        if self.is_x_polynomial() {
            Ok(self.recast())
        } else {
            Err(Error::ContextMismatch(format!(
                "{self} has negative x exponents and does not lie in H_κ"
            )))
        }
    }
}

impl RatElem {
    pub fn to_localized(&self) -> LocRatElem {
        self.recast()
    }
}

/// An algebra instance with its straightening caches.
pub struct Algebra<F: Flavor> {
    params: AlgebraParams,
    engine: engine::Engine,
    _flavor: PhantomData<F>,
}

pub type RationalAlgebra = Algebra<Rational>;
pub type LocalizedAlgebra = Algebra<LocalizedRational>;
pub type TrigAlgebra = Algebra<Trigonometric>;

impl<F: Flavor> Algebra<F> {
    pub fn new(params: AlgebraParams) -> Self {
        let engine = engine::Engine::new(params.clone(), F::TRIG);
        Algebra {
            params,
            engine,
            _flavor: PhantomData,
        }
    }

    pub fn with(n: usize, kappa: Scalar) -> Result<Self> {
        Ok(Self::new(AlgebraParams::new(n, kappa)?))
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    pub fn kappa(&self) -> &Scalar {
        &self.params.kappa
    }

    pub fn flavor_name(&self) -> &'static str {
        F::NAME
    }

    pub fn mul(&self, a: &Elem<F>, b: &Elem<F>) -> Elem<F> {
        assert_eq!(a.n, self.n(), "element rank differs from the algebra");
        assert_eq!(b.n, self.n(), "element rank differs from the algebra");
        let mut out = Elem::zero(self.n());
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let c = ca * cb;
                self.engine
                    .mul_words(wa, wb, &c, &mut |w, v| out.add_term(w, &v));
            }
        }
        out
    }

    pub fn mul_all<'a>(&self, factors: impl IntoIterator<Item = &'a Elem<F>>) -> Elem<F> {
        factors
            .into_iter()
            .fold(Elem::one(self.n()), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, a: &Elem<F>, k: u32) -> Elem<F> {
        let mut acc = Elem::one(self.n());
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, a: &Elem<F>, b: &Elem<F>) -> Elem<F> {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn x(&self, i: usize) -> Elem<F> {
        Elem::x(self.n(), i)
    }

    /// `x_i^{-1}`; only in the Laurent flavors.
    pub fn x_inv(&self, i: usize) -> Elem<F> {
        assert!(F::LAURENT, "x^-1 needs a Laurent flavor");
        Elem::x_mono(Monomial::unit(self.n(), i).inv())
    }

    pub fn d(&self, i: usize) -> Elem<F> {
        Elem::d(self.n(), i)
    }

    /// The simple reflection `s_{k+1}` (0-based `k`).
    pub fn s(&self, k: usize) -> Elem<F> {
        Elem::perm(Perm::simple(self.n(), k))
    }

    pub fn s_ij(&self, i: usize, j: usize) -> Elem<F> {
        Elem::transposition(self.n(), i, j)
    }

    pub fn perm(&self, w: Perm) -> Elem<F> {
        Elem::perm(w)
    }

    pub fn scalar(&self, c: Scalar) -> Elem<F> {
        Elem::scalar(self.n(), c)
    }

    pub fn one(&self) -> Elem<F> {
        Elem::one(self.n())
    }

    pub fn zero(&self) -> Elem<F> {
        Elem::zero(self.n())
    }

    /// Inverse of a single term `c·x^a·w` with no `d` part.
    pub fn invert_group_like(&self, e: &Elem<F>) -> Result<Elem<F>> {
        let mut it = e.terms();
        match (it.next(), it.next()) {
            (Some((w, c)), None) if w.d.is_one() && (F::LAURENT || w.x.is_one()) => {
                let winv = w.w.inverse();
                let x = Monomial::new(winv.act_on_vec(w.x.exps())).inv();
                Ok(Elem::from_word(
                    Word {
                        x,
                        w: winv,
                        d: Monomial::one(self.n()),
                    },
                    c.recip(),
                ))
            }
            _ => Err(Error::InvalidArgument(format!(
                "{e} is not invertible here"
            ))),
        }
    }

    pub fn cache_stats(&self) -> CacheStats {
        self.engine.stats()
    }
}

impl TrigAlgebra {
    /// `s_0 = x_1 x_n^{-1} s_{1n}`.
    pub fn s0(&self) -> TrigElem {
        let n = self.n();
        let mut m = Monomial::one(n);
        m = m.with_delta(0, 1).with_delta(n - 1, -1);
        Elem::from_word(
            Word {
                x: m,
                w: Perm::transposition(n, 0, n - 1),
                d: Monomial::one(n),
            },
            Scalar::one(),
        )
    }

    /// `π = x_1 s_1 s_2 ⋯ s_{n-1}`.
    pub fn pi(&self) -> TrigElem {
        let n = self.n();
        let c = (0..n - 1).fold(Perm::identity(n), |acc, k| acc.compose(&Perm::simple(n, k)));
        Elem::from_word(
            Word {
                x: Monomial::unit(n, 0),
                w: c,
                d: Monomial::one(n),
            },
            Scalar::one(),
        )
    }

    pub fn pi_inv(&self) -> TrigElem {
        self.invert_group_like(&self.pi()).expect("π is group-like")
    }
}

impl<F: Flavor> fmt::Debug for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({self})", F::NAME)
    }
}

#[cfg(test)]
mod tests;
