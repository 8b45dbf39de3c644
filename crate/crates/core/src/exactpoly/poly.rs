use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::text::{self, Expr};
use crate::weyl::Perm;

/// Whether negative exponents are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyContext {
    Polynomial,
    Laurent,
}

/// Sparse polynomial in `x_1..x_n` with exact rational coefficients.
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    ctx: PolyContext,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(n: usize, ctx: PolyContext) -> Self {
        Poly {
            n,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, ctx: PolyContext, c: Scalar) -> Self {
        Self::monomial(Monomial::one(n), c, ctx)
    }

    pub fn one(n: usize, ctx: PolyContext) -> Self {
        Self::constant(n, ctx, Scalar::one())
    }

    /// `c * x^m`. Negative exponents switch the context to Laurent.
    pub fn monomial(m: Monomial, c: Scalar, ctx: PolyContext) -> Self {
        let ctx = if m.is_polynomial() {
            ctx
        } else {
            PolyContext::Laurent
        };
        let mut p = Poly::zero(m.n(), ctx);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::unit(n, i), Scalar::one(), PolyContext::Polynomial)
    }

    pub fn from_terms(
        n: usize,
        ctx: PolyContext,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Poly::zero(n, ctx);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn context(&self) -> PolyContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Reinterprets as a Laurent polynomial.
    pub fn into_laurent(mut self) -> Self {
        self.ctx = PolyContext::Laurent;
        self
    }

    /// Back to the polynomial context if every exponent is nonnegative.
    pub fn into_polynomial(mut self) -> Result<Self> {
        if self.terms.keys().all(Monomial::is_polynomial) {
            self.ctx = PolyContext::Polynomial;
            Ok(self)
        } else {
            Err(Error::ContextMismatch(format!(
                "{self} has negative exponents"
            )))
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        if !m.is_polynomial() {
            self.ctx = PolyContext::Laurent;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    fn check_compatible(&self, other: &Poly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(format!(
                "{:?} vs {:?}",
                self.ctx, other.ctx
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n, self.ctx);
        }
        Poly {
            n: self.n,
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_compatible(other)?;
        let mut out = Poly::zero(self.n, self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Multiplication by the monomial `c x^m`, keeping this context unless
    /// `m` has negative exponents.
    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Poly {
        let mut out = Poly::zero(self.n, self.ctx);
        for (ma, ca) in &self.terms {
            out.add_term(ma.mul(m), &(ca * c));
        }
        out
    }

    /// `w · f` with `x_i ↦ x_{w(i)}`.
    pub fn perm_act(&self, w: &Perm) -> Poly {
        assert_eq!(w.n(), self.n, "permutation degree must match n");
        Poly {
            n: self.n,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(w), c.clone()))
                .collect(),
        }
    }

    /// Partial derivative with respect to `x_i` (0-based).
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n, self.ctx);
        for (m, c) in &self.terms {
            let e = m.get(i);
            if e != 0 {
                out.add_term(m.with_delta(i, -1), &(c * &Scalar::from(e)));
            }
        }
        out
    }

    /// `(f - s_ij f) / (x_i - x_j)` (0-based, `i != j`), computed by synthetic
    /// division in `x_i`. A nonzero remainder is reported as an internal error.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Poly> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::InvalidArgument(format!(
                "divided difference needs distinct indices below n, got ({i}, {j})"
            )));
        }
        let s = Perm::transposition(self.n, i, j);
        let g = self.sub(&self.perm_act(&s))?;
        div_by_difference(&g, i, j)
    }

    /// Homogeneous component of degree `d`.
    pub fn graded_piece(&self, d: i64) -> Poly {
        Poly {
            n: self.n,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Parses the text grammar, e.g. `3/2*x1^2*x2^-1 + x3`.
    pub fn parse(src: &str, n: usize) -> Result<Poly> {
        let e = text::parse_expr(src)?;
        let p = eval(&e, n)?;
        if p.terms.keys().all(Monomial::is_polynomial) {
            Ok(Poly {
                ctx: PolyContext::Polynomial,
                ..p
            })
        } else {
            Ok(p)
        }
    }

    /// Writes terms in the given monomial order (leading term first).
    pub fn fmt_ordered(&self, order: &[Monomial]) -> String {
        let mut s = String::new();
        let mut first = true;
        for m in order {
            if let Some(c) = self.terms.get(m) {
                write_term(&mut s, c, m, first);
                first = false;
            }
        }
        if first {
            s.push('0');
        }
        s
    }
}

fn div_by_difference(g: &Poly, i: usize, j: usize) -> Result<Poly> {
    // Group by the power of x_i; q_{k-1} = g_k + x_j q_k from the top power down.
    let mut by_power: BTreeMap<i32, Poly> = BTreeMap::new();
    for (m, c) in &g.terms {
        let k = m.get(i);
        let mut rest = m.clone();
        rest = rest.with_delta(i, -k);
        by_power
            .entry(k)
            .or_insert_with(|| Poly::zero(g.n, PolyContext::Laurent))
            .add_term(rest, c);
    }
    let mut quotient = Poly::zero(g.n, g.ctx);
    let Some((&top, _)) = by_power.iter().next_back() else {
        return Ok(quotient);
    };
    let low = *by_power.keys().next().unwrap();
    let xj = Monomial::unit(g.n, j);
    let mut carry = Poly::zero(g.n, PolyContext::Laurent);
    let mut k = top;
    while k > low {
        let gk = by_power
            .remove(&k)
            .unwrap_or_else(|| Poly::zero(g.n, PolyContext::Laurent));
        // q_{k-1} = g_k + x_j * q_k  (carry holds q_k)
        let q = gk.add(&carry.mul_monomial(&xj, &Scalar::one()))?;
        let shift = Monomial::unit(g.n, i).with_delta(i, k - 2);
        for (m, c) in q.terms() {
            quotient.add_term(m.mul(&shift), c);
        }
        carry = q;
        k -= 1;
    }
    let g_low = by_power
        .remove(&low)
        .unwrap_or_else(|| Poly::zero(g.n, PolyContext::Laurent));
    let remainder = g_low.add(&carry.mul_monomial(&xj, &Scalar::one()))?;
    if !remainder.is_zero() {
        return Err(Error::Internal(format!(
            "division by x{} - x{} left remainder {remainder}",
            i + 1,
            j + 1
        )));
    }
    Ok(quotient)
}

fn eval(e: &Expr, n: usize) -> Result<Poly> {
    let ctx = PolyContext::Laurent;
    Ok(match e {
        Expr::Num(c) => Poly::constant(n, ctx, c.clone()),
        Expr::Atom(name, None) => {
            let (head, idx) = text::split_ident(name)
                .ok_or_else(|| Error::Parse(format!("unknown symbol {name:?}")))?;
            let i: usize = idx.parse().map_err(|_| Error::Parse(name.clone()))?;
            if head != "x" || i == 0 || i > n {
                return Err(Error::Parse(format!(
                    "unknown variable {name:?} (expected x1..x{n})"
                )));
            }
            Poly::var(n, i - 1).into_laurent()
        }
        Expr::Atom(name, Some(_)) => {
            return Err(Error::Parse(format!("unexpected bracket after {name:?}")))
        }
        Expr::Add(a, b) => eval(a, n)?.add(&eval(b, n)?)?,
        Expr::Sub(a, b) => eval(a, n)?.sub(&eval(b, n)?)?,
        Expr::Mul(a, b) => eval(a, n)?.mul(&eval(b, n)?)?,
        Expr::Neg(a) => eval(a, n)?.neg(),
        Expr::Pow(a, k) => {
            let base = eval(a, n)?;
            if *k < 0 {
                // Only monomials are invertible.
                if base.len() != 1 {
                    return Err(Error::Parse(
                        "negative powers are only allowed on monomials".into(),
                    ));
                }
                let (m, c) = base.terms().next().unwrap();
                let m = Monomial::new(m.exps().iter().map(|x| x * (*k as i32)).collect());
                Poly::monomial(m, c.pow(*k as i32), ctx)
            } else {
                let mut acc = Poly::one(n, ctx);
                for _ in 0..*k {
                    acc = acc.mul(&base)?;
                }
                acc
            }
        }
    })
}

/// Appends ` + c*m` / ` - c*m` (or the leading form when `first`).
pub(crate) fn write_term(s: &mut String, c: &Scalar, m: &Monomial, first: bool) {
    write_coeff_prefix(s, c, first, m.is_one());
    if !m.is_one() {
        let _ = m.write_factors(s, 'x');
    }
}

/// Writes the sign and coefficient; a unit coefficient is elided unless the
/// term has no other factors.
pub(crate) fn write_coeff_prefix(s: &mut String, c: &Scalar, first: bool, bare: bool) {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            s.push('-');
        }
    } else {
        s.push_str(if neg { " - " } else { " + " });
    }
    if bare {
        s.push_str(&abs.to_string());
    } else if !abs.is_one() {
        s.push_str(&abs.to_string());
        s.push('*');
    }
}

impl fmt::Display for Poly {
    /// Descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            write_term(&mut s, c, m, k == 0);
        }
        f.write_str(&s)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Parses with `n` inferred from the largest variable index.
impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let e = text::parse_expr(s)?;
        let n = max_var(&e).max(1);
        Poly::parse(s, n)
    }
}

fn max_var(e: &Expr) -> usize {
    match e {
        Expr::Num(_) => 0,
        Expr::Atom(name, _) => text::split_ident(name)
            .and_then(|(_, i)| i.parse().ok())
            .unwrap_or(0),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => max_var(a).max(max_var(b)),
        Expr::Neg(a) | Expr::Pow(a, _) => max_var(a),
    }
}
