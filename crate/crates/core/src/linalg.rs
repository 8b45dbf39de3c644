//! Dense exact linear algebra over `Scalar` and univariate polynomials with
//! exact rational root extraction.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Convenience for tests and fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::from(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self - c·I`.
    pub fn shift(&self, c: &Scalar) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = &m[(i, i)] - c;
        }
        m
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_rows(idx.iter().map(|&i| self.row(i).to_vec()).collect())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (c, &j) in idx.iter().enumerate() {
                m[(i, c)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols));
        Matrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            data: blocks.iter().flat_map(|b| b.data.iter().cloned()).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let v = &m[(i, j)] - &(&f * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column, with a 1 in that
    /// free position.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.recip();
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&f * &m[(c, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        det
    }

    /// Solves `self · X = rhs` for `self` with independent columns; `None` if
    /// some column of `rhs` is outside the column space.
    pub fn solve_columns(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let k = self.cols;
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.len() != k || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        for i in k..r.rows {
            if (0..rhs.cols).any(|j| !r[(i, k + j)].is_zero()) {
                return None;
            }
        }
        let mut x = Matrix::zeros(k, rhs.cols);
        for i in 0..k {
            for j in 0..rhs.cols {
                x[(i, j)] = r[(i, k + j)].clone();
            }
        }
        Some(x)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    /// Characteristic polynomial `det(t·I - A)` via Hessenberg reduction.
    pub fn charpoly(&self) -> UniPoly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap_rows(i, m);
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = h[(m, m - 1)].recip();
            for j in m + 1..n {
                if h[(j, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(j, m - 1)] * &inv;
                for c in 0..n {
                    let v = &h[(j, c)] - &(&u * &h[(m, c)]);
                    h[(j, c)] = v;
                }
                for r in 0..n {
                    let v = &h[(r, m)] + &(&u * &h[(r, j)]);
                    h[(r, m)] = v;
                }
            }
        }
        // p_m = (t - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{j=i+1..m} h_{j,j-1}) p_{i-1}
        let mut p: Vec<UniPoly> = vec![UniPoly::one()];
        for m in 0..n {
            let mut pm = p[m].mul(&UniPoly::linear_root(&h[(m, m)]));
            let mut t = Scalar::one();
            for i in (0..m).rev() {
                t *= &h[(i + 1, i)];
                if t.is_zero() {
                    break;
                }
                let c = &h[(i, m)] * &t;
                if !c.is_zero() {
                    pm = pm.sub(&p[i].scale(&c));
                }
            }
            p.push(pm);
        }
        p.pop().unwrap()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dense univariate polynomial, coefficients from the constant term up,
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Scalar::one()])
    }

    /// `t - r`.
    pub fn linear_root(r: &Scalar) -> Self {
        UniPoly(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let z = Scalar::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * &Scalar::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for a in self.0.iter().rev() {
            acc = &(&acc * t) + a;
        }
        acc
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lead().recip();
        let mut rem = self.0.clone();
        let mut q = vec![Scalar::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = &rem[rem.len() - 1] * &inv;
            if !c.is_zero() {
                for (i, b) in d.0.iter().enumerate() {
                    rem[k + i] -= &(&c * b);
                }
            }
            q[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) && rem.len() > dd {
                rem.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(rem))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Distinct rational roots with their multiplicities, in increasing order.
    pub fn rational_roots(&self) -> Vec<(Scalar, usize)> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let g = self.gcd(&self.derivative());
        let sqfree = self.div_rem(&g).0;
        let roots = squarefree_rational_roots(&sqfree);
        roots
            .into_iter()
            .map(|r| {
                let lin = UniPoly::linear_root(&r);
                let mut m = 0;
                let mut f = self.clone();
                loop {
                    let (q, rem) = f.div_rem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    m += 1;
                    f = q;
                }
                (r, m)
            })
            .collect()
    }

    /// All roots, which must be rational; otherwise an irrational-spectrum error.
    pub fn split_rational(&self) -> Result<Vec<(Scalar, usize)>> {
        let roots = self.rational_roots();
        let found: usize = roots.iter().map(|(_, m)| m).sum();
        if Some(found) != self.degree() {
            return Err(Error::IrrationalSpectrum(format!(
                "characteristic polynomial {self} has non-rational roots"
            )));
        }
        Ok(roots)
    }
}

/// Integer coefficients of a positive multiple of `f`, made primitive.
fn primitive_integer(f: &UniPoly) -> Vec<BigInt> {
    let l = crate::scalar::lcm_denominators(f.coeffs());
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.into_iter().map(|v| v / &g).collect()
}

/// Rational roots of a squarefree polynomial.
///
/// With `c_d` the leading coefficient of the primitive integer form, the
/// substitution `t = s / c_d` yields a monic integer polynomial whose rational
/// roots are integers; those are isolated by Sturm bisection between
/// half-integers, which can never be roots.
fn squarefree_rational_roots(f: &UniPoly) -> Vec<Scalar> {
    let c = primitive_integer(f);
    let d = c.len() - 1;
    let lead = c[d].clone();
    // h(s) = lead^{d-1} f(s / lead) = Σ c_i lead^{d-1-i} s^i
    let mut h = Vec::with_capacity(d + 1);
    for (i, ci) in c.iter().enumerate() {
        if i == d {
            h.push(Scalar::one());
        } else {
            h.push(Scalar::from(ci * num_traits::pow(lead.clone(), d - 1 - i)));
        }
    }
    let h = UniPoly::new(h);
    // Cauchy bound: |root| < 1 + max |h_i|.
    let bound = h.0[..d]
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_default()
        .floor()
        + BigInt::from(1);
    let sturm = sturm_sequence(&h);
    let half = Scalar::ratio(1, 2);
    let lo = -&Scalar::from(bound.clone()) - &half;
    let hi = &Scalar::from(bound) + &half;
    let mut out = Vec::new();
    let mut stack = vec![(
        lo.clone(),
        sign_changes(&sturm, &lo),
        hi.clone(),
        sign_changes(&sturm, &hi),
    )];
    while let Some((a, va, b, vb)) = stack.pop() {
        if va == vb {
            continue;
        }
        let width = &b - &a;
        if width.is_one() {
            let k = &a + &half;
            if h.eval(&k).is_zero() {
                out.push(&k / &Scalar::from(lead.clone()));
            }
            continue;
        }
        // midpoint rounded to a half-integer
        let mid_int = (&(&a + &b) / &Scalar::from(2)).floor();
        let mid = &Scalar::from(mid_int) + &half;
        let vm = sign_changes(&sturm, &mid);
        stack.push((a, va, mid.clone(), vm));
        stack.push((mid, vm, b, vb));
    }
    out.sort();
    out
}

fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            return seq;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            return seq;
        }
        // positive rescaling keeps the sign pattern and the numbers small
        let r = r.scale(&-r.lead().abs().recip());
        seq.push(r);
    }
}

fn sign_changes(seq: &[UniPoly], t: &Scalar) -> usize {
    let mut last = 0;
    let mut changes = 0;
    for p in seq {
        let s = p.eval(t).signum();
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut s = String::new();
            crate::exactpoly::write_coeff_prefix(&mut s, c, first, i == 0);
            f.write_str(&s)?;
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `true` when `v` is the zero vector.
pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> Scalar {
        Scalar::ratio(a, b)
    }

    #[test]
    fn rref_rank_kernel() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&k[0])));
        assert_eq!(m.det(), Scalar::zero());
        assert_eq!(Matrix::from_i64(&[&[2, 1], &[1, 3]]).det(), Scalar::from(5));
    }

    #[test]
    fn charpoly_small() {
        let m = Matrix::from_i64(&[&[2, 1], &[0, 3]]);
        // (t-2)(t-3)
        assert_eq!(
            m.charpoly(),
            UniPoly::new(vec![6.into(), (-5).into(), 1.into()])
        );
        let roots = m.charpoly().split_rational().unwrap();
        assert_eq!(roots, vec![(Scalar::from(2), 1), (Scalar::from(3), 1)]);
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(rot.charpoly().split_rational().is_err());
        let sq2 = Matrix::from_i64(&[&[0, 2], &[1, 0]]);
        assert!(sq2.charpoly().split_rational().is_err());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (3t - 1)^2 (t + 5/2)(t^2 + 1)
        let f = UniPoly::new(vec![q(-1, 3), 1.into()])
            .mul(&UniPoly::new(vec![q(-1, 3), 1.into()]))
            .mul(&UniPoly::new(vec![q(5, 2), 1.into()]))
            .mul(&UniPoly::new(vec![1.into(), 0.into(), 1.into()]))
            .scale(&q(9, 7));
        assert_eq!(f.rational_roots(), vec![(q(-5, 2), 1), (q(1, 3), 2)]);
        assert!(f.split_rational().is_err());
        assert!(!f.is_squarefree());
    }

    #[test]
    fn solve_columns_recovers_coordinates() {
        let b = Matrix::from_i64(&[&[1, 0], &[1, 1], &[0, 2]]);
        let x = Matrix::from_i64(&[&[3], &[-1]]);
        assert_eq!(b.solve_columns(&b.mul(&x)).unwrap(), x);
        assert!(b
            .solve_columns(&Matrix::from_i64(&[&[1], &[0], &[0]]))
            .is_none());
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-3i64..4, n * n).prop_map(move |v| {
            Matrix::from_rows(
                v.chunks(n)
                    .map(|r| r.iter().map(|&a| a.into()).collect())
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn charpoly_matches_determinant(m in arb_matrix(4), t in -4i64..5) {
            let t = Scalar::from(t);
            let direct = Matrix::scalar(4, &t).sub(&m).det();
            prop_assert_eq!(m.charpoly().eval(&t), direct);
        }

        #[test]
        fn triangular_roots_are_found(diag in proptest::collection::vec((-6i64..7, 1i64..4), 1..6)) {
            let n = diag.len();
            let mut m = Matrix::zeros(n, n);
            for (i, &(a, b)) in diag.iter().enumerate() {
                m[(i, i)] = q(a, b);
                for j in i + 1..n {
                    m[(i, j)] = Scalar::from((i + j) as i64);
                }
            }
            let roots = m.charpoly().split_rational().unwrap();
            let total: usize = roots.iter().map(|r| r.1).sum();
            prop_assert_eq!(total, n);
            for &(a, b) in &diag {
                prop_assert!(roots.iter().any(|r| r.0 == q(a, b)));
            }
        }
    }
}
