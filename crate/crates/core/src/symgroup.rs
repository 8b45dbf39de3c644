//! Partitions, standard tableaux and Young's seminormal form of the
//! irreducible `S_n`-modules `E_λ`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::text::parse_int_list;
use crate::weyl::Perm;

/// `λ_1 ≥ ⋯ ≥ λ_m > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts `m`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    /// `λ'_i = #{a : λ_a ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        Partition(
            (1..=self.first())
                .map(|i| self.0.iter().filter(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// Contents `col − row` of all boxes.
    pub fn contents(&self) -> Vec<i64> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| c as i64 - r as i64))
            .collect()
    }

    pub fn content_sum(&self) -> i64 {
        self.contents().iter().sum()
    }

    /// All partitions of `n`, reverse lexicographic: `(n)` first, `(1^n)` last.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Hook length formula.
    pub fn dimension(&self) -> u128 {
        let conj = self.conjugate();
        let factorial: u128 = (1..=self.n() as u128).product();
        let hooks: u128 = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| {
                let conj = &conj;
                (0..len).map(move |c| (len - c + conj.0[c] - r - 1) as u128)
            })
            .product();
        factorial / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_int_list(s)?;
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Parse(format!("negative part in {s:?}")));
        }
        Partition::new(parts.into_iter().map(|p| p as usize).collect())
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Filling by `1..n`, stored as the `(row, col)` position of each entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    /// All standard tableaux of shape `λ`, in the order entries are placed
    /// row-first (the row-reading tableau comes first).
    pub fn all(lambda: &Partition) -> Vec<StandardTableau> {
        fn rec(
            shape: &[usize],
            filled: &mut Vec<usize>,
            pos: &mut Vec<(usize, usize)>,
            out: &mut Vec<StandardTableau>,
        ) {
            if pos.len() == shape.iter().sum::<usize>() {
                out.push(StandardTableau { pos: pos.clone() });
                return;
            }
            for r in 0..shape.len() {
                let c = filled[r];
                if c < shape[r] && (r == 0 || filled[r - 1] > c) {
                    filled[r] += 1;
                    pos.push((r, c));
                    rec(shape, filled, pos, out);
                    pos.pop();
                    filled[r] -= 1;
                }
            }
        }
        let mut out = Vec::new();
        rec(
            lambda.parts(),
            &mut vec![0; lambda.len()],
            &mut Vec::new(),
            &mut out,
        );
        out
    }

    /// Position of entry `k + 1`.
    pub fn position(&self, k: usize) -> (usize, usize) {
        self.pos[k]
    }

    /// Content of entry `k + 1`.
    pub fn content(&self, k: usize) -> i64 {
        let (r, c) = self.pos[k];
        c as i64 - r as i64
    }

    fn swapped(&self, k: usize) -> StandardTableau {
        let mut pos = self.pos.clone();
        pos.swap(k, k + 1);
        StandardTableau { pos }
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<(usize, usize)>> = Vec::new();
        for (k, &(r, c)) in self.pos.iter().enumerate() {
            if rows.len() <= r {
                rows.resize(r + 1, Vec::new());
            }
            rows[r].push((c, k + 1));
        }
        rows.into_iter()
            .map(|mut row| {
                row.sort();
                row.into_iter().map(|(_, e)| e).collect()
            })
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// `E_λ` in Young's seminormal basis `{e_T}`.
#[derive(Clone, Debug)]
pub struct SnModule {
    lambda: Partition,
    tableaux: Vec<StandardTableau>,
    simple: Vec<Matrix>,
    /// Diagonal of the invariant form.
    form: Vec<Scalar>,
}

impl SnModule {
    /// Seminormal form with `a = c(k+1) − c(k)`: `s_k e_T = a^{-1} e_T + e_{T'}`
    /// when `k+1` sits in a lower row of `T` than `k`, and
    /// `s_k e_{T'} = (1 − a^{-2}) e_T − a^{-1} e_{T'}` for the partner.
    pub fn specht(lambda: &Partition) -> SnModule {
        let n = lambda.n();
        let tableaux = StandardTableau::all(lambda);
        let index: HashMap<&StandardTableau, usize> =
            tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let dim = tableaux.len();
        let mut simple = Vec::with_capacity(n.saturating_sub(1));
        for k in 0..n.saturating_sub(1) {
            let mut m = Matrix::zeros(dim, dim);
            for (j, t) in tableaux.iter().enumerate() {
                let ((r0, c0), (r1, c1)) = (t.position(k), t.position(k + 1));
                if r0 == r1 {
                    m[(j, j)] = Scalar::one();
                } else if c0 == c1 {
                    m[(j, j)] = -Scalar::one();
                } else {
                    let a = Scalar::from(t.content(k + 1) - t.content(k));
                    let inv = a.recip();
                    let partner = index[&t.swapped(k)];
                    m[(j, j)] = inv.clone();
                    m[(partner, j)] = if r1 > r0 {
                        Scalar::one()
                    } else {
                        Scalar::one() - &inv * &inv
                    };
                }
            }
            simple.push(m);
        }
        let form = invariant_form(&tableaux, &index, &simple);
        SnModule {
            lambda: lambda.clone(),
            tableaux,
            simple,
            form,
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// Matrix of `s_{k+1}` (0-based `k`).
    pub fn simple(&self, k: usize) -> &Matrix {
        &self.simple[k]
    }

    pub fn perm_matrix(&self, w: &Perm) -> Matrix {
        w.reduced_word()
            .iter()
            .fold(Matrix::identity(self.dim()), |acc, &k| {
                acc.mul(&self.simple[k])
            })
    }

    pub fn transposition(&self, i: usize, j: usize) -> Matrix {
        self.perm_matrix(&Perm::transposition(self.n(), i, j))
    }

    pub fn form(&self) -> &[Scalar] {
        &self.form
    }

    pub fn form_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, f) in self.form.iter().enumerate() {
            m[(i, i)] = f.clone();
        }
        m
    }

    /// `Σ_{j<i} s_ji` (0-based `i`); diagonal with entries `c_T(i)`.
    pub fn jucys_murphy(&self, i: usize) -> Matrix {
        (0..i).fold(Matrix::zeros(self.dim(), self.dim()), |acc, j| {
            acc.add(&self.transposition(j, i))
        })
    }
}

/// `F_{T'} = F_T (1 − a^{-2})` along the seminormal edges, from `F = 1` at
/// the first tableau.
fn invariant_form(
    tableaux: &[StandardTableau],
    index: &HashMap<&StandardTableau, usize>,
    simple: &[Matrix],
) -> Vec<Scalar> {
    let mut form: Vec<Option<Scalar>> = vec![None; tableaux.len()];
    let mut queue = VecDeque::new();
    if !tableaux.is_empty() {
        form[0] = Some(Scalar::one());
        queue.push_back(0);
    }
    while let Some(j) = queue.pop_front() {
        let t = &tableaux[j];
        let fj = form[j].clone().unwrap_or_else(Scalar::one);
        for (k, m) in simple.iter().enumerate() {
            let ((r0, c0), (r1, c1)) = (t.position(k), t.position(k + 1));
            if r0 == r1 || c0 == c1 {
                continue;
            }
            let p = index[&t.swapped(k)];
            if form[p].is_none() {
                // F symmetric against s_k: F_p m[p][j] = F_j m[j][p]
                form[p] = Some(&(&fj * &m[(j, p)]) * &m[(p, j)].recip());
                queue.push_back(p);
            }
        }
    }
    form.into_iter()
        .map(|f| f.unwrap_or_else(Scalar::one))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn coxeter_holds(m: &SnModule) -> bool {
        let n = m.n();
        let id = Matrix::identity(m.dim());
        (0..n - 1).all(|i| {
            let si = m.simple(i);
            si.mul(si) == id
                && (0..i).all(|j| {
                    let sj = m.simple(j);
                    if i == j + 1 {
                        si.mul(sj).mul(si) == sj.mul(si).mul(sj)
                    } else {
                        si.mul(sj) == sj.mul(si)
                    }
                })
        })
    }

    #[test]
    fn conjugates() {
        assert_eq!(part(&[2, 1]).conjugate(), part(&[2, 1]));
        assert_eq!(part(&[3]).conjugate(), part(&[1, 1, 1]));
        assert_eq!(part(&[4, 2, 1]).conjugate(), part(&[3, 2, 1, 1]));
        for n in 1..=7 {
            for l in Partition::all(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().n(), n);
            }
        }
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), part(&[3, 1, 1]));
        assert_eq!(part(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(4)[0], part(&[4]));
    }

    #[test]
    fn trivial_and_sign() {
        for n in 2..=5 {
            let triv = SnModule::specht(&part(&[n]));
            let sign = SnModule::specht(&part(&vec![1; n]));
            assert_eq!((triv.dim(), sign.dim()), (1, 1));
            for k in 0..n - 1 {
                assert_eq!(triv.simple(k), &Matrix::identity(1));
                assert_eq!(
                    sign.simple(k),
                    &Matrix::identity(1).scale(&Scalar::from(-1))
                );
            }
            for i in 0..n {
                assert_eq!(triv.jucys_murphy(i), Matrix::scalar(1, &Scalar::from(i)));
            }
        }
    }

    #[test]
    fn coxeter_presentation_and_dimensions() {
        for n in 2..=5 {
            let mut total: u128 = 0;
            for l in Partition::all(n) {
                let m = SnModule::specht(&l);
                assert!(coxeter_holds(&m), "{l}");
                assert_eq!(m.dim() as u128, l.dimension());
                total += (m.dim() * m.dim()) as u128;
            }
            assert_eq!(total, (1..=n as u128).product());
        }
    }

    #[test]
    fn jucys_murphy_is_content_diagonal() {
        for n in 2..=5 {
            for l in Partition::all(n) {
                let m = SnModule::specht(&l);
                let jm: Vec<Matrix> = (0..n).map(|i| m.jucys_murphy(i)).collect();
                for (i, jm_i) in jm.iter().enumerate() {
                    for (j, t) in m.tableaux().iter().enumerate() {
                        for r in 0..m.dim() {
                            let expect = if r == j {
                                Scalar::from(t.content(i))
                            } else {
                                Scalar::zero()
                            };
                            assert_eq!(jm_i[(r, j)], expect);
                        }
                    }
                }
            }
        }
        let m = SnModule::specht(&part(&[2, 1]));
        let diag: Vec<Scalar> = (0..2).map(|j| m.jucys_murphy(2)[(j, j)].clone()).collect();
        assert_eq!(diag, vec![Scalar::from(-1), Scalar::one()]);
    }

    #[test]
    fn invariant_form_is_positive_and_self_adjoint() {
        for n in 2..=5 {
            for l in Partition::all(n) {
                let m = SnModule::specht(&l);
                let f = m.form_matrix();
                assert!(m.form().iter().all(|x| x.is_positive()));
                for k in 0..n - 1 {
                    assert!(f.mul(m.simple(k)).is_symmetric());
                }
                let w = Perm::from_one_based(&(1..=n as i64).rev().collect::<Vec<_>>()).unwrap();
                let lhs = m.perm_matrix(&w).transpose().mul(&f);
                assert_eq!(lhs, f.mul(&m.perm_matrix(&w.inverse())));
            }
        }
    }

    #[test]
    fn perm_matrix_is_a_homomorphism() {
        let m = SnModule::specht(&part(&[3, 2]));
        for v in Perm::all(5).iter().step_by(7) {
            for w in Perm::all(5).iter().step_by(11) {
                assert_eq!(
                    m.perm_matrix(&v.compose(w)),
                    m.perm_matrix(v).mul(&m.perm_matrix(w))
                );
            }
        }
    }
}
