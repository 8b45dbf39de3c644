use std::cmp::Ordering;
use std::fmt;

use crate::weyl::Perm;

/// Exponent vector of a (Laurent) monomial in `x_1..x_n`.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors compared left to right (a larger power of `x_1` is larger).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    /// The unit exponent vector `e_i` (0-based index).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Monomial(v)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn with_delta(&self, i: usize, delta: i32) -> Monomial {
        let mut v = self.0.clone();
        v[i] += delta;
        Monomial(v)
    }

    /// `w · x^a`: the exponent of `x_i` moves to `x_{w(i)}`.
    pub fn permuted(&self, w: &Perm) -> Monomial {
        let mut v = vec![0; self.n()];
        for (i, &e) in self.0.iter().enumerate() {
            v[w.apply(i)] = e;
        }
        Monomial(v)
    }

    /// All nonnegative exponent vectors of length `n` and total degree `d`,
    /// in descending graded-lex order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<i32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == n {
                prefix.push(d as i32);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e as i32);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// Writes `x1^2*x2^-1`; the empty monomial writes nothing.
    pub fn write_factors(&self, f: &mut impl fmt::Write, var: char) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            write!(f, "{var}{}", i + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        self.write_factors(f, 'x')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![1, 1]);
        let c = Monomial::new(vec![0, 1]);
        assert!(a > b && b > c);
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(
            Monomial::all_of_degree(2, 1),
            vec![Monomial::new(vec![1, 0]), c]
        );
    }

    #[test]
    fn permutation_moves_exponents() {
        // s_13 on x_1^2 x_3 gives x_3^2 x_1
        let w = Perm::transposition(3, 0, 2);
        let m = Monomial::new(vec![2, 0, 1]);
        assert_eq!(m.permuted(&w), Monomial::new(vec![1, 0, 2]));
    }
}
