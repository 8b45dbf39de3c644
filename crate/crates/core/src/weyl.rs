//! The symmetric group `S_n` and the extended affine Weyl group `P ⋊ S_n`.
//!
//! Composition applies the rightmost factor first: `(v * w)(i) = v(w(i))`.
//! Permutations act on exponent vectors by moving coordinates,
//! `(w·μ)_{w(i)} = μ_i`, which matches `w x_i w^{-1} = x_{w(i)}`.

use std::fmt;
use std::ops::Mul;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::text::{self, Expr};

/// A permutation of `{0, .., n-1}` in window notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "rank too large");
        Perm((0..n as u8).collect())
    }

    /// Builds from a 0-based window; `None` unless it is a bijection.
    pub fn from_window(window: Vec<usize>) -> Option<Self> {
        let n = window.len();
        let mut seen = vec![false; n];
        for &v in &window {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm(window.into_iter().map(|v| v as u8).collect()))
    }

    /// Builds from a 1-based window such as `[2,1,3]`.
    pub fn from_one_based(window: &[i64]) -> Result<Self> {
        let w: Option<Vec<usize>> = window
            .iter()
            .map(|&v| if v >= 1 { Some(v as usize - 1) } else { None })
            .collect();
        w.and_then(Perm::from_window)
            .ok_or_else(|| Error::Parse(format!("{window:?} is not a permutation window")))
    }

    /// The simple reflection `s_{k+1}` swapping `k` and `k+1` (0-based).
    pub fn simple(n: usize, k: usize) -> Self {
        assert!(k + 1 < n, "simple reflection index out of range");
        Self::transposition(n, k, k + 1)
    }

    /// The transposition of `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i, j);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn window(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "permutation degrees differ");
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Number of inversions, equal to the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A left descent `k` with `ℓ(s_k w) < ℓ(w)`, i.e. `w^{-1}(k) > w^{-1}(k+1)`.
    pub fn left_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (0..self.n().saturating_sub(1)).find(|&k| inv.0[k] > inv.0[k + 1])
    }

    /// A reduced word `[k_1, .., k_l]` (0-based) with `w = s_{k_1} ⋯ s_{k_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(k) = w.left_descent() {
            word.push(k);
            w = Perm::simple(self.n(), k).compose(&w);
        }
        word
    }

    /// The pair `(i, j)`, `i < j`, when this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (0..self.n()).filter(|&i| self.apply(i) != i).collect();
        match moved[..] {
            [i, j] => Some((i, j)),
            _ => None,
        }
    }

    /// All permutations of degree `n` in lexicographic window order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Perm {
        let mut w: Vec<u8> = (0..n as u8).collect();
        w.shuffle(rng);
        Perm(w)
    }

    /// `w·μ` with `(w·μ)_{w(i)} = μ_i`.
    pub fn act_on_vec<T: Clone + Default>(&self, mu: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); mu.len()];
        for (i, m) in mu.iter().enumerate() {
            out[self.apply(i)] = m.clone();
        }
        out
    }

    /// Space-separated simple reflections, e.g. `s1 s2 s1`; `1` for the identity.
    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|k| format!("s{}", k + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Mul for &Perm {
    type Output = Perm;
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

/// 1-based window, e.g. `w[2,1,3]`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("w[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `t_η w` in the extended affine Weyl group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AffineElem {
    pub translation: Vec<i64>,
    pub perm: Perm,
}

impl AffineElem {
    pub fn identity(n: usize) -> Self {
        AffineElem {
            translation: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    pub fn translation(eta: Vec<i64>) -> Self {
        let n = eta.len();
        AffineElem {
            translation: eta,
            perm: Perm::identity(n),
        }
    }

    pub fn from_perm(perm: Perm) -> Self {
        AffineElem {
            translation: vec![0; perm.n()],
            perm,
        }
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// `(t_η w)(t_μ v) = t_{η + w·μ}(wv)`.
    pub fn mul(&self, other: &AffineElem) -> AffineElem {
        let moved = self.perm.act_on_vec(&other.translation);
        AffineElem {
            translation: self
                .translation
                .iter()
                .zip(&moved)
                .map(|(a, b)| a + b)
                .collect(),
            perm: self.perm.compose(&other.perm),
        }
    }

    /// `(t_η w)^{-1} = t_{-w^{-1}·η} w^{-1}`.
    pub fn inverse(&self) -> AffineElem {
        let winv = self.perm.inverse();
        AffineElem {
            translation: winv
                .act_on_vec(&self.translation)
                .into_iter()
                .map(|v| -v)
                .collect(),
            perm: winv,
        }
    }

    pub fn pow(&self, k: i64) -> AffineElem {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = AffineElem::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Membership in the submonoid with nonnegative translations.
    pub fn is_nonnegative(&self) -> bool {
        self.translation.iter().all(|&v| v >= 0)
    }

    /// `s_0 = t_{ε_1 - ε_n} s_{1n}`.
    pub fn s0(n: usize) -> AffineElem {
        let mut eta = vec![0; n];
        eta[0] = 1;
        eta[n - 1] = -1;
        AffineElem {
            translation: eta,
            perm: Perm::transposition(n, 0, n - 1),
        }
    }

    /// Parses products such as `t[1,0,-1] s1 s2`, `pi^-2 s0` or `w[2,1,3]`.
    pub fn parse(src: &str, n: usize) -> Result<AffineElem> {
        eval_affine(&text::parse_expr(src)?, n)
    }
}

/// `π = t_{ε_1} s_1 s_2 ⋯ s_{n-1}`.
pub fn pi_element(n: usize) -> AffineElem {
    assert!(n >= 2, "π needs n ≥ 2");
    let mut c = Perm::identity(n);
    for k in 0..n - 1 {
        c = c.compose(&Perm::simple(n, k));
    }
    let mut eta = vec![0; n];
    eta[0] = 1;
    AffineElem {
        translation: eta,
        perm: c,
    }
}

/// `w = π^k · wbar` with `k = n·min(0, min_i η_i)`; `wbar` has nonnegative
/// translation and the same permutation part as `w`.
pub fn pi_decompose(w: &AffineElem) -> (i64, AffineElem) {
    let n = w.n() as i64;
    let m = w.translation.iter().copied().min().unwrap_or(0).min(0);
    let wbar = AffineElem {
        translation: w.translation.iter().map(|v| v - m).collect(),
        perm: w.perm.clone(),
    };
    (n * m, wbar)
}

fn eval_affine(e: &Expr, n: usize) -> Result<AffineElem> {
    Ok(match e {
        Expr::Num(c) if c.is_one() => AffineElem::identity(n),
        Expr::Mul(a, b) => eval_affine(a, n)?.mul(&eval_affine(b, n)?),
        Expr::Pow(a, k) => eval_affine(a, n)?.pow(*k),
        Expr::Atom(name, Some(args)) => match name.as_str() {
            "t" if args.len() == n => AffineElem::translation(args.clone()),
            "w" if args.len() == n => AffineElem::from_perm(Perm::from_one_based(args)?),
            _ => {
                return Err(Error::Parse(format!(
                    "{name}[..] needs exactly {n} entries"
                )))
            }
        },
        Expr::Atom(name, None) if name == "pi" => pi_element(n),
        Expr::Atom(name, None) => {
            let k = text::split_ident(name)
                .filter(|(h, _)| *h == "s")
                .and_then(|(_, i)| i.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(format!("unknown affine generator {name:?}")))?;
            match k {
                0 => AffineElem::s0(n),
                k if k < n => AffineElem::from_perm(Perm::simple(n, k - 1)),
                _ => return Err(Error::Parse(format!("s{k} out of range for n={n}"))),
            }
        }
        other => {
            return Err(Error::Parse(format!(
                "not a group word: {other:?} (sums and coefficients are not allowed)"
            )))
        }
    })
}

/// `t[η] s_.. s_..`; the zero translation and identity are omitted.
impl fmt::Display for AffineElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let has_t = self.translation.iter().any(|&v| v != 0);
        if has_t {
            let parts: Vec<String> = self.translation.iter().map(|v| v.to_string()).collect();
            write!(f, "t[{}]", parts.join(","))?;
        }
        if !self.perm.is_identity() {
            if has_t {
                f.write_str(" ")?;
            }
            f.write_str(&self.perm.word_string())?;
        } else if !has_t {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn perm_mul_examples() {
        let s1 = Perm::simple(3, 0);
        let s2 = Perm::simple(3, 1);
        assert!(s1.compose(&s1).is_identity());
        assert_eq!(&(&s1 * &s2) * &s1, &(&s2 * &s1) * &s2);
        // window of s1 s2 s1 is [3,2,1]
        assert_eq!(&(&s1 * &s2) * &s1, Perm::transposition(3, 0, 2));
        assert_eq!(Perm::transposition(3, 0, 2).to_string(), "w[3,2,1]");
    }

    #[test]
    fn length_and_reduced_words() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let rebuilt = word.iter().fold(Perm::identity(4), |acc, &k| {
                acc.compose(&Perm::simple(4, k))
            });
            assert_eq!(rebuilt, w);
        }
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::transposition(5, 0, 4).length(), 7);
    }

    #[test]
    fn affine_mul_examples() {
        let t1 = AffineElem::translation(vec![1, 0]);
        let t2 = AffineElem::translation(vec![0, 1]);
        assert_eq!(t1.mul(&t2), AffineElem::translation(vec![1, 1]));
        let s1 = AffineElem::from_perm(Perm::simple(2, 0));
        assert_eq!(s1.mul(&t1).mul(&s1), t2);
        for n in 2..6 {
            let s0 = AffineElem::s0(n);
            assert_eq!(s0.mul(&s0), AffineElem::identity(n));
        }
    }

    #[test]
    fn pi_examples() {
        let pi = pi_element(2);
        assert_eq!(pi.translation, vec![1, 0]);
        assert_eq!(pi.perm, Perm::simple(2, 0));
        for n in 2..=6 {
            let pi = pi_element(n);
            assert_eq!(pi.pow(n as i64), AffineElem::translation(vec![1; n]));
            assert_eq!(pi.mul(&pi.inverse()), AffineElem::identity(n));
        }
    }

    #[test]
    fn pi_decompose_examples() {
        let w = AffineElem::from_perm(Perm::simple(3, 1));
        assert_eq!(pi_decompose(&w), (0, w.clone()));
        let (k, wbar) = pi_decompose(&AffineElem::translation(vec![-1, -1]));
        assert_eq!((k, wbar), (-2, AffineElem::identity(2)));
        let w = AffineElem::translation(vec![-1, 0]);
        let (k, wbar) = pi_decompose(&w);
        assert_eq!(k, -2);
        assert_eq!(wbar, AffineElem::translation(vec![0, 1]));
        assert_eq!(pi_element(2).pow(2).mul(&w), wbar);
    }

    #[test]
    fn text_forms() {
        let a = AffineElem::parse("t[1,0,-1] s1 s2", 3).unwrap();
        assert_eq!(AffineElem::parse(&a.to_string(), 3).unwrap(), a);
        assert_eq!(
            AffineElem::parse("pi^3", 3).unwrap(),
            AffineElem::translation(vec![1, 1, 1])
        );
        assert_eq!(AffineElem::parse("1", 2).unwrap().to_string(), "1");
        assert!(AffineElem::parse("s3", 3).is_err());
        assert!(AffineElem::parse("s1 + s2", 3).is_err());
    }

    #[test]
    fn nonnegative_monoid_closure() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=5 {
            let mut gens = vec![pi_element(n)];
            gens.extend((0..n - 1).map(|k| AffineElem::from_perm(Perm::simple(n, k))));
            for _ in 0..200 {
                let len = rng.gen_range(0..12);
                let w = (0..len).fold(AffineElem::identity(n), |acc, _| {
                    acc.mul(gens.choose(&mut rng).unwrap())
                });
                let (k, wbar) = pi_decompose(&w);
                assert!(k >= 0 && w.is_nonnegative() && wbar.is_nonnegative());
            }
        }
    }

    fn arb_affine() -> impl Strategy<Value = AffineElem> {
        (2usize..=5)
            .prop_flat_map(|n| {
                (
                    proptest::collection::vec(-5i64..=5, n),
                    Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                )
            })
            .prop_map(|(eta, w)| AffineElem {
                translation: eta,
                perm: Perm::from_window(w).unwrap(),
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn pi_decompose_round_trips(w in arb_affine()) {
            let (k, wbar) = pi_decompose(&w);
            prop_assert!(wbar.is_nonnegative());
            prop_assert_eq!(k % w.n() as i64, 0);
            prop_assert_eq!(pi_element(w.n()).pow(k).mul(&wbar), w);
        }

        #[test]
        fn affine_group_axioms(a in arb_affine()) {
            let n = a.n();
            prop_assert_eq!(a.mul(&a.inverse()), AffineElem::identity(n));
            let pi = pi_element(n);
            prop_assert_eq!(a.mul(&pi).mul(&a), a.mul(&pi.mul(&a)));
            prop_assert_eq!(AffineElem::parse(&a.to_string(), n).unwrap(), a);
        }
    }
}
