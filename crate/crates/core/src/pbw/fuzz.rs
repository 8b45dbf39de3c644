//! Randomized confluence evidence and the filtration identity for `ȷ(u_i)^d`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Algebra, Elem, Flavor, LocalizedAlgebra, Word};
use crate::error::Result;
use crate::exactpoly::Monomial;
use crate::scalar::Scalar;
use crate::weyl::Perm;

/// Random exponent vector with `Σ|e_i| ≤ max_deg`; negative entries only
/// when `laurent`.
pub fn random_monomial<R: Rng>(n: usize, max_deg: u32, laurent: bool, rng: &mut R) -> Monomial {
    let mut e = vec![0i32; n];
    let k = rng.gen_range(0..=max_deg);
    for _ in 0..k {
        let i = rng.gen_range(0..n);
        e[i] += if laurent && rng.gen_bool(0.5) { -1 } else { 1 };
    }
    Monomial::new(e)
}

pub fn random_word<F: Flavor, R: Rng>(n: usize, max_deg: u32, rng: &mut R) -> Word {
    Word {
        x: random_monomial(n, max_deg, F::LAURENT, rng),
        w: Perm::random(n, rng),
        d: random_monomial(n, max_deg, false, rng),
    }
}

/// Up to `max_terms` random words with small rational coefficients.
pub fn random_elem<F: Flavor, R: Rng>(
    n: usize,
    max_deg: u32,
    max_terms: usize,
    rng: &mut R,
) -> Elem<F> {
    let k = rng.gen_range(1..=max_terms);
    Elem::from_terms(
        n,
        (0..k).map(|_| {
            let c = Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            (random_word::<F, _>(n, max_deg, rng), c)
        }),
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub algebra: &'static str,
    pub n: usize,
    pub kappa: String,
    pub trials: usize,
    pub failures: usize,
    /// `(a, b, c)` of the first failing triple.
    pub first_counterexample: Option<[String; 3]>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks `(ab)c = a(bc)` on `count` random triples of single words with
/// component degrees at most `max_deg`.
pub fn associativity_fuzz<F: Flavor>(
    alg: &Algebra<F>,
    count: usize,
    max_deg: u32,
    seed: u64,
) -> FuzzReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.n();
    let mut failures = 0;
    let mut first = None;
    for _ in 0..count {
        let [a, b, c]: [Elem<F>; 3] = std::array::from_fn(|_| {
            Elem::from_word(random_word::<F, _>(n, max_deg, &mut rng), Scalar::one())
        });
        let left = alg.mul(&alg.mul(&a, &b), &c);
        let right = alg.mul(&a, &alg.mul(&b, &c));
        if left != right {
            failures += 1;
            first.get_or_insert_with(|| [a.to_string(), b.to_string(), c.to_string()]);
        }
    }
    FuzzReport {
        algebra: F::NAME,
        n,
        kappa: alg.kappa().to_string(),
        trials: count,
        failures,
        first_counterexample: first,
    }
}

/// `ȷ(u_i) = x_i y_i + Σ_{j<i} s_ji` in the localized rational algebra.
pub fn jmath_u(alg: &LocalizedAlgebra, i: usize) -> Elem<super::LocalizedRational> {
    (0..i).fold(alg.mul(&alg.x(i), &alg.d(i)), |acc, j| {
        acc.add(&alg.s_ij(j, i))
    })
}

/// Whether every word of `ȷ(u_i)^d` has nonnegative `x` exponents and equal
/// `x`- and `y`-degrees at most `d`.
pub fn filtration_check(alg: &LocalizedAlgebra, i: usize, d: u32) -> Result<bool> {
    let p = alg.pow(&jmath_u(alg, i), d);
    let ok = p.terms().all(|(w, _)| {
        w.x.is_polynomial() && w.x.degree() == w.d.degree() && w.d.degree() <= d as i64
    });
    Ok(ok)
}
