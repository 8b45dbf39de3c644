//! Memoized straightening.
//!
//! Four tables, keyed by generator data only, so they are shared by every
//! product in one algebra instance:
//!
//! * `d_i · x^γ`       peel one `x` factor per step (`|γ|` decreases),
//! * `d_i · v`         peel a left descent of `v` (`ℓ(v)` decreases),
//! * `d^β · x^γ`       peel one `d` factor (`|β|` decreases),
//! * `d^β · v`         same, for permutations.
//!
//! Locks are never held across a recursive call.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use super::{AlgebraParams, Word};
use crate::exactpoly::Monomial;
use crate::scalar::Scalar;
use crate::weyl::Perm;

type Terms = Arc<Vec<(Word, Scalar)>>;
/// `c · v · d_j` (or `c · v` for `None`).
type PermTerms = Arc<Vec<(Perm, Option<usize>, Scalar)>>;
/// `c · v · d^b`.
type PermMonoTerms = Arc<Vec<(Perm, Monomial, Scalar)>>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub gen_times_x: usize,
    pub gen_times_perm: usize,
    pub mono_times_x: usize,
    pub mono_times_perm: usize,
}

struct Memo<K, V>(Mutex<HashMap<K, V>>);

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo(Mutex::new(HashMap::new()))
    }

    fn get_or(&self, key: K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.0.lock().unwrap().get(&key) {
            return v.clone();
        }
        let v = compute();
        self.0.lock().unwrap().entry(key).or_insert(v).clone()
    }

    fn len(&self) -> usize {
        self.0.lock().unwrap().len()
    }
}

fn accumulate<K: Eq + Hash>(acc: &mut HashMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::hash_map::Entry;
    match acc.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(super) struct Engine {
    params: AlgebraParams,
    trig: bool,
    gen_x: Memo<(usize, Monomial), Terms>,
    gen_p: Memo<(usize, Perm), PermTerms>,
    mono_x: Memo<(Monomial, Monomial), Terms>,
    mono_p: Memo<(Monomial, Perm), PermMonoTerms>,
}

impl Engine {
    pub(super) fn new(params: AlgebraParams, trig: bool) -> Self {
        Engine {
            params,
            trig,
            gen_x: Memo::new(),
            gen_p: Memo::new(),
            mono_x: Memo::new(),
            mono_p: Memo::new(),
        }
    }

    fn n(&self) -> usize {
        self.params.n
    }

    pub(super) fn stats(&self) -> CacheStats {
        CacheStats {
            gen_times_x: self.gen_x.len(),
            gen_times_perm: self.gen_p.len(),
            mono_times_x: self.mono_x.len(),
            mono_times_perm: self.mono_p.len(),
        }
    }

    /// `[d_i, x_j]` as terms `c · x^e · w`.
    fn correction(&self, i: usize, j: usize) -> Vec<(Scalar, Monomial, Perm)> {
        let n = self.n();
        let one = Monomial::one(n);
        let s = |a: usize, b: usize| Perm::transposition(n, a, b);
        let mut out = Vec::with_capacity(n);
        if !self.trig {
            if i == j {
                out.push((self.params.kappa.clone(), one.clone(), Perm::identity(n)));
                for k in (0..n).filter(|&k| k != i) {
                    out.push((Scalar::one(), one.clone(), s(i, k)));
                }
            } else {
                out.push((-Scalar::one(), one, s(i, j)));
            }
            return out;
        }
        let x = |k: usize| Monomial::unit(n, k);
        if i == j {
            out.push((self.params.kappa.clone(), x(i), Perm::identity(n)));
            for k in 0..i {
                out.push((Scalar::one(), x(k), s(k, i)));
            }
            for k in i + 1..n {
                out.push((Scalar::one(), x(i), s(i, k)));
            }
        } else if i > j {
            out.push((-Scalar::one(), x(j), s(j, i)));
        } else {
            out.push((-Scalar::one(), x(i), s(i, j)));
        }
        out
    }

    /// `d_i · x^γ`.
    fn gen_times_x(&self, i: usize, gamma: &Monomial) -> Terms {
        self.gen_x.get_or((i, gamma.clone()), || {
            let n = self.n();
            let id = Perm::identity(n);
            let Some(j) = gamma.exps().iter().position(|&e| e != 0) else {
                return Arc::new(vec![(
                    Word {
                        x: gamma.clone(),
                        w: id,
                        d: Monomial::unit(n, i),
                    },
                    Scalar::one(),
                )]);
            };
            let mut acc: HashMap<Word, Scalar> = HashMap::new();
            let one = Monomial::one(n);
            if gamma.get(j) > 0 {
                // d_i x_j x^γ' = x_j (d_i x^γ') + c_ij x^γ'
                let rest = gamma.with_delta(j, -1);
                for (w, c) in self.gen_times_x(i, &rest).iter() {
                    let word = Word {
                        x: w.x.with_delta(j, 1),
                        w: w.w.clone(),
                        d: w.d.clone(),
                    };
                    accumulate(&mut acc, word, c.clone());
                }
                for (c, e, p) in self.correction(i, j) {
                    let x = e.mul(&rest.permuted(&p));
                    accumulate(
                        &mut acc,
                        Word {
                            x,
                            w: p,
                            d: one.clone(),
                        },
                        c,
                    );
                }
            } else {
                // d_i x_j^{-1} x^γ' = x_j^{-1} (d_i x^γ') - x_j^{-1} c_ij x^γ
                let rest = gamma.with_delta(j, 1);
                for (w, c) in self.gen_times_x(i, &rest).iter() {
                    let word = Word {
                        x: w.x.with_delta(j, -1),
                        w: w.w.clone(),
                        d: w.d.clone(),
                    };
                    accumulate(&mut acc, word, c.clone());
                }
                for (c, e, p) in self.correction(i, j) {
                    let x = e.with_delta(j, -1).mul(&gamma.permuted(&p));
                    accumulate(
                        &mut acc,
                        Word {
                            x,
                            w: p,
                            d: one.clone(),
                        },
                        -c,
                    );
                }
            }
            Arc::new(acc.into_iter().collect())
        })
    }

    /// `d_i · s_k` as terms `c · s_k · d_j` plus an optional constant.
    fn gen_times_simple(&self, i: usize, k: usize) -> Vec<(Option<usize>, Scalar)> {
        let one = Scalar::one();
        if !self.trig {
            let j = if i == k {
                k + 1
            } else if i == k + 1 {
                k
            } else {
                i
            };
            return vec![(Some(j), one)];
        }
        if i == k {
            // u_k s_k = s_k u_{k+1} - 1
            vec![(Some(k + 1), one.clone()), (None, -one)]
        } else if i == k + 1 {
            // u_{k+1} s_k = s_k u_k + 1
            vec![(Some(k), one.clone()), (None, one)]
        } else {
            vec![(Some(i), one)]
        }
    }

    /// `d_i · v`.
    fn gen_times_perm(&self, i: usize, v: &Perm) -> PermTerms {
        self.gen_p.get_or((i, v.clone()), || {
            let n = self.n();
            let Some(k) = v.left_descent() else {
                return Arc::new(vec![(v.clone(), Some(i), Scalar::one())]);
            };
            let sk = Perm::simple(n, k);
            let rest = sk.compose(v);
            let mut acc: HashMap<(Perm, Option<usize>), Scalar> = HashMap::new();
            for (j, c) in self.gen_times_simple(i, k) {
                match j {
                    // s_k (d_j v')
                    Some(j) => {
                        for (p, dj, c2) in self.gen_times_perm(j, &rest).iter() {
                            accumulate(&mut acc, (sk.compose(p), *dj), &c * c2);
                        }
                    }
                    None => accumulate(&mut acc, (rest.clone(), None), c),
                }
            }
            Arc::new(acc.into_iter().map(|((p, j), c)| (p, j, c)).collect())
        })
    }

    /// `d^β · x^γ`.
    fn mono_times_x(&self, beta: &Monomial, gamma: &Monomial) -> Terms {
        self.mono_x.get_or((beta.clone(), gamma.clone()), || {
            let n = self.n();
            let Some(i) = beta.exps().iter().rposition(|&e| e > 0) else {
                return Arc::new(vec![(
                    Word {
                        x: gamma.clone(),
                        w: Perm::identity(n),
                        d: Monomial::one(n),
                    },
                    Scalar::one(),
                )]);
            };
            let rest = beta.with_delta(i, -1);
            let mut acc: HashMap<Word, Scalar> = HashMap::new();
            // d_i (x^a w d^b), with (d_i x^a) = Σ x^a' w' d^b', |b'| ≤ 1
            for (w, c) in self.mono_times_x(&rest, gamma).iter() {
                for (w1, c1) in self.gen_times_x(i, &w.x).iter() {
                    let c01 = c * c1;
                    match w1.d.exps().iter().position(|&e| e != 0) {
                        None => {
                            let word = Word {
                                x: w1.x.clone(),
                                w: w1.w.compose(&w.w),
                                d: w.d.clone(),
                            };
                            accumulate(&mut acc, word, c01);
                        }
                        Some(j) => {
                            for (p, dj, c2) in self.gen_times_perm(j, &w.w).iter() {
                                let d = match dj {
                                    Some(dj) => w.d.with_delta(*dj, 1),
                                    None => w.d.clone(),
                                };
                                let word = Word {
                                    x: w1.x.clone(),
                                    w: w1.w.compose(p),
                                    d,
                                };
                                accumulate(&mut acc, word, &c01 * c2);
                            }
                        }
                    }
                }
            }
            Arc::new(acc.into_iter().collect())
        })
    }

    /// `d^β · v`.
    fn mono_times_perm(&self, beta: &Monomial, v: &Perm) -> PermMonoTerms {
        if !self.trig {
            // y^β v = v y^{v^{-1}·β}
            let moved = Monomial::new(v.inverse().act_on_vec(beta.exps()));
            return Arc::new(vec![(v.clone(), moved, Scalar::one())]);
        }
        self.mono_p.get_or((beta.clone(), v.clone()), || {
            let n = self.n();
            let Some(i) = beta.exps().iter().rposition(|&e| e > 0) else {
                return Arc::new(vec![(v.clone(), Monomial::one(n), Scalar::one())]);
            };
            let rest = beta.with_delta(i, -1);
            let mut acc: HashMap<(Perm, Monomial), Scalar> = HashMap::new();
            for (p, b, c) in self.mono_times_perm(&rest, v).iter() {
                for (p2, dj, c2) in self.gen_times_perm(i, p).iter() {
                    let d = match dj {
                        Some(j) => b.with_delta(*j, 1),
                        None => b.clone(),
                    };
                    accumulate(&mut acc, (p2.clone(), d), c * c2);
                }
            }
            Arc::new(acc.into_iter().map(|((p, b), c)| (p, b, c)).collect())
        })
    }

    /// `coeff · wa · wb`, streamed into `sink` (terms may repeat).
    pub(super) fn mul_words(
        &self,
        wa: &Word,
        wb: &Word,
        coeff: &Scalar,
        sink: &mut dyn FnMut(Word, Scalar),
    ) {
        if wa.d.is_one() {
            let x = wa.x.mul(&wb.x.permuted(&wa.w));
            sink(
                Word {
                    x,
                    w: wa.w.compose(&wb.w),
                    d: wb.d.clone(),
                },
                coeff.clone(),
            );
            return;
        }
        // x1 w1 (d1 x2) w2 d2 with d1 x2 = Σ x^a w d^b
        for (w, c) in self.mono_times_x(&wa.d, &wb.x).iter() {
            let x = wa.x.mul(&w.x.permuted(&wa.w));
            let w1 = wa.w.compose(&w.w);
            let c1 = coeff * c;
            for (p, b, c2) in self.mono_times_perm(&w.d, &wb.w).iter() {
                sink(
                    Word {
                        x: x.clone(),
                        w: w1.compose(p),
                        d: b.mul(&wb.d),
                    },
                    &c1 * c2,
                );
            }
        }
    }
}
