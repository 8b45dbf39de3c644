//! Text and JSON forms of PBW elements.
//!
//! Atoms: `x3`, `y2`/`u2`, `s1` (simple), `s13` or `s[1,3]` (transposition),
//! `w[2,1,3]` (window), and in the trigonometric flavor `s0` and `pi`.
//! Two-digit `s` indices are read as transpositions only for `n ≤ 9`.

use std::fmt;

use serde_json::{json, Value};

use super::{Algebra, Elem, Flavor, TrigAlgebra, Word};
use crate::error::{Error, Result};
use crate::exactpoly::write_coeff_prefix;
use crate::text::{self, Expr};
use crate::weyl::Perm;

/// `s12`, `s[3,11]`, or `w[..]`; the identity writes nothing.
pub(crate) fn write_perm(s: &mut String, w: &Perm) {
    if w.is_identity() {
        return;
    }
    match w.as_transposition() {
        Some((i, j)) if w.n() <= 9 => s.push_str(&format!("s{}{}", i + 1, j + 1)),
        Some((i, j)) => s.push_str(&format!("s[{},{}]", i + 1, j + 1)),
        None => s.push_str(&w.to_string()),
    }
}

pub(crate) fn write_word(s: &mut String, word: &Word, dvar: char) {
    let mut parts = Vec::with_capacity(3);
    if !word.x.is_one() {
        let mut p = String::new();
        let _ = word.x.write_factors(&mut p, 'x');
        parts.push(p);
    }
    if !word.w.is_identity() {
        let mut p = String::new();
        write_perm(&mut p, &word.w);
        parts.push(p);
    }
    if !word.d.is_one() {
        let mut p = String::new();
        let _ = word.d.write_factors(&mut p, dvar);
        parts.push(p);
    }
    s.push_str(&parts.join("*"));
}

impl<F: Flavor> fmt::Display for Elem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms().enumerate() {
            write_coeff_prefix(&mut s, c, k == 0, w.is_one());
            write_word(&mut s, w, F::DVAR);
        }
        f.write_str(&s)
    }
}

impl<F: Flavor> Elem<F> {
    /// Terms in print order with 1-based permutation windows.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(w, c)| {
                let window: Vec<usize> = w.w.window().iter().map(|v| v + 1).collect();
                let mut t = serde_json::Map::new();
                t.insert("coeff".into(), json!(c.to_string()));
                t.insert("x".into(), json!(w.x.exps()));
                t.insert("w".into(), json!(window));
                t.insert(F::DVAR.to_string(), json!(w.d.exps()));
                Value::Object(t)
            })
            .collect();
        json!({ "algebra": F::NAME, "n": self.n(), "terms": terms })
    }
}

impl<F: Flavor> Algebra<F> {
    /// Parses an element such as `x1^2*s12*y3 + 3/2*y1`.
    pub fn parse(&self, src: &str) -> Result<Elem<F>> {
        let e = text::parse_expr(src)?;
        self.eval(&e)
    }

    fn index(&self, name: &str, idx: &str) -> Result<usize> {
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad index in {name:?}")))?;
        if i == 0 || i > self.n() {
            return Err(Error::Parse(format!(
                "index of {name:?} out of range 1..{}",
                self.n()
            )));
        }
        Ok(i - 1)
    }

    fn atom(&self, name: &str, args: Option<&Vec<i64>>) -> Result<Elem<F>> {
        let n = self.n();
        if let Some(args) = args {
            return match name {
                "w" if args.len() == n => Ok(self.perm(Perm::from_one_based(args)?)),
                "s" if args.len() == 2 => {
                    let to_idx = |v: i64| -> Result<usize> {
                        if v >= 1 && (v as usize) <= n {
                            Ok(v as usize - 1)
                        } else {
                            Err(Error::Parse(format!("s[..] index {v} out of range")))
                        }
                    };
                    let (i, j) = (to_idx(args[0])?, to_idx(args[1])?);
                    if i == j {
                        return Err(Error::Parse("s[i,j] needs i != j".into()));
                    }
                    Ok(self.s_ij(i, j))
                }
                _ => Err(Error::Parse(format!("unexpected bracket form {name}[..]"))),
            };
        }
        if name == "pi" {
            return self.trig_special("pi");
        }
        let (head, idx) = text::split_ident(name)
            .ok_or_else(|| Error::Parse(format!("unknown symbol {name:?}")))?;
        match head {
            "x" => Ok(self.x(self.index(name, idx)?)),
            "y" if !F::TRIG => Ok(self.d(self.index(name, idx)?)),
            "u" if F::TRIG => Ok(self.d(self.index(name, idx)?)),
            "s" if idx == "0" => self.trig_special("s0"),
            "s" if idx.len() == 2 && n <= 9 => {
                let i = self.index(name, &idx[..1])?;
                let j = self.index(name, &idx[1..])?;
                if i == j {
                    return Err(Error::Parse(format!("{name:?} is not a transposition")));
                }
                Ok(self.s_ij(i, j))
            }
            "s" => {
                let k = self.index(name, idx)?;
                if k + 1 >= n {
                    return Err(Error::Parse(format!("{name:?} out of range for n={n}")));
                }
                Ok(self.s(k))
            }
            _ => Err(Error::Parse(format!(
                "unknown generator {name:?} for the {} algebra",
                F::NAME
            ))),
        }
    }

    fn trig_special(&self, what: &str) -> Result<Elem<F>> {
        if !F::TRIG {
            return Err(Error::Parse(format!(
                "{what} is only available in the trigonometric algebra"
            )));
        }
        // Built in H̃ and reread as the same words.
        let t = TrigAlgebra::with(self.n(), self.kappa().clone())?;
        let e = match what {
            "pi" => t.pi(),
            _ => t.s0(),
        };
        Ok(e.recast())
    }

    fn eval(&self, e: &Expr) -> Result<Elem<F>> {
        Ok(match e {
            Expr::Num(c) => self.scalar(c.clone()),
            Expr::Atom(name, args) => self.atom(name, args.as_ref())?,
            Expr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(&self.eval(b)?),
            Expr::Mul(a, b) => self.mul(&self.eval(a)?, &self.eval(b)?),
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                if *k >= 0 {
                    self.pow(&base, *k as u32)
                } else {
                    let inv = self
                        .invert_group_like(&base)
                        .map_err(|_| Error::Parse(format!("cannot invert {base}")))?;
                    self.pow(&inv, k.unsigned_abs() as u32)
                }
            }
        })
    }
}
