//! Shared expression syntax for polynomials, algebra elements and affine
//! Weyl group words.
//!
//! Grammar (juxtaposition multiplies, like `*`):
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := power (['*'] power)*
//! power   := primary ['^' ['-'] int]
//! primary := int ['/' int] | ident ['[' int (',' int)* ']'] | '(' expr ')'
//! ```

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Scalar),
    /// Identifier with an optional bracketed integer list, e.g. `x3` or `t[1,0,-1]`.
    Atom(String, Option<Vec<i64>>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Int(s) | Tok::Ident(s) => s.as_str(),
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
        };
        write!(f, "'{s}'")
    }
}

fn describe(t: &Option<Tok>) -> String {
    t.as_ref()
        .map_or_else(|| "end of input".to_string(), Tok::to_string)
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    return Err(Error::Parse(format!(
                        "decimal literals are not accepted in {src:?}; use a fraction"
                    )));
                }
                out.push(Tok::Int(chars[start..i].iter().collect()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            _ => {
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    ',' => Tok::Comma,
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in {src:?}"
                        )))
                    }
                });
                i += 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!(
                "expected {t}, found {}",
                describe(&got)
            ))),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Int(s)) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("integer out of range: {s}")))?;
                Ok(if neg { -v } else { v })
            }
            got => Err(Error::Parse(format!(
                "expected integer, found {}",
                describe(&got)
            ))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Expr::Neg(Box::new(self.term()?))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = self.int()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Int(s)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Int(d)) => Ok(Expr::Num(format!("{s}/{d}").parse()?)),
                        got => Err(Error::Parse(format!(
                            "expected denominator after '/', found {}",
                            describe(&got)
                        ))),
                    }
                } else {
                    Ok(Expr::Num(s.parse()?))
                }
            }
            Some(Tok::Ident(name)) => {
                if self.peek() == Some(&Tok::LBracket) {
                    self.pos += 1;
                    let mut args = Vec::new();
                    if self.peek() != Some(&Tok::RBracket) {
                        args.push(self.int()?);
                        while self.peek() == Some(&Tok::Comma) {
                            self.pos += 1;
                            args.push(self.int()?);
                        }
                    }
                    self.expect(Tok::RBracket)?;
                    Ok(Expr::Atom(name, Some(args)))
                } else {
                    Ok(Expr::Atom(name, None))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("unexpected {}", describe(&got)))),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {} in {src:?}",
            p.pos
        )));
    }
    Ok(e)
}

/// Splits an identifier such as `x12` into its letter prefix and index.
pub fn split_ident(name: &str) -> Option<(&str, &str)> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (head, tail) = name.split_at(split);
    if head.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some((head, tail))
}

/// Parses a bracketed integer list such as `[3,1,1]`.
pub fn parse_int_list(src: &str) -> Result<Vec<i64>> {
    let t = src.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a list like [2,1], got {src:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {p:?} in {src:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_coefficients_and_powers() {
        let e = parse_expr("3/2*x1^2*x2^-1 - y3").unwrap();
        match e {
            Expr::Sub(lhs, rhs) => {
                assert_eq!(*rhs, Expr::Atom("y3".into(), None));
                assert!(matches!(*lhs, Expr::Mul(..)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn brackets_and_juxtaposition() {
        let e = parse_expr("t[1,0,-1] s1 s2").unwrap();
        assert!(matches!(e, Expr::Mul(..)));
        assert_eq!(parse_int_list("[3, 1,1]").unwrap(), vec![3, 1, 1]);
        assert!(parse_expr("1.5*x1").is_err());
        assert!(parse_expr("x1 +").is_err());
        assert_eq!(split_ident("s12"), Some(("s", "12")));
        assert_eq!(split_ident("pi"), None);
    }
}
