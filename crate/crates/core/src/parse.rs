//! Polynomial expression parser.
//!
//! Accepts declared variable names, integer literals, rational literals
//! `a/b` (over Q only), `+ - * ^`, parentheses, and juxtaposition as
//! multiplication (`2T0T1`, `3 T0`). A `/` anywhere other than inside a
//! rational literal is rejected.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Num(text[start..i].parse().expect("digits")), start));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, K> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring>,
    _field: std::marker::PhantomData<K>,
}

impl<'a, K: Field> Parser<'a, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial<K>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {}
                Some(Tok::Slash) => return self.err("division is not supported"),
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<Polynomial<K>> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            return self.factor();
        }
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = match self.peek() {
                Some(Tok::Num(n)) => u32::try_from(n.clone()),
                _ => return self.err("expected a natural-number exponent"),
            };
            let exp = match exp {
                Ok(e) => e,
                Err(_) => return self.err("exponent too large"),
            };
            self.pos += 1;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial<K>> {
        let field = self.ring.field();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    let at = self.offset();
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Tok::Num(d)) => d.clone(),
                        _ => return self.err("division is not supported"),
                    };
                    self.pos += 1;
                    let c = K::from_ratio(&n, &d, &field).map_err(|e| match e {
                        Error::Parse { message, .. } => Error::Parse {
                            position: at,
                            message,
                        },
                        other => other,
                    })?;
                    return Ok(Polynomial::constant(self.ring, c));
                }
                Ok(Polynomial::constant(self.ring, K::from_integer(&n, &field)))
            }
            Some(Tok::Ident(name)) => {
                let at = self.offset();
                self.pos += 1;
                let exps = self.split_identifier(&name, at)?;
                Ok(Polynomial::term(self.ring, Monomial::new(exps), K::one()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Slash) => self.err("division is not supported"),
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }

    /// An identifier is a declared variable, or a juxtaposition of declared
    /// variables split greedily by longest match (`T0T1`).
    fn split_identifier(&self, name: &str, at: usize) -> Result<Vec<u32>> {
        let mut exps = vec![0u32; self.ring.num_vars()];
        if let Some(i) = self.ring.var_index(name) {
            exps[i] = 1;
            return Ok(exps);
        }
        let mut rest = name;
        while !rest.is_empty() {
            let best = self
                .ring
                .var_names()
                .iter()
                .enumerate()
                .filter(|(_, v)| rest.starts_with(v.as_str()))
                .max_by_key(|(_, v)| v.len());
            match best {
                Some((i, v)) => {
                    exps[i] += 1;
                    rest = &rest[v.len()..];
                }
                None => {
                    return Err(Error::UnknownVariable {
                        name: name.to_string(),
                        position: at,
                    })
                }
            }
        }
        Ok(exps)
    }
}

pub fn parse_polynomial<K: Field>(text: &str, ring: &Arc<Ring>) -> Result<Polynomial<K>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ring,
        _field: std::marker::PhantomData,
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("unexpected trailing input");
    }
    Ok(p)
}
