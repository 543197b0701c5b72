//! Text syntax for polynomials: integers, declared variable names, the
//! extension generator, `+ - * / ^` and parentheses. Juxtaposition such as
//! `2x` or `3(x+y)` means multiplication; `/` only divides by constants.

use num_bigint::BigInt;

use super::poly::{Poly, Ring};
use super::PolyError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[s..i].iter().collect();
            out.push((s, Tok::Num(digits.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((s, Tok::Ident(chars[s..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else if c == '−' {
            out.push((i, Tok::Op('-')));
            i += 1;
        } else {
            return Err(PolyError::Parse {
                pos: i,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.here(),
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(self.err("division by a non-constant"));
                    }
                    let c = d.constant_term();
                    let inv = acc
                        .field()
                        .inv(&c)
                        .map_err(|_| self.err("division by zero"))?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, PolyError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if let Some(Tok::Op('^')) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(n)) => {
                            self.pos += 1;
                            let e: u32 = n
                                .try_into()
                                .map_err(|_| self.err("exponent too large"))?;
                            Ok(base.pow(e))
                        }
                        _ => Err(self.err("expected a nonnegative integer exponent")),
                    }
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<Poly, PolyError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(i) = self.ring.var_index(&name) {
                    Ok(self.ring.var(i))
                } else if self.ring.field().generator_name() == Some(name.as_str()) {
                    Ok(self.ring.constant(self.ring.field().generator().unwrap()))
                } else {
                    Err(PolyError::UnknownVariable(name))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            Some(_) => Err(self.err("unexpected token")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_poly(ring: &Ring, text: &str) -> Result<Poly, PolyError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        len: text.chars().count(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}
