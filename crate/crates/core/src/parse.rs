//! Text parser for polynomial and rational-function expressions.
//!
//! Accepts the canonical serialization (`(2*tau^1)/(1 + tau^1)`) as well as
//! ordinary hand-written forms like `t^2-t+1`. Identifiers are resolved
//! against a fixed variable set, optionally through an alias table.

use num_bigint::BigInt;

use crate::error::Error;
use crate::poly::Vars;
use crate::rat::Rat;
use crate::ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, Error> {
    let mut toks = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' | '−' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits.parse().map_err(|_| Error::Parse(format!("bad number {digits}")))?;
                toks.push(Tok::Num(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Ident(name));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
    aliases: &'a [(&'a str, &'a str)],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFunc, Error> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, Error> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    acc = acc.div(&self.factor()?)?;
                }
                // Implicit multiplication: `2tau`, `(1+t)(1-t)`.
                Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::Num(_)) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc, Error> {
        if let Some(Tok::Minus) = self.peek() {
            self.next();
            return Ok(self.factor()?.neg());
        }
        let mut base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            let neg = if let Some(Tok::Minus) = self.peek() {
                self.next();
                true
            } else {
                false
            };
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    base = base.pow(if neg { -e } else { e })?;
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, Error> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(RatFunc::from_rat(self.vars, Rat::from_integer(n))),
            Some(Tok::Ident(name)) => {
                let resolved = self
                    .aliases
                    .iter()
                    .find(|(a, _)| *a == name)
                    .map(|(_, v)| *v)
                    .unwrap_or(name.as_str());
                if self.vars.index_of(resolved).is_none() {
                    return Err(Error::Parse(format!("unknown variable '{name}'")));
                }
                Ok(RatFunc::var(self.vars, resolved))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse an expression over `vars`, mapping identifier aliases first.
pub fn parse_ratfunc_with_aliases(
    s: &str,
    vars: &Vars,
    aliases: &[(&str, &str)],
) -> Result<RatFunc, Error> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, vars, aliases };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse("trailing input".into()));
    }
    Ok(e)
}

pub fn parse_ratfunc(s: &str, vars: &Vars) -> Result<RatFunc, Error> {
    parse_ratfunc_with_aliases(s, vars, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{vars_qt, vars_tau};

    #[test]
    fn canonical_round_trip() {
        let vs = vars_tau();
        let f = parse_ratfunc("(2*tau^1)/(1 + tau^1)", &vs).unwrap();
        assert_eq!(f.text(), "(2*tau^1)/(1 + tau^1)");
        let again = parse_ratfunc(&f.text(), &vs).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn loose_input() {
        let vs = vars_tau();
        let f = parse_ratfunc_with_aliases("(t^2-t+1)/(t+1)", &vs, &[("t", "tau")]).unwrap();
        assert_eq!(f.text(), "(1 - tau^1 + tau^2)/(1 + tau^1)");
    }

    #[test]
    fn rational_constant() {
        let vs = vars_qt();
        let f = parse_ratfunc("3/4", &vs).unwrap();
        assert_eq!(f.as_rat().unwrap(), crate::rat::rat(3, 4));
        let g = parse_ratfunc("q - t", &vs).unwrap();
        assert_eq!(g.text(), "-t^1 + q^1");
    }

    #[test]
    fn implicit_multiplication_and_unary_minus() {
        let vs = vars_tau();
        let f = parse_ratfunc("-2tau(1+tau)", &vs).unwrap();
        assert_eq!(f.text(), "-2*tau^1 - 2*tau^2");
    }
}
