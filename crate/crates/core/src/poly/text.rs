//! Canonical text form of polynomials and its parser.
//!
//! Terms are printed from the largest monomial down, e.g.
//! `x[a,1,1]*x[a,2,2] - x[a,1,2]*x[a,2,1]`, `3/2*x[l,1,1]^2 + 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Coord, Monomial, Poly};
use crate::error::{Error, Result};
use crate::quiver::id;
use crate::rational::{self, Rational};

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers().is_empty() {
            return write!(f, "1");
        }
        for (k, (c, e)) in self.powers().iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{c}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if m.degree() == 0 {
                write!(f, "{}", rational::render(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::render(&abs))?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.text[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        Ok(self.text[start..self.pos].parse().unwrap())
    }

    fn index(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let n = self.digits()?;
        let n: u32 = n.try_into().map_err(|_| self.error("index out of range"))?;
        if n == 0 {
            self.pos = start;
            return Err(self.error("indices are 1-based"));
        }
        Ok(n)
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c != ',' && c != ']' && !c.is_whitespace()) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        if start == self.pos {
            return Err(self.error("expected an arrow identifier"));
        }
        Ok(&self.text[start..self.pos])
    }

    /// factor := number ['/' number] | 'x[' ident ',' n ',' n ']' ['^' n]
    fn factor(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let q = if self.eat('/') {
                    let d = self.digits()?;
                    if d == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from_integer(n)
                };
                Ok(Poly::constant(q))
            }
            Some('x') => {
                self.pos += 1;
                self.expect('[')?;
                let a = self.ident()?;
                self.expect(',')?;
                let r = self.index()?;
                self.expect(',')?;
                let c = self.index()?;
                self.expect(']')?;
                let v = Poly::var(Coord {
                    arrow: id(a),
                    row: r - 1,
                    col: c - 1,
                });
                if self.eat('^') {
                    let e = self.digits()?;
                    let e: u32 = e.try_into().map_err(|_| self.error("exponent too large"))?;
                    Ok(v.pow(e))
                } else {
                    Ok(v)
                }
            }
            Some('(') => {
                self.pos += 1;
                let p = self.sum()?;
                self.expect(')')?;
                Ok(p)
            }
            _ => Err(self.error("expected a number, coordinate or `(`")),
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parses the canonical text form (and the obvious generalizations:
/// parentheses, repeated factors, any term order).
pub fn parse_poly(text: &str) -> Result<Poly> {
    let mut cur = Cursor { text, pos: 0 };
    let p = cur.sum()?;
    cur.skip_ws();
    if cur.pos != text.len() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(p)
}
