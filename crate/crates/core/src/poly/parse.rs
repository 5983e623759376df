use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::polynomial::Polynomial;
use super::registry::Registry;
use crate::error::{Error, Result};

pub(crate) fn parse_polynomial(registry: &Arc<Registry>, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(registry, text, 1, 1)
}

/// Parses `text`, reporting errors as if it started at `line:column`.
pub fn parse_polynomial_at(registry: &Arc<Registry>, text: &str, line: usize, column: usize) -> Result<Polynomial> {
    let mut p = Parser {
        registry,
        src: text.as_bytes(),
        pos: 0,
        line,
        column,
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("expected a polynomial"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error(format!("unexpected `{}`", p.peek().unwrap() as char)));
    }
    Ok(poly)
}

struct Parser<'a> {
    registry: &'a Arc<Registry>,
    src: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column + self.pos, msg)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected an exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| {
                self.pos = start;
                self.error("exponent too large")
            })?;
            if e > u16::MAX as u32 {
                self.pos = start;
                return Err(self.error("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'0'..=b'9') => {
                let start = self.pos;
                let num: BigInt = self.digits().parse().expect("digit string");
                let mut q = BigRational::from_integer(num);
                let save = self.pos;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error("expected a denominator"));
                    }
                    let den: BigInt = den.parse().expect("digit string");
                    if den == BigInt::from(0) {
                        self.pos = start;
                        return Err(self.error("zero denominator"));
                    }
                    q /= BigRational::from_integer(den);
                } else {
                    self.pos = save;
                }
                let c = self.registry.field().from_rational(&q).map_err(|e| {
                    self.pos = start;
                    self.error(e.to_string())
                })?;
                Ok(Polynomial::constant(self.registry, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.registry.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.registry, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable `{name}`")))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
