//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+'|'-') term)* | '-' term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | VAR ('^' INT)? | '(' expr ')' ('^' INT)?
//! ```

use std::fmt;

use super::context::Ring;
use super::field::FieldScalar;
use super::monomial::{Monomial, MAX_EXPONENT};
use super::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    ExponentOverflow,
}

/// A parse failure at a 0-based character offset into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = self.position + 1;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error at column {col}: {msg}"),
            ParseErrorKind::UnknownVariable(v) => {
                write!(f, "unknown variable `{v}` at column {col}")
            }
            ParseErrorKind::ExponentOverflow => {
                write!(f, "exponent overflow at column {col} (limit {MAX_EXPONENT})")
            }
        }
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn err<T>(&self, pos: usize, kind: ParseErrorKind) -> PResult<T> {
        Err(ParseError { position: pos, kind })
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> PResult<T> {
        self.err(self.pos, ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = acc.add(&t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = acc.sub(&t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let at = self.pos;
            let f = self.factor()?;
            acc = acc.mul(&f);
            if acc.max_exponent() > MAX_EXPONENT {
                return self.err(at, ParseErrorKind::ExponentOverflow);
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<Polynomial> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let p = self.ring.p() as u64;
                let mut value = 0u64;
                while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
                    value = (value * 10 + d as u64) % p;
                    self.pos += 1;
                }
                Ok(Polynomial::constant(self.ring, value as i64))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .chars
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let index = match self.ring.var_index(&name) {
                    Some(i) => i,
                    None => return self.err(start, ParseErrorKind::UnknownVariable(name)),
                };
                let exp = if self.eat('^') { self.exponent()? } else { 1 };
                let mono = Monomial::variable(self.ring.nvars(), index, exp as u32);
                Ok(Polynomial::term(self.ring, mono, FieldScalar::ONE))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.syntax("expected `)`");
                }
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let at = self.pos;
                    let exp = self.exponent()?;
                    return inner
                        .pow(exp)
                        .or_else(|_| self.err(at, ParseErrorKind::ExponentOverflow));
                }
                Ok(inner)
            }
            Some(c) => self.syntax(format!("unexpected `{c}`")),
            None => self.syntax("unexpected end of input"),
        }
    }

    fn exponent(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        let mut value = 0u64;
        let mut overflow = false;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = value * 10 + d as u64;
            if value > MAX_EXPONENT as u64 {
                overflow = true;
                value = MAX_EXPONENT as u64 + 1;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.syntax("expected a nonnegative integer exponent");
        }
        if overflow {
            return self.err(start, ParseErrorKind::ExponentOverflow);
        }
        Ok(value)
    }
}

/// Parses `text` into a canonical polynomial of `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial, ParseError> {
    let mut parser = Parser { ring, chars: text.chars().collect(), pos: 0 };
    let poly = parser.expr()?;
    if parser.peek().is_some() {
        return parser.syntax("trailing input");
    }
    Ok(poly)
}
