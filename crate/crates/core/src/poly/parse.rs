//! Recursive-descent parser for polynomial relations.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! Multiplication must be explicit and decimals are rejected. Variables are
//! `x` and `y`; with [`parse_poly_principal`] the names `k1` and `k2` are
//! accepted as aliases for `x` and `y`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{Poly2, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at byte {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("exponent at byte {position} must be a nonnegative integer")]
    NonIntegerExponent { position: usize },
}

/// Parses a polynomial in `x`, `y`.
pub fn parse_poly(text: &str) -> Result<Poly2, ParseError> {
    Parser::new(text, false).parse()
}

/// Parses a polynomial in the principal curvatures; `k1`/`k2` map to `x`/`y`.
pub fn parse_poly_principal(text: &str) -> Result<Poly2, ParseError> {
    Parser::new(text, true).parse()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    principal: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, principal: bool) -> Self {
        Parser { src: text.as_bytes(), pos: 0, principal }
    }

    fn parse(mut self) -> Result<Poly2, ParseError> {
        let p = self.expr()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.syntax(format!("unexpected `{}`", self.src[self.pos] as char)));
        }
        Ok(p)
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly2, ParseError> {
        let negate = self.eat(b'-');
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly2, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.factor()?;
                continue;
            }
            // juxtaposition such as `2x` or `x y`
            match self.peek() {
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.syntax("implicit multiplication; use `*`"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly2, ParseError> {
        let base = self.base()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(ParseError::NonIntegerExponent { position: start });
        }
        if matches!(self.src.get(self.pos), Some(b'.') | Some(b'/')) {
            return Err(ParseError::NonIntegerExponent { position: start });
        }
        let e: u32 = digits.parse().map_err(|_| ParseError::NonIntegerExponent { position: start })?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<Poly2, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational().map(Poly2::constant),
            Some(c) if c.is_ascii_alphabetic() => self.variable(),
            Some(c) => Err(self.syntax(format!("unexpected `{}`", c as char))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer: BigInt = self.digits().parse().expect("digits are nonempty");
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(self.syntax("decimal literals are not exact; write p/q"));
        }
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(numer));
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected a positive integer denominator"));
        }
        let denom: BigInt = digits.parse().expect("digits are nonempty");
        if denom.is_zero() {
            return Err(ParseError::Syntax { position: start, message: "zero denominator".into() });
        }
        Ok(Rational::new(numer, denom))
    }

    fn variable(&mut self) -> Result<Poly2, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        match (name, self.principal) {
            ("x", _) | ("k1", true) => Ok(Poly2::x()),
            ("y", _) | ("k2", true) => Ok(Poly2::y()),
            _ => Err(ParseError::UnknownVariable { name: name.to_string(), position: start }),
        }
    }
}
