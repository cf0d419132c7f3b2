//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant, juxtaposition is NOT multiplication):
//!
//! ```text
//! expr     := ('+'|'-')? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | identifier | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! The optional leading sign is the one extension over the bare grammar; the
//! canonical printer emits forms like `-y^2+y*z` and must round-trip.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Ring};
use crate::rat::Rat;

pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        if self.eat(b'-') {
            negate = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.add(&t);
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.sub(&t);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let e = self.integer()?;
            if e.is_negative() {
                self.pos = start;
                return Err(self.err("exponent must be a non-negative integer"));
            }
            let e: u32 = e.try_into().map_err(|_| Error::Parse {
                pos: start,
                msg: "exponent too large".into(),
            })?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'-' => self.rational(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.identifier(),
            Some(_) => Err(self.err("expected a rational, identifier or `(`")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Poly> {
        let num = self.integer()?;
        let den = if self.eat(b'/') {
            self.skip_ws();
            let start = self.pos;
            let d = self.integer()?;
            if d.is_negative() || d.is_zero() {
                return Err(Error::Parse {
                    pos: start,
                    msg: "denominator must be a positive integer".into(),
                });
            }
            d
        } else {
            BigInt::one()
        };
        Ok(Poly::constant(self.ring.clone(), Rat::new(num, den)))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let mut s = String::new();
        if self.src.get(self.pos) == Some(&b'-') {
            s.push('-');
            self.pos += 1;
        }
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_digit() {
                s.push(c as char);
                self.pos += 1;
            } else {
                break;
            }
        }
        if s.is_empty() || s == "-" {
            self.pos = start;
            return Err(self.err("expected an integer"));
        }
        Ok(s.parse().expect("digits parse"))
    }

    fn identifier(&mut self) -> Result<Poly> {
        self.skip_ws();
        let start = self.pos;
        let mut name = String::new();
        while let Some(&c) = self.src.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == b'_' {
                name.push(c as char);
                self.pos += 1;
            } else {
                break;
            }
        }
        match self.ring.index_of(&name) {
            Some(i) => Ok(self.ring.var(i)),
            None => Err(Error::UnknownVariable { name, pos: start }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_powers() {
        let r = Ring::new(vec!["x", "y", "z"]);
        assert_eq!(
            parse_poly("1/2^3", &r).unwrap(),
            parse_poly("1/8", &r).unwrap()
        );
        assert_eq!(
            parse_poly("(-2)^2", &r).unwrap(),
            parse_poly("4", &r).unwrap()
        );
        assert_eq!(parse_poly("x^0", &r).unwrap(), parse_poly("1", &r).unwrap());
    }

    #[test]
    fn juxtaposition_and_bare_slash_are_rejected() {
        let r = Ring::new(vec!["x", "y", "z"]);
        assert!(parse_poly("2x", &r).is_err());
        assert!(parse_poly("x/2", &r).is_err());
        assert!(parse_poly("", &r).is_err());
    }
}
