//! Text grammar for polynomials and coefficients.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | 't' | '(' expr ')'
//! ```
//!
//! `t` denotes the generator of `F_p(t)` unless it is also a variable name.
//! Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use crate::coeffs::{Coeff, FieldSpec};
use crate::error::{Error, Result};
use crate::mvpoly::MvPoly;

struct Parser<'a> {
    field: FieldSpec,
    names: &'a [String],
    src: &'a [u8],
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Parser<'a> {
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

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<MvPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MvPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.unary()?;
                if !d.is_constant() {
                    return err(at, "division by a non-constant polynomial");
                }
                let c = d.constant_term();
                let inv = self
                    .field
                    .inv(&c)
                    .or_else(|_| err(at, "division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MvPoly> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MvPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u64 = e
                .try_into()
                .or_else(|_| err(at, "exponent must be a non-negative machine integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<MvPoly> {
        let at = match self.peek() {
            None => return err(self.pos, "unexpected end of input"),
            Some(_) => self.pos,
        };
        let c = self.src[at];
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if !self.eat(b')') {
                return err(self.pos, "expected ')'");
            }
            return Ok(inner);
        }
        if c.is_ascii_digit() {
            let n = self.integer()?;
            return Ok(MvPoly::constant(
                self.field,
                self.nvars(),
                self.field.from_bigint(&n),
            ));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[at..self.pos]).expect("ascii name");
            if let Some(i) = self.names.iter().position(|n| n == name) {
                return Ok(MvPoly::var(self.field, self.nvars(), i));
            }
            if name == "t" {
                if let Some(t) = self.field.t() {
                    return Ok(MvPoly::constant(self.field, self.nvars(), t));
                }
            }
            return err(at, format!("unknown name '{name}'"));
        }
        err(at, format!("unexpected character '{}'", c as char))
    }
}

pub fn parse_poly(field: FieldSpec, names: &[String], text: &str) -> Result<MvPoly> {
    let mut p = Parser {
        field,
        names,
        src: text.as_bytes(),
        pos: 0,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos, "trailing input");
    }
    Ok(out)
}

/// Parses a coefficient such as `-3/4`, `2` or `(t^2+1)/(t+2)`.
pub fn parse_constant(field: FieldSpec, text: &str) -> Result<Coeff> {
    let poly = parse_poly(field, &[], text)?;
    Ok(poly.constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rat;

    #[test]
    fn coefficients() {
        let q = FieldSpec::rational(3).unwrap();
        assert_eq!(
            parse_constant(q, "-3/4").unwrap(),
            q.from_rational(&rat(-3, 4)).unwrap()
        );
        let f5 = FieldSpec::prime_field(5).unwrap();
        assert_eq!(parse_constant(f5, "7").unwrap(), f5.from_i64(2));
        assert_eq!(parse_constant(f5, "1/2").unwrap(), f5.from_i64(3));
        assert!(parse_constant(f5, "1/5").is_err());
        let f3 = FieldSpec::ratfunc(3).unwrap();
        let t = f3.t().unwrap();
        assert_eq!(parse_constant(f3, "t^3").unwrap(), f3.pow(&t, 3));
        assert!(parse_constant(q, "t").is_err());
    }

    #[test]
    fn reports_positions() {
        let q = FieldSpec::rational(3).unwrap();
        let names = vec!["x".to_string()];
        match parse_poly(q, &names, "x + y") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_poly(q, &names, "1/x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poly(q, &names, "(x"),
            Err(Error::Parse { .. })
        ));
    }
}
