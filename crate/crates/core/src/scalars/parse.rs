//! Text grammar for coefficients.
//!
//! ```text
//! scalar   := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | 'z' ['^' int] | 't' ['^' int]     ('t' only in polynomials)
//! rational := int ['/' positive-int]
//! ratfunc  := '(' poly ')' '/' '(' poly ')' | poly
//! ```
//!
//! Whitespace is ignored. `z` is ζ_m; exponents `k ≥ m` reduce via `z^m = 1`.

use num_bigint::BigInt;

use super::cyclotomic::{Conductor, CycScalar};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::tpoly::TPoly;
use crate::error::Error;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    cond: Conductor,
    allow_t: bool,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
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

    fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u64, Error> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.integer()?;
        u64::try_from(e).map_err(|_| Error::Parse {
            position: at,
            message: "exponent too large".into(),
        })
    }

    /// One product of factors as a polynomial in `t`.
    fn term(&mut self) -> Result<TPoly, Error> {
        let mut coeff = CycScalar::one(self.cond);
        let mut tdeg: u64 = 0;
        loop {
            match self.peek() {
                Some(b'z') => {
                    self.pos += 1;
                    let e = self.exponent()?;
                    let k = (e % self.cond.m() as u64) as i64;
                    coeff = &coeff * &CycScalar::zeta_pow(self.cond, k);
                }
                Some(b't') if self.allow_t => {
                    self.pos += 1;
                    tdeg += self.exponent()?;
                    if tdeg > 4096 {
                        return Err(self.err("degree in t too large"));
                    }
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = self.integer()?;
                    let den = if self.peek() == Some(b'/') && self.src.get(self.pos + 1) != Some(&b'(') {
                        self.pos += 1;
                        let at = self.pos;
                        let d = self.integer()?;
                        if d == BigInt::from(0) {
                            return Err(Error::Parse {
                                position: at,
                                message: "zero denominator".into(),
                            });
                        }
                        d
                    } else {
                        BigInt::from(1)
                    };
                    coeff = coeff.scale(&Rational::from_bigint_ratio(num, den));
                }
                _ => return Err(self.err("expected a number, 'z' or 't'")),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(TPoly::monomial(coeff, tdeg as usize))
    }

    fn poly(&mut self) -> Result<TPoly, Error> {
        let mut acc = TPoly::zero(self.cond);
        let mut negative = false;
        if self.eat(b'-') {
            negative = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            acc = if negative { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negative = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn finish(&mut self) -> Result<(), Error> {
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(())
    }
}

/// Parses a coefficient of ℚ(ζ_m).
pub fn parse_scalar(text: &str, c: Conductor) -> Result<CycScalar, Error> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        cond: c,
        allow_t: false,
    };
    let poly = p.poly()?;
    p.finish()?;
    Ok(poly.coeff(0))
}

/// Parses a polynomial in `t` with cyclotomic coefficients.
pub fn parse_tpoly(text: &str, c: Conductor) -> Result<TPoly, Error> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        cond: c,
        allow_t: true,
    };
    let poly = p.poly()?;
    p.finish()?;
    Ok(poly)
}

/// Parses `(poly)/(poly)` or a plain polynomial.
pub fn parse_ratfunc(text: &str, c: Conductor) -> Result<RatFunc, Error> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        cond: c,
        allow_t: true,
    };
    if p.peek() == Some(b'(') {
        p.pos += 1;
        let num = p.poly()?;
        if !p.eat(b')') {
            return Err(p.err("expected ')'"));
        }
        if !p.eat(b'/') {
            p.finish()?;
            return Ok(RatFunc::from_poly(num));
        }
        if !p.eat(b'(') {
            return Err(p.err("expected '('"));
        }
        let at = p.pos;
        let den = p.poly()?;
        if !p.eat(b')') {
            return Err(p.err("expected ')'"));
        }
        p.finish()?;
        if den.is_zero() {
            return Err(Error::Parse {
                position: at,
                message: "zero denominator".into(),
            });
        }
        return Ok(RatFunc::new(num, den));
    }
    let num = p.poly()?;
    p.finish()?;
    Ok(RatFunc::from_poly(num))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_examples() {
        let c1 = Conductor::new(1);
        assert_eq!(
            parse_scalar("3/2", c1).unwrap(),
            CycScalar::from_rational(c1, Rational::new(3, 2))
        );
        let c4 = Conductor::new(4);
        assert_eq!(parse_scalar("-z^2", c4).unwrap(), CycScalar::one(c4));
        let c3 = Conductor::new(3);
        let v = parse_scalar("1/2 + 1/2*z", c3).unwrap();
        assert_eq!(v.coeffs(), &[Rational::new(1, 2), Rational::new(1, 2)]);
        assert_eq!(parse_scalar(" 1 /2+1/ 2 * z ", c3).unwrap(), v);
    }

    #[test]
    fn exponent_reduction() {
        let c4 = Conductor::new(4);
        assert_eq!(parse_scalar("z^5", c4).unwrap(), parse_scalar("z", c4).unwrap());
        assert_eq!(parse_scalar("z^4", c4).unwrap(), CycScalar::one(c4));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let c = Conductor::new(4);
        match parse_scalar("1 + * z", c) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar("1/0", c).is_err());
        assert!(parse_scalar("t", c).is_err());
        assert!(parse_scalar("2 3", c).is_err());
        assert!(parse_scalar("", c).is_err());
    }

    #[test]
    fn ratfunc_forms() {
        let c = Conductor::new(1);
        let r = parse_ratfunc("(t^2 + t)/(t)", c).unwrap();
        assert_eq!(r.to_string(), "t + 1");
        let r = parse_ratfunc("1 - 2*t", c).unwrap();
        assert_eq!(r.to_string(), "-2*t + 1");
        let r = parse_ratfunc("(1)/(t)", c).unwrap();
        assert_eq!(r.to_string(), "(1)/(t)");
        assert!(parse_ratfunc("(1)/(0)", c).is_err());
        assert!(parse_ratfunc("(1", c).is_err());
    }
}
