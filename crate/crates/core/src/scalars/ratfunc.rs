//! Rational functions in `t` and their behaviour at `t = 0`.

use std::fmt;

use super::cyclotomic::{Conductor, CycScalar};
use super::field::Field;
use super::tpoly::TPoly;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: TPoly,
    den: TPoly,
}

/// Value of a rational function as `t → 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    Value(CycScalar),
    /// The function blows up; `valuation` is the (negative) order at 0.
    Pole { valuation: i64 },
}

impl Limit {
    pub fn value(self) -> Option<CycScalar> {
        match self {
            Limit::Value(v) => Some(v),
            Limit::Pole { .. } => None,
        }
    }
}

/// Limit at `t = 0` of `num / den` without requiring the quotient to be reduced.
///
/// Only the lowest-order terms matter, so no gcd is needed.
pub fn quotient_limit_at_zero(num: &TPoly, den: &TPoly) -> Limit {
    let vd = den.valuation().expect("zero denominator");
    let Some(vn) = num.valuation() else {
        return Limit::Value(CycScalar::zero(num.conductor()));
    };
    match vn.cmp(&vd) {
        std::cmp::Ordering::Less => Limit::Pole {
            valuation: vn as i64 - vd as i64,
        },
        std::cmp::Ordering::Greater => Limit::Value(CycScalar::zero(num.conductor())),
        std::cmp::Ordering::Equal => {
            let inv = den.coeffs()[vd].checked_inv().unwrap();
            Limit::Value(&num.coeffs()[vn] * &inv)
        }
    }
}

impl RatFunc {
    /// Builds the canonical form of `num / den`. Panics on a zero denominator.
    pub fn new(num: TPoly, den: TPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::from_poly(TPoly::zero(num.conductor()));
        }
        if den.degree() == Some(0) {
            let inv = den.coeffs()[0].checked_inv().unwrap();
            return RatFunc {
                num: num.scale(&inv),
                den: TPoly::one(num.conductor()),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        let lead_inv = den.leading().unwrap().checked_inv().unwrap();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_poly(p: TPoly) -> Self {
        let c = p.conductor();
        RatFunc { num: p, den: TPoly::one(c) }
    }

    pub fn constant(s: CycScalar) -> Self {
        Self::from_poly(TPoly::constant(s))
    }

    /// The parameter `t` itself.
    pub fn t(c: Conductor) -> Self {
        Self::from_poly(TPoly::t(c))
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// `ord_0(num) − ord_0(den)`; `None` for the zero function.
    pub fn valuation_at_zero(&self) -> Option<i64> {
        let vn = self.num.valuation()? as i64;
        Some(vn - self.den.valuation().unwrap() as i64)
    }

    pub fn limit_at_zero(&self) -> Limit {
        quotient_limit_at_zero(&self.num, &self.den)
    }

    /// Evaluates at `t = x`; `None` at a pole.
    pub fn eval(&self, x: &CycScalar) -> Option<CycScalar> {
        let d = self.den.eval(x);
        let inv = d.checked_inv().ok()?;
        Some(&self.num.eval(x) * &inv)
    }

    /// The constant value, if the function does not depend on `t`.
    pub fn as_constant(&self) -> Option<CycScalar> {
        if self.is_polynomial() && self.num.degree().unwrap_or(0) == 0 {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }
}

impl Field for RatFunc {
    fn zero(c: Conductor) -> Self {
        Self::from_poly(TPoly::zero(c))
    }
    fn one(c: Conductor) -> Self {
        Self::from_poly(TPoly::one(c))
    }
    fn from_scalar(s: &CycScalar) -> Self {
        Self::constant(s.clone())
    }
    fn conductor(&self) -> Conductor {
        self.num.conductor()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.conductor());
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn neg_ref(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn inv_ref(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RatFunc::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c1() -> Conductor {
        Conductor::new(1)
    }

    fn p(v: &[i64]) -> TPoly {
        TPoly::from_coeffs(c1(), v.iter().map(|&x| CycScalar::from_int(c1(), x)).collect())
    }

    fn s(v: i64) -> CycScalar {
        CycScalar::from_int(c1(), v)
    }

    #[test]
    fn canonical_form_cancels() {
        let r = RatFunc::new(p(&[0, 1, 1]), p(&[0, 1]));
        assert_eq!(r, RatFunc::from_poly(p(&[1, 1])));
        let r = RatFunc::new(p(&[2]), p(&[0, 2]));
        assert_eq!(r.den(), &p(&[0, 1]));
        assert_eq!(r.num(), &p(&[1]));
    }

    #[test]
    fn limits_at_zero() {
        assert_eq!(RatFunc::new(p(&[0, 1, 1]), p(&[0, 1])).limit_at_zero(), Limit::Value(s(1)));
        assert_eq!(
            RatFunc::new(p(&[1]), p(&[0, 1])).limit_at_zero(),
            Limit::Pole { valuation: -1 }
        );
        assert_eq!(RatFunc::new(p(&[1, 1]), p(&[1, -1])).limit_at_zero(), Limit::Value(s(1)));
        assert_eq!(RatFunc::new(p(&[0, 0, 5]), p(&[0, 1])).limit_at_zero(), Limit::Value(s(0)));
    }

    #[test]
    fn unreduced_quotient_limit_agrees() {
        // (t^3 + t^2) / (t^2 + t^3) has value 1 at 0 without cancelling first.
        assert_eq!(quotient_limit_at_zero(&p(&[0, 0, 1, 1]), &p(&[0, 0, 1, 1])), Limit::Value(s(1)));
        assert_eq!(
            quotient_limit_at_zero(&p(&[0, 3]), &p(&[0, 0, 0, 2])),
            Limit::Pole { valuation: -2 }
        );
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(p(&[1]), p(&[1, 1]));
        let b = RatFunc::new(p(&[0, 1]), p(&[1, 1]));
        assert!(a.add_ref(&b).is_one());
        let inv = a.inv_ref().unwrap();
        assert!(a.mul_ref(&inv).is_one());
        assert_eq!(a.eval(&s(-1)), None);
        assert_eq!(a.eval(&s(1)), Some(CycScalar::from_rational(c1(), crate::scalars::Rational::new(1, 2))));
    }
}
