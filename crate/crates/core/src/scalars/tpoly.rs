//! Polynomials in the family parameter `t` over ℚ(ζ_m).

use std::fmt;

use super::cyclotomic::{format_term, join_terms, Conductor, CycScalar};
use super::field::Field;

/// Dense polynomial `Σ c_k t^k`, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq)]
pub struct TPoly {
    cond: Conductor,
    coeffs: Vec<CycScalar>,
}

impl TPoly {
    pub fn zero(c: Conductor) -> Self {
        TPoly { cond: c, coeffs: Vec::new() }
    }

    pub fn constant(s: CycScalar) -> Self {
        let c = s.conductor();
        Self::from_coeffs(c, vec![s])
    }

    pub fn one(c: Conductor) -> Self {
        Self::constant(CycScalar::one(c))
    }

    /// `t`.
    pub fn t(c: Conductor) -> Self {
        Self::monomial(CycScalar::one(c), 1)
    }

    pub fn monomial(s: CycScalar, k: usize) -> Self {
        let c = s.conductor();
        let mut v = vec![CycScalar::zero(c); k];
        v.push(s);
        Self::from_coeffs(c, v)
    }

    pub fn from_coeffs(c: Conductor, mut coeffs: Vec<CycScalar>) -> Self {
        while coeffs.last().is_some_and(CycScalar::is_zero) {
            coeffs.pop();
        }
        TPoly { cond: c, coeffs }
    }

    pub fn conductor(&self) -> Conductor {
        self.cond
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycScalar> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> CycScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| CycScalar::zero(self.cond))
    }

    /// Order of vanishing at `t = 0`; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &CycScalar) -> CycScalar {
        let mut acc = CycScalar::zero(self.cond);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.cond);
        }
        TPoly {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.checked_inv().unwrap()),
            _ => self.clone(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &TPoly) -> (TPoly, TPoly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.leading().unwrap().checked_inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (TPoly::zero(self.cond), self.clone());
        }
        let mut quot = vec![CycScalar::zero(self.cond); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, di) in d.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&c * di);
                }
            }
            quot[k] = c;
        }
        (
            TPoly::from_coeffs(self.cond, quot),
            TPoly::from_coeffs(self.cond, rem),
        )
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = std::mem::replace(&mut b, r);
        }
        a.monic()
    }

    /// Divides out `t^k`; the caller guarantees `k ≤ valuation`.
    pub fn shift_down(&self, k: usize) -> TPoly {
        TPoly {
            cond: self.cond,
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }
}

impl std::ops::Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        TPoly::from_coeffs(self.cond, coeffs)
    }
}

impl std::ops::Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero(self.cond);
        }
        let mut out = vec![CycScalar::zero(self.cond); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_mul_assign(a, b);
            }
        }
        TPoly::from_coeffs(self.cond, out)
    }
}

impl fmt::Display for TPoly {
    /// Expanded form, descending in `t` then in `z`: `1/2*t^2 + z*t - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            let tpart = match j {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{j}"),
            };
            for (k, r) in c.coeffs().iter().enumerate().rev() {
                if !r.is_zero() {
                    terms.push(format_term(r, k, &tpart));
                }
            }
        }
        f.write_str(&join_terms(&terms))
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    fn c1() -> Conductor {
        Conductor::new(1)
    }

    fn p(v: &[i64]) -> TPoly {
        TPoly::from_coeffs(c1(), v.iter().map(|&x| CycScalar::from_int(c1(), x)).collect())
    }

    #[test]
    fn divrem_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = p(&[-1, 0, 1]).gcd(&p(&[2, 2]));
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn valuation_and_eval() {
        let f = p(&[0, 0, 3, 1]);
        assert_eq!(f.valuation(), Some(2));
        assert_eq!(f.eval(&CycScalar::from_int(c1(), 2)), CycScalar::from_int(c1(), 20));
        assert_eq!(TPoly::zero(c1()).valuation(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2*t^2 - 1");
        let c = Conductor::new(3);
        let coeff = CycScalar::from_coeffs(c, &[Rational::new(1, 2), Rational::ONE]);
        assert_eq!(TPoly::monomial(coeff, 1).to_string(), "z*t + 1/2*t");
    }
}
