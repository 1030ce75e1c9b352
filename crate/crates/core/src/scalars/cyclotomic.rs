//! The cyclotomic field ℚ(ζ_m).
//!
//! Elements are polynomials in ζ of degree below φ(m), reduced modulo the
//! m-th cyclotomic polynomial. Since Φ_m is irreducible the reduced form is
//! unique, so equality is coefficient-wise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use smallvec::SmallVec;

use super::field::Field;
use super::rational::Rational;
use crate::error::Error;

/// Shared per-conductor data: Φ_m (monic, ascending coefficients).
pub struct CycloCtx {
    m: u32,
    phi: Vec<Rational>,
}

/// Handle to the field ℚ(ζ_m). Cheap to copy; compares by `m`.
#[derive(Clone, Copy)]
pub struct Conductor(&'static CycloCtx);

impl Conductor {
    pub const MAX: u32 = 1_000;

    /// Interns the context for `m`. Panics if `m` is 0 or above [`Conductor::MAX`];
    /// use [`Conductor::try_new`] for untrusted input.
    pub fn new(m: u32) -> Self {
        Self::try_new(m).expect("unsupported conductor")
    }

    pub fn try_new(m: u32) -> Result<Self, Error> {
        if m == 0 || m > Self::MAX {
            return Err(Error::UnsupportedConductor(m));
        }
        static REGISTRY: OnceLock<Mutex<HashMap<u32, &'static CycloCtx>>> = OnceLock::new();
        let mut reg = REGISTRY.get_or_init(Default::default).lock().unwrap();
        let ctx = *reg.entry(m).or_insert_with(|| {
            Box::leak(Box::new(CycloCtx {
                m,
                phi: cyclotomic_polynomial(m),
            }))
        });
        Ok(Conductor(ctx))
    }

    pub fn m(self) -> u32 {
        self.0.m
    }

    /// φ(m), the degree of the field over ℚ.
    pub fn degree(self) -> usize {
        self.0.phi.len() - 1
    }

    pub fn cyclotomic_poly(self) -> &'static [Rational] {
        &self.0.phi
    }
}

impl PartialEq for Conductor {
    fn eq(&self, other: &Self) -> bool {
        self.0.m == other.0.m
    }
}
impl Eq for Conductor {}

impl fmt::Debug for Conductor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Conductor({})", self.0.m)
    }
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

/// Quotient of exact division `a / b` over ℚ; `b` must be nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem: Vec<Rational> = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].recip().expect("divisor leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::ZERO; rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&c * bi);
            }
        }
        quot[k] = c;
    }
    poly_trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            &x - &y
        })
        .collect();
    poly_trim(&mut out);
    out
}

/// Φ_m with ascending rational coefficients, built as
/// `(x^m - 1) / ∏_{d | m, d < m} Φ_d`.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Rational> {
    assert!(m >= 1);
    let mut num = vec![Rational::ZERO; m as usize + 1];
    num[0] = Rational::from_int(-1);
    num[m as usize] = Rational::ONE;
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = poly_divrem(&num, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

type Coeffs = SmallVec<[Rational; 4]>;

/// An element of ℚ(ζ_m) in reduced power basis `Σ c_k ζ^k`, `k < φ(m)`.
#[derive(Clone)]
pub struct CycScalar {
    cond: Conductor,
    coeffs: Coeffs,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.cond == other.cond && self.coeffs == other.coeffs
    }
}
impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.cond.m().hash(state);
        self.coeffs.hash(state);
    }
}

impl CycScalar {
    pub fn zero(c: Conductor) -> Self {
        CycScalar {
            cond: c,
            coeffs: SmallVec::from_elem(Rational::ZERO, c.degree()),
        }
    }

    pub fn one(c: Conductor) -> Self {
        Self::from_rational(c, Rational::ONE)
    }

    pub fn from_rational(c: Conductor, r: Rational) -> Self {
        let mut s = Self::zero(c);
        s.coeffs[0] = r;
        s
    }

    pub fn from_int(c: Conductor, v: i64) -> Self {
        Self::from_rational(c, Rational::from_int(v))
    }

    /// Builds from an arbitrary-length coefficient vector in ζ, reducing mod Φ_m.
    pub fn from_coeffs(c: Conductor, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(c);
        if coeffs.len() <= c.degree() {
            for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
                *dst = src.clone();
            }
            return s;
        }
        let (_, rem) = poly_divrem(coeffs, c.cyclotomic_poly());
        for (dst, src) in s.coeffs.iter_mut().zip(rem) {
            *dst = src;
        }
        s
    }

    /// ζ_m^k, with `k` reduced modulo `m`.
    pub fn zeta_pow(c: Conductor, k: i64) -> Self {
        let m = c.m() as i64;
        let k = k.rem_euclid(m) as usize;
        let mut v = vec![Rational::ZERO; k + 1];
        v[k] = Rational::ONE;
        Self::from_coeffs(c, &v)
    }

    pub fn conductor(&self) -> Conductor {
        self.cond
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The value as a rational, when it lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<(), Error> {
        if self.cond != other.cond {
            return Err(Error::ConductorMismatch(self.cond.m(), other.cond.m()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycScalar { cond: self.cond, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycScalar { cond: self.cond, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check(other)?;
        let d = self.cond.degree();
        if d == 1 {
            return Ok(CycScalar {
                cond: self.cond,
                coeffs: smallvec::smallvec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let mut prod = vec![Rational::ZERO; 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = &prod[i + j] + &(a * b);
                }
            }
        }
        // Reduce from the top using the monic Φ_m: x^d = -Σ_{i<d} φ_i x^i.
        let phi = self.cond.cyclotomic_poly();
        for k in (d..prod.len()).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (i, p) in phi[..d].iter().enumerate() {
                if !p.is_zero() {
                    prod[k - d + i] = &prod[k - d + i] - &(&c * p);
                }
            }
        }
        prod.truncate(d);
        Ok(CycScalar {
            cond: self.cond,
            coeffs: prod.into_iter().collect(),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycScalar {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Inverse via the extended Euclidean algorithm against Φ_m.
    pub fn checked_inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.cond, r.recip().unwrap()));
        }
        // Invariant: s_i * a ≡ r_i (mod Φ).
        let mut r0: Vec<Rational> = self.cond.cyclotomic_poly().to_vec();
        let mut r1: Vec<Rational> = self.coeffs.to_vec();
        poly_trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::ONE];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant because Φ_m is irreducible and a ≠ 0.
        let c = r1[0].recip().expect("gcd with cyclotomic polynomial");
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Self::from_coeffs(self.cond, &s))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.cond);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.checked_add(rhs).expect("conductor mismatch")
    }
}
impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.checked_sub(rhs).expect("conductor mismatch")
    }
}
impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.checked_mul(rhs).expect("conductor mismatch")
    }
}
impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            cond: self.cond,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Field for CycScalar {
    fn zero(c: Conductor) -> Self {
        CycScalar::zero(c)
    }
    fn one(c: Conductor) -> Self {
        CycScalar::one(c)
    }
    fn from_scalar(s: &CycScalar) -> Self {
        s.clone()
    }
    fn conductor(&self) -> Conductor {
        self.cond
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycScalar::is_one(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv_ref(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        assert!(self.cond == rhs.cond, "conductor mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if self.cond.degree() == 1 {
            self.coeffs[0] = &self.coeffs[0] + &(&a.coeffs[0] * &b.coeffs[0]);
        } else {
            let p = a * b;
            self.add_assign_ref(&p);
        }
    }
}

impl fmt::Display for CycScalar {
    /// Minimal form with descending powers of `z`, e.g. `-1/2*z^3 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format_term(c, k, ""))
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// One monomial `c*z^k*<suffix>` in minimal notation.
pub(crate) fn format_term(c: &Rational, k: usize, suffix: &str) -> String {
    let zpart = match k {
        0 => String::new(),
        1 => "z".to_string(),
        _ => format!("z^{k}"),
    };
    let mut body: Vec<String> = Vec::new();
    if !zpart.is_empty() {
        body.push(zpart);
    }
    if !suffix.is_empty() {
        body.push(suffix.to_string());
    }
    if body.is_empty() {
        return c.to_string();
    }
    let body = body.join("*");
    if c.is_one() {
        body
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("{c}*{body}")
    }
}

pub(crate) fn join_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = terms[0].clone();
    for t in &terms[1..] {
        match t.strip_prefix('-') {
            Some(rest) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            None => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    out
}
