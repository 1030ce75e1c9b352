use std::fmt;

use super::cyclotomic::{Conductor, CycScalar};
use super::rational::Rational;

/// Exact field arithmetic shared by the coefficient domains.
///
/// Every element carries the conductor `m` of the cyclotomic base field it
/// lives over, so `zero`/`one` need that context. Mixing conductors panics:
/// instances never combine across fields.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero(c: Conductor) -> Self;
    fn one(c: Conductor) -> Self;
    fn from_scalar(s: &CycScalar) -> Self;
    fn conductor(&self) -> Conductor;

    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv_ref(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one(self.conductor())
    }

    fn from_int(c: Conductor, v: i64) -> Self {
        Self::from_scalar(&CycScalar::from_rational(c, Rational::from_int(v)))
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        if !rhs.is_zero() {
            *self = self.add_ref(rhs);
        }
    }

    /// `self += a * b`, the inner-loop primitive of every contraction.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.add_ref(&a.mul_ref(b));
        }
    }
}
