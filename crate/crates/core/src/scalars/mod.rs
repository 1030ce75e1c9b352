//! Exact coefficient domains: rationals, ℚ(ζ_m), and rational functions in `t`.

mod cyclotomic;
mod field;
mod parse;
mod ratfunc;
mod rational;
mod tpoly;

pub use cyclotomic::{cyclotomic_polynomial, Conductor, CycScalar};
pub use field::Field;
pub use parse::{parse_ratfunc, parse_scalar, parse_tpoly};
pub use ratfunc::{quotient_limit_at_zero, Limit, RatFunc};
pub use rational::{ParseRationalError, Rational};
pub use tpoly::TPoly;

/// Text round-trip for coefficient types, used by the JSON file formats.
pub trait ScalarText: Field {
    fn parse_text(text: &str, c: Conductor) -> Result<Self, crate::Error>;
    fn to_text(&self) -> String;
}

impl ScalarText for CycScalar {
    fn parse_text(text: &str, c: Conductor) -> Result<Self, crate::Error> {
        parse_scalar(text, c)
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl ScalarText for RatFunc {
    fn parse_text(text: &str, c: Conductor) -> Result<Self, crate::Error> {
        parse_ratfunc(text, c)
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
}
