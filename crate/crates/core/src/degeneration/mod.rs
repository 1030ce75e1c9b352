//! Degenerations along `f_t = φ + t·id` and along diagonal families `t^{d_i}`.
//!
//! Two independent routes compute the same limit: closed formulas in terms of
//! the Fitting decomposition of `φ`, and an exact rational-function transport
//! followed by entry-wise limits at `t = 0`.

mod closed;
mod fitting;
mod graded;
mod symbolic;

use serde::Serialize;

pub use closed::{check_comul_condition, check_mul_condition, degenerate_closed_form, degenerate_pair};
pub use fitting::{fitting_decompose, FittingData};
pub use graded::{graded_degeneration, graded_symbolic, GradingVector};
pub use symbolic::{degenerate_symbolic, family_limit, FamilyLimit, PolyFamily};

use crate::hopf::VerificationReport;
use crate::HopfData;

/// A violated coordinate of a degeneration condition (1-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionViolation {
    /// Which identity of the condition failed (1-based; always 1 for the
    /// multiplication condition).
    pub identity: usize,
    pub indices: Vec<usize>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionOutcome {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ConditionViolation>,
}

impl ConditionOutcome {
    pub fn pass() -> Self {
        ConditionOutcome { holds: true, violation: None }
    }

    pub fn fail(v: ConditionViolation) -> Self {
        ConditionOutcome {
            holds: false,
            violation: Some(v),
        }
    }
}

/// The structure tensor holding an entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tensor {
    Mul,
    Comul,
    Counit,
    Antipode,
}

/// An entry whose limit at `t = 0` does not exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pole {
    pub tensor: Tensor,
    pub indices: Vec<usize>,
    pub valuation: i64,
}

/// Which tensors have at least one pole.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PoleSummary {
    pub mul: bool,
    pub comul: bool,
    pub counit: bool,
    pub antipode: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first: Option<Pole>,
}

impl PoleSummary {
    pub fn any_structure_pole(&self) -> bool {
        self.mul || self.comul || self.counit
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Symbolic,
    Graded,
    GradedSymbolic,
}

/// Outcome of a degeneration attempt.
///
/// `raw_limit` is the limit structure in the coordinates of the family, before
/// the unit is moved to the first basis vector; `limit` is the normalized Hopf
/// algebra, present only when a unit, counit and antipode were all found and
/// the result verifies.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegenerationReport {
    pub method: Method,
    pub mul_condition: ConditionOutcome,
    pub comul_condition: ConditionOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poles: Option<PoleSummary>,
    pub unit_found: bool,
    pub counit_found: bool,
    pub antipode_found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    #[serde(skip)]
    pub raw_limit: Option<HopfData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<HopfData>,
}

impl DegenerationReport {
    fn conditions_only(method: Method, mul: ConditionOutcome, comul: ConditionOutcome) -> Self {
        DegenerationReport {
            method,
            mul_condition: mul,
            comul_condition: comul,
            poles: None,
            unit_found: false,
            counit_found: false,
            antipode_found: false,
            oracle_agreement: None,
            verification: None,
            raw_limit: None,
            limit: None,
        }
    }

    pub fn succeeded(&self) -> bool {
        self.limit.is_some()
    }

    /// Whether two reports describe the same degeneration: same condition
    /// verdicts, same raw and normalized limits and same flags.
    pub fn agrees_with(&self, other: &DegenerationReport) -> bool {
        self.mul_condition.holds == other.mul_condition.holds
            && self.comul_condition.holds == other.comul_condition.holds
            && self.unit_found == other.unit_found
            && self.counit_found == other.counit_found
            && self.antipode_found == other.antipode_found
            && self.raw_limit == other.raw_limit
            && self.limit == other.limit
    }
}

/// From a raw limit: solve for the unit, normalize, solve for the counit, and
/// keep the limit antipode if it verifies, otherwise solve for one.
fn finish(mut report: DegenerationReport, raw: HopfData) -> DegenerationReport {
    report.raw_limit = Some(raw.clone());
    let Some(u) = raw.find_unit() else {
        return report;
    };
    report.unit_found = true;
    let (normalized, _) = raw.normalize_unit(&u).expect("solved unit is a unit");
    let Some(counit) = normalized.find_counit() else {
        return report;
    };
    report.counit_found = true;
    let mut candidate = normalized.with_counit(counit);
    let retained = candidate
        .antipode()
        .is_some_and(|_| candidate.verify_antipode().map(|r| r.passed()).unwrap_or(false));
    if !retained {
        match candidate.without_antipode().compute_antipode() {
            Ok(s) => candidate = candidate.with_antipode(Some(s)),
            Err(_) => {
                report.verification = Some(candidate.verify_bialgebra());
                return report;
            }
        }
    }
    report.antipode_found = true;
    let verification = candidate.verify();
    let passed = verification.passed();
    report.verification = Some(verification);
    if passed {
        report.limit = Some(candidate);
    }
    report
}
