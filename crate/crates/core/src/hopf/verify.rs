use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::Hopf;
use crate::linalg::Matrix;
use crate::scalars::{Field, ScalarText};
use crate::{Error, Result};

/// At most this many failures are kept in a report; the count is always exact.
pub const MAX_REPORTED_FAILURES: usize = 64;

/// The identity families checked by the verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EquationFamily {
    /// Associativity.
    #[serde(rename = "1a")]
    Associativity,
    /// `e_1` is a two-sided unit.
    #[serde(rename = "1b")]
    Unit,
    /// Coassociativity.
    #[serde(rename = "2a")]
    Coassociativity,
    /// Left counit law `(ε ⊗ id)Δ = id`, index order `(i, j)` of `Σ_l D_i^{lj} ξ_l`.
    #[serde(rename = "2b")]
    LeftCounit,
    /// Right counit law `(id ⊗ ε)Δ = id`.
    #[serde(rename = "2c")]
    RightCounit,
    /// `Δ` is multiplicative.
    #[serde(rename = "3a")]
    Compatibility,
    /// `Δ(1) = 1 ⊗ 1`.
    #[serde(rename = "3b")]
    UnitComul,
    /// `ε(1) = 1` and `ε` is multiplicative.
    #[serde(rename = "3c")]
    CounitMul,
    /// `μ(S ⊗ id)Δ = ηε`.
    #[serde(rename = "4a")]
    LeftAntipode,
    /// `μ(id ⊗ S)Δ = ηε`.
    #[serde(rename = "4b")]
    RightAntipode,
}

impl EquationFamily {
    pub const BIALGEBRA: [EquationFamily; 8] = [
        EquationFamily::Associativity,
        EquationFamily::Unit,
        EquationFamily::Coassociativity,
        EquationFamily::LeftCounit,
        EquationFamily::RightCounit,
        EquationFamily::Compatibility,
        EquationFamily::UnitComul,
        EquationFamily::CounitMul,
    ];
    pub const ANTIPODE: [EquationFamily; 2] = [EquationFamily::LeftAntipode, EquationFamily::RightAntipode];

    pub fn code(self) -> &'static str {
        match self {
            EquationFamily::Associativity => "1a",
            EquationFamily::Unit => "1b",
            EquationFamily::Coassociativity => "2a",
            EquationFamily::LeftCounit => "2b",
            EquationFamily::RightCounit => "2c",
            EquationFamily::Compatibility => "3a",
            EquationFamily::UnitComul => "3b",
            EquationFamily::CounitMul => "3c",
            EquationFamily::LeftAntipode => "4a",
            EquationFamily::RightAntipode => "4b",
        }
    }
}

impl fmt::Display for EquationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One violated identity: the family, its 1-based index tuple and `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub family: EquationFamily,
    pub indices: Vec<usize>,
    pub residual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "{} at ({}): residual {}", self.family, idx.join(", "), self.residual)
    }
}

/// Outcome of an axiom check. Failures are sorted by family and index tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checked: Vec<EquationFamily>,
    pub failed_families: Vec<EquationFamily>,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    fn from_failures(checked: Vec<EquationFamily>, mut failures: Vec<Failure>) -> Self {
        failures.sort();
        let mut failed_families: Vec<EquationFamily> = failures.iter().map(|f| f.family).collect();
        failed_families.dedup();
        let failure_count = failures.len();
        failures.truncate(MAX_REPORTED_FAILURES);
        VerificationReport {
            checked,
            failed_families,
            failure_count,
            failures,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn family_passed(&self, family: EquationFamily) -> bool {
        !self.failed_families.contains(&family)
    }

    pub fn merge(mut self, other: VerificationReport) -> Self {
        self.checked.extend(other.checked);
        self.failed_families.extend(other.failed_families);
        self.failed_families.sort();
        self.failed_families.dedup();
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.failures.sort();
        self.failures.truncate(MAX_REPORTED_FAILURES);
        self
    }
}

fn push_residual<F: ScalarText>(out: &mut Vec<Failure>, family: EquationFamily, idx: &[usize], residual: &F) {
    if !residual.is_zero() {
        out.push(Failure {
            family,
            indices: idx.iter().map(|i| i + 1).collect(),
            residual: residual.to_text(),
        });
    }
}

fn delta<F: Field>(h: &Hopf<F>, a: usize, b: usize) -> F {
    if a == b {
        F::one(h.conductor())
    } else {
        F::zero(h.conductor())
    }
}

impl<F: ScalarText> Hopf<F> {
    /// Checks associativity, unit, coassociativity, counit and compatibility.
    pub fn verify_bialgebra(&self) -> VerificationReport {
        let n = self.dim();
        let per_index: Vec<Vec<Failure>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                self.check_associativity_row(i, &mut out);
                self.check_coassociativity_row(i, &mut out);
                self.check_compatibility_row(i, &mut out);
                out
            })
            .collect();
        let mut failures: Vec<Failure> = per_index.into_iter().flatten().collect();
        self.check_small_families(&mut failures);
        VerificationReport::from_failures(EquationFamily::BIALGEBRA.to_vec(), failures)
    }

    /// Checks both convolution identities for the stored antipode.
    pub fn verify_antipode(&self) -> Result<VerificationReport> {
        let s = self.antipode().ok_or(Error::MissingAntipode)?;
        Ok(self.verify_antipode_matrix(s))
    }

    /// Bialgebra axioms plus, when an antipode is stored, the antipode identities.
    pub fn verify(&self) -> VerificationReport {
        let report = self.verify_bialgebra();
        match self.antipode() {
            Some(s) => report.merge(self.verify_antipode_matrix(s)),
            None => report,
        }
    }

    pub fn verify_antipode_matrix(&self, s: &Matrix<F>) -> VerificationReport {
        let n = self.dim();
        let c = self.conductor();
        let images: Vec<Vec<F>> = (0..n).map(|j| s.column(j)).collect();
        let per_index: Vec<Vec<Failure>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut left = vec![F::zero(c); n];
                let mut right = vec![F::zero(c); n];
                for (j, k, d) in self.comul_basis(i) {
                    let sj = self.multiply(&images[*j], &self.basis_vector(*k));
                    let sk = self.multiply(&self.basis_vector(*j), &images[*k]);
                    for t in 0..n {
                        left[t].add_mul_assign(d, &sj[t]);
                        right[t].add_mul_assign(d, &sk[t]);
                    }
                }
                let mut out = Vec::new();
                for t in 0..n {
                    let target = if t == 0 { self.counit()[i].clone() } else { F::zero(c) };
                    push_residual(&mut out, EquationFamily::LeftAntipode, &[i, t], &left[t].sub_ref(&target));
                    push_residual(&mut out, EquationFamily::RightAntipode, &[i, t], &right[t].sub_ref(&target));
                }
                out
            })
            .collect();
        VerificationReport::from_failures(EquationFamily::ANTIPODE.to_vec(), per_index.into_iter().flatten().collect())
    }

    fn check_associativity_row(&self, i: usize, out: &mut Vec<Failure>) {
        let n = self.dim();
        let ei = self.basis_vector(i);
        for j in 0..n {
            let ij = self.multiply(&ei, &self.basis_vector(j));
            for k in 0..n {
                let ek = self.basis_vector(k);
                let lhs = self.multiply(&ij, &ek);
                let jk = self.mul_basis(j, k);
                let mut rhs = vec![F::zero(self.conductor()); n];
                for (l, v) in jk {
                    for (s, w) in self.mul_basis(i, *l) {
                        rhs[*s].add_mul_assign(v, w);
                    }
                }
                for s in 0..n {
                    push_residual(out, EquationFamily::Associativity, &[i, j, k, s], &lhs[s].sub_ref(&rhs[s]));
                }
            }
        }
    }

    fn check_coassociativity_row(&self, s: usize, out: &mut Vec<Failure>) {
        let n = self.dim();
        let c = self.conductor();
        let mut lhs = vec![F::zero(c); n * n * n];
        let mut rhs = vec![F::zero(c); n * n * n];
        for (l, k, d) in self.comul_basis(s) {
            for (i, j, e) in self.comul_basis(*l) {
                lhs[(i * n + j) * n + k].add_mul_assign(d, e);
            }
        }
        for (i, l, d) in self.comul_basis(s) {
            for (j, k, e) in self.comul_basis(*l) {
                rhs[(i * n + j) * n + k].add_mul_assign(d, e);
            }
        }
        for (idx, (a, b)) in lhs.iter().zip(&rhs).enumerate() {
            if a != b {
                let (i, j, k) = (idx / (n * n), (idx / n) % n, idx % n);
                push_residual(out, EquationFamily::Coassociativity, &[s, i, j, k], &a.sub_ref(b));
            }
        }
    }

    fn check_compatibility_row(&self, i: usize, out: &mut Vec<Failure>) {
        let n = self.dim();
        for j in 0..n {
            let mut lhs = Matrix::<F>::zeros(self.conductor(), n, n);
            for (l, cval) in self.mul_basis(i, j) {
                for (k, s, d) in self.comul_basis(*l) {
                    lhs.get_mut(*k, *s).add_mul_assign(cval, d);
                }
            }
            let rhs = self.tensor_multiply(self.comul_basis(i), self.comul_basis(j));
            for k in 0..n {
                for s in 0..n {
                    let (a, b) = (lhs.get(k, s), rhs.get(k, s));
                    if *a != *b {
                        push_residual(out, EquationFamily::Compatibility, &[i, j, k, s], &a.sub_ref(b));
                    }
                }
            }
        }
    }

    fn check_small_families(&self, out: &mut Vec<Failure>) {
        let n = self.dim();
        let c = self.conductor();
        let xi = self.counit();
        for i in 0..n {
            for j in 0..n {
                let d = delta(self, i, j);
                push_residual(out, EquationFamily::Unit, &[0, i, j], &self.mul_entry(0, i, j).sub_ref(&d));
                push_residual(out, EquationFamily::Unit, &[i, 0, j], &self.mul_entry(i, 0, j).sub_ref(&d));
            }
        }
        for i in 0..n {
            let mut left = vec![F::zero(c); n];
            let mut right = vec![F::zero(c); n];
            for (j, k, d) in self.comul_basis(i) {
                left[*k].add_mul_assign(d, &xi[*j]);
                right[*j].add_mul_assign(d, &xi[*k]);
            }
            for j in 0..n {
                let d = delta(self, i, j);
                push_residual(out, EquationFamily::LeftCounit, &[i, j], &left[j].sub_ref(&d));
                push_residual(out, EquationFamily::RightCounit, &[i, j], &right[j].sub_ref(&d));
            }
        }
        for j in 0..n {
            for k in 0..n {
                let target = if j == 0 && k == 0 { F::one(c) } else { F::zero(c) };
                push_residual(out, EquationFamily::UnitComul, &[0, j, k], &self.comul_entry(0, j, k).sub_ref(&target));
            }
        }
        push_residual(out, EquationFamily::CounitMul, &[0], &xi[0].sub_ref(&F::one(c)));
        for i in 0..n {
            for j in 0..n {
                let mut lhs = F::zero(c);
                for (l, v) in self.mul_basis(i, j) {
                    lhs.add_mul_assign(v, &xi[*l]);
                }
                push_residual(out, EquationFamily::CounitMul, &[i, j], &lhs.sub_ref(&xi[i].mul_ref(&xi[j])));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Conductor, CycScalar};
    use crate::HopfData;

    fn z2(c22: i64) -> HopfData {
        let c = Conductor::new(1);
        let one = CycScalar::one(c);
        Hopf::from_parts(
            c,
            2,
            vec![
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, CycScalar::from_int(c, c22)),
            ],
            vec![(0, 0, 0, one.clone()), (1, 1, 1, one.clone())],
            vec![one.clone(), one.clone()],
            Some(Matrix::identity(c, 2)),
        )
        .unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        let r = z2(1).verify();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checked.len(), 10);
    }

    #[test]
    fn perturbed_product_fails_with_residual() {
        let r = z2(2).verify_bialgebra();
        assert!(!r.passed());
        assert!(!r.family_passed(EquationFamily::CounitMul));
        let f = r
            .failures
            .iter()
            .find(|f| f.family == EquationFamily::CounitMul)
            .unwrap();
        assert_eq!(f.indices, vec![2, 2]);
        assert_eq!(f.residual, "1");
        let mut sorted = r.failures.clone();
        sorted.sort();
        assert_eq!(sorted, r.failures);
    }

    #[test]
    fn missing_antipode_is_an_error() {
        assert!(matches!(z2(1).without_antipode().verify_antipode(), Err(Error::MissingAntipode)));
    }
}
