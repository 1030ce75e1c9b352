use rayon::prelude::*;

use super::{finish, fitting_decompose, ConditionOutcome, ConditionViolation, DegenerationReport, FittingData, Method};
use crate::hopf::Hopf;
use crate::scalars::{CycScalar, Field};
use crate::{Error, HopfData, LinearMap, Result};

fn first_nonzero_vec(v: &[CycScalar]) -> Option<(usize, &CycScalar)> {
    v.iter().enumerate().find(|(_, x)| !x.is_zero())
}

fn first_nonzero_mat(m: &LinearMap) -> Option<(usize, usize, CycScalar)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                return Some((i, j, m.get(i, j).clone()));
            }
        }
    }
    None
}

fn columns(m: &LinearMap) -> Vec<Vec<CycScalar>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// `φ² μ_N − φ μ_N (φ ⊗ id) − φ μ_N (id ⊗ φ) + μ_N (φ ⊗ φ) = 0` with `μ_N = P_N μ`,
/// on all basis pairs.
pub fn check_mul_condition(h: &HopfData, fit: &FittingData) -> ConditionOutcome {
    let n = h.dim();
    let phi = &fit.phi;
    let phi_cols = columns(phi);
    let phi2 = phi.mul(phi);
    let violation = (0..n * n).into_par_iter().find_map_first(|ij| {
        let (i, j) = (ij / n, ij % n);
        let (ei, ej) = (h.basis_vector(i), h.basis_vector(j));
        let mu_n = |a: &[CycScalar], b: &[CycScalar]| fit.p_n.apply(&h.multiply(a, b));
        let a = phi2.apply(&mu_n(&ei, &ej));
        let b = phi.apply(&mu_n(&phi_cols[i], &ej));
        let c = phi.apply(&mu_n(&ei, &phi_cols[j]));
        let d = mu_n(&phi_cols[i], &phi_cols[j]);
        let residual: Vec<CycScalar> = (0..n).map(|k| &(&(&a[k] - &b[k]) - &c[k]) + &d[k]).collect();
        first_nonzero_vec(&residual).map(|(k, v)| ConditionViolation {
            identity: 1,
            indices: vec![i + 1, j + 1, k + 1],
            residual: v.to_string(),
        })
    });
    match violation {
        Some(v) => ConditionOutcome::fail(v),
        None => ConditionOutcome::pass(),
    }
}

/// The four tensor identities on every basis vector `x`:
/// `(P_R ⊗ φP_N)Δx = (P_R ⊗ P_N)Δφx`, `(φP_N ⊗ P_R)Δx = (P_N ⊗ P_R)Δφx`,
/// `(P_N ⊗ P_N)Δx = 0`, `(P_N ⊗ P_N)Δφx = (P_N ⊗ φP_N)Δx`.
pub fn check_comul_condition(h: &HopfData, fit: &FittingData) -> ConditionOutcome {
    let n = h.dim();
    let phi_cols = columns(&fit.phi);
    let phi_pn = fit.phi.mul(&fit.p_n);
    let (pr_t, pn_t, phi_pn_t) = (fit.p_r.transpose(), fit.p_n.transpose(), phi_pn.transpose());
    let violation = (0..n).into_par_iter().find_map_first(|i| {
        let dx = h.comultiply(&h.basis_vector(i));
        let dphix = h.comultiply(&phi_cols[i]);
        let identities = [
            fit.p_r.mul(&dx).mul(&phi_pn_t).sub(&fit.p_r.mul(&dphix).mul(&pn_t)),
            phi_pn.mul(&dx).mul(&pr_t).sub(&fit.p_n.mul(&dphix).mul(&pr_t)),
            fit.p_n.mul(&dx).mul(&pn_t),
            fit.p_n.mul(&dphix).mul(&pn_t).sub(&fit.p_n.mul(&dx).mul(&phi_pn_t)),
        ];
        identities.iter().enumerate().find_map(|(which, m)| {
            first_nonzero_mat(m).map(|(j, k, v)| ConditionViolation {
                identity: which + 1,
                indices: vec![i + 1, j + 1, k + 1],
                residual: v.to_string(),
            })
        })
    });
    match violation {
        Some(v) => ConditionOutcome::fail(v),
        None => ConditionOutcome::pass(),
    }
}

/// The limit structure from the closed formulas, in the family's coordinates.
fn closed_form_limit(h: &HopfData, fit: &FittingData) -> HopfData {
    let n = h.dim();
    let c = h.conductor();
    let phi = &fit.phi;
    let phi_cols = columns(phi);
    let psi_pr = fit.psi.mul(&fit.p_r);
    let phi_pn = phi.mul(&fit.p_n);

    let mul: Vec<(usize, usize, usize, CycScalar)> = (0..n * n)
        .into_par_iter()
        .flat_map_iter(|ij| {
            let (i, j) = (ij / n, ij % n);
            let (ei, ej) = (h.basis_vector(i), h.basis_vector(j));
            let rr = psi_pr.apply(&h.multiply(&phi_cols[i], &phi_cols[j]));
            let left = fit.p_n.apply(&h.multiply(&phi_cols[i], &ej));
            let right = fit.p_n.apply(&h.multiply(&ei, &phi_cols[j]));
            let corr = phi_pn.apply(&h.multiply(&ei, &ej));
            (0..n)
                .map(move |k| (i, j, k, &(&(&rr[k] + &left[k]) + &right[k]) - &corr[k]))
                .filter(|e| !e.3.is_zero())
                .collect::<Vec<_>>()
        })
        .collect();

    let (psi_pr_t, pn_t) = (psi_pr.transpose(), fit.p_n.transpose());
    let comul: Vec<(usize, usize, usize, CycScalar)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let dx = h.comultiply(&h.basis_vector(i));
            let dphix = h.comultiply(&phi_cols[i]);
            let m = psi_pr
                .mul(&dphix)
                .mul(&psi_pr_t)
                .add(&psi_pr.mul(&dx).mul(&pn_t))
                .add(&fit.p_n.mul(&dx).mul(&psi_pr_t));
            let mut out = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if !m.get(j, k).is_zero() {
                        out.push((i, j, k, m.get(j, k).clone()));
                    }
                }
            }
            out
        })
        .collect();

    let counit: Vec<CycScalar> = (0..n)
        .map(|i| {
            let mut acc = CycScalar::zero(c);
            for (a, x) in h.counit().iter().enumerate() {
                acc.add_mul_assign(x, phi.get(a, i));
            }
            acc
        })
        .collect();

    // The transported antipode `f_t⁻¹ S f_t` is regular at 0 exactly when
    // `P_N S φ = φ P_N S`; its limit is then `ψ P_R S φ + P_N S`.
    let antipode = h.antipode().and_then(|s| {
        let pn_s = fit.p_n.mul(s);
        (pn_s.mul(phi) == phi.mul(&pn_s)).then(|| psi_pr.mul(s).mul(phi).add(&pn_s))
    });
    Hopf::from_parts(c, n, mul, comul, counit, antipode)
        .expect("limit keeps the shape")
        .with_meta(h.meta.clone())
}

/// Degeneration along `φ + t·id` from the closed formulas.
pub fn degenerate_closed_form(h: &HopfData, phi: &LinearMap) -> Result<DegenerationReport> {
    h.check_map(phi)?;
    let fit = fitting_decompose(phi);
    let mul = check_mul_condition(h, &fit);
    let comul = check_comul_condition(h, &fit);
    let ok = mul.holds && comul.holds;
    let report = DegenerationReport::conditions_only(Method::ClosedForm, mul, comul);
    if !ok {
        return Ok(report);
    }
    Ok(finish(report, closed_form_limit(h, &fit)))
}

/// Degeneration along `v + t·w` with `w` invertible: reduces to `φ = v w⁻¹`
/// and transports the result back by `w`.
pub fn degenerate_pair(h: &HopfData, v: &LinearMap, w: &LinearMap) -> Result<DegenerationReport> {
    h.check_map(v)?;
    h.check_map(w)?;
    let w_inv = w.inverse().ok_or(Error::SingularMap)?;
    let report = degenerate_closed_form(h, &v.mul(&w_inv))?;
    match report.raw_limit.clone() {
        Some(raw) => {
            let fresh = DegenerationReport::conditions_only(Method::ClosedForm, report.mul_condition, report.comul_condition);
            Ok(finish(fresh, raw.transport_with(w, &w_inv)))
        }
        None => Ok(report),
    }
}
