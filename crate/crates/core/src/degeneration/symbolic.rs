use serde::Serialize;

use super::{finish, ConditionOutcome, DegenerationReport, Method, Pole, PoleSummary, Tensor};
use crate::hopf::{Hopf, VerificationReport};
use crate::linalg::Matrix;
use crate::scalars::{quotient_limit_at_zero, CycScalar, Field, Limit, RatFunc, TPoly};
use crate::{Error, FamilyData, HopfData, LinearMap, Result};

/// A polynomial family of maps `f_t` with its adjugate: `f_t · adj = den · id`.
#[derive(Clone, Debug)]
pub struct PolyFamily {
    pub f: Matrix<RatFunc>,
    pub adj: Matrix<RatFunc>,
    pub den: TPoly,
}

impl PolyFamily {
    /// `φ + t·id`, with adjugate and determinant from the Faddeev–LeVerrier recursion.
    pub fn shifted(phi: &LinearMap) -> Self {
        let n = phi.rows();
        let c = phi.conductor();
        let a = phi.scale(&CycScalar::from_int(c, -1));
        let id = Matrix::<CycScalar>::identity(c, n);
        let mut coeffs = vec![CycScalar::zero(c); n + 1];
        coeffs[n] = CycScalar::one(c);
        let mut ms: Vec<LinearMap> = Vec::with_capacity(n);
        let mut prev = Matrix::<CycScalar>::zeros(c, n, n);
        for k in 1..=n {
            let mk = a.mul(&prev).add(&id.scale(&coeffs[n - k + 1]));
            let tr = a.mul(&mk).trace();
            coeffs[n - k] = tr.neg_ref().mul_ref(&CycScalar::from_int(c, k as i64).checked_inv().unwrap());
            ms.push(mk.clone());
            prev = mk;
        }
        let adj = Matrix::from_fn(c, n, n, |i, j| {
            let poly_coeffs: Vec<CycScalar> = (0..n).map(|p| ms[n - 1 - p].get(i, j).clone()).collect();
            RatFunc::from_poly(TPoly::from_coeffs(c, poly_coeffs))
        });
        let f = Matrix::from_fn(c, n, n, |i, j| {
            let mut coeffs = vec![phi.get(i, j).clone()];
            if i == j {
                coeffs.push(CycScalar::one(c));
            }
            RatFunc::from_poly(TPoly::from_coeffs(c, coeffs))
        });
        PolyFamily {
            f,
            adj,
            den: TPoly::from_coeffs(c, coeffs),
        }
    }

    /// `diag(t^{d_1}, …, t^{d_n})`.
    pub fn diagonal(c: crate::Conductor, degrees: &[usize]) -> Self {
        let n = degrees.len();
        let top = degrees.iter().copied().max().unwrap_or(0);
        let mono = |k: usize| RatFunc::from_poly(TPoly::monomial(CycScalar::one(c), k));
        let zero = RatFunc::zero(c);
        PolyFamily {
            f: Matrix::from_fn(c, n, n, |i, j| if i == j { mono(degrees[i]) } else { zero.clone() }),
            adj: Matrix::from_fn(c, n, n, |i, j| if i == j { mono(top - degrees[i]) } else { zero.clone() }),
            den: TPoly::monomial(CycScalar::one(c), top),
        }
    }

    /// Entry-wise limit of `f_t · H` at `t = 0`, or the poles that prevent it.
    pub fn limit(&self, h: &HopfData) -> (PoleSummary, Option<HopfData>) {
        let lifted: FamilyData = h.map_scalars(RatFunc::from_scalar);
        let numerators = lifted.transport_with(&self.f, &self.adj);
        let one = TPoly::one(h.conductor());
        let den2 = &self.den * &self.den;
        limit_entries(&numerators, |tensor, v| {
            debug_assert!(v.is_polynomial());
            let den = match tensor {
                Tensor::Mul | Tensor::Antipode => &self.den,
                Tensor::Comul => &den2,
                Tensor::Counit => &one,
            };
            quotient_limit_at_zero(v.num(), den)
        })
    }
}

/// Applies `limit` to every entry. Returns the poles found and, when the
/// multiplication, comultiplication and counit are all regular, the limit
/// structure (with antipode only if that is regular too).
fn limit_entries(family: &FamilyData, limit: impl Fn(Tensor, &RatFunc) -> Limit) -> (PoleSummary, Option<HopfData>) {
    let n = family.dim();
    let c = family.conductor();
    let mut poles = PoleSummary::default();
    let note = |poles: &mut PoleSummary, tensor: Tensor, indices: Vec<usize>, valuation: i64| {
        match tensor {
            Tensor::Mul => poles.mul = true,
            Tensor::Comul => poles.comul = true,
            Tensor::Counit => poles.counit = true,
            Tensor::Antipode => poles.antipode = true,
        }
        if poles.first.is_none() {
            poles.first = Some(Pole {
                tensor,
                indices: indices.into_iter().map(|i| i + 1).collect(),
                valuation,
            });
        }
    };
    let mut mul = Vec::new();
    for (i, j, k, v) in family.mul_entries() {
        match limit(Tensor::Mul, v) {
            Limit::Value(x) => mul.push((i, j, k, x)),
            Limit::Pole { valuation } => note(&mut poles, Tensor::Mul, vec![i, j, k], valuation),
        }
    }
    let mut comul = Vec::new();
    for (i, j, k, v) in family.comul_entries() {
        match limit(Tensor::Comul, v) {
            Limit::Value(x) => comul.push((i, j, k, x)),
            Limit::Pole { valuation } => note(&mut poles, Tensor::Comul, vec![i, j, k], valuation),
        }
    }
    let mut counit = Vec::with_capacity(n);
    for (i, v) in family.counit().iter().enumerate() {
        match limit(Tensor::Counit, v) {
            Limit::Value(x) => counit.push(x),
            Limit::Pole { valuation } => {
                note(&mut poles, Tensor::Counit, vec![i], valuation);
                counit.push(CycScalar::zero(c));
            }
        }
    }
    let antipode = family.antipode().and_then(|s| {
        let mut out = Matrix::<CycScalar>::zeros(c, n, n);
        let mut regular = true;
        for i in 0..n {
            for j in 0..n {
                let v = s.get(i, j);
                if v.is_zero() {
                    continue;
                }
                match limit(Tensor::Antipode, v) {
                    Limit::Value(x) => out.set(i, j, x),
                    Limit::Pole { valuation } => {
                        note(&mut poles, Tensor::Antipode, vec![i, j], valuation);
                        regular = false;
                    }
                }
            }
        }
        regular.then_some(out)
    });
    if poles.any_structure_pole() {
        return (poles, None);
    }
    let h = Hopf::from_parts(c, n, mul, comul, counit, antipode)
        .expect("limit keeps the shape")
        .with_meta(family.meta.clone());
    (poles, Some(h))
}

/// Degeneration along `φ + t·id` by exact transport over `K(t)` and
/// entry-wise limits.
pub fn degenerate_symbolic(h: &HopfData, phi: &LinearMap) -> Result<DegenerationReport> {
    h.check_map(phi)?;
    Ok(symbolic_report(Method::Symbolic, h, &PolyFamily::shifted(phi)))
}

pub(super) fn symbolic_report(method: Method, h: &HopfData, family: &PolyFamily) -> DegenerationReport {
    let (poles, raw) = family.limit(h);
    let verdict = |holds: bool| ConditionOutcome { holds, violation: None };
    let mut report = DegenerationReport::conditions_only(method, verdict(!poles.mul), verdict(!poles.comul));
    report.poles = Some(poles);
    match raw {
        Some(raw) => finish(report, raw),
        None => report,
    }
}

/// Limit at `t = 0` of a one-parameter family.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyLimit {
    pub poles: PoleSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<HopfData>,
}

/// Checks that the family satisfies the bialgebra identities over `K(t)` and
/// takes the entry-wise limit at `t = 0`.
pub fn family_limit(family: &FamilyData) -> Result<FamilyLimit> {
    let check = family.verify_bialgebra();
    if !check.passed() {
        return Err(Error::NotABialgebraFamily(check.failures[0].to_string()));
    }
    let (poles, raw) = limit_entries(family, |_, v| v.limit_at_zero());
    let Some(mut h) = raw else {
        return Ok(FamilyLimit {
            poles,
            verification: None,
            limit: None,
        });
    };
    if h.antipode().is_none() {
        if let Ok(s) = h.compute_antipode() {
            h = h.with_antipode(Some(s));
        }
    }
    let verification = h.verify();
    Ok(FamilyLimit {
        poles,
        verification: Some(verification),
        limit: Some(h),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_get, family_get, taft, x2_family};
    use crate::degeneration::degenerate_closed_form;
    use crate::scalars::Conductor;

    fn c1() -> Conductor {
        Conductor::new(1)
    }

    fn group_span_projector(big_n: usize) -> LinearMap {
        Matrix::from_fn(c1(), 2 * big_n, 2 * big_n, |i, j| {
            if i == j && i < big_n {
                CycScalar::one(c1())
            } else {
                CycScalar::zero(c1())
            }
        })
    }

    fn laplace_det(m: &LinearMap) -> CycScalar {
        let n = m.rows();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = CycScalar::zero(c1());
        for j in 0..n {
            let minor = Matrix::from_fn(c1(), n - 1, n - 1, |r, k| m.get(r + 1, k + usize::from(k >= j)).clone());
            let term = m.get(0, j).mul_ref(&laplace_det(&minor));
            acc = if j % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
        }
        acc
    }

    #[test]
    fn adjugate_times_map_is_determinant() {
        let phi = Matrix::from_fn(c1(), 4, 4, |i, j| CycScalar::from_int(c1(), ((i * 3 + j * 5) % 7) as i64 - 3));
        let fam = PolyFamily::shifted(&phi);
        let prod = fam.f.mul(&fam.adj);
        let det = RatFunc::from_poly(fam.den.clone());
        assert_eq!(prod, Matrix::<RatFunc>::identity(c1(), 4).scale(&det));
        assert_eq!(fam.den.degree(), Some(4));
        assert_eq!(fam.den.coeff(0), laplace_det(&phi));
    }

    #[test]
    fn identity_direction_reproduces_input() {
        let h = catalog_get("T_4").unwrap();
        let id = Matrix::<CycScalar>::identity(h.conductor(), 4);
        let r = degenerate_symbolic(&h, &id).unwrap();
        assert_eq!(r.limit.as_ref(), Some(&h));
    }

    #[test]
    fn group_span_projectors_match_closed_form() {
        for (big_n, alpha) in [(4, 1), (6, 1)] {
            let h = x2_family(big_n, &CycScalar::from_int(c1(), alpha)).unwrap();
            let phi = group_span_projector(big_n);
            let sym = degenerate_symbolic(&h, &phi).unwrap();
            let closed = degenerate_closed_form(&h, &phi).unwrap();
            assert!(sym.agrees_with(&closed));
            let expected = x2_family(big_n, &CycScalar::zero(c1())).unwrap();
            assert_eq!(sym.limit.as_ref(), Some(&expected));
        }
    }

    #[test]
    fn zero_map_on_taft_has_comul_pole() {
        let h = taft(2).unwrap();
        let zero = Matrix::<CycScalar>::zeros(h.conductor(), 4, 4);
        let r = degenerate_symbolic(&h, &zero).unwrap();
        let poles = r.poles.as_ref().unwrap();
        assert!(poles.comul && !poles.mul);
        assert_eq!(poles.first.as_ref().unwrap().tensor, Tensor::Comul);
        assert!(r.limit.is_none());
        let closed = degenerate_closed_form(&h, &zero).unwrap();
        assert!(closed.mul_condition.holds);
        assert_eq!(closed.comul_condition.violation.as_ref().unwrap().identity, 3);
    }

    #[test]
    fn families_tend_to_zero_parameter() {
        for (id, big_n) in [("H_t", 4), ("A_t", 6)] {
            let fam = family_get(id).unwrap();
            let out = family_limit(&fam).unwrap();
            assert!(out.verification.as_ref().unwrap().passed());
            assert_eq!(out.limit.unwrap(), x2_family(big_n, &CycScalar::zero(c1())).unwrap());
        }
        let dual = family_limit(&family_get("A_t_dual").unwrap()).unwrap().limit.unwrap();
        assert_eq!(dual, x2_family(6, &CycScalar::zero(c1())).unwrap().dual().unwrap());
    }

    #[test]
    fn synthetic_pole_is_reported() {
        let c = c1();
        let inv_t = RatFunc::t(c).inv_ref().unwrap();
        // KZ_2 in the basis (1, t(g − 1)): a bialgebra for every t ≠ 0.
        let one = RatFunc::one(c);
        let minus_two_t = RatFunc::t(c).mul_ref(&RatFunc::from_int(c, -2));
        let mul = vec![(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 1, minus_two_t)];
        let comul = vec![(0, 0, 0, one.clone()), (1, 0, 1, one.clone()), (1, 1, 0, one.clone()), (1, 1, 1, inv_t)];
        let fam = Hopf::from_parts(c, 2, mul, comul, vec![one.clone(), RatFunc::zero(c)], None).unwrap();
        let out = family_limit(&fam).unwrap();
        assert!(out.limit.is_none());
        let pole = out.poles.first.unwrap();
        assert_eq!((pole.tensor, pole.indices.clone(), pole.valuation), (Tensor::Comul, vec![2, 2, 2], -1));
    }
}
