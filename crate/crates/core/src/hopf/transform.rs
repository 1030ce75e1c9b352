use rayon::prelude::*;

use super::Hopf;
use crate::linalg::Matrix;
use crate::scalars::Field;
use crate::{Error, Result};

fn sparse_column<F: Field>(m: &Matrix<F>, j: usize) -> Vec<(usize, F)> {
    (0..m.rows())
        .filter_map(|i| {
            let v = m.get(i, j);
            (!v.is_zero()).then(|| (i, v.clone()))
        })
        .collect()
}

impl<F: Field> Hopf<F> {
    /// Structure transport `f · H`: `f⁻¹ μ (f ⊗ f)`, `(f⁻¹ ⊗ f⁻¹) Δ f`, `ξ f`, `f⁻¹ S f`.
    pub fn transport(&self, f: &Matrix<F>) -> Result<Hopf<F>> {
        self.check_map(f)?;
        let inv = f.inverse().ok_or(Error::SingularMap)?;
        Ok(self.transport_with(f, &inv))
    }

    pub(crate) fn check_map(&self, f: &Matrix<F>) -> Result<()> {
        if f.rows() != self.dim() || f.cols() != self.dim() {
            return Err(Error::Dimension(format!(
                "map is {}x{}, structure has dimension {}",
                f.rows(),
                f.cols(),
                self.dim()
            )));
        }
        if f.conductor() != self.conductor() {
            return Err(Error::ConductorMismatch(self.conductor().m(), f.conductor().m()));
        }
        Ok(())
    }

    /// Transport with an explicitly supplied left factor `g` in place of `f⁻¹`:
    /// `g μ (f ⊗ f)`, `(g ⊗ g) Δ f`, `ξ f`, `g S f`. Passing `g` = adjugate of a
    /// polynomial family yields numerators over a common denominator.
    pub fn transport_with(&self, f: &Matrix<F>, g: &Matrix<F>) -> Hopf<F> {
        let n = self.dim();
        let c = self.conductor();
        let cols: Vec<Vec<(usize, F)>> = (0..n).map(|j| sparse_column(f, j)).collect();

        let mul: Vec<(usize, usize, usize, F)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut out = Vec::new();
                for j in 0..n {
                    let mut prod = vec![F::zero(c); n];
                    for (a, x) in &cols[i] {
                        for (b, y) in &cols[j] {
                            let xy = x.mul_ref(y);
                            for (k, v) in self.mul_basis(*a, *b) {
                                prod[*k].add_mul_assign(&xy, v);
                            }
                        }
                    }
                    for (k, v) in g.apply(&prod).into_iter().enumerate() {
                        if !v.is_zero() {
                            out.push((i, j, k, v));
                        }
                    }
                }
                out
            })
            .collect();

        let gt = g.transpose();
        let comul: Vec<(usize, usize, usize, F)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut m = Matrix::<F>::zeros(c, n, n);
                for (a, x) in &cols[i] {
                    for (j, k, d) in self.comul_basis(*a) {
                        m.get_mut(*j, *k).add_mul_assign(x, d);
                    }
                }
                let r = g.mul(&m).mul(&gt);
                let mut out = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let v = r.get(j, k);
                        if !v.is_zero() {
                            out.push((i, j, k, v.clone()));
                        }
                    }
                }
                out
            })
            .collect();

        let counit: Vec<F> = (0..n)
            .map(|i| {
                let mut acc = F::zero(c);
                for (a, x) in &cols[i] {
                    acc.add_mul_assign(&self.counit()[*a], x);
                }
                acc
            })
            .collect();
        let antipode = self.antipode().map(|s| g.mul(s).mul(f));
        Hopf::from_parts(c, n, mul, comul, counit, antipode)
            .expect("transport preserves shape")
            .with_meta(self.meta.clone())
    }

    /// The dual in the dual basis, before unit normalization, together with its unit.
    ///
    /// Multiplication and comultiplication swap roles, the counit becomes
    /// evaluation at the unit and the antipode is transposed.
    pub fn raw_dual(&self) -> (Hopf<F>, Vec<F>) {
        let n = self.dim();
        let c = self.conductor();
        let mul = self.comul_entries().map(|(k, i, j, v)| (i, j, k, v.clone()));
        let comul = self.mul_entries().map(|(i, j, k, v)| (k, i, j, v.clone()));
        let mut counit = vec![F::zero(c); n];
        counit[0] = F::one(c);
        let antipode = self.antipode().map(Matrix::transpose);
        let raw = Hopf::from_parts(c, n, mul, comul, counit, antipode).expect("dual preserves shape");
        (raw, self.counit().to_vec())
    }

    /// The dual Hopf algebra normalized so that basis vector 0 is its unit.
    pub fn dual(&self) -> Result<Hopf<F>> {
        Ok(self.dual_with_map()?.0)
    }

    /// The dual together with the normalization map applied to the dual basis.
    pub fn dual_with_map(&self) -> Result<(Hopf<F>, Matrix<F>)> {
        let (raw, u) = self.raw_dual();
        let (mut out, g) = raw.normalize_unit(&u)?;
        let mut meta = self.meta.clone();
        if let Some(name) = self.meta_name() {
            meta.insert("name".into(), format!("dual of {name}").into());
        }
        out.meta = meta;
        Ok((out, g))
    }

    /// Whether `u` is a two-sided unit of the multiplication.
    pub fn is_unit(&self, u: &[F]) -> bool {
        (0..self.dim()).all(|i| {
            let e = self.basis_vector(i);
            self.multiply(u, &e) == e && self.multiply(&e, u) == e
        })
    }

    /// The unit-normalizing map for `u`: `e_1 ↦ u`, and if the first nonzero
    /// coordinate `p` of `u` is not the first, `e_p ↦ e_1`; other basis vectors fixed.
    pub fn unit_normalizer(&self, u: &[F]) -> Result<Matrix<F>> {
        let n = self.dim();
        let c = self.conductor();
        let p = u.iter().position(|v| !v.is_zero()).ok_or(Error::NotAUnit)?;
        let mut g = Matrix::identity(c, n);
        for (i, v) in u.iter().enumerate() {
            g.set(i, 0, v.clone());
        }
        if p > 0 {
            for i in 0..n {
                g.set(i, p, F::zero(c));
            }
            g.set(0, p, F::one(c));
        }
        Ok(g)
    }

    /// Transports a structure with unit `u` to the basis whose first vector is `u`.
    pub fn normalize_unit(&self, u: &[F]) -> Result<(Hopf<F>, Matrix<F>)> {
        if u.len() != self.dim() {
            return Err(Error::Dimension(format!("unit vector has {} entries", u.len())));
        }
        if !self.is_unit(u) {
            return Err(Error::NotAUnit);
        }
        let g = self.unit_normalizer(u)?;
        Ok((self.transport(&g)?, g))
    }

    /// Solves for a two-sided unit of the multiplication.
    pub fn find_unit(&self) -> Option<Vec<F>> {
        let n = self.dim();
        let c = self.conductor();
        let mut ech = crate::linalg::Echelon::new(c, n + 1);
        for i in 0..n {
            for k in 0..n {
                let target = if i == k { F::one(c).neg_ref() } else { F::zero(c) };
                let mut left = vec![F::zero(c); n + 1];
                let mut right = vec![F::zero(c); n + 1];
                for a in 0..n {
                    left[a] = self.mul_entry(a, i, k);
                    right[a] = self.mul_entry(i, a, k);
                }
                left[n] = target.clone();
                right[n] = target;
                ech.insert_dense(&left);
                ech.insert_dense(&right);
            }
        }
        let u = ech.affine_solution()?;
        self.is_unit(&u).then_some(u)
    }

    /// Solves for a counit of the comultiplication.
    pub fn find_counit(&self) -> Option<Vec<F>> {
        let n = self.dim();
        let c = self.conductor();
        let mut ech = crate::linalg::Echelon::new(c, n + 1);
        for i in 0..n {
            for k in 0..n {
                let target = if i == k { F::one(c).neg_ref() } else { F::zero(c) };
                let mut left = vec![F::zero(c); n + 1];
                let mut right = vec![F::zero(c); n + 1];
                for a in 0..n {
                    left[a] = self.comul_entry(i, a, k);
                    right[a] = self.comul_entry(i, k, a);
                }
                left[n] = target.clone();
                right[n] = target;
                ech.insert_dense(&left);
                ech.insert_dense(&right);
            }
        }
        ech.affine_solution()
    }

    pub fn with_counit(&self, counit: Vec<F>) -> Hopf<F> {
        assert_eq!(counit.len(), self.dim());
        let mut out = self.clone();
        out.counit = counit;
        out
    }
}

/// The canonical isomorphism `H → H**` expressed in the normalized bases of
/// `dual(dual(H))`, given the normalization maps of the two dual steps.
pub fn double_dual_map<F: Field>(first: &Matrix<F>, second: &Matrix<F>) -> Result<Matrix<F>> {
    let inv = second.inverse().ok_or(Error::SingularMap)?;
    Ok(inv.mul(&first.transpose()))
}
