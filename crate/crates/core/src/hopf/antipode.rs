use thiserror::Error;

use super::Hopf;
use crate::linalg::{Echelon, Matrix};
use crate::scalars::Field;

/// The convolution system for an antipode is inconsistent: the bialgebra is not Hopf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("the bialgebra has no antipode")]
pub struct NoAntipode;

impl<F: Field> Hopf<F> {
    /// Solves both convolution identities jointly for the antipode matrix.
    ///
    /// The unknown `S_{rj}` is the coefficient of `e_r` in `S(e_j)`.
    pub fn compute_antipode(&self) -> Result<Matrix<F>, NoAntipode> {
        let n = self.dim();
        let c = self.conductor();
        let width = n * n + 1;
        let mut ech = Echelon::new(c, width);
        for i in 0..n {
            let mut left = vec![vec![F::zero(c); width]; n];
            let mut right = vec![vec![F::zero(c); width]; n];
            for (j, k, d) in self.comul_basis(i) {
                for r in 0..n {
                    for (t, v) in self.mul_basis(r, *k) {
                        left[*t][r * n + j].add_mul_assign(d, v);
                    }
                    for (t, v) in self.mul_basis(*j, r) {
                        right[*t][r * n + k].add_mul_assign(d, v);
                    }
                }
            }
            let rhs = self.counit()[i].neg_ref();
            left[0][n * n] = rhs.clone();
            right[0][n * n] = rhs;
            for row in left.iter().chain(&right) {
                ech.insert_dense(row);
            }
        }
        let x = ech.affine_solution().ok_or(NoAntipode)?;
        let s = Matrix::from_fn(c, n, n, |r, j| x[r * n + j].clone());
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Conductor, CycScalar};

    /// span{1, e} with e² = e, Δe = e ⊗ e, ε(e) = 1.
    fn idempotent_bialgebra() -> Hopf<CycScalar> {
        let c = Conductor::new(1);
        let one = CycScalar::one(c);
        Hopf::from_parts(
            c,
            2,
            vec![
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 1, one.clone()),
            ],
            vec![(0, 0, 0, one.clone()), (1, 1, 1, one.clone())],
            vec![one.clone(), one.clone()],
            None,
        )
        .unwrap()
    }

    #[test]
    fn non_invertible_grouplike_has_no_antipode() {
        let b = idempotent_bialgebra();
        assert!(b.verify_bialgebra().passed());
        assert_eq!(b.compute_antipode(), Err(NoAntipode));
    }
}
