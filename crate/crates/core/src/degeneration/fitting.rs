use crate::linalg::Matrix;
use crate::scalars::CycScalar;
use crate::LinearMap;

/// The splitting `V = V_R ⊕ V_N` of a linear map: invertible on `V_R`,
/// nilpotent on `V_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct FittingData {
    pub phi: LinearMap,
    /// Projector onto `V_R` along `V_N`.
    pub p_r: LinearMap,
    /// Projector onto `V_N` along `V_R`.
    pub p_n: LinearMap,
    /// Inverse of `φ` on `V_R`, zero on `V_N`.
    pub psi: LinearMap,
    /// Least `q` with `φ^q(V_N) = 0`; zero when `V_N = 0`.
    pub q: usize,
    pub rank_r: usize,
}

/// `V_N = ker φⁿ`, `V_R = im φⁿ`, with projectors from an adapted basis.
pub fn fitting_decompose(phi: &LinearMap) -> FittingData {
    assert!(phi.is_square());
    let n = phi.rows();
    let c = phi.conductor();
    let power = phi.pow(n as u32);
    let image = power.column_space();
    let kernel = power.nullspace();
    let r = image.len();
    assert_eq!(r + kernel.len(), n);
    let basis = Matrix::from_fn(c, n, n, |i, j| if j < r { image[j][i].clone() } else { kernel[j - r][i].clone() });
    let basis_inv = basis.inverse().expect("image and kernel of φⁿ are complementary");
    let adapted = basis_inv.mul(phi).mul(&basis);
    let block = Matrix::from_fn(c, r, r, |i, j| adapted.get(i, j).clone());
    let block_inv = block.inverse().expect("φ is invertible on its stable image");
    let embed = |m: &dyn Fn(usize, usize) -> CycScalar| basis.mul(&Matrix::from_fn(c, n, n, |i, j| m(i, j))).mul(&basis_inv);
    let p_r = embed(&|i, j| if i == j && i < r { CycScalar::one(c) } else { CycScalar::zero(c) });
    let psi = embed(&|i, j| if i < r && j < r { block_inv.get(i, j).clone() } else { CycScalar::zero(c) });
    let p_n = Matrix::identity(c, n).sub(&p_r);
    let q = if r == n {
        0
    } else {
        let mut acc = p_n.clone();
        let mut q = 0;
        while !acc.is_zero() {
            acc = phi.mul(&acc);
            q += 1;
        }
        q
    };
    FittingData {
        phi: phi.clone(),
        p_r,
        p_n,
        psi,
        q,
        rank_r: r,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Conductor;

    fn m(rows: &[&[i64]]) -> LinearMap {
        let c = Conductor::new(1);
        Matrix::from_rows(c, rows.iter().map(|r| r.iter().map(|&v| CycScalar::from_int(c, v)).collect()).collect())
    }

    fn check_invariants(fit: &FittingData) {
        let n = fit.phi.rows();
        let id = Matrix::identity(fit.phi.conductor(), n);
        assert_eq!(fit.p_r.add(&fit.p_n), id);
        assert_eq!(fit.p_r.mul(&fit.p_r), fit.p_r);
        assert_eq!(fit.p_n.mul(&fit.p_n), fit.p_n);
        assert!(fit.p_r.mul(&fit.p_n).is_zero());
        assert_eq!(fit.phi.mul(&fit.p_r), fit.p_r.mul(&fit.phi));
        assert_eq!(fit.psi.mul(&fit.phi), fit.p_r);
        assert_eq!(fit.phi.mul(&fit.psi), fit.p_r);
        if fit.q > 0 {
            let nil = fit.p_n.mul(&fit.phi);
            assert!(nil.pow(fit.q as u32).is_zero());
            assert!(!nil.pow(fit.q as u32 - 1).mul(&fit.p_n).is_zero());
        }
    }

    #[test]
    fn invertible_map() {
        let phi = m(&[&[2, 1], &[1, 1]]);
        let fit = fitting_decompose(&phi);
        assert_eq!(fit.q, 0);
        assert!(fit.p_r.is_identity());
        assert_eq!(fit.psi, phi.inverse().unwrap());
        check_invariants(&fit);
    }

    #[test]
    fn nilpotent_block() {
        let phi = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let fit = fitting_decompose(&phi);
        assert_eq!(fit.rank_r, 0);
        assert_eq!(fit.q, 3);
        check_invariants(&fit);
    }

    #[test]
    fn split_diagonal() {
        let phi = m(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]);
        let fit = fitting_decompose(&phi);
        assert_eq!(fit.p_r, phi);
        assert_eq!(fit.q, 1);
        check_invariants(&fit);
    }

    #[test]
    fn mixed_map() {
        let phi = m(&[&[1, 2, 0, 1], &[0, 0, 1, 0], &[0, 0, 0, 0], &[3, 1, 1, 2]]);
        check_invariants(&fitting_decompose(&phi));
    }
}
