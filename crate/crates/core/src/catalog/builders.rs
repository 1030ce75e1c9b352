//! Constructors for group algebras, Taft algebras and the `x² ∈ span{g^i}` family.

use super::groups::GroupTable;
use crate::hopf::{Hopf, SparseTensor2};
use crate::linalg::Matrix;
use crate::scalars::{Conductor, CycScalar, Field};
use crate::{Error, HopfData, Result};

/// Group algebra `KG`: grouplike basis, inversion antipode, conductor 1.
pub fn group_algebra(g: &GroupTable) -> HopfData {
    let c = Conductor::new(1);
    let n = g.order();
    let one = CycScalar::one(c);
    let mul: Vec<_> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, g.mul(a, b), one.clone()))
        .collect();
    let comul: Vec<_> = (0..n).map(|a| (a, a, a, one.clone())).collect();
    let s = Matrix::from_fn(c, n, n, |r, j| if r == g.inverse(j) { one.clone() } else { CycScalar::zero(c) });
    Hopf::from_parts(c, n, mul, comul, vec![one.clone(); n], Some(s)).expect("group algebra is well formed")
}

/// Extends `Δ` multiplicatively and `S` anti-multiplicatively from generators.
///
/// `words[b]` spells basis vector `b` as a product of generator ids; the empty
/// word is the unit.
fn extend_from_generators<F: Field>(
    algebra: &Hopf<F>,
    words: &[Vec<usize>],
    gen_comul: &[SparseTensor2<F>],
    gen_antipode: &[Vec<F>],
) -> (Vec<(usize, usize, usize, F)>, Matrix<F>) {
    let n = algebra.dim();
    let c = algebra.conductor();
    let to_sparse = |m: &Matrix<F>| -> SparseTensor2<F> {
        let mut out = Vec::new();
        for j in 0..n {
            for k in 0..n {
                if !m.get(j, k).is_zero() {
                    out.push((j, k, m.get(j, k).clone()));
                }
            }
        }
        out
    };
    let mut comul = Vec::new();
    let mut antipode = Matrix::<F>::zeros(c, n, n);
    for (b, word) in words.iter().enumerate() {
        let mut delta: SparseTensor2<F> = vec![(0, 0, F::one(c))];
        let mut s = algebra.basis_vector(0);
        for &gen in word {
            delta = to_sparse(&algebra.tensor_multiply(&delta, &gen_comul[gen]));
            s = algebra.multiply(&gen_antipode[gen], &s);
        }
        comul.extend(delta.into_iter().map(|(j, k, v)| (b, j, k, v)));
        for (r, v) in s.into_iter().enumerate() {
            antipode.set(r, b, v);
        }
    }
    (comul, antipode)
}

fn mul_only<F: Field>(c: Conductor, n: usize, mul: Vec<(usize, usize, usize, F)>) -> Hopf<F> {
    Hopf::from_parts(c, n, mul, Vec::new(), vec![F::zero(c); n], None).expect("product table is well formed")
}

/// Taft algebra of dimension `p²` over ℚ(ζ_p), `p ∈ {2, 3}`.
///
/// Basis `y^i x^j` at index `j·p + i`; `x^p = 0`, `y^p = 1`, `xy = q·yx` with
/// `q = ζ_p`; `Δy = y ⊗ y`, `Δx = x ⊗ y + 1 ⊗ x`; `S(x) = −x y⁻¹`, `S(y) = y⁻¹`.
pub fn taft(p: u32) -> Result<HopfData> {
    if !matches!(p, 2 | 3) {
        return Err(Error::Unsupported(format!("taft({p}): only p = 2 and p = 3 are supported")));
    }
    let c = Conductor::new(p);
    let pu = p as usize;
    let n = pu * pu;
    let idx = |i: usize, j: usize| j * pu + i;
    let mut mul = Vec::new();
    // (y^a x^b)(y^c x^d) = q^{bc} y^{a+c} x^{b+d}
    for a in 0..pu {
        for b in 0..pu {
            for cc in 0..pu {
                for d in 0..pu {
                    if b + d < pu {
                        let coeff = CycScalar::zeta_pow(c, (b * cc) as i64);
                        mul.push((idx(a, b), idx(cc, d), idx((a + cc) % pu, b + d), coeff));
                    }
                }
            }
        }
    }
    let algebra = mul_only(c, n, mul.clone());
    let (ygen, xgen) = (0, 1);
    let words: Vec<Vec<usize>> = (0..n)
        .map(|b| {
            let (i, j) = (b % pu, b / pu);
            std::iter::repeat(ygen).take(i).chain(std::iter::repeat(xgen).take(j)).collect()
        })
        .collect();
    let one = CycScalar::one(c);
    let y = idx(1, 0);
    let x = idx(0, 1);
    let gen_comul = vec![vec![(y, y, one.clone())], vec![(x, y, one.clone()), (0, x, one.clone())]];
    let mut s_y = vec![CycScalar::zero(c); n];
    s_y[idx(pu - 1, 0)] = one.clone();
    // −x y^{p−1} = −q^{p−1} y^{p−1} x
    let mut s_x = vec![CycScalar::zero(c); n];
    s_x[idx(pu - 1, 1)] = CycScalar::zeta_pow(c, (pu - 1) as i64).neg_ref();
    let (comul, antipode) = extend_from_generators(&algebra, &words, &gen_comul, &[s_y, s_x]);
    let counit = (0..n).map(|b| if b / pu == 0 { one.clone() } else { CycScalar::zero(c) }).collect();
    Hopf::from_parts(c, n, mul, comul, counit, Some(antipode))
}

/// The `2N`-dimensional algebra generated by a grouplike `g` of order `N` and
/// a `(g, 1)`-skew primitive `x` with `xg = −gx`; `x² = α(g² − 1)` for `N = 4`
/// and `x² = α(1 − g²)` for `N = 6`.
///
/// Basis `g^i` at index `i` and `g^i x` at index `N + i`. Generic over the
/// field so that `α` may be the family parameter `t`.
pub fn x2_family<F: Field>(big_n: usize, alpha: &F) -> Result<Hopf<F>> {
    let sign = match big_n {
        4 => 1,
        6 => -1,
        _ => return Err(Error::Unsupported(format!("x2_family({big_n}): N must be 4 or 6"))),
    };
    let c = alpha.conductor();
    let n = 2 * big_n;
    let idx = |i: usize, e: usize| e * big_n + i % big_n;
    let one = F::one(c);
    let signed = |negative: bool, v: F| if negative { v.neg_ref() } else { v };
    let beta = alpha.mul_ref(&F::from_int(c, sign));
    let mut mul = Vec::new();
    // (g^a x^e)(g^b x^f) = (−1)^{eb} g^{a+b} x^{e+f}
    for a in 0..big_n {
        for e in 0..2 {
            for b in 0..big_n {
                for f in 0..2 {
                    let negative = e * b % 2 == 1;
                    if e + f < 2 {
                        mul.push((idx(a, e), idx(b, f), idx(a + b, e + f), signed(negative, one.clone())));
                    } else if !alpha.is_zero() {
                        mul.push((idx(a, 1), idx(b, 1), idx(a + b + 2, 0), signed(negative, beta.clone())));
                        mul.push((idx(a, 1), idx(b, 1), idx(a + b, 0), signed(!negative, beta.clone())));
                    }
                }
            }
        }
    }
    let algebra = mul_only(c, n, mul.clone());
    let (ggen, xgen) = (0, 1);
    let words: Vec<Vec<usize>> = (0..n)
        .map(|b| {
            let (i, e) = (b % big_n, b / big_n);
            std::iter::repeat(ggen).take(i).chain(std::iter::repeat(xgen).take(e)).collect()
        })
        .collect();
    let g = idx(1, 0);
    let x = idx(0, 1);
    let gen_comul = vec![vec![(g, g, one.clone())], vec![(x, g, one.clone()), (0, x, one.clone())]];
    let mut s_g = vec![F::zero(c); n];
    s_g[idx(big_n - 1, 0)] = one.clone();
    // −x g^{N−1} = −(−1)^{N−1} g^{N−1} x = g^{N−1} x since N is even
    let mut s_x = vec![F::zero(c); n];
    s_x[idx(big_n - 1, 1)] = one.clone();
    let (comul, antipode) = extend_from_generators(&algebra, &words, &gen_comul, &[s_g, s_x]);
    let counit = (0..n).map(|b| if b < big_n { one.clone() } else { F::zero(c) }).collect();
    Hopf::from_parts(c, n, mul, comul, counit, Some(antipode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RatFunc;

    #[test]
    fn taft2_relations() {
        let t = taft(2).unwrap();
        let c = t.conductor();
        // basis 1, y, x, xy
        assert!(t.mul_basis(2, 2).is_empty());
        assert_eq!(t.mul_basis(2, 1), &[(3, CycScalar::from_int(c, -1))]);
        assert_eq!(t.mul_basis(1, 2), &[(3, CycScalar::one(c))]);
        assert!(t.verify().passed());
    }

    #[test]
    fn taft3_verifies() {
        let t = taft(3).unwrap();
        assert_eq!(t.dim(), 9);
        let r = t.verify();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(!t.is_commutative() && !t.is_cocommutative());
    }

    #[test]
    fn x2_family_verifies_for_several_alphas() {
        let c = Conductor::new(1);
        for big_n in [4, 6] {
            for a in [0, 1, -3] {
                let h = x2_family(big_n, &CycScalar::from_int(c, a)).unwrap();
                let r = h.verify();
                assert!(r.passed(), "N={big_n} a={a}: {:?}", r.failures);
            }
        }
    }

    #[test]
    fn x2_family_symbolic_in_alpha() {
        let c = Conductor::new(1);
        for big_n in [4, 6] {
            let h = x2_family(big_n, &RatFunc::t(c)).unwrap();
            let r = h.verify();
            assert!(r.passed(), "N={big_n}: {:?}", r.failures);
        }
    }

    #[test]
    fn x_squared_relation() {
        let c = Conductor::new(1);
        let h = x2_family(4, &CycScalar::one(c)).unwrap();
        let x = h.basis_vector(4);
        let mut expected = vec![CycScalar::zero(c); 8];
        expected[2] = CycScalar::one(c);
        expected[0] = CycScalar::from_int(c, -1);
        assert_eq!(h.multiply(&x, &x), expected);
        let h6 = x2_family(6, &CycScalar::one(c)).unwrap();
        let x6 = h6.basis_vector(6);
        let sq = h6.multiply(&x6, &x6);
        assert_eq!(sq[0], CycScalar::one(c));
        assert_eq!(sq[2], CycScalar::from_int(c, -1));
    }

    #[test]
    fn unsupported_parameters() {
        assert!(matches!(taft(5), Err(Error::Unsupported(_))));
        assert!(matches!(x2_family(5, &CycScalar::one(Conductor::new(1))), Err(Error::Unsupported(_))));
    }
}
