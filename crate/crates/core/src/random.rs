//! Seeded generators for randomized suites: basis changes and singular maps.
//!
//! Everything is driven by a [`ChaCha8Rng`], so a suite is reproducible from
//! its seed alone. Generate inputs sequentially, then evaluate in parallel.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::scalars::{Conductor, CycScalar};
use crate::LinearMap;

/// Seed used when `HOPFFORGE_SEED` is unset.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// `HOPFFORGE_SEED` if set and numeric, otherwise [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("HOPFFORGE_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small integer, or a small integer times a root of unity when `c > 1`.
pub fn small_scalar(rng: &mut impl Rng, c: Conductor, bound: i64) -> CycScalar {
    let v = CycScalar::from_int(c, rng.gen_range(-bound..=bound));
    if c.m() > 1 && rng.gen_bool(0.5) {
        &v * &CycScalar::zeta_pow(c, rng.gen_range(0..c.m() as i64))
    } else {
        v
    }
}

fn nonzero_scalar(rng: &mut impl Rng, c: Conductor, bound: i64) -> CycScalar {
    loop {
        let v = small_scalar(rng, c, bound);
        if !v.is_zero() {
            return v;
        }
    }
}

/// A sparse invertible map fixing the first basis vector: a permutation of
/// the other vectors, a nonzero diagonal scaling and a few elementary
/// row operations that never touch the first column.
pub fn random_transport(rng: &mut impl Rng, c: Conductor, n: usize) -> LinearMap {
    let mut perm: Vec<usize> = (1..n).collect();
    perm.shuffle(rng);
    let mut m = Matrix::<CycScalar>::zeros(c, n, n);
    m.set(0, 0, CycScalar::one(c));
    for (from, &to) in perm.iter().enumerate() {
        m.set(to, from + 1, nonzero_scalar(rng, c, 2));
    }
    if n > 1 {
        for _ in 0..rng.gen_range(1..=n) {
            let src = rng.gen_range(0..n);
            let dst = rng.gen_range(1..n);
            if src == dst {
                continue;
            }
            // column dst += a · column src keeps the first column fixed
            let a = small_scalar(rng, c, 2);
            for i in 0..n {
                let v = m.get(i, dst) + &(m.get(i, src) * &a);
                m.set(i, dst, v);
            }
        }
    }
    m
}

/// Shapes of singular (or special) maps used to probe degenerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiKind {
    /// `A·B` with `A` of shape `n×r`, `B` of shape `r×n`, `r < n`.
    LowRank,
    /// Diagonal 0/1 matrix.
    CoordinateProjector,
    /// Diagonal with some zeros and a sprinkling of strictly upper entries.
    TriangularSingular,
    Zero,
}

pub const PHI_KINDS: [PhiKind; 4] = [
    PhiKind::LowRank,
    PhiKind::CoordinateProjector,
    PhiKind::TriangularSingular,
    PhiKind::Zero,
];

pub fn random_phi(rng: &mut impl Rng, c: Conductor, n: usize, kind: PhiKind) -> LinearMap {
    let zero = || CycScalar::zero(c);
    match kind {
        PhiKind::LowRank => {
            let r = rng.gen_range(0..n);
            let a = Matrix::from_fn(c, n, r, |_, _| small_scalar(rng, c, 2));
            let b = Matrix::from_fn(c, r, n, |_, _| small_scalar(rng, c, 2));
            a.mul(&b)
        }
        PhiKind::CoordinateProjector => {
            let keep: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.6)).collect();
            Matrix::from_fn(c, n, n, |i, j| if i == j && keep[i] { CycScalar::one(c) } else { zero() })
        }
        PhiKind::TriangularSingular => {
            let mut m = Matrix::<CycScalar>::zeros(c, n, n);
            let dropped = rng.gen_range(0..n);
            for i in 0..n {
                if i != dropped && rng.gen_bool(0.7) {
                    m.set(i, i, nonzero_scalar(rng, c, 2));
                }
                for j in i + 1..n {
                    if rng.gen_bool(0.15) {
                        m.set(i, j, small_scalar(rng, c, 2));
                    }
                }
            }
            m
        }
        PhiKind::Zero => Matrix::<CycScalar>::zeros(c, n, n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transports_are_invertible_and_fix_the_unit() {
        let c = Conductor::new(4);
        let mut rng = rng_from_seed(7);
        for n in 1..7 {
            let f = random_transport(&mut rng, c, n);
            assert!(f.is_invertible());
            assert_eq!(f.column(0), Matrix::<CycScalar>::identity(c, n).column(0));
        }
    }

    #[test]
    fn phi_maps_are_singular_except_possibly_projectors() {
        let c = Conductor::new(1);
        let mut rng = rng_from_seed(11);
        for kind in [PhiKind::LowRank, PhiKind::TriangularSingular, PhiKind::Zero] {
            for _ in 0..20 {
                assert!(!random_phi(&mut rng, c, 5, kind).is_invertible());
            }
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let c = Conductor::new(3);
        let a = random_transport(&mut rng_from_seed(3), c, 6);
        let b = random_transport(&mut rng_from_seed(3), c, 6);
        assert_eq!(a, b);
    }
}
