//! Structure-constant representation of bialgebras and Hopf algebras.
//!
//! Indices are 0-based in the API and 1-based in files and reports. Basis
//! vector 0 is the unit by convention; raw structures (for example a dual
//! before unit normalization) may violate this until normalized.

mod antipode;
mod io;
mod transform;
mod verify;

use std::collections::BTreeMap;

use crate::linalg::Matrix;
use crate::scalars::{Conductor, CycScalar, Field};
use crate::{Error, Result};

pub use antipode::NoAntipode;
pub use io::{map_from_json, map_to_json, read_hopf, read_map, write_hopf, write_map};
pub use transform::double_dual_map;
pub use verify::{EquationFamily, Failure, VerificationReport};

/// Exact Hopf algebra data over ℚ(ζ_m).
pub type HopfData = Hopf<CycScalar>;

/// Square matrix over ℚ(ζ_m); column `j` is the image of `e_j`.
pub type LinearMap = Matrix<CycScalar>;

/// Free-form metadata carried along with a structure (name, tags, notes).
pub type Meta = serde_json::Map<String, serde_json::Value>;

/// An element of `V ⊗ V` as a sparse list of `(j, k, coefficient of e_j ⊗ e_k)`.
pub type SparseTensor2<F> = Vec<(usize, usize, F)>;

/// Bialgebra or Hopf algebra given by structure constants over a field `F`.
///
/// Tensors are stored sparsely: `μ(e_i ⊗ e_j)` and `Δ(e_i)` as sorted lists of
/// nonzero coordinates.
#[derive(Clone, Debug)]
pub struct Hopf<F> {
    cond: Conductor,
    dim: usize,
    mul: Vec<Vec<(usize, F)>>,
    comul: Vec<SparseTensor2<F>>,
    counit: Vec<F>,
    antipode: Option<Matrix<F>>,
    pub meta: Meta,
}

impl<F: Field> PartialEq for Hopf<F> {
    /// Entry-wise equality of all structure tensors; metadata is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.cond == other.cond
            && self.dim == other.dim
            && self.mul == other.mul
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl<F: Field> Hopf<F> {
    /// Builds a structure from coordinate lists; duplicate coordinates are summed.
    pub fn from_parts(
        cond: Conductor,
        dim: usize,
        mul: impl IntoIterator<Item = (usize, usize, usize, F)>,
        comul: impl IntoIterator<Item = (usize, usize, usize, F)>,
        counit: Vec<F>,
        antipode: Option<Matrix<F>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension("dimension must be positive".into()));
        }
        if counit.len() != dim {
            return Err(Error::Dimension(format!(
                "counit has {} entries, expected {dim}",
                counit.len()
            )));
        }
        let check = |i: usize, j: usize, k: usize, v: &F| -> Result<()> {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Index(format!(
                    "({}, {}, {}) outside 1..={dim}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if v.conductor() != cond {
                return Err(Error::ConductorMismatch(cond.m(), v.conductor().m()));
            }
            Ok(())
        };
        let mut mul_acc: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
        for (i, j, k, v) in mul {
            check(i, j, k, &v)?;
            accumulate(&mut mul_acc, (i, j, k), v);
        }
        let mut comul_acc: BTreeMap<(usize, usize, usize), F> = BTreeMap::new();
        for (i, j, k, v) in comul {
            check(i, j, k, &v)?;
            accumulate(&mut comul_acc, (i, j, k), v);
        }
        for v in &counit {
            if v.conductor() != cond {
                return Err(Error::ConductorMismatch(cond.m(), v.conductor().m()));
            }
        }
        if let Some(s) = &antipode {
            if s.rows() != dim || s.cols() != dim {
                return Err(Error::Dimension(format!(
                    "antipode is {}x{}, expected {dim}x{dim}",
                    s.rows(),
                    s.cols()
                )));
            }
            if s.conductor() != cond {
                return Err(Error::ConductorMismatch(cond.m(), s.conductor().m()));
            }
        }
        let mut mul_rows = vec![Vec::new(); dim * dim];
        for ((i, j, k), v) in mul_acc {
            if !v.is_zero() {
                mul_rows[i * dim + j].push((k, v));
            }
        }
        let mut comul_rows = vec![Vec::new(); dim];
        for ((i, j, k), v) in comul_acc {
            if !v.is_zero() {
                comul_rows[i].push((j, k, v));
            }
        }
        Ok(Hopf {
            cond,
            dim,
            mul: mul_rows,
            comul: comul_rows,
            counit,
            antipode,
            meta: Meta::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> Conductor {
        self.cond
    }

    /// Nonzero coordinates of `e_i · e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.mul[i * self.dim + j]
    }

    /// Nonzero coordinates of `Δ(e_i)`.
    pub fn comul_basis(&self, i: usize) -> &[(usize, usize, F)] {
        &self.comul[i]
    }

    pub fn mul_entry(&self, i: usize, j: usize, k: usize) -> F {
        let row = self.mul_basis(i, j);
        match row.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => row[pos].1.clone(),
            Err(_) => F::zero(self.cond),
        }
    }

    pub fn comul_entry(&self, i: usize, j: usize, k: usize) -> F {
        let row = self.comul_basis(i);
        match row.binary_search_by_key(&(j, k), |(a, b, _)| (*a, *b)) {
            Ok(pos) => row[pos].2.clone(),
            Err(_) => F::zero(self.cond),
        }
    }

    /// All nonzero `C_{ij}^k` as `(i, j, k, value)`, sorted.
    pub fn mul_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> {
        let n = self.dim;
        self.mul
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |(k, v)| (ij / n, ij % n, *k, v)))
    }

    /// All nonzero `D_i^{jk}` as `(i, j, k, value)`, sorted.
    pub fn comul_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> {
        self.comul
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, k, v)| (i, *j, *k, v)))
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&Matrix<F>> {
        self.antipode.as_ref()
    }

    pub fn with_antipode(mut self, s: Option<Matrix<F>>) -> Self {
        self.antipode = s;
        self
    }

    pub fn without_antipode(&self) -> Self {
        self.clone().with_antipode(None)
    }

    pub fn with_meta(mut self, meta: Meta) -> Self {
        self.meta = meta;
        self
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(self.cond); self.dim];
        v[i] = F::one(self.cond);
        v
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(self.cond); self.dim];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.mul_ref(y);
                for (k, c) in self.mul_basis(i, j) {
                    out[*k].add_mul_assign(&xy, c);
                }
            }
        }
        out
    }

    /// `Δ(a)` as a dense `n × n` matrix of coordinates on `e_j ⊗ e_k`.
    pub fn comultiply(&self, a: &[F]) -> Matrix<F> {
        let mut out = Matrix::<F>::zeros(self.cond, self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, d) in self.comul_basis(i) {
                out.get_mut(*j, *k).add_mul_assign(x, d);
            }
        }
        out
    }

    /// Product of two elements of `H ⊗ H` in the tensor-product algebra.
    pub fn tensor_multiply(&self, x: &[(usize, usize, F)], y: &[(usize, usize, F)]) -> Matrix<F> {
        let mut out = Matrix::<F>::zeros(self.cond, self.dim, self.dim);
        for (r, t, a) in x {
            for (p, q, b) in y {
                let ab = a.mul_ref(b);
                for (k, c1) in self.mul_basis(*r, *p) {
                    let abc = ab.mul_ref(c1);
                    for (s, c2) in self.mul_basis(*t, *q) {
                        out.get_mut(*k, *s).add_mul_assign(&abc, c2);
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mul_matrix(&self, a: &[F]) -> Matrix<F> {
        let mut out = Matrix::<F>::zeros(self.cond, self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.mul_basis(i, j) {
                    out.get_mut(*k, j).add_mul_assign(x, c);
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim).all(|i| {
            self.comul_basis(i)
                .iter()
                .all(|(j, k, v)| self.comul_entry(i, *k, *j) == *v)
        })
    }

    /// The linear map `μ ∘ Δ : H → H`.
    pub fn mu_delta_matrix(&self) -> Matrix<F> {
        let mut out = Matrix::<F>::zeros(self.cond, self.dim, self.dim);
        for i in 0..self.dim {
            for (j, k, d) in self.comul_basis(i) {
                for (l, c) in self.mul_basis(*j, *k) {
                    out.get_mut(*l, i).add_mul_assign(d, c);
                }
            }
        }
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_scalars<G: Field>(&self, f: impl Fn(&F) -> G) -> Hopf<G> {
        Hopf {
            cond: self.cond,
            dim: self.dim,
            mul: self
                .mul
                .iter()
                .map(|row| row.iter().map(|(k, v)| (*k, f(v))).filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
            comul: self
                .comul
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|(j, k, v)| (*j, *k, f(v)))
                        .filter(|(_, _, v)| !v.is_zero())
                        .collect()
                })
                .collect(),
            counit: self.counit.iter().map(&f).collect(),
            antipode: self.antipode.as_ref().map(|s| s.map(&f)),
            meta: self.meta.clone(),
        }
    }

    /// Like [`Hopf::map_scalars`] but fallible; the first error wins.
    pub fn try_map_scalars<G: Field, E>(&self, f: impl Fn(&F) -> std::result::Result<G, E>) -> std::result::Result<Hopf<G>, E> {
        let mul = self
            .mul_entries()
            .map(|(i, j, k, v)| f(v).map(|g| (i, j, k, g)))
            .collect::<std::result::Result<Vec<_>, E>>()?;
        let comul = self
            .comul_entries()
            .map(|(i, j, k, v)| f(v).map(|g| (i, j, k, g)))
            .collect::<std::result::Result<Vec<_>, E>>()?;
        let counit = self.counit.iter().map(&f).collect::<std::result::Result<Vec<_>, E>>()?;
        let antipode = match &self.antipode {
            Some(s) => {
                let mut vals = Vec::with_capacity(self.dim * self.dim);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        vals.push(f(s.get(i, j))?);
                    }
                }
                let mut it = vals.into_iter();
                Some(Matrix::from_fn(self.cond, self.dim, self.dim, |_, _| it.next().unwrap()))
            }
            None => None,
        };
        Ok(Hopf::from_parts(self.cond, self.dim, mul, comul, counit, antipode)
            .expect("mapped structure keeps its shape")
            .with_meta(self.meta.clone()))
    }

    pub fn meta_name(&self) -> Option<&str> {
        self.meta.get("name").and_then(|v| v.as_str())
    }
}

fn accumulate<F: Field>(acc: &mut BTreeMap<(usize, usize, usize), F>, key: (usize, usize, usize), v: F) {
    match acc.get_mut(&key) {
        Some(old) => {
            *old = old.add_ref(&v);
        }
        None => {
            acc.insert(key, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> HopfData {
        let c = Conductor::new(1);
        let one = CycScalar::one(c);
        Hopf::from_parts(
            c,
            2,
            vec![
                (0, 0, 0, one.clone()),
                (0, 1, 1, one.clone()),
                (1, 0, 1, one.clone()),
                (1, 1, 0, one.clone()),
            ],
            vec![(0, 0, 0, one.clone()), (1, 1, 1, one.clone())],
            vec![one.clone(), one.clone()],
            Some(Matrix::identity(c, 2)),
        )
        .unwrap()
    }

    #[test]
    fn accessors() {
        let h = z2();
        assert_eq!(h.mul_entry(1, 1, 0), CycScalar::one(h.conductor()));
        assert!(h.mul_entry(1, 1, 1).is_zero());
        assert_eq!(h.mul_entries().count(), 4);
        assert!(h.is_commutative() && h.is_cocommutative());
        let g = h.basis_vector(1);
        assert_eq!(h.multiply(&g, &g), h.basis_vector(0));
        assert_eq!(h.mu_delta_matrix().rank(), 1);
    }

    #[test]
    fn rejects_bad_indices() {
        let c = Conductor::new(1);
        let r = Hopf::from_parts(
            c,
            1,
            vec![(0, 0, 1, CycScalar::one(c))],
            vec![],
            vec![CycScalar::one(c)],
            None,
        );
        assert!(matches!(r, Err(Error::Index(_))));
    }
}
