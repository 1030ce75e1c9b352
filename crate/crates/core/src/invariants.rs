//! Basis-independent invariants, orbit dimensions and isomorphism checking.
//!
//! Counts over the algebraic closure are obtained from ranks of trace forms,
//! so nothing here needs factorization or root extraction.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::hopf::Hopf;
use crate::linalg::{Echelon, Matrix};
use crate::scalars::{CycScalar, Field};
use crate::{Error, HopfData, Result};

/// A finite-dimensional (not necessarily unital) algebra by its product table.
#[derive(Clone, Debug)]
pub struct Algebra<F> {
    cond: crate::Conductor,
    dim: usize,
    table: Vec<Vec<(usize, F)>>,
}

impl<F: Field> Algebra<F> {
    /// The algebra underlying `H`.
    pub fn of_mul(h: &Hopf<F>) -> Self {
        let n = h.dim();
        let table = (0..n * n).map(|ij| h.mul_basis(ij / n, ij % n).to_vec()).collect();
        Algebra { cond: h.conductor(), dim: n, table }
    }

    /// The algebra underlying the dual `H*`: `e*_j e*_k = Σ_i D_i^{jk} e*_i`.
    pub fn of_dual(h: &Hopf<F>) -> Self {
        let n = h.dim();
        let mut table = vec![Vec::new(); n * n];
        for (i, j, k, v) in h.comul_entries() {
            table[j * n + k].push((i, v.clone()));
        }
        for row in &mut table {
            row.sort_by_key(|(k, _)| *k);
        }
        Algebra { cond: h.conductor(), dim: n, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn basis_product(&self, a: usize, b: usize) -> &[(usize, F)] {
        &self.table[a * self.dim + b]
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(self.cond); self.dim];
        for (a, u) in x.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (b, v) in y.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let uv = u.mul_ref(v);
                for (k, c) in self.basis_product(a, b) {
                    out[k.to_owned()].add_mul_assign(&uv, c);
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(self.cond); self.dim];
        v[i] = F::one(self.cond);
        v
    }

    /// The two-sided ideal generated by all commutators, as an echelon basis.
    fn commutator_ideal(&self) -> Echelon<F> {
        let n = self.dim;
        let mut ideal = Echelon::new(self.cond, n);
        let mut queue = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let ab = self.multiply(&self.basis(a), &self.basis(b));
                let ba = self.multiply(&self.basis(b), &self.basis(a));
                let comm: Vec<F> = ab.iter().zip(&ba).map(|(x, y)| x.sub_ref(y)).collect();
                if ideal.insert_dense(&comm) {
                    queue.push(comm);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for a in 0..n {
                let e = self.basis(a);
                for w in [self.multiply(&e, &v), self.multiply(&v, &e)] {
                    if ideal.insert_dense(&w) {
                        queue.push(w);
                    }
                }
            }
        }
        ideal
    }

    /// Dimension of the commutative quotient modulo its nilradical, which is
    /// the number of algebra homomorphisms to the algebraic closure.
    pub fn character_count(&self) -> usize {
        let ideal = self.commutator_ideal();
        let free: Vec<usize> = (0..self.dim).filter(|&j| !ideal.is_pivot(j)).collect();
        let d = free.len();
        if d == 0 {
            return 0;
        }
        let project = |v: Vec<F>| -> Vec<F> {
            let r = ideal.reduced(v);
            free.iter().map(|&j| r[j].clone()).collect()
        };
        // Quotient products among the quotient basis.
        let products: Vec<Vec<F>> = (0..d * d)
            .map(|ab| project(self.multiply(&self.basis(free[ab / d]), &self.basis(free[ab % d]))))
            .collect();
        let traces: Vec<F> = (0..d)
            .map(|c| {
                let mut acc = F::zero(self.cond);
                for b in 0..d {
                    acc.add_assign_ref(&products[c * d + b][b]);
                }
                acc
            })
            .collect();
        trace_gram_rank(self.cond, d, &products, &traces)
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vec<F>> {
        let n = self.dim;
        let mut ech = Echelon::new(self.cond, n);
        for i in 0..n {
            let mut rows = vec![vec![F::zero(self.cond); n]; n];
            for a in 0..n {
                for (k, v) in self.basis_product(a, i) {
                    rows[*k][a].add_assign_ref(v);
                }
                for (k, v) in self.basis_product(i, a) {
                    rows[*k][a] = rows[*k][a].sub_ref(v);
                }
            }
            for row in &rows {
                ech.insert_dense(row);
            }
        }
        ech.nullspace()
    }

    /// Number of primitive idempotents of the center over the closure.
    pub fn block_count(&self) -> usize {
        let z = self.center();
        let r = z.len();
        let basis = Matrix::from_fn(self.cond, self.dim, r, |i, j| z[j][i].clone());
        let products: Vec<Vec<F>> = (0..r * r)
            .map(|ab| {
                let w = self.multiply(&z[ab / r], &z[ab % r]);
                basis.solve(&w).expect("center is closed under multiplication")
            })
            .collect();
        let traces: Vec<F> = (0..r)
            .map(|c| {
                let mut acc = F::zero(self.cond);
                for b in 0..r {
                    acc.add_assign_ref(&products[c * r + b][b]);
                }
                acc
            })
            .collect();
        trace_gram_rank(self.cond, r, &products, &traces)
    }
}

/// Rank of `(a, b) ↦ tr(L_{ab})` given structure constants and basis traces.
fn trace_gram_rank<F: Field>(c: crate::Conductor, d: usize, products: &[Vec<F>], traces: &[F]) -> usize {
    let gram = Matrix::from_fn(c, d, d, |a, b| {
        let mut acc = F::zero(c);
        for (k, t) in traces.iter().enumerate() {
            acc.add_mul_assign(&products[a * d + b][k], t);
        }
        acc
    });
    gram.rank()
}

/// Number of grouplike elements of `H` over the algebraic closure.
pub fn grouplike_count<F: Field>(h: &Hopf<F>) -> usize {
    Algebra::of_dual(h).character_count()
}

/// Number of grouplike elements of the dual, i.e. characters of `H`.
pub fn dual_grouplike_count<F: Field>(h: &Hopf<F>) -> usize {
    Algebra::of_mul(h).character_count()
}

/// Number of blocks of `H` as an algebra.
pub fn block_count<F: Field>(h: &Hopf<F>) -> usize {
    Algebra::of_mul(h).block_count()
}

pub fn dual_block_count<F: Field>(h: &Hopf<F>) -> usize {
    Algebra::of_dual(h).block_count()
}

/// Basis of the biderivations `L` with `L(1) = 0` and `ε L = 0`, flattened
/// with `L_{ab}` (coefficient of `e_a` in `L(e_b)`) at position `a·n + b`.
pub fn biderivations<F: Field>(h: &Hopf<F>) -> Vec<Vec<F>> {
    let n = h.dim();
    let c = h.conductor();
    let nn = n * n;
    let mut ech = Echelon::new(c, nn);
    let one = F::one(c);
    for k in 0..n {
        ech.insert_sparse(&[(k * n, one.clone())]);
    }
    for b in 0..n {
        let row: Vec<(usize, F)> = (0..n).map(|a| (a * n + b, h.counit()[a].clone())).collect();
        ech.insert_sparse(&row);
    }
    'outer: for i in 0..n {
        for j in 0..n {
            let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); n];
            for (l, v) in h.mul_basis(i, j) {
                for (k, row) in rows.iter_mut().enumerate() {
                    row.push((k * n + l, v.clone()));
                }
            }
            for a in 0..n {
                for (k, v) in h.mul_basis(a, j) {
                    rows[*k].push((a * n + i, v.neg_ref()));
                }
                for (k, v) in h.mul_basis(i, a) {
                    rows[*k].push((a * n + j, v.neg_ref()));
                }
            }
            for row in &rows {
                ech.insert_sparse(row);
            }
            if ech.is_full() {
                break 'outer;
            }
        }
        let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); nn];
        for a in 0..n {
            for (j, k, v) in h.comul_basis(a) {
                rows[j * n + k].push((a * n + i, v.clone()));
            }
        }
        for (b, k, v) in h.comul_basis(i) {
            for j in 0..n {
                rows[j * n + k].push((j * n + b, v.neg_ref()));
            }
        }
        for (j, b, v) in h.comul_basis(i) {
            for k in 0..n {
                rows[j * n + k].push((k * n + b, v.neg_ref()));
            }
        }
        for row in &rows {
            ech.insert_sparse(row);
        }
    }
    ech.nullspace()
}

/// `n²` minus the dimension of the Lie algebra of Hopf automorphisms.
pub fn orbit_dimension<F: Field>(h: &Hopf<F>) -> usize {
    h.dim() * h.dim() - biderivations(h).len()
}

/// Ranks of the Hopf power maps `x ↦ x_(1)⋯x_(k)` for `k = 3..=dim`.
pub fn hopf_power_ranks<F: Field>(h: &Hopf<F>) -> Vec<usize> {
    let n = h.dim();
    let c = h.conductor();
    let mut ranks = Vec::new();
    let mut prev = h.mu_delta_matrix();
    for _ in 3..=n {
        let cols: Vec<Vec<F>> = (0..n).map(|l| prev.column(l)).collect();
        let mut next = Matrix::<F>::zeros(c, n, n);
        for i in 0..n {
            for (j, l, d) in h.comul_basis(i) {
                let prod = h.multiply(&h.basis_vector(*j), &cols[*l]);
                for (t, v) in prod.iter().enumerate() {
                    next.get_mut(t, i).add_mul_assign(d, v);
                }
            }
        }
        ranks.push(next.rank());
        prev = next;
    }
    ranks
}

/// Least `k ≥ 1` with `S^k = id`, searched up to `2·dim²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeOrder {
    Finite(u64),
    ExceedsBound,
}

impl Serialize for AntipodeOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AntipodeOrder::Finite(k) => s.serialize_u64(*k),
            AntipodeOrder::ExceedsBound => s.serialize_str("exceeds bound"),
        }
    }
}

pub fn antipode_order<F: Field>(s: &Matrix<F>) -> AntipodeOrder {
    let n = s.rows() as u64;
    let bound = 2 * n * n;
    let mut p = s.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return AntipodeOrder::Finite(k);
        }
        p = p.mul(s);
    }
    AntipodeOrder::ExceedsBound
}

fn as_text<S: Serializer>(v: &CycScalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Invariants of a Hopf algebra under change of basis. Unequal fingerprints
/// prove non-isomorphism; equal fingerprints prove nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub commutative: bool,
    pub cocommutative: bool,
    pub grouplike_count: usize,
    pub dual_grouplike_count: usize,
    pub block_count: usize,
    pub dual_block_count: usize,
    pub antipode_order: AntipodeOrder,
    #[serde(serialize_with = "as_text")]
    pub trace_s: CycScalar,
    pub rank_mu_delta: usize,
    #[serde(serialize_with = "as_text")]
    pub trace_mu_delta: CycScalar,
    pub biderivation_dim: usize,
    /// Ranks of the k-th Hopf power maps for `k = 3..=dim`.
    pub hopf_power_ranks: Vec<usize>,
}

impl Fingerprint {
    /// Names of the fields on which two fingerprints differ.
    pub fn differences(&self, other: &Fingerprint) -> Vec<&'static str> {
        let mut out = Vec::new();
        macro_rules! cmp {
            ($($f:ident),*) => {$(
                if self.$f != other.$f {
                    out.push(stringify!($f));
                }
            )*};
        }
        cmp!(
            dim,
            commutative,
            cocommutative,
            grouplike_count,
            dual_grouplike_count,
            block_count,
            dual_block_count,
            antipode_order,
            trace_s,
            rank_mu_delta,
            trace_mu_delta,
            biderivation_dim,
            hopf_power_ranks
        );
        out
    }
}

/// Computes every fingerprint field; solves for the antipode if none is stored.
pub fn fingerprint(h: &HopfData) -> Result<Fingerprint> {
    let s = match h.antipode() {
        Some(s) => s.clone(),
        None => h.compute_antipode().map_err(|_| Error::MissingAntipode)?,
    };
    let md = h.mu_delta_matrix();
    let tasks: [&(dyn Fn() -> usize + Sync); 6] = [
        &|| grouplike_count(h),
        &|| dual_grouplike_count(h),
        &|| block_count(h),
        &|| dual_block_count(h),
        &|| biderivations(h).len(),
        &|| md.rank(),
    ];
    let counts: Vec<usize> = tasks.par_iter().map(|f| f()).collect();
    Ok(Fingerprint {
        dim: h.dim(),
        commutative: h.is_commutative(),
        cocommutative: h.is_cocommutative(),
        grouplike_count: counts[0],
        dual_grouplike_count: counts[1],
        block_count: counts[2],
        dual_block_count: counts[3],
        antipode_order: antipode_order(&s),
        trace_s: s.trace(),
        rank_mu_delta: counts[5],
        trace_mu_delta: md.trace(),
        biderivation_dim: counts[4],
        hopf_power_ranks: hopf_power_ranks(h),
    })
}

/// Whether `f` is an isomorphism from `h2` onto `h1`, i.e. `f · h1 = h2`
/// entry-wise (antipodes compared only when both are present).
pub fn check_isomorphism<F: Field>(f: &Matrix<F>, h1: &Hopf<F>, h2: &Hopf<F>) -> Result<bool> {
    if h1.dim() != h2.dim() {
        return Ok(false);
    }
    if h1.conductor() != h2.conductor() {
        return Err(Error::ConductorMismatch(h1.conductor().m(), h2.conductor().m()));
    }
    let t = h1.transport(f)?;
    let same_core = t.clone().with_antipode(None) == h2.clone().with_antipode(None);
    let same_s = match (t.antipode(), h2.antipode()) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    Ok(same_core && same_s)
}
