//! Exact linear algebra on graded subspaces.
//!
//! A subspace is stored per homogeneous component as a reduced row echelon
//! matrix whose columns follow the ambient basis indices of that component
//! in ascending order. RREF is canonical for a row space, so subspace
//! equality is matrix equality and all reports are reproducible.

use std::collections::BTreeMap;

use crate::algebra::{BiDegree, PoissonColorAlgebra, Vector};
use crate::scalar::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("vector is not homogeneous: it meets more than one component")]
    NonHomogeneous,
    #[error("subspaces live over different ambient components")]
    AmbientMismatch,
}

/// Row-reduce in place over the scalar field; returns pivot column indices.
/// Rows end up with leading 1s, cleared pivot columns, sorted by pivot, and
/// no zero rows.
pub fn rref(rows: &mut Vec<Vec<CycScalar>>) -> Vec<usize> {
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let lead = rows[rank][col].clone();
        let inv = lead.checked_inv().expect("pivot is nonzero");
        for c in rows[rank].iter_mut() {
            *c = &*c * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in row.iter_mut().zip(pivot_row.iter()) {
                let delta = &factor * p;
                *c = &*c - &delta;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Kernel of a matrix (rows are equations over the listed unknowns):
/// returns an RREF basis of { x : M x = 0 }.
pub fn kernel(matrix: &[Vec<CycScalar>], unknowns: usize, order: u64) -> Vec<Vec<CycScalar>> {
    let mut rows: Vec<Vec<CycScalar>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..unknowns {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![CycScalar::zero(order); unknowns];
        v[free] = CycScalar::one(order);
        for (r, &p) in pivots.iter().enumerate() {
            // x_p = -sum over free columns of row coefficient
            v[p] = rows[r][free].negate();
        }
        basis.push(v);
    }
    rref(&mut basis);
    basis
}

/// RREF basis of one homogeneous component of a subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBasis {
    /// Ambient basis indices labelling the columns, ascending.
    pub cols: Vec<usize>,
    /// RREF rows, no zero rows.
    pub rows: Vec<Vec<CycScalar>>,
}

impl ComponentBasis {
    fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|row| row.iter().position(|c| !c.is_zero()).expect("no zero rows"))
            .collect()
    }

    /// Reduce a coordinate vector against the RREF rows; the remainder is
    /// zero exactly when the vector lies in the component's row space.
    fn reduce(&self, mut v: Vec<CycScalar>) -> Vec<CycScalar> {
        for (row, &p) in self.rows.iter().zip(self.pivots().iter()) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (c, rc) in v.iter_mut().zip(row.iter()) {
                let delta = &factor * rc;
                *c = &*c - &delta;
            }
        }
        v
    }
}

/// A graded subspace of a specific algebra: one RREF block per component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedSubspace {
    components: BTreeMap<BiDegree, ComponentBasis>,
}

impl GradedSubspace {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn components(&self) -> &BTreeMap<BiDegree, ComponentBasis> {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.values().map(|c| c.rows.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    fn insert_reduced(&mut self, key: BiDegree, basis: ComponentBasis) {
        if !basis.rows.is_empty() {
            self.components.insert(key, basis);
        }
    }

    /// All spanning vectors (the RREF rows) as ambient vectors. Each is
    /// homogeneous by construction.
    pub fn spanning_vectors(&self) -> Vec<Vector> {
        let mut out = Vec::new();
        for comp in self.components.values() {
            for row in &comp.rows {
                let mut v = Vector::zero();
                for (c, coeff) in row.iter().enumerate() {
                    if !coeff.is_zero() {
                        v.add_term(comp.cols[c], coeff.clone());
                    }
                }
                out.push(v);
            }
        }
        out
    }

    /// Coordinates of an in-space vector relative to the RREF rows of its
    /// component (read off at the pivot columns). Panics if out of space;
    /// use `contains` first.
    pub fn coordinates(
        &self,
        algebra: &PoissonColorAlgebra,
        v: &Vector,
    ) -> Option<Vec<(BiDegree, Vec<CycScalar>)>> {
        let mut out = Vec::new();
        for (key, part) in split_homogeneous(algebra, v) {
            let comp = self.components.get(&key)?;
            let coords = to_coords(&comp.cols, &part)?;
            if !comp.reduce(coords.clone()).iter().all(CycScalar::is_zero) {
                return None;
            }
            let values = comp.pivots().iter().map(|&p| coords[p].clone()).collect();
            out.push((key, values));
        }
        Some(out)
    }
}

fn to_coords(cols: &[usize], v: &Vector) -> Option<Vec<CycScalar>> {
    let order = v.iter().next().map(|(_, c)| c.order());
    let order = match order {
        Some(o) => o,
        None => return Some(vec![CycScalar::zero(1); cols.len()]),
    };
    let mut out = vec![CycScalar::zero(order); cols.len()];
    for (i, c) in v.iter() {
        let pos = cols.binary_search(&i).ok()?;
        out[pos] = c.clone();
    }
    Some(out)
}

/// Split a vector into its homogeneous parts, keyed by component.
pub fn split_homogeneous(
    algebra: &PoissonColorAlgebra,
    v: &Vector,
) -> BTreeMap<BiDegree, Vector> {
    let mut parts: BTreeMap<BiDegree, Vector> = BTreeMap::new();
    for (i, c) in v.iter() {
        parts
            .entry(algebra.bidegree(i))
            .or_default()
            .add_term(i, c.clone());
    }
    parts
}

/// Span of homogeneous vectors, reduced per component. Rejects any input
/// vector meeting more than one component.
pub fn span_of(
    algebra: &PoissonColorAlgebra,
    vectors: &[Vector],
) -> Result<GradedSubspace, LinalgError> {
    let mut buckets: BTreeMap<BiDegree, Vec<Vector>> = BTreeMap::new();
    for v in vectors {
        if v.is_zero() {
            continue;
        }
        let parts = split_homogeneous(algebra, v);
        if parts.len() != 1 {
            return Err(LinalgError::NonHomogeneous);
        }
        let (key, part) = parts.into_iter().next().unwrap();
        buckets.entry(key).or_default().push(part);
    }
    let mut out = GradedSubspace::zero();
    for (key, vecs) in buckets {
        let cols = algebra.component_indices(&key).to_vec();
        let mut rows = Vec::with_capacity(vecs.len());
        for v in &vecs {
            rows.push(to_coords(&cols, v).expect("component indices cover the vector"));
        }
        rref(&mut rows);
        out.insert_reduced(key, ComponentBasis { cols, rows });
    }
    Ok(out)
}

/// Span of homogeneous vectors given as (already homogeneous) parts;
/// convenience for products of basis vectors.
pub fn span_of_unchecked(algebra: &PoissonColorAlgebra, vectors: &[Vector]) -> GradedSubspace {
    let mut homogeneous = Vec::new();
    for v in vectors {
        for (_, part) in split_homogeneous(algebra, v) {
            homogeneous.push(part);
        }
    }
    span_of(algebra, &homogeneous).expect("split parts are homogeneous")
}

/// True when every homogeneous part of `v` reduces to zero against the
/// subspace's component bases.
pub fn contains(algebra: &PoissonColorAlgebra, s: &GradedSubspace, v: &Vector) -> bool {
    for (key, part) in split_homogeneous(algebra, v) {
        let Some(comp) = s.components.get(&key) else {
            return false;
        };
        let Some(coords) = to_coords(&comp.cols, &part) else {
            return false;
        };
        if !comp.reduce(coords).iter().all(CycScalar::is_zero) {
            return false;
        }
    }
    true
}

/// Componentwise row union, re-reduced.
pub fn subspace_sum(
    s: &GradedSubspace,
    t: &GradedSubspace,
) -> Result<GradedSubspace, LinalgError> {
    let mut out = GradedSubspace::zero();
    let keys: std::collections::BTreeSet<&BiDegree> =
        s.components.keys().chain(t.components.keys()).collect();
    for key in keys {
        let a = s.components.get(key);
        let b = t.components.get(key);
        let cols = match (a, b) {
            (Some(x), Some(y)) => {
                if x.cols != y.cols {
                    return Err(LinalgError::AmbientMismatch);
                }
                x.cols.clone()
            }
            (Some(x), None) => x.cols.clone(),
            (None, Some(y)) => y.cols.clone(),
            (None, None) => unreachable!(),
        };
        let mut rows = Vec::new();
        if let Some(x) = a {
            rows.extend(x.rows.iter().cloned());
        }
        if let Some(y) = b {
            rows.extend(y.rows.iter().cloned());
        }
        rref(&mut rows);
        out.insert_reduced(key.clone(), ComponentBasis { cols, rows });
    }
    Ok(out)
}

/// Canonical equality: identical component maps.
pub fn subspace_eq(s: &GradedSubspace, t: &GradedSubspace) -> bool {
    s == t
}

/// Componentwise intersection via the Zassenhaus double-block reduction.
pub fn subspace_intersect(
    s: &GradedSubspace,
    t: &GradedSubspace,
    order: u64,
) -> Result<GradedSubspace, LinalgError> {
    let mut out = GradedSubspace::zero();
    for (key, a) in &s.components {
        let Some(b) = t.components.get(key) else {
            continue;
        };
        if a.cols != b.cols {
            return Err(LinalgError::AmbientMismatch);
        }
        let n = a.cols.len();
        let mut block: Vec<Vec<CycScalar>> = Vec::new();
        for row in &a.rows {
            let mut wide = row.clone();
            wide.extend(row.iter().cloned());
            block.push(wide);
        }
        for row in &b.rows {
            let mut wide = row.clone();
            wide.extend(std::iter::repeat_n(CycScalar::zero(order), n));
            block.push(wide);
        }
        rref(&mut block);
        let mut inter_rows: Vec<Vec<CycScalar>> = block
            .into_iter()
            .filter(|row| row[..n].iter().all(CycScalar::is_zero))
            .map(|row| row[n..].to_vec())
            .collect();
        rref(&mut inter_rows);
        out.insert_reduced(
            key.clone(),
            ComponentBasis {
                cols: a.cols.clone(),
                rows: inter_rows,
            },
        );
    }
    Ok(out)
}

/// The deterministic complement of `s`'s block inside one ambient component:
/// the span of the ambient basis vectors at the non-pivot columns.
pub fn complement_within(
    algebra: &PoissonColorAlgebra,
    s: &GradedSubspace,
    key: &BiDegree,
) -> GradedSubspace {
    let cols = algebra.component_indices(key).to_vec();
    let order = algebra.scalar_order();
    let pivot_cols: Vec<usize> = s
        .components
        .get(key)
        .map(|c| c.pivots())
        .unwrap_or_default();
    let mut rows = Vec::new();
    for c in 0..cols.len() {
        if pivot_cols.contains(&c) {
            continue;
        }
        let mut row = vec![CycScalar::zero(order); cols.len()];
        row[c] = CycScalar::one(order);
        rows.push(row);
    }
    let mut out = GradedSubspace::zero();
    out.insert_reduced(key.clone(), ComponentBasis { cols, rows });
    out
}

/// The whole algebra as a graded subspace.
pub fn full_space(algebra: &PoissonColorAlgebra) -> GradedSubspace {
    let order = algebra.scalar_order();
    let mut out = GradedSubspace::zero();
    for (key, indices) in algebra.components() {
        let n = indices.len();
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = vec![CycScalar::zero(order); n];
            row[r] = CycScalar::one(order);
            rows.push(row);
        }
        out.insert_reduced(
            key.clone(),
            ComponentBasis {
                cols: indices.clone(),
                rows,
            },
        );
    }
    out
}

/// The identity-degree slice of the algebra (all components whose second
/// grading degree is the unit), as a graded subspace.
pub fn identity_degree_space(algebra: &PoissonColorAlgebra) -> GradedSubspace {
    let order = algebra.scalar_order();
    let identity = algebra.lambda_spec().identity();
    let mut out = GradedSubspace::zero();
    for (key, indices) in algebra.components() {
        if key.ldeg != identity {
            continue;
        }
        let n = indices.len();
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let mut row = vec![CycScalar::zero(order); n];
            row[r] = CycScalar::one(order);
            rows.push(row);
        }
        out.insert_reduced(
            key.clone(),
            ComponentBasis {
                cols: indices.clone(),
                rows,
            },
        );
    }
    out
}

/// Which of the three linear constraint families an annihilator solve uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintFamilies {
    /// {x, e_j} = 0
    pub bracket: bool,
    /// x e_j = 0
    pub left_mul: bool,
    /// e_j x = 0
    pub right_mul: bool,
}

impl ConstraintFamilies {
    pub fn all() -> Self {
        ConstraintFamilies {
            bracket: true,
            left_mul: true,
            right_mul: true,
        }
    }
}

/// Solve for the subspace of x with Op(x, e_j) = 0 for every chosen family
/// and every constraint index j. The constraints preserve homogeneity, so
/// the system splits per component; each block is an exact null space.
pub fn annihilator_solve(
    algebra: &PoissonColorAlgebra,
    families: ConstraintFamilies,
    constraint_indices: &[usize],
    unknown_filter: impl Fn(&BiDegree) -> bool,
) -> GradedSubspace {
    let order = algebra.scalar_order();
    let mut out = GradedSubspace::zero();
    for (key, indices) in algebra.components() {
        if !unknown_filter(key) {
            continue;
        }
        let n = indices.len();
        // Equations: one row per (j, family, output basis index).
        let mut equations: Vec<Vec<CycScalar>> = Vec::new();
        let mut push_family = |apply: &dyn Fn(&Vector, &Vector) -> Vector| {
            for &j in constraint_indices {
                let ej = algebra.basis_vector(j);
                // Column i of the block: Op(e_{indices[i]}, e_j).
                let images: Vec<Vector> = indices
                    .iter()
                    .map(|&i| apply(&algebra.basis_vector(i), &ej))
                    .collect();
                let mut outputs: std::collections::BTreeSet<usize> =
                    std::collections::BTreeSet::new();
                for img in &images {
                    outputs.extend(img.support());
                }
                for &k in &outputs {
                    let row: Vec<CycScalar> = images
                        .iter()
                        .map(|img| {
                            img.coefficient(k)
                                .cloned()
                                .unwrap_or_else(|| CycScalar::zero(order))
                        })
                        .collect();
                    equations.push(row);
                }
            }
        };
        if families.bracket {
            push_family(&|x, y| algebra.bracket(x, y));
        }
        if families.left_mul {
            push_family(&|x, y| algebra.mul(x, y));
        }
        if families.right_mul {
            push_family(&|x, y| algebra.mul(y, x));
        }
        let mut rows = kernel(&equations, n, order);
        rref(&mut rows);
        out.insert_reduced(
            key.clone(),
            ComponentBasis {
                cols: indices.clone(),
                rows,
            },
        );
    }
    out
}
