//! Ideals attached to connection classes and the resulting decomposition.
//!
//! For a class C of the support the attached ideal is the direct sum of a
//! degree-one part (the span of all products and brackets pairing a degree
//! in C with its inverse) and the full slice of components whose degree lies
//! in C. The decomposition report assembles every class ideal, a
//! deterministic complement of their degree-one parts, and verifies the
//! subalgebra/ideal/orthogonality claims computationally rather than
//! assuming them.

use std::collections::BTreeSet;

use crate::algebra::{PoissonColorAlgebra, Vector};
use crate::connections::{
    check_symmetric_support, compute_supports, connection_classes, ConnectionError,
};
use crate::grading::GroupElement;
use crate::linalg::{
    annihilator_solve, complement_within, contains, full_space, identity_degree_space, span_of,
    span_of_unchecked, subspace_eq, subspace_intersect, subspace_sum, ConstraintFamilies,
    GradedSubspace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionError {
    #[error(transparent)]
    Connection(#[from] ConnectionError),
    #[error("class is not closed under inverses")]
    ClassNotInverseClosed,
}

/// The ideal attached to one connection class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDescriptor {
    /// Smallest class element, used as the display representative.
    pub class_rep: GroupElement,
    pub class: BTreeSet<GroupElement>,
    /// Span of products and brackets pairing each class degree with its
    /// inverse; lands in the identity-degree, zero-color component.
    pub one_part: GradedSubspace,
    /// Sum of all components whose second-grading degree lies in the class.
    pub vee_part: GradedSubspace,
    /// one_part + vee_part; the two live in disjoint degrees, so dimensions
    /// add.
    pub total: GradedSubspace,
}

/// Everything `decompose` establishes about an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub u_complement: GradedSubspace,
    pub ideals: Vec<IdealDescriptor>,
    /// orthogonality[i][j]: all products and brackets between ideal i and
    /// ideal j vanish (diagonal entries are vacuously true).
    pub orthogonality: Vec<Vec<bool>>,
    /// U + sum of ideals spans the whole algebra.
    pub covers: bool,
    /// Dimensions add up and pairwise ideal intersections are zero.
    pub is_direct: bool,
    pub center_dim: usize,
    /// The identity-degree slice equals the sum of the ideals' one-parts.
    pub p1_condition: bool,
}

/// Span of all products e_i e_j and brackets {e_i, e_j} with the second
/// degree of e_i in the class and the degree of e_j its inverse.
pub fn ideal_one_part(
    algebra: &PoissonColorAlgebra,
    class: &BTreeSet<GroupElement>,
) -> Result<GradedSubspace, DecompositionError> {
    let spec = algebra.lambda_spec();
    for l in class {
        if !class.contains(&spec.inverse(l)) {
            return Err(DecompositionError::ClassNotInverseClosed);
        }
    }
    let mut generators: Vec<Vector> = Vec::new();
    for bi in algebra.basis() {
        if !class.contains(&bi.ldeg) {
            continue;
        }
        let inv = spec.inverse(&bi.ldeg);
        for bj in algebra.basis() {
            if bj.ldeg != inv {
                continue;
            }
            let x = algebra.basis_vector(bi.index);
            let y = algebra.basis_vector(bj.index);
            generators.push(algebra.mul(&x, &y));
            generators.push(algebra.bracket(&x, &y));
        }
    }
    Ok(span_of_unchecked(algebra, &generators))
}

/// Assemble the class ideal: one-part plus the class slice.
pub fn build_ideal(
    algebra: &PoissonColorAlgebra,
    class: &BTreeSet<GroupElement>,
) -> Result<IdealDescriptor, DecompositionError> {
    let one_part = ideal_one_part(algebra, class)?;
    let slice: Vec<Vector> = algebra
        .basis()
        .iter()
        .filter(|b| class.contains(&b.ldeg))
        .map(|b| algebra.basis_vector(b.index))
        .collect();
    let vee_part = span_of(algebra, &slice).expect("basis vectors are homogeneous");
    let total = subspace_sum(&one_part, &vee_part).expect("same ambient");
    debug_assert_eq!(total.dim(), one_part.dim() + vee_part.dim());
    Ok(IdealDescriptor {
        class_rep: crate::connections::class_representative(algebra.lambda_spec(), class),
        class: class.clone(),
        one_part,
        vee_part,
        total,
    })
}

/// Closure under the algebra's own operations: for all spanning u, v of S,
/// both uv and {u, v} stay inside S.
pub fn is_subalgebra(algebra: &PoissonColorAlgebra, s: &GradedSubspace) -> bool {
    let span = s.spanning_vectors();
    for u in &span {
        for v in &span {
            if !contains(algebra, s, &algebra.mul(u, v)) {
                return false;
            }
            if !contains(algebra, s, &algebra.bracket(u, v)) {
                return false;
            }
        }
    }
    true
}

/// Absorption from both sides and under the bracket, checked against every
/// basis element.
pub fn is_graded_ideal(algebra: &PoissonColorAlgebra, s: &GradedSubspace) -> bool {
    let span = s.spanning_vectors();
    for u in &span {
        for j in 0..algebra.dim() {
            let ej = algebra.basis_vector(j);
            if !contains(algebra, s, &algebra.bracket(u, &ej)) {
                return false;
            }
            if !contains(algebra, s, &algebra.mul(u, &ej)) {
                return false;
            }
            if !contains(algebra, s, &algebra.mul(&ej, u)) {
                return false;
            }
        }
    }
    true
}

/// All products and brackets between two ideals vanish exactly.
pub fn orthogonality_check(
    algebra: &PoissonColorAlgebra,
    i: &IdealDescriptor,
    j: &IdealDescriptor,
) -> bool {
    let left = i.total.spanning_vectors();
    let right = j.total.spanning_vectors();
    for u in &left {
        for v in &right {
            if !algebra.mul(u, v).is_zero()
                || !algebra.mul(v, u).is_zero()
                || !algebra.bracket(u, v).is_zero()
                || !algebra.bracket(v, u).is_zero()
            {
                return false;
            }
        }
    }
    true
}

/// The centre: all x with {x, P} = xP = Px = 0, solved componentwise.
pub fn compute_center(algebra: &PoissonColorAlgebra) -> GradedSubspace {
    let all: Vec<usize> = (0..algebra.dim()).collect();
    annihilator_solve(algebra, ConstraintFamilies::all(), &all, |_| true)
}

/// Does the sum of the one-parts over all classes exhaust the
/// identity-degree slice?
pub fn p1_condition_check(
    algebra: &PoissonColorAlgebra,
) -> Result<bool, DecompositionError> {
    let supports = compute_supports(algebra);
    let classes = connection_classes(&supports)?;
    let mut sum = GradedSubspace::zero();
    for class in &classes.classes {
        let part = ideal_one_part(algebra, class)?;
        sum = subspace_sum(&sum, &part).expect("same ambient");
    }
    Ok(subspace_eq(&sum, &identity_degree_space(algebra)))
}

/// Build all class ideals, the deterministic complement U of their one-parts
/// inside the identity-degree slice, and verify the decomposition claims.
pub fn decompose(
    algebra: &PoissonColorAlgebra,
) -> Result<DecompositionReport, DecompositionError> {
    let supports = compute_supports(algebra);
    if !check_symmetric_support(&supports) {
        // Reuse the precise error from the connection layer.
        connection_classes(&supports)?;
        unreachable!("non-symmetric support must fail above");
    }
    let classes = connection_classes(&supports)?;
    let mut ideals = Vec::with_capacity(classes.classes.len());
    for class in &classes.classes {
        ideals.push(build_ideal(algebra, class)?);
    }

    let mut sum_one = GradedSubspace::zero();
    for ideal in &ideals {
        sum_one = subspace_sum(&sum_one, &ideal.one_part).expect("same ambient");
    }

    // U: componentwise pivot complement of the one-part sum inside every
    // identity-degree component of the ambient algebra.
    let identity = algebra.lambda_spec().identity();
    let mut u_complement = GradedSubspace::zero();
    for key in algebra.components().keys() {
        if key.ldeg != identity {
            continue;
        }
        let comp = complement_within(algebra, &sum_one, key);
        u_complement = subspace_sum(&u_complement, &comp).expect("same ambient");
    }

    let p1_condition = subspace_eq(&sum_one, &identity_degree_space(algebra));

    let mut total_sum = u_complement.clone();
    for ideal in &ideals {
        total_sum = subspace_sum(&total_sum, &ideal.total).expect("same ambient");
    }
    let covers = subspace_eq(&total_sum, &full_space(algebra));

    let dims: usize = ideals.iter().map(|i| i.total.dim()).sum();
    let mut pairwise_disjoint = true;
    let n = ideals.len();
    let mut orthogonality = vec![vec![true; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let inter = subspace_intersect(&ideals[i].total, &ideals[j].total, algebra.scalar_order())
                .expect("same ambient");
            if !inter.is_zero() {
                pairwise_disjoint = false;
            }
            let orth = orthogonality_check(algebra, &ideals[i], &ideals[j]);
            orthogonality[i][j] = orth;
            orthogonality[j][i] = orth;
        }
    }
    let is_direct =
        covers && pairwise_disjoint && u_complement.dim() + dims == algebra.dim();

    let center_dim = compute_center(algebra).dim();

    Ok(DecompositionReport {
        u_complement,
        ideals,
        orthogonality,
        covers,
        is_direct,
        center_dim,
        p1_condition,
    })
}
