//! Built-in example algebras and the block constructors.
//!
//! The corpus doubles as the test bed: small algebras whose supports,
//! ideals, centres and simplicity verdicts are known by hand computation.

use num_bigint::BigInt;

use crate::algebra::{
    AlgebraData, AlgebraFlags, AxiomReport, PoissonColorAlgebra, StructureTensor,
};
use crate::grading::{BiCharacter, GroupElement, GroupSpec};
use crate::scalar::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("structural error: {0}")]
    Structure(#[from] crate::algebra::AlgebraError),
    #[error("axiom failure in {name}: {failed:?}")]
    AxiomFailure {
        name: String,
        failed: Vec<crate::algebra::Axiom>,
        report: Box<AxiomReport>,
    },
    #[error("scalar orders differ: {0} vs {1}")]
    ScalarOrderMismatch(u64, u64),
}

fn ensure_valid(algebra: PoissonColorAlgebra) -> Result<PoissonColorAlgebra, BuildError> {
    let report = algebra.validate_all();
    if report.all_pass() {
        Ok(algebra)
    } else {
        Err(BuildError::AxiomFailure {
            name: algebra.name().to_string(),
            failed: report.failed_axioms(),
            report: Box::new(report),
        })
    }
}

/// Wrap Lie-color bracket data into an algebra with zero associative
/// product; the bracket axioms must hold.
pub fn construct_from_lie_color(mut data: AlgebraData) -> Result<PoissonColorAlgebra, BuildError> {
    data.product = StructureTensor::new();
    ensure_valid(PoissonColorAlgebra::new(data)?)
}

/// Wrap associative product data into an algebra with zero bracket; the
/// product axioms must hold.
pub fn construct_from_associative(
    mut data: AlgebraData,
) -> Result<PoissonColorAlgebra, BuildError> {
    data.bracket = StructureTensor::new();
    ensure_valid(PoissonColorAlgebra::new(data)?)
}

fn combine_specs(a: &GroupSpec, b: &GroupSpec) -> GroupSpec {
    let mut torsion = a.torsion_orders().to_vec();
    torsion.extend_from_slice(b.torsion_orders());
    GroupSpec::new(a.free_rank() + b.free_rank(), torsion).expect("orders already validated")
}

/// Embed an element of one factor into the product group; `left` picks the
/// factor. Free coordinates come first, then torsion, in factor order.
fn embed_element(
    a: &GroupSpec,
    b: &GroupSpec,
    combined: &GroupSpec,
    e: &GroupElement,
    left: bool,
) -> GroupElement {
    let mut coords = vec![BigInt::from(0); combined.generator_count()];
    let (spec, free_offset, torsion_offset) = if left {
        (a, 0, a.free_rank() + b.free_rank())
    } else {
        (
            b,
            a.free_rank(),
            a.free_rank() + b.free_rank() + a.torsion_orders().len(),
        )
    };
    for (i, c) in e.coords().iter().enumerate() {
        let target = if i < spec.free_rank() {
            free_offset + i
        } else {
            torsion_offset + (i - spec.free_rank())
        };
        coords[target] = c.clone();
    }
    combined.element(coords).expect("lengths match by construction")
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Block sum: product grading groups, block-diagonal exponent matrix and
/// tensors. The two supports embed disjointly, so cross products vanish and
/// the blocks are orthogonal by construction.
pub fn construct_direct_sum(
    a: &PoissonColorAlgebra,
    b: &PoissonColorAlgebra,
) -> Result<PoissonColorAlgebra, BuildError> {
    if a.scalar_order() != b.scalar_order() {
        return Err(BuildError::ScalarOrderMismatch(
            a.scalar_order(),
            b.scalar_order(),
        ));
    }
    let g_spec = combine_specs(a.g_spec(), b.g_spec());
    let lambda_spec = combine_specs(a.lambda_spec(), b.lambda_spec());

    // Common cyclotomic order for the combined bi-character.
    let na = a.bicharacter().cyclotomic_order();
    let nb = b.bicharacter().cyclotomic_order();
    let order = lcm(na, nb);
    let n = g_spec.generator_count();
    let mut matrix = vec![vec![BigInt::from(0); n]; n];
    let place = |spec: &GroupSpec, other: &GroupSpec, left: bool, i: usize| -> usize {
        // Same layout as embed_element, expressed on generator indices.
        let (free_offset, torsion_offset) = if left {
            (0, spec.free_rank() + other.free_rank())
        } else {
            (
                other.free_rank(),
                other.free_rank() + spec.free_rank() + other.torsion_orders().len(),
            )
        };
        if i < spec.free_rank() {
            free_offset + i
        } else {
            torsion_offset + (i - spec.free_rank())
        }
    };
    let scale_a = BigInt::from(order / na);
    for (i, row) in a.bicharacter().matrix().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            let ti = place(a.g_spec(), b.g_spec(), true, i);
            let tj = place(a.g_spec(), b.g_spec(), true, j);
            matrix[ti][tj] = c * &scale_a;
        }
    }
    let scale_b = BigInt::from(order / nb);
    for (i, row) in b.bicharacter().matrix().iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            let ti = place(b.g_spec(), a.g_spec(), false, i);
            let tj = place(b.g_spec(), a.g_spec(), false, j);
            matrix[ti][tj] = c * &scale_b;
        }
    }
    let bichar = BiCharacter::new(order, matrix);

    // Right-block names get a uniform prime suffix when anything collides.
    let mut suffix = String::new();
    loop {
        let collision = b.basis().iter().any(|rb| {
            let candidate = format!("{}{}", rb.name, suffix);
            a.basis().iter().any(|la| la.name == candidate)
        });
        if !collision {
            break;
        }
        suffix.push('\'');
    }

    let mut basis = Vec::with_capacity(a.dim() + b.dim());
    for d in a.basis() {
        basis.push((
            d.name.clone(),
            embed_element(a.g_spec(), b.g_spec(), &g_spec, &d.gdeg, true),
            embed_element(a.lambda_spec(), b.lambda_spec(), &lambda_spec, &d.ldeg, true),
        ));
    }
    for d in b.basis() {
        basis.push((
            format!("{}{}", d.name, suffix),
            embed_element(a.g_spec(), b.g_spec(), &g_spec, &d.gdeg, false),
            embed_element(a.lambda_spec(), b.lambda_spec(), &lambda_spec, &d.ldeg, false),
        ));
    }

    let offset = a.dim();
    let mut product = StructureTensor::new();
    let mut bracket = StructureTensor::new();
    for (i, j, k, c) in a.product_tensor().iter() {
        product.add_term(i, j, k, c.clone());
    }
    for (i, j, k, c) in a.bracket_tensor().iter() {
        bracket.add_term(i, j, k, c.clone());
    }
    for (i, j, k, c) in b.product_tensor().iter() {
        product.add_term(i + offset, j + offset, k + offset, c.clone());
    }
    for (i, j, k, c) in b.bracket_tensor().iter() {
        bracket.add_term(i + offset, j + offset, k + offset, c.clone());
    }

    let combined = PoissonColorAlgebra::new(AlgebraData {
        name: format!("{}+{}", a.name(), b.name()),
        scalar_order: a.scalar_order(),
        g_spec,
        lambda_spec,
        bichar,
        basis,
        product,
        bracket,
        flags: AlgebraFlags {
            check_commutative: a.flags().check_commutative && b.flags().check_commutative,
        },
    })?;
    ensure_valid(combined)
}

// ---------------------------------------------------------------------------
// Corpus members
// ---------------------------------------------------------------------------

/// sl2 with its root grading: basis e, f, h over Z, zero product,
/// classical bracket, trivial color structure.
pub fn sl2() -> PoissonColorAlgebra {
    let lambda = GroupSpec::free(1);
    let g = GroupSpec::trivial();
    let le = |c: i64| lambda.element_from_i64(&[c]).unwrap();
    let basis = vec![
        ("e".to_string(), g.identity(), le(1)),
        ("f".to_string(), g.identity(), le(-1)),
        ("h".to_string(), g.identity(), le(0)),
    ];
    let (e, f, h) = (0usize, 1usize, 2usize);
    let c = |v: i64| CycScalar::from_integer(1, v);
    let mut bracket = StructureTensor::new();
    bracket.add_term(h, e, e, c(2));
    bracket.add_term(e, h, e, c(-2));
    bracket.add_term(h, f, f, c(-2));
    bracket.add_term(f, h, f, c(2));
    bracket.add_term(e, f, h, c(1));
    bracket.add_term(f, e, h, c(-1));
    construct_from_lie_color(AlgebraData {
        name: "sl2".into(),
        scalar_order: 1,
        g_spec: g,
        lambda_spec: lambda,
        bichar: BiCharacter::trivial(0),
        basis,
        product: StructureTensor::new(),
        bracket,
        flags: AlgebraFlags::default(),
    })
    .expect("reference algebra is valid")
}

/// The group algebra of Z_m graded by itself: t_a t_b = t_{a+b}, zero
/// bracket.
pub fn group_algebra(name: &str, m: u64) -> PoissonColorAlgebra {
    let lambda = GroupSpec::cyclic(m);
    let g = GroupSpec::trivial();
    let basis = (0..m)
        .map(|a| {
            (
                format!("t{a}"),
                g.identity(),
                lambda.element_from_i64(&[a as i64]).unwrap(),
            )
        })
        .collect();
    let mut product = StructureTensor::new();
    for a in 0..m {
        for b in 0..m {
            product.add_term(
                a as usize,
                b as usize,
                ((a + b) % m) as usize,
                CycScalar::one(1),
            );
        }
    }
    construct_from_associative(AlgebraData {
        name: name.into(),
        scalar_order: 1,
        g_spec: g,
        lambda_spec: lambda,
        bichar: BiCharacter::trivial(0),
        basis,
        product,
        bracket: StructureTensor::new(),
        flags: AlgebraFlags {
            check_commutative: true,
        },
    })
    .expect("reference algebra is valid")
}

/// Two-dimensional superalgebra on basis {u, xi}: u is a unit for the
/// product, xi squares to zero, and the bracket satisfies {xi, xi} = u with
/// eps(xi, xi) = -1.
pub fn grassmann_clifford() -> PoissonColorAlgebra {
    let g = GroupSpec::cyclic(2);
    let lambda = GroupSpec::cyclic(2);
    let basis = vec![
        (
            "u".to_string(),
            g.element_from_i64(&[0]).unwrap(),
            lambda.element_from_i64(&[0]).unwrap(),
        ),
        (
            "xi".to_string(),
            g.element_from_i64(&[1]).unwrap(),
            lambda.element_from_i64(&[1]).unwrap(),
        ),
    ];
    let (u, xi) = (0usize, 1usize);
    let one = CycScalar::one(2);
    let mut product = StructureTensor::new();
    product.add_term(u, u, u, one.clone());
    product.add_term(u, xi, xi, one.clone());
    product.add_term(xi, u, xi, one.clone());
    let mut bracket = StructureTensor::new();
    bracket.add_term(xi, xi, u, one);
    let algebra = PoissonColorAlgebra::new(AlgebraData {
        name: "grassmann-clifford".into(),
        scalar_order: 2,
        g_spec: g,
        lambda_spec: lambda,
        bichar: BiCharacter::from_i64(2, &[vec![1]]),
        basis,
        product,
        bracket,
        flags: AlgebraFlags::default(),
    })
    .expect("reference algebra is well-formed");
    ensure_valid(algebra).expect("reference algebra is valid")
}

/// Twisted group algebra of Z_3 x Z_3 with commutation factor
/// eps(u, v) = zeta_3^(u1 v2 - u2 v1): x_u x_v = zeta_3^(u1 v2) x_{u+v}.
/// The product is eps-commutative, so the matching bracket is zero.
pub fn color_torus_z3() -> PoissonColorAlgebra {
    let g = GroupSpec::new(0, vec![3, 3]).unwrap();
    let lambda = GroupSpec::new(0, vec![3, 3]).unwrap();
    let mut basis = Vec::new();
    let mut coords = Vec::new();
    for a in 0..3i64 {
        for b in 0..3i64 {
            basis.push((
                format!("x{a}{b}"),
                g.element_from_i64(&[a, b]).unwrap(),
                lambda.element_from_i64(&[a, b]).unwrap(),
            ));
            coords.push((a, b));
        }
    }
    let index = |a: i64, b: i64| -> usize { ((a.rem_euclid(3)) * 3 + b.rem_euclid(3)) as usize };
    let mut product = StructureTensor::new();
    for (i, &(a1, b1)) in coords.iter().enumerate() {
        for (j, &(a2, b2)) in coords.iter().enumerate() {
            let twist = CycScalar::root_of_unity(3, a1 * b2);
            product.add_term(i, j, index(a1 + a2, b1 + b2), twist);
        }
    }
    let algebra = PoissonColorAlgebra::new(AlgebraData {
        name: "color-torus-z3".into(),
        scalar_order: 3,
        g_spec: g,
        lambda_spec: lambda,
        bichar: BiCharacter::from_i64(3, &[vec![0, 1], vec![-1, 0]]),
        basis,
        product,
        bracket: StructureTensor::new(),
        flags: AlgebraFlags {
            check_commutative: true,
        },
    })
    .expect("reference algebra is well-formed");
    ensure_valid(algebra).expect("reference algebra is valid")
}

/// One basis vector at the identity of both gradings, zero tensors.
pub fn trivial_line() -> PoissonColorAlgebra {
    let g = GroupSpec::trivial();
    let lambda = GroupSpec::trivial();
    PoissonColorAlgebra::new(AlgebraData {
        name: "trivial-line".into(),
        scalar_order: 1,
        g_spec: g.clone(),
        lambda_spec: lambda.clone(),
        bichar: BiCharacter::trivial(0),
        basis: vec![("c".to_string(), g.identity(), lambda.identity())],
        product: StructureTensor::new(),
        bracket: StructureTensor::new(),
        flags: AlgebraFlags::default(),
    })
    .expect("reference algebra is valid")
}

/// One-dimensional abelian algebra, both tensors zero, trivial gradings.
pub fn abelian_line() -> PoissonColorAlgebra {
    with_name(trivial_line(), "abelian-line")
}

fn with_name(a: PoissonColorAlgebra, name: &str) -> PoissonColorAlgebra {
    PoissonColorAlgebra::new(AlgebraData {
        name: name.into(),
        scalar_order: a.scalar_order(),
        g_spec: a.g_spec().clone(),
        lambda_spec: a.lambda_spec().clone(),
        bichar: a.bicharacter().clone(),
        basis: a
            .basis()
            .iter()
            .map(|b| (b.name.clone(), b.gdeg.clone(), b.ldeg.clone()))
            .collect(),
        product: a.product_tensor().clone(),
        bracket: a.bracket_tensor().clone(),
        flags: a.flags(),
    })
    .expect("renaming preserves validity")
}

/// Two orthogonal copies of the Z_3 group algebra.
pub fn two_block() -> PoissonColorAlgebra {
    let block = group_algebra("z3", 3);
    with_name(
        construct_direct_sum(&block, &block).expect("blocks share the scalar order"),
        "two-block",
    )
}

/// Three orthogonal blocks: Z_3, Z_3 and Z_5 group algebras.
pub fn three_block() -> PoissonColorAlgebra {
    let two = construct_direct_sum(&group_algebra("z3", 3), &group_algebra("z3", 3)).unwrap();
    with_name(
        construct_direct_sum(&two, &group_algebra("z5", 5)).expect("same scalar order"),
        "three-block",
    )
}

/// sl2 next to a group algebra: one free class and one torsion class.
pub fn sl2_plus_z3() -> PoissonColorAlgebra {
    with_name(
        construct_direct_sum(&sl2(), &group_algebra("z3", 3)).expect("same scalar order"),
        "sl2-plus-z3",
    )
}

/// Group algebra plus a central line in the identity bidegree: the
/// decomposition has a one-dimensional complement and the centre is the
/// line.
pub fn central_line() -> PoissonColorAlgebra {
    with_name(
        construct_direct_sum(&group_algebra("z3", 3), &trivial_line())
            .expect("same scalar order"),
        "central-line",
    )
}

/// Valid axioms but a one-sided support {z, z^2}: the refusal path for
/// everything requiring symmetry.
pub fn nonsymmetric() -> PoissonColorAlgebra {
    let lambda = GroupSpec::free(1);
    let g = GroupSpec::trivial();
    let basis = vec![
        (
            "a".to_string(),
            g.identity(),
            lambda.element_from_i64(&[1]).unwrap(),
        ),
        (
            "b".to_string(),
            g.identity(),
            lambda.element_from_i64(&[2]).unwrap(),
        ),
    ];
    let mut product = StructureTensor::new();
    product.add_term(0, 0, 1, CycScalar::one(1));
    construct_from_associative(AlgebraData {
        name: "nonsymmetric".into(),
        scalar_order: 1,
        g_spec: g,
        lambda_spec: lambda,
        bichar: BiCharacter::trivial(0),
        basis,
        product,
        bracket: StructureTensor::new(),
        flags: AlgebraFlags::default(),
    })
    .expect("reference algebra is valid")
}

/// Test fixture, not part of the corpus listing: a two-dimensional
/// component at a nonidentity degree, so maximal length fails and the
/// simplicity oracle falls back to sampling.
pub fn wide_component() -> PoissonColorAlgebra {
    let lambda = GroupSpec::cyclic(2);
    let g = GroupSpec::trivial();
    let basis = vec![
        (
            "u1".to_string(),
            g.identity(),
            lambda.element_from_i64(&[1]).unwrap(),
        ),
        (
            "u2".to_string(),
            g.identity(),
            lambda.element_from_i64(&[1]).unwrap(),
        ),
        (
            "v".to_string(),
            g.identity(),
            lambda.element_from_i64(&[0]).unwrap(),
        ),
    ];
    let mut bracket = StructureTensor::new();
    bracket.add_term(0, 1, 2, CycScalar::one(1));
    bracket.add_term(1, 0, 2, CycScalar::from_integer(1, -1));
    construct_from_lie_color(AlgebraData {
        name: "wide-component".into(),
        scalar_order: 1,
        g_spec: g,
        lambda_spec: lambda,
        bichar: BiCharacter::trivial(0),
        basis,
        product: StructureTensor::new(),
        bracket,
        flags: AlgebraFlags::default(),
    })
    .expect("fixture is valid")
}

/// Test fixture: the Z_3 group algebra with the t1*t1 entry removed, which
/// breaks multiplicativity at the (z, z) pair (and associativity with it).
pub fn gapped_group_algebra() -> PoissonColorAlgebra {
    let reference = group_algebra("z3", 3);
    let mut product = reference.product_tensor().clone();
    product.set(1, 1, vec![]);
    PoissonColorAlgebra::new(AlgebraData {
        name: "gapped-z3".into(),
        scalar_order: 1,
        g_spec: reference.g_spec().clone(),
        lambda_spec: reference.lambda_spec().clone(),
        bichar: reference.bicharacter().clone(),
        basis: reference
            .basis()
            .iter()
            .map(|b| (b.name.clone(), b.gdeg.clone(), b.ldeg.clone()))
            .collect(),
        product,
        bracket: StructureTensor::new(),
        flags: AlgebraFlags::default(),
    })
    .expect("fixture is well-formed")
}

/// The corpus listing. Every member passes the axiom checks; the
/// `nonsymmetric` member exists to exercise the refusal path for
/// symmetric-support preconditions.
pub fn builtin_corpus() -> Vec<PoissonColorAlgebra> {
    vec![
        sl2(),
        group_algebra("group-z3", 3),
        group_algebra("group-z5", 5),
        grassmann_clifford(),
        color_torus_z3(),
        two_block(),
        three_block(),
        sl2_plus_z3(),
        central_line(),
        abelian_line(),
        nonsymmetric(),
    ]
}

pub fn corpus_member(name: &str) -> Option<PoissonColorAlgebra> {
    builtin_corpus().into_iter().find(|a| a.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_enough_and_valid() {
        let corpus = builtin_corpus();
        assert!(corpus.len() >= 9);
        for a in &corpus {
            assert!(
                a.validate_all().all_pass(),
                "{} fails axioms",
                a.name()
            );
        }
    }

    #[test]
    fn corpus_names_are_unique() {
        let corpus = builtin_corpus();
        let mut names: Vec<&str> = corpus.iter().map(|a| a.name()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), corpus.len());
    }

    #[test]
    fn lie_color_constructor_rejects_mutations() {
        let good = sl2();
        let mut bracket = good.bracket_tensor().clone();
        let h = good.basis_by_name("h").unwrap().index;
        let f = good.basis_by_name("f").unwrap().index;
        bracket.set(h, f, vec![(f, CycScalar::from_integer(1, 2))]);
        let err = construct_from_lie_color(AlgebraData {
            name: "sl2-broken".into(),
            scalar_order: 1,
            g_spec: good.g_spec().clone(),
            lambda_spec: good.lambda_spec().clone(),
            bichar: good.bicharacter().clone(),
            basis: good
                .basis()
                .iter()
                .map(|b| (b.name.clone(), b.gdeg.clone(), b.ldeg.clone()))
                .collect(),
            product: StructureTensor::new(),
            bracket,
            flags: good.flags(),
        });
        assert!(matches!(err, Err(BuildError::AxiomFailure { .. })));
    }

    #[test]
    fn one_dimensional_abelian_bracket_is_accepted() {
        let g = GroupSpec::trivial();
        let built = construct_from_lie_color(AlgebraData {
            name: "abelian-1".into(),
            scalar_order: 1,
            g_spec: g.clone(),
            lambda_spec: g.clone(),
            bichar: BiCharacter::trivial(0),
            basis: vec![("v".into(), g.identity(), g.identity())],
            product: StructureTensor::new(),
            bracket: StructureTensor::new(),
            flags: AlgebraFlags::default(),
        })
        .unwrap();
        assert!(built.product_tensor().is_zero());
        assert!(built.validate_all().all_pass());
    }

    #[test]
    fn associative_constructor_rejects_mutations() {
        let good = group_algebra("z3", 3);
        let mut product = good.product_tensor().clone();
        product.set(1, 1, vec![(2, CycScalar::from_integer(1, 2))]);
        let err = construct_from_associative(AlgebraData {
            name: "z3-broken".into(),
            scalar_order: 1,
            g_spec: good.g_spec().clone(),
            lambda_spec: good.lambda_spec().clone(),
            bichar: good.bicharacter().clone(),
            basis: good
                .basis()
                .iter()
                .map(|b| (b.name.clone(), b.gdeg.clone(), b.ldeg.clone()))
                .collect(),
            product,
            bracket: StructureTensor::new(),
            flags: good.flags(),
        });
        assert!(matches!(err, Err(BuildError::AxiomFailure { .. })));
    }

    #[test]
    fn direct_sum_shapes() {
        let two = two_block();
        assert_eq!(two.dim(), 6);
        assert_eq!(two.lambda_spec().torsion_orders(), &[3, 3]);
        assert!(two.basis_by_name("t0").is_some());
        assert!(two.basis_by_name("t0'").is_some());

        let three = three_block();
        assert_eq!(three.dim(), 11);
        assert_eq!(three.lambda_spec().torsion_orders(), &[3, 3, 5]);

        let mixed = sl2_plus_z3();
        assert_eq!(mixed.dim(), 6);
        assert_eq!(mixed.lambda_spec().free_rank(), 1);
        assert_eq!(mixed.lambda_spec().torsion_orders(), &[3]);
    }

    #[test]
    fn direct_sum_rejects_order_mismatch() {
        let err = construct_direct_sum(&sl2(), &grassmann_clifford());
        assert!(matches!(err, Err(BuildError::ScalarOrderMismatch(1, 2))));
    }

    #[test]
    fn direct_sum_with_zero_block_keeps_support() {
        let a = group_algebra("z3", 3);
        let sum = construct_direct_sum(&a, &trivial_line()).unwrap();
        let s = crate::connections::compute_supports(&sum);
        assert_eq!(s.sigma_lambda.len(), 2);
    }

    #[test]
    fn cross_block_products_vanish() {
        let two = two_block();
        let t1 = two.basis_vector(two.basis_by_name("t1").unwrap().index);
        let t1b = two.basis_vector(two.basis_by_name("t1'").unwrap().index);
        assert!(two.mul(&t1, &t1b).is_zero());
        assert!(two.bracket(&t1, &t1b).is_zero());
    }
}
