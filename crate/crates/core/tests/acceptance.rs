//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The mutation harness of criterion 1 judges validity with its own naive
//! axiom evaluator (dense tables, explicit index loops) so the library's
//! checkers are measured against an independent oracle, not against
//! themselves.
//!
//! The naive oracle is written with explicit index loops on purpose.
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use pck_core::algebra::{AlgebraData, PoissonColorAlgebra, StructureTensor};
use pck_core::connections::{
    check_symmetric_support, compute_supports, connection_classes, is_connected,
};
use pck_core::corpus;
use pck_core::decomposition::{
    build_ideal, decompose, is_graded_ideal, is_subalgebra, orthogonality_check,
};
use pck_core::format::{parse_algebra, serialize_algebra};
use pck_core::grading::{BiCharacter, GroupSpec};
use pck_core::linalg::{full_space, subspace_eq, subspace_sum};
use pck_core::report::{analyze, emit_report, AnalysisOptions, ReportFormat};
use pck_core::scalar::CycScalar;
use pck_core::simplicity::{
    largest_ideal_in_identity_part, simple_decomposition, simplicity_verdict,
};

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("acceptance {number:02} {name}: PASS"),
        Err(e) => {
            println!("acceptance {number:02} {name}: FAIL - {e}");
            panic!("acceptance criterion {number} ({name}) failed: {e}");
        }
    }
}

fn symmetric_corpus() -> Vec<PoissonColorAlgebra> {
    corpus::builtin_corpus()
        .into_iter()
        .filter(|a| check_symmetric_support(&compute_supports(a)))
        .collect()
}

// ---------------------------------------------------------------------------
// Naive axiom oracle for the mutation harness.
// ---------------------------------------------------------------------------

struct Dense {
    dim: usize,
    order: u64,
    prod: Vec<Vec<Vec<CycScalar>>>,
    brk: Vec<Vec<Vec<CycScalar>>>,
    eps: Vec<Vec<CycScalar>>,
    check_commutative: bool,
}

fn densify(a: &PoissonColorAlgebra) -> Dense {
    let n = a.dim();
    let zero = CycScalar::zero(a.scalar_order());
    let mut prod = vec![vec![vec![zero.clone(); n]; n]; n];
    let mut brk = prod.clone();
    for (i, j, k, c) in a.product_tensor().iter() {
        prod[i][j][k] = c.clone();
    }
    for (i, j, k, c) in a.bracket_tensor().iter() {
        brk[i][j][k] = c.clone();
    }
    let mut eps = vec![vec![zero; n]; n];
    for i in 0..n {
        for j in 0..n {
            eps[i][j] = a.epsilon(i, j);
        }
    }
    Dense {
        dim: n,
        order: a.scalar_order(),
        prod,
        brk,
        eps,
        check_commutative: a.flags().check_commutative,
    }
}

impl Dense {
    fn contract(&self, t1: &[Vec<Vec<CycScalar>>], t2: &[Vec<Vec<CycScalar>>], i: usize, j: usize, k: usize, l: usize) -> CycScalar {
        // sum over m of t1[i][j][m] * t2[m][k][l]
        let mut acc = CycScalar::zero(self.order);
        for m in 0..self.dim {
            let term = t1[i][j][m].checked_mul(&t2[m][k][l]).unwrap();
            acc = acc.checked_add(&term).unwrap();
        }
        acc
    }

    fn contract_right(&self, t1: &[Vec<Vec<CycScalar>>], t2: &[Vec<Vec<CycScalar>>], i: usize, j: usize, k: usize, l: usize) -> CycScalar {
        // sum over m of t1[j][k][m] * t2[i][m][l]
        let mut acc = CycScalar::zero(self.order);
        for m in 0..self.dim {
            let term = t1[j][k][m].checked_mul(&t2[i][m][l]).unwrap();
            acc = acc.checked_add(&term).unwrap();
        }
        acc
    }

    fn valid(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                // skew symmetry: brk[i][j][l] = -eps(i,j) brk[j][i][l]
                for l in 0..n {
                    let rhs = self.eps[i][j]
                        .checked_mul(&self.brk[j][i][l])
                        .unwrap()
                        .negate();
                    if self.brk[i][j][l] != rhs {
                        return false;
                    }
                    if self.check_commutative {
                        let rhs = self.eps[i][j].checked_mul(&self.prod[j][i][l]).unwrap();
                        if self.prod[i][j][l] != rhs {
                            return false;
                        }
                    }
                }
                for k in 0..n {
                    for l in 0..n {
                        // associativity
                        let left = self.contract(&self.prod, &self.prod, i, j, k, l);
                        let right = self.contract_right(&self.prod, &self.prod, i, j, k, l);
                        if left != right {
                            return false;
                        }
                        // Jacobi: {i,{j,k}} = {{i,j},k} + eps(i,j){j,{i,k}}
                        let lhs = self.contract_right(&self.brk, &self.brk, i, j, k, l);
                        let r1 = self.contract(&self.brk, &self.brk, i, j, k, l);
                        let mut r2 = CycScalar::zero(self.order);
                        for m in 0..n {
                            let term = self.brk[i][k][m].checked_mul(&self.brk[j][m][l]).unwrap();
                            r2 = r2.checked_add(&term).unwrap();
                        }
                        let rhs = r1
                            .checked_add(&self.eps[i][j].checked_mul(&r2).unwrap())
                            .unwrap();
                        if lhs != rhs {
                            return false;
                        }
                        // Leibniz: {ij, k} = i{j,k} + eps(j,k){i,k}j
                        let lhs = self.contract(&self.prod, &self.brk, i, j, k, l);
                        let r1 = self.contract_right(&self.brk, &self.prod, i, j, k, l);
                        let mut r2 = CycScalar::zero(self.order);
                        for m in 0..n {
                            let term = self.brk[i][k][m].checked_mul(&self.prod[m][j][l]).unwrap();
                            r2 = r2.checked_add(&term).unwrap();
                        }
                        let rhs = r1
                            .checked_add(&self.eps[j][k].checked_mul(&r2).unwrap())
                            .unwrap();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

fn rebuild_with(
    a: &PoissonColorAlgebra,
    product: StructureTensor,
    bracket: StructureTensor,
) -> PoissonColorAlgebra {
    PoissonColorAlgebra::new(AlgebraData {
        name: format!("{}-mutant", a.name()),
        scalar_order: a.scalar_order(),
        g_spec: a.g_spec().clone(),
        lambda_spec: a.lambda_spec().clone(),
        bichar: a.bicharacter().clone(),
        basis: a
            .basis()
            .iter()
            .map(|b| (b.name.clone(), b.gdeg.clone(), b.ldeg.clone()))
            .collect(),
        product,
        bracket,
        flags: a.flags(),
    })
    .expect("mutants stay structurally well-formed")
}

#[test]
fn criterion_01_axiom_validator_and_mutations() {
    criterion(1, "axiom validator and mutation harness", || {
        let corpus_list = corpus::builtin_corpus();
        let positive: Vec<_> = corpus_list.iter().collect();
        check!(positive.len() >= 8, "corpus too small: {}", positive.len());
        for a in &positive {
            check!(
                a.validate_all().all_pass(),
                "{} fails its axiom checks",
                a.name()
            );
        }

        let targets = [
            corpus::sl2(),
            corpus::group_algebra("group-z3", 3),
            corpus::grassmann_clifford(),
        ];
        let mut invalid_tried = 0usize;
        let mut detected = 0usize;
        let mut valid_mutants = 0usize;
        for base in &targets {
            let order = base.scalar_order();
            let one = CycScalar::one(order);
            let entries: Vec<(bool, usize, usize, usize, CycScalar)> = base
                .product_tensor()
                .iter()
                .map(|(i, j, k, c)| (false, i, j, k, c.clone()))
                .chain(
                    base.bracket_tensor()
                        .iter()
                        .map(|(i, j, k, c)| (true, i, j, k, c.clone())),
                )
                .collect();
            for (in_bracket, i, j, k, c) in entries {
                let mutations = [
                    c.negate(),
                    c.checked_add(&c).unwrap(),
                    c.checked_add(&one).unwrap(),
                ];
                for replacement in mutations {
                    let mut product = base.product_tensor().clone();
                    let mut bracket = base.bracket_tensor().clone();
                    let tensor = if in_bracket { &mut bracket } else { &mut product };
                    let mut terms: Vec<(usize, CycScalar)> = tensor
                        .get(i, j)
                        .iter()
                        .filter(|(kk, _)| *kk != k)
                        .cloned()
                        .collect();
                    if !replacement.is_zero() {
                        terms.push((k, replacement.clone()));
                    }
                    tensor.set(i, j, terms);
                    let mutant = rebuild_with(base, product, bracket);

                    let oracle_valid = densify(&mutant).valid();
                    let report = mutant.validate_all();
                    check!(
                        report.all_pass() == oracle_valid,
                        "{}: library verdict {} disagrees with the naive oracle {} at entry ({i},{j},{k})",
                        base.name(),
                        report.all_pass(),
                        oracle_valid
                    );
                    if oracle_valid {
                        valid_mutants += 1;
                        continue;
                    }
                    invalid_tried += 1;
                    let cited = report.checks.iter().any(|ch| {
                        matches!(ch.status, pck_core::algebra::CheckStatus::Fail)
                            && !ch.counterexamples.is_empty()
                            && ch.counterexamples.iter().all(|ce| !ce.basis_names.is_empty())
                    });
                    if cited {
                        detected += 1;
                    } else {
                        return Err(format!(
                            "{}: mutation at ({i},{j},{k}) not detected with a cited tuple",
                            base.name()
                        ));
                    }
                }
            }
        }
        check!(
            invalid_tried >= 50,
            "only {invalid_tried} invalid mutations tried, need at least 50"
        );
        check!(
            detected == invalid_tried,
            "{detected}/{invalid_tried} detections"
        );
        // Uniform rescaling of a one-entry bracket is still a valid algebra;
        // the harness must not flag those.
        check!(
            valid_mutants > 0,
            "expected some mutations to remain valid (bracket rescalings)"
        );
        Ok(())
    });
}

#[test]
fn criterion_02_connection_relation_is_an_equivalence() {
    criterion(2, "connection relation equivalence and closure", || {
        for a in symmetric_corpus() {
            let s = compute_supports(&a);
            let classes = connection_classes(&s).map_err(|e| e.to_string())?;
            let elements: Vec<_> = s.sigma_lambda.iter().cloned().collect();
            let spec = a.lambda_spec();
            let connected = |x: &pck_core::GroupElement, y: &pck_core::GroupElement| {
                is_connected(&s, x, y).expect("inside support").is_some()
            };
            for x in &elements {
                // reflexive, with a verifiable witness
                let chain = is_connected(&s, x, x)
                    .map_err(|e| e.to_string())?
                    .ok_or_else(|| format!("{}: not reflexive", a.name()))?;
                check!(
                    chain.verify(&s, x, x),
                    "{}: reflexive witness fails its invariants",
                    a.name()
                );
                for y in &elements {
                    let xy = connected(x, y);
                    check!(
                        xy == connected(y, x),
                        "{}: relation not symmetric",
                        a.name()
                    );
                    let same_class = classes.class_of(x) == classes.class_of(y);
                    check!(
                        xy == same_class,
                        "{}: partition disagrees with pairwise queries",
                        a.name()
                    );
                    if let Some(chain) = is_connected(&s, x, y).map_err(|e| e.to_string())? {
                        check!(
                            chain.verify(&s, x, y),
                            "{}: witness chain violates its invariants",
                            a.name()
                        );
                    }
                    for z in &elements {
                        if xy && connected(y, z) {
                            check!(
                                connected(x, z),
                                "{}: relation not transitive",
                                a.name()
                            );
                        }
                    }
                }
            }
            // closure property: mu in a class, eta in the support with
            // mu*eta in the support force eta and mu*eta into the class
            for class in &classes.classes {
                for mu in class {
                    for eta in &elements {
                        let prod = spec.compose(mu, eta);
                        if s.sigma_lambda.contains(&prod) {
                            check!(
                                class.contains(eta) && class.contains(&prod),
                                "{}: closure property fails",
                                a.name()
                            );
                        }
                    }
                }
            }
            // classes are inverse-closed and partition the support
            let mut seen = BTreeSet::new();
            for class in &classes.classes {
                for e in class {
                    check!(
                        class.contains(&spec.inverse(e)),
                        "{}: class not inverse-closed",
                        a.name()
                    );
                    check!(seen.insert(e.clone()), "{}: classes overlap", a.name());
                }
            }
            check!(
                seen == s.sigma_lambda,
                "{}: classes do not cover the support",
                a.name()
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_03_class_ideals_are_subalgebras_and_ideals() {
    criterion(3, "class ideals are graded subalgebras and ideals", || {
        for a in symmetric_corpus() {
            let s = compute_supports(&a);
            let classes = connection_classes(&s).map_err(|e| e.to_string())?;
            for class in &classes.classes {
                let ideal = build_ideal(&a, class).map_err(|e| e.to_string())?;
                check!(
                    is_subalgebra(&a, &ideal.total),
                    "{}: ideal of {:?} is not a subalgebra",
                    a.name(),
                    ideal.class_rep
                );
                check!(
                    is_graded_ideal(&a, &ideal.total),
                    "{}: ideal of {:?} does not absorb the algebra",
                    a.name(),
                    ideal.class_rep
                );
                // the one-part lives at the identity degree of the second
                // grading and color degree zero
                let identity = a.lambda_spec().identity();
                let zero = a.g_spec().identity();
                for key in ideal.one_part.components().keys() {
                    check!(
                        key.ldeg == identity && key.gdeg == zero,
                        "{}: one-part leaks outside the identity component",
                        a.name()
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_04_distinct_class_ideals_are_orthogonal() {
    criterion(4, "orthogonality of distinct class ideals", || {
        for a in symmetric_corpus() {
            let s = compute_supports(&a);
            let classes = connection_classes(&s).map_err(|e| e.to_string())?;
            let ideals: Vec<_> = classes
                .classes
                .iter()
                .map(|c| build_ideal(&a, c).expect("classes are inverse-closed"))
                .collect();
            for i in 0..ideals.len() {
                for j in 0..ideals.len() {
                    if i == j {
                        continue;
                    }
                    check!(
                        orthogonality_check(&a, &ideals[i], &ideals[j]),
                        "{}: ideals {i} and {j} are not orthogonal",
                        a.name()
                    );
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_decomposition_covers_the_algebra() {
    criterion(5, "decomposition U + sum of ideals equals the algebra", || {
        for a in symmetric_corpus() {
            let report = decompose(&a).map_err(|e| e.to_string())?;
            // independent re-assembly of the claimed decomposition
            let mut sum = report.u_complement.clone();
            for ideal in &report.ideals {
                sum = subspace_sum(&sum, &ideal.total).expect("same ambient");
            }
            check!(
                subspace_eq(&sum, &full_space(&a)),
                "{}: U + sum of ideals is not the whole algebra",
                a.name()
            );
            check!(report.covers, "{}: report does not claim coverage", a.name());
        }
        let central = corpus::central_line();
        let report = decompose(&central).map_err(|e| e.to_string())?;
        check!(
            report.u_complement.dim() == 1,
            "central-line complement has dimension {}, expected 1",
            report.u_complement.dim()
        );
        Ok(())
    });
}

#[test]
fn criterion_06_direct_sum_when_center_vanishes() {
    criterion(6, "direct sum under zero centre and generated identity part", || {
        let mut qualifying = Vec::new();
        for a in symmetric_corpus() {
            let report = decompose(&a).map_err(|e| e.to_string())?;
            if report.center_dim == 0 && report.p1_condition {
                check!(
                    report.is_direct,
                    "{}: expected a direct sum",
                    a.name()
                );
                let total: usize = report.ideals.iter().map(|i| i.total.dim()).sum();
                check!(
                    total == a.dim(),
                    "{}: ideal dimensions sum to {total}, expected {}",
                    a.name(),
                    a.dim()
                );
                qualifying.push(a.name().to_string());
            }
        }
        for expected in [
            "sl2",
            "group-z3",
            "group-z5",
            "grassmann-clifford",
            "color-torus-z3",
            "two-block",
            "three-block",
            "sl2-plus-z3",
        ] {
            check!(
                qualifying.iter().any(|n| n == expected),
                "{expected} should qualify for the direct-sum criterion, qualifying: {qualifying:?}"
            );
        }
        Ok(())
    });
}

#[test]
fn criterion_07_criterion_oracle_cross_validation() {
    criterion(7, "two-route simplicity cross-validation", || {
        let expectations = [
            ("sl2", true),
            ("group-z3", true),
            ("group-z5", true),
            ("grassmann-clifford", true),
            ("color-torus-z3", true),
            ("two-block", false),
            ("three-block", false),
        ];
        let mut applicable_seen = 0usize;
        for a in corpus::builtin_corpus() {
            let verdict = simplicity_verdict(&a, 0);
            if !verdict.applicable {
                continue;
            }
            applicable_seen += 1;
            let criterion_side = verdict
                .criterion
                .as_ref()
                .ok_or_else(|| format!("{}: applicable but criterion missing", a.name()))?;
            check!(
                verdict.oracle.exact,
                "{}: oracle not exact under maximal length",
                a.name()
            );
            check!(
                verdict.agreement == Some(true),
                "{}: criterion {} vs oracle {}",
                a.name(),
                criterion_side.simple,
                verdict.oracle.simple
            );
            if let Some((_, expected)) = expectations.iter().find(|(n, _)| *n == a.name()) {
                check!(
                    criterion_side.simple == *expected,
                    "{}: expected simple = {expected}",
                    a.name()
                );
            }
        }
        check!(
            applicable_seen >= expectations.len(),
            "only {applicable_seen} corpus members satisfied the hypotheses"
        );
        Ok(())
    });
}

#[test]
fn criterion_08_blocks_decompose_into_simple_ideals() {
    criterion(8, "block algebras split into graded-simple ideals", || {
        for (a, blocks) in [(corpus::two_block(), 2usize), (corpus::three_block(), 3usize)] {
            let sd = simple_decomposition(&a, 0).map_err(|e| e.to_string())?;
            check!(
                sd.report.ideals.len() == blocks,
                "{}: {} ideals, expected {blocks}",
                a.name(),
                sd.report.ideals.len()
            );
            let mut total = 0usize;
            for (ideal, verdict) in sd.report.ideals.iter().zip(&sd.ideal_verdicts) {
                check!(
                    verdict.oracle.exact && verdict.oracle.simple,
                    "{}: block {:?} is not exactly graded-simple",
                    a.name(),
                    ideal.class_rep
                );
                total += ideal.total.dim();
            }
            check!(
                total == a.dim(),
                "{}: block dimensions sum to {total}, expected {}",
                a.name(),
                a.dim()
            );
            check!(sd.all_simple, "{}: not all blocks simple", a.name());
        }
        Ok(())
    });
}

#[test]
fn criterion_09_no_ideal_survives_in_the_identity_part() {
    criterion(9, "largest ideal in the identity part vanishes", || {
        for a in symmetric_corpus() {
            let report = decompose(&a).map_err(|e| e.to_string())?;
            if report.center_dim == 0 && report.p1_condition {
                let survivor = largest_ideal_in_identity_part(&a);
                check!(
                    survivor.is_zero(),
                    "{}: an ideal of dimension {} survives inside the identity part",
                    a.name(),
                    survivor.dim()
                );
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_bicharacter_laws() {
    criterion(10, "bi-character laws and the negative case", || {
        for a in corpus::builtin_corpus() {
            let spec = a.g_spec();
            let eps = a.bicharacter();
            let report = eps.validate(spec);
            check!(
                report.is_valid(),
                "{}: bi-character failed validation: {:?}",
                a.name(),
                report.failures
            );
            let one = CycScalar::one(eps.cyclotomic_order());
            let minus_one = one.negate();
            for g in spec.sample_window(2) {
                let diag = eps.eval(&g, &g);
                check!(
                    diag == one || diag == minus_one,
                    "{}: eps(g,g) is not a sign",
                    a.name()
                );
                for h in spec.sample_window(2) {
                    let prod = eps.eval(&g, &h).checked_mul(&eps.eval(&h, &g)).unwrap();
                    check!(prod.is_one(), "{}: eps(g,h)eps(h,g) != 1", a.name());
                }
            }
        }
        // the negative case: Z_3 with exponent matrix [[1]] mod 3
        let g = GroupSpec::cyclic(3);
        let bad = BiCharacter::from_i64(3, &[vec![1]]);
        let report = bad.validate(&g);
        check!(
            !report.is_valid(),
            "the antisymmetry-violating bi-character must be rejected"
        );
        Ok(())
    });
}

#[test]
fn criterion_11_determinism_and_round_trip() {
    criterion(11, "round-trip byte stability and deterministic reports", || {
        for a in corpus::builtin_corpus() {
            let once = serialize_algebra(&a);
            let parsed = parse_algebra(&once)
                .map_err(|e| format!("{}: rejected its own serialization: {e}", a.name()))?;
            let twice = serialize_algebra(&parsed);
            check!(once == twice, "{}: serialization not byte-stable", a.name());

            let base = AnalysisOptions { seed: 0, threads: 1 };
            let threaded = AnalysisOptions { seed: 0, threads: 8 };
            let r1 = emit_report(&analyze(&a, &base), ReportFormat::Json);
            let r2 = emit_report(&analyze(&a, &base), ReportFormat::Json);
            let r3 = emit_report(&analyze(&a, &threaded), ReportFormat::Json);
            check!(r1 == r2, "{}: JSON report differs across runs", a.name());
            check!(
                r1 == r3,
                "{}: JSON report differs across thread counts",
                a.name()
            );
            let t1 = emit_report(&analyze(&a, &base), ReportFormat::Text);
            let t2 = emit_report(&analyze(&a, &threaded), ReportFormat::Text);
            check!(t1 == t2, "{}: text report not deterministic", a.name());
        }
        Ok(())
    });
}
