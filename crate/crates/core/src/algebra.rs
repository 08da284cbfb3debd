//! The central data model: a vector space graded by two abelian groups at
//! once, carrying an associative product and a bracket as sparse structure
//! constant tensors, plus the full axiom checker.
//!
//! Every axiom is a multilinear identity, so verifying it on basis triples
//! verifies it on the whole space; the checks below enumerate basis tuples
//! and compare exact vectors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::grading::{BiCharacter, GroupElement, GroupSpec};
use crate::scalar::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("basis name {0:?} appears more than once")]
    DuplicateName(String),
    #[error("basis element {name:?}: {source}")]
    BadDegree {
        name: String,
        source: crate::grading::GradingError,
    },
    #[error("tensor references basis index {0}, dimension is {1}")]
    IndexOutOfRange(usize, usize),
    #[error("tensor coefficient has scalar order {got}, algebra uses {want}")]
    CoefficientOrder { got: u64, want: u64 },
    #[error("bi-character order {0} does not divide the scalar order {1}")]
    BiCharacterOrder(u64, u64),
    #[error("bi-character matrix is not square of generator count {0}")]
    BiCharacterShape(usize),
}

/// One homogeneous basis element with its degree in each grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDescriptor {
    pub index: usize,
    pub name: String,
    pub gdeg: GroupElement,
    pub ldeg: GroupElement,
}

/// A bilinear map determined on the basis: (i, j) -> sum_k c * e_k.
/// Stored coefficients are nonzero and each (i, j, k) occurs at most once.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureTensor {
    entries: BTreeMap<(usize, usize), Vec<(usize, CycScalar)>>,
}

impl StructureTensor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add `c * e_k` to the image of (i, j), merging with any existing term.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        let terms = self.entries.entry((i, j)).or_default();
        match terms.binary_search_by_key(&k, |t| t.0) {
            Ok(pos) => {
                let merged = terms[pos].1.checked_add(&c).expect("scalar order mismatch");
                if merged.is_zero() {
                    terms.remove(pos);
                } else {
                    terms[pos].1 = merged;
                }
            }
            Err(pos) => terms.insert(pos, (k, c)),
        }
        if self.entries.get(&(i, j)).map(Vec::is_empty).unwrap_or(false) {
            self.entries.remove(&(i, j));
        }
    }

    /// Replace the whole image of (i, j).
    pub fn set(&mut self, i: usize, j: usize, terms: Vec<(usize, CycScalar)>) {
        self.entries.remove(&(i, j));
        for (k, c) in terms {
            self.add_term(i, j, k, c);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &[(usize, CycScalar)] {
        self.entries.get(&(i, j)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &CycScalar)> {
        self.entries
            .iter()
            .flat_map(|(&(i, j), terms)| terms.iter().map(move |(k, c)| (i, j, *k, c)))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Sparse vector over the algebra's basis; stored coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vector {
    terms: BTreeMap<usize, CycScalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize, order: u64) -> Self {
        Self::single(index, CycScalar::one(order))
    }

    pub fn single(index: usize, c: CycScalar) -> Self {
        let mut v = Self::default();
        v.add_term(index, c);
        v
    }

    pub fn add_term(&mut self, index: usize, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&index) {
            Some(existing) => {
                let merged = existing.checked_add(&c).expect("scalar order mismatch");
                if !merged.is_zero() {
                    self.terms.insert(index, merged);
                }
            }
            None => {
                self.terms.insert(index, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c.negate());
        }
        out
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self::default();
        if c.is_zero() {
            return out;
        }
        for (&i, x) in &self.terms {
            out.add_term(i, x.checked_mul(c).expect("scalar order mismatch"));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &CycScalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, index: usize) -> Option<&CycScalar> {
        self.terms.get(&index)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }
}

/// Pair of degrees (second grading, first grading) naming one homogeneous
/// component of the refined decomposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub ldeg: GroupElement,
    pub gdeg: GroupElement,
}

/// Which axioms are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    Bigrading,
    Associativity,
    EpsilonCommutativity,
    SkewSymmetry,
    Jacobi,
    Leibniz,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Bigrading => "bigrading",
            Axiom::Associativity => "associativity",
            Axiom::EpsilonCommutativity => "epsilon_commutativity",
            Axiom::SkewSymmetry => "skew_symmetry",
            Axiom::Jacobi => "jacobi",
            Axiom::Leibniz => "leibniz",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// A basis tuple on which an identity failed, with both unequal sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub basis_names: Vec<String>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub status: CheckStatus,
    pub counterexamples: Vec<Counterexample>,
    /// True when more counterexamples existed than the report cap.
    pub truncated: bool,
}

/// Counterexample lists are capped to keep reports readable.
pub const COUNTEREXAMPLE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.status, CheckStatus::Fail))
    }

    pub fn failed_axioms(&self) -> Vec<Axiom> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail))
            .map(|c| c.axiom)
            .collect()
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

/// Extra switches carried by an algebra instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AlgebraFlags {
    /// Also require the associative product to be eps-commutative.
    /// Off by default: the interesting algebras are non-commutative.
    pub check_commutative: bool,
}

/// A finite-dimensional Poisson color algebra presented by structure
/// constants over Q(zeta_N), graded by G (color grading, additive) and by a
/// second abelian group (multiplicative in reports).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonColorAlgebra {
    name: String,
    scalar_order: u64,
    g_spec: GroupSpec,
    lambda_spec: GroupSpec,
    bichar: BiCharacter,
    basis: Vec<BasisDescriptor>,
    product: StructureTensor,
    bracket: StructureTensor,
    flags: AlgebraFlags,
    components: BTreeMap<BiDegree, Vec<usize>>,
}

pub struct AlgebraData {
    pub name: String,
    pub scalar_order: u64,
    pub g_spec: GroupSpec,
    pub lambda_spec: GroupSpec,
    pub bichar: BiCharacter,
    /// (name, gdeg, ldeg) per basis element, in index order.
    pub basis: Vec<(String, GroupElement, GroupElement)>,
    pub product: StructureTensor,
    pub bracket: StructureTensor,
    pub flags: AlgebraFlags,
}

impl PoissonColorAlgebra {
    /// Structural construction: checks shapes, ranges, name uniqueness and
    /// scalar orders, but does not run the axiom checks (so that invalid
    /// algebras can be built, validated and reported on).
    pub fn new(data: AlgebraData) -> Result<Self, AlgebraError> {
        let dim = data.basis.len();
        let mut names = BTreeSet::new();
        let mut basis = Vec::with_capacity(dim);
        for (index, (name, gdeg, ldeg)) in data.basis.into_iter().enumerate() {
            if !names.insert(name.clone()) {
                return Err(AlgebraError::DuplicateName(name));
            }
            let gdeg = data
                .g_spec
                .element(gdeg.coords().to_vec())
                .map_err(|source| AlgebraError::BadDegree {
                    name: name.clone(),
                    source,
                })?;
            let ldeg = data
                .lambda_spec
                .element(ldeg.coords().to_vec())
                .map_err(|source| AlgebraError::BadDegree {
                    name: name.clone(),
                    source,
                })?;
            basis.push(BasisDescriptor {
                index,
                name,
                gdeg,
                ldeg,
            });
        }
        for tensor in [&data.product, &data.bracket] {
            for (i, j, k, c) in tensor.iter() {
                for idx in [i, j, k] {
                    if idx >= dim {
                        return Err(AlgebraError::IndexOutOfRange(idx, dim));
                    }
                }
                if c.order() != data.scalar_order {
                    return Err(AlgebraError::CoefficientOrder {
                        got: c.order(),
                        want: data.scalar_order,
                    });
                }
            }
        }
        let n = data.g_spec.generator_count();
        let matrix = data.bichar.matrix();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::BiCharacterShape(n));
        }
        if !data.scalar_order.is_multiple_of(data.bichar.cyclotomic_order()) {
            return Err(AlgebraError::BiCharacterOrder(
                data.bichar.cyclotomic_order(),
                data.scalar_order,
            ));
        }
        let mut components: BTreeMap<BiDegree, Vec<usize>> = BTreeMap::new();
        for b in &basis {
            components
                .entry(BiDegree {
                    ldeg: b.ldeg.clone(),
                    gdeg: b.gdeg.clone(),
                })
                .or_default()
                .push(b.index);
        }
        Ok(PoissonColorAlgebra {
            name: data.name,
            scalar_order: data.scalar_order,
            g_spec: data.g_spec,
            lambda_spec: data.lambda_spec,
            bichar: data.bichar,
            basis,
            product: data.product,
            bracket: data.bracket,
            flags: data.flags,
            components,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn scalar_order(&self) -> u64 {
        self.scalar_order
    }

    pub fn g_spec(&self) -> &GroupSpec {
        &self.g_spec
    }

    pub fn lambda_spec(&self) -> &GroupSpec {
        &self.lambda_spec
    }

    pub fn bicharacter(&self) -> &BiCharacter {
        &self.bichar
    }

    pub fn basis(&self) -> &[BasisDescriptor] {
        &self.basis
    }

    pub fn descriptor(&self, index: usize) -> &BasisDescriptor {
        &self.basis[index]
    }

    pub fn basis_by_name(&self, name: &str) -> Option<&BasisDescriptor> {
        self.basis.iter().find(|b| b.name == name)
    }

    pub fn product_tensor(&self) -> &StructureTensor {
        &self.product
    }

    pub fn bracket_tensor(&self) -> &StructureTensor {
        &self.bracket
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    /// Basis indices of each nonzero homogeneous component.
    pub fn components(&self) -> &BTreeMap<BiDegree, Vec<usize>> {
        &self.components
    }

    pub fn component_indices(&self, key: &BiDegree) -> &[usize] {
        self.components.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn bidegree(&self, index: usize) -> BiDegree {
        BiDegree {
            ldeg: self.basis[index].ldeg.clone(),
            gdeg: self.basis[index].gdeg.clone(),
        }
    }

    /// eps evaluated on the color degrees of two basis elements, as a scalar
    /// of the algebra's field.
    pub fn epsilon(&self, i: usize, j: usize) -> CycScalar {
        self.bichar
            .eval_in(self.scalar_order, &self.basis[i].gdeg, &self.basis[j].gdeg)
    }

    fn apply_tensor(&self, tensor: &StructureTensor, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a.checked_mul(b).expect("scalar order mismatch");
                if ab.is_zero() {
                    continue;
                }
                for (k, c) in tensor.get(i, j) {
                    out.add_term(*k, ab.checked_mul(c).expect("scalar order mismatch"));
                }
            }
        }
        out
    }

    /// Bilinear extension of the associative product tensor.
    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply_tensor(&self.product, x, y)
    }

    /// Bilinear extension of the bracket tensor.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply_tensor(&self.bracket, x, y)
    }

    pub fn basis_vector(&self, index: usize) -> Vector {
        Vector::basis(index, self.scalar_order)
    }

    fn names(&self, indices: &[usize]) -> Vec<String> {
        indices.iter().map(|&i| self.basis[i].name.clone()).collect()
    }

    fn run_identity<F>(&self, axiom: Axiom, arity: usize, identity: F) -> AxiomCheck
    where
        F: Fn(&[usize]) -> Option<(Vector, Vector)>,
    {
        let dim = self.dim();
        if dim == 0 {
            return AxiomCheck {
                axiom,
                status: CheckStatus::Pass,
                counterexamples: vec![],
                truncated: false,
            };
        }
        let mut counterexamples = Vec::new();
        let mut truncated = false;
        let mut tuple = vec![0usize; arity];
        let count_failures = |tuple: &[usize],
                                  lhs: Vector,
                                  rhs: Vector,
                                  counterexamples: &mut Vec<Counterexample>,
                                  truncated: &mut bool| {
            if counterexamples.len() < COUNTEREXAMPLE_CAP {
                counterexamples.push(Counterexample {
                    basis_names: self.names(tuple),
                    lhs,
                    rhs,
                });
            } else {
                *truncated = true;
            }
        };
        // Odometer over basis tuples of the given arity.
        'outer: loop {
            if let Some((lhs, rhs)) = identity(&tuple) {
                if lhs != rhs {
                    count_failures(&tuple, lhs, rhs, &mut counterexamples, &mut truncated);
                }
            }
            for slot in (0..arity).rev() {
                tuple[slot] += 1;
                if tuple[slot] < dim {
                    continue 'outer;
                }
                tuple[slot] = 0;
            }
            break;
        }
        AxiomCheck {
            axiom,
            status: if counterexamples.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            counterexamples,
            truncated,
        }
    }

    /// Every tensor entry must respect both gradings:
    /// ldeg(k) = ldeg(i)*ldeg(j) and gdeg(k) = gdeg(i)+gdeg(j).
    pub fn check_bigrading(&self) -> AxiomCheck {
        let mut counterexamples = Vec::new();
        let mut truncated = false;
        for tensor in [&self.product, &self.bracket] {
            for (i, j, k, c) in tensor.iter() {
                let want_l = self
                    .lambda_spec
                    .compose(&self.basis[i].ldeg, &self.basis[j].ldeg);
                let want_g = self.g_spec.compose(&self.basis[i].gdeg, &self.basis[j].gdeg);
                if self.basis[k].ldeg != want_l || self.basis[k].gdeg != want_g {
                    if counterexamples.len() < COUNTEREXAMPLE_CAP {
                        counterexamples.push(Counterexample {
                            basis_names: self.names(&[i, j, k]),
                            lhs: Vector::single(k, c.clone()),
                            rhs: Vector::zero(),
                        });
                    } else {
                        truncated = true;
                    }
                }
            }
        }
        AxiomCheck {
            axiom: Axiom::Bigrading,
            status: if counterexamples.is_empty() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            counterexamples,
            truncated,
        }
    }

    /// (e_i e_j) e_k = e_i (e_j e_k) on all basis triples.
    pub fn check_associativity(&self) -> AxiomCheck {
        self.run_identity(Axiom::Associativity, 3, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let ei = self.basis_vector(i);
            let ej = self.basis_vector(j);
            let ek = self.basis_vector(k);
            let lhs = self.mul(&self.mul(&ei, &ej), &ek);
            let rhs = self.mul(&ei, &self.mul(&ej, &ek));
            Some((lhs, rhs))
        })
    }

    /// e_i e_j = eps(i, j) e_j e_i on all pairs. Only run when flagged.
    pub fn check_epsilon_commutativity(&self) -> AxiomCheck {
        if !self.flags.check_commutative {
            return AxiomCheck {
                axiom: Axiom::EpsilonCommutativity,
                status: CheckStatus::Skipped,
                counterexamples: vec![],
                truncated: false,
            };
        }
        self.run_identity(Axiom::EpsilonCommutativity, 2, |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = self.mul(&self.basis_vector(i), &self.basis_vector(j));
            let rhs = self
                .mul(&self.basis_vector(j), &self.basis_vector(i))
                .scale(&self.epsilon(i, j));
            Some((lhs, rhs))
        })
    }

    /// {e_i, e_j} = -eps(i, j) {e_j, e_i} on all pairs.
    pub fn check_skew_symmetry(&self) -> AxiomCheck {
        self.run_identity(Axiom::SkewSymmetry, 2, |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = self.bracket(&self.basis_vector(i), &self.basis_vector(j));
            let rhs = self
                .bracket(&self.basis_vector(j), &self.basis_vector(i))
                .scale(&self.epsilon(i, j).negate());
            Some((lhs, rhs))
        })
    }

    /// {e_i, {e_j, e_k}} = {{e_i, e_j}, e_k} + eps(i, j) {e_j, {e_i, e_k}}.
    pub fn check_jacobi(&self) -> AxiomCheck {
        self.run_identity(Axiom::Jacobi, 3, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let ei = self.basis_vector(i);
            let ej = self.basis_vector(j);
            let ek = self.basis_vector(k);
            let lhs = self.bracket(&ei, &self.bracket(&ej, &ek));
            let rhs = self
                .bracket(&self.bracket(&ei, &ej), &ek)
                .add(&self.bracket(&ej, &self.bracket(&ei, &ek)).scale(&self.epsilon(i, j)));
            Some((lhs, rhs))
        })
    }

    /// {e_i e_j, e_k} = e_i {e_j, e_k} + eps(j, k) {e_i, e_k} e_j.
    pub fn check_leibniz(&self) -> AxiomCheck {
        self.run_identity(Axiom::Leibniz, 3, |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let ei = self.basis_vector(i);
            let ej = self.basis_vector(j);
            let ek = self.basis_vector(k);
            let lhs = self.bracket(&self.mul(&ei, &ej), &ek);
            let rhs = self
                .mul(&ei, &self.bracket(&ej, &ek))
                .add(&self.mul(&self.bracket(&ei, &ek), &ej).scale(&self.epsilon(j, k)));
            Some((lhs, rhs))
        })
    }

    /// Run every axiom check and aggregate.
    pub fn validate_all(&self) -> AxiomReport {
        AxiomReport {
            checks: vec![
                self.check_bigrading(),
                self.check_associativity(),
                self.check_epsilon_commutativity(),
                self.check_skew_symmetry(),
                self.check_jacobi(),
                self.check_leibniz(),
            ],
        }
    }

    /// Render a vector as a readable linear combination of basis names.
    pub fn format_vector(&self, v: &Vector) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in v.iter() {
            let name = &self.basis[i].name;
            if c.is_one() {
                parts.push(name.clone());
            } else {
                parts.push(format!("({}){}", c, name));
            }
        }
        parts.join(" + ")
    }
}
