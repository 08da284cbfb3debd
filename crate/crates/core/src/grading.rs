//! Finitely generated abelian groups and bi-characters.
//!
//! One representation serves both gradings: the group Z^r x Z_{m_1} x ... x
//! Z_{m_s} written additively on coordinates. The first grading group G keeps
//! the additive notation; the second grading group is the same structure
//! displayed multiplicatively (juxtaposition, unit element 1) in reports.
//!
//! A bi-character is stored intensionally by an integer exponent matrix B:
//! eps(g, h) = zeta_N^(g^T B h). Biadditivity then holds by construction and
//! validity reduces to finitely many congruences.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::scalar::CycScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("element has {got} coordinates, group has {want} generators")]
    LengthMismatch { got: usize, want: usize },
    #[error("torsion order {0} must be at least 2")]
    BadTorsionOrder(u64),
    #[error("cannot parse group element {0:?}")]
    BadElementLiteral(String),
}

/// The group Z^free_rank x Z_{m_1} x ... x Z_{m_s}.
/// Coordinates list free generators first, then torsion generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    free_rank: usize,
    torsion: Vec<u64>,
}

/// Element in canonical form: torsion coordinates reduced to 0 <= c < m.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    coords: Vec<BigInt>,
}

impl GroupSpec {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, GradingError> {
        for &m in &torsion {
            if m < 2 {
                return Err(GradingError::BadTorsionOrder(m));
            }
        }
        Ok(GroupSpec { free_rank, torsion })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        GroupSpec {
            free_rank: 0,
            torsion: vec![],
        }
    }

    pub fn free(rank: usize) -> Self {
        GroupSpec {
            free_rank: rank,
            torsion: vec![],
        }
    }

    pub fn cyclic(m: u64) -> Self {
        GroupSpec::new(0, vec![m]).unwrap()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion
    }

    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            coords: vec![BigInt::zero(); self.generator_count()],
        }
    }

    /// Build an element from raw coordinates, canonicalizing torsion.
    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement, GradingError> {
        if coords.len() != self.generator_count() {
            return Err(GradingError::LengthMismatch {
                got: coords.len(),
                want: self.generator_count(),
            });
        }
        Ok(self.canonicalize(coords))
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<GroupElement, GradingError> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn canonicalize(&self, mut coords: Vec<BigInt>) -> GroupElement {
        for (k, &m) in self.torsion.iter().enumerate() {
            let i = self.free_rank + k;
            coords[i] = coords[i].mod_floor(&BigInt::from(m));
        }
        GroupElement { coords }
    }

    pub fn checked_compose(
        &self,
        a: &GroupElement,
        b: &GroupElement,
    ) -> Result<GroupElement, GradingError> {
        if a.coords.len() != self.generator_count() {
            return Err(GradingError::LengthMismatch {
                got: a.coords.len(),
                want: self.generator_count(),
            });
        }
        if b.coords.len() != self.generator_count() {
            return Err(GradingError::LengthMismatch {
                got: b.coords.len(),
                want: self.generator_count(),
            });
        }
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x + y)
            .collect();
        Ok(self.canonicalize(coords))
    }

    /// Group law: coordinatewise sum, torsion reduced. Serves as the
    /// additive law of G and the multiplicative law of the second grading.
    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.checked_compose(a, b).expect("element length mismatch")
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        self.canonicalize(a.coords.iter().map(|c| -c).collect())
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }

    /// All elements with torsion coordinates exhaustive and free coordinates
    /// ranging over {-window..window}. Used to spot-check bi-character laws.
    pub fn sample_window(&self, window: i64) -> Vec<GroupElement> {
        let mut ranges: Vec<Vec<BigInt>> = Vec::new();
        for _ in 0..self.free_rank {
            ranges.push((-window..=window).map(BigInt::from).collect());
        }
        for &m in &self.torsion {
            ranges.push((0..m).map(BigInt::from).collect());
        }
        let mut out = vec![vec![]];
        for range in &ranges {
            let mut next = Vec::with_capacity(out.len() * range.len());
            for prefix in &out {
                for v in range {
                    let mut coords = prefix.clone();
                    coords.push(v.clone());
                    next.push(coords);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|coords| self.canonicalize(coords))
            .collect()
    }

    /// Generator names used in multiplicative displays: `z` for a single
    /// generator, `z1`, `z2`, ... otherwise.
    pub fn generator_names(&self) -> Vec<String> {
        let n = self.generator_count();
        if n == 1 {
            vec!["z".to_string()]
        } else {
            (1..=n).map(|i| format!("z{i}")).collect()
        }
    }

    /// Multiplicative rendering: identity is `1`, otherwise a `*`-joined
    /// product of generators with integer exponents (`z^-1`, `z1*z2^2`).
    pub fn format_multiplicative(&self, a: &GroupElement) -> String {
        if self.is_identity(a) {
            return "1".to_string();
        }
        let names = self.generator_names();
        let mut out = String::new();
        for (name, c) in names.iter().zip(&a.coords) {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            if c == &BigInt::from(1) {
                out.push_str(name);
            } else {
                let _ = write!(out, "{name}^{c}");
            }
        }
        out
    }

    /// Additive rendering: `0` for the identity, else `(c1,...,cn)`
    /// (a single coordinate prints bare).
    pub fn format_additive(&self, a: &GroupElement) -> String {
        if self.is_identity(a) {
            return "0".to_string();
        }
        if a.coords.len() == 1 {
            return a.coords[0].to_string();
        }
        let inner: Vec<String> = a.coords.iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(","))
    }

    /// Inverse of `format_multiplicative`.
    pub fn parse_multiplicative(&self, text: &str) -> Result<GroupElement, GradingError> {
        let text = text.trim();
        if text == "1" {
            return Ok(self.identity());
        }
        let names = self.generator_names();
        let mut coords = vec![BigInt::zero(); self.generator_count()];
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: BigInt = e
                        .trim()
                        .parse()
                        .map_err(|_| GradingError::BadElementLiteral(text.to_string()))?;
                    (n.trim(), exp)
                }
                None => (factor, BigInt::from(1)),
            };
            let idx = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| GradingError::BadElementLiteral(text.to_string()))?;
            coords[idx] += exp;
        }
        self.element(coords)
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }
}

/// Bi-character eps(g, h) = zeta_N^(g^T B h) on the group described by a
/// `GroupSpec`, with B an integer matrix over the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCharacter {
    cyclotomic_order: u64,
    matrix: Vec<Vec<BigInt>>,
}

/// Outcome of validating a bi-character; failures are descriptions of the
/// congruences or sampled identities that did not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCharValidation {
    pub failures: Vec<String>,
}

impl BiCharValidation {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl BiCharacter {
    pub fn new(cyclotomic_order: u64, matrix: Vec<Vec<BigInt>>) -> Self {
        assert!(cyclotomic_order > 0, "cyclotomic order must be positive");
        BiCharacter {
            cyclotomic_order,
            matrix,
        }
    }

    pub fn from_i64(cyclotomic_order: u64, rows: &[Vec<i64>]) -> Self {
        Self::new(
            cyclotomic_order,
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    /// The trivial bi-character eps == 1 on a group with `n` generators.
    pub fn trivial(n: usize) -> Self {
        Self::new(1, vec![vec![BigInt::zero(); n]; n])
    }

    pub fn cyclotomic_order(&self) -> u64 {
        self.cyclotomic_order
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    /// The exponent g^T B h, not yet reduced mod N.
    pub fn exponent(&self, g: &GroupElement, h: &GroupElement) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, gi) in g.coords().iter().enumerate() {
            if gi.is_zero() {
                continue;
            }
            for (j, hj) in h.coords().iter().enumerate() {
                if hj.is_zero() {
                    continue;
                }
                acc += gi * &self.matrix[i][j] * hj;
            }
        }
        acc
    }

    /// eps(g, h) as an element of Q(zeta_N), N the bi-character's own order.
    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> CycScalar {
        CycScalar::root_of_unity_big(self.cyclotomic_order, &self.exponent(g, h))
    }

    /// eps(g, h) embedded into Q(zeta_M) for a multiple M of the
    /// bi-character's order (zeta_N = zeta_M^(M/N)).
    pub fn eval_in(&self, scalar_order: u64, g: &GroupElement, h: &GroupElement) -> CycScalar {
        assert!(
            scalar_order.is_multiple_of(self.cyclotomic_order),
            "bi-character order {} does not divide scalar order {}",
            self.cyclotomic_order,
            scalar_order
        );
        let lift = BigInt::from(scalar_order / self.cyclotomic_order);
        CycScalar::root_of_unity_big(scalar_order, &(self.exponent(g, h) * lift))
    }

    /// Check every defining law. Antisymmetry of the exponent matrix and the
    /// torsion well-definedness congruences are decisive; the sampled
    /// identity checks on the window {-2..2}^free x (all torsion elements)
    /// guard the implementation only, since biadditivity is structural.
    pub fn validate(&self, spec: &GroupSpec) -> BiCharValidation {
        let mut failures = Vec::new();
        let n = spec.generator_count();
        let modulus = BigInt::from(self.cyclotomic_order);

        if self.matrix.len() != n || self.matrix.iter().any(|row| row.len() != n) {
            failures.push(format!(
                "exponent matrix must be {n}x{n} for this group"
            ));
            return BiCharValidation { failures };
        }

        // (i) eps(g,h)eps(h,g) = 1  <=>  B + B^T == 0 mod N entrywise.
        for i in 0..n {
            for j in 0..n {
                let s = &self.matrix[i][j] + &self.matrix[j][i];
                if !s.mod_floor(&modulus).is_zero() {
                    failures.push(format!(
                        "antisymmetry fails at ({i},{j}): B[{i}][{j}] + B[{j}][{i}] = {s} is not 0 mod {}",
                        self.cyclotomic_order
                    ));
                }
            }
        }

        // Well-definedness on canonical representatives: for a torsion
        // generator of order m, shifting a coordinate by m must not change
        // any exponent, i.e. m*B[i][j] == 0 == m*B[j][i] mod N.
        for (k, &m) in spec.torsion_orders().iter().enumerate() {
            let i = spec.free_rank() + k;
            let m_big = BigInt::from(m);
            for j in 0..n {
                let row = (&m_big * &self.matrix[i][j]).mod_floor(&modulus);
                if !row.is_zero() {
                    failures.push(format!(
                        "torsion well-definedness fails: {m}*B[{i}][{j}] is not 0 mod {}",
                        self.cyclotomic_order
                    ));
                }
                let col = (&m_big * &self.matrix[j][i]).mod_floor(&modulus);
                if !col.is_zero() {
                    failures.push(format!(
                        "torsion well-definedness fails: {m}*B[{j}][{i}] is not 0 mod {}",
                        self.cyclotomic_order
                    ));
                }
            }
        }

        // Spot checks on enumerated elements. Kept bounded: identities are
        // structural for the exponent-matrix form, so a truncated window
        // still catches coding errors.
        let mut sample = spec.sample_window(2);
        sample.truncate(64);
        let reduced = |g: &GroupElement, h: &GroupElement| self.exponent(g, h).mod_floor(&modulus);
        for g in &sample {
            for h in &sample {
                let sym = (self.exponent(g, h) + self.exponent(h, g)).mod_floor(&modulus);
                if !sym.is_zero() {
                    failures.push(format!(
                        "eps(g,h)*eps(h,g) != 1 at g={}, h={}",
                        spec.format_additive(g),
                        spec.format_additive(h)
                    ));
                }
            }
            // eps(g,g) squares to 1: 2*g^T B g == 0 mod N.
            let diag = (BigInt::from(2) * self.exponent(g, g)).mod_floor(&modulus);
            if !diag.is_zero() {
                failures.push(format!(
                    "eps(g,g) is not +-1 at g={}",
                    spec.format_additive(g)
                ));
            }
        }
        // Biadditivity in both slots on a smaller window (triples grow fast).
        let mut small = spec.sample_window(1);
        small.truncate(16);
        for g in &small {
            for h in &small {
                let gh = spec.compose(g, h);
                for f in &small {
                    let left = reduced(&gh, f);
                    let split = (self.exponent(g, f) + self.exponent(h, f)).mod_floor(&modulus);
                    if left != split {
                        failures.push(format!(
                            "additivity in the first slot fails at ({}, {}, {})",
                            spec.format_additive(g),
                            spec.format_additive(h),
                            spec.format_additive(f)
                        ));
                    }
                    let right = reduced(g, &spec.compose(h, f));
                    let split2 = (self.exponent(g, h) + self.exponent(g, f)).mod_floor(&modulus);
                    if right != split2 {
                        failures.push(format!(
                            "additivity in the second slot fails at ({}, {}, {})",
                            spec.format_additive(g),
                            spec.format_additive(h),
                            spec.format_additive(f)
                        ));
                    }
                }
            }
        }

        BiCharValidation { failures }
    }
}
