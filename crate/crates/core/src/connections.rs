//! Support sets of the second grading and their connection classes.
//!
//! Two nonidentity support degrees are connected when a finite chain of
//! support elements, whose running products all stay inside the support,
//! multiplies out to the target or its inverse. The relation is an
//! equivalence on a symmetric support; we compute its classes by a
//! breadth-first search over running products seeded into a union-find.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::algebra::PoissonColorAlgebra;
use crate::grading::{GroupElement, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectionError {
    #[error("support is not symmetric: {0} has no inverse in the support")]
    NotSymmetric(String),
    #[error("element {0} is outside the support")]
    OutsideSupport(String),
}

/// Supports of both gradings plus the per-color-degree slice of the second
/// grading's support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportData {
    lambda_spec: GroupSpec,
    /// Nonidentity second-grading degrees with a nonzero component.
    pub sigma_lambda: BTreeSet<GroupElement>,
    /// Nonzero color degrees with a nonzero component.
    pub sigma_g: BTreeSet<GroupElement>,
    /// For each color degree that occurs: the nonidentity second-grading
    /// degrees pairing with it.
    pub lambda_by_gdeg: BTreeMap<GroupElement, BTreeSet<GroupElement>>,
}

impl SupportData {
    pub fn lambda_spec(&self) -> &GroupSpec {
        &self.lambda_spec
    }
}

/// Scan the basis descriptors for the exact support sets.
pub fn compute_supports(algebra: &PoissonColorAlgebra) -> SupportData {
    let lambda_spec = algebra.lambda_spec().clone();
    let g_spec = algebra.g_spec();
    let mut sigma_lambda = BTreeSet::new();
    let mut sigma_g = BTreeSet::new();
    let mut lambda_by_gdeg: BTreeMap<GroupElement, BTreeSet<GroupElement>> = BTreeMap::new();
    for b in algebra.basis() {
        if !lambda_spec.is_identity(&b.ldeg) {
            sigma_lambda.insert(b.ldeg.clone());
            lambda_by_gdeg
                .entry(b.gdeg.clone())
                .or_default()
                .insert(b.ldeg.clone());
        }
        if !g_spec.is_identity(&b.gdeg) {
            sigma_g.insert(b.gdeg.clone());
        }
    }
    SupportData {
        lambda_spec,
        sigma_lambda,
        sigma_g,
        lambda_by_gdeg,
    }
}

/// True when the support is closed under inverses.
pub fn check_symmetric_support(support: &SupportData) -> bool {
    support
        .sigma_lambda
        .iter()
        .all(|l| support.sigma_lambda.contains(&support.lambda_spec.inverse(l)))
}

fn require_symmetric(support: &SupportData) -> Result<(), ConnectionError> {
    for l in &support.sigma_lambda {
        if !support
            .sigma_lambda
            .contains(&support.lambda_spec.inverse(l))
        {
            return Err(ConnectionError::NotSymmetric(
                support.lambda_spec.format_multiplicative(l),
            ));
        }
    }
    Ok(())
}

/// A connection chain: the factors multiplied left to right. Every running
/// product stays inside the support; the final product is the target or its
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessChain {
    pub factors: Vec<GroupElement>,
}

impl WitnessChain {
    pub fn running_products(&self, spec: &GroupSpec) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut acc: Option<GroupElement> = None;
        for f in &self.factors {
            let next = match &acc {
                None => f.clone(),
                Some(p) => spec.compose(p, f),
            };
            out.push(next.clone());
            acc = Some(next);
        }
        out
    }

    /// Machine check of the chain invariants against a support and a
    /// (source, target) pair.
    pub fn verify(
        &self,
        support: &SupportData,
        source: &GroupElement,
        target: &GroupElement,
    ) -> bool {
        let spec = &support.lambda_spec;
        if self.factors.is_empty() || &self.factors[0] != source {
            return false;
        }
        if !self.factors.iter().all(|f| support.sigma_lambda.contains(f)) {
            return false;
        }
        let partials = self.running_products(spec);
        if !partials.iter().all(|p| support.sigma_lambda.contains(p)) {
            return false;
        }
        let last = partials.last().unwrap();
        last == target || *last == spec.inverse(target)
    }
}

/// Breadth-first search from `from`: returns a shortest witness chain whose
/// final running product is `to` or its inverse, or None if unreachable.
pub fn is_connected(
    support: &SupportData,
    from: &GroupElement,
    to: &GroupElement,
) -> Result<Option<WitnessChain>, ConnectionError> {
    require_symmetric(support)?;
    for e in [from, to] {
        if !support.sigma_lambda.contains(e) {
            return Err(ConnectionError::OutsideSupport(
                support.lambda_spec.format_multiplicative(e),
            ));
        }
    }
    let spec = &support.lambda_spec;
    let to_inv = spec.inverse(to);
    let reached = bfs_reachable(support, from);
    let hit = if reached.contains_key(to) {
        Some(to.clone())
    } else if reached.contains_key(&to_inv) {
        Some(to_inv)
    } else {
        None
    };
    let Some(mut node) = hit else {
        return Ok(None);
    };
    // Reconstruct the factor list by walking parents backwards.
    let mut factors = Vec::new();
    loop {
        let (parent, factor) = reached.get(&node).expect("visited node has a parent entry");
        factors.push(factor.clone());
        match parent {
            Some(p) => node = p.clone(),
            None => break,
        }
    }
    factors.reverse();
    Ok(Some(WitnessChain { factors }))
}

/// BFS over running products: maps each reached product to
/// (parent product, factor appended). The start maps to (None, start).
fn bfs_reachable(
    support: &SupportData,
    from: &GroupElement,
) -> BTreeMap<GroupElement, (Option<GroupElement>, GroupElement)> {
    let spec = &support.lambda_spec;
    let mut reached = BTreeMap::new();
    reached.insert(from.clone(), (None, from.clone()));
    let mut queue = VecDeque::new();
    queue.push_back(from.clone());
    while let Some(node) = queue.pop_front() {
        for step in &support.sigma_lambda {
            let next = spec.compose(&node, step);
            if !support.sigma_lambda.contains(&next) || reached.contains_key(&next) {
                continue;
            }
            reached.insert(next.clone(), (Some(node.clone()), step.clone()));
            queue.push_back(next);
        }
    }
    reached
}

/// The partition of the support into connection classes. Witness chains are
/// filled lazily for queried pairs only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionClasses {
    pub classes: Vec<BTreeSet<GroupElement>>,
    pub witnesses: BTreeMap<(GroupElement, GroupElement), WitnessChain>,
}

impl ConnectionClasses {
    pub fn class_of(&self, element: &GroupElement) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(element))
    }

    /// Query (and cache) a witness chain between two support elements.
    pub fn witness(
        &mut self,
        support: &SupportData,
        from: &GroupElement,
        to: &GroupElement,
    ) -> Result<Option<WitnessChain>, ConnectionError> {
        if let Some(hit) = self.witnesses.get(&(from.clone(), to.clone())) {
            return Ok(Some(hit.clone()));
        }
        let found = is_connected(support, from, to)?;
        if let Some(chain) = &found {
            self.witnesses
                .insert((from.clone(), to.clone()), chain.clone());
        }
        Ok(found)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn unite(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Deterministic: smaller index wins as the root.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Pick a class representative deterministically: the member whose
/// multiplicative rendering sorts first.
pub fn class_representative(spec: &GroupSpec, class: &BTreeSet<GroupElement>) -> GroupElement {
    class
        .iter()
        .min_by_key(|e| spec.format_multiplicative(e))
        .expect("class is nonempty")
        .clone()
}

/// Compute the exact partition. Each element is united with everything its
/// BFS reaches and with the inverses of those products; classes come out
/// inverse-closed and pairwise disjoint, ordered by their representative's
/// rendering.
pub fn connection_classes(support: &SupportData) -> Result<ConnectionClasses, ConnectionError> {
    require_symmetric(support)?;
    let elements: Vec<GroupElement> = support.sigma_lambda.iter().cloned().collect();
    let index: BTreeMap<&GroupElement, usize> =
        elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut uf = UnionFind::new(elements.len());
    let spec = &support.lambda_spec;
    for (i, from) in elements.iter().enumerate() {
        for reached in bfs_reachable(support, from).keys() {
            uf.unite(i, index[reached]);
            let inv = spec.inverse(reached);
            uf.unite(i, index[&inv]);
        }
    }
    let mut buckets: BTreeMap<usize, BTreeSet<GroupElement>> = BTreeMap::new();
    for (i, e) in elements.iter().enumerate() {
        buckets.entry(uf.find(i)).or_default().insert(e.clone());
    }
    let mut classes: Vec<BTreeSet<GroupElement>> = buckets.into_values().collect();
    classes.sort_by_key(|class| spec.format_multiplicative(&class_representative(spec, class)));
    debug_assert!(classes.iter().all(|class| class
        .iter()
        .all(|e| class.contains(&spec.inverse(e)))));
    Ok(ConnectionClasses {
        classes,
        witnesses: BTreeMap::new(),
    })
}
