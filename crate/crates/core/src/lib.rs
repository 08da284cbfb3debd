//! Exact-arithmetic workbench for finite-dimensional Poisson color algebras
//! carrying a second grading by an abelian group.
//!
//! The library represents an algebra by a homogeneous basis with a degree in
//! each grading, two sparse structure-constant tensors (associative product
//! and bracket) over the cyclotomic rationals, and a bi-character given by
//! an integer exponent matrix. On top of that model it provides:
//!
//! - full validation of the defining axioms with cited counterexamples,
//! - supports of both gradings and the connection classes of the second
//!   grading's support, with witness chains,
//! - the ideal attached to each connection class, the decomposition of the
//!   algebra into those ideals plus a deterministic complement, and
//!   computational verification of the subalgebra/ideal/orthogonality
//!   claims,
//! - graded simplicity decided by two independent routes (a structural
//!   criterion and a brute-force ideal-closure oracle) that are required to
//!   agree whenever both are decisive,
//! - a JSON file format, a built-in example corpus, and deterministic
//!   report serialization for the `pck` command-line tool.

pub mod algebra;
pub mod connections;
pub mod corpus;
pub mod decomposition;
pub mod format;
pub mod grading;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod simplicity;

pub use algebra::{PoissonColorAlgebra, Vector};
pub use grading::{BiCharacter, GroupElement, GroupSpec};
pub use linalg::GradedSubspace;
pub use scalar::{CycScalar, Rational};
