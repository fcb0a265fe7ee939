//! A calculus of uncertain arguments between finite Boolean algebras.
//!
//! The central object is an argument: a table `FP : 𝒜 × ℬ → [0,1]` whose
//! entry at `(A, B)` is the force of proof carried from premise `A` to
//! conclusion `B`. Five axioms constrain the table; two Möbius-type
//! transforms of it (over domain supersets and codomain subsets) are the
//! kernels that classify the argument, carry mass functions from one
//! algebra to the other, and compose across chains of arguments by matrix
//! product.
//!
//! Modules:
//! - [`algebra`]: powerset algebras, elements as atom bitmasks, and the
//!   fast subset-lattice zeta/Möbius transforms;
//! - [`argument`]: the argument type, axiom validation, kernels,
//!   classification, and contrapositives;
//! - [`construct`]: the probability-measure, product, and
//!   compatibility-relation families plus the identity argument;
//! - [`mass`]: mass functions, belief values, propagation, composition;
//! - [`oracle`]: brute-force reference implementations for every transform
//!   and composition, used as ground truth in the test suites;
//! - [`generate`] and [`fixtures`]: random inputs and frozen worked
//!   examples for tests.
//!
//! Table-sized loops run on rayon when the `parallel` feature (default) is
//! enabled, falling back to sequential execution otherwise; both paths
//! produce bit-identical results.

pub mod algebra;
pub mod argument;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod mass;
pub mod oracle;
mod table;
pub mod transform;

pub use algebra::{AlgebraSignature, Element, MAX_ATOMS};
pub use argument::{
    validate_axioms, Argument, ArgumentData, Classification, Direction, KernelData, Probativity,
    Reconstruction, TransformKernel, Violation, ViolationReport, MAX_TABLE_BITS,
};
pub use construct::{
    argument_from_relation, identity_argument, product_argument, product_forward_closed_form,
    prototypical, relation_from_atom_pairs, validate_relation, CompatibilityRelation,
    ProbabilityMeasure, RelationMode, RelationReport, RelationViolation, RowStochasticMatrix,
};
pub use error::{Error, Result};
pub use mass::{
    belief_from_mass, compose_backward, compose_forward, propagate_backward, propagate_forward,
    propagate_through_kernel, Composition, MassData, MassFunction,
};

/// Default tolerance for axiom validation, classification thresholds, and
/// stochasticity checks. Möbius sums over unit-interval tables accumulate
/// rounding on the order of table-size × machine epsilon, well inside this.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Tolerance for fast-path versus brute-force comparisons.
pub const ORACLE_TOLERANCE: f64 = 1e-12;

/// Raw sequential and parallel table kernels, exposed for the benchmark
/// suite and bit-identity checks. Not a stable API.
#[doc(hidden)]
pub mod perf {
    pub use crate::table::seq;
    pub use crate::table::PAR_MIN_LEN;

    #[cfg(feature = "parallel")]
    pub use crate::table::par;
}
