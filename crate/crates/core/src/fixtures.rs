//! Small worked examples used throughout the test suites and the CLI demo.
//! Values are frozen; the regression tests pin the numbers these produce.

use crate::algebra::AlgebraSignature;
use crate::argument::Argument;
use crate::construct::{
    argument_from_relation, product_argument, prototypical, relation_from_atom_pairs,
    CompatibilityRelation, ProbabilityMeasure, RowStochasticMatrix,
};
use crate::DEFAULT_TOLERANCE;

/// Two-atom algebra `{x, y}` with `p(x) = 0.25`, `p(y) = 0.75`.
pub fn measure_xy() -> ProbabilityMeasure {
    let alg = AlgebraSignature::new(["x", "y"]).unwrap();
    ProbabilityMeasure::new(alg, vec![0.25, 0.75]).unwrap()
}

/// Prototypical argument of [`measure_xy`]: `FP(A1, A2) = p(A1ᶜ ∨ A2)`.
pub fn prototypical_xy() -> Argument {
    prototypical(&measure_xy())
}

/// Rows `(0.3, 0.7)` and `(0.6, 0.4)`.
pub fn matrix_2x2() -> RowStochasticMatrix {
    RowStochasticMatrix::new(vec![vec![0.3, 0.7], vec![0.6, 0.4]]).unwrap()
}

/// Product argument `{a1,a2} → {b1,b2}` over [`matrix_2x2`].
pub fn product_2x2() -> Argument {
    product_argument(
        &matrix_2x2(),
        &AlgebraSignature::numbered("a", 2).unwrap(),
        &AlgebraSignature::numbered("b", 2).unwrap(),
    )
    .unwrap()
}

/// Single row `(0.3, 0.7)`.
pub fn matrix_1x2() -> RowStochasticMatrix {
    RowStochasticMatrix::new(vec![vec![0.3, 0.7]]).unwrap()
}

/// Product argument `{a} → {b1,b2}` over [`matrix_1x2`].
pub fn product_1x2() -> Argument {
    product_argument(
        &matrix_1x2(),
        &AlgebraSignature::new(["a"]).unwrap(),
        &AlgebraSignature::numbered("b", 2).unwrap(),
    )
    .unwrap()
}

/// Atom-generated relation pairing `a1↔b1` and `a2↔b2`.
pub fn relation_2x2() -> CompatibilityRelation {
    relation_from_atom_pairs(
        &AlgebraSignature::numbered("a", 2).unwrap(),
        &AlgebraSignature::numbered("b", 2).unwrap(),
        &[(0, 0), (1, 1)],
    )
    .unwrap()
}

/// Discrete argument induced by [`relation_2x2`].
pub fn relation_argument_2x2() -> Argument {
    argument_from_relation(&relation_2x2()).unwrap()
}

/// The unique valid table on a pair of 1-atom algebras: rows `F, T`,
/// columns `F, T`, entries `[[1,1],[0,1]]`.
pub fn forced_1x1() -> Argument {
    let alg = AlgebraSignature::new(["a"]).unwrap();
    Argument::new(
        alg.clone(),
        alg,
        vec![1.0, 1.0, 0.0, 1.0],
        DEFAULT_TOLERANCE,
    )
    .unwrap()
}

/// A valid 2-atom-square argument that is superficial: built as
/// `FP(A1, A2) = q(A1ᶜ ∨ A2)` from the subadditive capacity
/// `q(F) = 0, q({x}) = q({y}) = 0.8, q(T) = 1`, whose inclusion-exclusion
/// at `T` is `1 − 0.8 − 0.8 + 0 = −0.6`. Both kernels inherit the negative
/// value, so neither classification holds.
pub fn superficial_2x2() -> Argument {
    let alg = AlgebraSignature::new(["x", "y"]).unwrap();
    #[rustfmt::skip]
    let table = vec![
        1.0, 1.0, 1.0, 1.0,
        0.8, 1.0, 0.8, 1.0,
        0.8, 0.8, 1.0, 1.0,
        0.0, 0.8, 0.8, 1.0,
    ];
    Argument::new(alg.clone(), alg, table, DEFAULT_TOLERANCE).unwrap()
}
