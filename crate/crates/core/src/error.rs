use thiserror::Error;

use crate::argument::ViolationReport;

/// Errors produced by constructors and operations across the crate.
///
/// Axiom violations discovered by explicit validation calls are *data*
/// (a [`ViolationReport`]), not errors; they only become an [`Error`]
/// when a checked value is requested from invalid input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra must have between 1 and {max} atoms, got {got}")]
    AtomCount { got: usize, max: usize },

    #[error("atom name {0:?} is empty or duplicated")]
    BadAtomName(String),

    #[error("unknown atom {0:?}")]
    UnknownAtom(String),

    #[error("operands belong to different algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },

    #[error("element bitmask {bits:#x} out of range for a {atoms}-atom algebra")]
    ElementOutOfRange { bits: usize, atoms: usize },

    #[error("vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("table has {got_rows}x{got_cols} entries, expected {want_rows}x{want_cols}")]
    TableShape {
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("table has {got} entries, expected {want} (2^{m} x 2^{n})")]
    TableSize {
        got: usize,
        want: usize,
        m: usize,
        n: usize,
    },

    #[error("table needs 2^{bits} entries, above the configured cap of 2^{max} (raise the table-size limit if this is intended)")]
    TableTooLarge { bits: usize, max: usize },

    #[error("argument violates the axioms:\n{0}")]
    InvalidArgument(ViolationReport),

    #[error("atom probabilities must be nonnegative and sum to 1 (sum = {sum})")]
    InvalidMeasure { sum: f64 },

    #[error("row {row} of the stochastic matrix must be nonnegative and sum to 1 (sum = {sum})")]
    NonStochasticRow { row: usize, sum: f64 },

    #[error("matrix is {got_rows}x{got_cols} but the signatures have {want_rows} and {want_cols} atoms")]
    MatrixShape {
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },

    #[error("atom pair ({i},{j}) out of range for {m}x{n} atoms (indices are 0-based)")]
    AtomPairOutOfRange { i: usize, j: usize, m: usize, n: usize },

    #[error("{side} atom {atom:?} appears in no atom pair, violating relation condition {condition}")]
    UncoveredAtom {
        side: &'static str,
        atom: String,
        condition: u8,
    },

    #[error("compatibility relation fails validation: {0}")]
    InvalidRelation(String),

    #[error("mass values must lie in [0,1] and sum to 1 (sum = {sum}, min = {min})")]
    InvalidMass { sum: f64, min: f64 },

    #[error("superficial argument cannot be used in a chain of reasoning (min forward entry {min_forward:.3e}, min backward entry {min_backward:.3e})")]
    Superficial { min_forward: f64, min_backward: f64 },

    #[error("argument does not classify as an uncertain {required} argument (min {required} kernel entry {min:.3e})")]
    NotClassified { required: &'static str, min: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
