//! Arguments between two Boolean algebras and their kernel transforms.
//!
//! An argument is a dense table `FP : 𝒜 × ℬ → [0,1]` subject to five
//! axioms: the bottom row and the top column are all ones, the top-bottom
//! corner is zero, and the table is antitone along the domain lattice and
//! monotone along the codomain lattice. The two Möbius-type transforms of
//! the table (over domain supersets, over codomain subsets) decide whether
//! the argument supports implication-style or inference-style reasoning.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraSignature, Element};
use crate::error::{Error, Result};
use crate::table;
use crate::transform::{moebius_subsets_in_place, zeta_subsets_in_place};

/// Absolute cap on `m + n` for a single table (2^26 entries = 512 MiB).
pub const MAX_TABLE_BITS: usize = 26;

/// One failed axiom instance. Witness elements are bitmasks into the
/// relevant signature.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// `FP(F, b) != 1`.
    AxiomI { b: usize, value: f64 },
    /// `FP(a, T) != 1`.
    AxiomII { a: usize, value: f64 },
    /// `FP(T, F) != 0`.
    AxiomIII { value: f64 },
    /// `a_low ⊆ a_high` but `FP(a_low, b) < FP(a_high, b)`.
    AxiomIV { a_low: usize, a_high: usize, b: usize, low_value: f64, high_value: f64 },
    /// `b_low ⊆ b_high` but `FP(a, b_low) > FP(a, b_high)`.
    AxiomV { a: usize, b_low: usize, b_high: usize, low_value: f64, high_value: f64 },
    /// Entry outside `[0,1]` (or not a number).
    Range { a: usize, b: usize, value: f64 },
}

impl Violation {
    pub fn axiom_label(&self) -> &'static str {
        match self {
            Violation::AxiomI { .. } => "i",
            Violation::AxiomII { .. } => "ii",
            Violation::AxiomIII { .. } => "iii",
            Violation::AxiomIV { .. } => "iv",
            Violation::AxiomV { .. } => "v",
            Violation::Range { .. } => "range",
        }
    }
}

/// Every axiom violation found in a table, with enough context to render
/// witnesses by atom name.
#[derive(Clone, Debug)]
pub struct ViolationReport {
    domain: AlgebraSignature,
    codomain: AlgebraSignature,
    violations: Vec<Violation>,
}

impl ViolationReport {
    pub(crate) fn new(
        domain: AlgebraSignature,
        codomain: AlgebraSignature,
        violations: Vec<Violation>,
    ) -> Self {
        Self { domain, codomain, violations }
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }

    pub fn domain(&self) -> &AlgebraSignature {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraSignature {
        &self.codomain
    }

    /// Human description of one violation, with atom-name witnesses.
    pub fn describe(&self, v: &Violation) -> String {
        let d = |bits| self.domain.label(bits);
        let c = |bits| self.codomain.label(bits);
        match *v {
            Violation::AxiomI { b, value } => {
                format!("axiom i: FP(F, {}) = {value} (want 1)", c(b))
            }
            Violation::AxiomII { a, value } => {
                format!("axiom ii: FP({}, T) = {value} (want 1)", d(a))
            }
            Violation::AxiomIII { value } => {
                format!("axiom iii: FP(T, F) = {value} (want 0)")
            }
            Violation::AxiomIV { a_low, a_high, b, low_value, high_value } => format!(
                "axiom iv: FP({}, {}) = {low_value} < FP({}, {}) = {high_value}",
                d(a_low),
                c(b),
                d(a_high),
                c(b),
            ),
            Violation::AxiomV { a, b_low, b_high, low_value, high_value } => format!(
                "axiom v: FP({}, {}) = {low_value} > FP({}, {}) = {high_value}",
                d(a),
                c(b_low),
                d(a),
                c(b_high),
            ),
            Violation::Range { a, b, value } => {
                format!("range: FP({}, {}) = {value} outside [0,1]", d(a), c(b))
            }
        }
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", self.describe(v))?;
        }
        Ok(())
    }
}

/// Checks the five argument axioms plus the `[0,1]` range on a flat
/// row-major table. Monotonicity (axioms iv and v) is checked over covering
/// pairs only, which implies the full conditions by transitivity.
pub fn validate_axioms(
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
    table: &[f64],
    tol: f64,
) -> Result<ViolationReport> {
    let rows = domain.element_count();
    let cols = codomain.element_count();
    if table.len() != rows * cols {
        return Err(Error::TableSize {
            got: table.len(),
            want: rows * cols,
            m: domain.atom_count(),
            n: codomain.atom_count(),
        });
    }

    let mut violations = Vec::new();
    let at = |a: usize, b: usize| table[a * cols + b];
    // Negated comparison so NaN entries count as off-target.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    let off = |value: f64, target: f64| !((value - target).abs() <= tol);

    for b in 0..cols {
        let value = at(0, b);
        if off(value, 1.0) {
            violations.push(Violation::AxiomI { b, value });
        }
    }
    for a in 0..rows {
        let value = at(a, cols - 1);
        if off(value, 1.0) {
            violations.push(Violation::AxiomII { a, value });
        }
    }
    let corner = at(rows - 1, 0);
    if off(corner, 0.0) {
        violations.push(Violation::AxiomIII { value: corner });
    }
    for a in 0..rows {
        for b in 0..cols {
            let value = at(a, b);
            if !(-tol..=1.0 + tol).contains(&value) {
                violations.push(Violation::Range { a, b, value });
            }
        }
    }
    // Axiom iv over covering pairs a_low ⊂ a_low ∪ {atom}.
    for bit in 0..domain.atom_count() {
        let e = 1usize << bit;
        for a_low in 0..rows {
            if a_low & e != 0 {
                continue;
            }
            let a_high = a_low | e;
            for b in 0..cols {
                let low_value = at(a_low, b);
                let high_value = at(a_high, b);
                if low_value < high_value - tol {
                    violations.push(Violation::AxiomIV { a_low, a_high, b, low_value, high_value });
                }
            }
        }
    }
    // Axiom v over covering pairs b_low ⊂ b_low ∪ {atom}.
    for a in 0..rows {
        for bit in 0..codomain.atom_count() {
            let e = 1usize << bit;
            for b_low in 0..cols {
                if b_low & e != 0 {
                    continue;
                }
                let b_high = b_low | e;
                let low_value = at(a, b_low);
                let high_value = at(a, b_high);
                if low_value > high_value + tol {
                    violations.push(Violation::AxiomV { a, b_low, b_high, low_value, high_value });
                }
            }
        }
    }

    Ok(ViolationReport::new(domain.clone(), codomain.clone(), violations))
}

fn check_table_bits(domain: &AlgebraSignature, codomain: &AlgebraSignature) -> Result<()> {
    let bits = domain.atom_count() + codomain.atom_count();
    if bits > MAX_TABLE_BITS {
        return Err(Error::TableTooLarge { bits, max: MAX_TABLE_BITS });
    }
    Ok(())
}

/// A checked argument: table plus signatures, known to satisfy the axioms.
#[derive(Clone, Debug, PartialEq)]
pub struct Argument {
    domain: AlgebraSignature,
    codomain: AlgebraSignature,
    table: Vec<f64>,
}

impl Argument {
    /// Builds a checked argument from a flat row-major table, validating the
    /// axioms at tolerance `tol`.
    pub fn new(
        domain: AlgebraSignature,
        codomain: AlgebraSignature,
        table: Vec<f64>,
        tol: f64,
    ) -> Result<Self> {
        check_table_bits(&domain, &codomain)?;
        let report = validate_axioms(&domain, &codomain, &table, tol)?;
        if !report.is_empty() {
            return Err(Error::InvalidArgument(report));
        }
        Ok(Self { domain, codomain, table })
    }

    /// Constructor for tables that are valid by construction. Debug builds
    /// still validate.
    pub(crate) fn new_unchecked(
        domain: AlgebraSignature,
        codomain: AlgebraSignature,
        table: Vec<f64>,
    ) -> Self {
        debug_assert!(
            validate_axioms(&domain, &codomain, &table, crate::DEFAULT_TOLERANCE)
                .map(|r| r.is_empty())
                .unwrap_or(false),
            "constructed table violates the axioms"
        );
        Self { domain, codomain, table }
    }

    pub fn domain(&self) -> &AlgebraSignature {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraSignature {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.domain.element_count()
    }

    pub fn cols(&self) -> usize {
        self.codomain.element_count()
    }

    /// Table entry by bitmask pair. Panics if a bitmask is out of range.
    pub fn at(&self, a_bits: usize, b_bits: usize) -> f64 {
        assert!(a_bits < self.rows() && b_bits < self.cols());
        self.table[a_bits * self.cols() + b_bits]
    }

    /// Force of proof between two elements, with algebra checking.
    pub fn force(&self, a: &Element<'_>, b: &Element<'_>) -> Result<f64> {
        if a.algebra() != &self.domain {
            return Err(Error::AlgebraMismatch {
                left: a.algebra().to_string(),
                right: self.domain.to_string(),
            });
        }
        if b.algebra() != &self.codomain {
            return Err(Error::AlgebraMismatch {
                left: b.algebra().to_string(),
                right: self.codomain.to_string(),
            });
        }
        Ok(self.at(a.bits(), b.bits()))
    }

    /// Flat row-major view of the table.
    pub fn values(&self) -> &[f64] {
        &self.table
    }

    /// Möbius transform over codomain subsets, row by row. For a valid
    /// argument every row of the result sums to `FP(a, T) = 1`.
    pub fn backward_transform(&self) -> TransformKernel {
        let mut data = self.table.clone();
        table::map_rows(&mut data, self.cols(), moebius_subsets_in_place);
        TransformKernel {
            direction: Direction::Backward,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            table: data,
        }
    }

    /// Möbius transform over domain supersets, column by column. For a valid
    /// argument every column of the result sums to `FP(F, b) = 1`.
    pub fn forward_transform(&self) -> TransformKernel {
        let mut data = self.table.clone();
        table::sweep_rows_sub(&mut data, self.cols());
        TransformKernel {
            direction: Direction::Forward,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            table: data,
        }
    }

    /// Computes both kernels and derives the classification flags at
    /// threshold `entry ≥ -tol`.
    pub fn classify(&self, tol: f64) -> Classification {
        let min_forward = self.forward_transform().min_entry();
        let min_backward = self.backward_transform().min_entry();
        let implication = min_forward >= -tol;
        let inference = min_backward >= -tol;
        Classification {
            implication,
            inference,
            superficial: !implication && !inference,
            discrete: self.is_discrete(tol),
            probative: self.probativity(tol).is_probative(),
            min_forward,
            min_backward,
        }
    }

    /// Whether every table entry is 0 or 1 (within `tol`).
    pub fn is_discrete(&self, tol: f64) -> bool {
        self.table.iter().all(|&v| v.abs() <= tol || (v - 1.0).abs() <= tol)
    }

    /// An argument is probative when some pair of non-extreme elements
    /// carries positive force; only then does it genuinely couple the two
    /// algebras.
    pub fn probativity(&self, tol: f64) -> Probativity {
        let rows = self.rows();
        let cols = self.cols();
        for a in 1..rows.saturating_sub(1) {
            for b in 1..cols.saturating_sub(1) {
                if self.at(a, b) > tol {
                    return Probativity::Probative;
                }
            }
        }
        Probativity::NotProbative
    }

    /// The contrapositive argument from ℬ to 𝒜:
    /// `C(FP)(b, a) = FP(aᶜ, bᶜ)`. Applying it twice gives back `self`.
    pub fn contrapositive(&self) -> Argument {
        let rows = self.rows();
        let cols = self.cols();
        let mut out = vec![0.0; self.table.len()];
        for b in 0..cols {
            let bc = (cols - 1) ^ b;
            for a in 0..rows {
                let ac = (rows - 1) ^ a;
                out[b * rows + a] = self.table[ac * cols + bc];
            }
        }
        Argument::new_unchecked(self.codomain.clone(), self.domain.clone(), out)
    }

    pub fn to_data(&self) -> ArgumentData {
        ArgumentData {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            table: self.table.chunks_exact(self.cols()).map(|r| r.to_vec()).collect(),
        }
    }
}

/// Raw argument payload as it appears on disk: not yet checked against the
/// axioms. `table` is `2^m` rows of `2^n` entries, bitmask order both ways.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArgumentData {
    pub domain: AlgebraSignature,
    pub codomain: AlgebraSignature,
    pub table: Vec<Vec<f64>>,
}

impl ArgumentData {
    fn flat(&self) -> Result<Vec<f64>> {
        let want_rows = self.domain.element_count();
        let want_cols = self.codomain.element_count();
        let got_rows = self.table.len();
        let got_cols = self.table.first().map_or(0, Vec::len);
        if got_rows != want_rows || self.table.iter().any(|r| r.len() != want_cols) {
            return Err(Error::TableShape { got_rows, got_cols, want_rows, want_cols });
        }
        Ok(self.table.iter().flatten().copied().collect())
    }

    /// Runs axiom validation without constructing a checked argument.
    pub fn validate(&self, tol: f64) -> Result<ViolationReport> {
        check_table_bits(&self.domain, &self.codomain)?;
        validate_axioms(&self.domain, &self.codomain, &self.flat()?, tol)
    }

    /// Converts to a checked [`Argument`], failing with the violation report
    /// if any axiom fails.
    pub fn into_argument(self, tol: f64) -> Result<Argument> {
        check_table_bits(&self.domain, &self.codomain)?;
        let flat = self.flat()?;
        Argument::new(self.domain, self.codomain, flat, tol)
    }
}

/// Which transform a kernel holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// A transform of an argument table, viewed as a family of mass functions:
/// backward kernels are row-stochastic, forward kernels column-stochastic,
/// up to the sign slack that classification tolerates.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformKernel {
    direction: Direction,
    domain: AlgebraSignature,
    codomain: AlgebraSignature,
    table: Vec<f64>,
}

impl TransformKernel {
    pub(crate) fn from_parts(
        direction: Direction,
        domain: AlgebraSignature,
        codomain: AlgebraSignature,
        table: Vec<f64>,
    ) -> Self {
        debug_assert_eq!(table.len(), domain.element_count() * codomain.element_count());
        Self { direction, domain, codomain, table }
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn domain(&self) -> &AlgebraSignature {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraSignature {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.domain.element_count()
    }

    pub fn cols(&self) -> usize {
        self.codomain.element_count()
    }

    pub fn at(&self, a_bits: usize, b_bits: usize) -> f64 {
        assert!(a_bits < self.rows() && b_bits < self.cols());
        self.table[a_bits * self.cols() + b_bits]
    }

    pub fn values(&self) -> &[f64] {
        &self.table
    }

    pub fn min_entry(&self) -> f64 {
        self.table.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// The sums that must equal 1: row sums for backward kernels, column
    /// sums for forward kernels.
    pub fn unit_sums(&self) -> Vec<f64> {
        let cols = self.cols();
        match self.direction {
            Direction::Backward => self
                .table
                .chunks_exact(cols)
                .map(|row| row.iter().sum())
                .collect(),
            Direction::Forward => (0..cols)
                .map(|c| self.table.iter().skip(c).step_by(cols).sum())
                .collect(),
        }
    }

    pub fn max_unit_sum_deviation(&self) -> f64 {
        self.unit_sums()
            .into_iter()
            .map(|s| (s - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Inverts the transform back to a table, then validates. A backward
    /// kernel reconstructs by zeta over codomain subsets, a forward kernel
    /// by zeta over domain supersets.
    pub fn reconstruct(&self, tol: f64) -> Reconstruction {
        let mut data = self.table.clone();
        let cols = self.cols();
        match self.direction {
            Direction::Backward => table::map_rows(&mut data, cols, zeta_subsets_in_place),
            Direction::Forward => table::sweep_rows_add(&mut data, cols),
        }
        let report = validate_axioms(&self.domain, &self.codomain, &data, tol)
            .expect("kernel table has matching shape");
        if report.is_empty() {
            Reconstruction::Valid(Argument {
                domain: self.domain.clone(),
                codomain: self.codomain.clone(),
                table: data,
            })
        } else {
            Reconstruction::Rejected {
                data: ArgumentData {
                    domain: self.domain.clone(),
                    codomain: self.codomain.clone(),
                    table: data.chunks_exact(cols).map(|r| r.to_vec()).collect(),
                },
                report,
            }
        }
    }

    pub fn to_data(&self) -> KernelData {
        KernelData {
            direction: self.direction,
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            table: self.table.chunks_exact(self.cols()).map(|r| r.to_vec()).collect(),
        }
    }
}

/// Kernel payload on disk: an argument payload plus a direction tag.
/// Entries are unconstrained, so loading only checks the shape.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelData {
    pub direction: Direction,
    pub domain: AlgebraSignature,
    pub codomain: AlgebraSignature,
    pub table: Vec<Vec<f64>>,
}

impl KernelData {
    pub fn into_kernel(self) -> Result<TransformKernel> {
        let want_rows = self.domain.element_count();
        let want_cols = self.codomain.element_count();
        let got_rows = self.table.len();
        let got_cols = self.table.first().map_or(0, Vec::len);
        if got_rows != want_rows || self.table.iter().any(|r| r.len() != want_cols) {
            return Err(Error::TableShape { got_rows, got_cols, want_rows, want_cols });
        }
        Ok(TransformKernel {
            direction: self.direction,
            domain: self.domain,
            codomain: self.codomain,
            table: self.table.into_iter().flatten().collect(),
        })
    }
}

/// Result of inverting a kernel: either a checked argument, or the raw
/// table together with everything wrong with it.
#[derive(Clone, Debug)]
pub enum Reconstruction {
    Valid(Argument),
    Rejected { data: ArgumentData, report: ViolationReport },
}

impl Reconstruction {
    pub fn is_valid(&self) -> bool {
        matches!(self, Reconstruction::Valid(_))
    }

    pub fn as_argument(&self) -> Option<&Argument> {
        match self {
            Reconstruction::Valid(arg) => Some(arg),
            Reconstruction::Rejected { .. } => None,
        }
    }

    /// The reconstructed table regardless of validity, plus the (possibly
    /// empty) violation report.
    pub fn into_parts(self) -> (ArgumentData, ViolationReport) {
        match self {
            Reconstruction::Valid(arg) => {
                let report =
                    ViolationReport::new(arg.domain.clone(), arg.codomain.clone(), Vec::new());
                (arg.to_data(), report)
            }
            Reconstruction::Rejected { data, report } => (data, report),
        }
    }
}

/// Derived classification of an argument.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Classification {
    /// Forward kernel nonnegative: supports implication-style reasoning.
    pub implication: bool,
    /// Backward kernel nonnegative: supports inference-style reasoning.
    pub inference: bool,
    /// Neither kernel nonnegative; excluded from composition.
    pub superficial: bool,
    /// Every table entry is 0 or 1.
    pub discrete: bool,
    pub probative: bool,
    pub min_forward: f64,
    pub min_backward: f64,
}

/// Whether any strictly interior pair carries positive force. When not,
/// the two algebras are tangential with respect to the argument; when yes,
/// entangled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Probativity {
    Probative,
    NotProbative,
}

impl Probativity {
    pub fn is_probative(self) -> bool {
        matches!(self, Probativity::Probative)
    }

    /// Adjective for the algebra pair under this argument.
    pub fn coupling(self) -> &'static str {
        match self {
            Probativity::Probative => "entangled",
            Probativity::NotProbative => "tangential",
        }
    }
}
