//! Constructor families: probability-measure arguments on a single algebra,
//! product arguments from row-stochastic atom matrices, compatibility
//! relations with their induced discrete arguments, and the identity.

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraSignature;
use crate::argument::Argument;
use crate::error::{Error, Result};

/// Tolerance on measure and stochastic-row sums.
pub const ROW_SUM_TOLERANCE: f64 = 1e-12;

/// An additive probability measure on a powerset algebra, specified by its
/// atom probabilities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MeasureWire")]
pub struct ProbabilityMeasure {
    algebra: AlgebraSignature,
    atom_probs: Vec<f64>,
}

#[derive(Deserialize)]
struct MeasureWire {
    algebra: AlgebraSignature,
    atom_probs: Vec<f64>,
}

impl TryFrom<MeasureWire> for ProbabilityMeasure {
    type Error = Error;
    fn try_from(wire: MeasureWire) -> Result<Self> {
        ProbabilityMeasure::new(wire.algebra, wire.atom_probs)
    }
}

impl ProbabilityMeasure {
    pub fn new(algebra: AlgebraSignature, atom_probs: Vec<f64>) -> Result<Self> {
        let sum: f64 = atom_probs.iter().sum();
        if atom_probs.len() != algebra.atom_count()
            || atom_probs.iter().any(|&p| p.is_nan() || p < 0.0)
            || (sum - 1.0).abs() > ROW_SUM_TOLERANCE
        {
            return Err(Error::InvalidMeasure { sum });
        }
        Ok(Self { algebra, atom_probs })
    }

    pub fn algebra(&self) -> &AlgebraSignature {
        &self.algebra
    }

    pub fn atom_probs(&self) -> &[f64] {
        &self.atom_probs
    }

    /// `p(A)` for an element bitmask: the sum of its atom probabilities.
    pub fn of_bits(&self, bits: usize) -> f64 {
        self.atom_probs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, p)| p)
            .sum()
    }

    /// `p(A)` for every element, in bitmask order.
    pub fn element_values(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.algebra.element_count()];
        for bits in 1..out.len() {
            let low = bits.trailing_zeros() as usize;
            out[bits] = out[bits & (bits - 1)] + self.atom_probs[low];
        }
        out
    }
}

/// The single-algebra argument induced by a probability measure:
/// `FP(A1, A2) = p(A1ᶜ ∨ A2)`. Always both an uncertain implication and an
/// uncertain inference argument.
pub fn prototypical(measure: &ProbabilityMeasure) -> Argument {
    let alg = measure.algebra().clone();
    let n = alg.element_count();
    let p = measure.element_values();
    let mut table = vec![0.0; n * n];
    for a1 in 0..n {
        let a1c = (n - 1) ^ a1;
        for a2 in 0..n {
            table[a1 * n + a2] = p[a1c | a2];
        }
    }
    Argument::new_unchecked(alg.clone(), alg, table)
}

/// A nonnegative matrix whose rows each sum to 1; row `i`, column `j` gives
/// the force carried from domain atom `i` to codomain atom `j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixWire")]
pub struct RowStochasticMatrix {
    rows: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct MatrixWire {
    rows: Vec<Vec<f64>>,
}

impl TryFrom<MatrixWire> for RowStochasticMatrix {
    type Error = Error;
    fn try_from(wire: MatrixWire) -> Result<Self> {
        RowStochasticMatrix::new(wire.rows)
    }
}

impl RowStochasticMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::NonStochasticRow { row: 0, sum: 0.0 });
        }
        for (i, row) in rows.iter().enumerate() {
            let sum: f64 = row.iter().sum();
            if row.len() != cols || row.iter().any(|&p| p.is_nan() || p < 0.0) || (sum - 1.0).abs() > ROW_SUM_TOLERANCE
            {
                return Err(Error::NonStochasticRow { row: i, sum });
            }
        }
        Ok(Self { rows })
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.rows[0].len()
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    /// `Σ_{j ∈ B} p_{i,j}` for every codomain bitmask `B`, for atom `i`.
    fn singleton_row(&self, i: usize) -> Vec<f64> {
        let mut out = vec![0.0; 1 << self.col_count()];
        for bits in 1..out.len() {
            let low = bits.trailing_zeros() as usize;
            out[bits] = out[bits & (bits - 1)] + self.rows[i][low];
        }
        out
    }
}

fn check_matrix_shape(
    matrix: &RowStochasticMatrix,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Result<()> {
    if matrix.row_count() != domain.atom_count() || matrix.col_count() != codomain.atom_count() {
        return Err(Error::MatrixShape {
            got_rows: matrix.row_count(),
            got_cols: matrix.col_count(),
            want_rows: domain.atom_count(),
            want_cols: codomain.atom_count(),
        });
    }
    Ok(())
}

/// Product-family argument: `FP({aᵢ}, B) = Σ_{bⱼ ∈ B} p_{i,j}` on singletons
/// and `FP(A, B) = Π_{aᵢ ∈ A} FP({aᵢ}, B)` elsewhere (empty product = 1, so
/// the bottom row is all ones). Always an uncertain implication argument,
/// and an uncertain inference argument as well.
pub fn product_argument(
    matrix: &RowStochasticMatrix,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Result<Argument> {
    check_matrix_shape(matrix, domain, codomain)?;
    let rows = domain.element_count();
    let cols = codomain.element_count();
    let singleton: Vec<Vec<f64>> = (0..matrix.row_count()).map(|i| matrix.singleton_row(i)).collect();

    let mut table = vec![0.0; rows * cols];
    table[..cols].fill(1.0);
    for a in 1..rows {
        let low = a.trailing_zeros() as usize;
        let rest = a & (a - 1);
        for b in 0..cols {
            table[a * cols + b] = table[rest * cols + b] * singleton[low][b];
        }
    }
    Ok(Argument::new_unchecked(domain.clone(), codomain.clone(), table))
}

/// Closed form for the forward transform of a product argument:
/// `FP(A, B) · Π_{aᵢ ∈ Aᶜ} (1 − FP({aᵢ}, B))`.
pub fn product_forward_closed_form(
    matrix: &RowStochasticMatrix,
    a_bits: usize,
    b_bits: usize,
) -> f64 {
    let m = matrix.row_count();
    let mut value = 1.0;
    for i in 0..m {
        let s: f64 = (0..matrix.col_count())
            .filter(|j| b_bits >> j & 1 == 1)
            .map(|j| matrix.at(i, j))
            .sum();
        value *= if a_bits >> i & 1 == 1 { s } else { 1.0 - s };
    }
    value
}

/// Validation mode for compatibility relations. `Generated` holds the meet
/// distribution laws (conditions 6 and 8) to their forward direction only,
/// which is exactly what atom-generated relations satisfy; `Strict` demands
/// them as biconditionals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationMode {
    Strict,
    Generated,
}

/// A dense boolean relation between the elements of two algebras.
#[derive(Clone, Debug, PartialEq)]
pub struct CompatibilityRelation {
    domain: AlgebraSignature,
    codomain: AlgebraSignature,
    pairs: Vec<bool>,
}

impl CompatibilityRelation {
    /// Builds from an explicit element-level table (row-major over domain
    /// bitmasks). No conditions are checked here; run [`validate_relation`].
    pub fn from_dense(
        domain: AlgebraSignature,
        codomain: AlgebraSignature,
        pairs: Vec<bool>,
    ) -> Result<Self> {
        let want = domain.element_count() * codomain.element_count();
        if pairs.len() != want {
            return Err(Error::TableSize {
                got: pairs.len(),
                want,
                m: domain.atom_count(),
                n: codomain.atom_count(),
            });
        }
        Ok(Self { domain, codomain, pairs })
    }

    pub fn domain(&self) -> &AlgebraSignature {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraSignature {
        &self.codomain
    }

    pub fn at(&self, a_bits: usize, b_bits: usize) -> bool {
        self.pairs[a_bits * self.codomain.element_count() + b_bits]
    }

    /// The related element pairs, as bitmask tuples.
    pub fn related_pairs(&self) -> Vec<(usize, usize)> {
        let cols = self.codomain.element_count();
        self.pairs
            .iter()
            .enumerate()
            .filter(|(_, &v)| v)
            .map(|(i, _)| (i / cols, i % cols))
            .collect()
    }
}

/// Builds the relation `A CR B ⇔ ∃(i,j): aᵢ ∈ A and bⱼ ∈ B` from atom index
/// pairs (0-based). Every atom on each side must appear in some pair,
/// otherwise the extreme-element conditions 2 or 4 cannot hold.
pub fn relation_from_atom_pairs(
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
    atom_pairs: &[(usize, usize)],
) -> Result<CompatibilityRelation> {
    let m = domain.atom_count();
    let n = codomain.atom_count();
    for &(i, j) in atom_pairs {
        if i >= m || j >= n {
            return Err(Error::AtomPairOutOfRange { i, j, m, n });
        }
    }
    for i in 0..m {
        if !atom_pairs.iter().any(|&(pi, _)| pi == i) {
            return Err(Error::UncoveredAtom {
                side: "domain",
                atom: domain.atoms()[i].clone(),
                condition: 4,
            });
        }
    }
    for j in 0..n {
        if !atom_pairs.iter().any(|&(_, pj)| pj == j) {
            return Err(Error::UncoveredAtom {
                side: "codomain",
                atom: codomain.atoms()[j].clone(),
                condition: 2,
            });
        }
    }

    // reachable[i] = codomain atoms related to domain atom i
    let mut reachable = vec![0usize; m];
    for &(i, j) in atom_pairs {
        reachable[i] |= 1 << j;
    }
    let rows = domain.element_count();
    let cols = codomain.element_count();
    // image[a] = union of reachable sets over atoms of a
    let mut image = vec![0usize; rows];
    for a in 1..rows {
        let low = a.trailing_zeros() as usize;
        image[a] = image[a & (a - 1)] | reachable[low];
    }
    let mut pairs = vec![false; rows * cols];
    for a in 0..rows {
        for b in 0..cols {
            pairs[a * cols + b] = b & image[a] != 0;
        }
    }
    Ok(CompatibilityRelation {
        domain: domain.clone(),
        codomain: codomain.clone(),
        pairs,
    })
}

/// One failed relation condition with its witnesses.
#[derive(Clone, Debug, PartialEq)]
pub enum RelationViolation {
    /// 1: `F` related to some `B ≠ F`.
    BottomRelated { b: usize },
    /// 2: `T` unrelated to some `B ≠ F`.
    TopUnrelated { b: usize },
    /// 3: some `A ≠ F` related to `F`.
    RelatedToBottom { a: usize },
    /// 4: some `A ≠ F` unrelated to `T`.
    UnrelatedToTop { a: usize },
    /// 5: `A CR (B1 ∨ B2)` disagrees with `A CR B1 or A CR B2`.
    JoinCodomain { a: usize, b1: usize, b2: usize },
    /// 6: meet law in the codomain fails (direction depends on mode).
    MeetCodomain { a: usize, b1: usize, b2: usize },
    /// 7: `(A1 ∨ A2) CR B` disagrees with `A1 CR B or A2 CR B`.
    JoinDomain { a1: usize, a2: usize, b: usize },
    /// 8: meet law in the domain fails (direction depends on mode).
    MeetDomain { a1: usize, a2: usize, b: usize },
}

impl RelationViolation {
    pub fn condition(&self) -> u8 {
        match self {
            RelationViolation::BottomRelated { .. } => 1,
            RelationViolation::TopUnrelated { .. } => 2,
            RelationViolation::RelatedToBottom { .. } => 3,
            RelationViolation::UnrelatedToTop { .. } => 4,
            RelationViolation::JoinCodomain { .. } => 5,
            RelationViolation::MeetCodomain { .. } => 6,
            RelationViolation::JoinDomain { .. } => 7,
            RelationViolation::MeetDomain { .. } => 8,
        }
    }
}

/// All condition violations found in a relation.
#[derive(Clone, Debug)]
pub struct RelationReport {
    domain: AlgebraSignature,
    codomain: AlgebraSignature,
    mode: RelationMode,
    violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &RelationViolation> {
        self.violations.iter()
    }

    pub fn mode(&self) -> RelationMode {
        self.mode
    }

    pub fn describe(&self, v: &RelationViolation) -> String {
        let d = |bits| self.domain.label(bits);
        let c = |bits| self.codomain.label(bits);
        match *v {
            RelationViolation::BottomRelated { b } => {
                format!("condition 1: F CR {} holds but must not", c(b))
            }
            RelationViolation::TopUnrelated { b } => {
                format!("condition 2: T CR {} fails but must hold", c(b))
            }
            RelationViolation::RelatedToBottom { a } => {
                format!("condition 3: {} CR F holds but must not", d(a))
            }
            RelationViolation::UnrelatedToTop { a } => {
                format!("condition 4: {} CR T fails but must hold", d(a))
            }
            RelationViolation::JoinCodomain { a, b1, b2 } => format!(
                "condition 5: {} CR {} disagrees with ({} CR {} or {} CR {})",
                d(a),
                c(b1 | b2),
                d(a),
                c(b1),
                d(a),
                c(b2),
            ),
            RelationViolation::MeetCodomain { a, b1, b2 } => format!(
                "condition 6: {} CR {} disagrees with ({} CR {} and {} CR {})",
                d(a),
                c(b1 & b2),
                d(a),
                c(b1),
                d(a),
                c(b2),
            ),
            RelationViolation::JoinDomain { a1, a2, b } => format!(
                "condition 7: {} CR {} disagrees with ({} CR {} or {} CR {})",
                d(a1 | a2),
                c(b),
                d(a1),
                c(b),
                d(a2),
                c(b),
            ),
            RelationViolation::MeetDomain { a1, a2, b } => format!(
                "condition 8: {} CR {} disagrees with ({} CR {} and {} CR {})",
                d(a1 & a2),
                c(b),
                d(a1),
                c(b),
                d(a2),
                c(b),
            ),
        }
    }
}

impl std::fmt::Display for RelationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
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

/// Checks the eight compatibility conditions.
///
/// The extreme-element conditions pin the `F` row and column everywhere
/// except the immaterial `(F, F)` corner, which either convention may set.
/// The join laws (5, 7) are biconditionals in both modes. The meet laws
/// (6, 8) are biconditionals only in strict mode; generated mode checks
/// that a related meet implies both operands are related, the direction
/// that atom-generated relations actually satisfy — for any two disjoint
/// non-`F` elements related to a common `B`, the reverse direction would
/// force `F CR B` and contradict condition 1.
pub fn validate_relation(rel: &CompatibilityRelation, mode: RelationMode) -> RelationReport {
    let rows = rel.domain.element_count();
    let cols = rel.codomain.element_count();
    let mut violations = Vec::new();

    for b in 1..cols {
        if rel.at(0, b) {
            violations.push(RelationViolation::BottomRelated { b });
        }
        if !rel.at(rows - 1, b) {
            violations.push(RelationViolation::TopUnrelated { b });
        }
    }
    for a in 1..rows {
        if rel.at(a, 0) {
            violations.push(RelationViolation::RelatedToBottom { a });
        }
        if !rel.at(a, cols - 1) {
            violations.push(RelationViolation::UnrelatedToTop { a });
        }
    }

    for a in 0..rows {
        for b1 in 0..cols {
            for b2 in b1..cols {
                let both = rel.at(a, b1) && rel.at(a, b2);
                let either = rel.at(a, b1) || rel.at(a, b2);
                if rel.at(a, b1 | b2) != either {
                    violations.push(RelationViolation::JoinCodomain { a, b1, b2 });
                }
                let meet_related = rel.at(a, b1 & b2);
                let meet_bad = match mode {
                    RelationMode::Strict => meet_related != both,
                    RelationMode::Generated => meet_related && !both,
                };
                if meet_bad {
                    violations.push(RelationViolation::MeetCodomain { a, b1, b2 });
                }
            }
        }
    }
    for a1 in 0..rows {
        for a2 in a1..rows {
            for b in 0..cols {
                let both = rel.at(a1, b) && rel.at(a2, b);
                let either = rel.at(a1, b) || rel.at(a2, b);
                if rel.at(a1 | a2, b) != either {
                    violations.push(RelationViolation::JoinDomain { a1, a2, b });
                }
                let meet_related = rel.at(a1 & a2, b);
                let meet_bad = match mode {
                    RelationMode::Strict => meet_related != both,
                    RelationMode::Generated => meet_related && !both,
                };
                if meet_bad {
                    violations.push(RelationViolation::MeetDomain { a1, a2, b });
                }
            }
        }
    }

    RelationReport {
        domain: rel.domain.clone(),
        codomain: rel.codomain.clone(),
        mode,
        violations,
    }
}

/// The discrete argument induced by a compatibility relation:
/// `FP(A, B) = 1` when `A CR B` holds and `A CR Bᶜ` does not, or when
/// `A = F`; 0 otherwise. Requires the relation to pass generated-mode
/// validation; the result is discrete and an uncertain implication argument.
pub fn argument_from_relation(rel: &CompatibilityRelation) -> Result<Argument> {
    let report = validate_relation(rel, RelationMode::Generated);
    if !report.is_empty() {
        return Err(Error::InvalidRelation(report.to_string()));
    }
    let rows = rel.domain.element_count();
    let cols = rel.codomain.element_count();
    let mut table = vec![0.0; rows * cols];
    table[..cols].fill(1.0);
    for a in 1..rows {
        for b in 0..cols {
            let bc = (cols - 1) ^ b;
            if rel.at(a, b) && !rel.at(a, bc) {
                table[a * cols + b] = 1.0;
            }
        }
    }
    Ok(Argument::new_unchecked(rel.domain.clone(), rel.codomain.clone(), table))
}

/// The identity argument on an algebra: `FP(A, B) = 1` iff `A ⊆ B`. Its
/// backward kernel is the identity matrix, so it is the unit of
/// composition and propagates every mass function to itself.
pub fn identity_argument(algebra: &AlgebraSignature) -> Argument {
    let n = algebra.element_count();
    let mut table = vec![0.0; n * n];
    for a in 0..n {
        for b in 0..n {
            if a & !b == 0 {
                table[a * n + b] = 1.0;
            }
        }
    }
    Argument::new_unchecked(algebra.clone(), algebra.clone(), table)
}
