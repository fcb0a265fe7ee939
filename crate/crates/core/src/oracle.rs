//! Brute-force reference implementations of the transforms, classification,
//! and composition.
//!
//! Everything here evaluates the defining sums literally, entry by entry,
//! and shares no code with the fast paths: these are the ground truth the
//! property suite compares against. Exponentially slower, intentionally.

use rand::Rng;

use crate::algebra::AlgebraSignature;
use crate::argument::{Argument, Classification, Probativity, Violation, ViolationReport};
use crate::error::Result;

/// `Σ_{B̄ ⊆ B} (−1)^{n(B)−n(B̄)} FP(A, B̄)`, the backward kernel entry at
/// `(a, b)`, as a literal alternating sum over all subsets of `b`.
pub fn naive_backward(arg: &Argument, a: usize, b: usize) -> f64 {
    let nb = b.count_ones();
    let mut total = 0.0;
    for sub in 0..arg.cols() {
        if sub & !b != 0 {
            continue;
        }
        let sign = if (nb - sub.count_ones()).is_multiple_of(2) { 1.0 } else { -1.0 };
        total += sign * arg.at(a, sub);
    }
    total
}

/// `Σ_{Ā ⊇ A} (−1)^{n(Ā)−n(A)} FP(Ā, B)`, the forward kernel entry at
/// `(a, b)`, as a literal alternating sum over all supersets of `a`.
pub fn naive_forward(arg: &Argument, a: usize, b: usize) -> f64 {
    let na = a.count_ones();
    let mut total = 0.0;
    for sup in 0..arg.rows() {
        if a & !sup != 0 {
            continue;
        }
        let sign = if (sup.count_ones() - na).is_multiple_of(2) { 1.0 } else { -1.0 };
        total += sign * arg.at(sup, b);
    }
    total
}

/// Full backward kernel table computed entrywise by [`naive_backward`].
pub fn naive_backward_kernel(arg: &Argument) -> Vec<f64> {
    let cols = arg.cols();
    (0..arg.rows() * cols)
        .map(|i| naive_backward(arg, i / cols, i % cols))
        .collect()
}

/// Full forward kernel table computed entrywise by [`naive_forward`].
pub fn naive_forward_kernel(arg: &Argument) -> Vec<f64> {
    let cols = arg.cols();
    (0..arg.rows() * cols)
        .map(|i| naive_forward(arg, i / cols, i % cols))
        .collect()
}

/// Composed backward kernel entry via the double sum over the middle
/// algebra, using the naive per-entry kernels on both factors.
pub fn naive_compose_backward(first: &Argument, second: &Argument, a: usize, c: usize) -> f64 {
    (0..first.cols())
        .map(|b| naive_backward(first, a, b) * naive_backward(second, b, c))
        .sum()
}

/// Composed forward kernel entry, same shape as [`naive_compose_backward`].
pub fn naive_compose_forward(first: &Argument, second: &Argument, a: usize, c: usize) -> f64 {
    (0..first.cols())
        .map(|b| naive_forward(first, a, b) * naive_forward(second, b, c))
        .sum()
}

/// Axiom check over *all* comparable pairs, not just covering ones.
// Boundary checks use negated comparisons so NaN entries fail them.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn naive_validate(
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
    table: &[f64],
    tol: f64,
) -> Result<ViolationReport> {
    let rows = domain.element_count();
    let cols = codomain.element_count();
    if table.len() != rows * cols {
        return Err(crate::error::Error::TableSize {
            got: table.len(),
            want: rows * cols,
            m: domain.atom_count(),
            n: codomain.atom_count(),
        });
    }
    let at = |a: usize, b: usize| table[a * cols + b];
    let mut violations = Vec::new();
    for b in 0..cols {
        let value = at(0, b);
        if !((value - 1.0).abs() <= tol) {
            violations.push(Violation::AxiomI { b, value });
        }
    }
    for a in 0..rows {
        let value = at(a, cols - 1);
        if !((value - 1.0).abs() <= tol) {
            violations.push(Violation::AxiomII { a, value });
        }
    }
    if !(at(rows - 1, 0).abs() <= tol) {
        violations.push(Violation::AxiomIII { value: at(rows - 1, 0) });
    }
    for a in 0..rows {
        for b in 0..cols {
            let value = at(a, b);
            if !(-tol..=1.0 + tol).contains(&value) {
                violations.push(Violation::Range { a, b, value });
            }
        }
    }
    for a_low in 0..rows {
        for a_high in 0..rows {
            if a_low & !a_high != 0 || a_low == a_high {
                continue;
            }
            for b in 0..cols {
                if at(a_low, b) < at(a_high, b) - tol {
                    violations.push(Violation::AxiomIV {
                        a_low,
                        a_high,
                        b,
                        low_value: at(a_low, b),
                        high_value: at(a_high, b),
                    });
                }
            }
        }
    }
    for a in 0..rows {
        for b_low in 0..cols {
            for b_high in 0..cols {
                if b_low & !b_high != 0 || b_low == b_high {
                    continue;
                }
                if at(a, b_low) > at(a, b_high) + tol {
                    violations.push(Violation::AxiomV {
                        a,
                        b_low,
                        b_high,
                        low_value: at(a, b_low),
                        high_value: at(a, b_high),
                    });
                }
            }
        }
    }
    Ok(ViolationReport::new(domain.clone(), codomain.clone(), violations))
}

/// Classification computed entirely from the naive kernels and direct scans.
pub fn naive_classify(arg: &Argument, tol: f64) -> Classification {
    let mut min_forward = f64::INFINITY;
    let mut min_backward = f64::INFINITY;
    for a in 0..arg.rows() {
        for b in 0..arg.cols() {
            min_forward = min_forward.min(naive_forward(arg, a, b));
            min_backward = min_backward.min(naive_backward(arg, a, b));
        }
    }
    let implication = min_forward >= -tol;
    let inference = min_backward >= -tol;
    let discrete = (0..arg.rows())
        .all(|a| (0..arg.cols()).all(|b| arg.at(a, b).abs() <= tol || (arg.at(a, b) - 1.0).abs() <= tol));
    let mut probative = Probativity::NotProbative;
    for a in 0..arg.rows() {
        for b in 0..arg.cols() {
            let extreme =
                a == 0 || a == arg.rows() - 1 || b == 0 || b == arg.cols() - 1;
            if !extreme && arg.at(a, b) > tol {
                probative = Probativity::Probative;
            }
        }
    }
    Classification {
        implication,
        inference,
        superficial: !implication && !inference,
        discrete,
        probative: probative.is_probative(),
        min_forward,
        min_backward,
    }
}

/// Outcome of the combinatorial-identity checks backing the transform
/// nonnegativity arguments.
#[derive(Clone, Debug)]
pub struct CombinatorialReport {
    /// Orders `n` whose alternating binomial sum failed to vanish (exact
    /// integer arithmetic; must stay empty).
    pub binomial_failures: Vec<u32>,
    /// Smallest Möbius-over-subsets value seen across all random additive
    /// probability vectors.
    pub min_moebius: f64,
    pub trials: u32,
}

impl CombinatorialReport {
    pub fn passed(&self) -> bool {
        self.binomial_failures.is_empty() && self.min_moebius >= -1e-12
    }
}

/// Verifies that alternating binomial sums vanish for `1 ≤ n ≤ n_max`
/// (exactly, in integers) and that the Möbius transform of random additive
/// probability vectors on up to 5 atoms never goes meaningfully negative.
pub fn combinatorial_checks(rng: &mut impl Rng, n_max: u32, trials: u32) -> CombinatorialReport {
    assert!(n_max <= 12, "binomial check covers n <= 12");

    let mut binomial_failures = Vec::new();
    for n in 1..=n_max {
        // Pascal row for C(n, k).
        let mut row = vec![1i128];
        for _ in 0..n {
            let mut next = vec![1i128];
            for w in row.windows(2) {
                next.push(w[0] + w[1]);
            }
            next.push(1);
            row = next;
        }
        let sum: i128 = row
            .iter()
            .enumerate()
            .map(|(k, c)| if (n as usize - k).is_multiple_of(2) { *c } else { -*c })
            .sum();
        if sum != 0 {
            binomial_failures.push(n);
        }
    }

    let mut min_moebius = f64::INFINITY;
    for _ in 0..trials {
        let atoms = rng.random_range(1..=5usize);
        let mut probs: Vec<f64> = (0..atoms).map(|_| rng.random::<f64>()).collect();
        let total: f64 = probs.iter().sum();
        for p in &mut probs {
            *p /= total;
        }
        min_moebius = min_moebius.min(min_measure_moebius(&probs));
    }

    CombinatorialReport { binomial_failures, min_moebius, trials }
}

/// Smallest Möbius-over-subsets value of the additive measure with the
/// given atom probabilities, by literal alternating sums.
pub fn min_measure_moebius(atom_probs: &[f64]) -> f64 {
    let len = 1usize << atom_probs.len();
    let p_of = |bits: usize| -> f64 {
        atom_probs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, p)| p)
            .sum()
    };
    let mut min = f64::INFINITY;
    for set in 0..len {
        let mut value = 0.0;
        for sub in 0..len {
            if sub & !set != 0 {
                continue;
            }
            let sign = if (set.count_ones() - sub.count_ones()).is_multiple_of(2) { 1.0 } else { -1.0 };
            value += sign * p_of(sub);
        }
        min = min.min(value);
    }
    min
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::identity_argument;
    use crate::fixtures;

    #[test]
    fn naive_backward_known_values() {
        let product = fixtures::product_2x2();
        assert!((naive_backward(&product, 0b11, 0b01) - 0.18).abs() <= 1e-12);
        // Single-term sum at B = F.
        for a in 0..4 {
            assert_eq!(naive_backward(&product, a, 0), product.at(a, 0));
        }
        let small = fixtures::product_1x2();
        assert!(naive_backward(&small, 1, 0b11).abs() <= 1e-12);
    }

    #[test]
    fn naive_forward_known_values() {
        let proto = fixtures::prototypical_xy();
        assert!((naive_forward(&proto, 0b10, 0b10) - 0.25).abs() <= 1e-12);
        // Single-term sum at A = T.
        for b in 0..4 {
            assert_eq!(naive_forward(&proto, 0b11, b), proto.at(0b11, b));
        }
        let product = fixtures::product_2x2();
        assert!((naive_forward(&product, 0b01, 0b01) - 0.12).abs() <= 1e-12);
    }

    #[test]
    fn naive_compose_boundaries() {
        let arg = fixtures::product_1x2();
        let id = identity_argument(arg.domain());
        for a in 0..2 {
            for c in 0..4 {
                let composed = naive_compose_backward(&id, &arg, a, c);
                assert!((composed - naive_backward(&arg, a, c)).abs() <= 1e-12);
            }
        }
        // The F row of a composed backward kernel is the delta at F.
        for c in 0..4 {
            let v = naive_compose_backward(&arg, &identity_argument(arg.codomain()), 0, c);
            let want = if c == 0 { 1.0 } else { 0.0 };
            assert!((v - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn naive_classify_matches_fixture_expectations() {
        let cls = naive_classify(&fixtures::superficial_2x2(), 1e-9);
        assert!(cls.superficial);
        let cls = naive_classify(&fixtures::prototypical_xy(), 1e-9);
        assert!(cls.implication && cls.inference && cls.probative);
    }

    #[test]
    fn naive_validate_checks_all_pairs() {
        // The fixture set is clean under the exhaustive check too.
        for arg in [
            fixtures::prototypical_xy(),
            fixtures::product_2x2(),
            fixtures::relation_argument_2x2(),
            fixtures::superficial_2x2(),
        ] {
            let report =
                naive_validate(arg.domain(), arg.codomain(), arg.values(), 1e-9).unwrap();
            assert!(report.is_empty(), "{report}");
        }
        // A monotonicity break shows up in both the covering-pair check and
        // the all-pairs check.
        let alg = crate::AlgebraSignature::new(["x", "y"]).unwrap();
        #[rustfmt::skip]
        let table = vec![
            1.0, 1.0, 1.0, 1.0,
            0.2, 0.2, 1.0, 1.0,
            0.2, 0.2, 1.0, 1.0,
            0.0, 0.9, 0.9, 1.0,
        ];
        let naive = naive_validate(&alg, &alg, &table, 1e-9).unwrap();
        let fast = crate::validate_axioms(&alg, &alg, &table, 1e-9).unwrap();
        assert!(!naive.is_empty() && !fast.is_empty());
        assert!(naive.iter().any(|v| v.axiom_label() == "iv"));
    }

    #[test]
    fn binomials_vanish_and_uniform_measure_is_nonnegative() {
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(7);
        let report = combinatorial_checks(&mut rng, 12, 50);
        assert!(report.passed(), "{report:?}");

        // Uniform measure on three atoms: Möbius is 1/3 on singletons, 0
        // above, 0 at F.
        let third = 1.0 / 3.0;
        let min = min_measure_moebius(&[third, third, third]);
        assert!(min >= -1e-12);
    }

    #[test]
    fn alternating_binomial_row_examples() {
        // n = 1: −1 + 1; n = 4: 1 − 4 + 6 − 4 + 1.
        let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(1);
        let report = combinatorial_checks(&mut rng, 4, 1);
        assert!(report.binomial_failures.is_empty());
    }
}
