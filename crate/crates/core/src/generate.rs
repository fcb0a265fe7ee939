//! Random generators for measures, matrices, relations, and valid
//! arguments. Used heavily by the property and acceptance suites; seeded
//! RNGs keep those runs reproducible.

use rand::Rng;

use crate::algebra::AlgebraSignature;
use crate::argument::Argument;
use crate::construct::{
    argument_from_relation, product_argument, prototypical, relation_from_atom_pairs,
    CompatibilityRelation, ProbabilityMeasure, RowStochasticMatrix,
};
use crate::mass::MassFunction;
use crate::DEFAULT_TOLERANCE;

/// Random probability measure: normalized positive atom weights.
pub fn measure<R: Rng>(rng: &mut R, algebra: &AlgebraSignature) -> ProbabilityMeasure {
    let mut probs: Vec<f64> = (0..algebra.atom_count())
        .map(|_| rng.random::<f64>() + 1e-6)
        .collect();
    let total: f64 = probs.iter().sum();
    for p in &mut probs {
        *p /= total;
    }
    ProbabilityMeasure::new(algebra.clone(), probs).expect("normalized weights form a measure")
}

/// Random row-stochastic matrix with strictly positive entries.
pub fn stochastic_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> RowStochasticMatrix {
    let rows: Vec<Vec<f64>> = (0..rows)
        .map(|_| {
            let mut row: Vec<f64> = (0..cols).map(|_| rng.random::<f64>() + 1e-6).collect();
            let total: f64 = row.iter().sum();
            for p in &mut row {
                *p /= total;
            }
            row
        })
        .collect();
    RowStochasticMatrix::new(rows).expect("normalized rows are stochastic")
}

/// Random atom-generated relation with every atom covered on both sides.
pub fn atom_relation<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> CompatibilityRelation {
    let m = domain.atom_count();
    let n = codomain.atom_count();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if rng.random_bool(0.4) {
                pairs.push((i, j));
            }
        }
    }
    for i in 0..m {
        if !pairs.iter().any(|&(pi, _)| pi == i) {
            pairs.push((i, rng.random_range(0..n)));
        }
    }
    for j in 0..n {
        if !pairs.iter().any(|&(_, pj)| pj == j) {
            pairs.push((rng.random_range(0..m), j));
        }
    }
    relation_from_atom_pairs(domain, codomain, &pairs).expect("all atoms covered")
}

/// Random discrete valid argument: the indicator of a random set of seed
/// pairs closed downward in the domain and upward in the codomain, with the
/// forced boundary rows added and the `(T, F)` corner kept out.
pub fn discrete_argument<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    let rows = domain.element_count();
    let cols = codomain.element_count();
    let mut table = vec![0.0; rows * cols];
    let seeds = rng.random_range(1..=domain.atom_count() + codomain.atom_count());
    for _ in 0..seeds {
        let a0 = rng.random_range(0..rows);
        let b0 = rng.random_range(0..cols);
        if a0 == rows - 1 && b0 == 0 {
            continue;
        }
        for a in 0..rows {
            if a & !a0 != 0 {
                continue;
            }
            for b in 0..cols {
                if b0 & !b == 0 {
                    table[a * cols + b] = 1.0;
                }
            }
        }
    }
    table[..cols].fill(1.0);
    for a in 0..rows {
        table[a * cols + cols - 1] = 1.0;
    }
    Argument::new(domain.clone(), codomain.clone(), table, DEFAULT_TOLERANCE)
        .expect("monotone indicator closure satisfies the axioms")
}

fn base_argument<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    let square = domain == codomain;
    match rng.random_range(0..5u8) {
        0 => rng_matrix(rng, domain, codomain),
        1 => argument_from_relation(&atom_relation(rng, domain, codomain))
            .expect("generated relations validate"),
        2 => discrete_argument(rng, domain, codomain),
        3 if square => prototypical(&measure(rng, domain)),
        // Flip a valid argument from the reverse orientation.
        _ => base_argument_reversed(rng, domain, codomain),
    }
}

fn rng_matrix<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    product_argument(
        &stochastic_matrix(rng, domain.atom_count(), codomain.atom_count()),
        domain,
        codomain,
    )
    .expect("matrix shape matches the signatures")
}

fn base_argument_reversed<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    let reversed = match rng.random_range(0..3u8) {
        0 => rng_matrix(rng, codomain, domain),
        1 => argument_from_relation(&atom_relation(rng, codomain, domain))
            .expect("generated relations validate"),
        _ => discrete_argument(rng, codomain, domain),
    };
    reversed.contrapositive()
}

/// Random valid argument: one to three base family members combined with
/// axiom-preserving operations (convex mixtures, entrywise products, min,
/// max). Covers implication-only, inference-only, both, and superficial
/// cases.
pub fn valid_argument<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    let mut acc = base_argument(rng, domain, codomain);
    for _ in 0..rng.random_range(0..=2u8) {
        let other = base_argument(rng, domain, codomain);
        let combined: Vec<f64> = match rng.random_range(0..4u8) {
            0 => {
                let w = rng.random::<f64>();
                acc.values()
                    .iter()
                    .zip(other.values())
                    .map(|(x, y)| w * x + (1.0 - w) * y)
                    .collect()
            }
            1 => acc.values().iter().zip(other.values()).map(|(x, y)| x * y).collect(),
            2 => acc.values().iter().zip(other.values()).map(|(x, y)| x.min(*y)).collect(),
            _ => acc.values().iter().zip(other.values()).map(|(x, y)| x.max(*y)).collect(),
        };
        acc = Argument::new(domain.clone(), codomain.clone(), combined, DEFAULT_TOLERANCE)
            .expect("combinations preserve the axioms");
    }
    acc
}

/// Random argument guaranteed to classify as an uncertain inference
/// argument.
pub fn inference_argument<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    if domain == codomain && rng.random_bool(0.3) {
        return prototypical(&measure(rng, domain));
    }
    match rng.random_range(0..2u8) {
        0 => rng_matrix(rng, domain, codomain),
        _ => argument_from_relation(&atom_relation(rng, codomain, domain))
            .expect("generated relations validate")
            .contrapositive(),
    }
}

/// Random argument guaranteed to classify as an uncertain implication
/// argument.
pub fn implication_argument<R: Rng>(
    rng: &mut R,
    domain: &AlgebraSignature,
    codomain: &AlgebraSignature,
) -> Argument {
    if domain == codomain && rng.random_bool(0.3) {
        return prototypical(&measure(rng, domain));
    }
    match rng.random_range(0..2u8) {
        0 => rng_matrix(rng, domain, codomain),
        _ => argument_from_relation(&atom_relation(rng, domain, codomain))
            .expect("generated relations validate"),
    }
}

/// Random mass function; with `normalized`, the least element gets zero.
pub fn mass_function<R: Rng>(
    rng: &mut R,
    algebra: &AlgebraSignature,
    normalized: bool,
) -> MassFunction {
    let mut mass: Vec<f64> = (0..algebra.element_count())
        .map(|_| rng.random::<f64>())
        .collect();
    if normalized {
        mass[0] = 0.0;
    }
    let total: f64 = mass.iter().sum();
    for v in &mut mass {
        *v /= total;
    }
    MassFunction::new(algebra.clone(), mass).expect("normalized weights form a mass function")
}
