//! Property suite: transform inversion, fast-versus-naive agreement,
//! kernel sum laws, contrapositive duality, and the mass-calculus laws,
//! all on randomized inputs with seeded generators.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use forceproof::algebra::AlgebraSignature;
use forceproof::argument::Direction;
use forceproof::generate;
use forceproof::mass::{
    compose_backward, compose_forward, propagate_backward, propagate_forward,
    propagate_through_kernel, MassFunction,
};
use forceproof::oracle;
use forceproof::transform::{
    moebius_over_subsets, moebius_over_supersets, zeta_over_subsets, zeta_over_supersets,
};
use forceproof::{DEFAULT_TOLERANCE as TOL, ORACLE_TOLERANCE};

// ---------------------------------------------------------------------
// Test-side oracle: literal O(4^m) double loops over the subset lattice.
// Deliberately distinct from both the library fast paths and the library
// oracle module.
// ---------------------------------------------------------------------

fn direct_transform(values: &[f64], supersets: bool, signed: bool) -> Vec<f64> {
    let len = values.len();
    (0..len)
        .map(|s| {
            let mut total = 0.0;
            for (t, &value) in values.iter().enumerate() {
                let related = if supersets { s & !t == 0 } else { t & !s == 0 };
                if !related {
                    continue;
                }
                let dist = (s ^ t).count_ones();
                let sign = if signed && dist % 2 == 1 { -1.0 } else { 1.0 };
                total += sign * value;
            }
            total
        })
        .collect()
}

fn assert_close(a: &[f64], b: &[f64], tol: f64, what: &str) {
    assert_eq!(a.len(), b.len(), "{what}: length mismatch");
    for (i, (x, y)) in a.iter().zip(b).enumerate() {
        assert!((x - y).abs() <= tol, "{what}: index {i}: {x} vs {y}");
    }
}

fn small_algebra(prefix: &str, atoms: usize) -> AlgebraSignature {
    AlgebraSignature::numbered(prefix, atoms).unwrap()
}

// ---------------------------------------------------------------------
// Lattice transforms
// ---------------------------------------------------------------------

proptest! {
    #[test]
    fn zeta_and_moebius_invert_each_other(
        m in 0usize..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let v: Vec<f64> = (0..1usize << m).map(|_| rand::Rng::random::<f64>(&mut rng)).collect();

        let sub = zeta_over_subsets(&moebius_over_subsets(&v).unwrap()).unwrap();
        assert_close(&sub, &v, 1e-12, "zeta∘moebius over subsets");
        let sub = moebius_over_subsets(&zeta_over_subsets(&v).unwrap()).unwrap();
        assert_close(&sub, &v, 1e-12, "moebius∘zeta over subsets");

        let sup = zeta_over_supersets(&moebius_over_supersets(&v).unwrap()).unwrap();
        assert_close(&sup, &v, 1e-12, "zeta∘moebius over supersets");
        let sup = moebius_over_supersets(&zeta_over_supersets(&v).unwrap()).unwrap();
        assert_close(&sup, &v, 1e-12, "moebius∘zeta over supersets");
    }

    #[test]
    fn fast_transforms_match_direct_sums_on_dyadic_vectors(
        m in 3usize..=4,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let v: Vec<f64> = (0..1usize << m)
            .map(|_| 0.25 * rand::Rng::random_range(&mut rng, 0..=4) as f64)
            .collect();
        // Dyadic values make every sum exact, so equality is literal.
        prop_assert_eq!(moebius_over_subsets(&v).unwrap(), direct_transform(&v, false, true));
        prop_assert_eq!(zeta_over_subsets(&v).unwrap(), direct_transform(&v, false, false));
        prop_assert_eq!(moebius_over_supersets(&v).unwrap(), direct_transform(&v, true, true));
        prop_assert_eq!(zeta_over_supersets(&v).unwrap(), direct_transform(&v, true, false));
    }

    #[test]
    fn measure_moebius_is_nonnegative(
        m in 1usize..=5,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let alg = small_algebra("p", m);
        let p = generate::measure(&mut rng, &alg);
        let mass = moebius_over_subsets(&p.element_values()).unwrap();
        let min = mass.iter().copied().fold(f64::INFINITY, f64::min);
        prop_assert!(min >= -1e-12, "negative Möbius value {min} for an additive measure");
    }
}

/// Exhaustive fast-versus-direct agreement over every quarter-valued vector
/// on two atoms (5^4 = 625 vectors), exact.
#[test]
fn dyadic_two_atom_vectors_exhaustive() {
    let levels = [0.0, 0.25, 0.5, 0.75, 1.0];
    for a in levels {
        for b in levels {
            for c in levels {
                for d in levels {
                    let v = [a, b, c, d];
                    assert_eq!(moebius_over_subsets(&v).unwrap(), direct_transform(&v, false, true));
                    assert_eq!(zeta_over_subsets(&v).unwrap(), direct_transform(&v, false, false));
                    assert_eq!(moebius_over_supersets(&v).unwrap(), direct_transform(&v, true, true));
                    assert_eq!(zeta_over_supersets(&v).unwrap(), direct_transform(&v, true, false));
                }
            }
        }
    }
}

// ---------------------------------------------------------------------
// Argument kernels
// ---------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_sums_and_boundary_lines(
        m in 1usize..=4,
        n in 1usize..=4,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let domain = small_algebra("a", m);
        let codomain = small_algebra("b", n);
        let arg = generate::valid_argument(&mut rng, &domain, &codomain);

        let backward = arg.backward_transform();
        for sum in backward.unit_sums() {
            prop_assert!((sum - 1.0).abs() <= 1e-9, "backward row sum {sum}");
        }
        let forward = arg.forward_transform();
        for sum in forward.unit_sums() {
            prop_assert!((sum - 1.0).abs() <= 1e-9, "forward column sum {sum}");
        }

        // Backward F row is the delta at F; forward T column the delta at T.
        for b in 0..arg.cols() {
            let want = if b == 0 { 1.0 } else { 0.0 };
            prop_assert!((backward.at(0, b) - want).abs() <= 1e-12);
        }
        for a in 0..arg.rows() {
            let want = if a == arg.rows() - 1 { 1.0 } else { 0.0 };
            prop_assert!((forward.at(a, arg.cols() - 1) - want).abs() <= 1e-12);
        }
    }

    #[test]
    fn kernels_match_naive_oracle(
        m in 1usize..=3,
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let arg = generate::valid_argument(
            &mut rng,
            &small_algebra("a", m),
            &small_algebra("b", n),
        );
        let backward = arg.backward_transform();
        let forward = arg.forward_transform();
        for a in 0..arg.rows() {
            for b in 0..arg.cols() {
                prop_assert!((backward.at(a, b) - oracle::naive_backward(&arg, a, b)).abs() <= ORACLE_TOLERANCE);
                prop_assert!((forward.at(a, b) - oracle::naive_forward(&arg, a, b)).abs() <= ORACLE_TOLERANCE);
            }
        }
    }

    #[test]
    fn contrapositive_duality_and_swap(
        m in 1usize..=3,
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let arg = generate::valid_argument(
            &mut rng,
            &small_algebra("a", m),
            &small_algebra("b", n),
        );
        let c = arg.contrapositive();
        prop_assert_eq!(&c.contrapositive(), &arg);

        // Forward kernel of C(FP) is the backward kernel of FP with both
        // coordinates complemented and the table transposed.
        let c_forward = c.forward_transform();
        let backward = arg.backward_transform();
        let rows = arg.rows();
        let cols = arg.cols();
        for b in 0..cols {
            for a in 0..rows {
                let lhs = c_forward.at(b, a);
                let rhs = backward.at((rows - 1) ^ a, (cols - 1) ^ b);
                prop_assert!((lhs - rhs).abs() <= 1e-12, "({a},{b}): {lhs} vs {rhs}");
            }
        }

        let cls = arg.classify(TOL);
        let ccls = c.classify(TOL);
        prop_assert_eq!(cls.implication, ccls.inference);
        prop_assert_eq!(cls.inference, ccls.implication);
        prop_assert_eq!(cls.superficial, ccls.superficial);
    }

    #[test]
    fn discrete_arguments_have_discrete_kernels(
        m in 1usize..=4,
        n in 1usize..=4,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let arg = generate::discrete_argument(
            &mut rng,
            &small_algebra("a", m),
            &small_algebra("b", n),
        );
        let cls = arg.classify(TOL);
        prop_assert!(cls.discrete);
        if cls.implication {
            for v in arg.forward_transform().values() {
                prop_assert!(v.abs() <= 1e-12 || (v - 1.0).abs() <= 1e-12, "forward entry {v}");
            }
        }
        if cls.inference {
            for v in arg.backward_transform().values() {
                prop_assert!(v.abs() <= 1e-12 || (v - 1.0).abs() <= 1e-12, "backward entry {v}");
            }
        }
    }

    #[test]
    fn reconstruction_inverts_both_kernels(
        m in 1usize..=3,
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let arg = generate::valid_argument(
            &mut rng,
            &small_algebra("a", m),
            &small_algebra("b", n),
        );
        for kernel in [arg.backward_transform(), arg.forward_transform()] {
            let rec = kernel.reconstruct(TOL);
            let back = rec.as_argument().expect("round trip of a valid argument stays valid");
            assert_close(back.values(), arg.values(), 1e-12, "reconstruction");
        }
    }
}

// ---------------------------------------------------------------------
// Mass calculus
// ---------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn propagation_conserves_mass(
        m in 1usize..=4,
        n in 1usize..=4,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let domain = small_algebra("a", m);
        let codomain = small_algebra("b", n);

        let arg = generate::inference_argument(&mut rng, &domain, &codomain);
        let mass = generate::mass_function(&mut rng, &domain, false);
        let out = propagate_forward(&mass, &arg, TOL).unwrap();
        prop_assert!((out.values().iter().sum::<f64>() - 1.0).abs() <= 1e-9);

        let arg = generate::implication_argument(&mut rng, &domain, &codomain);
        let mass = generate::mass_function(&mut rng, &codomain, false);
        let out = propagate_backward(&mass, &arg, TOL).unwrap();
        prop_assert!((out.values().iter().sum::<f64>() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn normalized_kernel_rows_give_normalized_output(
        m in 1usize..=3,
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let domain = small_algebra("a", m);
        let codomain = small_algebra("b", n);
        let arg = generate::inference_argument(&mut rng, &domain, &codomain);
        let mass = generate::mass_function(&mut rng, &domain, false);
        let kernel = arg.backward_transform();
        // Where mass sits on rows whose kernel puts nothing at F, the
        // output is normalized whether or not the input is.
        let feeding_f = (0..kernel.rows())
            .any(|a| mass.value(a) > 1e-12 && kernel.at(a, 0).abs() > 1e-12);
        if !feeding_f {
            let out = propagate_forward(&mass, &arg, TOL).unwrap();
            prop_assert!(out.is_normalized(), "mass at F: {}", out.value(0));
        }
    }

    #[test]
    fn composition_is_functorial_and_associative(
        m in 1usize..=3,
        n in 1usize..=3,
        k in 1usize..=3,
        l in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let alg_a = small_algebra("a", m);
        let alg_b = small_algebra("b", n);
        let alg_c = small_algebra("c", k);
        let alg_d = small_algebra("d", l);

        let ab = generate::inference_argument(&mut rng, &alg_a, &alg_b);
        let bc = generate::inference_argument(&mut rng, &alg_b, &alg_c);
        let cd = generate::inference_argument(&mut rng, &alg_c, &alg_d);
        let mass = generate::mass_function(&mut rng, &alg_a, false);

        // Functoriality on a 2-chain.
        let composed = compose_backward(&ab, &bc, TOL).unwrap();
        let sequential =
            propagate_forward(&propagate_forward(&mass, &ab, TOL).unwrap(), &bc, TOL).unwrap();
        let direct = propagate_through_kernel(&mass, &composed.kernel, TOL).unwrap();
        assert_close(direct.values(), sequential.values(), 1e-9, "2-chain functoriality");

        // Associativity on the 3-chain, through the raw kernel tables.
        let left = compose_backward(&ab, &bc, TOL).unwrap().kernel;
        let k_cd = cd.backward_transform();
        let k_ab = ab.backward_transform();
        let right = compose_backward(&bc, &cd, TOL).unwrap().kernel;

        let left_assoc = forceproof::mass::kernel_product(&left, &k_cd).unwrap();
        let right_assoc = forceproof::mass::kernel_product(&k_ab, &right).unwrap();
        assert_close(left_assoc.values(), right_assoc.values(), 1e-9, "associativity");

        // 3-chain functoriality.
        let three_step = propagate_forward(&propagate_forward(
            &propagate_forward(&mass, &ab, TOL).unwrap(), &bc, TOL).unwrap(), &cd, TOL).unwrap();
        let through = propagate_through_kernel(&mass, &left_assoc, TOL).unwrap();
        assert_close(through.values(), three_step.values(), 1e-9, "3-chain functoriality");
    }

    #[test]
    fn identity_kernels_are_units(
        m in 1usize..=3,
        n in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let domain = small_algebra("a", m);
        let codomain = small_algebra("b", n);
        let arg = generate::inference_argument(&mut rng, &domain, &codomain);
        let id_left = forceproof::identity_argument(&domain);
        let id_right = forceproof::identity_argument(&codomain);

        let left = compose_backward(&id_left, &arg, TOL).unwrap().kernel;
        let right = compose_backward(&arg, &id_right, TOL).unwrap().kernel;
        let own = arg.backward_transform();
        assert_close(left.values(), own.values(), 1e-12, "left identity");
        assert_close(right.values(), own.values(), 1e-12, "right identity");

        let arg = generate::implication_argument(&mut rng, &domain, &codomain);
        let own = arg.forward_transform();
        let left = compose_forward(&id_left, &arg, TOL).unwrap().kernel;
        let right = compose_forward(&arg, &id_right, TOL).unwrap().kernel;
        assert_close(left.values(), own.values(), 1e-12, "left identity (forward)");
        assert_close(right.values(), own.values(), 1e-12, "right identity (forward)");
    }

    #[test]
    fn composed_reconstructions_keep_partial_axioms(
        m in 1usize..=3,
        n in 1usize..=3,
        k in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ab = generate::inference_argument(&mut rng, &small_algebra("a", m), &small_algebra("b", n));
        let bc = generate::inference_argument(&mut rng, &small_algebra("b", n), &small_algebra("c", k));
        let composed = compose_backward(&ab, &bc, TOL).unwrap();

        prop_assert!(composed.kernel.min_entry() >= -1e-9);
        let (data, report) = composed.reconstruction.into_parts();
        // Axioms i, ii, v always hold for reconstructed compositions;
        // iii and iv may fail for unnormalized kernels and are only reported.
        for v in report.iter() {
            let label = v.axiom_label();
            prop_assert!(label == "iii" || label == "iv", "unexpected violation: {label}");
        }
        // The F row is all ones and every row ends at 1 (axioms i and ii).
        for (i, row) in data.table.iter().enumerate() {
            prop_assert!((row[row.len() - 1] - 1.0).abs() <= 1e-9, "row {i} at T");
            if i == 0 {
                for v in row {
                    prop_assert!((v - 1.0).abs() <= 1e-9, "F row entry {v}");
                }
            }
        }
    }

    #[test]
    fn contrapositive_composition_duality(
        m in 1usize..=3,
        n in 1usize..=3,
        k in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let alg_a = small_algebra("a", m);
        let alg_b = small_algebra("b", n);
        let alg_c = small_algebra("c", k);
        // Product arguments are both implication and inference, so both
        // composition directions are available on either side of the flip.
        let ab = generate::implication_argument(&mut rng, &alg_a, &alg_b);
        let bc = generate::implication_argument(&mut rng, &alg_b, &alg_c);
        let backward = compose_backward(&ab, &bc, TOL);
        let flipped = compose_forward(&bc.contrapositive(), &ab.contrapositive(), TOL);
        if let (Ok(backward), Ok(flipped)) = (backward, flipped) {
            // Forward-composing the contrapositives is the backward
            // composition with both coordinates complemented, transposed.
            let rows = alg_a.element_count();
            let cols = alg_c.element_count();
            for c in 0..cols {
                for a in 0..rows {
                    let lhs = flipped.kernel.at(c, a);
                    let rhs = backward.kernel.at((rows - 1) ^ a, (cols - 1) ^ c);
                    prop_assert!((lhs - rhs).abs() <= 1e-12, "({a},{c}): {lhs} vs {rhs}");
                }
            }
        }
    }

    #[test]
    fn forward_composition_mirrors_backward_propagation(
        m in 1usize..=3,
        n in 1usize..=3,
        k in 1usize..=3,
        seed in any::<u64>(),
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let alg_a = small_algebra("a", m);
        let alg_b = small_algebra("b", n);
        let alg_c = small_algebra("c", k);
        let ab = generate::implication_argument(&mut rng, &alg_a, &alg_b);
        let bc = generate::implication_argument(&mut rng, &alg_b, &alg_c);
        let mass = generate::mass_function(&mut rng, &alg_c, false);

        let composed = compose_forward(&ab, &bc, TOL).unwrap();
        prop_assert_eq!(composed.kernel.direction(), Direction::Forward);
        let sequential =
            propagate_backward(&propagate_backward(&mass, &bc, TOL).unwrap(), &ab, TOL).unwrap();
        let direct = propagate_through_kernel(&mass, &composed.kernel, TOL).unwrap();
        assert_close(direct.values(), sequential.values(), 1e-9, "forward functoriality");

        // Column sums of the composed forward kernel stay 1.
        prop_assert!(composed.kernel.max_unit_sum_deviation() <= 1e-9);
    }
}

/// Superficial arguments still transform and reconstruct, but refuse
/// composition in both directions.
#[test]
fn superficial_arguments_are_data_but_not_morphisms() {
    let sup = forceproof::fixtures::superficial_2x2();
    let id = forceproof::identity_argument(sup.domain());
    assert!(compose_backward(&sup, &id, TOL).is_err());
    assert!(compose_forward(&sup, &id, TOL).is_err());
    let mass = MassFunction::point(sup.domain().clone(), 0b11).unwrap();
    assert!(propagate_forward(&mass, &sup, TOL).is_err());
    assert!(propagate_backward(&mass, &sup, TOL).is_err());
    // The kernels themselves are still inspectable data.
    let backward = sup.backward_transform();
    assert!((backward.min_entry() - -0.6).abs() <= 1e-12);
    let (_, report) = backward.reconstruct(TOL).into_parts();
    assert!(report.is_empty(), "zeta of its own Möbius is the original table");
}

/// Propagating a basis of point masses through an argument reads off the
/// backward kernel rows exactly.
#[test]
fn point_mass_basis_reads_kernel_rows() {
    let mut rng = StdRng::seed_from_u64(11);
    let domain = small_algebra("a", 3);
    let codomain = small_algebra("b", 2);
    let arg = generate::inference_argument(&mut rng, &domain, &codomain);
    let kernel = arg.backward_transform();
    for a in 0..arg.rows() {
        let m = MassFunction::point(domain.clone(), a).unwrap();
        let out = propagate_forward(&m, &arg, TOL).unwrap();
        for b in 0..arg.cols() {
            assert!((out.value(b) - kernel.at(a, b)).abs() <= 1e-12);
        }
    }
}
