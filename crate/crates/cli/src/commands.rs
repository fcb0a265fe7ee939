//! Command implementations.

use std::path::Path;

use serde_json::{json, Value};

use forceproof::construct::{argument_from_relation, relation_from_atom_pairs};
use forceproof::{
    belief_from_mass, compose_backward, compose_forward, oracle, propagate_backward,
    propagate_forward, propagate_through_kernel, validate_relation, AlgebraSignature, Argument,
    CompatibilityRelation, Composition, Direction, Error, MassFunction, ProbabilityMeasure,
    RowStochasticMatrix, TransformKernel, ORACLE_TOLERANCE,
};

use crate::files::{self, MatrixFile, MeasureFile, RelationFile};
use crate::render;
use crate::{Cli, CliError, CmdResult, Command, DirectionArg, Format};

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Validate { argument } => cmd_validate(cli, argument),
        Command::Classify { argument } => cmd_classify(cli, argument),
        Command::Transform { argument, direction } => cmd_transform(cli, argument, *direction),
        Command::Make { prototypical, product, relation, identity } => {
            cmd_make(cli, prototypical.as_deref(), product.as_deref(), relation.as_deref(), identity.as_deref())
        }
        Command::Compose { first, second, direction } => cmd_compose(cli, first, second, *direction),
        Command::Propagate { mass, argument, direction } => {
            cmd_propagate(cli, mass, argument, *direction)
        }
        Command::Demo => cmd_demo(cli),
    }
}

fn check_bits(cli: &Cli, domain: &AlgebraSignature, codomain: &AlgebraSignature) -> Result<(), CliError> {
    let bits = domain.atom_count() + codomain.atom_count();
    if bits > cli.max_table_bits as usize {
        return Err(CliError::Domain(format!(
            "table needs 2^{bits} entries, above --max-table-bits {}",
            cli.max_table_bits
        )));
    }
    Ok(())
}

fn load_checked_argument(cli: &Cli, path: &Path) -> Result<Argument, CliError> {
    let data = files::load_argument_data(path)?;
    check_bits(cli, &data.domain, &data.codomain)?;
    data.into_argument(cli.tolerance).map_err(CliError::from)
}

fn cmd_validate(cli: &Cli, path: &Path) -> CmdResult {
    let data = files::load_argument_data(path)?;
    check_bits(cli, &data.domain, &data.codomain)?;
    let report = data.validate(cli.tolerance)?;
    match cli.format {
        Format::Json => render::print_json(&json!({
            "valid": report.is_empty(),
            "violations": render::violations_json(&report),
        })),
        Format::Table => println!("{report}"),
    }
    Ok(if report.is_empty() { 0 } else { 1 })
}

/// Largest fast-versus-naive divergence across both kernels.
fn oracle_divergence(arg: &Argument) -> f64 {
    let backward = arg.backward_transform();
    let forward = arg.forward_transform();
    let mut worst = 0.0f64;
    for a in 0..arg.rows() {
        for b in 0..arg.cols() {
            worst = worst.max((backward.at(a, b) - oracle::naive_backward(arg, a, b)).abs());
            worst = worst.max((forward.at(a, b) - oracle::naive_forward(arg, a, b)).abs());
        }
    }
    worst
}

fn oracle_gate(divergence: f64) -> Result<(), CliError> {
    if divergence > ORACLE_TOLERANCE {
        return Err(CliError::Domain(format!(
            "oracle cross-check failed: fast and brute-force kernels diverge by {divergence:.3e}"
        )));
    }
    Ok(())
}

fn cmd_classify(cli: &Cli, path: &Path) -> CmdResult {
    let arg = load_checked_argument(cli, path)?;
    let cls = arg.classify(cli.tolerance);
    let coupling = arg.probativity(cli.tolerance).coupling();

    let mut report = serde_json::to_value(cls).expect("classification serializes");
    let obj = report.as_object_mut().expect("object");
    obj.insert("coupling".into(), json!(coupling));
    if cli.oracle {
        let divergence = oracle_divergence(&arg);
        oracle_gate(divergence)?;
        obj.insert("oracle_max_divergence".into(), json!(divergence));
    }

    match cli.format {
        Format::Json => render::print_json(&report),
        Format::Table => {
            println!("implication:  {}", cls.implication);
            println!("inference:    {}", cls.inference);
            println!("superficial:  {}", cls.superficial);
            println!("discrete:     {}", cls.discrete);
            println!("probative:    {} ({coupling})", cls.probative);
            println!("min forward:  {:.3e}", cls.min_forward);
            println!("min backward: {:.3e}", cls.min_backward);
        }
    }
    Ok(0)
}

fn kernel_json(kernel: &TransformKernel, tolerance: f64) -> Value {
    let sums = kernel.unit_sums();
    let max_deviation = kernel.max_unit_sum_deviation();
    let mut value = serde_json::to_value(kernel.to_data()).expect("kernel serializes");
    value.as_object_mut().expect("object").insert(
        "sum_check".into(),
        json!({
            "unit": match kernel.direction() { Direction::Backward => "rows", Direction::Forward => "columns" },
            "sums": sums,
            "max_deviation": max_deviation,
            "within_tolerance": max_deviation <= tolerance,
        }),
    );
    value
}

fn cmd_transform(cli: &Cli, path: &Path, direction: DirectionArg) -> CmdResult {
    let arg = load_checked_argument(cli, path)?;
    let kernel = match direction {
        DirectionArg::Forward => arg.forward_transform(),
        DirectionArg::Backward => arg.backward_transform(),
    };
    if cli.oracle {
        oracle_gate(oracle_divergence(&arg))?;
    }
    match cli.format {
        Format::Json => render::print_json(&kernel_json(&kernel, cli.tolerance)),
        Format::Table => {
            println!("{} kernel", kernel.direction());
            print!("{}", render::grid(kernel.domain(), kernel.codomain(), kernel.values()));
            println!(
                "max |sum - 1| = {:.3e} over {}",
                kernel.max_unit_sum_deviation(),
                match kernel.direction() { Direction::Backward => "rows", Direction::Forward => "columns" },
            );
        }
    }
    Ok(0)
}

fn print_argument(cli: &Cli, arg: &Argument) {
    match cli.format {
        Format::Json => {
            let value = serde_json::to_value(arg.to_data()).expect("argument serializes");
            render::print_json(&value);
        }
        Format::Table => {
            print!("{}", render::grid(arg.domain(), arg.codomain(), arg.values()));
        }
    }
}

fn cmd_make(
    cli: &Cli,
    prototypical: Option<&Path>,
    product: Option<&Path>,
    relation: Option<&Path>,
    identity: Option<&Path>,
) -> CmdResult {
    let arg = if let Some(path) = prototypical {
        let file: MeasureFile = files::load_json(path)?;
        check_bits(cli, &file.algebra, &file.algebra)?;
        let measure = ProbabilityMeasure::new(file.algebra, file.atom_probs)?;
        forceproof::prototypical(&measure)
    } else if let Some(path) = product {
        let file: MatrixFile = files::load_json(path)?;
        let matrix = RowStochasticMatrix::new(file.rows)?;
        let domain = files::signature_or_numbered(file.domain, "a", matrix.row_count())?;
        let codomain = files::signature_or_numbered(file.codomain, "b", matrix.col_count())?;
        check_bits(cli, &domain, &codomain)?;
        forceproof::product_argument(&matrix, &domain, &codomain)?
    } else if let Some(path) = relation {
        let rel = load_relation(cli, path)?;
        argument_from_relation(&rel)?
    } else if let Some(path) = identity {
        let algebra: AlgebraSignature = files::load_json(path)?;
        check_bits(cli, &algebra, &algebra)?;
        forceproof::identity_argument(&algebra)
    } else {
        unreachable!("clap enforces exactly one source")
    };
    print_argument(cli, &arg);
    Ok(0)
}

fn bits_needed(max_mask: usize) -> usize {
    let mut atoms = 1;
    while 1usize << atoms <= max_mask {
        atoms += 1;
    }
    atoms
}

fn load_relation(cli: &Cli, path: &Path) -> Result<CompatibilityRelation, CliError> {
    let file: RelationFile = files::load_json(path)?;
    let mode = file.mode.unwrap_or_else(|| cli.relation_mode.into());
    let rel = if let Some(atom_pairs) = file.atom_pairs {
        if atom_pairs.is_empty() {
            return Err(CliError::Domain("relation has no atom pairs".into()));
        }
        let max_i = atom_pairs.iter().map(|p| p.0).max().unwrap_or(0);
        let max_j = atom_pairs.iter().map(|p| p.1).max().unwrap_or(0);
        let domain = files::signature_or_numbered(file.domain, "a", max_i + 1)?;
        let codomain = files::signature_or_numbered(file.codomain, "b", max_j + 1)?;
        check_bits(cli, &domain, &codomain)?;
        relation_from_atom_pairs(&domain, &codomain, &atom_pairs)?
    } else if let Some(pairs) = file.pairs {
        let max_a = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        let max_b = pairs.iter().map(|p| p.1).max().unwrap_or(0);
        let domain = files::signature_or_numbered(file.domain, "a", bits_needed(max_a))?;
        let codomain = files::signature_or_numbered(file.codomain, "b", bits_needed(max_b))?;
        check_bits(cli, &domain, &codomain)?;
        let rows = domain.element_count();
        let cols = codomain.element_count();
        let mut dense = vec![false; rows * cols];
        for (a, b) in pairs {
            if a >= rows || b >= cols {
                return Err(CliError::Domain(format!(
                    "element pair ({a},{b}) out of range for {rows}x{cols} elements"
                )));
            }
            dense[a * cols + b] = true;
        }
        CompatibilityRelation::from_dense(domain, codomain, dense)?
    } else {
        return Err(CliError::Input(format!(
            "{}: relation file needs either \"atom_pairs\" or \"pairs\"",
            path.display()
        )));
    };

    let report = validate_relation(&rel, mode);
    if !report.is_empty() {
        return Err(CliError::Domain(format!(
            "compatibility relation fails validation:\n{}",
            render::relation_violations_text(&report).join("\n")
        )));
    }
    Ok(rel)
}

/// Max deviation between propagation through the composed kernel and
/// sequential propagation through the two arguments, over probe masses.
fn functoriality_deviation(
    first: &Argument,
    second: &Argument,
    composition: &Composition,
    direction: DirectionArg,
    tol: f64,
) -> Result<f64, Error> {
    let probe_algebra = match direction {
        DirectionArg::Backward => first.domain().clone(),
        DirectionArg::Forward => second.codomain().clone(),
    };
    let n = probe_algebra.element_count();
    let uniform = MassFunction::new(probe_algebra.clone(), vec![1.0 / n as f64; n])?;
    let at_top = MassFunction::point(probe_algebra, n - 1)?;

    let mut worst = 0.0f64;
    for probe in [uniform, at_top] {
        let sequential = match direction {
            DirectionArg::Backward => {
                propagate_forward(&propagate_forward(&probe, first, tol)?, second, tol)?
            }
            DirectionArg::Forward => {
                propagate_backward(&propagate_backward(&probe, second, tol)?, first, tol)?
            }
        };
        let direct = propagate_through_kernel(&probe, &composition.kernel, tol)?;
        for (x, y) in direct.values().iter().zip(sequential.values()) {
            worst = worst.max((x - y).abs());
        }
    }
    Ok(worst)
}

fn cmd_compose(cli: &Cli, first_path: &Path, second_path: &Path, direction: DirectionArg) -> CmdResult {
    let first = load_checked_argument(cli, first_path)?;
    let second = load_checked_argument(cli, second_path)?;
    check_bits(cli, first.domain(), second.codomain())?;
    let composition = match direction {
        DirectionArg::Backward => compose_backward(&first, &second, cli.tolerance)?,
        DirectionArg::Forward => compose_forward(&first, &second, cli.tolerance)?,
    };

    if cli.oracle {
        let kernel = &composition.kernel;
        let mut worst = 0.0f64;
        for a in 0..kernel.rows() {
            for c in 0..kernel.cols() {
                let naive = match direction {
                    DirectionArg::Backward => oracle::naive_compose_backward(&first, &second, a, c),
                    DirectionArg::Forward => oracle::naive_compose_forward(&first, &second, a, c),
                };
                worst = worst.max((kernel.at(a, c) - naive).abs());
            }
        }
        oracle_gate(worst)?;
    }

    let deviation = functoriality_deviation(&first, &second, &composition, direction, cli.tolerance)?;
    let functoriality = json!({
        "max_deviation": deviation,
        "status": if deviation <= cli.tolerance { "pass" } else { "fail" },
    });

    let (data, report) = composition.reconstruction.clone().into_parts();
    match cli.format {
        Format::Json => {
            let mut value = kernel_json(&composition.kernel, cli.tolerance);
            let obj = value.as_object_mut().expect("object");
            obj.insert(
                "reconstruction".into(),
                json!({
                    "valid": report.is_empty(),
                    "argument": serde_json::to_value(&data).expect("argument serializes"),
                    "violations": render::violations_json(&report),
                }),
            );
            obj.insert("functoriality".into(), functoriality);
            render::print_json(&value);
        }
        Format::Table => {
            println!("composed {} kernel", composition.kernel.direction());
            print!(
                "{}",
                render::grid(
                    composition.kernel.domain(),
                    composition.kernel.codomain(),
                    composition.kernel.values()
                )
            );
            println!("functoriality: {}", if deviation <= cli.tolerance { "pass" } else { "fail" });
            if report.is_empty() {
                println!("reconstructed table satisfies the axioms");
            } else {
                println!("reconstructed table violations:\n{report}");
            }
        }
    }
    Ok(0)
}

fn mass_json(mass: &MassFunction) -> Value {
    let mut value = serde_json::to_value(mass.to_data()).expect("mass serializes");
    value
        .as_object_mut()
        .expect("object")
        .insert("normalized".into(), json!(mass.is_normalized()));
    value
}

fn cmd_propagate(cli: &Cli, mass_path: &Path, argument_path: &Path, direction: DirectionArg) -> CmdResult {
    let mass = files::load_mass_data(mass_path)?.into_mass()?;
    let arg = load_checked_argument(cli, argument_path)?;
    let out = match direction {
        DirectionArg::Forward => propagate_forward(&mass, &arg, cli.tolerance)?,
        DirectionArg::Backward => propagate_backward(&mass, &arg, cli.tolerance)?,
    };
    match cli.format {
        Format::Json => render::print_json(&mass_json(&out)),
        Format::Table => {
            let alg = out.algebra();
            for (bits, value) in out.values().iter().enumerate() {
                if value.abs() > 0.0 {
                    println!("{:>8}  {value:.6}", alg.label(bits));
                }
            }
            println!("normalized: {}", out.is_normalized());
        }
    }
    Ok(0)
}

fn cmd_demo(cli: &Cli) -> CmdResult {
    // A letter fails to arrive. Two competing explanations — the writer is
    // lazy, or the writer is dead — each lend only partial force to the
    // conclusion that the letter was never written.
    let explanations = AlgebraSignature::new(["lazy", "dead"]).expect("valid atoms");
    let outcomes = AlgebraSignature::new(["unwritten", "written"]).expect("valid atoms");
    let matrix = RowStochasticMatrix::new(vec![vec![0.7, 0.3], vec![0.9, 0.1]])
        .expect("rows sum to 1");
    let arg = forceproof::product_argument(&matrix, &explanations, &outcomes)
        .expect("shapes match");

    let conclusion = 0b01; // {unwritten}
    let cls = arg.classify(cli.tolerance);
    let backward = arg.backward_transform();
    let forward = arg.forward_transform();

    // Opinion about the explanations: mostly laziness, some mass left on
    // "one of the two, can't tell".
    let input = MassFunction::new(explanations.clone(), vec![0.0, 0.6, 0.0, 0.4])
        .expect("sums to 1");
    let output = propagate_forward(&input, &arg, cli.tolerance).expect("product arguments propagate");
    let belief = belief_from_mass(&output);

    let forces: Vec<(String, f64)> = (1..explanations.element_count())
        .map(|a| (explanations.label(a), arg.at(a, conclusion)))
        .collect();

    match cli.format {
        Format::Json => {
            let value = json!({
                "argument": serde_json::to_value(arg.to_data()).expect("argument serializes"),
                "classification": serde_json::to_value(cls).expect("classification serializes"),
                "conclusion": outcomes.atom_names_of(conclusion),
                "force_of_proof": forces.iter().map(|(label, v)| json!({"premise": label, "force": v})).collect::<Vec<_>>(),
                "backward_kernel": serde_json::to_value(backward.to_data()).expect("kernel serializes"),
                "forward_kernel": serde_json::to_value(forward.to_data()).expect("kernel serializes"),
                "input_mass": serde_json::to_value(input.to_data()).expect("mass serializes"),
                "propagated_mass": mass_json(&output),
                "belief": belief,
            });
            render::print_json(&value);
        }
        Format::Table => {
            println!("The expected letter never arrived. Two explanations compete:");
            println!("laziness or death. How much force does each carry toward the");
            println!("conclusion that the letter was never written?\n");
            println!("force-of-proof table (premises x outcomes):");
            print!("{}", render::grid(&explanations, &outcomes, arg.values()));
            println!();
            for (label, force) in &forces {
                println!("force of proof from {label:>12} to {{unwritten}}: {force:.4} (< 1)");
            }
            println!();
            println!(
                "classification: implication = {}, inference = {}, discrete = {}, probative = {}",
                cls.implication, cls.inference, cls.discrete, cls.probative
            );
            println!("\nbackward kernel (mass transport):");
            print!("{}", render::grid(&explanations, &outcomes, backward.values()));
            println!("\ninput opinion over explanations:");
            for (bits, value) in input.values().iter().enumerate() {
                if *value > 0.0 {
                    println!("  {:>12}  {value:.4}", explanations.label(bits));
                }
            }
            println!("\npropagated opinion over outcomes (normalized: {}):", output.is_normalized());
            for (bits, value) in output.values().iter().enumerate() {
                if *value > 0.0 {
                    println!("  {:>12}  {value:.4}  (belief {:.4})", outcomes.label(bits), belief[bits]);
                }
            }
            println!();
            println!(
                "{}",
                serde_json::to_string(&mass_json(&output)).expect("mass serializes")
            );
        }
    }
    Ok(0)
}
