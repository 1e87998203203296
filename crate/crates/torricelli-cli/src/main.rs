//! `torricelli` — weighted Fermat-Torricelli point solver.
//!
//! Subcommands: `classify` prints the floating/absorbed decision, `solve`
//! emits a JSON report for one or all solver methods, and `construct` writes
//! a ruler-and-compass construction as SVG.
//!
//! Exit codes: 0 success, 2 invalid input or degenerate geometry, 3
//! convergence failure, 4 construction precondition failure.

mod instance;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use torricelli_core::{
    classify, construct_hofmann, construct_simpson, emit_svg, equilibrium_residual, oracle,
    reconstruct_point, solve_analytic, solve_angular_sides, solve_weiszfeld, Case, Classification,
    ConstructionTrace, Error, Method, Point2, Primitive, Solution, WeightedTriple,
};

use instance::InstanceFile;
use report::{render_report, sig15, SolutionEntry};

const EXIT_INVALID: u8 = 2;
const EXIT_CONVERGENCE: u8 = 3;
const EXIT_CONSTRUCTION: u8 = 4;

#[derive(Parser)]
#[command(name = "torricelli", version, about = "Weighted Fermat-Torricelli point of three weighted planar points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the minimizer floats inside the triangle or is
    /// absorbed by a vertex, and print the per-vertex pulls.
    Classify {
        #[command(flatten)]
        input: InstanceArgs,
    },
    /// Locate the minimizer and print a JSON report.
    Solve {
        #[command(flatten)]
        input: InstanceArgs,
        /// Solver to run, or `all` to compare them.
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Weiszfeld convergence tolerance.
        #[arg(long, default_value_t = oracle::DEFAULT_TOL)]
        tol: f64,
        /// Include per-method wall time in the report (breaks byte-for-byte
        /// reproducibility of the output).
        #[arg(long)]
        timing: bool,
    },
    /// Render a geometric construction of the solution as SVG.
    Construct {
        #[command(flatten)]
        input: InstanceArgs,
        /// Which construction to draw.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Output SVG path.
        #[arg(long)]
        out: PathBuf,
        /// Rendered width in pixels.
        #[arg(long, default_value_t = 800)]
        width: u32,
    },
}

/// Instance input: a JSON file or inline flags. The file wins when both are
/// given.
#[derive(Args)]
struct InstanceArgs {
    /// Instance JSON file: {"vertices": [[x,y],[x,y],[x,y]], "weights": [b1,b2,b3]}.
    #[arg(long)]
    json: Option<PathBuf>,
    /// First vertex as "x,y".
    #[arg(long)]
    a1: Option<String>,
    /// Second vertex as "x,y".
    #[arg(long)]
    a2: Option<String>,
    /// Third vertex as "x,y".
    #[arg(long)]
    a3: Option<String>,
    /// Weights as "b1,b2,b3".
    #[arg(long)]
    w: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Analytic,
    Angular,
    Weiszfeld,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Simpson,
    Rotation,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Convergence { .. } => EXIT_CONVERGENCE,
        Error::UnequalRotationWeights { .. }
        | Error::RotationWeightTooSmall(_)
        | Error::RotationAngleCondition { .. }
        | Error::NotFloating { .. } => EXIT_CONSTRUCTION,
        _ => EXIT_INVALID,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { input } => cmd_classify(&input),
        Command::Solve {
            input,
            method,
            tol,
            timing,
        } => cmd_solve(&input, method, tol, timing),
        Command::Construct {
            input,
            kind,
            out,
            width,
        } => cmd_construct(&input, kind, &out, width),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn load_instance(input: &InstanceArgs) -> Result<(WeightedTriple, Option<String>), Failure> {
    if let Some(path) = &input.json {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
        let file = InstanceFile::parse(&text).map_err(Failure::invalid)?;
        let triple = file.to_triple().map_err(Failure::invalid)?;
        return Ok((triple, file.label));
    }
    match (&input.a1, &input.a2, &input.a3, &input.w) {
        (Some(a1), Some(a2), Some(a3), Some(w)) => {
            let p1 = instance::parse_pair("a1", a1).map_err(Failure::invalid)?;
            let p2 = instance::parse_pair("a2", a2).map_err(Failure::invalid)?;
            let p3 = instance::parse_pair("a3", a3).map_err(Failure::invalid)?;
            let weights = instance::parse_weights(w).map_err(Failure::invalid)?;
            for (i, w) in weights.iter().enumerate() {
                if !w.is_finite() || *w <= 0.0 {
                    return Err(Failure::invalid(format!(
                        "--w: weight {} must be a finite positive number",
                        i + 1
                    )));
                }
            }
            let triple = WeightedTriple::new(
                [
                    Point2::new(p1[0], p1[1]),
                    Point2::new(p2[0], p2[1]),
                    Point2::new(p3[0], p3[1]),
                ],
                weights,
            )
            .map_err(|e| Failure::invalid(e.to_string()))?;
            Ok((triple, None))
        }
        _ => Err(Failure::invalid(
            "no instance given: pass --json FILE or all of --a1 --a2 --a3 --w",
        )),
    }
}

fn cmd_classify(input: &InstanceArgs) -> Result<(), Failure> {
    let (triple, label) = load_instance(input)?;
    let classification = classify(&triple);
    if let Some(label) = label {
        println!("instance: {label}");
    }
    match classification.case {
        Case::Floating => println!("classification: floating"),
        Case::Absorbed(i) => println!("classification: absorbed at A{}", i + 1),
    }
    for i in 0..3 {
        println!(
            "pull A{}: {} (weight {})",
            i + 1,
            sig15(classification.pulls[i]),
            sig15(triple.weight(i))
        );
    }
    let weights = triple.weights();
    match (0..3).find(|&i| weights[i] >= weights[(i + 1) % 3] + weights[(i + 2) % 3]) {
        None => println!("weight triangle inequality: satisfied"),
        Some(i) => println!(
            "weight triangle inequality: violated at w{} (w{} >= w{} + w{})",
            i + 1,
            i + 1,
            (i + 1) % 3 + 1,
            (i + 2) % 3 + 1
        ),
    }
    Ok(())
}

/// Measured sight angles at a floating solution point.
fn sight_angles(t: &WeightedTriple, p: Point2) -> [f64; 3] {
    let at = |i: usize, j: usize| (t.vertex(i) - p).angle_to(t.vertex(j) - p);
    [at(1, 2), at(0, 2), at(0, 1)]
}

fn run_method(
    t: &WeightedTriple,
    classification: &Classification,
    method: MethodArg,
    tol: f64,
    timing: bool,
) -> Result<SolutionEntry, Failure> {
    let started = Instant::now();
    // Absorbed instances short-circuit for every method: the vertex is the
    // answer and no floating formula applies.
    let (name, solution, angular) = if let Case::Absorbed(vertex) = classification.case {
        let solution = Solution {
            point: t.vertex(vertex),
            objective: oracle::objective(t, t.vertex(vertex)),
            classification: *classification,
            residual: 0.0,
            method: Method::Classifier,
            iterations: 0,
        };
        (Method::Classifier.to_string(), solution, None)
    } else {
        match method {
            MethodArg::Analytic => {
                let s = solve_analytic(t).map_err(|e| Failure {
                    code: exit_code_for(&e),
                    message: e.to_string(),
                })?;
                ("analytic".into(), s, None)
            }
            MethodArg::Angular => {
                let angular =
                    solve_angular_sides(t.side(0, 1), t.side(0, 2), t.side(1, 2), t.weights())
                        .map_err(|e| Failure {
                            code: exit_code_for(&e),
                            message: e.to_string(),
                        })?;
                let point = reconstruct_point(t, angular);
                let solution = Solution {
                    point,
                    objective: oracle::objective(t, point),
                    classification: *classification,
                    residual: equilibrium_residual(t, point).unwrap_or(0.0),
                    method: Method::Angular,
                    iterations: 0,
                };
                ("angular".into(), solution, Some(angular))
            }
            MethodArg::Weiszfeld => {
                let s = solve_weiszfeld(t, tol, oracle::DEFAULT_MAX_ITER).map_err(|e| Failure {
                    code: exit_code_for(&e),
                    message: e.to_string(),
                })?;
                ("weiszfeld".into(), s, None)
            }
            MethodArg::All => unreachable!("expanded by the caller"),
        }
    };
    let elapsed = started.elapsed().as_micros();
    let sight = match classification.case {
        Case::Floating => Some(sight_angles(t, solution.point)),
        Case::Absorbed(_) => None,
    };
    Ok(SolutionEntry {
        method_name: name,
        solution,
        sight_angles: sight,
        angular,
        elapsed_us: timing.then_some(elapsed),
    })
}

fn cmd_solve(input: &InstanceArgs, method: MethodArg, tol: f64, timing: bool) -> Result<(), Failure> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Failure::invalid("--tol must be positive"));
    }
    let (triple, label) = load_instance(input)?;
    let classification = classify(&triple);

    // Every method short-circuits to the same classifier answer when the
    // minimizer is absorbed, so one entry covers them all.
    let methods: &[MethodArg] = if !classification.is_floating() {
        &[MethodArg::Analytic]
    } else {
        match method {
            MethodArg::All => &[MethodArg::Analytic, MethodArg::Angular, MethodArg::Weiszfeld],
            _ => std::slice::from_ref(&method),
        }
    };
    let mut entries = Vec::new();
    for m in methods {
        entries.push(run_method(&triple, &classification, *m, tol, timing)?);
    }

    let discrepancy = (entries.len() > 1).then(|| {
        let mut worst = 0.0f64;
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                worst = worst.max(
                    entries[i]
                        .solution
                        .point
                        .distance(entries[j].solution.point),
                );
            }
        }
        worst
    });

    print!(
        "{}",
        render_report(
            label.as_deref(),
            &classification,
            triple.weights(),
            &entries,
            discrepancy,
        )
    );
    Ok(())
}

fn chain_residual(trace: &ConstructionTrace, t: &WeightedTriple) -> Option<f64> {
    let find = |label: &str| {
        trace.steps.iter().find_map(|s| match s {
            Primitive::Point { label: l, at } if l == label => Some(*at),
            _ => None,
        })
    };
    let a2 = find("A2")?;
    let af = find("AF")?;
    let afp = find("AF'")?;
    let a1p = find("A1'")?;
    let scale = t.diameter();
    let cross = |o: Point2, a: Point2, b: Point2| (a - o).cross(b - o).abs();
    Some(
        cross(a2, af, afp)
            .max(cross(a2, afp, a1p))
            .max(cross(af, afp, a1p))
            / (scale * scale),
    )
}

fn cmd_construct(
    input: &InstanceArgs,
    kind: KindArg,
    out: &PathBuf,
    width: u32,
) -> Result<(), Failure> {
    if width < 100 {
        return Err(Failure::invalid("--width must be at least 100 pixels"));
    }
    let (triple, label) = load_instance(input)?;
    let (name, trace) = match kind {
        KindArg::Simpson => (
            "simpson",
            construct_simpson(&triple).map_err(|e| Failure {
                code: exit_code_for(&e),
                message: e.to_string(),
            })?,
        ),
        KindArg::Rotation => (
            "rotation",
            construct_hofmann(&triple).map_err(|e| Failure {
                code: exit_code_for(&e),
                message: e.to_string(),
            })?,
        ),
    };

    let svg = emit_svg(&trace, width);
    std::fs::write(out, &svg)
        .map_err(|e| Failure::invalid(format!("{}: {e}", out.display())))?;

    if let Some(label) = label {
        println!("instance: {label}");
    }
    println!("construction: {name}");
    println!(
        "result: ({}, {})",
        sig15(trace.result_point.x),
        sig15(trace.result_point.y)
    );
    println!(
        "objective: {}",
        sig15(oracle::objective(&triple, trace.result_point))
    );
    println!(
        "equilibrium residual: {}",
        sig15(equilibrium_residual(&triple, trace.result_point).unwrap_or(0.0))
    );
    if kind == KindArg::Rotation {
        if let Some(residual) = chain_residual(&trace, &triple) {
            println!("chain collinearity residual: {}", sig15(residual));
        }
    }
    println!("svg: {}", out.display());
    Ok(())
}
