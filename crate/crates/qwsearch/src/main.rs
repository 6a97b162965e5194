//! Command line front end: single runs, custom sweeps, dataset presets, and
//! the dense-matrix verification suite. Tables go to stdout or to `--out`;
//! one-line summaries go to stderr so they never pollute piped data.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qwsearch::{
    cost_curve, default_horizon, figure_plans, grover_closed_form, grover_optimal_iterations,
    grover_success_curve, known_figures, noise_label, run_sweep, run_verification_suite,
    strength_from_delta, Error, Family, NoiseKind, OutputFormat, Result, ResultTable, SeriesSpec,
    SweepAxis, SweepPlan, Value, WalkSpec,
};

#[derive(Parser)]
#[command(
    name = "qwsearch",
    version,
    about = "Coined quantum walk search on hypercubes and grids, with decoherence"
)]
struct Cli {
    /// Worker threads for Monte Carlo averaging; defaults to all cores
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search walk on the n-dimensional hypercube
    Skw(SkwArgs),
    /// Search walk on the side x side torus grid
    Akr(AkrArgs),
    /// Grover iteration baseline on an unstructured register
    Grover(GroverArgs),
    /// Custom sweep over steps, strengths, deltas, or lattice sizes
    Sweep(SweepArgs),
    /// Built-in dataset presets (fig1 .. fig8)
    Figure(FigureArgs),
    /// Dense-matrix verification suite; exits nonzero if any check fails
    Verify,
}

#[derive(Args)]
struct SkwArgs {
    /// Hypercube dimension (also the coin dimension)
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct AkrArgs {
    /// Grid side length
    #[arg(long, default_value_t = 16)]
    side: usize,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    /// Steps to simulate; defaults to the family's natural horizon
    #[arg(long)]
    steps: Option<usize>,
    /// none, systematic, gaussian, broken-link, unmarked-systematic, unmarked-gaussian
    #[arg(long, default_value = "none")]
    noise: NoiseKind,
    /// Noise strength: theta, sigma, or p depending on the model
    #[arg(long, default_value_t = 0.0, conflicts_with = "delta")]
    strength: f64,
    /// Resolve the strength as N^(-delta) from the vertex count N
    #[arg(long)]
    delta: Option<f64>,
    /// Monte Carlo realizations for stochastic noise
    #[arg(long, default_value_t = 200)]
    realizations: usize,
    /// Master seed, recorded in the output metadata
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Marked vertex index
    #[arg(long, default_value_t = 0)]
    marked: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GroverArgs {
    /// Register size in qubits; N = 2^qubits
    #[arg(long, default_value_t = 10)]
    qubits: usize,
    /// Iterations; defaults to the optimal floor(pi / (4 asin(1/sqrt(N))))
    #[arg(long)]
    iterations: Option<usize>,
    /// Marked basis state
    #[arg(long, default_value_t = 0)]
    marked: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Hypercube dimensions, comma separated
    #[arg(long, value_delimiter = ',', conflicts_with = "side")]
    n: Vec<usize>,
    /// Grid sides, comma separated
    #[arg(long, value_delimiter = ',')]
    side: Vec<usize>,
    /// trajectory, cost, strength, delta, or dims
    #[arg(long, default_value = "trajectory")]
    axis: String,
    /// Grid points for the strength and delta axes, comma separated
    #[arg(long, value_delimiter = ',')]
    values: Vec<f64>,
    /// none, systematic, gaussian, broken-link, unmarked-systematic, unmarked-gaussian
    #[arg(long, default_value = "none")]
    noise: NoiseKind,
    /// Base strength for the trajectory, cost, and dims axes
    #[arg(long, default_value_t = 0.0)]
    strength: f64,
    /// Steps per run; defaults to each size's natural horizon
    #[arg(long)]
    steps: Option<usize>,
    /// Monte Carlo realizations for stochastic noise
    #[arg(long, default_value_t = 200)]
    realizations: usize,
    /// Master seed, recorded in the output metadata
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Marked vertex index
    #[arg(long, default_value_t = 0)]
    marked: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FigureArgs {
    /// Preset id, e.g. fig1, fig3-left, fig5
    id: String,
    /// Override the preset's realization count
    #[arg(long)]
    realizations: Option<usize>,
    /// Override the preset's master seed
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the table here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or jsonl
    #[arg(long, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| Error::InvalidSpec(format!("worker pool: {e}")))?;
    }
    match cli.command {
        Command::Skw(a) => run_single(Family::Hypercube, a.n, a.run),
        Command::Akr(a) => run_single(Family::Grid, a.side, a.run),
        Command::Grover(a) => run_grover_cmd(a),
        Command::Sweep(a) => run_sweep_cmd(a),
        Command::Figure(a) => run_figure_cmd(a),
        Command::Verify => run_verify(),
    }
}

fn make_spec(family: Family, dim: usize, marked: usize) -> Result<WalkSpec> {
    match family {
        Family::Hypercube => WalkSpec::hypercube(dim, marked),
        Family::Grid => WalkSpec::grid(dim, marked),
    }
}

fn run_single(family: Family, dim: usize, args: RunArgs) -> Result<ExitCode> {
    let spec = make_spec(family, dim, args.marked)?;
    let strength = match args.delta {
        Some(d) => strength_from_delta(spec.vertex_count(), d),
        None => args.strength,
    };
    let plan = SweepPlan {
        figure: match family {
            Family::Hypercube => "skw",
            Family::Grid => "akr",
        }
        .into(),
        family,
        axis: SweepAxis::Trajectory,
        series: vec![SeriesSpec {
            label: noise_label(args.noise, strength),
            kind: args.noise,
            strength,
            dim,
        }],
        s_max: Some(args.steps.unwrap_or_else(|| default_horizon(spec))),
        realizations: args.realizations,
        seed: args.seed,
        marked: args.marked,
    };
    let table = run_sweep(&plan)?;
    summarize_trajectory(&table, spec)?;
    emit(&table, &args.output)
}

fn summarize_trajectory(table: &ResultTable, spec: WalkSpec) -> Result<()> {
    let col = table
        .column_index("p_marked")
        .ok_or_else(|| Error::MalformedResults("missing p_marked column".into()))?;
    let curve: Vec<f64> = table
        .rows
        .iter()
        .map(|r| {
            r[col]
                .as_f64()
                .ok_or_else(|| Error::MalformedResults("p_marked not numeric".into()))
        })
        .collect::<Result<_>>()?;
    let (s_peak, p_peak) = qwsearch::metrics::peak_marked_curve(&curve);
    eprintln!("peak p_marked {p_peak:.4} at s={s_peak}");
    match cost_curve(&curve, spec.vertex_count()) {
        Ok(cc) => eprintln!(
            "cost minimum {:.1} at s={}, scaled {:.4}",
            cc.c_star, cc.s_star, cc.scaled
        ),
        Err(Error::AllCostsInfinite) => eprintln!("cost undefined: p_marked never positive"),
        Err(e) => return Err(e),
    }
    Ok(())
}

fn run_grover_cmd(args: GroverArgs) -> Result<ExitCode> {
    let iterations = args
        .iterations
        .unwrap_or_else(|| grover_optimal_iterations(args.qubits));
    let curve = grover_success_curve(args.qubits, args.marked, iterations)?;
    let mut table = ResultTable::new(
        vec![
            ("version".into(), env!("CARGO_PKG_VERSION").into()),
            ("figure".into(), "grover".into()),
            ("qubits".into(), args.qubits.to_string()),
            ("marked".into(), args.marked.to_string()),
            ("iterations".into(), iterations.to_string()),
            ("created".into(), chrono::Utc::now().to_rfc3339()),
        ],
        vec!["k".into(), "p_success".into(), "closed_form".into()],
    );
    for (k, &p) in curve.iter().enumerate() {
        table.push_row(vec![
            Value::Int(k as i64),
            Value::Float(p),
            Value::Float(grover_closed_form(args.qubits, k)),
        ]);
    }
    eprintln!(
        "p_success {:.6} after {iterations} iterations (optimal {})",
        curve[iterations],
        grover_optimal_iterations(args.qubits)
    );
    emit(&table, &args.output)
}

fn run_sweep_cmd(args: SweepArgs) -> Result<ExitCode> {
    let (family, dims) = match (args.n.is_empty(), args.side.is_empty()) {
        (false, true) => (Family::Hypercube, args.n.clone()),
        (true, false) => (Family::Grid, args.side.clone()),
        _ => {
            return Err(Error::InvalidPlan(
                "pass exactly one of --n or --side".into(),
            ));
        }
    };
    let axis = match args.axis.as_str() {
        "trajectory" => SweepAxis::Trajectory,
        "cost" => SweepAxis::CostCurve,
        "strength" => SweepAxis::StrengthGrid(args.values.clone()),
        "delta" => SweepAxis::DeltaGrid(args.values.clone()),
        "dims" => SweepAxis::DimensionScan,
        other => {
            return Err(Error::InvalidPlan(format!(
                "unknown axis {other:?}, expected trajectory, cost, strength, delta, or dims"
            )));
        }
    };
    let series: Vec<SeriesSpec> = dims
        .iter()
        .map(|&d| {
            let size = match family {
                Family::Hypercube => format!("n={d}"),
                Family::Grid => format!("side={d}"),
            };
            let label = match axis {
                SweepAxis::StrengthGrid(_) | SweepAxis::DeltaGrid(_) => {
                    format!("{size} {}", args.noise)
                }
                _ => format!("{size} {}", noise_label(args.noise, args.strength)),
            };
            SeriesSpec {
                label,
                kind: args.noise,
                strength: args.strength,
                dim: d,
            }
        })
        .collect();
    let plan = SweepPlan {
        figure: "sweep".into(),
        family,
        axis,
        series,
        s_max: args.steps,
        realizations: args.realizations,
        seed: args.seed,
        marked: args.marked,
    };
    let table = run_sweep(&plan)?;
    eprintln!("{} rows", table.rows.len());
    emit(&table, &args.output)
}

fn run_figure_cmd(args: FigureArgs) -> Result<ExitCode> {
    let mut plans = figure_plans(&args.id).map_err(|e| match e {
        Error::UnknownFigure(id) => Error::UnknownFigure(format!(
            "{id}; known presets: {}",
            known_figures().join(", ")
        )),
        other => other,
    })?;
    for plan in &mut plans {
        if let Some(r) = args.realizations {
            plan.realizations = r;
        }
        if let Some(s) = args.seed {
            plan.seed = s;
        }
    }
    let multi = plans.len() > 1;
    for plan in &plans {
        let table = run_sweep(plan)?;
        let output = OutputArgs {
            out: args.output.out.as_ref().map(|base| {
                if multi {
                    suffixed_path(base, &plan.figure, &args.id)
                } else {
                    base.clone()
                }
            }),
            format: args.output.format,
        };
        eprintln!("{}: {} rows", plan.figure, table.rows.len());
        emit(&table, &output)?;
    }
    Ok(ExitCode::SUCCESS)
}

/// out.csv + figure id "fig4-left" under requested id "fig4" -> out-left.csv
fn suffixed_path(base: &PathBuf, figure: &str, requested: &str) -> PathBuf {
    let suffix = figure.strip_prefix(requested).unwrap_or(figure);
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    base.with_file_name(format!("{stem}{suffix}.{ext}"))
}

fn run_verify() -> Result<ExitCode> {
    let checks = run_verification_suite()?;
    let mut all_ok = true;
    for c in &checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("{tag} {}: {}", c.label, c.detail);
        all_ok &= c.passed;
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn emit(table: &ResultTable, output: &OutputArgs) -> Result<ExitCode> {
    match &output.out {
        Some(path) => {
            table.write_path(path, output.format)?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{}", table.to_string_as(output.format)?),
    }
    Ok(ExitCode::SUCCESS)
}
