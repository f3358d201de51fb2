use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use intercept::io::{emit_result, parse_scenario, render_svg, ScenarioFile};
use intercept::solver::{self, EstimatorKind, SolveStatus};
use intercept::table;

#[derive(Parser)]
#[command(name = "intercept", version, about = "Minimum-time interception of a moving target")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a scenario and print the result document.
    Solve(ScenarioArgs),
    /// Print the iterate table and iteration counts per precision.
    Trace(ScenarioArgs),
    /// Reproduce the published iteration-count table.
    Table(TableArgs),
    /// Solve a scenario and write an SVG plot.
    Plot(ScenarioArgs),
    /// Locate the first interception time by a Lipschitz grid scan.
    Oracle(ScenarioArgs),
}

#[derive(Args)]
struct ScenarioArgs {
    /// Scenario JSON file.
    scenario: PathBuf,
    #[arg(long, value_enum)]
    estimator: Option<Estimator>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    max_iterations: Option<usize>,
    #[arg(long)]
    horizon: Option<f64>,
    /// Grid resolution for `oracle`.
    #[arg(long, default_value_t = 1e-6)]
    resolution: f64,
    /// Output file (required for `plot`).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value = "simple")]
    estimator: Estimator,
    /// Emit JSON instead of a text table.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Estimator {
    Simple,
    Best,
}

impl From<Estimator> for EstimatorKind {
    fn from(e: Estimator) -> Self {
        match e {
            Estimator::Simple => EstimatorKind::Simple,
            Estimator::Best => EstimatorKind::Best,
        }
    }
}

const TRACE_DELTAS: [f64; 3] = [1e-3, 1e-6, 1e-9];

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Trace(args) => cmd_trace(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Plot(args) => cmd_plot(&args),
        Command::Oracle(args) => cmd_oracle(&args),
    }
}

fn load(args: &ScenarioArgs) -> Result<ScenarioFile> {
    let text =
        std::fs::read_to_string(&args.scenario).with_context(|| format!("cannot read {}", args.scenario.display()))?;
    let mut file = parse_scenario(&text).with_context(|| format!("in {}", args.scenario.display()))?;
    if let Some(e) = args.estimator {
        file.estimator = e.into();
    }
    if let Some(eps) = args.epsilon {
        file.capture.epsilon = eps;
    }
    if let Some(n) = args.max_iterations {
        file.max_iterations = Some(n);
    }
    if let Some(h) = args.horizon {
        file.horizon = h;
    }
    file.validate().context("invalid override")?;
    Ok(file)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn status_code(status: SolveStatus) -> ExitCode {
    match status {
        SolveStatus::Intercepted => ExitCode::SUCCESS,
        SolveStatus::Budget | SolveStatus::Unreachable => ExitCode::from(2),
    }
}

fn solve(file: &ScenarioFile) -> Result<solver::SolveResult> {
    let trajectory = file.build_trajectory()?;
    let capture = file.build_capture()?;
    Ok(solver::solve(
        file.plant.model(),
        &trajectory,
        &capture,
        file.estimator,
        file.max_iterations(),
    ))
}

fn cmd_solve(args: &ScenarioArgs) -> Result<ExitCode> {
    let file = load(args)?;
    let result = solve(&file)?;
    for note in &result.notes {
        eprintln!("note: {note}");
    }
    let mut doc = emit_result(&result);
    doc.push('\n');
    write_output(args.out.as_deref(), &doc)?;
    Ok(status_code(result.status))
}

fn cmd_trace(args: &ScenarioArgs) -> Result<ExitCode> {
    let file = load(args)?;
    let result = solve(&file)?;
    for note in &result.notes {
        eprintln!("note: {note}");
    }
    let mut out = format!("{:>6}  {:>24}  {:>24}\n", "n", "t_n", "rho_n");
    for (n, it) in result.trace.iterates.iter().enumerate() {
        out.push_str(&format!("{n:>6}  {:>24.17e}  {:>24.17e}\n", it.t, it.rho));
    }
    out.push_str(&format!("status: {:?}\n", result.status).to_lowercase());
    if result.status == SolveStatus::Intercepted {
        let model = file.plant.model();
        let trajectory = file.build_trajectory()?;
        let reference = solver::refine_ground_truth(model, &trajectory, file.capture.ell)?;
        out.push_str(&format!("t_star: {}\nreference: {reference}\n", result.t_star));
        let counts = solver::iterations_to_precision(
            model,
            &trajectory,
            file.capture.ell,
            file.estimator,
            reference,
            &TRACE_DELTAS,
            file.max_iterations(),
        );
        for (delta, count) in TRACE_DELTAS.iter().zip(counts) {
            match count {
                Some(n) => out.push_str(&format!("iterations to {delta:e}: {n}\n")),
                None => out.push_str(&format!("iterations to {delta:e}: not reached\n")),
            }
        }
    }
    write_output(args.out.as_deref(), &out)?;
    Ok(status_code(result.status))
}

fn cmd_table(args: &TableArgs) -> Result<ExitCode> {
    let rows = table::evaluate_all(args.estimator.into())?;
    let text = if args.json {
        let mut s = serde_json::to_string_pretty(&rows)?;
        s.push('\n');
        s
    } else {
        let mut s = format!(
            "{:<7} {:<36} {:>5}  {:>13}  {:>13}  {:>13}\n",
            "plant", "trajectory", "v", "1e-3", "1e-6", "1e-9"
        );
        let (mut matched, mut total) = (0, 0);
        for r in &rows {
            let cells: Vec<String> = r
                .cells
                .iter()
                .map(|c| {
                    total += 1;
                    matched += usize::from(c.matches);
                    let got = c.computed.map_or("-".to_string(), |n| n.to_string());
                    format!("{got:>4} / {:>3} {}", c.published, if c.matches { "ok" } else { "XX" })
                })
                .collect();
            s.push_str(&format!(
                "{:<7} {:<36} {:>5}  {}\n",
                r.plant.as_str(),
                describe(&r.row.trajectory),
                r.row.v,
                cells.join("  ")
            ));
        }
        s.push_str(&format!(
            "matched {matched}/{total} cells within ±{}\n",
            table::TOLERANCE
        ));
        s
    };
    write_output(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn describe(t: &table::RowTrajectory) -> String {
    match *t {
        table::RowTrajectory::Line { xi, eta, phi } => format!("line({xi}, {eta}, phi={phi:.4})"),
        table::RowTrajectory::Lissajous {
            xi,
            eta,
            omega_x,
            omega_y,
        } => {
            format!("lissajous({xi}, {eta}, {omega_x}, {omega_y:.4})")
        }
    }
}

fn cmd_plot(args: &ScenarioArgs) -> Result<ExitCode> {
    let out = args.out.as_deref().context("plot requires --out")?;
    let file = load(args)?;
    let result = solve(&file)?;
    if result.status != SolveStatus::Intercepted {
        eprintln!("no interception: status {:?}", result.status);
        return Ok(status_code(result.status));
    }
    let trajectory = file.build_trajectory()?;
    let times: Vec<f64> = result.trace.iterates.iter().map(|i| i.t).collect();
    let svg = render_svg(file.plant.model(), &trajectory, &result, &times, file.capture.ell)?;
    write_output(Some(out), &svg)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: &ScenarioArgs) -> Result<ExitCode> {
    let file = load(args)?;
    anyhow::ensure!(args.resolution > 0.0, "--resolution must be positive");
    let trajectory = file.build_trajectory()?;
    let found = solver::grid_oracle(
        file.plant.model(),
        &trajectory,
        file.capture.ell,
        file.horizon,
        args.resolution,
    );
    match found {
        Some(t) => {
            write_output(args.out.as_deref(), &format!("{t}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            eprintln!("no crossing before horizon {}", file.horizon);
            Ok(ExitCode::from(2))
        }
    }
}
