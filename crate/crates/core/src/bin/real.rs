use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use real_opt::benchmarks::benchmark_ids;
use real_opt::engine::run;
use real_opt::engineering::{brute_force_clutch, engineering_ids};
use real_opt::harness::{
    build_problem, engineering_budget, export, run_experiment, sweep, ExperimentConfig, RankTable, SweepSpec,
};
use real_opt::{Error, Result};

#[derive(Parser)]
#[command(name = "real", version, about = "Rotation excursion optimizer and experiment harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Setup {
    /// JSON experiment config.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem id, e.g. F1, CF3, LEVY-SR-10, B07.
    #[arg(long)]
    problem: Option<String>,
    /// Override any config value, e.g. `--set n_x=20 --set repetitions=10`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,
    /// Directory for output files.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Benchmarks,
    Engineering,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Repeated seeded runs of one problem.
    Run(Setup),
    /// Every benchmark and/or engineering problem with its default setup.
    Suite {
        #[arg(long, value_enum, default_value = "all")]
        group: Group,
        #[command(flatten)]
        setup: Setup,
    },
    /// One-parameter sensitivity sweep from the `T = 500` baseline.
    Sweep {
        /// Parameter name, e.g. n_x, gamma, r_ex, r_at.
        #[arg(long)]
        parameter: String,
        /// Comma-separated values.
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        #[command(flatten)]
        setup: Setup,
    },
    /// Friedman mean ranks of a CSV table `problem,<alg>,…`.
    Rank { table: PathBuf },
    /// Exhaustive reference solvers.
    Oracle {
        #[command(subcommand)]
        which: Oracle,
    },
    /// Convergence and agent trajectory of a single run.
    Trace(Setup),
}

#[derive(Subcommand)]
enum Oracle {
    /// Enumerate the whole clutch brake grid.
    Clutch,
}

fn load(setup: &Setup, base: ExperimentConfig) -> Result<ExperimentConfig> {
    let mut config = match &setup.config {
        Some(path) => ExperimentConfig::load(path)?,
        None => base,
    };
    if let Some(p) = &setup.problem {
        config.problem = p.clone();
    }
    for o in &setup.overrides {
        config.apply_override(o)?;
    }
    if let Some(out) = &setup.out {
        config.output_dir = Some(out.clone());
    }
    config.validate()?;
    Ok(config)
}

fn print_json(value: &serde_json::Value) {
    // A closed pipe (e.g. `| head`) is not worth a panic.
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(value).expect("json"));
}

fn cmd_run(setup: &Setup) -> Result<()> {
    let config = load(setup, ExperimentConfig::default())?;
    let result = run_experiment(&config)?;
    if let Some(dir) = &config.output_dir {
        std::fs::create_dir_all(dir)?;
        export::write_json(&result.summary_json(), &dir.join("summary.json"))?;
        let problem = build_problem(&config, config.seed_base)?;
        for r in &result.runs {
            let file = std::fs::File::create(dir.join(format!("run{:03}_convergence.csv", r.index)))?;
            export::write_convergence_csv(&r.record, problem.as_ref(), file)?;
        }
    }
    print_json(&result.summary_json());
    Ok(())
}

fn cmd_suite(group: Group, setup: &Setup) -> Result<()> {
    let mut ids: Vec<String> = Vec::new();
    if matches!(group, Group::Benchmarks | Group::All) {
        ids.extend(benchmark_ids().iter().map(|s| s.to_string()));
    }
    if matches!(group, Group::Engineering | Group::All) {
        ids.extend(engineering_ids().iter().map(|s| s.to_string()));
    }
    let mut rows = Vec::new();
    println!("{:<8} {:>14} {:>12} {:>14} {:>14} {:>10}", "problem", "mean", "std", "best", "worst", "nfe");
    for id in ids {
        let mut base = ExperimentConfig::for_problem(&id);
        base.nfe_budget = engineering_budget(&id);
        let mut config = load(setup, base)?;
        config.problem = id.clone();
        let result = run_experiment(&config)?;
        let s = &result.summary;
        println!(
            "{:<8} {:>14.6e} {:>12.4e} {:>14.6e} {:>14.6e} {:>10.0}",
            id, s.mean, s.std, s.best, s.worst, s.mean_nfe
        );
        rows.push(result.summary_json());
    }
    if let Some(dir) = &setup.out {
        std::fs::create_dir_all(dir)?;
        export::write_json(&rows, &dir.join("suite.json"))?;
    }
    Ok(())
}

fn cmd_sweep(parameter: &str, values: &[f64], setup: &Setup) -> Result<()> {
    let mut config = load(setup, ExperimentConfig::sensitivity("LEVY-SR-10"))?;
    config.sweep = Some(SweepSpec { parameter: parameter.to_string(), values: values.to_vec() });
    let result = sweep(&config)?;
    println!("{:>12} {:>14} {:>12} {:>14} {:>14} {:>10}", parameter, "mean", "std", "best", "worst", "nfe");
    for row in &result.rows {
        let s = &row.summary;
        println!(
            "{:>12} {:>14.6e} {:>12.4e} {:>14.6e} {:>14.6e} {:>10.0}",
            row.value, s.mean, s.std, s.best, s.worst, s.mean_nfe
        );
    }
    if let Some(dir) = &config.output_dir {
        std::fs::create_dir_all(dir)?;
        export::write_json(&json!({ "config": config, "sweep": result }), &dir.join("sweep.json"))?;
    }
    Ok(())
}

fn cmd_rank(path: &Path) -> Result<()> {
    let table = RankTable::from_csv_path(path)?;
    let ranks = table.friedman()?;
    let mut order: Vec<usize> = (0..ranks.len()).collect();
    order.sort_by(|&a, &b| ranks[a].total_cmp(&ranks[b]));
    println!("{:<12} {:>10}", "algorithm", "mean rank");
    for i in order {
        println!("{:<12} {:>10.4}", table.algorithms[i], ranks[i]);
    }
    Ok(())
}

fn cmd_trace(setup: &Setup) -> Result<()> {
    let config = load(setup, ExperimentConfig::default())?;
    let dir = config
        .output_dir
        .clone()
        .ok_or_else(|| Error::Config("trace needs --out DIR".into()))?;
    let mut params = config.run_params(0);
    params.record_trajectory = true;
    let problem = build_problem(&config, params.seed)?;
    let record = run(problem.as_ref(), &params)?;
    export::write_traces(&record, problem.as_ref(), &dir)?;
    let summary = json!({
        "config": config,
        "problem": problem.name(),
        "best_value": problem.report(record.best_value),
        "best_x": record.best_x,
        "nfe": record.nfe,
        "iterations": record.iterations,
        "trajectory_points": record.trajectory.len(),
    });
    export::write_json(&summary, &dir.join("summary.json"))?;
    print_json(&summary);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run(setup) => cmd_run(setup),
        Command::Suite { group, setup } => cmd_suite(*group, setup),
        Command::Sweep { parameter, values, setup } => cmd_sweep(parameter, values, setup),
        Command::Rank { table } => cmd_rank(table),
        Command::Oracle { which: Oracle::Clutch } => {
            let opt = brute_force_clutch();
            print_json(&serde_json::to_value(&opt).expect("json"));
            Ok(())
        }
        Command::Trace(setup) => cmd_trace(setup),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
