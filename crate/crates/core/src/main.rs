use std::path::PathBuf;
use std::process::ExitCode;

use batopt::benchmarks::{self, BoundsRule};
use batopt::harness::{self, split_list, ExperimentConfig};
use batopt::{bat, Problem, RngStream};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "batopt", version, about = "Bat-algorithm optimizers, benchmarks and comparison statistics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Benchmark registry and experiment runs.
    Bench {
        #[command(subcommand)]
        action: Bench,
    },
    /// Nonparametric comparison of a means table.
    Stats {
        #[command(subcommand)]
        action: Stats,
    },
    /// Diagnostics.
    Probe {
        #[command(subcommand)]
        action: Probe,
    },
}

#[derive(Subcommand)]
enum Bench {
    /// Print every registered benchmark.
    List {
        /// Dimension used to report box and optimum.
        #[arg(long, default_value_t = 30)]
        dim: usize,
    },
    /// Run a seeded experiment grid.
    Run {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated algorithm ids.
        #[arg(long)]
        algos: Option<String>,
        /// Comma-separated benchmark ids.
        #[arg(long)]
        problems: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        pop: Option<usize>,
        #[arg(long)]
        iters: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Stats {
    /// Pairwise, rank, post-hoc and contrast tables for one control.
    Report {
        /// Wide matrix CSV or a harness summary.csv.
        #[arg(long)]
        means: PathBuf,
        #[arg(long, default_value = "dba")]
        control: String,
        /// Directory for the CSV tables; the text report is always printed.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Probe {
    /// Fraction of first-iteration local walks that leave the box.
    Oob {
        /// Initial local width as a fraction of the box width.
        #[arg(long, default_value_t = 0.25)]
        fraction: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.9)]
        loudness: f64,
        #[arg(long, default_value_t = 1)]
        dim: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 3 } else { 2 })
        }
    }
}

fn run(cli: Cli) -> batopt::Result<()> {
    match cli.command {
        Command::Bench { action: Bench::List { dim } } => {
            println!("{:<12} {:<34} {:<22} optimum(d={dim})", "id", "name", "bounds");
            for spec in benchmarks::registry() {
                let bounds = match spec.bounds {
                    BoundsRule::Fixed(lo, hi) => format!("[{lo}, {hi}]"),
                    BoundsRule::SquaredDimension => "[-d^2, d^2]".to_string(),
                };
                let opt = match (spec.check_dimension(dim), spec.reference_optimum(dim)) {
                    (Err(_), _) => format!("needs d >= {}", spec.min_dimension),
                    (Ok(()), Some(o)) => format!("{:.6e}", o.value),
                    (Ok(()), None) => "unknown".to_string(),
                };
                println!("{:<12} {:<34} {:<22} {opt}", spec.id, spec.name, bounds);
            }
            Ok(())
        }
        Command::Bench { action: Bench::Run { config, algos, problems, dim, pop, iters, trials, seed, out } } => {
            let mut cfg = match config {
                Some(p) => ExperimentConfig::from_path(p)?,
                None => ExperimentConfig::default(),
            };
            if let Some(a) = algos {
                cfg.algorithms = split_list(&a);
            }
            if let Some(p) = problems {
                cfg.problems = split_list(&p);
            }
            if let Some(d) = dim {
                cfg.dimension = d;
            }
            if let Some(n) = pop {
                cfg.override_population(n);
            }
            if let Some(t) = iters {
                cfg.iterations = t;
            }
            if let Some(t) = trials {
                cfg.trials = t;
            }
            if let Some(s) = seed {
                cfg.master_seed = s;
            }
            if let Some(o) = out {
                cfg.output_dir = o;
            }
            let results = harness::run_and_write(&cfg)?;
            println!("{:<6} {:<12} {:>12} {:>12} {:>12}", "algo", "problem", "best", "mean", "sd");
            for r in &results.summary {
                println!("{:<6} {:<12} {:>12.4e} {:>12.4e} {:>12.4e}", r.algorithm, r.problem, r.best, r.mean, r.sd);
            }
            println!("wrote {}", cfg.output_dir.display());
            Ok(())
        }
        Command::Stats { action: Stats::Report { means, control, out } } => {
            let matrix = harness::load_means(&means)?;
            let report = harness::stats_pipeline(&matrix, &control)?;
            print!("{}", report.render_text());
            if let Some(dir) = out {
                report.write(&dir)?;
            }
            Ok(())
        }
        Command::Probe { action: Probe::Oob { fraction, samples, seed, loudness, dim } } => {
            if dim == 0 {
                return Err(batopt::Error::Config("dim must be at least 1".into()));
            }
            let unit = Problem::uniform_box("unit", dim, 0.0, 1.0, |_| 0.0)?;
            let frac = bat::oob_fraction_probe(&unit, fraction, loudness, samples, &mut RngStream::new(seed))?;
            println!("{frac}");
            Ok(())
        }
    }
}
