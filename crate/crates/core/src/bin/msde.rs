use std::io;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use msde::harness::table::{
    emit_csv, emit_csv_file, read_experiment_csv_file, write_sidecar, CsvTable, Metadata,
};
use msde::harness::{compare_sign, cr_sweep, run_experiment_with, ExperimentTable};
use msde::{ExperimentSpec, Strategy};

#[derive(Parser)]
#[command(version, about = "DE and MSDE benchmark runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment and write the results table.
    Run(RunArgs),
    /// Repeat the experiment for several crossover rates and tabulate AFE.
    SweepCr {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated CR values.
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1.0")]
        cr_list: Vec<f64>,
    },
    /// Read results tables and emit the MSDE-vs-DE sign table.
    Compare {
        /// One table holding both algorithms, or one table per algorithm.
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// TOML file with experiment settings; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated problem keys, e.g. f1,f6.
    #[arg(long, value_delimiter = ',')]
    problems: Option<Vec<String>>,
    #[arg(long, value_enum)]
    algo: Option<Algo>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    np: Option<usize>,
    /// Scale factor F.
    #[arg(long = "f")]
    scale_factor: Option<f64>,
    /// Crossover rate CR.
    #[arg(long)]
    cr: Option<f64>,
    #[arg(long)]
    max_evals: Option<usize>,
    /// Master seed for per-run seed derivation.
    #[arg(long)]
    seed: Option<u64>,
    /// CSV destination (stdout when omitted). A `.meta.toml` sidecar is
    /// written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print each cell to stderr as it completes.
    #[arg(long)]
    progress: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    De,
    Msde,
    Both,
}

impl RunArgs {
    fn spec(&self) -> Result<ExperimentSpec> {
        let mut spec = match &self.config {
            Some(path) => ExperimentSpec::from_path(path)
                .with_context(|| format!("reading {}", path.display()))?,
            None => ExperimentSpec::default(),
        };
        if let Some(p) = &self.problems {
            spec.problems = p.clone();
        }
        if let Some(a) = self.algo {
            spec.algorithms = match a {
                Algo::De => vec![Strategy::De],
                Algo::Msde => vec![Strategy::Msde],
                Algo::Both => vec![Strategy::De, Strategy::Msde],
            };
        }
        if let Some(v) = self.runs {
            spec.runs = v;
        }
        if let Some(v) = self.np {
            spec.base.np = v;
        }
        if let Some(v) = self.scale_factor {
            spec.base.scale_factor = v;
        }
        if let Some(v) = self.cr {
            spec.base.crossover_rate = v;
        }
        if let Some(v) = self.max_evals {
            spec.base.max_evals = v;
        }
        if let Some(v) = self.seed {
            spec.master_seed = v;
        }
        spec.resolve()?;
        Ok(spec)
    }
}

fn write_table(table: &impl CsvTable, out: Option<&Path>, meta: Option<&Metadata>) -> Result<()> {
    match out {
        Some(path) => {
            emit_csv_file(table, path).with_context(|| format!("writing {}", path.display()))?;
            if let Some(meta) = meta {
                write_sidecar(path, meta)?;
            }
        }
        None => emit_csv(table, io::stdout().lock())?,
    }
    Ok(())
}

fn main() -> std::process::ExitCode {
    match execute(Cli::parse().command) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::ExitCode::FAILURE
        }
    }
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Run(args) => {
            let spec = args.spec()?;
            let table = run_experiment_with(&spec, |c| {
                if args.progress {
                    eprintln!("{} {}: SR {}/{}", c.problem, c.algorithm, c.stats.sr, c.stats.runs);
                }
            })?;
            write_table(&table, args.out.as_deref(), Some(&Metadata::new(&spec)))
        }
        Command::SweepCr { run, cr_list } => {
            let spec = run.spec()?;
            let table = cr_sweep(&spec, &cr_list)?;
            let meta = Metadata::new(&spec).with_cr_values(&cr_list);
            write_table(&table, run.out.as_deref(), Some(&meta))
        }
        Command::Compare { inputs, out } => {
            let mut table = ExperimentTable::default();
            for path in &inputs {
                let part = read_experiment_csv_file(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                table.merge(part);
            }
            if table.cells.is_empty() {
                bail!("no result rows in the input tables");
            }
            let summary = compare_sign(&table)?;
            write_table(&summary, out.as_deref(), None)
        }
    }
}
