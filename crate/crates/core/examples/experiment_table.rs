//! Multi-run experiment over the whole catalog, written as CSV, plus the
//! MSDE-vs-DE sign table.
//!
//!     cargo run --release --example experiment_table -- 100 results.csv

use msde::harness::table::{emit_csv, emit_csv_file, write_sidecar, Metadata};
use msde::harness::{compare_sign, run_experiment_with};
use msde::ExperimentSpec;

fn main() -> msde::Result<()> {
    let mut args = std::env::args().skip(1);
    let runs = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let out = args.next();

    let spec = ExperimentSpec { runs, ..ExperimentSpec::default() };
    let table = run_experiment_with(&spec, |c| {
        eprintln!("{:<4} {:<4} SR {:>3}/{runs}  AFE {:>9.1}", c.problem, c.algorithm, c.stats.sr, c.stats.afe);
    })?;

    match &out {
        Some(path) => {
            emit_csv_file(&table, path)?;
            write_sidecar(path, &Metadata::new(&spec))?;
            eprintln!("wrote {path}");
        }
        None => emit_csv(&table, std::io::stdout().lock())?,
    }

    let signs = compare_sign(&table)?;
    let line: String = signs.rows.iter().map(|r| format!("{}{} ", r.problem, r.verdict)).collect();
    eprintln!("{line}\n'+' count: {}", signs.plus_count());
    Ok(())
}
