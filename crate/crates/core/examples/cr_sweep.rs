//! Mean AFE as a function of the crossover rate.
//!
//!     cargo run --release --example cr_sweep -- 20

use msde::harness::cr_sweep;
use msde::{ExperimentSpec, Strategy};

fn main() -> msde::Result<()> {
    let runs = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let spec = ExperimentSpec {
        problems: vec!["f2".into(), "f6".into(), "f8".into()],
        algorithms: vec![Strategy::De, Strategy::Msde],
        runs,
        ..ExperimentSpec::default()
    };
    let rates: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
    let sweep = cr_sweep(&spec, &rates)?;

    println!("mean AFE over {:?}, {runs} runs per cell", sweep.problems);
    println!("{:>4} {:>10} {:>10}", "CR", "DE", "MSDE");
    for row in &sweep.rows {
        println!("{:>4.1} {:>10.0} {:>10.0}", row.crossover_rate, row.afe[0], row.afe[1]);
    }
    Ok(())
}
