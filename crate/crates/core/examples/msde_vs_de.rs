//! DE and MSDE from the same seeds on a few problems.
//!
//!     cargo run --release --example msde_vs_de -- 20

use msde::{optimize, problems, DeConfig, MemeticConfig, Strategy};

fn main() -> msde::Result<()> {
    let seeds: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let memetic = MemeticConfig::default();

    println!("{:<5} {:<5} {:>8} {:>12} {:>10}", "prob", "algo", "solved", "mean evals", "GSS evals");
    for name in ["f2", "f4", "f6", "f8", "f10"] {
        let problem = problems::lookup(name)?;
        for strategy in [Strategy::De, Strategy::Msde] {
            let (mut solved, mut evals, mut gss) = (0, 0, 0);
            for seed in 0..seeds {
                let config = DeConfig { seed, strategy, ..DeConfig::default() };
                let r = optimize(&problem, &config, &memetic)?;
                solved += r.success as u64;
                evals += r.evals_used;
                gss += r.memetic_evals;
            }
            let n = seeds as f64;
            println!(
                "{name:<5} {:<5} {solved:>5}/{seeds:<2} {:>12.0} {:>10.0}",
                strategy.label(),
                evals as f64 / n,
                gss as f64 / n
            );
        }
    }
    Ok(())
}
