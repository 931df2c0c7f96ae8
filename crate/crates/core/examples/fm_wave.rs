//! Frequency-modulated sound wave parameter estimation.

use msde::problems::{self, engineering};
use msde::{optimize, DeConfig, MemeticConfig, Strategy};

fn main() -> msde::Result<()> {
    let problem = problems::lookup("f11")?;
    let memetic = MemeticConfig::default();
    for seed in 0..4 {
        for strategy in [Strategy::De, Strategy::Msde] {
            let config = DeConfig { strategy, seed, ..DeConfig::default() };
            let r = optimize(&problem, &config, &memetic)?;
            println!(
                "seed {seed} {:<4} error {:.3e}  evals {:>6}  params {:+.3?}",
                strategy.label(),
                r.best_objective,
                r.evals_used,
                &*r.best_vector
            );
        }
    }
    println!("target parameters {:?}", engineering::FM_TARGET);
    Ok(())
}
