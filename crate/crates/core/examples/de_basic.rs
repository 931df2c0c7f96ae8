//! Plain DE/rand/1/bin on one catalog problem.
//!
//!     cargo run --release --example de_basic -- f5 7

use msde::{problems, run_de, DeConfig};

fn main() -> msde::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "f5".into());
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let problem = problems::lookup(&name)?;
    let config = DeConfig { seed, ..DeConfig::default() };
    let result = run_de(&problem, &config)?;

    println!("{name}: D = {}, known optimum {}", problem.dimension(), problem.optimum_value());
    println!("best value   {:.10}", result.best_objective);
    println!("error        {:.3e} (acceptable {:.0e})", result.error, problem.acceptable_error());
    println!("success      {}", result.success);
    println!("evaluations  {} over {} generations", result.evals_used, result.generations);
    println!("best vector  {:?}", &*result.best_vector);
    Ok(())
}
