//! Constrained pressure-vessel design with a static penalty.

use msde::problems::{self, engineering};
use msde::{optimize, DeConfig, MemeticConfig, Strategy};

fn main() -> msde::Result<()> {
    let problem = problems::lookup("f9")?;
    let constraints = engineering::pressure_vessel_constraints();
    let config = DeConfig { strategy: Strategy::Msde, seed: 1, ..DeConfig::default() };
    let r = optimize(&problem, &config, &MemeticConfig::default())?;

    let x = &*r.best_vector;
    println!("cost      {:.5} (reference {})", engineering::pressure_vessel_cost(x), engineering::PRESSURE_VESSEL_OPTIMUM);
    println!("design    Ts = {:.4}, Th = {:.4}, R = {:.4}, L = {:.4}", x[0], x[1], x[2], x[3]);
    println!("g(x)      {:?}", constraints.values(x));
    // the penalty tolerates violations small enough to cost less than the
    // acceptable error
    let worst = constraints.values(x).into_iter().fold(0.0, f64::max);
    println!("violation {worst:.1e}, penalty {:.1e}", constraints.penalty(x));
    println!("evals     {}, success {}", r.evals_used, r.success);
    Ok(())
}
