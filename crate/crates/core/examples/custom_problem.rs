//! Defining a problem of your own, including an inequality constraint.

use msde::problems::ConstraintSet;
use msde::{optimize, DeConfig, MemeticConfig, Problem, Strategy};

fn main() -> msde::Result<()> {
    // minimize (x - 3)^2 + (y + 1)^2 subject to x + y >= 4
    let problem = Problem::new(
        "shifted bowl",
        vec![(-10.0, 10.0), (-10.0, 10.0)],
        |x: &[f64]| (x[0] - 3.0).powi(2) + (x[1] + 1.0).powi(2),
        2.0,
        1e-4,
    )?
    .with_optimum_point(vec![4.0, 0.0])?
    .with_constraints(ConstraintSet::new(
        vec![std::sync::Arc::new(|x: &[f64]| 4.0 - x[0] - x[1])],
        1e6,
    ));

    for strategy in [Strategy::De, Strategy::Msde] {
        let config = DeConfig { strategy, np: 30, seed: 4, ..DeConfig::default() };
        let r = optimize(&problem, &config, &MemeticConfig::default())?;
        println!(
            "{strategy}: f = {:.8} at ({:.5}, {:.5}), {} evaluations, success {}",
            r.best_objective, r.best_vector[0], r.best_vector[1], r.evals_used, r.success
        );
    }
    Ok(())
}
