//! Five-atom Lennard-Jones cluster.

use msde::problems::{self, engineering};
use msde::{optimize, DeConfig, MemeticConfig, Strategy};

fn main() -> msde::Result<()> {
    let problem = problems::lookup("f10")?;
    let config = DeConfig { strategy: Strategy::Msde, seed: 2, ..DeConfig::default() };
    let r = optimize(&problem, &config, &MemeticConfig::default())?;

    println!("energy {:.6} (known minimum {}), {} evaluations", r.best_objective, engineering::LJ5_MINIMUM, r.evals_used);
    let atoms: Vec<&[f64]> = r.best_vector.chunks(3).collect();
    for (i, a) in atoms.iter().enumerate() {
        println!("atom {i}: ({:+.4}, {:+.4}, {:+.4})", a[0], a[1], a[2]);
    }
    println!("pair distances:");
    for i in 0..atoms.len() {
        for j in i + 1..atoms.len() {
            let d: f64 = (0..3).map(|k| (atoms[i][k] - atoms[j][k]).powi(2)).sum::<f64>().sqrt();
            print!(" {d:.4}");
        }
    }
    println!();
    Ok(())
}
