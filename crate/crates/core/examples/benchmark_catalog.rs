//! Lists the benchmark catalog and evaluates each problem at its known optimum.

use msde::problems;

fn main() {
    println!("{:<4} {:>3} {:>14} {:>10} {:>16}", "key", "D", "optimum", "tolerance", "f(point)");
    for p in problems::catalog() {
        let at_point = p
            .optimum_point()
            .map(|x| format!("{:.6}", p.evaluate(x)))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<4} {:>3} {:>14} {:>10.0e} {:>16}",
            p.name(),
            p.dimension(),
            p.optimum_value(),
            p.acceptable_error(),
            at_point
        );
    }

    let f1 = problems::lookup("f1").unwrap();
    let mut x = vec![1.2, -0.6, 250.0];
    x.resize(30, 0.0);
    f1.clamp(&mut x);
    println!("\nf1 clamps {:?}... and evaluates to {}", &x[..3], f1.evaluate(&x));
}
