//! The golden-section search used by the memetic phase, on its own.

use msde::memetic::{gss_minimize, GssInterval, MemeticConfig};

fn main() {
    let config = MemeticConfig::default();
    for target in [-0.9, 0.0, 0.3, 1.1] {
        let out = gss_minimize(|c| (c - target).powi(2), &config);
        println!(
            "min of (c - {target:+.1})^2: c = {:+.5} after {} iterations, final bracket [{:+.5}, {:+.5}]",
            out.point, out.iterations, out.interval.low, out.interval.high
        );
    }

    // a flat function: the bracket slides to the upper end
    let flat = gss_minimize(|_| 1.0, &config);
    println!("flat function: c = {:+.4}", flat.point);

    // custom interval, tighter tolerance, more iterations
    let fine = MemeticConfig {
        interval: GssInterval::new(0.0, 4.0),
        width_tolerance: 1e-8,
        max_gss_iterations: 60,
        ..MemeticConfig::default()
    };
    let out = gss_minimize(f64::cos, &fine);
    println!("min of cos(c) on [0, 4]: c = {:.8} (pi = {:.8})", out.point, std::f64::consts::PI);
}
