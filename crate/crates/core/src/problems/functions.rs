//! Closed-form benchmark functions f1 through f8.

use super::data::{DataTables, KowalikTable, MeyerRothTable};
use crate::error::{Error, Result};

/// Bias added to the shifted Rosenbrock function; its value at the shift.
pub const ROSENBROCK_BIAS: f64 = 390.0;

/// Step function: `sum(floor(x_i + 0.5)^2)`.
pub fn step(x: &[f64]) -> f64 {
    x.iter()
        .map(|&xi| {
            let s = (xi + 0.5).floor();
            s * s
        })
        .sum()
}

/// Colville function, minimum 0 at (1, 1, 1, 1).
pub fn colville(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    100.0 * (x2 - x1 * x1).powi(2)
        + (1.0 - x1).powi(2)
        + 90.0 * (x4 - x3 * x3).powi(2)
        + (1.0 - x3).powi(2)
        + 10.1 * ((x2 - 1.0).powi(2) + (x4 - 1.0).powi(2))
        + 19.8 * (x2 - 1.0) * (x4 - 1.0)
}

/// Kowalik enzyme-kinetics least squares over the 11-point table.
pub fn kowalik(table: &KowalikTable, x: &[f64]) -> f64 {
    table
        .a
        .iter()
        .zip(&table.b)
        .map(|(&a, &b)| {
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

/// Shifted Rosenbrock: `z = x - o + 1`, value `f_bias` at `x = o`.
pub fn shifted_rosenbrock(shift: &[f64], x: &[f64]) -> f64 {
    let z: Vec<f64> = x.iter().zip(shift).map(|(&xi, &oi)| xi - oi + 1.0).collect();
    z.windows(2)
        .map(|w| 100.0 * (w[0] * w[0] - w[1]).powi(2) + (w[0] - 1.0).powi(2))
        .sum::<f64>()
        + ROSENBROCK_BIAS
}

/// Six-hump camel back.
pub fn six_hump_camel(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let x1s = x1 * x1;
    let x2s = x2 * x2;
    (4.0 - 2.1 * x1s + x1s * x1s / 3.0) * x1s + x1 * x2 + (-4.0 + 4.0 * x2s) * x2s
}

/// Hosaki problem; global minimum at (4, 2).
pub fn hosaki(x: &[f64]) -> f64 {
    let (x1, x2) = (x[0], x[1]);
    let poly = 1.0 - 8.0 * x1 + 7.0 * x1 * x1 - 7.0 / 3.0 * x1.powi(3) + 0.25 * x1.powi(4);
    poly * x2 * x2 * (-x2).exp()
}

/// Meyer and Roth model fit over the 5-point table.
pub fn meyer_roth(table: &MeyerRothTable, x: &[f64]) -> f64 {
    table
        .t
        .iter()
        .zip(&table.v)
        .zip(&table.y)
        .map(|((&t, &v), &y)| {
            let model = x[0] * x[2] * t / (1.0 + x[0] * t + x[1] * v);
            (model - y).powi(2)
        })
        .sum()
}

/// Two-dimensional Shubert function,
/// `sum_i i cos((i+1) x1 + i) * sum_i i cos((i+1) x2 + i)`, i = 1..5.
///
/// Global minimum -186.7309 is attained at 18 points, one of which is
/// (-7.0835, 4.8580).
pub fn shubert(x: &[f64]) -> f64 {
    let term = |v: f64| -> f64 {
        (1..=5)
            .map(|i| {
                let i = i as f64;
                i * ((i + 1.0) * v + i).cos()
            })
            .sum()
    };
    term(x[0]) * term(x[1])
}

/// Evaluates a closed-form catalog function by key.
///
/// Covers f1 through f8; the dimension of `x` must match the catalog entry.
pub fn eval_closed_form(name: &str, x: &[f64]) -> Result<f64> {
    let tables = DataTables::embedded();
    let expected = match name {
        "f1" => 30,
        "f2" | "f3" => 4,
        "f4" => tables.rosenbrock_shift.len(),
        "f5" | "f6" | "f8" => 2,
        "f7" => 3,
        _ => return Err(Error::UnknownProblem(name.to_string())),
    };
    if x.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: x.len(),
        });
    }
    Ok(match name {
        "f1" => step(x),
        "f2" => colville(x),
        "f3" => kowalik(&tables.kowalik, x),
        "f4" => shifted_rosenbrock(&tables.rosenbrock_shift, x),
        "f5" => six_hump_camel(x),
        "f6" => hosaki(x),
        "f7" => meyer_roth(&tables.meyer_roth, x),
        "f8" => shubert(x),
        _ => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn step_is_zero_on_central_cell() {
        assert_eq!(eval_closed_form("f1", &[0.4; 30]).unwrap(), 0.0);
        assert_eq!(step(&[-0.5, 0.49]), 0.0);
    }

    #[test]
    fn step_hand_evaluation() {
        // floor(1.7)^2 + floor(-0.1)^2 = 1 + 1
        assert_eq!(step(&[1.2, -0.6]), 2.0);
    }

    #[test]
    fn colville_minimum() {
        assert_eq!(eval_closed_form("f2", &[1.0; 4]).unwrap(), 0.0);
    }

    #[test]
    fn kowalik_reported_optimum() {
        let v = eval_closed_form("f3", &[0.1928, 0.1908, 0.1231, 0.1357]).unwrap();
        assert_abs_diff_eq!(v, 3.07e-4, epsilon = 1e-5);
    }

    #[test]
    fn shifted_rosenbrock_at_shift_is_bias() {
        let o = DataTables::embedded().rosenbrock_shift;
        assert_eq!(eval_closed_form("f4", &o).unwrap(), 390.0);
    }

    #[test]
    fn camel_reported_optimum() {
        let v = eval_closed_form("f5", &[-0.0898, 0.7126]).unwrap();
        assert_abs_diff_eq!(v, -1.0316, epsilon = 1e-3);
    }

    #[test]
    fn hosaki_minimum() {
        // (1 - 32 + 112 - 448/3 + 64) * 4 * e^-2
        let exact = (145.0 - 448.0 / 3.0) * 4.0 * (-2.0f64).exp();
        assert_abs_diff_eq!(hosaki(&[4.0, 2.0]), exact, epsilon = 1e-14);
        assert_abs_diff_eq!(exact, -2.3458, epsilon = 1e-4);
    }

    #[test]
    fn meyer_roth_reported_optimum() {
        let v = eval_closed_form("f7", &[3.13, 15.16, 0.78]).unwrap();
        assert_abs_diff_eq!(v, 0.4e-4, epsilon = 1e-5);
    }

    #[test]
    fn shubert_global_minimum() {
        let v = eval_closed_form("f8", &[-7.0835, 4.8580]).unwrap();
        assert_abs_diff_eq!(v, -186.7309, epsilon = 1e-3);
        // symmetric image of the same minimum
        assert_abs_diff_eq!(shubert(&[4.8580, -7.0835]), v, epsilon = 1e-12);
    }

    #[test]
    fn closed_form_errors() {
        assert!(matches!(
            eval_closed_form("f9", &[0.0; 4]),
            Err(Error::UnknownProblem(_))
        ));
        assert!(matches!(
            eval_closed_form("f5", &[0.0; 3]),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }
}
