//! Real-world problems: pressure vessel design (f9), a Lennard-Jones cluster
//! (f10) and FM sound-wave parameter estimation (f11).

use std::f64::consts::PI;
use std::sync::{Arc, OnceLock};

use super::ConstraintSet;
use crate::error::{Error, Result};

/// Static penalty weight on squared constraint violations.
pub const PRESSURE_VESSEL_PENALTY: f64 = 1e10;

/// Shell thickness, head thickness, inner radius, shell length.
pub const PRESSURE_VESSEL_BOUNDS: [(f64, f64); 4] =
    [(1.125, 12.5), (0.625, 12.5), (1e-8, 240.0), (1e-8, 240.0)];

pub const PRESSURE_VESSEL_OPTIMUM: f64 = 7197.729;

/// Feasible point attaining the best known cost (g1 and g3 active).
pub const PRESSURE_VESSEL_OPTIMUM_POINT: [f64; 4] = [1.125, 0.625, 58.29015544, 43.69266];

/// Material, forming and welding cost, without constraints.
pub fn pressure_vessel_cost(x: &[f64]) -> f64 {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    0.6224 * x1 * x3 * x4
        + 1.7781 * x2 * x3 * x3
        + 3.1611 * x1 * x1 * x4
        + 19.84 * x1 * x1 * x3
}

pub fn pressure_vessel_constraints() -> ConstraintSet {
    ConstraintSet::new(
        vec![
            Arc::new(|x: &[f64]| 0.0193 * x[2] - x[0]),
            Arc::new(|x: &[f64]| 0.00954 * x[2] - x[1]),
            Arc::new(|x: &[f64]| {
                750.0 * 1728.0 - PI * x[2] * x[2] * (x[3] + 4.0 / 3.0 * x[2])
            }),
        ],
        PRESSURE_VESSEL_PENALTY,
    )
}

/// Penalized pressure-vessel objective.
pub fn eval_pressure_vessel(x: &[f64]) -> Result<f64> {
    check_dim(x, 4)?;
    Ok(pressure_vessel_cost(x) + pressure_vessel_constraints().penalty(x))
}

/// Atoms in the catalog cluster.
pub const LJ_ATOMS: usize = 5;

/// Global minimum of the 5-atom cluster (triangular bipyramid), reduced units.
pub const LJ5_MINIMUM: f64 = -9.103852;

/// Energy returned when two atoms (nearly) coincide.
pub const LJ_ENERGY_CAP: f64 = 1e12;

const LJ_MIN_DISTANCE: f64 = 1e-6;

/// Lennard-Jones cluster energy, `sum_{p<q} r^-12 - 2 r^-6`.
///
/// `x` holds consecutive (x, y, z) triples. The pair energy is -1 at r = 1.
/// Any distance below 1e-6 yields [`LJ_ENERGY_CAP`].
pub fn lennard_jones(x: &[f64]) -> f64 {
    let n = x.len() / 3;
    let mut energy = 0.0;
    for p in 0..n {
        let a = &x[3 * p..3 * p + 3];
        for q in (p + 1)..n {
            let b = &x[3 * q..3 * q + 3];
            let r2 = (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2);
            if r2 < LJ_MIN_DISTANCE * LJ_MIN_DISTANCE {
                return LJ_ENERGY_CAP;
            }
            let inv6 = 1.0 / (r2 * r2 * r2);
            energy += inv6 * inv6 - 2.0 * inv6;
        }
    }
    energy.min(LJ_ENERGY_CAP)
}

pub fn eval_lennard_jones(x: &[f64]) -> Result<f64> {
    if x.is_empty() || x.len() % 3 != 0 {
        return Err(Error::Config(format!(
            "Lennard-Jones coordinates must come in triples, got {} values",
            x.len()
        )));
    }
    Ok(lennard_jones(x))
}

/// Parameters `(a1, w1, a2, w2, a3, w3)` reproducing the target wave exactly.
pub const FM_TARGET: [f64; 6] = [1.0, 5.0, -1.5, 4.8, 2.0, 4.9];

const FM_SAMPLES: usize = 101;
const FM_THETA: f64 = 2.0 * PI / 100.0;

fn fm_signal(p: &[f64], t: f64) -> f64 {
    let phase = t * FM_THETA;
    p[0] * (p[1] * phase + p[2] * (p[3] * phase + p[4] * (p[5] * phase).sin()).sin()).sin()
}

fn fm_target_wave() -> &'static [f64; FM_SAMPLES] {
    static WAVE: OnceLock<[f64; FM_SAMPLES]> = OnceLock::new();
    WAVE.get_or_init(|| std::array::from_fn(|t| fm_signal(&FM_TARGET, t as f64)))
}

/// Sum of squared differences between the estimated and target FM waves
/// over t = 0..=100.
pub fn fm_wave(x: &[f64]) -> f64 {
    fm_target_wave()
        .iter()
        .enumerate()
        .map(|(t, &y0)| (fm_signal(x, t as f64) - y0).powi(2))
        .sum()
}

pub fn eval_fm_wave(x: &[f64]) -> Result<f64> {
    check_dim(x, 6)?;
    Ok(fm_wave(x))
}

fn check_dim(x: &[f64], expected: usize) -> Result<()> {
    if x.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            got: x.len(),
        });
    }
    Ok(())
}
