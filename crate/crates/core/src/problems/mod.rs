//! Benchmark problems.
//!
//! A [`Problem`] bundles an objective with its search box, the reported
//! optimum and the acceptable error used to decide whether a run succeeded.
//! [`catalog`] returns the eleven problems of the standard suite:
//!
//! | key | problem | D | range | optimum | acceptable error |
//! |-----|---------|---|-------|---------|------------------|
//! | f1  | step | 30 | [-100, 100] | 0 | 1e-5 |
//! | f2  | Colville | 4 | [-10, 10] | 0 | 1e-5 |
//! | f3  | Kowalik | 4 | [-5, 5] | 3.07e-4 | 1e-5 |
//! | f4  | shifted Rosenbrock | 10 | [-100, 100] | 390 | 1e-1 |
//! | f5  | six-hump camel back | 2 | [-5, 5] | -1.0316 | 1e-5 |
//! | f6  | Hosaki | 2 | [0, 5] x [0, 6] | -2.3458 | 1e-5 |
//! | f7  | Meyer-Roth | 3 | [-10, 10] | 0.4e-4 | 1e-3 |
//! | f8  | Shubert | 2 | [-10, 10] | -186.7309 | 1e-5 |
//! | f9  | pressure vessel (penalized) | 4 | see [`engineering`] | 7197.729 | 1e-5 |
//! | f10 | Lennard-Jones, 5 atoms | 15 | [-2, 2] | -9.103852 | 1e-4 |
//! | f11 | FM sound wave estimation | 6 | [-6.4, 6.35] | 0 | 1e-5 |

pub mod data;
pub mod engineering;
pub mod functions;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use data::DataTables;

/// Objective mapping a point of the search space to a real value.
pub type Objective = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Inequality constraints `g_k(x) <= 0` handled with a static quadratic
/// penalty.
#[derive(Clone)]
pub struct ConstraintSet {
    constraints: Vec<Objective>,
    pub penalty_coefficient: f64,
}

impl ConstraintSet {
    pub fn new(constraints: Vec<Objective>, penalty_coefficient: f64) -> Self {
        Self {
            constraints,
            penalty_coefficient,
        }
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Constraint values `g_k(x)`; feasible when every entry is `<= 0`.
    pub fn values(&self, x: &[f64]) -> Vec<f64> {
        self.constraints.iter().map(|g| g(x)).collect()
    }

    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.constraints.iter().all(|g| g(x) <= 0.0)
    }

    /// `coefficient * sum(max(0, g_k(x))^2)`; exactly zero on the feasible set.
    pub fn penalty(&self, x: &[f64]) -> f64 {
        let violation: f64 = self
            .constraints
            .iter()
            .map(|g| {
                let v = g(x).max(0.0);
                v * v
            })
            .sum();
        if violation == 0.0 {
            0.0
        } else {
            self.penalty_coefficient * violation
        }
    }
}

impl fmt::Debug for ConstraintSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstraintSet")
            .field("constraints", &self.constraints.len())
            .field("penalty_coefficient", &self.penalty_coefficient)
            .finish()
    }
}

/// An optimization problem (always minimization).
#[derive(Clone)]
pub struct Problem {
    name: String,
    bounds: Vec<(f64, f64)>,
    objective: Objective,
    optimum_value: f64,
    optimum_point: Option<Vec<f64>>,
    acceptable_error: f64,
    constraints: Option<ConstraintSet>,
}

impl Problem {
    /// Builds a problem from its search box and objective.
    ///
    /// Bounds must be finite with `low <= high`; a zero-width dimension is
    /// allowed and pins that coordinate.
    pub fn new<F>(
        name: impl Into<String>,
        bounds: Vec<(f64, f64)>,
        objective: F,
        optimum_value: f64,
        acceptable_error: f64,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        if bounds.is_empty() {
            return Err(Error::Config("a problem needs at least one dimension".into()));
        }
        for (i, &(lo, hi)) in bounds.iter().enumerate() {
            if !lo.is_finite() || !hi.is_finite() || lo > hi {
                return Err(Error::Config(format!(
                    "dimension {i}: invalid range [{lo}, {hi}]"
                )));
            }
        }
        if acceptable_error.is_nan() || acceptable_error <= 0.0 {
            return Err(Error::Config(format!(
                "acceptable error must be positive, got {acceptable_error}"
            )));
        }
        Ok(Self {
            name: name.into(),
            bounds,
            objective: Arc::new(objective),
            optimum_value,
            optimum_point: None,
            acceptable_error,
            constraints: None,
        })
    }

    pub fn with_optimum_point(mut self, point: Vec<f64>) -> Result<Self> {
        if point.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: point.len(),
            });
        }
        self.optimum_point = Some(point);
        Ok(self)
    }

    pub fn with_constraints(mut self, constraints: ConstraintSet) -> Self {
        self.constraints = Some(constraints);
        self
    }

    /// Replaces the objective with `wrap(old_objective)`, keeping all metadata.
    ///
    /// Handy for instrumentation, e.g. counting evaluations in tests.
    pub fn map_objective<W, F>(mut self, wrap: W) -> Self
    where
        W: FnOnce(Objective) -> F,
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        let inner = self.objective.clone();
        self.objective = Arc::new(wrap(inner));
        self
    }

    pub fn with_acceptable_error(mut self, acceptable_error: f64) -> Self {
        self.acceptable_error = acceptable_error;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn optimum_value(&self) -> f64 {
        self.optimum_value
    }

    pub fn optimum_point(&self) -> Option<&[f64]> {
        self.optimum_point.as_deref()
    }

    pub fn acceptable_error(&self) -> f64 {
        self.acceptable_error
    }

    pub fn constraints(&self) -> Option<&ConstraintSet> {
        self.constraints.as_ref()
    }

    /// Objective without any constraint penalty.
    pub fn raw_objective(&self, x: &[f64]) -> f64 {
        (self.objective)(x)
    }

    /// Penalized objective; this is what the optimizers minimize.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        let raw = (self.objective)(x);
        match &self.constraints {
            Some(c) => raw + c.penalty(x),
            None => raw,
        }
    }

    /// `|value - optimum|`.
    pub fn error_of(&self, value: f64) -> f64 {
        (value - self.optimum_value).abs()
    }

    pub fn is_success(&self, value: f64) -> bool {
        self.error_of(value) <= self.acceptable_error
    }

    /// Projects `x` onto the search box in place.
    pub fn clamp(&self, x: &mut [f64]) {
        for (xi, &(lo, hi)) in x.iter_mut().zip(&self.bounds) {
            *xi = xi.clamp(lo, hi);
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x
                .iter()
                .zip(&self.bounds)
                .all(|(&xi, &(lo, hi))| lo <= xi && xi <= hi)
    }
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dimension", &self.dimension())
            .field("optimum_value", &self.optimum_value)
            .field("acceptable_error", &self.acceptable_error)
            .field("constrained", &self.constraints.is_some())
            .finish()
    }
}

/// Keys of the catalog, in suite order.
pub const CATALOG_KEYS: [&str; 11] = [
    "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11",
];

/// All eleven problems, built from the embedded data tables.
pub fn catalog() -> Vec<Problem> {
    let tables = DataTables::embedded();
    catalog_with(&tables)
}

/// The catalog built from explicitly loaded data tables.
pub fn catalog_with(tables: &DataTables) -> Vec<Problem> {
    CATALOG_KEYS
        .iter()
        .map(|k| build(k, tables).expect("catalog keys are valid"))
        .collect()
}

/// Looks up a single catalog problem by key (`"f1"` .. `"f11"`).
pub fn lookup(name: &str) -> Result<Problem> {
    build(name, &DataTables::embedded())
}

fn uniform_bounds(d: usize, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    vec![(lo, hi); d]
}

fn build(name: &str, tables: &DataTables) -> Result<Problem> {
    use engineering as eng;
    use functions as fx;

    let p = match name {
        "f1" => Problem::new("f1", uniform_bounds(30, -100.0, 100.0), fx::step, 0.0, 1e-5)?
            .with_optimum_point(vec![0.0; 30])?,
        "f2" => Problem::new("f2", uniform_bounds(4, -10.0, 10.0), fx::colville, 0.0, 1e-5)?
            .with_optimum_point(vec![1.0; 4])?,
        "f3" => {
            let t = tables.kowalik.clone();
            Problem::new(
                "f3",
                uniform_bounds(4, -5.0, 5.0),
                move |x| fx::kowalik(&t, x),
                3.07e-4,
                1e-5,
            )?
            .with_optimum_point(vec![0.1928, 0.1908, 0.1231, 0.1357])?
        }
        "f4" => {
            let shift = tables.rosenbrock_shift.clone();
            let point = shift.clone();
            Problem::new(
                "f4",
                uniform_bounds(shift.len(), -100.0, 100.0),
                move |x| fx::shifted_rosenbrock(&shift, x),
                fx::ROSENBROCK_BIAS,
                1e-1,
            )?
            .with_optimum_point(point)?
        }
        "f5" => Problem::new("f5", uniform_bounds(2, -5.0, 5.0), fx::six_hump_camel, -1.0316, 1e-5)?
            .with_optimum_point(vec![-0.0898, 0.7126])?,
        "f6" => Problem::new("f6", vec![(0.0, 5.0), (0.0, 6.0)], fx::hosaki, -2.3458, 1e-5)?
            .with_optimum_point(vec![4.0, 2.0])?,
        "f7" => {
            let t = tables.meyer_roth.clone();
            Problem::new(
                "f7",
                uniform_bounds(3, -10.0, 10.0),
                move |x| fx::meyer_roth(&t, x),
                0.4e-4,
                1e-3,
            )?
            .with_optimum_point(vec![3.13, 15.16, 0.78])?
        }
        "f8" => Problem::new("f8", uniform_bounds(2, -10.0, 10.0), fx::shubert, -186.7309, 1e-5)?
            .with_optimum_point(vec![-7.0835, 4.8580])?,
        "f9" => Problem::new(
            "f9",
            eng::PRESSURE_VESSEL_BOUNDS.to_vec(),
            eng::pressure_vessel_cost,
            eng::PRESSURE_VESSEL_OPTIMUM,
            1e-5,
        )?
        .with_constraints(eng::pressure_vessel_constraints())
        .with_optimum_point(eng::PRESSURE_VESSEL_OPTIMUM_POINT.to_vec())?,
        "f10" => Problem::new(
            "f10",
            uniform_bounds(3 * eng::LJ_ATOMS, -2.0, 2.0),
            eng::lennard_jones,
            eng::LJ5_MINIMUM,
            1e-4,
        )?,
        "f11" => Problem::new(
            "f11",
            uniform_bounds(6, -6.4, 6.35),
            eng::fm_wave,
            0.0,
            1e-5,
        )?
        .with_optimum_point(eng::FM_TARGET.to_vec())?,
        other => return Err(Error::UnknownProblem(other.to_string())),
    };
    Ok(p)
}
