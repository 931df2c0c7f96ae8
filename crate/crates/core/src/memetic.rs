//! Golden-section memetic step for DE (MSDE).
//!
//! Once per generation a golden-section search picks a coefficient `f_j`
//! from an interval (default `[-1.2, 1.2]`). The search minimizes
//!
//! ```text
//! phi(c) = f(clamp(x_best + c (x_r2 - x_r3)))
//! ```
//!
//! for one random difference pair held fixed during the search. If any probe
//! beats the current best member, it replaces that member. When the best member
//! is already the minimum along the sampled line, `f_j` lands near 0 and the
//! generation runs with the plain DE step. Every mutant of the generation then
//! uses
//!
//! ```text
//! v_i = x_r1 + F (x_r2 - x_r3) + f_j (x_r2 - x_r3)
//! ```
//!
//! Each search iteration evaluates both interior points
//! `b - (b - a) psi` and `a + (b - a) psi` and keeps the side of the smaller
//! value, so an iteration costs two objective evaluations and shrinks the
//! interval by `psi`. All probes are charged to the run's budget.

use serde::{Deserialize, Serialize};

use crate::de::{
    differential_mutant, sample_distinct_indices, Candidate, DeConfig, Evaluator, Individual,
    Population, RunResult,
};
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::Stream;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GssInterval {
    pub low: f64,
    pub high: f64,
}

impl GssInterval {
    pub fn new(low: f64, high: f64) -> Self {
        Self { low, high }
    }

    pub fn width(&self) -> f64 {
        self.high - self.low
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.low + self.high)
    }

    pub fn contains(&self, c: f64) -> bool {
        self.low <= c && c <= self.high
    }
}

impl Default for GssInterval {
    fn default() -> Self {
        Self::new(-1.2, 1.2)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MemeticConfig {
    pub interval: GssInterval,
    /// Contraction ratio per iteration.
    pub golden_ratio: f64,
    /// Search stops once the interval is this narrow.
    pub width_tolerance: f64,
    pub max_gss_iterations: usize,
}

impl Default for MemeticConfig {
    fn default() -> Self {
        Self {
            interval: GssInterval::default(),
            golden_ratio: 0.618,
            width_tolerance: 1e-3,
            max_gss_iterations: 20,
        }
    }
}

impl MemeticConfig {
    /// A configuration whose search never iterates: `f_j` is always the
    /// interval midpoint and no evaluations are spent.
    pub fn disabled() -> Self {
        Self {
            width_tolerance: f64::INFINITY,
            ..Self::default()
        }
    }

    pub fn is_active(&self) -> bool {
        self.max_gss_iterations > 0 && self.interval.width() > self.width_tolerance
    }

    pub fn validate(&self) -> Result<()> {
        let GssInterval { low, high } = self.interval;
        if !(low.is_finite() && high.is_finite() && low < high) {
            return Err(Error::Config(format!(
                "search interval must satisfy low < high, got [{low}, {high}]"
            )));
        }
        if !(self.golden_ratio > 0.0 && self.golden_ratio < 1.0) {
            return Err(Error::Config(format!(
                "golden ratio must lie in (0, 1), got {}",
                self.golden_ratio
            )));
        }
        if self.width_tolerance.is_nan() || self.width_tolerance <= 0.0 {
            return Err(Error::Config(format!(
                "width tolerance must be positive, got {}",
                self.width_tolerance
            )));
        }
        if self.max_gss_iterations == 0 {
            return Err(Error::Config("at least one search iteration is required".into()));
        }
        Ok(())
    }
}

/// Result of a golden-section search.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GssOutcome {
    /// Interior point of the last completed iteration with the smaller value
    /// (`f2` on a tie, following the shrink rule), or the midpoint of the
    /// interval if no iteration completed.
    pub point: f64,
    /// `phi(point)` when at least one iteration completed.
    pub value: Option<f64>,
    /// Completed iterations (each evaluated both interior points).
    pub iterations: usize,
    pub interval: GssInterval,
}

/// Golden-section search over `config.interval`.
pub fn gss_minimize(mut phi: impl FnMut(f64) -> f64, config: &MemeticConfig) -> GssOutcome {
    try_gss_minimize(|c| Some(phi(c)), config)
}

/// Golden-section search where `phi` may refuse to evaluate (returns `None`),
/// e.g. because the evaluation budget is spent. The search stops at the first
/// refusal.
pub fn try_gss_minimize(
    mut phi: impl FnMut(f64) -> Option<f64>,
    config: &MemeticConfig,
) -> GssOutcome {
    let psi = config.golden_ratio;
    let mut low = config.interval.low;
    let mut width = config.interval.width();
    let mut last: Option<(f64, f64)> = None;
    let mut iterations = 0;

    while iterations < config.max_gss_iterations && width > config.width_tolerance {
        let reach = width * psi;
        let f1 = low + width - reach;
        let f2 = low + reach;
        let Some(v1) = phi(f1) else { break };
        let Some(v2) = phi(f2) else { break };
        if v1 < v2 {
            last = Some((f1, v1));
        } else {
            last = Some((f2, v2));
            low = f1;
        }
        width = reach;
        iterations += 1;
    }

    let interval = GssInterval::new(low, low + width);
    let (point, value) = match last {
        Some((c, v)) => (c, Some(v)),
        None => (interval.midpoint(), None),
    };
    GssOutcome {
        point,
        value,
        iterations,
        interval,
    }
}

/// What the memetic phase did in one generation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MemeticStep {
    pub f_j: f64,
    pub iterations: usize,
    /// Whether a probe replaced the best member.
    pub replaced_best: bool,
}

/// Runs the golden-section search anchored on the best member and returns the
/// generation's step coefficient `f_j`.
pub fn compute_fj(
    population: &mut Population,
    problem: &Problem,
    config: &MemeticConfig,
    rng: &mut Stream,
    evaluator: &mut Evaluator<'_>,
) -> Result<MemeticStep> {
    if !config.is_active() || evaluator.is_halted() {
        return Ok(MemeticStep {
            f_j: config.interval.midpoint(),
            iterations: 0,
            replaced_best: false,
        });
    }

    let best_index = population.best_index();
    let [_, r2, r3] = sample_distinct_indices(population.len(), best_index, rng)?;
    let base = population.best().vector.clone();
    let a = population.member(r2).vector.clone();
    let b = population.member(r3).vector.clone();

    let mut best_probe: Option<Individual> = None;
    let outcome = try_gss_minimize(
        |c| {
            if evaluator.is_halted() {
                return None;
            }
            let trial = differential_mutant(&base, &a, &b, c, problem);
            let f = evaluator.evaluate(&trial)?;
            if best_probe.as_ref().is_none_or(|p| f < p.objective) {
                best_probe = Some(Individual::evaluated(trial, f));
            }
            Some(f)
        },
        config,
    );

    let mut replaced_best = false;
    if let Some(probe) = best_probe {
        if probe.objective < population.best().objective {
            population.replace_best(probe);
            replaced_best = true;
        }
    }

    let f_j = if outcome.value.is_some() {
        outcome.point
    } else {
        config.interval.midpoint()
    };
    Ok(MemeticStep {
        f_j,
        iterations: outcome.iterations,
        replaced_best,
    })
}

/// Mutant `x_r1 + (F + f_j)(x_r2 - x_r3)` for the member at `target`.
pub fn mutate_msde(
    population: &Population,
    target: usize,
    scale_factor: f64,
    f_j: f64,
    problem: &Problem,
    rng: &mut Stream,
) -> Result<Candidate> {
    let [i1, i2, i3] = sample_distinct_indices(population.len(), target, rng)?;
    Ok(differential_mutant(
        &population.member(i1).vector,
        &population.member(i2).vector,
        &population.member(i3).vector,
        scale_factor + f_j,
        problem,
    ))
}

/// Runs MSDE with `config.seed`.
///
/// The DE operators draw from the same stream as [`crate::de::run_de`]; the
/// memetic phase draws from its own substream, so a disabled memetic phase
/// reproduces plain DE exactly.
pub fn run_msde(problem: &Problem, config: &DeConfig, memetic: &MemeticConfig) -> Result<RunResult> {
    crate::de::evolve(problem, config, Some(memetic))
}
