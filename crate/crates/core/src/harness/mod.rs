//! Multi-run experiments.
//!
//! An [`ExperimentSpec`] names problems, algorithms and a run count. Each
//! `(problem, algorithm)` cell executes `runs` independent runs whose seeds
//! come from [`derive_run_seed`], then reduces them to [`AggregateStats`].
//! Runs share nothing, and the reduction happens after all runs of a cell have
//! finished, so results depend only on the spec.

mod compare;
mod stats;
mod sweep;
pub mod table;

use serde::{Deserialize, Serialize};

use crate::de::{optimize, DeConfig, RunResult, Strategy};
use crate::error::{Error, Result};
use crate::memetic::MemeticConfig;
use crate::problems::{self, Problem, CATALOG_KEYS};
use crate::rng::derive_run_seed;

pub use compare::{compare_sign, ComparisonRow, SignSummary, Verdict};
pub use stats::{aggregate, AggregateStats};
pub use sweep::{cr_sweep, SweepRow, SweepTable};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentSpec {
    pub problems: Vec<String>,
    pub algorithms: Vec<Strategy>,
    pub runs: usize,
    pub master_seed: u64,
    /// Per-run settings; `seed` and `strategy` are overridden per run.
    pub base: DeConfig,
    pub memetic: MemeticConfig,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        Self {
            problems: CATALOG_KEYS.iter().map(|s| s.to_string()).collect(),
            algorithms: vec![Strategy::De, Strategy::Msde],
            runs: 100,
            master_seed: 0,
            base: DeConfig::default(),
            memetic: MemeticConfig::default(),
        }
    }
}

impl ExperimentSpec {
    pub fn from_toml_str(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_path(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("spec is serializable")
    }

    /// Checks every setting and resolves the problem names.
    pub fn resolve(&self) -> Result<Vec<Problem>> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be positive".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithm selected".into()));
        }
        if self.problems.is_empty() {
            return Err(Error::Config("no problem selected".into()));
        }
        self.base.validate()?;
        self.memetic.validate()?;
        self.problems.iter().map(|p| problems::lookup(p)).collect()
    }

    /// Configuration of run `run` of the given cell.
    pub fn run_config(&self, problem: &str, algorithm: Strategy, run: usize) -> DeConfig {
        DeConfig {
            seed: derive_run_seed(self.master_seed, problem, algorithm.label(), run as u64),
            strategy: algorithm,
            ..self.base.clone()
        }
    }
}

/// Aggregated statistics of one `(problem, algorithm)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct Cell {
    pub problem: String,
    pub algorithm: Strategy,
    pub stats: AggregateStats,
}

/// Experiment output, cells ordered by problem then algorithm.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExperimentTable {
    pub cells: Vec<Cell>,
}

impl ExperimentTable {
    pub fn get(&self, problem: &str, algorithm: Strategy) -> Option<&AggregateStats> {
        self.cells
            .iter()
            .find(|c| c.problem == problem && c.algorithm == algorithm)
            .map(|c| &c.stats)
    }

    /// Problem names in first-appearance order.
    pub fn problems(&self) -> Vec<String> {
        let mut seen: Vec<String> = Vec::new();
        for c in &self.cells {
            if !seen.contains(&c.problem) {
                seen.push(c.problem.clone());
            }
        }
        seen
    }

    /// Appends the cells of `other`, replacing cells with the same key.
    pub fn merge(&mut self, other: ExperimentTable) {
        for cell in other.cells {
            match self
                .cells
                .iter_mut()
                .find(|c| c.problem == cell.problem && c.algorithm == cell.algorithm)
            {
                Some(existing) => *existing = cell,
                None => self.cells.push(cell),
            }
        }
    }
}

/// Executes every run of one cell.
pub fn run_cell(spec: &ExperimentSpec, problem: &Problem, algorithm: Strategy) -> Result<Vec<RunResult>> {
    (0..spec.runs)
        .map(|run| {
            let config = spec.run_config(problem.name(), algorithm, run);
            optimize(problem, &config, &spec.memetic)
        })
        .collect()
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentTable> {
    run_experiment_with(spec, |_| {})
}

/// Like [`run_experiment`], calling `on_cell` as each cell completes.
pub fn run_experiment_with(
    spec: &ExperimentSpec,
    mut on_cell: impl FnMut(&Cell),
) -> Result<ExperimentTable> {
    let problems = spec.resolve()?;
    let mut table = ExperimentTable::default();
    for problem in &problems {
        for &algorithm in &spec.algorithms {
            let results = run_cell(spec, problem, algorithm)?;
            let cell = Cell {
                problem: problem.name().to_string(),
                algorithm,
                stats: aggregate(&results)?,
            };
            on_cell(&cell);
            table.cells.push(cell);
        }
    }
    Ok(table)
}
