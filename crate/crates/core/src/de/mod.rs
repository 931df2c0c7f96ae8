//! DE/rand/1/bin.
//!
//! The engine keeps a population of `np` evaluated individuals. Each
//! generation, every member `x_i` is challenged by an offspring built from a
//! mutant `v = x_r1 + F (x_r2 - x_r3)` (three distinct indices, none equal to
//! `i`), binomially crossed with `x_i` under rate `CR` with one forced
//! component. The offspring replaces its parent when its objective is no
//! larger. Generations are synchronous: all mutants of generation `G` are
//! built from `P(G)`.
//!
//! A run stops as soon as the best objective found lies within the problem's
//! acceptable error of the known optimum (checked after every evaluation once
//! the initial population is complete) or when the evaluation budget is spent.

mod operators;
mod run;

use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use operators::{
    clamp_to_bounds, crossover_binomial, differential_mutant, mutate_rand_1,
    sample_distinct_indices, select_greedy,
};
pub use run::{init_population, optimize, run_de, Evaluator};
pub(crate) use run::evolve;

/// A point in the search space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate(Vec<f64>);

impl Candidate {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl From<Vec<f64>> for Candidate {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

impl Deref for Candidate {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl DerefMut for Candidate {
    fn deref_mut(&mut self) -> &mut [f64] {
        &mut self.0
    }
}

/// A candidate with its cached objective value.
#[derive(Clone, Debug, PartialEq)]
pub struct Individual {
    pub vector: Candidate,
    pub objective: f64,
    pub evaluated: bool,
}

impl Individual {
    pub fn evaluated(vector: Candidate, objective: f64) -> Self {
        Self {
            vector,
            objective,
            evaluated: true,
        }
    }

    /// Placeholder for a member the budget did not allow to evaluate.
    pub fn unevaluated(vector: Candidate) -> Self {
        Self {
            vector,
            objective: f64::INFINITY,
            evaluated: false,
        }
    }
}

/// Fixed-size population with a cached index of its best member.
#[derive(Clone, Debug)]
pub struct Population {
    members: Vec<Individual>,
    generation: usize,
    best_index: usize,
}

impl Population {
    pub fn new(members: Vec<Individual>) -> Self {
        assert!(!members.is_empty(), "population cannot be empty");
        let mut pop = Self {
            members,
            generation: 0,
            best_index: 0,
        };
        pop.refresh_best();
        pop
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Individual {
        &self.members[i]
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn best_index(&self) -> usize {
        self.best_index
    }

    pub fn best(&self) -> &Individual {
        &self.members[self.best_index]
    }

    /// Replaces the best member, keeping `best_index` valid.
    pub fn replace_best(&mut self, individual: Individual) {
        let i = self.best_index;
        self.members[i] = individual;
        self.refresh_best();
    }

    /// Installs the next generation. Size must not change.
    pub(crate) fn advance(&mut self, next: Vec<Individual>) {
        assert_eq!(next.len(), self.members.len(), "population size is fixed");
        self.members = next;
        self.generation += 1;
        self.refresh_best();
    }

    fn refresh_best(&mut self) {
        // first minimum wins
        let mut best = 0;
        for (i, m) in self.members.iter().enumerate().skip(1) {
            if m.objective < self.members[best].objective {
                best = i;
            }
        }
        self.best_index = best;
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    /// Plain DE/rand/1/bin.
    #[default]
    #[serde(rename = "DE", alias = "de")]
    De,
    /// DE with the golden-section memetic step coefficient.
    #[serde(rename = "MSDE", alias = "msde")]
    Msde,
}

impl Strategy {
    pub fn label(self) -> &'static str {
        match self {
            Strategy::De => "DE",
            Strategy::Msde => "MSDE",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "de" => Ok(Strategy::De),
            "msde" => Ok(Strategy::Msde),
            _ => Err(Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Control parameters of a single run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct DeConfig {
    /// Population size, at least 4.
    pub np: usize,
    /// Mutation scale factor `F` in `[0, 1]`.
    pub scale_factor: f64,
    /// Crossover rate `CR` in `[0, 1]`.
    pub crossover_rate: f64,
    /// Objective evaluation budget.
    pub max_evals: usize,
    pub seed: u64,
    pub strategy: Strategy,
    /// Scout limit carried over from bee-colony setups. Accepted and stored,
    /// no effect on either algorithm.
    pub limit: Option<usize>,
}

impl Default for DeConfig {
    fn default() -> Self {
        Self {
            np: 50,
            scale_factor: 0.5,
            crossover_rate: 0.9,
            max_evals: 200_000,
            seed: 0,
            strategy: Strategy::De,
            limit: None,
        }
    }
}

impl DeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.np < 4 {
            return Err(Error::Config(format!(
                "population size must be at least 4, got {}",
                self.np
            )));
        }
        if !(0.0..=1.0).contains(&self.scale_factor) {
            return Err(Error::Config(format!(
                "scale factor must lie in [0, 1], got {}",
                self.scale_factor
            )));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(Error::Config(format!(
                "crossover rate must lie in [0, 1], got {}",
                self.crossover_rate
            )));
        }
        if self.max_evals == 0 {
            return Err(Error::Config("evaluation budget must be positive".into()));
        }
        Ok(())
    }
}

/// Objective evaluations consumed against a fixed budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalCounter {
    count: usize,
    limit: usize,
}

impl EvalCounter {
    pub fn new(limit: usize) -> Self {
        Self { count: 0, limit }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn remaining(&self) -> usize {
        self.limit - self.count
    }

    pub fn is_exhausted(&self) -> bool {
        self.count >= self.limit
    }

    /// Reserves one evaluation; false when the budget is spent.
    pub fn try_consume(&mut self) -> bool {
        if self.is_exhausted() {
            false
        } else {
            self.count += 1;
            true
        }
    }
}

/// Outcome of one optimization run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunResult {
    pub best_vector: Candidate,
    pub best_objective: f64,
    /// `|best_objective - optimum|`.
    pub error: f64,
    pub evals_used: usize,
    pub success: bool,
    pub generations: usize,
    /// Population best after initialization and after every generation.
    pub best_history: Vec<f64>,
    /// Golden-section iterations executed over the run (0 for plain DE).
    pub gss_iterations: usize,
    /// Evaluations spent inside the memetic phase.
    pub memetic_evals: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(DeConfig::default().validate().is_ok());
        let bad = |f: fn(&mut DeConfig)| {
            let mut c = DeConfig::default();
            f(&mut c);
            c.validate().is_err()
        };
        assert!(bad(|c| c.np = 3));
        assert!(bad(|c| c.scale_factor = 1.5));
        assert!(bad(|c| c.scale_factor = -0.1));
        assert!(bad(|c| c.crossover_rate = 1.01));
        assert!(bad(|c| c.crossover_rate = f64::NAN));
        assert!(bad(|c| c.max_evals = 0));
    }

    #[test]
    fn counter_never_exceeds_limit() {
        let mut c = EvalCounter::new(3);
        assert!(c.try_consume());
        assert!(c.try_consume());
        assert!(c.try_consume());
        assert!(!c.try_consume());
        assert_eq!(c.count(), 3);
        assert!(c.is_exhausted());
    }

    #[test]
    fn population_tracks_best() {
        let ind = |v: f64| Individual::evaluated(Candidate::new(vec![v]), v);
        let mut pop = Population::new(vec![ind(3.0), ind(1.0), ind(2.0), ind(1.0)]);
        assert_eq!(pop.best_index(), 1);
        pop.replace_best(ind(0.5));
        assert_eq!(pop.best().objective, 0.5);
        pop.advance(vec![ind(4.0), ind(5.0), ind(0.1), ind(6.0)]);
        assert_eq!(pop.best_index(), 2);
        assert_eq!(pop.generation(), 1);
    }

    #[test]
    fn strategy_parsing() {
        assert_eq!(Strategy::parse("MSDE").unwrap(), Strategy::Msde);
        assert_eq!(Strategy::parse("de").unwrap(), Strategy::De);
        assert!(Strategy::parse("pso").is_err());
    }
}
