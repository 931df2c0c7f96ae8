use super::{
    crossover_binomial, differential_mutant, sample_distinct_indices, select_greedy, Candidate,
    DeConfig, EvalCounter, Individual, Population, RunResult, Strategy,
};
use crate::error::Result;
use crate::memetic::{compute_fj, MemeticConfig};
use crate::problems::Problem;
use crate::rng::Stream;

/// Budgeted objective access for one run.
///
/// Every call to [`Evaluator::evaluate`] consumes one unit of the budget and
/// updates the best value seen. Once armed, an improvement that lands within
/// the acceptable error marks the run as solved.
pub struct Evaluator<'p> {
    problem: &'p Problem,
    counter: EvalCounter,
    best: f64,
    armed: bool,
    solved: bool,
}

impl<'p> Evaluator<'p> {
    pub fn new(problem: &'p Problem, max_evals: usize) -> Self {
        Self {
            problem,
            counter: EvalCounter::new(max_evals),
            best: f64::INFINITY,
            armed: false,
            solved: false,
        }
    }

    pub fn problem(&self) -> &'p Problem {
        self.problem
    }

    pub fn counter(&self) -> &EvalCounter {
        &self.counter
    }

    /// Objective value of `x`, or `None` when the budget is spent.
    pub fn evaluate(&mut self, x: &[f64]) -> Option<f64> {
        if !self.counter.try_consume() {
            return None;
        }
        let f = self.problem.evaluate(x);
        if f < self.best {
            self.best = f;
            if self.armed && self.problem.is_success(f) {
                self.solved = true;
            }
        }
        Some(f)
    }

    /// Starts checking the stopping criterion, including the current best.
    pub fn arm(&mut self) {
        self.armed = true;
        if self.problem.is_success(self.best) {
            self.solved = true;
        }
    }

    pub fn is_solved(&self) -> bool {
        self.solved
    }

    pub fn is_halted(&self) -> bool {
        self.solved || self.counter.is_exhausted()
    }
}

/// Uniform random population of `config.np` members, evaluated in order.
///
/// Members the budget cannot cover stay unevaluated.
pub fn init_population(
    problem: &Problem,
    config: &DeConfig,
    rng: &mut Stream,
    evaluator: &mut Evaluator<'_>,
) -> Population {
    let members = (0..config.np)
        .map(|_| {
            let x: Vec<f64> = problem
                .bounds()
                .iter()
                .map(|&(lo, hi)| rng.uniform(lo, hi))
                .collect();
            let x = Candidate::new(x);
            match evaluator.evaluate(&x) {
                Some(f) => Individual::evaluated(x, f),
                None => Individual::unevaluated(x),
            }
        })
        .collect();
    Population::new(members)
}

/// Runs plain DE/rand/1/bin with `config.seed`.
pub fn run_de(problem: &Problem, config: &DeConfig) -> Result<RunResult> {
    evolve(problem, config, None)
}

/// Runs the algorithm selected by `config.strategy`.
pub fn optimize(problem: &Problem, config: &DeConfig, memetic: &MemeticConfig) -> Result<RunResult> {
    match config.strategy {
        Strategy::De => run_de(problem, config),
        Strategy::Msde => crate::memetic::run_msde(problem, config, memetic),
    }
}

pub(crate) fn evolve(
    problem: &Problem,
    config: &DeConfig,
    memetic: Option<&MemeticConfig>,
) -> Result<RunResult> {
    config.validate()?;
    if let Some(m) = memetic {
        m.validate()?;
    }

    let mut rng = Stream::new(config.seed);
    let mut memetic_rng = Stream::substream(config.seed, "memetic");
    let mut ev = Evaluator::new(problem, config.max_evals);

    let mut pop = init_population(problem, config, &mut rng, &mut ev);
    ev.arm();

    let mut history = vec![pop.best().objective];
    let mut generations = 0;
    let mut gss_iterations = 0;
    let mut memetic_evals = 0;

    while !ev.is_halted() {
        generations += 1;

        let mut step = config.scale_factor;
        if let Some(mem) = memetic {
            let before = ev.counter().count();
            let outcome = compute_fj(
                &mut pop,
                problem,
                mem,
                &mut memetic_rng,
                &mut ev,
            )?;
            gss_iterations += outcome.iterations;
            memetic_evals += ev.counter().count() - before;
            step = config.scale_factor + outcome.f_j;
        }

        let mut next = pop.members().to_vec();
        for (i, slot) in next.iter_mut().enumerate() {
            if ev.is_halted() {
                break;
            }
            let [r1, r2, r3] = sample_distinct_indices(pop.len(), i, &mut rng)?;
            let mutant = differential_mutant(
                &pop.member(r1).vector,
                &pop.member(r2).vector,
                &pop.member(r3).vector,
                step,
                problem,
            );
            let parent = pop.member(i);
            let child = crossover_binomial(&parent.vector, &mutant, config.crossover_rate, &mut rng);
            let Some(f) = ev.evaluate(&child) else { break };
            *slot = select_greedy(parent.clone(), Individual::evaluated(child, f));
        }
        pop.advance(next);
        history.push(pop.best().objective);
    }

    let best = pop.best();
    let error = problem.error_of(best.objective);
    Ok(RunResult {
        best_vector: best.vector.clone(),
        best_objective: best.objective,
        error,
        evals_used: ev.counter().count(),
        success: error <= problem.acceptable_error(),
        generations,
        best_history: history,
        gss_iterations,
        memetic_evals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::lookup;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Arc;

    fn sphere(d: usize) -> Problem {
        Problem::new(
            "sphere",
            vec![(-5.0, 5.0); d],
            |x| x.iter().map(|v| v * v).sum(),
            0.0,
            1e-8,
        )
        .unwrap()
    }

    #[test]
    fn init_respects_bounds() {
        let p = lookup("f1").unwrap();
        let config = DeConfig::default();
        let mut rng = Stream::new(4);
        let mut ev = Evaluator::new(&p, 1000);
        let pop = init_population(&p, &config, &mut rng, &mut ev);
        assert_eq!(pop.len(), 50);
        assert!(pop.members().iter().all(|m| m.evaluated && p.contains(&m.vector)));
        assert_eq!(ev.counter().count(), 50);
        let best = pop.best().objective;
        assert!(pop.members().iter().all(|m| best <= m.objective));
    }

    #[test]
    fn init_on_degenerate_range() {
        let p = Problem::new("flat", vec![(1.5, 1.5); 3], |x| x[0], 1.5, 1.0).unwrap();
        let config = DeConfig { np: 6, ..DeConfig::default() };
        let mut ev = Evaluator::new(&p, 100);
        let pop = init_population(&p, &config, &mut Stream::new(0), &mut ev);
        assert!(pop.members().iter().all(|m| &*m.vector == [1.5, 1.5, 1.5]));
    }

    #[test]
    fn init_is_deterministic() {
        let p = lookup("f1").unwrap();
        let config = DeConfig::default();
        let run = || {
            let mut ev = Evaluator::new(&p, 1000);
            init_population(&p, &config, &mut Stream::new(42), &mut ev)
                .members()
                .iter()
                .flat_map(|m| m.vector.iter().map(|v| v.to_bits()).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn init_truncated_by_budget() {
        let p = sphere(2);
        let config = DeConfig { np: 10, max_evals: 4, ..DeConfig::default() };
        let r = run_de(&p, &config).unwrap();
        assert_eq!(r.evals_used, 4);
        assert_eq!(r.generations, 0);
    }

    #[test]
    fn infinite_tolerance_stops_after_initialization() {
        let p = sphere(3).with_acceptable_error(f64::INFINITY);
        let r = run_de(&p, &DeConfig::default()).unwrap();
        assert!(r.success);
        assert_eq!(r.generations, 0);
        assert_eq!(r.evals_used, 50);
    }

    #[test]
    fn budget_of_one_population() {
        let p = sphere(3);
        let config = DeConfig { max_evals: 50, ..DeConfig::default() };
        let r = run_de(&p, &config).unwrap();
        assert_eq!(r.evals_used, 50);
        assert_eq!(r.generations, 0);
        assert_eq!(r.success, r.error <= 1e-8);
    }

    #[test]
    fn converges_on_sphere_and_counts_exactly() {
        let calls = Arc::new(AtomicUsize::new(0));
        let c = calls.clone();
        let p = sphere(5).map_objective(move |f| {
            move |x: &[f64]| {
                c.fetch_add(1, Ordering::Relaxed);
                f(x)
            }
        });
        let r = run_de(&p, &DeConfig { seed: 3, ..DeConfig::default() }).unwrap();
        assert!(r.success, "{r:?}");
        assert!(r.error <= 1e-8);
        assert_eq!(r.evals_used, calls.load(Ordering::Relaxed));
        assert!(r.evals_used < 200_000);
        assert!(r.best_history.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn same_seed_same_result() {
        let p = lookup("f5").unwrap();
        let config = DeConfig { seed: 17, max_evals: 5_000, ..DeConfig::default() };
        assert_eq!(run_de(&p, &config).unwrap(), run_de(&p, &config).unwrap());
    }

    #[test]
    fn invalid_config_rejected() {
        let p = sphere(2);
        assert!(run_de(&p, &DeConfig { np: 3, ..DeConfig::default() }).is_err());
    }
}
