use super::{Candidate, Individual, Population};
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::Stream;

/// Draws `(i1, i2, i3)` uniformly without replacement from
/// `{0..population_size} \ {exclude}`.
pub fn sample_distinct_indices(
    population_size: usize,
    exclude: usize,
    rng: &mut Stream,
) -> Result<[usize; 3]> {
    if population_size < 4 {
        return Err(Error::Config(format!(
            "mutation needs at least 4 individuals, got {population_size}"
        )));
    }
    let mut picked = [usize::MAX; 3];
    for k in 0..3 {
        picked[k] = loop {
            let r = rng.index(population_size);
            if r != exclude && !picked[..k].contains(&r) {
                break r;
            }
        };
    }
    Ok(picked)
}

/// `clamp(base + step * (a - b))`.
pub fn differential_mutant(
    base: &[f64],
    a: &[f64],
    b: &[f64],
    step: f64,
    problem: &Problem,
) -> Candidate {
    let mut v: Vec<f64> = base
        .iter()
        .zip(a.iter().zip(b))
        .map(|(&x, (&xa, &xb))| x + step * (xa - xb))
        .collect();
    problem.clamp(&mut v);
    Candidate::new(v)
}

/// Mutant `x_i1 + F (x_i2 - x_i3)` for the member at `target`.
pub fn mutate_rand_1(
    population: &Population,
    target: usize,
    scale_factor: f64,
    problem: &Problem,
    rng: &mut Stream,
) -> Result<Candidate> {
    let [i1, i2, i3] = sample_distinct_indices(population.len(), target, rng)?;
    Ok(differential_mutant(
        &population.member(i1).vector,
        &population.member(i2).vector,
        &population.member(i3).vector,
        scale_factor,
        problem,
    ))
}

/// Binomial crossover with one forced component taken from `trial`.
///
/// Draws the forced index first, then one uniform per component.
///
/// # Panics
///
/// If `parent` and `trial` differ in length.
pub fn crossover_binomial(
    parent: &[f64],
    trial: &[f64],
    crossover_rate: f64,
    rng: &mut Stream,
) -> Candidate {
    assert_eq!(
        parent.len(),
        trial.len(),
        "crossover requires vectors of equal dimension"
    );
    let forced = rng.index(parent.len());
    parent
        .iter()
        .zip(trial)
        .enumerate()
        .map(|(j, (&p, &t))| {
            let take = rng.unit() < crossover_rate;
            if take || j == forced {
                t
            } else {
                p
            }
        })
        .collect::<Vec<_>>()
        .into()
}

/// Keeps the offspring unless it is strictly worse than the parent.
pub fn select_greedy(parent: Individual, offspring: Individual) -> Individual {
    if offspring.objective <= parent.objective {
        offspring
    } else {
        parent
    }
}

pub fn clamp_to_bounds(vector: &[f64], problem: &Problem) -> Candidate {
    let mut v = vector.to_vec();
    problem.clamp(&mut v);
    Candidate::new(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::de::Individual;
    use proptest::prelude::*;

    fn free_problem(d: usize) -> Problem {
        Problem::new("free", vec![(-100.0, 100.0); d], |_| 0.0, 0.0, 1.0).unwrap()
    }

    fn pop_of(vectors: &[&[f64]]) -> Population {
        Population::new(
            vectors
                .iter()
                .map(|v| Individual::evaluated(Candidate::new(v.to_vec()), 0.0))
                .collect(),
        )
    }

    #[test]
    fn np4_gives_permutation_of_the_rest() {
        let mut rng = Stream::new(1);
        for _ in 0..100 {
            let mut got = sample_distinct_indices(4, 0, &mut rng).unwrap();
            got.sort_unstable();
            assert_eq!(got, [1, 2, 3]);
        }
    }

    #[test]
    fn too_small_population_rejected() {
        let mut rng = Stream::new(1);
        assert!(sample_distinct_indices(3, 0, &mut rng).is_err());
    }

    #[test]
    fn inclusion_frequency_is_three_quarters() {
        // NP = 5, one excluded: each of the 4 admissible indices is in the
        // triple with probability 3/4 under uniform sampling without replacement.
        let mut rng = Stream::new(2024);
        let draws = 100_000;
        let mut hits = [0usize; 5];
        for _ in 0..draws {
            for i in sample_distinct_indices(5, 2, &mut rng).unwrap() {
                hits[i] += 1;
            }
        }
        assert_eq!(hits[2], 0);
        for (i, &h) in hits.iter().enumerate().filter(|(i, _)| *i != 2) {
            let freq = h as f64 / draws as f64;
            assert!((freq - 0.75).abs() < 0.01, "index {i}: {freq}");
        }
    }

    #[test]
    fn mutation_arithmetic() {
        let p = free_problem(2);
        let v = differential_mutant(&[1.0, 1.0], &[3.0, 0.0], &[1.0, 2.0], 0.5, &p);
        assert_eq!(&*v, &[2.0, 0.0]);
    }

    #[test]
    fn mutation_with_zero_scale_or_zero_difference_returns_base() {
        let p = free_problem(2);
        let pop = pop_of(&[&[1.0, 2.0], &[3.0, 4.0], &[5.0, 6.0], &[7.0, 8.0]]);
        let mut rng = Stream::new(5);
        for target in 0..4 {
            let v = mutate_rand_1(&pop, target, 0.0, &p, &mut rng).unwrap();
            assert!(pop.members().iter().any(|m| m.vector == v));
        }
        let v = differential_mutant(&[1.0, 1.0], &[4.0, 4.0], &[4.0, 4.0], 0.9, &p);
        assert_eq!(&*v, &[1.0, 1.0]);
    }

    #[test]
    fn crossover_extremes() {
        let mut rng = Stream::new(11);
        let parent = vec![0.0; 8];
        let trial = vec![1.0; 8];
        for _ in 0..50 {
            assert_eq!(&*crossover_binomial(&parent, &trial, 1.0, &mut rng), &trial[..]);
            let child = crossover_binomial(&parent, &trial, 0.0, &mut rng);
            assert_eq!(child.iter().filter(|&&c| c == 1.0).count(), 1);
        }
    }

    #[test]
    fn crossover_mean_trial_components() {
        // E[count] = 1 + (D - 1) * CR for one forced index.
        let mut rng = Stream::new(99);
        let d = 30;
        let parent = vec![0.0; d];
        let trial = vec![1.0; d];
        let draws = 100_000;
        let total: usize = (0..draws)
            .map(|_| {
                crossover_binomial(&parent, &trial, 0.9, &mut rng)
                    .iter()
                    .filter(|&&c| c == 1.0)
                    .count()
            })
            .sum();
        let mean = total as f64 / draws as f64;
        assert!((mean - (0.9 * 29.0 + 1.0)).abs() < 0.2, "{mean}");
    }

    #[test]
    #[should_panic(expected = "equal dimension")]
    fn crossover_dimension_mismatch_panics() {
        let mut rng = Stream::new(0);
        crossover_binomial(&[0.0; 3], &[0.0; 2], 0.5, &mut rng);
    }

    #[test]
    fn greedy_selection() {
        let ind = |v: f64| Individual::evaluated(Candidate::new(vec![v]), v);
        assert_eq!(select_greedy(ind(5.0), ind(3.0)).objective, 3.0);
        assert_eq!(select_greedy(ind(3.0), ind(5.0)).objective, 3.0);
        let parent = Individual::evaluated(Candidate::new(vec![1.0]), 4.0);
        let child = Individual::evaluated(Candidate::new(vec![2.0]), 4.0);
        assert_eq!(select_greedy(parent, child).vector[0], 2.0);
    }

    #[test]
    fn clamp_examples() {
        let p = free_problem(2);
        assert_eq!(&*clamp_to_bounds(&[150.0, -150.0], &p), &[100.0, -100.0]);
        assert_eq!(&*clamp_to_bounds(&[1.5, -2.0], &p), &[1.5, -2.0]);
    }

    proptest! {
        #[test]
        fn sampled_indices_are_distinct_and_exclude_target(
            np in 4usize..200, target_frac in 0.0f64..1.0, seed in any::<u64>()
        ) {
            let target = ((np as f64) * target_frac) as usize % np;
            let mut rng = Stream::new(seed);
            let [a, b, c] = sample_distinct_indices(np, target, &mut rng).unwrap();
            prop_assert!(a != b && b != c && a != c);
            prop_assert!(a != target && b != target && c != target);
            prop_assert!(a < np && b < np && c < np);
        }

        #[test]
        fn offspring_takes_at_least_one_trial_component(
            d in 1usize..40, cr in 0.0f64..=1.0, seed in any::<u64>()
        ) {
            let mut rng = Stream::new(seed);
            let parent = vec![0.0; d];
            let trial = vec![1.0; d];
            let child = crossover_binomial(&parent, &trial, cr, &mut rng);
            prop_assert!(child.iter().any(|&c| c == 1.0));
        }

        #[test]
        fn mutants_stay_in_bounds(
            base in proptest::collection::vec(-100.0f64..100.0, 3),
            a in proptest::collection::vec(-100.0f64..100.0, 3),
            b in proptest::collection::vec(-100.0f64..100.0, 3),
            step in -2.0f64..3.0,
        ) {
            let p = free_problem(3);
            let v = differential_mutant(&base, &a, &b, step, &p);
            prop_assert!(p.contains(&v));
        }
    }
}
