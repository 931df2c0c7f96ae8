//! Drives the MSDE generation loop by hand and prints what the memetic phase
//! does: the coefficient f_j, its cost, and whether the best member moved.

use msde::de::{crossover_binomial, init_population, select_greedy, Evaluator, Individual, Population};
use msde::memetic::{compute_fj, mutate_msde, MemeticConfig};
use msde::rng::Stream;
use msde::{problems, DeConfig};

fn main() -> msde::Result<()> {
    let problem = problems::lookup("f2")?;
    let config = DeConfig { seed: 5, ..DeConfig::default() };
    let memetic = MemeticConfig::default();
    let mut rng = Stream::new(config.seed);
    let mut memetic_rng = Stream::substream(config.seed, "memetic");
    let mut ev = Evaluator::new(&problem, config.max_evals);

    let mut pop = init_population(&problem, &config, &mut rng, &mut ev);
    ev.arm();
    let mut generation = 0;
    while !ev.is_halted() {
        generation += 1;
        let before = ev.counter().count();
        let step = compute_fj(&mut pop, &problem, &memetic, &mut memetic_rng, &mut ev)?;
        let gss_cost = ev.counter().count() - before;

        let mut next = pop.members().to_vec();
        for (i, slot) in next.iter_mut().enumerate() {
            if ev.is_halted() {
                break;
            }
            let mutant = mutate_msde(&pop, i, config.scale_factor, step.f_j, &problem, &mut rng)?;
            let child = crossover_binomial(&pop.member(i).vector, &mutant, config.crossover_rate, &mut rng);
            let Some(f) = ev.evaluate(&child) else { break };
            *slot = select_greedy(pop.member(i).clone(), Individual::evaluated(child, f));
        }
        pop = Population::new(next);

        if generation <= 10 || generation % 25 == 0 || ev.is_halted() {
            println!(
                "gen {generation:>4}  f_j {:+.4}  step {:.4}  GSS evals {gss_cost:>2}  best moved {:<5}  best {:.3e}",
                step.f_j,
                config.scale_factor + step.f_j,
                step.replaced_best,
                pop.best().objective
            );
        }
    }
    println!("stopped after {} evaluations, solved: {}", ev.counter().count(), ev.is_solved());
    Ok(())
}
