use super::{run_experiment, ExperimentSpec};
use crate::de::Strategy;
use crate::error::{Error, Result};

/// Mean AFE at one crossover rate, averaged over the spec's problems.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub crossover_rate: f64,
    /// One value per algorithm of the sweep.
    pub afe: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    /// Problems the AFE values are averaged over.
    pub problems: Vec<String>,
    /// One AFE column per algorithm, in this order.
    pub algorithms: Vec<Strategy>,
    pub rows: Vec<SweepRow>,
}

/// Runs the experiment once per crossover rate.
pub fn cr_sweep(spec: &ExperimentSpec, cr_values: &[f64]) -> Result<SweepTable> {
    if cr_values.is_empty() {
        return Err(Error::Config("the CR list is empty".into()));
    }
    if let Some(bad) = cr_values.iter().find(|cr| !(0.0..=1.0).contains(*cr)) {
        return Err(Error::Config(format!("CR must lie in [0, 1], got {bad}")));
    }
    spec.resolve()?;

    let mut rows = Vec::with_capacity(cr_values.len());
    for &cr in cr_values {
        let mut at_cr = spec.clone();
        at_cr.base.crossover_rate = cr;
        let table = run_experiment(&at_cr)?;
        let afe = spec
            .algorithms
            .iter()
            .map(|&alg| {
                let total: f64 = spec
                    .problems
                    .iter()
                    .map(|p| table.get(p, alg).expect("cell was run").afe)
                    .sum();
                total / spec.problems.len() as f64
            })
            .collect();
        rows.push(SweepRow {
            crossover_rate: cr,
            afe,
        });
    }
    Ok(SweepTable {
        problems: spec.problems.clone(),
        algorithms: spec.algorithms.clone(),
        rows,
    })
}
