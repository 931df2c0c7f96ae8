use crate::de::RunResult;
use crate::error::{Error, Result};

/// Summary statistics over repeated runs.
///
/// `sd` is the population standard deviation (divide by N). `me` averages the
/// error of every run, failed runs included. `sr` counts successful runs out of
/// `runs`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AggregateStats {
    pub mfv: f64,
    pub sd: f64,
    pub me: f64,
    pub afe: f64,
    pub sr: usize,
    pub runs: usize,
}

impl AggregateStats {
    pub fn success_rate(&self) -> f64 {
        self.sr as f64 / self.runs as f64
    }
}

pub fn aggregate(results: &[RunResult]) -> Result<AggregateStats> {
    if results.is_empty() {
        return Err(Error::EmptyRuns);
    }
    let n = results.len() as f64;
    let mfv = results.iter().map(|r| r.best_objective).sum::<f64>() / n;
    let var = results
        .iter()
        .map(|r| (r.best_objective - mfv).powi(2))
        .sum::<f64>()
        / n;
    Ok(AggregateStats {
        mfv,
        sd: var.sqrt(),
        me: results.iter().map(|r| r.error).sum::<f64>() / n,
        afe: results.iter().map(|r| r.evals_used as f64).sum::<f64>() / n,
        sr: results.iter().filter(|r| r.success).count(),
        runs: results.len(),
    })
}
