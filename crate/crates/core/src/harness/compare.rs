use std::fmt;

use super::{AggregateStats, ExperimentTable};
use crate::de::Strategy;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// MSDE is better than DE.
    Plus,
    /// MSDE is not better, or the difference is negligible.
    Minus,
}

impl Verdict {
    /// MSDE wins on higher success count; on a tie, on lower AFE; on a further
    /// tie, on lower mean error. Anything else is `Minus`.
    pub fn decide(msde: &AggregateStats, de: &AggregateStats) -> Self {
        let better = if msde.sr != de.sr {
            msde.sr > de.sr
        } else if msde.afe != de.afe {
            msde.afe < de.afe
        } else {
            msde.me < de.me
        };
        if better {
            Verdict::Plus
        } else {
            Verdict::Minus
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Verdict::Plus => '+',
            Verdict::Minus => '-',
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub problem: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSummary {
    pub rows: Vec<ComparisonRow>,
}

impl SignSummary {
    pub fn plus_count(&self) -> usize {
        self.rows.iter().filter(|r| r.verdict == Verdict::Plus).count()
    }
}

/// MSDE-vs-DE verdict for every problem of the table.
pub fn compare_sign(table: &ExperimentTable) -> Result<SignSummary> {
    let rows = table
        .problems()
        .into_iter()
        .map(|problem| {
            let cell = |alg: Strategy| {
                table.get(&problem, alg).ok_or_else(|| Error::MissingCell {
                    problem: problem.clone(),
                    algorithm: alg.label().to_string(),
                })
            };
            let verdict = Verdict::decide(cell(Strategy::Msde)?, cell(Strategy::De)?);
            Ok(ComparisonRow { problem, verdict })
        })
        .collect::<Result<_>>()?;
    Ok(SignSummary { rows })
}
