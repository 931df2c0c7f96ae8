use msde::harness::table::{emit_csv, read_experiment_csv};
use msde::harness::{compare_sign, cr_sweep, run_experiment, AggregateStats, Cell, Verdict};
use msde::{DeConfig, ExperimentSpec, ExperimentTable, Strategy};

/// Published per-cell results: (problem, DE row, MSDE row), rows as
/// (MFV, SD, ME, AFE, SR).
#[rustfmt::skip]
const PUBLISHED: [(&str, [f64; 5], [f64; 5]); 11] = [
    ("f1", [1.20e-1, 4.75e-1, 1.20e-1, 31942.5, 91.0], [1.00e-2, 9.95e-2, 2.00e-2, 21319.0, 99.0]),
    ("f2", [1.47e-1, 6.46e-1, 1.47e-1, 26918.0, 89.0], [4.57e-4, 5.12e-4, 7.50e-4, 31196.0, 95.0]),
    ("f3", [5.72e-4, 3.29e-4, 2.65e-4, 61900.0, 71.0], [5.53e-4, 3.55e-4, 2.51e-4, 74294.0, 82.0]),
    ("f4", [3.92e2, 2.09, 2.13, 194913.5, 3.0], [3.91e2, 2.49, 8.65e-1, 197758.0, 7.0]),
    ("f5", [-1.03, 1.42e-5, 1.79e-5, 112618.0, 44.0], [-1.03, 4.58e-6, 1.12e-5, 57491.5, 72.0]),
    ("f6", [-2.35, 5.96e-6, 5.26e-6, 10858.0, 95.0], [-2.35, 2.53e-6, 5.19e-6, 1261.0, 100.0]),
    ("f7", [1.91e-3, 1.64e-5, 1.95e-3, 3744.0, 99.0], [1.90e-3, 2.33e-6, 1.95e-3, 4621.0, 99.0]),
    ("f8", [-1.87e2, 5.37e-6, 4.59e-6, 8122.0, 100.0], [-1.87e2, 2.53e-6, 4.66e-6, 7375.5, 100.0]),
    ("f9", [7.20e3, 3.38e-5, 2.43e-5, 65912.5, 71.0], [7.20e3, 1.51e-5, 7.88e-6, 19772.0, 96.0]),
    ("f10", [-9.10, 1.45e-5, 8.13e-5, 72866.0, 100.0], [-9.10, 1.65e-5, 7.71e-5, 69196.5, 100.0]),
    ("f11", [5.83, 6.33, 5.83, 113179.0, 48.0], [4.83, 6.49, 4.84, 83060.0, 63.0]),
];

fn stats(row: [f64; 5]) -> AggregateStats {
    AggregateStats {
        mfv: row[0],
        sd: row[1],
        me: row[2],
        afe: row[3],
        sr: row[4] as usize,
        runs: 100,
    }
}

fn published_table() -> ExperimentTable {
    let mut table = ExperimentTable::default();
    for (problem, de, msde) in PUBLISHED {
        for (algorithm, row) in [(Strategy::De, de), (Strategy::Msde, msde)] {
            table.cells.push(Cell {
                problem: problem.into(),
                algorithm,
                stats: stats(row),
            });
        }
    }
    table
}

#[test]
fn published_results_give_published_signs() {
    let summary = compare_sign(&published_table()).unwrap();
    let signs: String = summary.rows.iter().map(|r| r.verdict.symbol()).collect();
    assert_eq!(signs, "++++++-++++");
    assert_eq!(summary.plus_count(), 10);
    let f7 = summary.rows.iter().find(|r| r.problem == "f7").unwrap();
    assert_eq!(f7.verdict, Verdict::Minus);
}

#[test]
fn published_table_survives_csv_round_trip() {
    let mut buf = Vec::new();
    emit_csv(&published_table(), &mut buf).unwrap();
    let back = read_experiment_csv(buf.as_slice()).unwrap();
    assert_eq!(back.cells.len(), 22);
    let summary = compare_sign(&back).unwrap();
    assert_eq!(summary.plus_count(), 10);
}

fn small_spec() -> ExperimentSpec {
    ExperimentSpec {
        problems: vec!["f5".into(), "f8".into()],
        runs: 4,
        base: DeConfig {
            max_evals: 5_000,
            ..DeConfig::default()
        },
        ..ExperimentSpec::default()
    }
}

#[test]
fn single_rate_sweep_matches_plain_experiment() {
    let spec = small_spec();
    let sweep = cr_sweep(&spec, &[0.9]).unwrap();
    let table = run_experiment(&spec).unwrap();
    assert_eq!(sweep.rows.len(), 1);
    for (k, alg) in spec.algorithms.iter().enumerate() {
        let mean = spec
            .problems
            .iter()
            .map(|p| table.get(p, *alg).unwrap().afe)
            .sum::<f64>()
            / spec.problems.len() as f64;
        assert_eq!(sweep.rows[0].afe[k], mean);
    }
}

#[test]
fn sweep_rejects_bad_rates() {
    let spec = small_spec();
    assert!(cr_sweep(&spec, &[]).is_err());
    assert!(cr_sweep(&spec, &[0.5, 1.5]).is_err());
    assert!(cr_sweep(&spec, &[-0.1]).is_err());
}

#[test]
fn run_order_does_not_matter() {
    let spec = small_spec();
    let forward = run_experiment(&spec).unwrap();
    let reversed = ExperimentSpec {
        problems: spec.problems.iter().rev().cloned().collect(),
        algorithms: spec.algorithms.iter().rev().copied().collect(),
        ..spec.clone()
    };
    let backward = run_experiment(&reversed).unwrap();
    for c in &forward.cells {
        assert_eq!(Some(&c.stats), backward.get(&c.problem, c.algorithm));
    }
}
