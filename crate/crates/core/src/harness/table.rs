//! CSV output and input for harness tables.
//!
//! Numbers are written as `{:.6e}` (seven significant digits, `.` decimal
//! separator, no locale dependence); counts are plain integers.
//!
//! | table | columns |
//! |-------|---------|
//! | experiment | `problem,algorithm,MFV,SD,ME,AFE,SR` |
//! | CR sweep | `CR,AFE` (one algorithm) or `CR,AFE_DE,AFE_MSDE` |
//! | sign summary | `problem,verdict`, closed by a `total,<plus count>` row |

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{AggregateStats, Cell, ExperimentSpec, ExperimentTable, SignSummary, SweepTable};
use crate::de::Strategy;
use crate::error::{Error, Result};

pub const EXPERIMENT_HEADER: [&str; 7] = ["problem", "algorithm", "MFV", "SD", "ME", "AFE", "SR"];

pub trait CsvTable {
    fn header(&self) -> Vec<String>;
    fn records(&self) -> Vec<Vec<String>>;
}

pub fn format_number(x: f64) -> String {
    format!("{x:.6e}")
}

impl CsvTable for ExperimentTable {
    fn header(&self) -> Vec<String> {
        EXPERIMENT_HEADER.iter().map(|s| s.to_string()).collect()
    }

    fn records(&self) -> Vec<Vec<String>> {
        self.cells
            .iter()
            .map(|c| {
                vec![
                    c.problem.clone(),
                    c.algorithm.label().to_string(),
                    format_number(c.stats.mfv),
                    format_number(c.stats.sd),
                    format_number(c.stats.me),
                    format_number(c.stats.afe),
                    c.stats.sr.to_string(),
                ]
            })
            .collect()
    }
}

impl CsvTable for SweepTable {
    fn header(&self) -> Vec<String> {
        let mut h = vec!["CR".to_string()];
        if self.algorithms.len() == 1 {
            h.push("AFE".into());
        } else {
            h.extend(self.algorithms.iter().map(|a| format!("AFE_{}", a.label())));
        }
        h
    }

    fn records(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                std::iter::once(format_number(r.crossover_rate))
                    .chain(r.afe.iter().map(|&v| format_number(v)))
                    .collect()
            })
            .collect()
    }
}

impl CsvTable for SignSummary {
    fn header(&self) -> Vec<String> {
        vec!["problem".into(), "verdict".into()]
    }

    fn records(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![r.problem.clone(), r.verdict.to_string()])
            .chain(std::iter::once(vec![
                "total".to_string(),
                self.plus_count().to_string(),
            ]))
            .collect()
    }
}

/// Writes `table` as CSV to `out`.
pub fn emit_csv(table: &impl CsvTable, out: impl Write) -> Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(table.header())?;
    for rec in table.records() {
        w.write_record(rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Writes `table` to `path` through a temporary sibling file, so a failed
/// write never leaves a truncated table behind.
pub fn emit_csv_file(table: &impl CsvTable, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut buf = Vec::new();
    emit_csv(table, &mut buf)?;
    write_atomic(path, &buf)
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let file_name = path
        .file_name()
        .ok_or_else(|| Error::Config(format!("not a file path: {}", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.partial", file_name.to_string_lossy()));
    let result = fs::File::create(&tmp)
        .and_then(|mut f| f.write_all(bytes).and_then(|_| f.sync_all()))
        .and_then(|_| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    Ok(result?)
}

/// Run metadata written next to a CSV file as `<file>.meta.toml`, so the CSV
/// itself keeps its fixed columns.
#[derive(Clone, Debug, Serialize)]
pub struct Metadata {
    pub generator: String,
    pub sd: &'static str,
    pub me: &'static str,
    pub afe: &'static str,
    pub sr: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cr_values: Option<Vec<f64>>,
    pub spec: ExperimentSpec,
}

impl Metadata {
    pub fn new(spec: &ExperimentSpec) -> Self {
        Self {
            generator: concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION")).to_string(),
            sd: "population standard deviation of the best values (divide by N)",
            me: "mean |best - optimum| over all runs, failed runs included",
            afe: "mean evaluations consumed per run; failed runs count their whole budget",
            sr: "number of successful runs out of spec.runs",
            cr_values: None,
            spec: spec.clone(),
        }
    }

    pub fn with_cr_values(mut self, values: &[f64]) -> Self {
        self.cr_values = Some(values.to_vec());
        self
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("metadata is serializable")
    }
}

/// `out.csv` -> `out.csv.meta.toml`.
pub fn sidecar_path(csv_path: impl AsRef<Path>) -> PathBuf {
    let mut name = csv_path.as_ref().as_os_str().to_owned();
    name.push(".meta.toml");
    PathBuf::from(name)
}

pub fn write_sidecar(csv_path: impl AsRef<Path>, metadata: &Metadata) -> Result<()> {
    write_atomic(&sidecar_path(csv_path), metadata.to_toml_string().as_bytes())
}

/// Parses an experiment table written by [`emit_csv`].
pub fn read_experiment_csv(input: impl Read) -> Result<ExperimentTable> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != EXPERIMENT_HEADER {
        return Err(Error::Table(format!(
            "expected header {}, got {}",
            EXPERIMENT_HEADER.join(","),
            header.join(",")
        )));
    }
    let mut table = ExperimentTable::default();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let num = |k: usize| -> Result<f64> {
            rec[k]
                .parse::<f64>()
                .map_err(|e| Error::Table(format!("row {}: column {}: {e}", i + 1, EXPERIMENT_HEADER[k])))
        };
        let sr = rec[6]
            .parse::<usize>()
            .map_err(|e| Error::Table(format!("row {}: SR: {e}", i + 1)))?;
        table.cells.push(Cell {
            problem: rec[0].to_string(),
            algorithm: Strategy::parse(&rec[1])?,
            stats: AggregateStats {
                mfv: num(2)?,
                sd: num(3)?,
                me: num(4)?,
                afe: num(5)?,
                sr,
                // not part of the file format
                runs: 0,
            },
        });
    }
    Ok(table)
}

pub fn read_experiment_csv_file(path: impl AsRef<Path>) -> Result<ExperimentTable> {
    read_experiment_csv(fs::File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{ComparisonRow, SweepRow, Verdict};

    fn table() -> ExperimentTable {
        ExperimentTable {
            cells: vec![
                Cell {
                    problem: "f6".into(),
                    algorithm: Strategy::De,
                    stats: AggregateStats {
                        mfv: -2.345_801_234_5,
                        sd: 5.96e-6,
                        me: 5.26e-6,
                        afe: 10858.0,
                        sr: 95,
                        runs: 100,
                    },
                },
                Cell {
                    problem: "f6".into(),
                    algorithm: Strategy::Msde,
                    stats: AggregateStats {
                        mfv: -2.3458,
                        sd: 0.0,
                        me: 5.19e-6,
                        afe: 1261.5,
                        sr: 100,
                        runs: 100,
                    },
                },
            ],
        }
    }

    fn to_string(t: &impl CsvTable) -> String {
        let mut buf = Vec::new();
        emit_csv(t, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn experiment_schema() {
        let s = to_string(&table());
        let mut lines = s.lines();
        assert_eq!(lines.next().unwrap(), "problem,algorithm,MFV,SD,ME,AFE,SR");
        assert_eq!(
            lines.next().unwrap(),
            "f6,DE,-2.345801e0,5.960000e-6,5.260000e-6,1.085800e4,95"
        );
        assert_eq!(lines.count(), 1);
    }

    #[test]
    fn empty_table_is_header_only() {
        assert_eq!(
            to_string(&ExperimentTable::default()),
            "problem,algorithm,MFV,SD,ME,AFE,SR\n"
        );
    }

    #[test]
    fn round_trip_to_printed_precision() {
        let original = table();
        let back = read_experiment_csv(to_string(&original).as_bytes()).unwrap();
        assert_eq!(back.cells.len(), 2);
        for (a, b) in original.cells.iter().zip(&back.cells) {
            assert_eq!(a.problem, b.problem);
            assert_eq!(a.algorithm, b.algorithm);
            assert_eq!(a.stats.sr, b.stats.sr);
            for (x, y) in [
                (a.stats.mfv, b.stats.mfv),
                (a.stats.sd, b.stats.sd),
                (a.stats.me, b.stats.me),
                (a.stats.afe, b.stats.afe),
            ] {
                assert!((x - y).abs() <= 5e-7 * x.abs(), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn bad_header_rejected() {
        assert!(read_experiment_csv("a,b\n1,2\n".as_bytes()).is_err());
        let bad_row = "problem,algorithm,MFV,SD,ME,AFE,SR\nf1,DE,x,0,0,0,1\n";
        assert!(read_experiment_csv(bad_row.as_bytes()).is_err());
    }

    #[test]
    fn sweep_and_sign_layouts() {
        let sweep = SweepTable {
            problems: vec!["f6".into()],
            algorithms: vec![Strategy::Msde],
            rows: vec![SweepRow {
                crossover_rate: 0.9,
                afe: vec![1234.0],
            }],
        };
        assert_eq!(to_string(&sweep), "CR,AFE\n9.000000e-1,1.234000e3\n");

        let both = SweepTable {
            algorithms: vec![Strategy::De, Strategy::Msde],
            rows: vec![SweepRow {
                crossover_rate: 0.5,
                afe: vec![1.0, 2.0],
            }],
            ..sweep
        };
        assert!(to_string(&both).starts_with("CR,AFE_DE,AFE_MSDE\n"));

        let signs = SignSummary {
            rows: vec![
                ComparisonRow { problem: "f1".into(), verdict: Verdict::Plus },
                ComparisonRow { problem: "f7".into(), verdict: Verdict::Minus },
            ],
        };
        assert_eq!(to_string(&signs), "problem,verdict\nf1,+\nf7,-\ntotal,1\n");
    }

    #[test]
    fn sidecar_records_spec() {
        let dir = tempfile::tempdir().unwrap();
        let csv = dir.path().join("t2.csv");
        let spec = ExperimentSpec {
            runs: 7,
            ..ExperimentSpec::default()
        };
        write_sidecar(&csv, &Metadata::new(&spec).with_cr_values(&[0.5, 0.9])).unwrap();
        let text = std::fs::read_to_string(dir.path().join("t2.csv.meta.toml")).unwrap();
        let value: toml::Table = text.parse().unwrap();
        assert_eq!(value["spec"]["runs"].as_integer(), Some(7));
        assert_eq!(value["cr_values"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn unwritable_destination_reports_error() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("no_such_dir").join("out.csv");
        assert!(emit_csv_file(&table(), &missing).is_err());
        assert!(std::fs::read_dir(dir.path()).unwrap().next().is_none());
    }

    #[test]
    fn failed_write_keeps_previous_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        emit_csv_file(&table(), &path).unwrap();
        let before = std::fs::read(&path).unwrap();
        // a directory squatting on the temp name makes the write fail
        std::fs::create_dir(dir.path().join(".out.csv.partial")).unwrap();
        assert!(emit_csv_file(&ExperimentTable::default(), &path).is_err());
        assert_eq!(std::fs::read(&path).unwrap(), before);
    }
}
