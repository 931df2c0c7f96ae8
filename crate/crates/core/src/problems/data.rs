//! Constant tables used by the data-driven benchmark functions.
//!
//! Three plain-text files live in `data/`:
//!
//! * `kowalik.dat`: 11 records, columns `a_i inv_b_i` (`b_i = 1 / inv_b_i`)
//! * `meyer_roth.dat`: 5 records, columns `t_i v_i y_i`
//! * `rosenbrock_shift.dat`: 10 records, columns `index o_i`
//!
//! Lines starting with `#` are comments. Each file is checked against a
//! SHA-256 digest, and the loaded tables are validated by evaluating the
//! Kowalik and Meyer-Roth functions at their reported optima.
//!
//! The shift vector was generated with [`generate_rosenbrock_shift`]
//! (components uniform in `[-80, 80)` drawn from [`crate::rng::Stream`]
//! seeded with [`ROSENBROCK_SHIFT_SEED`]) and printed with 15 decimals.

use std::path::Path;
use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rng::Stream;

pub const KOWALIK_FILE: &str = "kowalik.dat";
pub const MEYER_ROTH_FILE: &str = "meyer_roth.dat";
pub const ROSENBROCK_SHIFT_FILE: &str = "rosenbrock_shift.dat";

pub const ROSENBROCK_SHIFT_SEED: u64 = 2005;
pub const ROSENBROCK_SHIFT_DIM: usize = 10;

const KOWALIK_SHA256: &str = "6f84817140ba72bb6ff6b10e18c0f0c36b7c1110e38d096ba62f6e26bb087146";
const MEYER_ROTH_SHA256: &str = "0a310c8e7c8732894df6547032be03dd6c63666793fe522f313fec1d06fe9616";
const ROSENBROCK_SHIFT_SHA256: &str =
    "9d13e19b23de14c40305bef964b1675799d93ad347254738dc0aa1910aa79b60";

const KOWALIK_SRC: &str = include_str!("../../data/kowalik.dat");
const MEYER_ROTH_SRC: &str = include_str!("../../data/meyer_roth.dat");
const ROSENBROCK_SHIFT_SRC: &str = include_str!("../../data/rosenbrock_shift.dat");

#[derive(Clone, Debug, PartialEq)]
pub struct KowalikTable {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeyerRothTable {
    pub t: Vec<f64>,
    pub v: Vec<f64>,
    pub y: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DataTables {
    pub kowalik: KowalikTable,
    pub meyer_roth: MeyerRothTable,
    pub rosenbrock_shift: Vec<f64>,
}

impl DataTables {
    /// Tables compiled into the crate. Parsed and validated once.
    pub fn embedded() -> Self {
        static TABLES: OnceLock<DataTables> = OnceLock::new();
        TABLES
            .get_or_init(|| {
                Self::parse(KOWALIK_SRC, MEYER_ROTH_SRC, ROSENBROCK_SHIFT_SRC)
                    .expect("embedded data tables are valid")
            })
            .clone()
    }

    /// Loads the three table files from `dir`.
    pub fn load_from_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let read = |name: &str| std::fs::read_to_string(dir.join(name));
        Self::parse(
            &read(KOWALIK_FILE)?,
            &read(MEYER_ROTH_FILE)?,
            &read(ROSENBROCK_SHIFT_FILE)?,
        )
    }

    fn parse(kowalik: &str, meyer_roth: &str, shift: &str) -> Result<Self> {
        verify_digest(KOWALIK_FILE, kowalik, KOWALIK_SHA256)?;
        verify_digest(MEYER_ROTH_FILE, meyer_roth, MEYER_ROTH_SHA256)?;
        verify_digest(ROSENBROCK_SHIFT_FILE, shift, ROSENBROCK_SHIFT_SHA256)?;

        let rows = parse_rows(KOWALIK_FILE, kowalik, 2, 11)?;
        let kowalik = KowalikTable {
            a: rows.iter().map(|r| r[0]).collect(),
            b: rows.iter().map(|r| 1.0 / r[1]).collect(),
        };

        let rows = parse_rows(MEYER_ROTH_FILE, meyer_roth, 3, 5)?;
        let meyer_roth = MeyerRothTable {
            t: rows.iter().map(|r| r[0]).collect(),
            v: rows.iter().map(|r| r[1]).collect(),
            y: rows.iter().map(|r| r[2]).collect(),
        };

        let rows = parse_rows(ROSENBROCK_SHIFT_FILE, shift, 2, ROSENBROCK_SHIFT_DIM)?;
        for (i, r) in rows.iter().enumerate() {
            if r[0] != (i + 1) as f64 {
                return Err(data_error(
                    ROSENBROCK_SHIFT_FILE,
                    format!("record {} has index {}", i + 1, r[0]),
                ));
            }
        }
        let rosenbrock_shift = rows.iter().map(|r| r[1]).collect();

        let tables = Self {
            kowalik,
            meyer_roth,
            rosenbrock_shift,
        };
        tables.validate()?;
        Ok(tables)
    }

    /// Checks the reported optima of the data-driven functions to 1e-5.
    pub fn validate(&self) -> Result<()> {
        use super::functions::{kowalik, meyer_roth};
        let k = kowalik(&self.kowalik, &[0.1928, 0.1908, 0.1231, 0.1357]);
        if (k - 3.07e-4).abs() > 1e-5 {
            return Err(data_error(KOWALIK_FILE, format!("optimum check gave {k:e}")));
        }
        let m = meyer_roth(&self.meyer_roth, &[3.13, 15.16, 0.78]);
        if (m - 0.4e-4).abs() > 1e-5 {
            return Err(data_error(MEYER_ROTH_FILE, format!("optimum check gave {m:e}")));
        }
        if self.rosenbrock_shift.iter().any(|o| !(-100.0..=100.0).contains(o)) {
            return Err(data_error(ROSENBROCK_SHIFT_FILE, "shift outside search range".into()));
        }
        Ok(())
    }
}

/// Regenerates the Rosenbrock shift vector from its documented seed.
pub fn generate_rosenbrock_shift(seed: u64, dim: usize) -> Vec<f64> {
    let mut s = Stream::new(seed);
    (0..dim).map(|_| s.uniform(-80.0, 80.0)).collect()
}

/// Lowercase hex SHA-256 of a table file's contents.
pub fn sha256_hex(contents: &str) -> String {
    Sha256::digest(contents.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn verify_digest(name: &str, contents: &str, expected: &str) -> Result<()> {
    let got = sha256_hex(contents);
    if got != expected {
        return Err(data_error(name, format!("checksum mismatch (sha256 {got})")));
    }
    Ok(())
}

fn parse_rows(name: &str, src: &str, columns: usize, records: usize) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::with_capacity(records);
    for (lineno, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(str::parse::<f64>)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| data_error(name, format!("line {}: {e}", lineno + 1)))?;
        if row.len() != columns {
            return Err(data_error(
                name,
                format!("line {}: expected {columns} columns, got {}", lineno + 1, row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != records {
        return Err(data_error(
            name,
            format!("expected {records} records, got {}", rows.len()),
        ));
    }
    Ok(rows)
}

fn data_error(name: &str, reason: String) -> Error {
    Error::Data {
        name: name.to_string(),
        reason,
    }
}
