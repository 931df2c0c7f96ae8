//! Differential Evolution (DE/rand/1/bin) and a memetic variant (MSDE) that
//! tunes the mutation step once per generation with a golden-section search,
//! plus a benchmark catalog and a multi-run experiment harness.
//!
//! ```
//! use msde::{problems, DeConfig, MemeticConfig, Strategy};
//!
//! let problem = problems::lookup("f5")?;
//! let config = DeConfig { strategy: Strategy::Msde, seed: 7, ..DeConfig::default() };
//! let result = msde::optimize(&problem, &config, &MemeticConfig::default())?;
//! assert!(result.success);
//! # Ok::<(), msde::Error>(())
//! ```

pub mod de;
pub mod error;
pub mod harness;
pub mod memetic;
pub mod problems;
pub mod rng;

pub use de::{optimize, run_de, Candidate, DeConfig, Individual, Population, RunResult, Strategy};
pub use error::{Error, Result};
pub use harness::{ExperimentSpec, ExperimentTable};
pub use memetic::{run_msde, MemeticConfig};
pub use problems::Problem;
