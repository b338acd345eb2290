//! Library side of the `vnum` command: configuration, dispatch and the
//! report documents it prints.

pub mod config;
pub mod error;
pub mod report;
mod run;

pub use config::{parse_prime, Caps, Command, CycleMode, Format, PrimeSelector, RunConfig};
pub use error::{exit, CliError};
pub use report::{BasisDocument, BoundsDocument, Document, PrimeEntry, ReportDocument};
pub use run::{parse_permutation, run, RunOutput};
