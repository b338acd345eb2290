use std::path::PathBuf;
use std::time::Duration;

use vnum_core::graphcore::MAX_VERTICES;
use vnum_core::{Limits, VertexSet};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSelector {
    All,
    Sets(Vec<VertexSet>),
}

/// Parses `1,3` or `empty`.
pub fn parse_prime(text: &str) -> Result<VertexSet, CliError> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("empty") {
        return Ok(VertexSet::EMPTY);
    }
    let mut s = VertexSet::EMPTY;
    for part in text.split(',') {
        let v: usize = part
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex `{part}` in prime selector `{text}`")))?;
        if v == 0 || v > MAX_VERTICES {
            return Err(CliError::Usage(format!("vertex {v} outside 1..={MAX_VERTICES}")));
        }
        s.insert(v);
    }
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

/// Resource caps applied to every prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_polys: usize,
    pub max_degree: u32,
    pub time_budget_secs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_polys: 20_000, max_degree: 40, time_budget_secs: 300 }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_polys == 0 || self.max_degree == 0 || self.time_budget_secs == 0 {
            return Err(CliError::Usage("resource caps must be positive".into()));
        }
        Ok(())
    }

    pub fn limits(&self) -> Limits {
        let mut l = Limits::default();
        l.max_polys = self.max_polys;
        l.max_degree = self.max_degree;
        l.time_budget = Some(Duration::from_secs(self.time_budget_secs));
        l
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleMode {
    Verify,
    Bounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Compute { input: PathBuf, primes: PrimeSelector, bounds_only: bool, oracle: bool },
    Cycle { n: usize, mode: CycleMode },
    Gb { input: PathBuf, sigma: Option<PathBuf> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub caps: Caps,
    pub format: Format,
    /// Worker threads, 0 for one per core.
    pub jobs: usize,
    /// Record per-prime wall time; off gives reproducible output.
    pub timing: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig { command, caps: Caps::default(), format: Format::Table, jobs: 0, timing: true }
    }
}
