use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::config::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowEntry {
    pub lo: usize,
    pub hi: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub s: Vec<usize>,
    pub method: String,
    pub v: Option<usize>,
    pub witness: Option<String>,
    pub window: WindowEntry,
    pub oracle_ok: Option<bool>,
    pub millis: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalSummary {
    pub v: Option<usize>,
    pub argmin_s: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub s: Vec<usize>,
    pub sigma: Option<Vec<usize>>,
    pub result: String,
}

/// Extra fields for `cycle --verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSummary {
    pub global_window: Option<WindowEntry>,
    pub global_in_window: Option<bool>,
    pub all_within: bool,
    /// Computed value where the global window leaves two candidates.
    pub resolved_value: Option<usize>,
    pub basis_checks: Vec<BasisEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: String,
    pub input: InputEcho,
    pub primes: Vec<PrimeEntry>,
    pub global: GlobalSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<CycleSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsEntry {
    pub s: Vec<usize>,
    pub window: WindowEntry,
    pub transversal_weight: usize,
}

/// Output of `cycle --bounds`: windows only, no algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDocument {
    pub version: String,
    pub n: usize,
    pub global: Option<WindowEntry>,
    pub primes: Vec<BoundsEntry>,
}

/// Output of `gb`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDocument {
    pub version: String,
    pub input: InputEcho,
    pub sigma: Vec<usize>,
    pub generators: Vec<String>,
    pub matches_admissible_paths: bool,
    pub squarefree_initial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Report(ReportDocument),
    Bounds(BoundsDocument),
    Basis(BasisDocument),
}

fn set_text(s: &[usize]) -> String {
    let inner: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn window_text(w: &WindowEntry) -> String {
    format!("[{},{}]", w.lo, w.hi)
}

impl Document {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = match self {
                    Document::Report(d) => serde_json::to_string_pretty(d),
                    Document::Bounds(d) => serde_json::to_string_pretty(d),
                    Document::Basis(d) => serde_json::to_string_pretty(d),
                }
                .expect("documents serialize");
                s.push('\n');
                s
            }
            Format::Table => match self {
                Document::Report(d) => table_report(d),
                Document::Bounds(d) => table_bounds(d),
                Document::Basis(d) => table_basis(d),
            },
        }
    }
}

fn table_report(d: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph: n = {}, {} edges", d.input.n, d.input.edges.len());
    let _ = writeln!(out, "{:<14} {:<13} {:>3} {:>8} {:>6} {:>7}  witness", "S", "method", "v", "window", "oracle", "ms");
    for p in &d.primes {
        let _ = write!(
            out,
            "{:<14} {:<13} {:>3} {:>8} {:>6} {:>7}  {}",
            set_text(&p.s),
            p.method,
            opt(&p.v),
            window_text(&p.window),
            opt(&p.oracle_ok),
            p.millis,
            p.witness.as_deref().unwrap_or("-")
        );
        if let Some(e) = &p.error {
            let _ = write!(out, "  error: {e}");
        }
        out.push('\n');
    }
    match (&d.global.v, &d.global.argmin_s) {
        (Some(v), Some(s)) => {
            let _ = writeln!(out, "global v = {v} at S = {}", set_text(s));
        }
        _ => out.push_str("global v unavailable\n"),
    }
    if let Some(c) = &d.cycle {
        if let Some(w) = &c.global_window {
            let _ = writeln!(out, "global window {} contains v: {}", window_text(w), opt(&c.global_in_window));
        }
        let _ = writeln!(out, "all localized values within windows: {}", c.all_within);
        if let Some(v) = c.resolved_value {
            let _ = writeln!(out, "two-value window resolved to {v}");
        }
        for b in &c.basis_checks {
            let sigma = b.sigma.as_ref().map_or("-".to_string(), |s| format!("{s:?}"));
            let _ = writeln!(out, "basis check S = {}: {} (sigma {sigma})", set_text(&b.s), b.result);
        }
    }
    out
}

fn table_bounds(d: &BoundsDocument) -> String {
    let mut out = String::new();
    match &d.global {
        Some(w) => {
            let _ = writeln!(out, "C_{}: global window {}", d.n, window_text(w));
        }
        None => {
            let _ = writeln!(out, "C_{}: no global window below n = 6, compute directly", d.n);
        }
    }
    for p in &d.primes {
        let _ = writeln!(out, "{:<14} window {:>8}  transversal weight {}", set_text(&p.s), window_text(&p.window), p.transversal_weight);
    }
    out
}

fn table_basis(d: &BasisDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "reduced basis, sigma = {:?}, {} elements", d.sigma, d.generators.len());
    for g in &d.generators {
        let _ = writeln!(out, "  {g}");
    }
    let _ = writeln!(out, "matches admissible paths: {}", d.matches_admissible_paths);
    let _ = writeln!(out, "squarefree initial ideal: {}", d.squarefree_initial);
    out
}
