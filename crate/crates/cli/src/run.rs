use std::fs;
use std::path::Path;

use vnum_core::beialgebra::{admissible_path_basis, edge_ideal_gens, vnumber_with, Method, PrimeReport, VNumberOptions};
use vnum_core::cyclelab::{
    cycle_graph, cycle_transversal_weight, global_bounds, localized_bounds, verify_cycle, BasisCheck, Window,
};
use vnum_core::graphcore::{enumerate_min_cuts, Graph};
use vnum_core::matroidtrans::{delta_family, min_transversal_weight};
use vnum_core::polykernel::{buchberger, initial_ideal, Polynomial};
use vnum_core::{MonomialOrder, VertexSet};

use crate::config::{Command, CycleMode, PrimeSelector, RunConfig};
use crate::error::{core_exit_code, exit, CliError};
use crate::report::*;

/// A rendered-ready document and the exit status it implies. Per-prime
/// failures leave a partial document with a nonzero status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub document: Document,
    pub exit_code: u8,
}

pub fn run(config: &RunConfig) -> Result<RunOutput, CliError> {
    config.caps.validate()?;
    match &config.command {
        Command::Compute { input, primes, bounds_only, oracle } => {
            let g = read_graph(input)?;
            if *bounds_only {
                compute_bounds_only(&g, primes)
            } else {
                compute(&g, primes, *oracle, config)
            }
        }
        Command::Cycle { n, mode: CycleMode::Bounds } => cycle_bounds(*n),
        Command::Cycle { n, mode: CycleMode::Verify } => cycle_verify(*n, config),
        Command::Gb { input, sigma } => basis(&read_graph(input)?, sigma.as_deref(), config),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    Ok(Graph::parse(&read(path)?)?)
}

/// One line of `n` space-separated images.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>, CliError> {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let [line] = lines[..] else {
        return Err(CliError::Parse("permutation file must hold exactly one line".into()));
    };
    line.split_whitespace()
        .map(|w| w.parse().map_err(|_| CliError::Parse(format!("bad permutation entry `{w}`"))))
        .collect()
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

fn echo(g: &Graph) -> InputEcho {
    InputEcho { n: g.n(), edges: g.edges() }
}

fn window_entry(w: Window) -> WindowEntry {
    WindowEntry { lo: w.lo, hi: w.hi }
}

/// Localized windows on labelled cycles, otherwise the closed form when
/// known, otherwise `[1, transversal weight]`.
fn window_for(g: &Graph, is_cycle: bool, rep: &PrimeReport) -> WindowEntry {
    if is_cycle {
        if let Ok(w) = localized_bounds(g.n(), rep.s) {
            return window_entry(w);
        }
    }
    match (rep.combinatorial, rep.transversal_bound) {
        (Some(c), _) => WindowEntry { lo: c, hi: c },
        (None, Some(t)) => WindowEntry { lo: 1.min(t), hi: t },
        (None, None) => WindowEntry { lo: 0, hi: 0 },
    }
}

fn is_labelled_cycle(g: &Graph) -> bool {
    g.n() >= 3 && cycle_graph(g.n()).is_ok_and(|c| &c == g)
}

fn selected(primes: &PrimeSelector) -> Option<Vec<VertexSet>> {
    match primes {
        PrimeSelector::All => None,
        PrimeSelector::Sets(v) => Some(v.clone()),
    }
}

fn entry(g: &Graph, is_cycle: bool, rep: &PrimeReport, timing: bool) -> PrimeEntry {
    PrimeEntry {
        s: rep.s.to_vec(),
        method: rep.method.to_string(),
        v: rep.v,
        witness: rep.witness.as_ref().map(Polynomial::to_string),
        window: window_for(g, is_cycle, rep),
        oracle_ok: rep.oracle.and_then(|_| rep.oracle_agrees()),
        millis: if timing { rep.millis } else { 0 },
        error: rep.error.as_ref().map(ToString::to_string),
    }
}

fn status(reports: &[PrimeReport]) -> u8 {
    reports.iter().find_map(|r| r.error.as_ref()).map_or(exit::OK, core_exit_code)
}

fn compute(g: &Graph, primes: &PrimeSelector, oracle: bool, config: &RunConfig) -> Result<RunOutput, CliError> {
    let opts = VNumberOptions {
        limits: config.caps.limits(),
        algebraic: true,
        oracle,
        jobs: config.jobs,
        primes: selected(primes),
    };
    let report = vnumber_with(g, &opts)?;
    let is_cycle = is_labelled_cycle(g);
    let doc = ReportDocument {
        version: version(),
        input: echo(g),
        primes: report.per_prime.iter().map(|r| entry(g, is_cycle, r, config.timing)).collect(),
        global: GlobalSummary { v: report.global_v, argmin_s: report.argmin.map(VertexSet::to_vec) },
        cycle: None,
    };
    Ok(RunOutput { exit_code: status(&report.per_prime), document: Document::Report(doc) })
}

/// Graph combinatorics only: closed-form values and transversal windows.
fn compute_bounds_only(g: &Graph, primes: &PrimeSelector) -> Result<RunOutput, CliError> {
    let cuts: Vec<VertexSet> = enumerate_min_cuts(g)?.into_iter().map(|c| c.s).collect();
    let sets = match primes {
        PrimeSelector::All => cuts,
        PrimeSelector::Sets(list) => {
            if let Some(s) = list.iter().find(|s| !cuts.contains(s)) {
                return Err(vnum_core::Error::Precondition(format!("{s} is not in min(G)")).into());
            }
            let mut v = list.clone();
            v.sort();
            v.dedup();
            v
        }
    };
    let is_cycle = is_labelled_cycle(g);
    let mut entries = Vec::new();
    for s in sets {
        let rep = PrimeReport {
            s,
            method: Method::Combinatorial,
            v: None,
            witness: None,
            combinatorial: vnum_core::beialgebra::combinatorial_value(g, s)?,
            transversal_bound: Some(min_transversal_weight(&delta_family(g, s)?)?.0),
            oracle: None,
            error: None,
            millis: 0,
        };
        let mut e = entry(g, is_cycle, &rep, false);
        e.v = rep.combinatorial;
        entries.push(e);
    }
    let global = if entries.iter().all(|e| e.v.is_some()) {
        let best = entries.iter().min_by_key(|e| (e.v, e.s.clone()));
        GlobalSummary { v: best.and_then(|e| e.v), argmin_s: best.map(|e| e.s.clone()) }
    } else {
        GlobalSummary { v: None, argmin_s: None }
    };
    let doc = ReportDocument { version: version(), input: echo(g), primes: entries, global, cycle: None };
    Ok(RunOutput { document: Document::Report(doc), exit_code: exit::OK })
}

fn cycle_bounds(n: usize) -> Result<RunOutput, CliError> {
    let g = cycle_graph(n)?;
    let mut primes = Vec::new();
    for c in enumerate_min_cuts(&g)? {
        primes.push(BoundsEntry {
            s: c.s.to_vec(),
            window: window_entry(localized_bounds(n, c.s)?),
            transversal_weight: cycle_transversal_weight(n, c.s)?,
        });
    }
    let doc = BoundsDocument { version: version(), n, global: global_bounds(n).ok().map(window_entry), primes };
    Ok(RunOutput { document: Document::Bounds(doc), exit_code: exit::OK })
}

fn cycle_verify(n: usize, config: &RunConfig) -> Result<RunOutput, CliError> {
    let g = cycle_graph(n)?;
    let opts = VNumberOptions { limits: config.caps.limits(), jobs: config.jobs, ..VNumberOptions::default() };
    let r = verify_cycle(n, &opts)?;
    let reports: Vec<PrimeReport> = r.primes.iter().map(|p| p.report.clone()).collect();
    let basis_checks = r
        .primes
        .iter()
        .map(|p| BasisEntry {
            s: p.s().to_vec(),
            sigma: p.sigma.as_ref().map(|c| c.sigma.clone()),
            result: match &p.basis_check {
                BasisCheck::Passed => "passed".into(),
                BasisCheck::Failed => "failed".into(),
                BasisCheck::Skipped(why) => format!("skipped: {why}"),
            },
        })
        .collect();
    let doc = ReportDocument {
        version: version(),
        input: echo(&g),
        primes: reports.iter().map(|rep| entry(&g, true, rep, config.timing)).collect(),
        global: GlobalSummary { v: r.global_v, argmin_s: r.argmin.map(VertexSet::to_vec) },
        cycle: Some(CycleSummary {
            global_window: r.global_window.map(window_entry),
            global_in_window: r.global_in_window(),
            all_within: r.all_within(),
            resolved_value: r.resolved_value(),
            basis_checks,
        }),
    };
    let mut code = status(&reports);
    if code == exit::OK && (!r.all_within() || r.global_in_window() == Some(false) || !r.basis_checks_pass()) {
        code = exit::INTERNAL;
    }
    Ok(RunOutput { document: Document::Report(doc), exit_code: code })
}

fn basis(g: &Graph, sigma_file: Option<&Path>, config: &RunConfig) -> Result<RunOutput, CliError> {
    let sigma = match sigma_file {
        Some(p) => parse_permutation(&read(p)?)?,
        None => (1..=g.n()).collect(),
    };
    if sigma.len() != g.n() {
        return Err(vnum_core::Error::Precondition(format!("permutation has {} entries for {} vertices", sigma.len(), g.n())).into());
    }
    let ord = MonomialOrder::from_sigma(sigma.clone())?;
    let gens = edge_ideal_gens(g);
    let (generators, matches, squarefree) = if gens.is_empty() {
        (Vec::new(), true, true)
    } else {
        let gb = buchberger(&gens, &ord, &config.caps.limits().armed())?;
        let matches = admissible_path_basis(g, &sigma).is_ok_and(|adm| adm == gb);
        let squarefree = initial_ideal(&gb).1;
        (gb.generators().iter().map(Polynomial::to_string).collect(), matches, squarefree)
    };
    let doc = BasisDocument {
        version: version(),
        input: echo(g),
        sigma,
        generators,
        matches_admissible_paths: matches,
        squarefree_initial: squarefree,
    };
    Ok(RunOutput { document: Document::Basis(doc), exit_code: exit::OK })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_files() {
        assert_eq!(parse_permutation("3 1 2\n").unwrap(), vec![3, 1, 2]);
        assert!(parse_permutation("1 2\n3\n").is_err());
        assert!(parse_permutation("1 x").is_err());
        assert!(parse_permutation("").is_err());
    }

    #[test]
    fn cycle_bounds_for_nine() {
        let out = cycle_bounds(9).unwrap();
        let Document::Bounds(d) = out.document else { panic!("bounds document expected") };
        assert_eq!(d.global, Some(WindowEntry { lo: 6, hi: 6 }));
    }
}
