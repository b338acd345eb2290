use rayon::prelude::*;

use super::bounds::{cycle_transversal_weight, global_bounds, localized_bounds, Window};
use super::intervals::{cycle_graph, cycle_transversal_ideal};
use super::sigma::{s_consistent_permutation, SigmaCertificate};
use crate::beialgebra::{admissible_path_generators, vnumber_with, PrimeReport, VNumberOptions};
use crate::graphcore::{Graph, VertexSet};
use crate::polykernel::{is_groebner_basis, MonomialOrder, Polynomial};
use crate::{Error, Result};

/// Outcome of checking admissible paths plus `I_S` for the Gröbner property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisCheck {
    Passed,
    Failed,
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePrime {
    pub report: PrimeReport,
    pub window: Window,
    /// `None` when no value was computed.
    pub within: Option<bool>,
    /// Transversal weight counted from the interval structure.
    pub closed_form_weight: usize,
    pub sigma: Option<SigmaCertificate>,
    pub basis_check: BasisCheck,
}

impl CyclePrime {
    pub fn s(&self) -> VertexSet {
        self.report.s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub n: usize,
    pub primes: Vec<CyclePrime>,
    pub global_v: Option<usize>,
    pub argmin: Option<VertexSet>,
    /// `None` below `n = 6`.
    pub global_window: Option<Window>,
    /// Every prime produced a value.
    pub complete: bool,
}

impl CycleReport {
    /// All computed localized values lie in their windows.
    pub fn all_within(&self) -> bool {
        self.primes.iter().all(|p| p.within != Some(false))
    }

    pub fn global_in_window(&self) -> Option<bool> {
        Some(self.global_window?.contains(self.global_v?))
    }

    /// The computed value when the global window leaves two candidates.
    pub fn resolved_value(&self) -> Option<usize> {
        match self.global_window {
            Some(w) if !w.is_exact() && self.complete => self.global_v,
            _ => None,
        }
    }

    pub fn basis_checks_pass(&self) -> bool {
        self.primes.iter().all(|p| p.basis_check != BasisCheck::Failed)
    }
}

fn basis_check(g: &Graph, n: usize, s: VertexSet) -> Result<(Option<SigmaCertificate>, BasisCheck)> {
    if s.is_empty() {
        return Ok((None, BasisCheck::Skipped("no cut polynomial for the empty set".into())));
    }
    let Some(cert) = s_consistent_permutation(n, s)? else {
        return Ok((None, BasisCheck::Skipped("no S-consistent permutation found".into())));
    };
    let ord = MonomialOrder::from_sigma(cert.sigma.clone())?;
    let gens: Vec<Polynomial> = admissible_path_generators(g, &cert.sigma)
        .into_iter()
        .chain(cycle_transversal_ideal(n, s)?)
        .map(|p| p.monic(&ord))
        .collect();
    let check = if is_groebner_basis(&gens, &ord) { BasisCheck::Passed } else { BasisCheck::Failed };
    Ok((Some(cert), check))
}

/// Computes every localized v-number of `C_n`, compares each with its
/// window, and for nonempty `S` with an S-consistent permutation checks that
/// admissible paths together with `I_S` form a Gröbner basis.
///
/// Per-prime failures stay inside the report; only invalid input is an error.
pub fn verify_cycle(n: usize, opts: &VNumberOptions) -> Result<CycleReport> {
    let g = cycle_graph(n)?;
    let base = vnumber_with(&g, opts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let primes: Result<Vec<CyclePrime>> = pool.install(|| {
        base.per_prime
            .par_iter()
            .map(|rep| {
                let window = localized_bounds(n, rep.s)?;
                let (sigma, basis_check) = basis_check(&g, n, rep.s)?;
                Ok(CyclePrime {
                    report: rep.clone(),
                    window,
                    within: rep.v.map(|v| window.contains(v)),
                    closed_form_weight: cycle_transversal_weight(n, rep.s)?,
                    sigma,
                    basis_check,
                })
            })
            .collect()
    });
    Ok(CycleReport {
        n,
        primes: primes?,
        global_v: base.global_v,
        argmin: base.argmin,
        global_window: global_bounds(n).ok(),
        complete: base.complete,
    })
}
