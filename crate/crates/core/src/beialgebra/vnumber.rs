use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use super::ideals::{edge_ideal_gens, prime_component};
use crate::graphcore::{enumerate_min_cuts, ensure_min_cut, gamma_c, gamma_c_pair, is_minimal_kcut, Graph, VertexSet};
use crate::matroidtrans::{delta_family, min_transversal_weight};
use crate::polykernel::{
    buchberger, colon_ideal, colon_poly, intersect, min_new_degree_gb, GroebnerBasis, Limits, MonomialOrder,
    Polynomial,
};
use crate::{Error, ResourceKind, Result};

/// `v_{P_S}(J_G)` with a witness `w` satisfying `(J_G : w) = P_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeValue {
    pub v: usize,
    pub witness: Polynomial,
}

fn gb_of(gens: &[Polynomial], ord: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let mut all = gens.to_vec();
    all.push(Polynomial::zero());
    buchberger(&all, ord, limits)
}

/// Localized v-number through the colon `(J_G : P_S)` and its lowest new degree.
/// The witness is certified with [`check_colon_equals_prime`] before it is returned.
pub fn vnumber_at_prime(g: &Graph, s: VertexSet, limits: &Limits) -> Result<PrimeValue> {
    ensure_min_cut(g, s)?;
    if s.is_empty() && g.is_complete() {
        return Ok(PrimeValue { v: 0, witness: Polynomial::one() });
    }
    let limits = limits.armed();
    let ord = MonomialOrder::identity(g.n());
    let j = edge_ideal_gens(g);
    let p = prime_component(g, s)?;
    let colon = colon_ideal(&j, &p.gens, &ord, &limits)?;
    let gj = gb_of(&j, &ord, &limits)?;
    let (d, witness) = min_new_degree_gb(&colon, &gj)?;
    if !check_colon_equals_prime(g, &witness, s, &limits)? {
        log::warn!("witness {witness} at S = {s} has a colon different from P_S");
        return Err(Error::Internal(format!("witness {witness} failed the colon check at S = {s}")));
    }
    Ok(PrimeValue { v: d as usize, witness })
}

/// `(J_G : f) = P_S`, decided by mutual containment of reduced bases.
pub fn check_colon_equals_prime(g: &Graph, f: &Polynomial, s: VertexSet, limits: &Limits) -> Result<bool> {
    if f.is_zero() || !f.is_homogeneous() {
        return Err(Error::pre("the certificate must be a nonzero homogeneous polynomial"));
    }
    let ord = MonomialOrder::identity(g.n());
    let p = prime_component(g, s)?;
    let j = edge_ideal_gens(g);
    let colon = if j.is_empty() {
        GroebnerBasis::zero_ideal(&ord)
    } else {
        colon_poly(&j, f, &ord, limits)?
    };
    let gp = gb_of(&p.gens, &ord, limits)?;
    Ok(colon.contains_all(gp.generators()) && gp.contains_all(colon.generators()))
}

/// Reduced basis of `∩ P_{S'}` over the given sets, folded left to right.
/// Returns the unit ideal for an empty list.
pub fn intersect_primes(g: &Graph, sets: &[VertexSet], ord: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let mut acc: Option<GroebnerBasis> = None;
    for &s in sets {
        let p = prime_component(g, s)?;
        acc = Some(match acc {
            None => gb_of(&p.gens, ord, limits)?,
            Some(q) => intersect(q.generators(), &p.gens, ord, limits)?,
        });
    }
    Ok(acc.unwrap_or_else(|| GroebnerBasis::unit(ord)))
}

/// Independent route through the decomposition `J_G = ∩ P_S`: the least
/// degree of an element of `Q = ∩_{S' ≠ S} P_{S'}` outside `P_S`.
///
/// Degrees are scanned upward from 0, testing `m·q` for each basis element
/// `q` of `Q` with `m` a power of some `x_j`, `j ∉ S`. The scan stops at `2n`.
pub fn oracle_vnumber_at_prime(g: &Graph, s: VertexSet, limits: &Limits) -> Result<usize> {
    ensure_min_cut(g, s)?;
    let limits = limits.armed();
    let ord = MonomialOrder::identity(g.n());
    let others: Vec<VertexSet> = enumerate_min_cuts(g)?.into_iter().map(|c| c.s).filter(|&t| t != s).collect();
    let q = intersect_primes(g, &others, &ord, &limits)?;
    let p = gb_of(&prime_component(g, s)?.gens, &ord, &limits)?;
    let free = (g.vertices() - s).min().ok_or_else(|| Error::pre("S must leave a vertex outside"))?;
    let cap = 2 * g.n() as u32;
    for d in 0..=cap {
        for gen in q.generators() {
            let e = gen.total_degree();
            if e > d {
                continue;
            }
            let m = Polynomial::x(free).pow(d - e);
            if !p.contains(&(&m * gen)) {
                return Ok(d as usize);
            }
        }
    }
    Err(Error::Resource(ResourceKind::DegreeSearch))
}

/// How a reported value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Algebraic,
    Combinatorial,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Algebraic => "algebraic",
            Method::Combinatorial => "combinatorial",
            Method::Oracle => "oracle",
        })
    }
}

/// Closed-form value when one is known: `γ_c(G)` at `∅` (0 for complete
/// graphs) and `γ_c(V_1, V_2)` at minimal 2-cuts.
pub fn combinatorial_value(g: &Graph, s: VertexSet) -> Result<Option<usize>> {
    ensure_min_cut(g, s)?;
    if s.is_empty() {
        return Ok(Some(if g.is_complete() { 0 } else { gamma_c(g)?.0 }));
    }
    if is_minimal_kcut(g, s)?.k == 2 {
        return Ok(Some(gamma_c_pair(g, s)?.0));
    }
    Ok(None)
}

/// Per-prime entry of a [`VNumberReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeReport {
    pub s: VertexSet,
    pub method: Method,
    pub v: Option<usize>,
    pub witness: Option<Polynomial>,
    pub combinatorial: Option<usize>,
    /// Minimum transversal weight of `Δ_S`, an upper bound for `v`.
    pub transversal_bound: Option<usize>,
    pub oracle: Option<usize>,
    pub error: Option<Error>,
    pub millis: u64,
}

impl PrimeReport {
    pub fn combinatorial_agrees(&self) -> Option<bool> {
        Some(self.v? == self.combinatorial?)
    }

    pub fn oracle_agrees(&self) -> Option<bool> {
        Some(self.v? == self.oracle?)
    }

    pub fn within_transversal_bound(&self) -> Option<bool> {
        Some(self.v? <= self.transversal_bound?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VNumberReport {
    pub per_prime: Vec<PrimeReport>,
    /// Minimum over the primes that produced a value.
    pub global_v: Option<usize>,
    pub argmin: Option<VertexSet>,
    /// Every prime produced a value.
    pub complete: bool,
}

impl VNumberReport {
    pub fn first_error(&self) -> Option<&Error> {
        self.per_prime.iter().find_map(|p| p.error.as_ref())
    }
}

/// Knobs for [`vnumber_with`].
#[derive(Debug, Clone)]
pub struct VNumberOptions {
    pub limits: Limits,
    /// Run the colon computation. Without it only combinatorial values are reported.
    pub algebraic: bool,
    pub oracle: bool,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Restrict to these sets; they must lie in `min(G)`.
    pub primes: Option<Vec<VertexSet>>,
}

impl Default for VNumberOptions {
    fn default() -> Self {
        VNumberOptions { limits: Limits::default(), algebraic: true, oracle: false, jobs: 0, primes: None }
    }
}

fn evaluate(g: &Graph, s: VertexSet, opts: &VNumberOptions) -> PrimeReport {
    let start = Instant::now();
    let mut rep = PrimeReport {
        s,
        method: if opts.algebraic { Method::Algebraic } else { Method::Combinatorial },
        v: None,
        witness: None,
        combinatorial: None,
        transversal_bound: None,
        oracle: None,
        error: None,
        millis: 0,
    };
    let record = |e: Error, rep: &mut PrimeReport| {
        if rep.error.is_none() {
            rep.error = Some(e);
        }
    };
    match combinatorial_value(g, s) {
        Ok(c) => rep.combinatorial = c,
        Err(e) => record(e, &mut rep),
    }
    match delta_family(g, s).and_then(|f| min_transversal_weight(&f)) {
        Ok((w, _)) => rep.transversal_bound = Some(w),
        Err(e) => record(e, &mut rep),
    }
    if opts.algebraic {
        match vnumber_at_prime(g, s, &opts.limits) {
            Ok(pv) => {
                rep.v = Some(pv.v);
                rep.witness = Some(pv.witness);
            }
            Err(e) => record(e, &mut rep),
        }
    }
    if opts.oracle {
        match oracle_vnumber_at_prime(g, s, &opts.limits) {
            Ok(v) => {
                rep.oracle = Some(v);
                if !opts.algebraic {
                    rep.v = Some(v);
                    rep.method = Method::Oracle;
                }
            }
            Err(e) => record(e, &mut rep),
        }
    }
    if rep.v.is_none() && rep.error.is_none() {
        rep.v = rep.combinatorial;
    }
    rep.millis = start.elapsed().as_millis() as u64;
    rep
}

/// Evaluates every selected prime, concurrently up to `opts.jobs`. Per-prime
/// failures are recorded in the report; only invalid input is an error.
pub fn vnumber_with(g: &Graph, opts: &VNumberOptions) -> Result<VNumberReport> {
    let cuts: Vec<VertexSet> = enumerate_min_cuts(g)?.into_iter().map(|c| c.s).collect();
    let selected = match &opts.primes {
        None => cuts,
        Some(list) => {
            for s in list {
                if !cuts.contains(s) {
                    return Err(Error::pre(format!("{s} is not in min(G)")));
                }
            }
            let mut v = list.clone();
            v.sort();
            v.dedup();
            v
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let per_prime: Vec<PrimeReport> = pool.install(|| selected.par_iter().map(|&s| evaluate(g, s, opts)).collect());
    let mut best: Option<(usize, VertexSet)> = None;
    for r in &per_prime {
        if let Some(v) = r.v {
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, r.s));
            }
        }
    }
    let complete = per_prime.iter().all(|r| r.v.is_some() && r.error.is_none());
    Ok(VNumberReport { global_v: best.map(|b| b.0), argmin: best.map(|b| b.1), per_prime, complete })
}

/// `v(J_G)` over all minimal primes, failing on the first per-prime error.
pub fn vnumber(g: &Graph, limits: &Limits) -> Result<VNumberReport> {
    let report = vnumber_with(g, &VNumberOptions { limits: limits.clone(), ..VNumberOptions::default() })?;
    match report.first_error() {
        Some(e) => Err(e.clone()),
        None => Ok(report),
    }
}
