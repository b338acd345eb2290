use super::intervals::{intervals, step, IntervalDecomposition};
use crate::graphcore::{families::all_permutations, VertexSet};
use crate::{Error, Result};

/// Largest `n` for which a missing construction falls back to trying all `n!` permutations.
pub const SEARCH_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaSource {
    /// Built from two singleton intervals.
    Construction,
    /// Found by exhaustive search.
    Search,
    /// Supplied by the caller.
    Given,
}

/// A permutation with the outcome of each of the five S-consistency conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaCertificate {
    /// `sigma[v - 1] = σ(v)`.
    pub sigma: Vec<usize>,
    pub checks: [bool; 5],
    pub source: SigmaSource,
}

impl SigmaCertificate {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|&c| c)
    }
}

fn conditions(d: &IntervalDecomposition, sigma: &[usize]) -> [bool; 5] {
    let n = d.n;
    let r = |v: usize| sigma[v - 1];
    let mut ok = [true; 5];
    for j in 0..d.k() {
        let (cur, next) = (d.interval(j), d.interval(j + 1));
        let (b, a) = (cur.b, next.a);
        let up = r(b) < r(a);
        if next.len >= 2 {
            let after = r(step(n, a, 1));
            ok[if up { 0 } else { 2 }] &= if up { r(a) < after } else { r(a) > after };
        }
        if cur.len >= 2 {
            let before = r(step(n, b, -1));
            ok[if up { 1 } else { 3 }] &= if up { before < r(b) } else { before > r(b) };
        }
        if cur.len >= 3 {
            let ranks: Vec<usize> = cur.vertices(n).into_iter().map(r).collect();
            ok[4] &= ranks.windows(2).all(|w| w[0] < w[1]) || ranks.windows(2).all(|w| w[0] > w[1]);
        }
    }
    ok
}

/// Evaluates the S-consistency conditions for a given permutation.
pub fn check_s_consistency(n: usize, s: VertexSet, sigma: &[usize]) -> Result<SigmaCertificate> {
    let d = intervals(n, s)?;
    let mut seen = vec![false; n + 1];
    if sigma.len() != n || sigma.iter().any(|&v| v == 0 || v > n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::pre(format!("{sigma:?} is not a permutation of 1..={n}")));
    }
    Ok(SigmaCertificate { sigma: sigma.to_vec(), checks: conditions(&d, sigma), source: SigmaSource::Given })
}

/// Puts the first singleton interval at rank 1 and the last at rank `n`,
/// increasing along both arcs between them; the clockwise arc is ranked first.
fn construct(d: &IntervalDecomposition) -> Option<Vec<usize>> {
    let n = d.n;
    let (&first, &last) = (d.c1.first()?, d.c1.last()?);
    if first == last {
        return None;
    }
    let (lo, hi) = (d.intervals[first - 1].a, d.intervals[last - 1].a);
    let mut sigma = vec![0; n];
    sigma[lo - 1] = 1;
    sigma[hi - 1] = n;
    let mut rank = 2;
    for dir in [1isize, -1] {
        let mut v = step(n, lo, dir);
        while v != hi {
            sigma[v - 1] = rank;
            rank += 1;
            v = step(n, v, dir);
        }
    }
    Some(sigma)
}

/// An S-consistent permutation, or `None` when none is known.
///
/// With at least two singleton intervals the permutation is constructed
/// directly. Otherwise all permutations are tried in lexicographic order for
/// `n <= SEARCH_LIMIT`; above that `None` is returned.
pub fn s_consistent_permutation(n: usize, s: VertexSet) -> Result<Option<SigmaCertificate>> {
    let d = intervals(n, s)?;
    if let Some(sigma) = construct(&d) {
        let checks = conditions(&d, &sigma);
        if !checks.iter().all(|&c| c) {
            return Err(Error::Internal(format!("constructed permutation {sigma:?} is not consistent for {s}")));
        }
        return Ok(Some(SigmaCertificate { sigma, checks, source: SigmaSource::Construction }));
    }
    if n > SEARCH_LIMIT {
        return Ok(None);
    }
    Ok(all_permutations(n).into_iter().find_map(|sigma| {
        let checks = conditions(&d, &sigma);
        checks.iter().all(|&c| c).then_some(SigmaCertificate { sigma, checks, source: SigmaSource::Search })
    }))
}
