use std::fmt;

use crate::graphcore::{families, Graph, VertexSet};
use crate::matroidtrans::splits;
use crate::polykernel::Polynomial;
use crate::{Error, Result};

/// The `n`-cycle with the wraparound edge `{n, 1}`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    families::cycle(n)
}

/// `v` moved `d` steps around the cycle, kept in `1..=n`.
pub(crate) fn step(n: usize, v: usize, d: isize) -> usize {
    ((v as isize - 1 + d).rem_euclid(n as isize) + 1) as usize
}

/// Checks `S ∈ min(C_n)` with `S ≠ ∅`: at least two vertices, no two adjacent.
pub(crate) fn check_cycle_cut(n: usize, s: VertexSet) -> Result<()> {
    cycle_graph(n)?.check_subset(s)?;
    if s.len() < 2 {
        return Err(Error::pre(format!("{s} needs at least two vertices to be a cut of C_{n}")));
    }
    if let Some(v) = s.iter().find(|&v| s.contains(step(n, v, 1))) {
        return Err(Error::pre(format!("{v} and {} are adjacent on C_{n}", step(n, v, 1))));
    }
    Ok(())
}

/// One arc `[a, b]` of `[n] \ S`, read in increasing cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub a: usize,
    pub b: usize,
    pub len: usize,
}

impl Interval {
    /// Vertices from `a` to `b`.
    pub fn vertices(&self, n: usize) -> Vec<usize> {
        (0..self.len).map(|d| step(n, self.a, d as isize)).collect()
    }

    pub fn set(&self, n: usize) -> VertexSet {
        self.vertices(n).into_iter().collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// `[n] \ S` split into the arcs `I_1, .., I_k` between consecutive cut vertices.
/// `I_j` starts right after the `j`-th smallest element of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalDecomposition {
    pub n: usize,
    pub s: VertexSet,
    pub intervals: Vec<Interval>,
    /// 1-based indices of the singleton intervals.
    pub c1: Vec<usize>,
    /// 1-based indices of the longer intervals.
    pub c2: Vec<usize>,
    /// All interval endpoints.
    pub f_set: VertexSet,
}

impl IntervalDecomposition {
    pub fn k(&self) -> usize {
        self.intervals.len()
    }

    /// `I_j` with cyclic 0-based index.
    pub fn interval(&self, j: usize) -> &Interval {
        &self.intervals[j % self.k()]
    }

    /// `[n] \ (S ∪ F)`.
    pub fn free_vertices(&self) -> VertexSet {
        VertexSet::full(self.n) - self.s - self.f_set
    }
}

pub fn intervals(n: usize, s: VertexSet) -> Result<IntervalDecomposition> {
    check_cycle_cut(n, s)?;
    let cuts = s.to_vec();
    let k = cuts.len();
    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let (from, to) = (cuts[j], cuts[(j + 1) % k]);
        let len = (to + n - from - 1) % n;
        out.push(Interval { a: step(n, from, 1), b: step(n, to, -1), len });
    }
    let c1 = (1..=k).filter(|&j| out[j - 1].len == 1).collect();
    let c2 = (1..=k).filter(|&j| out[j - 1].len >= 2).collect();
    let f_set = out.iter().flat_map(|i| [i.a, i.b]).collect();
    Ok(IntervalDecomposition { n, s, intervals: out, c1, c2, f_set })
}

/// `P = ∏_j f_{b_j, a_{j+1}}`.
pub fn cut_polynomial(n: usize, s: VertexSet) -> Result<Polynomial> {
    let d = intervals(n, s)?;
    Ok((0..d.k()).fold(Polynomial::one(), |acc, j| &acc * &Polynomial::f(d.interval(j).b, d.interval(j + 1).a)))
}

/// `I_S = (P · g_{C,D} : C ⨿ D = [n] \ (S ∪ F))`.
pub fn cycle_transversal_ideal(n: usize, s: VertexSet) -> Result<Vec<Polynomial>> {
    let d = intervals(n, s)?;
    let p = cut_polynomial(n, s)?;
    Ok(splits(d.free_vertices()).iter().map(|g| &p * g).collect())
}
