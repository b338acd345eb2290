use crate::graphcore::{ensure_min_cut, Graph, VertexSet};
use crate::{Error, Result};

/// A matroid of rank at most two on `[n]`, given by its loops and parallel classes.
///
/// `B` is dependent iff it meets the loops, has two elements in one class,
/// or has at least three elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTwoMatroid {
    n: usize,
    loops: VertexSet,
    classes: Vec<VertexSet>,
}

impl RankTwoMatroid {
    /// Checks that the loops and classes partition `[n]` with nonempty classes.
    pub fn new(n: usize, loops: VertexSet, mut classes: Vec<VertexSet>) -> Result<Self> {
        let mut seen = loops;
        for &c in &classes {
            if c.is_empty() || c.intersects(seen) {
                return Err(Error::pre("parallel classes must be nonempty and disjoint from each other and the loops"));
            }
            seen |= c;
        }
        if seen != VertexSet::full(n) {
            return Err(Error::pre(format!("loops and classes must cover [{n}]")));
        }
        classes.sort();
        Ok(RankTwoMatroid { n, loops, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn loops(&self) -> VertexSet {
        self.loops
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn is_dependent(&self, b: VertexSet) -> bool {
        b.intersects(self.loops) || b.len() >= 3 || self.classes.iter().any(|&c| (b & c).len() >= 2)
    }

    /// Dependent subsets of size one or two, singletons first, then lexicographic.
    pub fn small_dependents(&self) -> Vec<VertexSet> {
        small_subsets(self.ground()).into_iter().filter(|&b| self.is_dependent(b)).collect()
    }
}

pub(crate) fn small_subsets(ground: VertexSet) -> Vec<VertexSet> {
    let mut out = ground.combinations(1);
    out.extend(ground.combinations(2));
    out
}

/// `M(S)`: loops `S`, one parallel class per component of `G - S`.
pub fn matroid_of_cut(g: &Graph, s: VertexSet) -> Result<RankTwoMatroid> {
    ensure_min_cut(g, s)?;
    RankTwoMatroid::new(g.n(), s, g.components_within(g.vertices() - s))
}

/// Subsets of size one or two that are dependent in `m1` and independent in `m2`.
pub fn small_dependent_diff(m1: &RankTwoMatroid, m2: &RankTwoMatroid) -> Result<Vec<VertexSet>> {
    if m1.n != m2.n {
        return Err(Error::pre(format!("ground sets differ: [{}] vs [{}]", m1.n, m2.n)));
    }
    Ok(small_subsets(m1.ground()).into_iter().filter(|&b| m1.is_dependent(b) && !m2.is_dependent(b)).collect())
}
