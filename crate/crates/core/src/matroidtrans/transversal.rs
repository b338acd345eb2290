use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::matroid::{matroid_of_cut, small_dependent_diff};
use crate::graphcore::{enumerate_min_cuts, Graph, VertexSet};
use crate::{Error, Result};

/// One member of `Δ_S`, with the minimal cut it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub source: VertexSet,
    /// Singletons and pairs, singletons first.
    pub sets: Vec<VertexSet>,
}

/// `Δ_S` for a fixed `S ∈ min(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalFamily {
    pub s: VertexSet,
    pub members: Vec<FamilyMember>,
}

impl TransversalFamily {
    /// A family without provenance, mostly for tests.
    pub fn from_sets(members: Vec<Vec<VertexSet>>) -> TransversalFamily {
        TransversalFamily {
            s: VertexSet::EMPTY,
            members: members.into_iter().map(|sets| FamilyMember { source: VertexSet::EMPTY, sets }).collect(),
        }
    }

    /// Every singleton or pair occurring in some member, sorted.
    pub fn union(&self) -> Vec<VertexSet> {
        let all: BTreeSet<VertexSet> = self.members.iter().flat_map(|m| m.sets.iter().copied()).collect();
        all.into_iter().collect()
    }

    pub fn is_transversal(&self, a: &Transversal) -> bool {
        let elems: HashSet<VertexSet> = a.elements().into_iter().collect();
        self.members.iter().all(|m| m.sets.iter().any(|b| elems.contains(b)))
    }

    fn check_nonempty(&self) -> Result<()> {
        match self.members.iter().position(|m| m.sets.is_empty()) {
            Some(k) => Err(Error::NoTransversal(k)),
            None => Ok(()),
        }
    }
}

/// A set of singletons `a1` and pairs `a2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Transversal {
    pub a1: VertexSet,
    pub a2: Vec<(usize, usize)>,
}

impl Transversal {
    /// Splits singletons from pairs; larger sets are rejected.
    pub fn from_elements(elems: &[VertexSet]) -> Result<Transversal> {
        let mut t = Transversal::default();
        for &e in elems {
            match e.to_vec()[..] {
                [v] => t.a1.insert(v),
                [u, v] => t.a2.push((u, v)),
                _ => return Err(Error::pre(format!("{e} is not a singleton or a pair"))),
            }
        }
        t.a2.sort();
        t.a2.dedup();
        Ok(t)
    }

    pub fn weight(&self) -> usize {
        self.a1.len() + 2 * self.a2.len()
    }

    /// Singletons then pairs, as vertex sets.
    pub fn elements(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self.a1.iter().map(VertexSet::singleton).collect();
        out.extend(self.a2.iter().map(|&(u, v)| VertexSet::from([u, v])));
        out
    }

    /// Union of all elements.
    pub fn support(&self) -> VertexSet {
        self.elements().into_iter().fold(VertexSet::EMPTY, |a, b| a | b)
    }
}

impl fmt::Display for Transversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A1={} A2=[", self.a1)?;
        for (k, (u, v)) in self.a2.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{{{u},{v}}}")?;
        }
        f.write_str("]")
    }
}

/// `Δ_S`: one member per `S' ∈ min(G) \ {S}`, equal to the small sets that
/// are dependent in `M(S')` but independent in `M(S)`.
pub fn delta_family(g: &Graph, s: VertexSet) -> Result<TransversalFamily> {
    let ms = matroid_of_cut(g, s)?;
    let mut members = Vec::new();
    for rec in enumerate_min_cuts(g)? {
        if rec.s == s {
            continue;
        }
        let m = matroid_of_cut(g, rec.s)?;
        members.push(FamilyMember { source: rec.s, sets: small_dependent_diff(&m, &ms)? });
    }
    Ok(TransversalFamily { s, members })
}

fn weight_of(e: VertexSet) -> usize {
    e.len()
}

/// Hitting-set search state. Members are bitmasks over the element list.
struct Search<'a> {
    elems: &'a [VertexSet],
    members: Vec<u128>,
    best: Option<(usize, Vec<usize>)>,
    seen: HashSet<u128>,
}

impl Search<'_> {
    fn witness_key(&self, chosen: &[usize]) -> Vec<VertexSet> {
        let mut v: Vec<VertexSet> = chosen.iter().map(|&k| self.elems[k]).collect();
        v.sort();
        v
    }

    fn run(&mut self, chosen: &mut Vec<usize>, picked: u128, cost: usize) {
        if !self.seen.insert(picked) {
            return;
        }
        let uncovered: Vec<u128> = self.members.iter().copied().filter(|&m| m & picked == 0).collect();
        if uncovered.is_empty() {
            let better = match &self.best {
                None => true,
                Some((w, c)) => cost < *w || (cost == *w && self.witness_key(chosen) < self.witness_key(c)),
            };
            if better {
                self.best = Some((cost, chosen.clone()));
            }
            return;
        }
        if let Some((w, _)) = &self.best {
            if cost + 1 > *w {
                return;
            }
        }
        // branch on the smallest uncovered member
        let member = *uncovered.iter().min_by_key(|m| m.count_ones()).expect("nonempty");
        let mut options: Vec<usize> = (0..self.elems.len()).filter(|&k| member >> k & 1 == 1).collect();
        options.sort_by_key(|&k| {
            let coverage = uncovered.iter().filter(|&&m| m >> k & 1 == 1).count();
            (std::cmp::Reverse(coverage), k)
        });
        for k in options {
            let c = cost + weight_of(self.elems[k]);
            if self.best.as_ref().is_some_and(|(w, _)| c > *w) {
                continue;
            }
            chosen.push(k);
            self.run(chosen, picked | 1 << k, c);
            chosen.pop();
        }
    }
}

fn encode(f: &TransversalFamily) -> Result<(Vec<VertexSet>, Vec<u128>)> {
    let elems = f.union();
    if elems.len() > 128 {
        return Err(Error::pre("transversal search supports at most 128 distinct elements"));
    }
    let members = f
        .members
        .iter()
        .map(|m| m.sets.iter().map(|s| 1u128 << elems.binary_search(s).expect("in union")).fold(0, |a, b| a | b))
        .collect();
    Ok((elems, members))
}

/// Minimum of `|A_1| + 2|A_2|` over transversals, by exact branch and bound.
///
/// Members are branched smallest first and elements by decreasing coverage.
/// Among optimal witnesses the one with the lexicographically least sorted
/// element list is returned.
pub fn min_transversal_weight(f: &TransversalFamily) -> Result<(usize, Transversal)> {
    f.check_nonempty()?;
    let (elems, members) = encode(f)?;
    let mut search = Search { elems: &elems, members, best: None, seen: HashSet::new() };
    search.run(&mut Vec::new(), 0, 0);
    let (w, chosen) = search.best.expect("a nonempty family always has the full union as transversal");
    let picked: Vec<VertexSet> = chosen.iter().map(|&k| elems[k]).collect();
    Ok((w, Transversal::from_elements(&picked)?))
}

/// All inclusion-minimal transversals, sorted.
pub fn minimal_transversals(f: &TransversalFamily) -> Result<Vec<Transversal>> {
    f.check_nonempty()?;
    let (elems, members) = encode(f)?;
    let mut found: BTreeSet<u128> = BTreeSet::new();
    let mut seen: HashSet<u128> = HashSet::new();
    fn rec(members: &[u128], picked: u128, seen: &mut HashSet<u128>, found: &mut BTreeSet<u128>) {
        if !seen.insert(picked) {
            return;
        }
        let Some(member) = members.iter().copied().filter(|&m| m & picked == 0).min_by_key(|m| m.count_ones()) else {
            found.insert(picked);
            return;
        };
        for k in 0..128 {
            if member >> k & 1 == 1 {
                rec(members, picked | 1 << k, seen, found);
            }
        }
    }
    rec(&members, 0, &mut seen, &mut found);
    let hits_all = |p: u128| members.iter().all(|&m| m & p != 0);
    let mut out: Vec<Transversal> = found
        .into_iter()
        .filter(|&p| (0..128).filter(|k| p >> k & 1 == 1).all(|k| !hits_all(p & !(1u128 << k))))
        .map(|p| {
            let picked: Vec<VertexSet> = (0..elems.len()).filter(|k| p >> k & 1 == 1).map(|k| elems[k]).collect();
            Transversal::from_elements(&picked).expect("small sets")
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::families::{complete, cycle};

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn four_cycle_families() {
        let c4 = cycle(4).unwrap();
        let f = delta_family(&c4, VertexSet::from([1, 3])).unwrap();
        assert_eq!(f.members.len(), 2);
        assert_eq!(f.members[0].source, VertexSet::EMPTY);
        assert_eq!(f.members[0].sets, sets(&[&[2, 4]]));
        assert_eq!(f.members[1].source, VertexSet::from([2, 4]));
        assert_eq!(f.members[1].sets, sets(&[&[2], &[4], &[2, 4]]));

        let f0 = delta_family(&c4, VertexSet::EMPTY).unwrap();
        assert_eq!(f0.members[0].sets, sets(&[&[1], &[3]]));
        assert_eq!(f0.members[1].sets, sets(&[&[2], &[4]]));

        assert!(delta_family(&complete(4).unwrap(), VertexSet::EMPTY).unwrap().members.is_empty());
    }

    #[test]
    fn four_cycle_weights() {
        let c4 = cycle(4).unwrap();
        let (w, t) = min_transversal_weight(&delta_family(&c4, VertexSet::from([1, 3])).unwrap()).unwrap();
        assert_eq!(w, 2);
        assert_eq!(t, Transversal { a1: VertexSet::EMPTY, a2: vec![(2, 4)] });
        let (w, t) = min_transversal_weight(&delta_family(&c4, VertexSet::EMPTY).unwrap()).unwrap();
        assert_eq!((w, t.a1), (2, VertexSet::from([1, 2])));
        let (w, t) = min_transversal_weight(&TransversalFamily::from_sets(vec![])).unwrap();
        assert_eq!((w, t), (0, Transversal::default()));
    }

    #[test]
    fn empty_member_has_no_transversal() {
        let f = TransversalFamily::from_sets(vec![sets(&[&[1]]), vec![]]);
        assert_eq!(min_transversal_weight(&f).unwrap_err(), Error::NoTransversal(1));
        assert_eq!(minimal_transversals(&f).unwrap_err(), Error::NoTransversal(1));
    }

    #[test]
    fn minimal_transversal_enumeration() {
        let f = TransversalFamily::from_sets(vec![sets(&[&[1], &[2]]), sets(&[&[2], &[3]])]);
        let all = minimal_transversals(&f).unwrap();
        let elems: Vec<Vec<VertexSet>> = all.iter().map(Transversal::elements).collect();
        assert_eq!(elems, vec![sets(&[&[1], &[3]]), sets(&[&[2]])]);
        assert_eq!(minimal_transversals(&TransversalFamily::from_sets(vec![])).unwrap(), vec![Transversal::default()]);
    }
}
