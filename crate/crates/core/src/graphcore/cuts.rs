use super::graph::Graph;
use super::vertex_set::VertexSet;
use crate::{Error, Result};

/// A vertex set `S` together with the components of `G - S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRecord {
    pub s: VertexSet,
    /// Number of components of the graph induced on `V \ S`.
    pub k: usize,
    /// Vertex sets of those components, sorted by smallest vertex.
    pub components: Vec<VertexSet>,
    /// Whether `S` is `∅` or a minimal k-cut.
    pub minimal: bool,
}

/// Outcome of [`is_minimal_kcut`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutCheck {
    pub minimal: bool,
    pub k: usize,
}

/// `i` is a cut point of `H` when deleting it strictly increases the number
/// of components.
fn is_cut_point(g: &Graph, h: VertexSet, i: usize) -> bool {
    g.component_count_within(h) < g.component_count_within(h.without(i))
}

/// Decides whether `s` is a minimal k-cut: `G - s` has `k >= 2` components
/// and every `i` in `s` is a cut point of `G[(V \ s) ∪ {i}]`.
pub fn is_minimal_kcut(g: &Graph, s: VertexSet) -> Result<CutCheck> {
    g.check_subset(s)?;
    if s.is_empty() {
        return Err(Error::pre("a minimal k-cut is nonempty"));
    }
    if g.vertices().is_subset(s) {
        return Err(Error::pre("a minimal k-cut is a proper subset of the vertex set"));
    }
    let rest = g.vertices() - s;
    let k = g.component_count_within(rest);
    let minimal = k >= 2 && s.iter().all(|i| is_cut_point(g, rest.with(i), i));
    Ok(CutCheck { minimal, k })
}

/// `min(G)`: the empty set followed by every minimal k-cut, sorted
/// lexicographically. Exhaustive over all subsets of the vertex set.
pub fn enumerate_min_cuts(g: &Graph) -> Result<Vec<CutRecord>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = g.vertices();
    let mut out = vec![CutRecord { s: VertexSet::EMPTY, k: 1, components: g.connected_components(), minimal: true }];
    for s in all.subsets() {
        if s.is_empty() || s == all {
            continue;
        }
        let rest = all - s;
        let components = g.components_within(rest);
        // a cut vertex must touch two components of G - S
        if components.len() < 2 || s.iter().any(|i| components.iter().filter(|c| g.neighbors(i).intersects(**c)).count() < 2)
        {
            continue;
        }
        debug_assert!(is_minimal_kcut(g, s).unwrap().minimal);
        out.push(CutRecord { s, k: components.len(), components, minimal: true });
    }
    out.sort_by_key(|a| a.s);
    Ok(out)
}

/// Just the sets of [`enumerate_min_cuts`].
pub fn min_cut_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(enumerate_min_cuts(g)?.into_iter().map(|c| c.s).collect())
}

/// Returns `(V_1, V_2)` for a minimal 2-cut, ordered by smallest vertex.
pub fn two_cut_sides(g: &Graph, s: VertexSet) -> Result<(VertexSet, VertexSet)> {
    if s.is_empty() || g.vertices().is_subset(s) {
        return Err(Error::pre(format!("{s} is not a minimal 2-cut")));
    }
    let check = is_minimal_kcut(g, s)?;
    if !check.minimal || check.k != 2 {
        return Err(Error::pre(format!("{s} is not a minimal 2-cut")));
    }
    let comps = g.components_within(g.vertices() - s);
    Ok((comps[0], comps[1]))
}

/// Checks `s ∈ min(G)` for a connected `g`.
pub fn ensure_min_cut(g: &Graph, s: VertexSet) -> Result<()> {
    g.check_subset(s)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if s.is_empty() {
        return Ok(());
    }
    if g.vertices().is_subset(s) || !is_minimal_kcut(g, s)?.minimal {
        return Err(Error::pre(format!("{s} is not in min(G)")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::families::{complete, connected_graphs_up_to_iso, cycle, path};

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn kcut_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(is_minimal_kcut(&p4, VertexSet::from([2])).unwrap(), CutCheck { minimal: true, k: 2 });
        let c = is_minimal_kcut(&p4, VertexSet::from([2, 3])).unwrap();
        assert!(!c.minimal);
        let c6 = cycle(6).unwrap();
        assert_eq!(is_minimal_kcut(&c6, VertexSet::from([1, 3, 5])).unwrap(), CutCheck { minimal: true, k: 3 });
    }

    #[test]
    fn kcut_rejects_trivial_sets() {
        let p4 = path(4).unwrap();
        assert!(is_minimal_kcut(&p4, VertexSet::EMPTY).is_err());
        assert!(is_minimal_kcut(&p4, VertexSet::full(4)).is_err());
    }

    #[test]
    fn min_cut_examples() {
        assert_eq!(min_cut_sets(&cycle(4).unwrap()).unwrap(), sets(&[&[], &[1, 3], &[2, 4]]));
        assert_eq!(min_cut_sets(&path(4).unwrap()).unwrap(), sets(&[&[], &[2], &[3]]));
        assert_eq!(min_cut_sets(&complete(4).unwrap()).unwrap(), sets(&[&[]]));
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(enumerate_min_cuts(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn cycle_cuts_are_independent_sets() {
        for n in 3..=9 {
            let g = cycle(n).unwrap();
            let mut expected = vec![VertexSet::EMPTY];
            for s in VertexSet::full(n).subsets() {
                let independent = s.iter().all(|i| !g.neighbors(i).intersects(s));
                if s.len() >= 2 && independent {
                    expected.push(s);
                }
            }
            expected.sort();
            assert_eq!(min_cut_sets(&g).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn enumerated_cuts_round_trip() {
        for n in 1..=6 {
            for g in connected_graphs_up_to_iso(n).unwrap() {
                for rec in enumerate_min_cuts(&g).unwrap().into_iter().skip(1) {
                    let check = is_minimal_kcut(&g, rec.s).unwrap();
                    assert!(check.minimal);
                    assert_eq!(check.k, rec.k);
                    let union = rec.components.iter().fold(VertexSet::EMPTY, |a, &c| a | c);
                    assert_eq!(union, g.vertices() - rec.s);
                }
            }
        }
    }

    #[test]
    fn two_cut_sides_of_c6() {
        let c6 = cycle(6).unwrap();
        let (a, b) = two_cut_sides(&c6, VertexSet::from([1, 4])).unwrap();
        assert_eq!((a, b), (VertexSet::from([2, 3]), VertexSet::from([5, 6])));
        assert!(two_cut_sides(&c6, VertexSet::from([1, 3, 5])).is_err());
        assert!(two_cut_sides(&c6, VertexSet::from([1, 2])).is_err());
    }
}
