use super::cuts::two_cut_sides;
use super::graph::Graph;
use super::vertex_set::VertexSet;
use crate::{Error, Result};

/// `b` induces a connected subgraph and every vertex outside `b` has a
/// neighbour in `b`.
pub fn is_connected_dominating(g: &Graph, b: VertexSet) -> Result<bool> {
    g.check_subset(b)?;
    if b.is_empty() {
        return Err(Error::pre("a connected dominating set is nonempty"));
    }
    if !b.is_subset(g.vertices()) {
        return Err(Error::pre(format!("{b} is not contained in the vertex set {}", g.vertices())));
    }
    Ok(dominates_connected(g, b))
}

fn dominates_connected(g: &Graph, b: VertexSet) -> bool {
    let dominated = b.iter().fold(b, |acc, v| acc | g.neighbors(v));
    dominated == g.vertices() && g.is_connected_within(b)
}

/// Every connected dominating set of `g`, in lexicographic order by size.
pub fn connected_dominating_sets(g: &Graph) -> Vec<VertexSet> {
    (1..=g.vertex_count())
        .flat_map(|k| g.vertices().combinations(k))
        .filter(|&b| dominates_connected(g, b))
        .collect()
}

/// Connected domination number with the lexicographically least witness.
///
/// For the one-vertex graph the value is taken to be 1.
pub fn gamma_c(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.vertex_count() == 0 {
        return Err(Error::pre("the empty graph has no connected dominating set"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    for k in 1..=g.vertex_count() {
        if let Some(b) = g.vertices().combinations(k).into_iter().find(|&b| dominates_connected(g, b)) {
            return Ok((k, b));
        }
    }
    Err(Error::Internal("a connected graph is its own connected dominating set".into()))
}

/// Membership in `D_c(V_1, V_2)` for the sides of a minimal 2-cut `s`.
fn in_pair_family(g: &Graph, s: VertexSet, sides: (VertexSet, VertexSet), a: VertexSet) -> bool {
    [sides.0, sides.1].into_iter().all(|side| {
        let part = a & side;
        if part.is_empty() {
            return false;
        }
        let h = g.induced_subgraph(side | s).expect("sides lie in the graph");
        dominates_connected(&h, part)
    })
}

/// All members of `D_c(V_1, V_2)`: sets `A ⊆ V_1 ∪ V_2` whose trace on each
/// side is connected-dominating in `G[V_i ∪ S]`. Ordered by size, then lexicographically.
pub fn pair_dominating_sets(g: &Graph, s: VertexSet) -> Result<Vec<VertexSet>> {
    let sides = two_cut_sides(g, s)?;
    let ground = sides.0 | sides.1;
    Ok((2..=ground.len())
        .flat_map(|k| ground.combinations(k))
        .filter(|&a| in_pair_family(g, s, sides, a))
        .collect())
}

/// Inclusion-minimal members of `D_c(V_1, V_2)`.
pub fn minimal_pair_dominating_sets(g: &Graph, s: VertexSet) -> Result<Vec<VertexSet>> {
    let all = pair_dominating_sets(g, s)?;
    let mut minimal: Vec<VertexSet> = Vec::new();
    // `all` is sorted by size, so a set is minimal iff no earlier kept set is inside it
    for a in all {
        if !minimal.iter().any(|m| m.is_subset(a)) {
            minimal.push(a);
        }
    }
    Ok(minimal)
}

/// `γ_c(V_1, V_2)` for a minimal 2-cut `s`, with the lexicographically least witness.
pub fn gamma_c_pair(g: &Graph, s: VertexSet) -> Result<(usize, VertexSet)> {
    let sides = two_cut_sides(g, s)?;
    let ground = sides.0 | sides.1;
    for k in 2..=ground.len() {
        if let Some(a) = ground.combinations(k).into_iter().find(|&a| in_pair_family(g, s, sides, a)) {
            return Ok((k, a));
        }
    }
    Err(Error::Internal("V_1 ∪ V_2 always belongs to D_c(V_1, V_2)".into()))
}

/// Membership test for `D_c(V_1, V_2)`, exposed for property checks.
pub fn is_pair_dominating(g: &Graph, s: VertexSet, a: VertexSet) -> Result<bool> {
    let sides = two_cut_sides(g, s)?;
    Ok(a.is_subset(sides.0 | sides.1) && in_pair_family(g, s, sides, a))
}
