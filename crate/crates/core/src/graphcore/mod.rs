//! Simple graphs on `[n]`, minimal k-cuts and connected domination.

mod cuts;
mod domination;
pub mod families;
mod graph;
mod vertex_set;

pub use cuts::{enumerate_min_cuts, ensure_min_cut, is_minimal_kcut, min_cut_sets, two_cut_sides, CutCheck, CutRecord};
pub use domination::{
    connected_dominating_sets, gamma_c, gamma_c_pair, is_connected_dominating, is_pair_dominating,
    minimal_pair_dominating_sets, pair_dominating_sets,
};
pub use graph::Graph;
pub use vertex_set::{VertexSet, MAX_VERTICES};

/// The subgraph induced on `w`; vertices keep their labels.
pub fn induced_subgraph(g: &Graph, w: VertexSet) -> crate::Result<Graph> {
    g.induced_subgraph(w)
}

/// Components of `g`, sorted by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    g.connected_components()
}
