//! Rank-two matroids attached to minimal cuts, the families `Δ_S` of small
//! dependent sets they differ by, weighted transversals and the generator
//! recipes for transversal ideals.

mod generators;
mod matroid;
mod transversal;

pub use generators::{concise_cut_generators, splits, transversal_generators, transversal_ideal_generic};
pub use matroid::{matroid_of_cut, small_dependent_diff, RankTwoMatroid};
pub use transversal::{
    delta_family, min_transversal_weight, minimal_transversals, FamilyMember, Transversal, TransversalFamily,
};
