//! Cycle graphs: interval bookkeeping for cuts of `C_n`, S-consistent
//! permutations, the concise transversal ideal `I_S` and the bound
//! calculators, plus a driver that checks them against computed values.

mod bounds;
mod intervals;
mod saturation;
mod sigma;
mod verify;

pub use bounds::{cycle_transversal_weight, global_bounds, localized_bounds, Window};
pub use intervals::{cut_polynomial, cycle_graph, cycle_transversal_ideal, intervals, Interval, IntervalDecomposition};
pub use saturation::{concise_matches_generic, saturation_by_f_holds, saturation_by_x_holds};
pub use sigma::{check_s_consistency, s_consistent_permutation, SigmaCertificate, SigmaSource, SEARCH_LIMIT};
pub use verify::{verify_cycle, BasisCheck, CyclePrime, CycleReport};
