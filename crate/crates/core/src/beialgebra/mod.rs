//! Binomial edge ideals, their minimal primes, admissible-path bases and
//! the v-number pipeline with an independent oracle.

mod ideals;
mod vnumber;

pub use ideals::{
    admissible_interiors, admissible_path_basis, admissible_path_generators, combined_cut_basis, cut_relabelling,
    edge_ideal_gens, prime_component, transversal_sum_basis, transversal_sum_order, CombinedBasisCheck,
    PrimeComponent,
};
pub use vnumber::{
    check_colon_equals_prime, combinatorial_value, intersect_primes, oracle_vnumber_at_prime, vnumber,
    vnumber_at_prime, vnumber_with, Method, PrimeReport, PrimeValue, VNumberOptions, VNumberReport,
};
