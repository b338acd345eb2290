//! Exact sparse polynomials in `x_1..x_n, y_1..y_n` and an auxiliary `t`,
//! permuted lex orders, a Buchberger engine and ideal operations built on
//! elimination of `t`.

mod coeff;
mod groebner;
mod ideal;
mod monomial;
mod order;
mod poly;

pub use coeff::Coeff;
pub use groebner::{buchberger, is_groebner_basis, is_reduced_basis, s_polynomial, GroebnerBasis, Limits};
pub use ideal::{
    colon_ideal, colon_poly, ideal_membership, initial_ideal, intersect, min_new_degree, min_new_degree_gb,
    radical_membership,
};
pub use monomial::{Monomial, Var};
pub use order::MonomialOrder;
pub use poly::Polynomial;
