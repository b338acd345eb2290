use super::intervals::{cycle_graph, cycle_transversal_ideal, step};
use crate::beialgebra::edge_ideal_gens;
use crate::graphcore::VertexSet;
use crate::matroidtrans::{splits, transversal_ideal_generic};
use crate::polykernel::{buchberger, colon_poly, radical_membership, Limits, Monomial, MonomialOrder, Polynomial};
use crate::{Error, Result};

fn in_monomial_ideal(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

fn check_vertex(n: usize, i: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::VertexOutOfRange { vertex: i, n });
    }
    Ok(())
}

/// `in((J_{C_n} : x_i)) ⊆ in(J_{C_n}) + (x_{i-1}, y_{i-1})·(x_{i+1}, y_{i+1})`
/// under the identity lex order.
pub fn saturation_by_x_holds(n: usize, i: usize, limits: &Limits) -> Result<bool> {
    let g = cycle_graph(n)?;
    check_vertex(n, i)?;
    let ord = MonomialOrder::identity(n);
    let j = edge_ideal_gens(&g);
    let colon = colon_poly(&j, &Polynomial::x(i), &ord, limits)?;
    let mut allowed = buchberger(&j, &ord, limits)?.leading_monomials();
    let (p, q) = (step(n, i, -1), step(n, i, 1));
    for a in [Monomial::x(p), Monomial::y(p)] {
        for b in [Monomial::x(q), Monomial::y(q)] {
            allowed.push(a.mul(&b));
        }
    }
    Ok(colon.leading_monomials().iter().all(|m| in_monomial_ideal(&allowed, m)))
}

/// `in((J_{C_n} : f_{i-1,i+1})) = in(J_{C_n}) + (x_i, y_i) + (g_{C,D} : C ⨿ D = [n] \ {i-1, i, i+1})`
/// under the identity lex order, compared as monomial ideals.
pub fn saturation_by_f_holds(n: usize, i: usize, limits: &Limits) -> Result<bool> {
    let g = cycle_graph(n)?;
    check_vertex(n, i)?;
    let ord = MonomialOrder::identity(n);
    let j = edge_ideal_gens(&g);
    let (p, q) = (step(n, i, -1), step(n, i, 1));
    let colon = colon_poly(&j, &Polynomial::f(p, q), &ord, limits)?.leading_monomials();
    let mut rhs = buchberger(&j, &ord, limits)?.leading_monomials();
    rhs.extend([Monomial::x(i), Monomial::y(i)]);
    let rest = VertexSet::full(n) - VertexSet::from([p, i, q]);
    rhs.extend(splits(rest).iter().filter_map(|m| m.leading_monomial(&ord)));
    Ok(colon.iter().all(|m| in_monomial_ideal(&rhs, m)) && rhs.iter().all(|m| in_monomial_ideal(&colon, m)))
}

/// `√(J_{C_n} + J_{T(S)}) = √(J_{C_n} + I_S)`, checked generator by
/// generator. Plain membership is tried before the Rabinowitsch test.
pub fn concise_matches_generic(n: usize, s: VertexSet, limits: &Limits) -> Result<bool> {
    let g = cycle_graph(n)?;
    let ord = MonomialOrder::identity(n);
    let j = edge_ideal_gens(&g);
    let generic: Vec<Polynomial> = j.iter().cloned().chain(transversal_ideal_generic(&g, s)?).collect();
    let concise: Vec<Polynomial> = j.iter().cloned().chain(cycle_transversal_ideal(n, s)?).collect();
    for (from, into) in [(&generic, &concise), (&concise, &generic)] {
        let gb = buchberger(into, &ord, limits)?;
        for f in from.iter() {
            if !gb.contains(f) && !radical_membership(f, into, &ord, limits)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
