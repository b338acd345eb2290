use crate::graphcore::{ensure_min_cut, two_cut_sides, Graph, VertexSet};
use crate::matroidtrans::{concise_cut_generators, transversal_ideal_generic};
use crate::polykernel::{
    buchberger, initial_ideal, is_groebner_basis, is_reduced_basis, GroebnerBasis, Limits, MonomialOrder, Polynomial,
};
use crate::{Error, Result};

/// `J_G`: one `f_{i,j}`, `i < j`, per edge, in edge order.
pub fn edge_ideal_gens(g: &Graph) -> Vec<Polynomial> {
    g.edges().into_iter().map(|(i, j)| Polynomial::f(i, j)).collect()
}

/// `P_S = (x_i, y_i : i ∈ S) + (f_{a,b} : a < b in one component of G - S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeComponent {
    pub s: VertexSet,
    pub gens: Vec<Polynomial>,
}

pub fn prime_component(g: &Graph, s: VertexSet) -> Result<PrimeComponent> {
    g.check_subset(s)?;
    let mut gens = Vec::new();
    for i in s.iter() {
        gens.push(Polynomial::x(i));
        gens.push(Polynomial::y(i));
    }
    for comp in g.components_within(g.vertices() - s) {
        for pair in comp.combinations(2) {
            let v = pair.to_vec();
            gens.push(Polynomial::f(v[0], v[1]));
        }
    }
    Ok(PrimeComponent { s, gens })
}

fn rank(sigma: &[usize], v: usize) -> usize {
    sigma[v - 1]
}

/// Simple paths `i = p_0, .., p_r = j` whose interior avoids the σ-interval
/// `[σ(i), σ(j)]` and has no proper subset still linking `i` to `j`.
/// Returns the interior vertex sets, deduplicated.
pub fn admissible_interiors(g: &Graph, sigma: &[usize], i: usize, j: usize) -> Vec<VertexSet> {
    let (lo, hi) = (rank(sigma, i), rank(sigma, j));
    let allowed: VertexSet = g.vertices().iter().filter(|&v| rank(sigma, v) < lo || rank(sigma, v) > hi).collect();
    let mut found: Vec<VertexSet> = Vec::new();
    let mut stack = vec![(i, VertexSet::EMPTY)];
    // depth-first over simple paths; `inside` holds the interior so far
    while let Some((u, inside)) = stack.pop() {
        for w in g.neighbors(u).iter() {
            if w == j {
                if !found.contains(&inside) && is_minimal_interior(g, i, j, inside) {
                    found.push(inside);
                }
            } else if allowed.contains(w) && !inside.contains(w) && w != i {
                stack.push((w, inside.with(w)));
            }
        }
    }
    found.sort();
    found
}

fn is_minimal_interior(g: &Graph, i: usize, j: usize, inside: VertexSet) -> bool {
    let ends = VertexSet::from([i, j]);
    inside.iter().all(|v| {
        let w = (inside.without(v)) | ends;
        !g.components_within(w).iter().any(|c| c.contains(i) && c.contains(j))
    })
}

/// `u_π = ∏_{σ(v) > σ(j)} x_v · ∏_{σ(v) < σ(i)} y_v`.
fn path_monomial(sigma: &[usize], i: usize, j: usize, inside: VertexSet) -> Polynomial {
    let above: VertexSet = inside.iter().filter(|&v| rank(sigma, v) > rank(sigma, j)).collect();
    let below: VertexSet = inside.iter().filter(|&v| rank(sigma, v) < rank(sigma, i)).collect();
    Polynomial::g(above, below)
}

/// The binomials `u_π f_{i,j}` over all σ-admissible paths, unverified.
pub fn admissible_path_generators(g: &Graph, sigma: &[usize]) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for pair in g.vertices().combinations(2) {
        let v = pair.to_vec();
        let (i, j) = if rank(sigma, v[0]) < rank(sigma, v[1]) { (v[0], v[1]) } else { (v[1], v[0]) };
        for inside in admissible_interiors(g, sigma, i, j) {
            out.push(&path_monomial(sigma, i, j, inside) * &Polynomial::f(i, j));
        }
    }
    out
}

/// Admissible-path basis of `J_G` under `<_σ`, checked to be a reduced
/// Gröbner basis before it is returned.
pub fn admissible_path_basis(g: &Graph, sigma: &[usize]) -> Result<GroebnerBasis> {
    if sigma.len() != g.n() {
        return Err(Error::pre("permutation length must equal n"));
    }
    let ord = MonomialOrder::from_sigma(sigma.to_vec())?;
    let gens = admissible_path_generators(g, sigma);
    let gens: Vec<Polynomial> = gens.iter().map(|p| p.monic(&ord)).collect();
    if !is_groebner_basis(&gens, &ord) || !is_reduced_basis(&gens, &ord) {
        return Err(Error::Internal(format!("admissible paths of {g:?} under {sigma:?} do not form a reduced basis")));
    }
    Ok(GroebnerBasis::from_reduced(gens, &ord))
}

/// The σ ranking vertices of `V_1` first, then `S`, then `V_2`, each block ascending.
pub fn cut_relabelling(g: &Graph, s: VertexSet) -> Result<Vec<usize>> {
    let (v1, v2) = two_cut_sides(g, s)?;
    let ranking: Vec<usize> = v1.iter().chain(s.iter()).chain(v2.iter()).collect();
    Ok(MonomialOrder::from_ranking(&ranking)?.sigma().to_vec())
}

/// Outcome of checking the admissible-path basis together with the concise
/// cut generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedBasisCheck {
    pub sigma: Vec<usize>,
    pub generators: Vec<Polynomial>,
    pub is_groebner: bool,
    pub squarefree: bool,
}

/// For a minimal 2-cut, checks that admissible paths plus concise cut
/// generators form a Gröbner basis of `J_G + J_{T(S)}` under the cut relabelling.
pub fn combined_cut_basis(g: &Graph, s: VertexSet) -> Result<CombinedBasisCheck> {
    let sigma = cut_relabelling(g, s)?;
    let ord = MonomialOrder::from_sigma(sigma.clone())?;
    let mut gens: Vec<Polynomial> = admissible_path_generators(g, &sigma);
    gens.extend(concise_cut_generators(g, s)?);
    let gens: Vec<Polynomial> = gens.iter().map(|p| p.monic(&ord)).collect();
    let is_groebner = is_groebner_basis(&gens, &ord);
    let squarefree = gens.iter().all(|p| p.leading_monomial(&ord).is_some_and(|m| m.is_squarefree()));
    Ok(CombinedBasisCheck { sigma, generators: gens, is_groebner, squarefree })
}

/// Order used for `J_G + J_{T(S)}`: the cut relabelling for minimal 2-cuts,
/// the identity otherwise.
pub fn transversal_sum_order(g: &Graph, s: VertexSet) -> Result<MonomialOrder> {
    match cut_relabelling(g, s) {
        Ok(sigma) => MonomialOrder::from_sigma(sigma),
        Err(_) => Ok(MonomialOrder::identity(g.n())),
    }
}

/// Reduced basis of `J_G + J_{T(S)}` and whether its initial ideal is squarefree.
pub fn transversal_sum_basis(g: &Graph, s: VertexSet, limits: &Limits) -> Result<(GroebnerBasis, bool)> {
    ensure_min_cut(g, s)?;
    let mut gens = edge_ideal_gens(g);
    gens.extend(transversal_ideal_generic(g, s)?);
    let ord = transversal_sum_order(g, s)?;
    let gb = buchberger(&gens, &ord, limits)?;
    let sf = initial_ideal(&gb).1;
    Ok((gb, sf))
}
