use super::transversal::{delta_family, minimal_transversals, Transversal};
use crate::graphcore::{pair_dominating_sets, two_cut_sides, Graph, VertexSet};
use crate::polykernel::Polynomial;
use crate::Result;

/// `g_{C,D}` for every split `C ⨿ D = a`, with `C` running through the
/// subsets of `a` in bitmask order.
pub fn splits(a: VertexSet) -> Vec<Polynomial> {
    a.subsets().map(|c| Polynomial::g(c, a - c)).collect()
}

/// `g_{A,C,D} = g_{C,D} · ∏_{{i,j}∈A_2} f_{i,j}` for all splits of `A_1`.
pub fn transversal_generators(a: &Transversal) -> Vec<Polynomial> {
    let fs = a.a2.iter().fold(Polynomial::one(), |acc, &(i, j)| &acc * &Polynomial::f(i, j));
    splits(a.a1).into_iter().map(|g| &g * &fs).collect()
}

fn dedup(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    v.sort_by_cached_key(|p| (p.total_degree(), p.to_string()));
    v.dedup();
    v
}

/// Generators of `J_{T(S)}` from the inclusion-minimal transversals of `Δ_S`.
///
/// Any transversal contains a minimal one, and its generators are then
/// multiples of the minimal one's, so nothing is lost. For `K_n` and `S = ∅`
/// the family is empty and the result is the unit ideal `{1}`.
pub fn transversal_ideal_generic(g: &Graph, s: VertexSet) -> Result<Vec<Polynomial>> {
    let family = delta_family(g, s)?;
    let mins = minimal_transversals(&family)?;
    Ok(dedup(mins.iter().flat_map(transversal_generators).collect()))
}

/// `g_{C,D} · f_{i,j}` over `A ∈ D_c(V_1, V_2)`, `i ∈ A ∩ V_1`,
/// `j ∈ A ∩ V_2`, `C ⨿ D = A \ {i, j}`.
///
/// For a fixed pair `(i, j)` a larger `A` only yields multiples, so each
/// pair is taken with the inclusion-minimal dominating sets containing it.
pub fn concise_cut_generators(g: &Graph, s: VertexSet) -> Result<Vec<Polynomial>> {
    let (v1, v2) = two_cut_sides(g, s)?;
    let all = pair_dominating_sets(g, s)?;
    let mut out = Vec::new();
    for &a in &all {
        for i in (a & v1).iter() {
            for j in (a & v2).iter() {
                let ij = VertexSet::from([i, j]);
                if all.iter().any(|&b| b != a && b.is_subset(a) && ij.is_subset(b)) {
                    continue;
                }
                let f = Polynomial::f(i.min(j), i.max(j));
                out.extend(splits(a.without(i).without(j)).into_iter().map(|gcd| &gcd * &f));
            }
        }
    }
    Ok(dedup(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::families::{complete, cycle, path};

    #[test]
    fn four_cycle_generators() {
        let c4 = cycle(4).unwrap();
        assert_eq!(transversal_ideal_generic(&c4, VertexSet::from([1, 3])).unwrap(), vec![Polynomial::f(2, 4)]);
        let gens = transversal_ideal_generic(&c4, VertexSet::EMPTY).unwrap();
        let mut expected = Vec::new();
        for (a, b) in [(1, 2), (2, 3), (3, 4), (1, 4)] {
            expected.extend(splits(VertexSet::from([a, b])));
        }
        assert_eq!(gens, dedup(expected));
        assert_eq!(gens.len(), 16);
    }

    #[test]
    fn complete_graph_gives_the_unit_ideal() {
        let gens = transversal_ideal_generic(&complete(4).unwrap(), VertexSet::EMPTY).unwrap();
        assert_eq!(gens, vec![Polynomial::one()]);
    }

    #[test]
    fn concise_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(concise_cut_generators(&c4, VertexSet::from([1, 3])).unwrap(), vec![Polynomial::f(2, 4)]);
        let p4 = path(4).unwrap();
        let gens = concise_cut_generators(&p4, VertexSet::from([2])).unwrap();
        let f14 = Polynomial::f(1, 4);
        assert_eq!(gens, dedup(vec![Polynomial::f(1, 3), &Polynomial::x(3) * &f14, &Polynomial::y(3) * &f14]));
        let c6 = cycle(6).unwrap();
        assert_eq!(concise_cut_generators(&c6, VertexSet::from([1, 4])).unwrap().len(), 16);
        // 4 - 1 - 2 - 3 cut at 1: {2,4} and {2,3,4} both matter, through different pairs
        let g = Graph::new(4, &[(1, 2), (1, 4), (2, 3)]).unwrap();
        let gens: Vec<String> = concise_cut_generators(&g, VertexSet::from([1])).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(gens.len(), 3);
        assert!(gens.contains(&"x2*x3*y4 - x2*x4*y3".to_string()));
        assert!(concise_cut_generators(&c6, VertexSet::from([1, 3, 5])).is_err());
    }
}
