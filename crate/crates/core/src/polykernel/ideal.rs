use super::groebner::{buchberger, GroebnerBasis, Limits};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::Polynomial;
use crate::{Error, Result};

/// `f ∈ (gens)`.
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrder, limits: &Limits) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    if gens.iter().all(Polynomial::is_zero) {
        return Ok(false);
    }
    Ok(buchberger(gens, ord, limits)?.contains(f))
}

/// Keeps the `t`-free part of an elimination basis and reduces it under `ord`.
fn eliminate_t(gb: &GroebnerBasis, ord: &MonomialOrder) -> GroebnerBasis {
    let kept: Vec<Polynomial> = gb.generators().iter().filter(|g| !g.has_t()).cloned().collect();
    // a t-free subset of a reduced elimination basis is a reduced basis of the
    // contraction; the leading terms do not depend on where t sits
    GroebnerBasis::from_reduced(kept, ord)
}

fn nonzero(gens: &[Polynomial]) -> Vec<Polynomial> {
    gens.iter().filter(|g| !g.is_zero()).cloned().collect()
}

/// `I ∩ J` from `t·I + (1 - t)·J`, eliminating `t`. Returns the reduced basis under `ord`.
pub fn intersect(i: &[Polynomial], j: &[Polynomial], ord: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let (i, j) = (nonzero(i), nonzero(j));
    if i.is_empty() || j.is_empty() {
        return Ok(GroebnerBasis::from_reduced(Vec::new(), ord));
    }
    if i.iter().chain(&j).any(Polynomial::has_t) {
        return Err(Error::pre("intersection inputs must not use the auxiliary variable t"));
    }
    let t = Polynomial::t();
    let one_minus_t = &Polynomial::one() - &t;
    let mut gens: Vec<Polynomial> = i.iter().map(|g| &t * g).collect();
    gens.extend(j.iter().map(|g| &one_minus_t * g));
    let elim = ord.with_elimination();
    let gb = buchberger(&gens, &elim, limits)?;
    Ok(eliminate_t(&gb, ord))
}

/// `(I : f)`, obtained as `(I ∩ (f)) / f`. Returns the reduced basis under `ord`.
pub fn colon_poly(i: &[Polynomial], f: &Polynomial, ord: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::pre("colon by the zero polynomial"));
    }
    let i = nonzero(i);
    if i.is_empty() {
        return Ok(GroebnerBasis::from_reduced(Vec::new(), ord));
    }
    let meet = intersect(&i, std::slice::from_ref(f), ord, limits)?;
    let quotients: Vec<Polynomial> = meet
        .generators()
        .iter()
        .map(|h| {
            h.div_exact(f)
                .ok_or_else(|| Error::Internal(format!("{f} does not divide {h}")))
        })
        .collect::<Result<_>>()?;
    // leading terms of the quotients are lm(h)/lm(f), so they already form a
    // basis; one more pass makes it reduced
    buchberger(&quotients, ord, limits)
}

/// `(I : P)` for `P = (p_1, .., p_r)`, folded as `∩_k (I : p_k)`.
///
/// Variables are processed first. A generator is skipped when it already
/// lies in `I`, or when every generator of the running intersection `K`
/// multiplies it into `I`: then `K ⊆ (I : p_k)` and the intersection is unchanged.
pub fn colon_ideal(i: &[Polynomial], p: &[Polynomial], ord: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    let p = nonzero(p);
    if p.is_empty() {
        return Err(Error::pre("colon by the zero ideal"));
    }
    let limits = limits.armed();
    let gi = buchberger(&nonzero(i).into_iter().chain([Polynomial::zero()]).collect::<Vec<_>>(), ord, &limits)?;
    let mut order: Vec<&Polynomial> = p.iter().collect();
    order.sort_by_key(|f| (f.len(), f.total_degree()));

    let mut acc: Option<GroebnerBasis> = None;
    for f in order {
        limits.check_time()?;
        if gi.contains(f) {
            continue;
        }
        if let Some(k) = &acc {
            if k.generators().iter().all(|r| gi.contains(&(r * f))) {
                continue;
            }
        }
        let c = colon_poly(gi.generators(), f, ord, &limits)?;
        acc = Some(match acc {
            None => c,
            Some(k) => intersect(k.generators(), c.generators(), ord, &limits)?,
        });
    }
    Ok(acc.unwrap_or_else(|| GroebnerBasis::from_reduced(vec![Polynomial::one()], ord)))
}

/// Rabinowitsch test: `f ∈ √I` iff `1 ∈ I + (1 - t·f)`.
pub fn radical_membership(f: &Polynomial, i: &[Polynomial], ord: &MonomialOrder, limits: &Limits) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    if i.iter().chain([f]).any(Polynomial::has_t) {
        return Err(Error::pre("radical membership inputs must not use the auxiliary variable t"));
    }
    let mut gens = nonzero(i);
    gens.push(&Polynomial::one() - &(&Polynomial::t() * f));
    Ok(buchberger(&gens, &ord.with_elimination(), limits)?.is_unit())
}

/// Leading monomials of a reduced basis and whether all are squarefree.
pub fn initial_ideal(gb: &GroebnerBasis) -> (Vec<Monomial>, bool) {
    let lms = gb.leading_monomials();
    let squarefree = lms.iter().all(Monomial::is_squarefree);
    (lms, squarefree)
}

/// Smallest degree in which `(j)` is strictly larger than `(i)`, for
/// homogeneous `(i) ⊆ (j)`, with a witness of that degree in `(j) \ (i)`.
///
/// The witness is the normal form modulo `GB(i)` of a generator of `GB(j)`;
/// among candidates of minimal degree the one with the smallest leading
/// monomial under `ord` is returned, made monic.
pub fn min_new_degree(
    j: &[Polynomial],
    i: &[Polynomial],
    ord: &MonomialOrder,
    limits: &Limits,
) -> Result<(u32, Polynomial)> {
    if !j.iter().chain(i).all(Polynomial::is_homogeneous) {
        return Err(Error::pre("min_new_degree needs homogeneous generators"));
    }
    let limits = limits.armed();
    let gj = buchberger(&nonzero(j).into_iter().chain([Polynomial::zero()]).collect::<Vec<_>>(), ord, &limits)?;
    let gi = buchberger(&nonzero(i).into_iter().chain([Polynomial::zero()]).collect::<Vec<_>>(), ord, &limits)?;
    min_new_degree_gb(&gj, &gi)
}

/// [`min_new_degree`] on precomputed bases sharing one order.
pub fn min_new_degree_gb(gj: &GroebnerBasis, gi: &GroebnerBasis) -> Result<(u32, Polynomial)> {
    let ord = gj.order();
    let mut best: Option<(u32, Monomial, Polynomial)> = None;
    for g in gj.generators() {
        let r = gi.normal_form(g);
        let Some(lm) = r.leading_monomial(ord) else { continue };
        let d = r.total_degree();
        let better = match &best {
            None => true,
            Some((bd, blm, _)) => d < *bd || (d == *bd && ord.cmp(&lm, blm).is_lt()),
        };
        if better {
            best = Some((d, lm, r.monic(ord)));
        }
    }
    best.map(|(d, _, w)| (d, w)).ok_or(Error::NoNewElement)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn f(i: usize, j: usize) -> Polynomial {
        Polynomial::f(i, j)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn intersections() {
        let ord = MonomialOrder::identity(2);
        let xy = intersect(&[p("x1")], &[p("y1")], &ord, &lim()).unwrap();
        assert_eq!(xy.generators(), &[p("x1*y1")]);
        let xx = intersect(&[p("x1")], &[p("x1")], &ord, &lim()).unwrap();
        assert_eq!(xx.generators(), &[p("x1")]);
    }

    #[test]
    fn path_primes_intersect_to_the_edge_ideal() {
        let ord = MonomialOrder::identity(3);
        let p2 = [p("x2"), p("y2")];
        let p_empty = [f(1, 2), f(1, 3), f(2, 3)];
        let meet = intersect(&p2, &p_empty, &ord, &lim()).unwrap();
        let j = buchberger(&[f(1, 2), f(2, 3)], &ord, &lim()).unwrap();
        assert_eq!(meet, j);
        let swapped = intersect(&p_empty, &p2, &ord, &lim()).unwrap();
        assert_eq!(meet, swapped);
    }

    #[test]
    fn colon_by_polynomials() {
        let ord = MonomialOrder::identity(3);
        let c = colon_poly(&[p("x1*y2")], &p("x1"), &ord, &lim()).unwrap();
        assert_eq!(c.generators(), &[p("y2")]);
        let c = colon_poly(&[f(1, 2), f(2, 3)], &p("x2"), &ord, &lim()).unwrap();
        let k3 = buchberger(&[f(1, 2), f(1, 3), f(2, 3)], &ord, &lim()).unwrap();
        assert_eq!(c, k3);
        let c = colon_poly(&[f(1, 2), f(2, 3)], &Polynomial::one(), &ord, &lim()).unwrap();
        assert_eq!(c, buchberger(&[f(1, 2), f(2, 3)], &ord, &lim()).unwrap());
        assert!(colon_poly(&[f(1, 2)], &Polynomial::zero(), &ord, &lim()).is_err());
    }

    #[test]
    fn colon_by_ideals() {
        let ord = MonomialOrder::identity(4);
        let j = [f(1, 2), f(2, 3), f(3, 4), f(1, 4)];
        let prime = [p("x1"), p("y1"), p("x3"), p("y3")];
        let c = colon_ideal(&j, &prime, &ord, &lim()).unwrap();
        assert!(c.contains(&f(2, 4)));
        let (d, w) = min_new_degree(c.generators(), &j, &ord, &lim()).unwrap();
        assert_eq!((d, w), (2, f(2, 4)));

        let self_colon = colon_ideal(&j, &j, &ord, &lim()).unwrap();
        assert!(self_colon.is_unit());

        let ord3 = MonomialOrder::identity(3);
        let jp3 = [f(1, 2), f(2, 3)];
        let c = colon_ideal(&jp3, &[f(1, 2), f(1, 3), f(2, 3)], &ord3, &lim()).unwrap();
        let (d, w) = min_new_degree(c.generators(), &jp3, &ord3, &lim()).unwrap();
        assert_eq!(d, 1);
        assert!(w == p("x2") || w == p("y2"));
    }

    #[test]
    fn radical_checks() {
        let ord = MonomialOrder::identity(2);
        assert!(radical_membership(&p("x1"), &[p("x1^2")], &ord, &lim()).unwrap());
        assert!(!radical_membership(&p("x1"), &[p("x2")], &ord, &lim()).unwrap());
        let ord4 = MonomialOrder::identity(4);
        let mut i = vec![f(1, 2), f(2, 3), f(3, 4), f(1, 4)];
        i.push(f(2, 4));
        assert!(radical_membership(&f(2, 4), &i, &ord4, &lim()).unwrap());
    }

    #[test]
    fn initial_ideals() {
        let ord = MonomialOrder::identity(4);
        let gb = buchberger(&[f(1, 2), f(2, 3), f(3, 4), f(1, 4)], &ord, &lim()).unwrap();
        let (lms, sf) = initial_ideal(&gb);
        assert!(sf);
        let mut names: Vec<String> = lms.iter().map(|m| m.to_string()).collect();
        names.sort();
        assert_eq!(names, ["x1*x4*y3", "x1*y2", "x1*y4", "x2*y1*y4", "x2*y3", "x3*y4"]);
        let sq = buchberger(&[p("x1^2")], &ord, &lim()).unwrap();
        assert!(!initial_ideal(&sq).1);
        assert!(initial_ideal(&buchberger(&[p("x1")], &ord, &lim()).unwrap()).1);
    }

    #[test]
    fn min_new_degree_examples() {
        let ord = MonomialOrder::identity(2);
        let (d, w) = min_new_degree(&[p("x1"), p("y2^2")], &[p("x1")], &ord, &lim()).unwrap();
        assert_eq!((d, w), (2, p("y2^2")));
        assert_eq!(min_new_degree(&[p("x1")], &[p("x1")], &ord, &lim()).unwrap_err(), Error::NoNewElement);
        assert!(min_new_degree(&[p("x1 + 1")], &[p("x1")], &ord, &lim()).is_err());
    }

    #[test]
    fn membership() {
        let ord = MonomialOrder::identity(3);
        let j = [f(1, 2), f(2, 3)];
        assert!(ideal_membership(&(&p("x2") * &f(1, 3)), &j, &ord, &lim()).unwrap());
        assert!(!ideal_membership(&f(1, 3), &j, &ord, &lim()).unwrap());
        assert!(ideal_membership(&Polynomial::zero(), &j, &ord, &lim()).unwrap());
    }
}
