use std::time::{Duration, Instant};

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::poly::{merge_scaled, Polynomial};
use crate::{Error, ResourceKind, Result};

/// Resource guards for a Gröbner computation. Tripping any of them yields
/// [`Error::Resource`], never a partial answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Cap on the number of polynomials the engine may create.
    pub max_polys: usize,
    /// Cap on the total degree of any polynomial added to the basis.
    pub max_degree: u32,
    /// Wall-clock budget, started by [`Limits::armed`].
    pub time_budget: Option<Duration>,
    deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_polys: 20_000, max_degree: 40, time_budget: Some(Duration::from_secs(300)), deadline: None }
    }
}

impl Limits {
    pub fn unlimited() -> Self {
        Limits { max_polys: usize::MAX, max_degree: u32::MAX, time_budget: None, deadline: None }
    }

    /// Starts the clock if a budget is set and no deadline is running yet.
    /// Computations sharing the returned value share one deadline.
    pub fn armed(&self) -> Limits {
        let mut l = self.clone();
        if l.deadline.is_none() {
            l.deadline = l.time_budget.map(|d| Instant::now() + d);
        }
        l
    }

    pub fn deadline(&self) -> Option<Instant> {
        self.deadline
    }

    pub(crate) fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Resource(ResourceKind::Time)),
            _ => Ok(()),
        }
    }
}

pub(crate) type Term = (Monomial, Coeff);

/// A polynomial in key layout with a monic leading term first.
#[derive(Clone, Debug)]
pub(crate) struct Keyed {
    pub(crate) terms: Vec<Term>,
    mask: u32,
    sugar: u32,
}

impl Keyed {
    fn new(terms: Vec<Term>, sugar: u32) -> Keyed {
        debug_assert!(!terms.is_empty() && terms[0].1.is_one());
        let mask = terms[0].0.mask();
        Keyed { terms, mask, sugar }
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

pub(crate) fn to_key(p: &Polynomial, ord: &MonomialOrder) -> Vec<Term> {
    let mut terms: Vec<Term> = p.terms().iter().map(|(m, c)| (ord.key(m), c.clone())).collect();
    terms.sort_by_key(|t| std::cmp::Reverse(t.0));
    terms
}

pub(crate) fn from_key(terms: &[Term], ord: &MonomialOrder) -> Polynomial {
    Polynomial::from_terms(terms.iter().map(|(m, c)| (ord.unkey(m), c.clone())).collect())
}

fn make_monic(mut terms: Vec<Term>) -> Vec<Term> {
    if !terms[0].1.is_one() {
        let inv = terms[0].1.recip();
        for t in terms.iter_mut() {
            t.1 = &t.1 * &inv;
        }
    }
    terms
}

fn find_reducer(basis: &[Keyed], active: &[usize], m: &Monomial) -> Option<usize> {
    let mask = m.mask();
    active.iter().copied().find(|&k| {
        let g = &basis[k];
        g.mask & !mask == 0 && g.lm().divides(m)
    })
}

/// Multivariate division of `p` by the monic polynomials `basis[active]`.
/// With `full` every term is reduced, otherwise only the leading one.
fn reduce(mut p: Vec<Term>, basis: &[Keyed], active: &[usize], full: bool, limits: Option<&Limits>) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    let mut steps = 0u64;
    let mut idx = 0;
    while idx < p.len() {
        let m = p[idx].0;
        match find_reducer(basis, active, &m) {
            Some(k) => {
                steps += 1;
                if steps.is_multiple_of(512) {
                    if let Some(l) = limits {
                        l.check_time()?;
                    }
                }
                let g = &basis[k];
                let q = g.lm().quotient_of(&m).expect("reducer divides");
                let c = -&p[idx].1;
                let tail: Vec<Term> = g.terms[1..].iter().map(|(gm, gc)| (gm.mul(&q), gc.clone())).collect();
                p = merge_scaled(&p[idx + 1..], &c, &tail);
                idx = 0;
            }
            None if full => {
                out.push(p[idx].clone());
                idx += 1;
            }
            None => {
                out.extend(p.drain(idx..));
                break;
            }
        }
    }
    Ok(out)
}

fn s_poly_keyed(a: &Keyed, b: &Keyed) -> Vec<Term> {
    let l = a.lm().lcm(b.lm());
    let qa = a.lm().quotient_of(&l).expect("lcm");
    let qb = b.lm().quotient_of(&l).expect("lcm");
    let ta: Vec<Term> = a.terms[1..].iter().map(|(m, c)| (m.mul(&qa), c.clone())).collect();
    let tb: Vec<Term> = b.terms[1..].iter().map(|(m, c)| (m.mul(&qb), c.clone())).collect();
    merge_scaled(&ta, &-Coeff::ONE, &tb)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a> {
    limits: &'a Limits,
    polys: Vec<Keyed>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (&self.polys[i], &self.polys[j]);
        let lcm = a.lm().lcm(b.lm());
        let sugar = (a.sugar + lcm.degree() - a.lm().degree()).max(b.sugar + lcm.degree() - b.lm().degree());
        Pair { i, j, lcm, sugar }
    }

    /// Adds `h` to the basis and prunes the pair set with the product and
    /// chain criteria (Gebauer-Möller update).
    fn insert(&mut self, h: Keyed) -> Result<()> {
        if self.polys.len() >= self.limits.max_polys {
            return Err(Error::Resource(ResourceKind::Polynomials));
        }
        let h_deg = h.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        if h_deg > self.limits.max_degree {
            return Err(Error::Resource(ResourceKind::Degree));
        }
        let hi = self.polys.len();
        let hlm = *h.lm();
        self.polys.push(h);

        let c: Vec<(usize, Monomial)> = self.active.iter().map(|&g| (g, hlm.lcm(self.polys[g].lm()))).collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        for (idx, &(g, l)) in c.iter().enumerate() {
            let coprime = hlm.is_coprime(self.polys[g].lm());
            if coprime || (!c[idx + 1..].iter().any(|(_, l2)| l2.divides(&l)) && !d.iter().any(|(_, l2)| l2.divides(&l))) {
                d.push((g, l));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hlm) != p.lcm
                && polys[p.j].lm().lcm(&hlm) != p.lcm)
        });
        for (g, _) in d {
            if !hlm.is_coprime(self.polys[g].lm()) {
                let p = self.pair(g, hi);
                self.pairs.push(p);
            }
        }
        self.active.retain(|&g| !hlm.divides(polys[g].lm()));
        self.active.push(hi);
        Ok(())
    }

    /// Normal selection refined by sugar: smallest sugar, then smallest lcm.
    fn pop_pair(&mut self) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar.cmp(&q.sugar).then(p.lcm.cmp(&q.lcm)).then((p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn add_reduced(&mut self, p: Vec<Term>, sugar: u32) -> Result<bool> {
        let h = reduce(p, &self.polys, &self.active, true, Some(self.limits))?;
        if h.is_empty() {
            return Ok(false);
        }
        self.insert(Keyed::new(make_monic(h), sugar))?;
        Ok(true)
    }
}

/// A Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
    keyed: Vec<Keyed>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.order == other.order && self.reduced == other.reduced
    }
}

impl Eq for GroebnerBasis {}

impl GroebnerBasis {
    /// Wraps polynomials already known to form a reduced Gröbner basis.
    /// They are made monic and sorted by increasing leading monomial.
    pub(crate) fn from_reduced(polys: Vec<Polynomial>, ord: &MonomialOrder) -> GroebnerBasis {
        let mut keyed: Vec<Keyed> = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                let t = make_monic(to_key(p, ord));
                let sugar = t.iter().map(|x| x.0.degree()).max().unwrap_or(0);
                Keyed::new(t, sugar)
            })
            .collect();
        keyed.sort_by(|a, b| a.lm().cmp(b.lm()));
        let generators = keyed.iter().map(|k| from_key(&k.terms, ord)).collect();
        GroebnerBasis { generators, order: ord.clone(), reduced: true, keyed }
    }

    /// The basis `{1}` of the whole ring.
    pub fn unit(ord: &MonomialOrder) -> GroebnerBasis {
        Self::from_reduced(vec![Polynomial::one()], ord)
    }

    /// The empty basis of the zero ideal.
    pub fn zero_ideal(ord: &MonomialOrder) -> GroebnerBasis {
        Self::from_reduced(Vec::new(), ord)
    }

    /// Generators by increasing leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.keyed.iter().map(|k| self.order.unkey(k.lm())).collect()
    }

    /// Remainder of full division; zero iff `f` is in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let all: Vec<usize> = (0..self.keyed.len()).collect();
        let r = reduce(to_key(f, &self.order), &self.keyed, &all, true, None).expect("no limits");
        from_key(&r, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every generator of `other` lies in this ideal.
    pub fn contains_all(&self, others: &[Polynomial]) -> bool {
        others.iter().all(|g| self.contains(g))
    }
}

fn check_ring(gens: &[Polynomial], ord: &MonomialOrder) -> Result<()> {
    let v = gens.iter().map(Polynomial::max_vertex).max().unwrap_or(0);
    if v > ord.n() {
        return Err(Error::pre(format!("variable index {v} exceeds the order's {} vertices", ord.n())));
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Zero generators are ignored; an all-zero list gives the zero ideal.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder, limits: &Limits) -> Result<GroebnerBasis> {
    if gens.is_empty() {
        return Err(Error::pre("buchberger needs at least one generator"));
    }
    check_ring(gens, ord)?;
    let limits = limits.armed();
    let mut eng = Engine { limits: &limits, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    let mut inputs: Vec<Vec<Term>> = gens.iter().filter(|g| !g.is_zero()).map(|g| to_key(g, ord)).collect();
    inputs.sort_by(|a, b| a[0].0.cmp(&b[0].0).then(a.len().cmp(&b.len())));
    for p in inputs {
        let sugar = p.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        eng.add_reduced(p, sugar)?;
        if eng.active.iter().any(|&k| eng.polys[k].lm().is_one()) {
            return Ok(GroebnerBasis::from_reduced(vec![Polynomial::one()], ord));
        }
    }
    while let Some(pair) = eng.pop_pair() {
        limits.check_time()?;
        let s = s_poly_keyed(&eng.polys[pair.i], &eng.polys[pair.j]);
        if eng.add_reduced(s, pair.sugar)? && eng.polys.last().is_some_and(|h| h.lm().is_one()) {
            return Ok(GroebnerBasis::from_reduced(vec![Polynomial::one()], ord));
        }
    }

    // interreduce: the active set is already minimal, so tail reduction finishes the job
    let mut out = Vec::with_capacity(eng.active.len());
    for &k in &eng.active {
        let g = &eng.polys[k];
        let tail = reduce(g.terms[1..].to_vec(), &eng.polys, &eng.active, true, Some(&limits))?;
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(tail);
        out.push(from_key(&terms, ord));
    }
    Ok(GroebnerBasis::from_reduced(out, ord))
}

/// `lcm/lt(f) * f - lcm/lt(g) * g` with leading coefficients divided out.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let ((mf, cf), (mg, cg)) = match (f.leading_term(ord), g.leading_term(ord)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::pre("S-polynomial of a zero polynomial")),
    };
    let l = mf.lcm(&mg);
    let a = f.mul_monomial(&mf.quotient_of(&l).expect("lcm")).scale(&cf.recip());
    let b = g.mul_monomial(&mg.quotient_of(&l).expect("lcm")).scale(&cg.recip());
    Ok(&a - &b)
}

/// Buchberger's criterion checked on every pair, without pruning.
pub fn is_groebner_basis(gens: &[Polynomial], ord: &MonomialOrder) -> bool {
    let keyed: Vec<Keyed> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Keyed::new(make_monic(to_key(p, ord)), 0))
        .collect();
    let all: Vec<usize> = (0..keyed.len()).collect();
    for i in 0..keyed.len() {
        for j in i + 1..keyed.len() {
            let s = s_poly_keyed(&keyed[i], &keyed[j]);
            if !reduce(s, &keyed, &all, false, None).expect("no limits").is_empty() {
                return false;
            }
        }
    }
    true
}

/// Monic, leading terms pairwise non-dividing and no tail term divisible by
/// any leading term.
pub fn is_reduced_basis(gens: &[Polynomial], ord: &MonomialOrder) -> bool {
    let lts: Vec<Option<(Monomial, &Coeff)>> = gens.iter().map(|g| g.leading_term(ord)).collect();
    if lts.iter().any(|t| !matches!(t, Some((_, c)) if c.is_one())) {
        return false;
    }
    let lms: Vec<Monomial> = lts.into_iter().map(|t| t.unwrap().0).collect();
    gens.iter().zip(&lms).enumerate().all(|(i, (g, lm))| {
        g.terms().iter().all(|(m, _)| lms.iter().enumerate().all(|(j, l)| (i == j && m == lm) || !l.divides(m)))
    })
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

    #[test]
    fn path_binomials_are_already_a_basis() {
        let ord = MonomialOrder::identity(3);
        let gb = buchberger(&[f(1, 2), f(2, 3)], &ord, &Limits::default()).unwrap();
        assert_eq!(gb.generators(), &[f(2, 3), f(1, 2)]);
        assert!(gb.contains(&(&Polynomial::x(2) * &f(1, 3))));
        assert!(!gb.contains(&f(1, 3)));
        assert_eq!(gb.normal_form(&Polynomial::x(1)), Polynomial::x(1));
        assert_eq!(gb.normal_form(&Polynomial::zero()), Polynomial::zero());
    }

    #[test]
    fn four_cycle_basis() {
        let ord = MonomialOrder::identity(4);
        let gens = [f(1, 2), f(2, 3), f(3, 4), f(1, 4)];
        let gb = buchberger(&gens, &ord, &Limits::default()).unwrap();
        let mut expected = vec![
            f(1, 2),
            f(2, 3),
            f(3, 4),
            f(1, 4),
            &Polynomial::x(4) * &f(1, 3),
            &Polynomial::y(1) * &f(2, 4),
        ];
        expected.sort_by(|a, b| ord.cmp(&a.leading_monomial(&ord).unwrap(), &b.leading_monomial(&ord).unwrap()));
        assert_eq!(gb.generators(), expected.as_slice());
        assert!(is_groebner_basis(gb.generators(), &ord));
        assert!(is_reduced_basis(gb.generators(), &ord));
        assert!(!is_groebner_basis(&gens, &ord));
    }

    #[test]
    fn monomial_and_unit_ideals() {
        let ord = MonomialOrder::identity(2);
        let gb = buchberger(&[Polynomial::x(1)], &ord, &Limits::default()).unwrap();
        assert_eq!(gb.generators(), &[Polynomial::x(1)]);
        let unit = buchberger(&[p("x1 + 1"), Polynomial::x(1)], &ord, &Limits::default()).unwrap();
        assert!(unit.is_unit());
        assert!(buchberger(&[], &ord, &Limits::default()).is_err());
        assert!(buchberger(&[Polynomial::x(3)], &ord, &Limits::default()).is_err());
    }

    #[test]
    fn s_polynomials() {
        let ord = MonomialOrder::identity(3);
        let s = s_polynomial(&f(1, 2), &f(2, 3), &ord).unwrap();
        let gb = buchberger(&[f(1, 2), f(2, 3)], &ord, &Limits::default()).unwrap();
        assert!(gb.contains(&s));
        assert_eq!(s_polynomial(&f(1, 2), &f(1, 2), &ord).unwrap(), Polynomial::zero());
        assert_eq!(s_polynomial(&Polynomial::x(1), &Polynomial::y(1), &ord).unwrap(), Polynomial::zero());
        assert!(s_polynomial(&Polynomial::zero(), &f(1, 2), &ord).is_err());
    }

    #[test]
    fn resource_caps_trip() {
        let ord = MonomialOrder::identity(4);
        let gens = [f(1, 2), f(2, 3), f(3, 4), f(1, 4)];
        let tight = Limits { max_polys: 3, ..Limits::default() };
        assert_eq!(buchberger(&gens, &ord, &tight).unwrap_err(), Error::Resource(ResourceKind::Polynomials));
        let shallow = Limits { max_degree: 2, ..Limits::default() };
        assert_eq!(buchberger(&gens, &ord, &shallow).unwrap_err(), Error::Resource(ResourceKind::Degree));
    }

    #[test]
    fn permuted_order_basis_is_valid() {
        let ord = MonomialOrder::from_sigma(vec![3, 1, 4, 2]).unwrap();
        let gens = [f(1, 2), f(2, 3), f(3, 4), f(1, 4)];
        let gb = buchberger(&gens, &ord, &Limits::default()).unwrap();
        assert!(is_groebner_basis(gb.generators(), &ord));
        assert!(is_reduced_basis(gb.generators(), &ord));
        assert!(gb.contains_all(&gens));
        let id = buchberger(&gens, &MonomialOrder::identity(4), &Limits::default()).unwrap();
        assert!(gb.contains_all(id.generators()));
    }
}
