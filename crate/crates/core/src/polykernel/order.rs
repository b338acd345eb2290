use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, SLOTS, T_SLOT};
use crate::graphcore::MAX_VERTICES;
use crate::{Error, Result};

/// Lexicographic order `x_{σ⁻¹(1)} > .. > x_{σ⁻¹(n)} > y_{σ⁻¹(1)} > .. > y_{σ⁻¹(n)}`,
/// optionally with `t` above every other variable.
///
/// `sigma[v - 1] = σ(v)` is the rank of vertex `v`. Without the elimination
/// flag `t` is the smallest variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    n: usize,
    sigma: Vec<usize>,
    elim: bool,
    // layout[k] = natural slot that sits at significance position k
    layout: [u8; SLOTS],
}

impl MonomialOrder {
    /// The order `x_1 > .. > x_n > y_1 > .. > y_n`.
    pub fn identity(n: usize) -> MonomialOrder {
        Self::from_sigma((1..=n).collect()).expect("identity is a permutation")
    }

    /// Builds the order of a permutation given as `sigma[v - 1] = σ(v)`.
    pub fn from_sigma(sigma: Vec<usize>) -> Result<MonomialOrder> {
        let n = sigma.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        let mut seen = vec![false; n + 1];
        for &r in &sigma {
            if r == 0 || r > n || seen[r] {
                return Err(Error::pre(format!("{sigma:?} is not a permutation of 1..={n}")));
            }
            seen[r] = true;
        }
        let mut o = MonomialOrder { n, sigma, elim: false, layout: [0; SLOTS] };
        o.build_layout();
        Ok(o)
    }

    /// Builds the order from the ranking list `σ⁻¹(1), .., σ⁻¹(n)`, most significant vertex first.
    pub fn from_ranking(ranking: &[usize]) -> Result<MonomialOrder> {
        let mut sigma = vec![0; ranking.len()];
        for (pos, &v) in ranking.iter().enumerate() {
            if v == 0 || v > ranking.len() {
                return Err(Error::pre(format!("{ranking:?} is not a permutation")));
            }
            sigma[v - 1] = pos + 1;
        }
        Self::from_sigma(sigma)
    }

    /// Same order with `t` promoted above all `x` and `y` variables.
    pub fn with_elimination(&self) -> MonomialOrder {
        let mut o = self.clone();
        o.elim = true;
        o.build_layout();
        o
    }

    /// Same order with `t` the smallest variable.
    pub fn without_elimination(&self) -> MonomialOrder {
        let mut o = self.clone();
        o.elim = false;
        o.build_layout();
        o
    }

    fn build_layout(&mut self) {
        let mut ranking = vec![0; self.n];
        for (v, &r) in self.sigma.iter().enumerate() {
            ranking[r - 1] = v;
        }
        let mut order: Vec<usize> = Vec::with_capacity(SLOTS);
        if self.elim {
            order.push(T_SLOT);
        }
        order.extend(ranking.iter().copied());
        order.extend(ranking.iter().map(|&v| MAX_VERTICES + v));
        for s in 0..SLOTS {
            if !order.contains(&s) {
                order.push(s);
            }
        }
        for (k, s) in order.into_iter().enumerate() {
            self.layout[k] = s as u8;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `sigma()[v - 1] = σ(v)`.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_elimination(&self) -> bool {
        self.elim
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(k, &r)| r == k + 1)
    }

    /// Rearranges exponents so that plain array comparison realises this order.
    pub(crate) fn key(&self, m: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        for (x, &l) in e.iter_mut().zip(self.layout.iter()) {
            *x = m.e[l as usize];
        }
        Monomial { e }
    }

    /// Inverse of [`MonomialOrder::key`].
    pub(crate) fn unkey(&self, k: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        for p in 0..SLOTS {
            e[self.layout[p] as usize] = k.e[p];
        }
        Monomial { e }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for k in 0..SLOTS {
            let s = self.layout[k] as usize;
            match a.e[s].cmp(&b.e[s]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lex(sigma={:?}{})", self.sigma, if self.elim { ", t first" } else { "" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polykernel::monomial::Var;

    #[test]
    fn identity_matches_natural_order() {
        let o = MonomialOrder::identity(4);
        let ms = [Monomial::x(1), Monomial::x(4), Monomial::y(1), Monomial::y(4), Monomial::t()];
        for a in &ms {
            for b in &ms {
                assert_eq!(o.cmp(a, b), a.cmp(b));
                assert_eq!(o.key(a).cmp(&o.key(b)), a.cmp(b));
            }
        }
    }

    #[test]
    fn permuted_order() {
        // σ(1) = 3, σ(2) = 1, σ(3) = 2: x2 > x3 > x1 > y2 > y3 > y1
        let o = MonomialOrder::from_sigma(vec![3, 1, 2]).unwrap();
        let chain = [Monomial::x(2), Monomial::x(3), Monomial::x(1), Monomial::y(2), Monomial::y(3), Monomial::y(1)];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        assert_eq!(MonomialOrder::from_ranking(&[2, 3, 1]).unwrap(), o);
        let m = Monomial::from_powers(&[(Var::X(1), 2), (Var::Y(2), 1), (Var::T, 3)]);
        assert_eq!(o.unkey(&o.key(&m)), m);
    }

    #[test]
    fn elimination_puts_t_first() {
        let o = MonomialOrder::identity(3).with_elimination();
        assert_eq!(o.cmp(&Monomial::t(), &Monomial::from_powers(&[(Var::X(1), 9)])), Ordering::Greater);
        assert!(MonomialOrder::from_sigma(vec![1, 1]).is_err());
    }
}
