use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::coeff::Coeff;
use super::monomial::{Monomial, Var};
use super::order::MonomialOrder;
use crate::graphcore::{VertexSet, MAX_VERTICES};
use crate::Error;

/// A polynomial with exact rational coefficients.
///
/// Terms are kept sorted by decreasing monomial in the natural lex layout
/// and never carry a zero coefficient, so structural equality is ideal-free
/// equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

/// Sorted-descending merge of two term lists, `a + s * b`.
pub(crate) fn merge_scaled<K: Ord + Copy>(a: &[(K, Coeff)], s: &Coeff, b: &[(K, Coeff)]) -> Vec<(K, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, s * &b[j].1));
                j += 1;
            }
            Ordering::Equal => {
                let c = &a[i].1 + &(s * &b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (*m, s * c)));
    out
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Self::constant(Coeff::ONE)
    }

    pub fn constant(c: Coeff) -> Polynomial {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: Coeff, m: Monomial) -> Polynomial {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Self::term(Coeff::ONE, m)
    }

    pub fn x(i: usize) -> Polynomial {
        Self::monomial(Monomial::x(i))
    }

    pub fn y(i: usize) -> Polynomial {
        Self::monomial(Monomial::y(i))
    }

    pub fn t() -> Polynomial {
        Self::monomial(Monomial::t())
    }

    /// The 2-minor `f_{i,j} = x_i y_j - x_j y_i`.
    pub fn f(i: usize, j: usize) -> Polynomial {
        Self::from_terms(vec![
            (Monomial::x(i).mul(&Monomial::y(j)), Coeff::ONE),
            (Monomial::x(j).mul(&Monomial::y(i)), -Coeff::ONE),
        ])
    }

    /// `g_{C,D} = ∏_{k∈C} x_k ∏_{k∈D} y_k`.
    pub fn g(c: VertexSet, d: VertexSet) -> Polynomial {
        let m = c.iter().map(Monomial::x).chain(d.iter().map(Monomial::y)).fold(Monomial::ONE, |a, b| a.mul(&b));
        Self::monomial(m)
    }

    /// Collects terms in any order; like monomials are combined.
    pub fn from_terms(mut terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|t| t.1.is_zero()) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    /// Terms by decreasing natural lex order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// All terms share one total degree (`t` counts). Zero is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn has_t(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_t())
    }

    /// Largest vertex index among `x`/`y` variables present.
    pub fn max_vertex(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.max_vertex()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.iter().find(|(k, _)| k == m).map_or(Coeff::ZERO, |(_, c)| c.clone())
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0)).map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient under `ord` is 1.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, s: &Coeff) -> Polynomial {
        if s.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, s * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // multiplying by a monomial preserves lex order
        Polynomial { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient `self / f`, or `None` if `f` does not divide `self`.
    pub fn div_exact(&self, f: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = f.terms.first()?;
        let mut rest = self.terms.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rest.first().cloned() {
            let qm = lm.quotient_of(&m)?;
            let qc = &c / lc;
            rest = merge_scaled(&rest, &-&qc, &f.mul_monomial(&qm).terms);
            q.push((qm, qc));
        }
        Some(Polynomial::from_terms(q))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial { terms: merge_scaled(&self.terms, &Coeff::ONE, &rhs.terms) }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial { terms: merge_scaled(&self.terms, &-Coeff::ONE, &rhs.terms) }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::ONE)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.len() * rhs.len());
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                terms.push((a.mul(b), c * d));
            }
        }
        Polynomial::from_terms(terms)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Prints `3/2*x1^2*y3 - x2*y4`: terms by decreasing lex, unit coefficients
/// omitted, zero as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_factor(tok: &str) -> Result<(Coeff, Monomial), String> {
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => {
            let e: u8 = e.parse().map_err(|_| format!("bad exponent in `{tok}`"))?;
            (b, e)
        }
        None => (tok, 1),
    };
    if base.starts_with(|c: char| c.is_ascii_digit()) {
        if exp != 1 {
            return Err(format!("exponents on numbers are not supported: `{tok}`"));
        }
        return Ok((base.parse()?, Monomial::ONE));
    }
    let var = if base == "t" {
        Var::T
    } else {
        let (kind, idx) = base.split_at(base.len().min(1));
        let i: usize = idx.parse().map_err(|_| format!("unknown variable `{base}`"))?;
        if !(1..=MAX_VERTICES).contains(&i) {
            return Err(format!("variable index out of range in `{base}`"));
        }
        match kind {
            "x" => Var::X(i),
            "y" => Var::Y(i),
            _ => return Err(format!("unknown variable `{base}`")),
        }
    };
    Ok((Coeff::ONE, Monomial::from_powers(&[(var, exp)])))
}

/// Parses the printed format. Whitespace is ignored everywhere, a leading
/// `+` is allowed and numeric factors may appear anywhere in a product.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::PolyParse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if terms.is_empty() => (false, rest),
                _ => return Err(Error::PolyParse(format!("expected `+` or `-` before `{rest}`"))),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(Error::PolyParse(format!("empty term in `{s}`")));
            }
            let mut c = if neg { -Coeff::ONE } else { Coeff::ONE };
            let mut m = Monomial::ONE;
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(Error::PolyParse(format!("empty factor in `{term}`")));
                }
                let (fc, fm) = parse_factor(factor).map_err(Error::PolyParse)?;
                c = &c * &fc;
                m = m.mul(&fm);
            }
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(terms))
    }
}
