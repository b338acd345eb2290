use std::fmt;

use crate::graphcore::MAX_VERTICES;

pub(crate) const SLOTS: usize = 32;
pub(crate) const T_SLOT: usize = 2 * MAX_VERTICES;

/// A ring variable: `x_i`, `y_i` (1-based) or the auxiliary `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
    T,
}

impl Var {
    pub(crate) fn slot(self) -> usize {
        match self {
            Var::X(i) => {
                assert!((1..=MAX_VERTICES).contains(&i), "variable index {i} out of range");
                i - 1
            }
            Var::Y(i) => {
                assert!((1..=MAX_VERTICES).contains(&i), "variable index {i} out of range");
                MAX_VERTICES + i - 1
            }
            Var::T => T_SLOT,
        }
    }

    pub(crate) fn from_slot(s: usize) -> Var {
        match s {
            s if s < MAX_VERTICES => Var::X(s + 1),
            s if s < T_SLOT => Var::Y(s - MAX_VERTICES + 1),
            T_SLOT => Var::T,
            _ => unreachable!("unused monomial slot {s}"),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::T => f.write_str("t"),
        }
    }
}

/// A monomial in `x_1..x_15, y_1..y_15, t` stored as a dense exponent array.
///
/// The derived ordering compares exponent arrays lexicographically, which is
/// lex with `x_1 > .. > x_15 > y_1 > .. > y_15 > t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    pub(crate) e: [u8; SLOTS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e: [0; SLOTS] };

    pub fn var(v: Var) -> Monomial {
        let mut m = Monomial::ONE;
        m.e[v.slot()] = 1;
        m
    }

    pub fn x(i: usize) -> Monomial {
        Self::var(Var::X(i))
    }

    pub fn y(i: usize) -> Monomial {
        Self::var(Var::Y(i))
    }

    pub fn t() -> Monomial {
        Self::var(Var::T)
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_powers(powers: &[(Var, u8)]) -> Monomial {
        powers.iter().fold(Monomial::ONE, |m, &(v, k)| {
            let mut p = Monomial::ONE;
            p.e[v.slot()] = k;
            m.mul(&p)
        })
    }

    pub fn exponent(&self, v: Var) -> u8 {
        self.e[v.slot()]
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().map(|&k| k as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.e == [0; SLOTS]
    }

    /// Panics if an exponent would exceed 255.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        for (k, x) in e.iter_mut().enumerate() {
            *x = self.e[k].checked_add(other.e[k]).expect("monomial exponent overflow");
        }
        Monomial { e }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0u8; SLOTS];
        for (k, x) in e.iter_mut().enumerate() {
            *x = other.e[k].checked_sub(self.e[k])?;
        }
        Some(Monomial { e })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut e = [0u8; SLOTS];
        for (k, x) in e.iter_mut().enumerate() {
            *x = self.e[k].max(other.e[k]);
        }
        Monomial { e }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.e.iter().zip(other.e.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.e.iter().all(|&k| k <= 1)
    }

    pub fn has_t(&self) -> bool {
        self.e[T_SLOT] > 0
    }

    /// Largest vertex index among the `x`/`y` variables present, 0 for none.
    pub fn max_vertex(&self) -> usize {
        (0..MAX_VERTICES)
            .rev()
            .find(|&i| self.e[i] > 0 || self.e[MAX_VERTICES + i] > 0)
            .map_or(0, |i| i + 1)
    }

    /// Variables with positive exponent, in slot order.
    pub fn powers(&self) -> impl Iterator<Item = (Var, u8)> + '_ {
        self.e.iter().enumerate().filter(|(_, &k)| k > 0).map(|(s, &k)| (Var::from_slot(s), k))
    }

    /// Bit `k` set iff slot `k` has positive exponent. Used as a quick
    /// divisibility filter.
    pub(crate) fn mask(&self) -> u32 {
        let mut m = 0u32;
        for (k, &v) in self.e.iter().enumerate() {
            if v > 0 {
                m |= 1 << k;
            }
        }
        m
    }
}

/// `x1^2*y3`; the unit monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.powers().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
