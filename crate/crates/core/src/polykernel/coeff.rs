use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number.
///
/// Values that fit are kept as a reduced `i64` fraction with positive
/// denominator; everything else falls back to a big rational. The
/// representation is canonical, so derived equality and hashing are sound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i128
}

impl Coeff {
    pub const ZERO: Coeff = Coeff::Small(0, 1);
    pub const ONE: Coeff = Coeff::Small(1, 1);

    pub fn from_int(v: i64) -> Coeff {
        Coeff::Small(v, 1)
    }

    /// `num / den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Coeff {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Coeff {
        if num == 0 {
            return Coeff::ZERO;
        }
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Coeff::Small(n, d),
            _ => Coeff::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Coeff {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Coeff::Small(n, d),
            _ => Coeff::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(n, _) => *n < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(_, d) => *d == 1,
            Coeff::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Coeff {
        match self {
            Coeff::Small(0, _) => panic!("inverse of zero"),
            Coeff::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Coeff::Big(r) => Self::from_big(r.recip()),
        }
    }
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::ZERO
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::from_int(v)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Coeff::from_i128(a + c, b)
                } else {
                    Coeff::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Coeff::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self + &(-rhs)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return match a.checked_mul(*c) {
                        Some(v) => Coeff::Small(v, 1),
                        None => Coeff::from_i128(*a as i128 * *c as i128, 1),
                    };
                }
                Coeff::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Coeff::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for &Coeff {
    type Output = Coeff;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Coeff) -> Coeff {
        self * &rhs.recip()
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(n, d) => match n.checked_neg() {
                Some(n) => Coeff::Small(n, *d),
                None => Coeff::from_i128(-(*n as i128), *d as i128),
            },
            Coeff::Big(r) => Coeff::from_big(-r),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -&self
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a, b), Coeff::Small(c, d)) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(n, 1) => write!(f, "{n}"),
            Coeff::Small(n, d) => write!(f, "{n}/{d}"),
            Coeff::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Coeff::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `a` or `a/b` with optional sign on `a`; digits may be arbitrarily long.
impl FromStr for Coeff {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_int = |t: &str| -> Result<BigInt, String> {
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("bad number `{s}`"));
            }
            t.parse::<BigInt>().map_err(|_| format!("bad number `{s}`"))
        };
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (parse_int(a)?, parse_int(b)?),
            None => (parse_int(s)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        let g = num.gcd(&den);
        let mut r = BigRational::new_raw(num / &g, den / &g);
        if r.denom().is_negative() {
            r = BigRational::new_raw(-r.numer(), -r.denom());
        }
        Ok(Coeff::from_big(r))
    }
}
