//! Exact rational scalars, lattice vectors of the index group, and the
//! generalized binomial coefficients used throughout the deformation formulas.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator, so equality is canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<BigInt>);

impl Rational {
    pub fn zero() -> Self {
        Rational(Ratio::zero())
    }

    pub fn one() -> Self {
        Rational(Ratio::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Ratio::from_integer(BigInt::from(n)))
    }

    /// Build `num/den`; fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidRational(format!("{num}/{den}")));
        }
        Ok(Rational(Ratio::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// 1/n! as a rational.
    pub fn inv_factorial(n: usize) -> Self {
        let mut f = BigInt::one();
        for k in 2..=n {
            f *= BigInt::from(k);
        }
        Rational(Ratio::new(BigInt::one(), f))
    }

    /// Parsed from "p/q" or "p" (denominator omitted when 1).
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::InvalidRational(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str).map_err(|_| bad())?;
        let den = match den_str {
            Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational(Ratio::new(num, den)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.clone().$method(rhs.0.clone()))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(rhs.0.clone()))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.clone().$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0.clone())
    }
}

/// A vector of the index group: a pair of rationals. The zero vector is
/// representable, but no generator is indexed by it (such terms collapse to
/// zero at the element level).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupVec {
    pub x1: Rational,
    pub x2: Rational,
}

impl GroupVec {
    pub fn new(x1: Rational, x2: Rational) -> Self {
        GroupVec { x1, x2 }
    }

    pub fn from_ints(x1: i64, x2: i64) -> Self {
        GroupVec::new(Rational::from_int(x1), Rational::from_int(x2))
    }

    pub fn zero() -> Self {
        GroupVec::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero()
    }

    pub fn add(&self, other: &GroupVec) -> GroupVec {
        GroupVec::new(&self.x1 + &other.x1, &self.x2 + &other.x2)
    }

    pub fn neg(&self) -> GroupVec {
        GroupVec::new(-&self.x1, -&self.x2)
    }

    pub fn scale(&self, c: &Rational) -> GroupVec {
        GroupVec::new(c * &self.x1, c * &self.x2)
    }

    /// Parsed from "x1,x2" or "(x1, x2)".
    pub fn parse(s: &str) -> Result<Self, Error> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| Error::InvalidRational(s.to_string()))?;
        Ok(GroupVec::new(Rational::parse(a)?, Rational::parse(b)?))
    }
}

impl fmt::Display for GroupVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

impl fmt::Debug for GroupVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

/// The antisymmetric structure-constant determinant a1*b2 - a2*b1.
pub fn pairing(a: &GroupVec, b: &GroupVec) -> Rational {
    &(&a.x1 * &b.x2) - &(&a.x2 * &b.x1)
}

/// The weight a1*b1 + a2*b2 of a lattice vector against the pair (a1, a2).
pub fn weight(a1: &Rational, a2: &Rational, b: &GroupVec) -> Rational {
    &(a1 * &b.x1) + &(a2 * &b.x2)
}

/// Generalized binomial coefficient b(b-1)...(b-m+1)/m! for rational b,
/// the falling-product form; equals the ordinary binomial for integer b >= 0.
/// The rising-product companion C(b+m-1, m) is `binom_general(&(b+m-1), m)`.
pub fn binom_general(b: &Rational, m: usize) -> Rational {
    let mut acc = Rational::one();
    for k in 0..m {
        acc = &acc * &(b - &Rational::from_int(k as i64));
    }
    &acc * &Rational::inv_factorial(m)
}
