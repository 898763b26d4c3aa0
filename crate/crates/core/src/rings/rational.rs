//! Arbitrary-precision rationals with an inline fast path.
//!
//! Values that fit in `i64/i64` stay unboxed; anything larger falls back to
//! `BigRational`. Both variants are kept canonical (lowest terms, positive
//! denominator, and `Small` whenever the value fits), so structural equality
//! is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone)]
pub enum Rational {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small(0, 1)
    }

    pub fn one() -> Self {
        Rational::Small(1, 1)
    }

    pub fn from_int(v: i64) -> Self {
        Rational::Small(v, 1)
    }

    /// `num/den`, reduced. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_bigrational(BigRational::new(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    fn from_bigrational(v: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with a positive denominator.
        match (v.numer().to_i64(), v.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(Box::new(v)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rational::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small(_, d) => *d == 1,
            Rational::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n < 0,
            Rational::Big(b) => b.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(b) => b.denom().clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Rational::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        match self {
            Rational::Small(0, _) => None,
            Rational::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Rational::Big(b) => Some(Self::from_bigrational(b.recip())),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power allowing negative exponents. Panics on `0^(-k)`.
    pub fn powi(&self, e: i32) -> Self {
        if e >= 0 {
            self.pow(e as u32)
        } else {
            self.recip().expect("negative power of zero").pow(e.unsigned_abs())
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => a == c && b == d,
            (Rational::Big(x), Rational::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Rational::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Rational::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::Small(v, 1)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::Small(v as i64, 1)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Self::from_bigrational(v)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, rhs) {
            if *b == 1 && *d == 1 {
                return match a.checked_add(*c) {
                    Some(s) => Rational::Small(s, 1),
                    None => Rational::from_i128(*a as i128 + *c as i128, 1),
                };
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            let g = gcd_u128(b as u128, d as u128) as i128;
            let den = (b / g) * d;
            if let Some(num) = (a * (d / g)).checked_add(c * (b / g)) {
                return Rational::from_i128(num, den);
            }
        }
        Rational::from_bigrational(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, rhs) {
            if *b == 1 && *d == 1 {
                return match a.checked_sub(*c) {
                    Some(s) => Rational::Small(s, 1),
                    None => Rational::from_i128(*a as i128 - *c as i128, 1),
                };
            }
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            let g = gcd_u128(b as u128, d as u128) as i128;
            let den = (b / g) * d;
            if let Some(num) = (a * (d / g)).checked_sub(c * (b / g)) {
                return Rational::from_i128(num, den);
            }
        }
        Rational::from_bigrational(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        if let (Rational::Small(a, b), Rational::Small(c, d)) = (self, rhs) {
            if *a == 0 || *c == 0 {
                return Rational::zero();
            }
            if *b == 1 && *d == 1 {
                return match a.checked_mul(*c) {
                    Some(p) => Rational::Small(p, 1),
                    None => Rational::from_i128(*a as i128 * *c as i128, 1),
                };
            }
            let g1 = gcd_u128(a.unsigned_abs() as u128, d.unsigned_abs() as u128) as i128;
            let g2 = gcd_u128(c.unsigned_abs() as u128, b.unsigned_abs() as u128) as i128;
            let num = (*a as i128 / g1) * (*c as i128 / g2);
            let den = (*b as i128 / g2) * (*d as i128 / g1);
            return Rational::from_i128(num, den);
        }
        Rational::from_bigrational(self.to_big() * rhs.to_big())
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        let inv = rhs.recip().expect("division by zero rational");
        self * &inv
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self {
            Rational::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational::Small(m, *d),
                None => Rational::from_i128(-(*n as i128), *d as i128),
            },
            Rational::Big(b) => Rational::from_bigrational(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{n}"),
            Rational::Small(n, d) => write!(f, "{n}/{d}"),
            Rational::Big(b) => {
                if b.is_integer() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p`, `-p` and `p/q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Self::from_big(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(3, -6), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, -5), Rational::zero());
        assert_eq!(Rational::new(0, 7).to_string(), "0");
        assert_eq!(Rational::new(-4, 6).to_string(), "-2/3");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Rational::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(..)));
        let sum = &big + &Rational::one();
        assert_eq!(&sum - &Rational::one(), big);
    }

    #[test]
    fn parse_and_order() {
        let a: Rational = "3/4".parse().unwrap();
        let b: Rational = "-1/2".parse().unwrap();
        assert!(b < a);
        assert_eq!(&a + &b, Rational::new(1, 4));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn pow_and_recip() {
        let a = Rational::new(-2, 3);
        assert_eq!(a.pow(3), Rational::new(-8, 27));
        assert_eq!(a.powi(-2), Rational::new(9, 4));
        assert_eq!(Rational::zero().recip(), None);
    }
}
