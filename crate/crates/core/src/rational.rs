//! Exact rationals, extended reals and extended distances.
//!
//! Every coordinate, smoothing parameter and distance in this crate is an
//! exact rational. Numbers print canonically as `p/q` (or `p` when the
//! denominator is one) and parse from the same form, from plain integers
//! and from finite decimals such as `0.25`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Rat {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn int(value: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn half(&self) -> Rat {
        Rat(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }

    pub fn double(&self) -> Rat {
        Rat(&self.0 + &self.0)
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn midpoint(&self, other: &Rat) -> Rat {
        (self + other).half()
    }

    /// Lossy conversion, for timing reports and plotting only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Rat(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_part: BigInt = match int {
                "" | "-" | "+" => BigInt::zero(),
                _ => int.parse().map_err(|_| bad())?,
            };
            let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            let mut value = BigRational::new(frac_part, scale);
            if negative {
                value = -value;
            }
            return Ok(Rat(BigRational::from_integer(int_part) + value));
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Rat(BigRational::from_integer(n)))
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Rat {
        Rat::int(v)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// A point of the extended real line.
///
/// Variant order gives the total order `NegInf < Fin(_) < PosInf`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl Ext {
    pub fn fin(&self) -> Option<&Rat> {
        match self {
            Ext::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    /// Shift by a finite amount; infinities are fixed.
    pub fn shift(&self, by: &Rat) -> Ext {
        match self {
            Ext::Fin(r) => Ext::Fin(r + by),
            other => other.clone(),
        }
    }

    pub fn neg(&self) -> Ext {
        match self {
            Ext::NegInf => Ext::PosInf,
            Ext::PosInf => Ext::NegInf,
            Ext::Fin(r) => Ext::Fin(-r),
        }
    }
}

impl From<Rat> for Ext {
    fn from(r: Rat) -> Ext {
        Ext::Fin(r)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => f.write_str("-inf"),
            Ext::PosInf => f.write_str("inf"),
            Ext::Fin(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Ext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Ext, Error> {
        match s.trim() {
            "inf" | "+inf" | "infinity" | "+infinity" => Ok(Ext::PosInf),
            "-inf" | "-infinity" => Ok(Ext::NegInf),
            other => other.parse().map(Ext::Fin),
        }
    }
}

/// A nonnegative extended distance.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDist {
    Finite(Rat),
    Infinite,
}

impl ExtDist {
    pub fn zero() -> ExtDist {
        ExtDist::Finite(Rat::zero())
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            ExtDist::Finite(r) => Some(r),
            ExtDist::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtDist::Finite(_))
    }

    pub fn half(&self) -> ExtDist {
        match self {
            ExtDist::Finite(r) => ExtDist::Finite(r.half()),
            ExtDist::Infinite => ExtDist::Infinite,
        }
    }

    pub fn double(&self) -> ExtDist {
        match self {
            ExtDist::Finite(r) => ExtDist::Finite(r.double()),
            ExtDist::Infinite => ExtDist::Infinite,
        }
    }

    /// `|a - b|` on the extended line, with `|inf - inf| = 0`.
    pub fn between(a: &Ext, b: &Ext) -> ExtDist {
        match (a, b) {
            (Ext::Fin(x), Ext::Fin(y)) => ExtDist::Finite((x - y).abs()),
            (x, y) if x == y => ExtDist::zero(),
            _ => ExtDist::Infinite,
        }
    }

    pub fn max_of<I: IntoIterator<Item = ExtDist>>(iter: I) -> ExtDist {
        iter.into_iter().fold(ExtDist::zero(), Ord::max)
    }

    pub fn sum(&self, other: &ExtDist) -> ExtDist {
        match (self, other) {
            (ExtDist::Finite(a), ExtDist::Finite(b)) => ExtDist::Finite(a + b),
            _ => ExtDist::Infinite,
        }
    }
}

impl From<Rat> for ExtDist {
    fn from(r: Rat) -> ExtDist {
        ExtDist::Finite(r)
    }
}

impl PartialEq<Rat> for ExtDist {
    fn eq(&self, other: &Rat) -> bool {
        self.finite() == Some(other)
    }
}

impl PartialOrd<Rat> for ExtDist {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(match self {
            ExtDist::Finite(r) => r.cmp(other),
            ExtDist::Infinite => Ordering::Greater,
        })
    }
}

impl fmt::Display for ExtDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDist::Finite(r) => write!(f, "{r}"),
            ExtDist::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ExtDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtDist {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExtDist, Error> {
        match s.parse::<Ext>()? {
            Ext::PosInf => Ok(ExtDist::Infinite),
            Ext::Fin(r) if !r.is_negative() => Ok(ExtDist::Finite(r)),
            _ => Err(Error::Parse(format!("not a distance: {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_canonically() {
        assert_eq!("6/4".parse::<Rat>().unwrap().to_string(), "3/2");
        assert_eq!("-4/2".parse::<Rat>().unwrap().to_string(), "-2");
        assert_eq!("0.25".parse::<Rat>().unwrap(), Rat::new(1, 4));
        assert_eq!("-1.5".parse::<Rat>().unwrap(), Rat::new(-3, 2));
        assert_eq!("-0.5".parse::<Rat>().unwrap(), Rat::new(-1, 2));
        assert!("1/0".parse::<Rat>().is_err());
        assert!("abc".parse::<Rat>().is_err());
        assert_eq!("-inf".parse::<Ext>().unwrap(), Ext::NegInf);
        assert_eq!("inf".parse::<ExtDist>().unwrap(), ExtDist::Infinite);
        assert!("-1".parse::<ExtDist>().is_err());
    }

    #[test]
    fn extended_order() {
        assert!(Ext::NegInf < Ext::Fin(Rat::int(-1000)));
        assert!(Ext::Fin(Rat::int(1000)) < Ext::PosInf);
        assert!(ExtDist::Finite(Rat::int(10)) < ExtDist::Infinite);
        assert_eq!(ExtDist::between(&Ext::PosInf, &Ext::PosInf), ExtDist::zero());
        assert_eq!(
            ExtDist::between(&Ext::PosInf, &Ext::Fin(Rat::zero())),
            ExtDist::Infinite
        );
    }
}
