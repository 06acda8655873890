//! Arbitrary-precision rational arithmetic.
//!
//! `Rat` is a thin newtype over [`num_rational::BigRational`]. Values are
//! always stored reduced with a positive denominator, which the backing
//! library maintains on every construction. The text form is `p/q` with
//! an optional leading sign and `q > 0`; a bare integer `p` parses as
//! `p/1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number, stored reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

/// Errors from constructing or parsing a `Rat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatError {
    ZeroDenominator,
    Malformed { text: String },
}

impl fmt::Display for RatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatError::ZeroDenominator => write!(f, "denominator must be nonzero"),
            RatError::Malformed { text } => write!(f, "malformed rational: {text:?}"),
        }
    }
}

impl std::error::Error for RatError {}

impl Rat {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Rat, RatError> {
        if denom.is_zero() {
            return Err(RatError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(numer, denom)))
    }

    pub fn from_int(n: i64) -> Rat {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` from machine integers; panics on `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Rat {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// Exact power of two, `2^e`, for any sign of `e`.
    pub fn pow2(e: i32) -> Rat {
        let mag = BigInt::one() << e.unsigned_abs() as usize;
        if e >= 0 {
            Rat(BigRational::from_integer(mag))
        } else {
            Rat(BigRational::new(BigInt::one(), mag))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Smallest integer `≥ self`.
    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Least `t ≥ 0` with `2^t ≥ self`; zero for `self ≤ 1`.
    pub fn ceil_log2(&self) -> u32 {
        if self.0 <= BigRational::one() {
            return 0;
        }
        // 2^t ≥ n/d  ⟺  2^t · d ≥ n
        let mut t = 0u32;
        let mut pow = BigInt::one() * self.denom();
        while &pow < self.numer() {
            pow <<= 1;
            t += 1;
        }
        t
    }

    pub fn sign(&self) -> Ordering {
        match self.0.numer().sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = RatError;

    fn from_str(s: &str) -> Result<Rat, RatError> {
        let s = s.trim();
        let malformed = || RatError::Malformed { text: s.to_string() };
        let (num_text, den_text) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let numer = BigInt::from_str(num_text.trim()).map_err(|_| malformed())?;
        let denom = match den_text {
            Some(d) => {
                let d = BigInt::from_str(d.trim()).map_err(|_| malformed())?;
                if !d.is_positive() {
                    return Err(if d.is_zero() {
                        RatError::ZeroDenominator
                    } else {
                        malformed()
                    });
                }
                d
            }
            None => BigInt::one(),
        };
        Rat::new(numer, denom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
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

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

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

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["1/3", "-7/2", "0/1", "5/1", "1000000000000000000000/7"] {
            let r: Rat = text.parse().unwrap();
            assert_eq!(r.to_string(), text);
        }
    }

    #[test]
    fn parse_accepts_bare_integers_and_reduces() {
        assert_eq!("6".parse::<Rat>().unwrap(), Rat::from_int(6));
        assert_eq!("4/6".parse::<Rat>().unwrap(), Rat::ratio(2, 3));
        assert_eq!("-4/6".parse::<Rat>().unwrap(), Rat::ratio(-2, 3));
    }

    #[test]
    fn parse_rejects_zero_or_negative_denominator() {
        assert_eq!("1/0".parse::<Rat>(), Err(RatError::ZeroDenominator));
        assert!("1/-2".parse::<Rat>().is_err());
        assert!("a/b".parse::<Rat>().is_err());
    }

    #[test]
    fn pow2_both_signs() {
        assert_eq!(Rat::pow2(0), Rat::one());
        assert_eq!(Rat::pow2(3), Rat::from_int(8));
        assert_eq!(Rat::pow2(-4), Rat::ratio(1, 16));
    }

    #[test]
    fn ceil_log2_thresholds() {
        assert_eq!(Rat::ratio(1, 2).ceil_log2(), 0);
        assert_eq!(Rat::one().ceil_log2(), 0);
        assert_eq!(Rat::from_int(2).ceil_log2(), 1);
        assert_eq!(Rat::from_int(5).ceil_log2(), 3);
        assert_eq!(Rat::ratio(9, 2).ceil_log2(), 3);
    }

    proptest! {
        #[test]
        fn display_parse_identity(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = Rat::ratio(p, q);
            let back: Rat = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn stored_reduced(p in -10_000i64..10_000, q in 1i64..10_000) {
            let r = Rat::ratio(p, q);
            let g = num_integer::gcd(r.numer().clone(), r.denom().clone());
            prop_assert!(g == BigInt::one() || r.numer().is_zero());
            prop_assert!(r.denom().is_positive());
        }

        #[test]
        fn ceil_log2_is_least(p in 1i64..100_000, q in 1i64..100_000) {
            let r = Rat::ratio(p, q);
            let t = r.ceil_log2();
            prop_assert!(Rat::pow2(t as i32) >= r);
            if t > 0 {
                prop_assert!(Rat::pow2(t as i32 - 1) < r);
            }
        }
    }
}
