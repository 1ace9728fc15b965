use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Field;
use crate::error::Error;

/// Arbitrary-precision rational in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Q(BigRational);

impl Q {
    pub fn new(num: i64, den: i64) -> Q {
        assert!(den != 0, "zero denominator");
        Q(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Q {
        assert!(!den.is_zero(), "zero denominator");
        Q(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Q {
        Q(self.0.abs())
    }

    /// Exact quotient; `None` for a zero divisor.
    pub fn div(&self, other: &Q) -> Option<Q> {
        if other.0.is_zero() {
            None
        } else {
            Some(Q(&self.0 / &other.0))
        }
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Q {
    fn from(n: i64) -> Q {
        Q(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Q {
    fn from(n: BigInt) -> Q {
        Q(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Q {
    fn from(r: BigRational) -> Q {
        Q(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Q {
            type Output = Q;
            fn $m(self, rhs: Q) -> Q {
                Q(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Q> for &'a Q {
            type Output = Q;
            fn $m(self, rhs: &'a Q) -> Q {
                Q((&self.0).$m(&rhs.0))
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Q {
    type Output = Q;
    fn neg(self) -> Q {
        Q(-self.0)
    }
}

impl Field for Q {
    fn zero() -> Q {
        Q(BigRational::zero())
    }
    fn one() -> Q {
        Q(BigRational::one())
    }
    fn from_q(q: &Q) -> Q {
        q.clone()
    }
    fn from_i64(n: i64) -> Q {
        Q::from(n)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn inv(&self) -> Option<Q> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }

    /// Cleared denominators, integer content one, first nonzero entry positive.
    fn normalize_projective(v: &mut [Q]) {
        let Some(first) = v.iter().find(|x| !x.is_zero()) else {
            return;
        };
        let negative = first.is_negative();
        let lcm = v
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (slot, n) in v.iter_mut().zip(ints) {
            let mut q = n / &content;
            if negative {
                q = -q;
            }
            *slot = Q::from(q);
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Q {
    type Err = Error;

    /// Accepts `p`, `p/q` with optional signs and surrounding whitespace.
    fn from_str(s: &str) -> Result<Q, Error> {
        let bad = || Error::InvalidInput(String::from("malformed rational: ") + s);
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(n).map_err(|_| bad())?;
        let d = BigInt::from_str(d).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q(BigRational::new(n, d)))
    }
}

impl Q {
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn cmp_zero(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }
}

/// Shorthand constructor used throughout tests and examples.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(num, den)
}
