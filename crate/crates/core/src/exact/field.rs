use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use super::Q;

/// An exact field (or a ring whose units are detected by [`Field::is_unit`]).
///
/// Every algorithm of the crate is written against this trait, so the same code
/// runs over ℚ, over ℚ(t) and over first-order jets.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_q(q: &Q) -> Self;
    fn is_zero(&self) -> bool;
    /// `None` exactly when `self` is not a unit.
    fn inv(&self) -> Option<Self>;

    /// Pivot test. Equal to `!is_zero()` in a genuine field.
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn from_i64(n: i64) -> Self {
        Self::from_q(&Q::from(n))
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc * self.clone();
        }
        acc
    }

    /// Rescale a vector with at least one unit entry to the canonical projective
    /// representative. Default: first unit entry becomes one.
    fn normalize_projective(v: &mut [Self]) {
        if let Some(p) = v.iter().position(|x| x.is_unit()) {
            let inv = v[p].inv().expect("unit");
            for x in v.iter_mut() {
                *x = x.clone() * inv.clone();
            }
        }
    }
}

/// Σ xᵢyᵢ.
pub fn dot<F: Field>(x: &[F], y: &[F]) -> F {
    x.iter()
        .zip(y)
        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}
