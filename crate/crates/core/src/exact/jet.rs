use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Field, Q};
use crate::error::{Error, Result};

/// First-order jet: a value and its partial derivatives in k coordinates.
///
/// Constants carry an empty gradient that behaves as the zero vector of any length.
#[derive(Clone, Debug)]
pub struct Jet<F> {
    value: F,
    grad: Vec<F>,
}

impl<F: Field> Jet<F> {
    pub fn constant(value: F) -> Self {
        Jet { value, grad: Vec::new() }
    }

    /// Coordinate `index` out of `k`, evaluated at `value`.
    pub fn variable(value: F, index: usize, k: usize) -> Self {
        let mut grad: Vec<F> = (0..k).map(|_| F::zero()).collect();
        grad[index] = F::one();
        Jet { value, grad }
    }

    /// Independent coordinates at a point.
    pub fn variables(point: &[F]) -> Vec<Self> {
        point
            .iter()
            .enumerate()
            .map(|(i, x)| Jet::variable(x.clone(), i, point.len()))
            .collect()
    }

    pub fn value(&self) -> &F {
        &self.value
    }

    pub fn partial(&self, i: usize) -> F {
        self.grad.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Gradient padded to `k` entries.
    pub fn gradient(&self, k: usize) -> Vec<F> {
        (0..k).map(|i| self.partial(i)).collect()
    }

    fn zip(&self, other: &Self, f: impl Fn(F, F) -> F) -> Vec<F> {
        let n = self.grad.len().max(other.grad.len());
        (0..n).map(|i| f(self.partial(i), other.partial(i))).collect()
    }
}

impl<F: Field> PartialEq for Jet<F> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.zip(other, |a, b| a - b).iter().all(|d| d.is_zero())
    }
}

impl<F: Field> Add for Jet<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let grad = self.zip(&rhs, |a, b| a + b);
        Jet { value: self.value + rhs.value, grad }
    }
}

impl<F: Field> Sub for Jet<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let grad = self.zip(&rhs, |a, b| a - b);
        Jet { value: self.value - rhs.value, grad }
    }
}

impl<F: Field> Neg for Jet<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet { value: -self.value, grad: self.grad.into_iter().map(|g| -g).collect() }
    }
}

impl<F: Field> Mul for Jet<F> {
    type Output = Self;
    // Leibniz rule: d(ab) = da·b + a·db.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (self.value.clone(), rhs.value.clone());
        let grad = self.zip(&rhs, |da, db| da * b.clone() + a.clone() * db);
        Jet { value: self.value * rhs.value, grad }
    }
}

impl<F: Field> Field for Jet<F> {
    fn zero() -> Self {
        Jet::constant(F::zero())
    }
    fn one() -> Self {
        Jet::constant(F::one())
    }
    fn from_q(q: &Q) -> Self {
        Jet::constant(F::from_q(q))
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.grad.iter().all(|g| g.is_zero())
    }
    /// Quotient rule: d(1/f) = −df/f².
    fn inv(&self) -> Option<Self> {
        let iv = self.value.inv()?;
        let s = -(iv.clone() * iv.clone());
        Some(Jet {
            value: iv,
            grad: self.grad.iter().map(|g| g.clone() * s.clone()).collect(),
        })
    }
    fn is_unit(&self) -> bool {
        self.value.is_unit()
    }
}

/// Evaluate a rational expression at `point` with all first partials.
pub fn jet_eval<F: Field>(
    point: &[F],
    expr: impl Fn(&[Jet<F>]) -> Result<Jet<F>>,
) -> Result<Jet<F>> {
    expr(&Jet::variables(point))
}

/// Coefficients ω_{ab} of Σₖ dFₖ∧dGₖ on k coordinates.
pub fn wedge_sum<F: Field>(fs: &[Jet<F>], gs: &[Jet<F>], k: usize) -> Vec<Vec<F>> {
    assert_eq!(fs.len(), gs.len());
    (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    fs.iter().zip(gs).fold(F::zero(), |acc, (f, g)| {
                        acc + f.partial(a) * g.partial(b) - f.partial(b) * g.partial(a)
                    })
                })
                .collect()
        })
        .collect()
}

/// Jet quotient with a typed error at a vanishing denominator.
pub fn jdiv<F: Field>(a: Jet<F>, b: Jet<F>) -> Result<Jet<F>> {
    a.checked_div(&b).ok_or(Error::DivisionByZero)
}
