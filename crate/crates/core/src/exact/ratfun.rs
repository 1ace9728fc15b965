use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Field, Poly, Q};
use crate::error::{Error, Result};

/// Reduced fraction num/den with monic denominator.
///
/// As a [`Field`] this is ℚ(t) when `F = Q`; as an entry of a connection matrix the
/// variable plays the role of z.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFun { num, den: Poly::one() });
        }
        let g = Poly::gcd(&num, &den);
        let mut num = num.exact_div(&g)?;
        let mut den = den.exact_div(&g)?;
        let inv = den.lead().and_then(|l| l.inv()).ok_or(Error::DivisionByZero)?;
        num = num.scale(&inv);
        den = den.scale(&inv);
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(a: F) -> Self {
        RatFun::from_poly(Poly::constant(a))
    }

    /// The variable itself.
    pub fn var() -> Self {
        RatFun::from_poly(Poly::z())
    }

    /// 1/(z − a).
    pub fn simple_pole(a: &F) -> Self {
        RatFun { num: Poly::one(), den: Poly::linear(-a.clone(), F::one()) }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// Value at `x`; a zero denominator is a genuine pole since the fraction is reduced.
    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        let inv = d.inv().ok_or(Error::Pole)?;
        Ok(self.num.eval(x) * inv)
    }

    /// Exact limit as the variable tends to `x` (cancellation already done).
    pub fn limit_at(&self, x: &F) -> Result<F> {
        self.eval(x)
    }

    /// ((z−t)·f)|_{z=t}; errors on poles of order ≥ 2.
    pub fn residue_at(&self, t: &F) -> Result<F> {
        let m = self.den.root_multiplicity(t)?;
        match m {
            0 => Ok(F::zero()),
            1 => {
                let rest = self.den.exact_div(&Poly::linear(-t.clone(), F::one()))?;
                let inv = rest.eval(t).inv().ok_or(Error::HigherOrderPole)?;
                Ok(self.num.eval(t) * inv)
            }
            _ => Err(Error::HigherOrderPole),
        }
    }

    /// Order of vanishing at `t` (negative for poles).
    pub fn valuation_at(&self, t: &F) -> Result<i64> {
        if self.num.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.num.root_multiplicity(t)? as i64 - self.den.root_multiplicity(t)? as i64)
    }

    /// Order of vanishing at ∞: deg den − deg num.
    pub fn valuation_at_infinity(&self) -> Result<i64> {
        if self.num.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.den.degree_i64() - self.num.degree_i64())
    }

    /// Coefficients αₘ of the expansion f = Σ αₘ z^{−m} at ∞ for m in `lo..=hi`.
    pub fn laurent_at_infinity(&self, lo: i64, hi: i64) -> Vec<F> {
        if self.num.is_zero() {
            return (lo..=hi).map(|_| F::zero()).collect();
        }
        // f(1/w) = w^{b−a}·Ñ(w)/D̃(w) with Ñ, D̃ the reversed polynomials.
        let a = self.num.degree_i64();
        let b = self.den.degree_i64();
        let shift = b - a;
        let nrev: Vec<F> = self.num.coeffs().iter().rev().cloned().collect();
        let drev: Vec<F> = self.den.coeffs().iter().rev().cloned().collect();
        let d0inv = drev[0].inv().expect("monic denominator");
        let len = (hi - shift + 1).max(0) as usize;
        let mut s: Vec<F> = Vec::with_capacity(len);
        for j in 0..len {
            let mut acc = nrev.get(j).cloned().unwrap_or_else(F::zero);
            for k in 1..=j.min(drev.len() - 1) {
                acc = acc - drev[k].clone() * s[j - k].clone();
            }
            s.push(acc * d0inv.clone());
        }
        (lo..=hi)
            .map(|m| {
                let j = m - shift;
                if j < 0 {
                    F::zero()
                } else {
                    s[j as usize].clone()
                }
            })
            .collect()
    }

    /// Coefficient of z^{−m} at ∞.
    pub fn coeff_at_infinity(&self, m: i64) -> F {
        self.laurent_at_infinity(m, m).pop().expect("one entry")
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative() * self.den.clone() - self.num.clone() * self.den.derivative();
        RatFun::new(n, self.den.clone() * self.den.clone()).expect("nonzero denominator")
    }
}

impl RatFun<Q> {
    /// Value of (z−t)^{−v}·f at t where v is the valuation: the leading Taylor
    /// coefficient used for projective limits.
    pub fn leading_coefficient_at(&self, t: &Q) -> Result<(i64, Q)> {
        let v = self.valuation_at(t)?;
        let lin = Poly::linear(-t.clone(), Q::from(1));
        let (n, d) = if v >= 0 {
            (self.num.exact_div(&lin.pow(v as u32))?, self.den.clone())
        } else {
            (self.num.clone(), self.den.exact_div(&lin.pow((-v) as u32))?)
        };
        let val = n.eval(t).div(&d.eval(t)).ok_or(Error::Pole)?;
        Ok((v, val))
    }
}

impl<F: Field> Add for RatFun<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return RatFun::new(self.num + rhs.num, self.den).expect("nonzero");
        }
        RatFun::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
        .expect("nonzero")
    }
}

impl<F: Field> Sub for RatFun<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Neg for RatFun<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFun { num: -self.num, den: self.den }
    }
}

impl<F: Field> Mul for RatFun<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(self.num * rhs.num, self.den * rhs.den).expect("nonzero")
    }
}

impl<F: Field> Field for RatFun<F> {
    fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFun::constant(F::one())
    }
    fn from_q(q: &Q) -> Self {
        RatFun::constant(F::from_q(q))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            RatFun::new(self.den.clone(), self.num.clone()).ok()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, QT};
    use alloc::vec;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> Poly<Q> {
        Poly::new(c.iter().map(|&x| Q::from(x)).collect())
    }

    #[test]
    fn residues() {
        let inv_z = RatFun::new(qp(&[1]), qp(&[0, 1])).unwrap();
        assert_eq!(inv_z.residue_at(&Q::zero()).unwrap(), Q::from(1));
        let f = RatFun::new(qp(&[1]), qp(&[0, -1, 1])).unwrap();
        assert_eq!(f.residue_at(&Q::zero()).unwrap(), Q::from(-1));
        assert_eq!(RatFun::from_poly(qp(&[0, 1])).residue_at(&Q::zero()).unwrap(), Q::zero());
        let double = RatFun::new(qp(&[1]), qp(&[0, 0, 1])).unwrap();
        assert_eq!(double.residue_at(&Q::zero()), Err(Error::HigherOrderPole));
    }

    #[test]
    fn limits_after_cancellation() {
        let f = RatFun::new(qp(&[0, -1, 1]), qp(&[0, 1])).unwrap();
        assert_eq!(f.limit_at(&Q::zero()).unwrap(), Q::from(-1));
        let g = RatFun::new(qp(&[0, 0, 1]), qp(&[0, 1])).unwrap();
        assert_eq!(g.limit_at(&Q::zero()).unwrap(), Q::zero());
        let h = RatFun::new(qp(&[1, -1]) * qp(&[3, 2]), qp(&[1, -1])).unwrap();
        assert_eq!(h.limit_at(&Q::from(1)).unwrap(), Q::from(5));
        let pole = RatFun::new(qp(&[1]), qp(&[-1, 1])).unwrap();
        assert_eq!(pole.limit_at(&Q::from(1)), Err(Error::Pole));
    }

    #[test]
    fn laurent_expansion_at_infinity() {
        // z/(z − 2) = 1 + 2/z + 4/z² + …
        let f = RatFun::new(qp(&[0, 1]), qp(&[-2, 1])).unwrap();
        assert_eq!(f.laurent_at_infinity(-1, 2), vec![Q::zero(), Q::from(1), Q::from(2), Q::from(4)]);
        // z² + 1/z
        let g = RatFun::new(qp(&[1, 0, 0, 1]), qp(&[0, 1])).unwrap();
        assert_eq!(g.coeff_at_infinity(-2), Q::from(1));
        assert_eq!(g.coeff_at_infinity(1), Q::from(1));
    }

    #[test]
    fn qt_is_a_field() {
        let t = QT::var();
        let x = (t.clone() * t.clone() - QT::one()).checked_div(&(t.clone() - QT::one())).unwrap();
        assert_eq!(x, t + QT::one());
    }

    proptest! {
        #[test]
        fn residue_theorem(poles in prop::collection::btree_set(-6i64..7, 1..5), nums in prop::collection::vec(-5i64..6, 5)) {
            // f = N/Π(z−pᵢ) with deg N ≤ #poles − 1 has only simple poles, and the
            // residue at ∞ is minus the coefficient of 1/z.
            let poles: Vec<Q> = poles.into_iter().map(Q::from).collect();
            let den = Poly::from_roots(&poles);
            let num = Poly::new(nums[..poles.len()].iter().map(|&x| Q::from(x)).collect());
            let f = RatFun::new(num, den).unwrap();
            let finite = poles.iter().fold(Q::zero(), |acc, p| acc + f.residue_at(p).unwrap());
            let at_inf = -f.coeff_at_infinity(1);
            prop_assert!((finite + at_inf).is_zero());
        }

        #[test]
        fn valuations(a in -4i64..5, m in 0u32..3, k in 0u32..3) {
            let t = q(a, 1);
            let lin = Poly::linear(-t.clone(), Q::one());
            let f = RatFun::new(lin.pow(m) * qp(&[7, 1]), lin.pow(k) * qp(&[11, 1])).unwrap();
            prop_assume!(a != -7 && a != -11);
            prop_assert_eq!(f.valuation_at(&t).unwrap(), m as i64 - k as i64);
        }
    }
}
