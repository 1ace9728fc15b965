use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::{Field, Poly, RatFun};

/// A constant 2×2 matrix, e.g. a residue.
pub type Const2<F> = [[F; 2]; 2];

/// A(z) for a matrix form A(z)dz; entries are rational in z.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<F> {
    e: [[RatFun<F>; 2]; 2],
}

impl<F: Field> Mat2<F> {
    pub fn new(e: [[RatFun<F>; 2]; 2]) -> Self {
        Mat2 { e }
    }

    pub fn zero() -> Self {
        Mat2::scalar(RatFun::zero())
    }

    pub fn identity() -> Self {
        Mat2::scalar(RatFun::one())
    }

    /// s·I.
    pub fn scalar(s: RatFun<F>) -> Self {
        Mat2 { e: [[s.clone(), RatFun::zero()], [RatFun::zero(), s]] }
    }

    pub fn constant(m: Const2<F>) -> Self {
        let [[a, b], [c, d]] = m;
        Mat2 {
            e: [
                [RatFun::constant(a), RatFun::constant(b)],
                [RatFun::constant(c), RatFun::constant(d)],
            ],
        }
    }

    /// R/(z − a).
    pub fn simple_pole(residue: Const2<F>, at: &F) -> Self {
        Mat2::constant(residue).scale(&RatFun::simple_pole(at))
    }

    pub fn entry(&self, j: usize, k: usize) -> &RatFun<F> {
        &self.e[j][k]
    }

    pub fn entries(&self) -> &[[RatFun<F>; 2]; 2] {
        &self.e
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(|x| x.is_zero())
    }

    pub fn scale(&self, s: &RatFun<F>) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn scale_const(&self, s: &F) -> Self {
        self.scale(&RatFun::constant(s.clone()))
    }

    fn map(&self, f: impl Fn(&RatFun<F>) -> RatFun<F>) -> Self {
        Mat2 {
            e: [[f(&self.e[0][0]), f(&self.e[0][1])], [f(&self.e[1][0]), f(&self.e[1][1])]],
        }
    }

    pub fn trace(&self) -> RatFun<F> {
        self.e[0][0].clone() + self.e[1][1].clone()
    }

    pub fn det(&self) -> RatFun<F> {
        self.e[0][0].clone() * self.e[1][1].clone() - self.e[0][1].clone() * self.e[1][0].clone()
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.det().inv().ok_or(Error::Singular("matrix not invertible"))?;
        let [[a, b], [c, d]] = self.e.clone();
        Ok(Mat2 { e: [[d, -b], [-c, a]] }.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        self.map(|x| x.derivative())
    }

    /// P⁻¹AP + λP⁻¹P′: the matrix of the same λ-connection in the frame ê·P.
    pub fn gauge(&self, p: &Mat2<F>, lambda: &F) -> Result<Self> {
        let pinv = p.inverse()?;
        Ok(pinv.clone() * self.clone() * p.clone() + (pinv * p.derivative()).scale_const(lambda))
    }

    /// Entrywise residue of A(z)dz at a finite point; higher-order poles are errors.
    pub fn residue_at(&self, t: &F) -> Result<Const2<F>> {
        let r = |j: usize, k: usize| self.e[j][k].residue_at(t);
        Ok([[r(0, 0)?, r(0, 1)?], [r(1, 0)?, r(1, 1)?]])
    }

    /// Residue at ∞ of λd + A(z)dz in the local frame εⱼ = z^{eⱼ}êⱼ of O(e₁) ⊕ O(e₂).
    ///
    /// With w = 1/z the (j,k) entry becomes −Σ αₘ w^{m+eⱼ−eₖ−2} dw, so the form is
    /// logarithmic iff αₘ = 0 for m < 1 − eⱼ + eₖ, and the residue is
    /// −α_{1−eⱼ+eₖ} − λeⱼδⱼₖ.
    pub fn residue_at_infinity(&self, splitting: (i64, i64), lambda: &F) -> Result<Const2<F>> {
        let e = [splitting.0, splitting.1];
        let mut out: Const2<F> = [[F::zero(), F::zero()], [F::zero(), F::zero()]];
        for j in 0..2 {
            for k in 0..2 {
                let m = 1 - e[j] + e[k];
                let f = &self.e[j][k];
                if !f.is_zero() && f.valuation_at_infinity()? < m {
                    return Err(Error::HigherOrderPole);
                }
                let mut r = -f.coeff_at_infinity(m);
                if j == k {
                    r = r - lambda.clone() * F::from_i64(e[j]);
                }
                out[j][k] = r;
            }
        }
        Ok(out)
    }

    /// True when every entry has at most simple poles, all located in `poles`.
    pub fn poles_within(&self, poles: &[F]) -> bool {
        let divisor = poles
            .iter()
            .fold(Poly::one(), |acc, t| acc * Poly::linear(-t.clone(), F::one()));
        self.e.iter().flatten().all(|x| divisor.div_rem(x.den()).map(|(_, r)| r.is_zero()).unwrap_or(false))
    }
}

impl<F: Field> Add for Mat2<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let [[a, b], [c, d]] = self.e;
        let [[p, q], [r, s]] = o.e;
        Mat2 { e: [[a + p, b + q], [c + r, d + s]] }
    }
}

impl<F: Field> Sub for Mat2<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Neg for Mat2<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl<F: Field> Mul for Mat2<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = &self.e;
        let b = &o.e;
        let cell = |j: usize, k: usize| a[j][0].clone() * b[0][k].clone() + a[j][1].clone() * b[1][k].clone();
        Mat2 { e: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]] }
    }
}

/// M·v for a constant matrix.
pub fn apply<F: Field>(m: &Const2<F>, v: &[F; 2]) -> [F; 2] {
    let row = |j: usize| m[j][0].clone() * v[0].clone() + m[j][1].clone() * v[1].clone();
    [row(0), row(1)]
}
