use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::catalog::{proj3, Catalog};
use crate::error::{Error, Result};
use crate::exact::{jdiv, Field, Jet, Matrix, ProjPoint, Q, QT};

/// Curves of the incidence variety Σ ⊂ P²_a × P²_b over the special curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SigmaCurve {
    /// {(a, b): a a double root, b its dual point}: C × C* ∩ Σ.
    Gamma,
    /// Δᵢ × {Dᵢ}.
    GammaI(usize),
    /// {Pᵢⱼ} × Πᵢⱼ, i < j.
    GammaIJ(usize, usize),
}

impl SigmaCurve {
    pub fn all() -> Vec<SigmaCurve> {
        let mut v = vec![SigmaCurve::Gamma];
        v.extend((0..5).map(SigmaCurve::GammaI));
        for i in 0..5 {
            for j in i + 1..5 {
                v.push(SigmaCurve::GammaIJ(i, j));
            }
        }
        v
    }
}

impl fmt::Display for SigmaCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaCurve::Gamma => write!(f, "Gamma"),
            SigmaCurve::GammaI(i) => write!(f, "Gamma_{}", i + 1),
            SigmaCurve::GammaIJ(i, j) => write!(f, "Gamma_{}{}", i + 1, j + 1),
        }
    }
}

/// A point of P²_a × P²_b.
pub type SigmaPoint = (ProjPoint<Q>, ProjPoint<Q>);

/// The Γ-curves for one pole configuration. Every curve is parameterized by a
/// point (τ : σ) of the projective line, homogeneously of degree ≤ 2.
#[derive(Clone, Debug)]
pub struct SigmaLift {
    catalog: Catalog,
}

pub fn sigma_lift(catalog: &Catalog) -> SigmaLift {
    SigmaLift { catalog: catalog.clone() }
}

fn lift<F: Field>(v: &[Q; 2]) -> [F; 2] {
    [F::from_q(&v[0]), F::from_q(&v[1])]
}

fn dot<F: Field>(a: &[F; 3], b: &[F; 3]) -> F {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

fn arr(p: &ProjPoint<Q>) -> [Q; 3] {
    let c = p.coords();
    [c[0].clone(), c[1].clone(), c[2].clone()]
}

impl SigmaLift {
    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    /// C(tᵢ): coefficients of (yᵢz − xᵢ)², the double root at the pole.
    pub fn c_point(&self, i: usize) -> ProjPoint<Q> {
        let [x, y] = self.catalog.pole(i).clone();
        proj3([x.clone() * x.clone(), -(Q::from(2) * x.clone() * y.clone()), y.clone() * y])
    }

    /// Pᵢⱼ = Δᵢ ∩ Δⱼ: coefficients of (yᵢz − xᵢ)(yⱼz − xⱼ).
    pub fn p_point(&self, i: usize, j: usize) -> ProjPoint<Q> {
        proj3(self.catalog.line_coefficients(i, j))
    }

    /// Point of the curve at parameter (τ : σ), as (a₀, a₁, a₂), (b₀, b₁, b₂).
    pub fn point_at<F: Field>(&self, curve: SigmaCurve, tau: &F, sigma: &F) -> ([F; 3], [F; 3]) {
        let (t, s) = (tau.clone(), sigma.clone());
        match curve {
            SigmaCurve::Gamma => (
                [t.clone() * t.clone(), -(F::from_i64(2) * t.clone() * s.clone()), s.clone() * s.clone()],
                [s.clone() * s.clone(), s * t.clone(), t.clone() * t],
            ),
            SigmaCurve::GammaI(i) => {
                let [x, y] = lift::<F>(self.catalog.pole(i));
                (
                    [x.clone() * t.clone(), -(x.clone() * s.clone() + y.clone() * t), y.clone() * s],
                    [y.clone() * y.clone(), x.clone() * y, x.clone() * x],
                )
            }
            SigmaCurve::GammaIJ(i, j) => {
                let d = |k: usize| {
                    let [x, y] = lift::<F>(self.catalog.pole(k));
                    [y.clone() * y.clone(), x.clone() * y, x.clone() * x]
                };
                let (di, dj) = (d(i), d(j));
                let l = self.catalog.line_coefficients(i, j);
                (
                    [F::from_q(&l[0]), F::from_q(&l[1]), F::from_q(&l[2])],
                    [
                        s.clone() * di[0].clone() + t.clone() * dj[0].clone(),
                        s.clone() * di[1].clone() + t.clone() * dj[1].clone(),
                        s * di[2].clone() + t * dj[2].clone(),
                    ],
                )
            }
        }
    }

    /// The incidence pairing along the curve vanishes as a rational function of
    /// the affine parameter s = τ/σ.
    pub fn lies_in_sigma(&self, curve: SigmaCurve) -> bool {
        let (a, b) = self.point_at::<QT>(curve, &QT::var(), &QT::one());
        dot(&a, &b).is_zero()
    }

    /// Membership by the defining equations.
    pub fn contains(&self, curve: SigmaCurve, point: &SigmaPoint) -> bool {
        let (a, b) = (arr(&point.0), arr(&point.1));
        if !dot(&a, &b).is_zero() {
            return false;
        }
        match curve {
            SigmaCurve::Gamma => {
                a[1].clone() * a[1].clone() == Q::from(4) * a[0].clone() * a[2].clone()
                    && b[1].clone() * b[1].clone() == b[0].clone() * b[2].clone()
            }
            SigmaCurve::GammaI(i) => point.1 == self.catalog.d_point(i),
            SigmaCurve::GammaIJ(i, j) => point.0 == self.p_point(i, j),
        }
    }

    /// Parameter (τ : σ) of a point on the curve.
    pub fn parameter_of(&self, curve: SigmaCurve, point: &SigmaPoint) -> Result<ProjPoint<Q>> {
        if !self.contains(curve, point) {
            return Err(Error::InvalidInput(format!("point is not on {curve}")));
        }
        let b = arr(&point.1);
        let param = match curve {
            SigmaCurve::Gamma => {
                if b[0].is_zero() {
                    vec![b[2].clone(), b[1].clone()]
                } else {
                    vec![b[1].clone(), b[0].clone()]
                }
            }
            _ => {
                // Both remaining parameterizations are linear in (τ, σ).
                let (target, col_tau, col_sigma) = match curve {
                    SigmaCurve::GammaI(_) => {
                        let (t1, _) = self.point_at::<Q>(curve, &Q::one(), &Q::zero());
                        let (s1, _) = self.point_at::<Q>(curve, &Q::zero(), &Q::one());
                        (arr(&point.0), t1, s1)
                    }
                    _ => {
                        let (_, t1) = self.point_at::<Q>(curve, &Q::one(), &Q::zero());
                        let (_, s1) = self.point_at::<Q>(curve, &Q::zero(), &Q::one());
                        (b, t1, s1)
                    }
                };
                let m = Matrix::from_rows(
                    (0..3).map(|k| vec![col_tau[k].clone(), col_sigma[k].clone()]).collect(),
                    2,
                );
                m.solve(&target)?
            }
        };
        ProjPoint::new(param).ok_or_else(|| Error::Indeterminate("zero parameter".into()))
    }

    fn point(&self, curve: SigmaCurve, param: &[Q]) -> SigmaPoint {
        let (a, b) = self.point_at::<Q>(curve, &param[0], &param[1]);
        (proj3(a), proj3(b))
    }

    /// All common points of two distinct Γ-curves.
    pub fn intersections(&self, c1: SigmaCurve, c2: SigmaCurve) -> Result<Vec<SigmaPoint>> {
        use SigmaCurve::*;
        if c1 == c2 {
            return Err(Error::InvalidInput("a curve is not transverse to itself".into()));
        }
        let found: Vec<SigmaPoint> = match (c1, c2) {
            // Distinct constant factors never coincide.
            (GammaI(_), GammaI(_)) | (GammaIJ(..), GammaIJ(..)) => Vec::new(),
            (GammaI(i), GammaIJ(j, k)) | (GammaIJ(j, k), GammaI(i)) => {
                vec![(self.p_point(j, k), self.catalog.d_point(i))]
            }
            (Gamma, GammaI(i)) | (GammaI(i), Gamma) => {
                // The point of Γ over Dᵢ has parameter equal to the pole.
                vec![self.point(Gamma, self.catalog.pole(i))]
            }
            (Gamma, GammaIJ(i, j)) | (GammaIJ(i, j), Gamma) => {
                let p = arr(&self.p_point(i, j));
                if p[1].clone() * p[1].clone() == Q::from(4) * p[0].clone() * p[2].clone() {
                    return Err(Error::Indeterminate(format!("P{}{} is a double root", i + 1, j + 1)));
                }
                Vec::new()
            }
            (Gamma, Gamma) => unreachable!(),
        };
        Ok(found
            .into_iter()
            .filter(|p| self.contains(c1, p) && self.contains(c2, p))
            .collect())
    }

    /// Tangent vector of the curve at a point, in the affine charts of P²_a and
    /// P²_b dividing by the first nonzero coordinate of the point.
    fn tangent(&self, curve: SigmaCurve, point: &SigmaPoint) -> Result<Vec<Q>> {
        let param = self.parameter_of(curve, point)?;
        let p = param.coords();
        // Affine parameter s with (τ, σ) = (s, 1) or (1, s).
        let (tau, sigma) = if p[1].is_zero() {
            (Jet::constant(Q::one()), Jet::variable(Q::zero(), 0, 1))
        } else {
            let s = p[0].checked_div(&p[1]).expect("unit");
            (Jet::variable(s, 0, 1), Jet::constant(Q::one()))
        };
        let (a, b) = self.point_at::<Jet<Q>>(curve, &tau, &sigma);
        let mut v = Vec::with_capacity(4);
        for (x, fixed) in [(a, &point.0), (b, &point.1)] {
            let k = fixed.coords().iter().position(|c| !c.is_zero()).expect("nonzero point");
            for m in (0..3).filter(|&m| m != k) {
                v.push(jdiv(x[m].clone(), x[k].clone())?.partial(0));
            }
        }
        Ok(v)
    }

    /// Differential of the pairing at the point in the same affine charts.
    fn sigma_normal(point: &SigmaPoint) -> Vec<Q> {
        let mut affine = Vec::new();
        let mut idx = 0;
        for fixed in [&point.0, &point.1] {
            let c = fixed.coords();
            let k = c.iter().position(|x| !x.is_zero()).expect("nonzero point");
            let mut w: Vec<Jet<Q>> = Vec::with_capacity(3);
            for m in 0..3 {
                if m == k {
                    w.push(Jet::constant(Q::one()));
                } else {
                    let val = c[m].checked_div(&c[k]).expect("unit");
                    w.push(Jet::variable(val, idx, 4));
                    idx += 1;
                }
            }
            affine.push(w);
        }
        let f = affine[0]
            .iter()
            .zip(&affine[1])
            .fold(Jet::constant(Q::zero()), |s, (x, y)| s + x.clone() * y.clone());
        f.gradient(4)
    }

    /// Whether the two curves cross transversally inside Σ at the point: both
    /// tangent vectors lie in TΣ and are linearly independent.
    pub fn transversality_check(&self, c1: SigmaCurve, c2: SigmaCurve, point: &SigmaPoint) -> Result<bool> {
        if c1 == c2 {
            return Err(Error::InvalidInput("a curve is not transverse to itself".into()));
        }
        if !self.contains(c1, point) || !self.contains(c2, point) {
            return Err(Error::InvalidInput("point is not on both curves".into()));
        }
        let v1 = self.tangent(c1, point)?;
        let v2 = self.tangent(c2, point)?;
        let normal = Self::sigma_normal(point);
        let tangent_to_sigma = |v: &[Q]| v.iter().zip(&normal).fold(Q::zero(), |s, (x, y)| s + x.clone() * y.clone()).is_zero();
        if !tangent_to_sigma(&v1) || !tangent_to_sigma(&v2) {
            return Ok(false);
        }
        Ok(Matrix::from_rows(vec![v1, v2], 4).rank() == 2)
    }

    /// Incidence pattern of the Γ-curves inside Σ.
    pub fn incidence(&self) -> Result<Vec<(SigmaCurve, SigmaCurve, SigmaPoint)>> {
        let curves = SigmaCurve::all();
        let mut out = Vec::new();
        for (n, c1) in curves.iter().enumerate() {
            for c2 in &curves[n + 1..] {
                for p in self.intersections(*c1, *c2)? {
                    out.push((*c1, *c2, p));
                }
            }
        }
        Ok(out)
    }
}
