use alloc::vec;
use alloc::vec::Vec;

use crate::chart::{ConnectionChart, Frame};
use crate::error::{Error, Result};
use crate::exact::{Field, ProjPoint, Q, QT};
use crate::lagrangian::{app, bun};
use crate::parabolic::SpectralData;

/// Exact limits of the degeneration in which the first parabolic moves onto the
/// degree-0 factor (u₁ = 1/s, c₁ = −sκ + s²c₁, s → 0), next to the closed forms
/// they are compared with. Points of P²_a and P²_b are stored as (x₀ : x₁ : x₂).
#[derive(Clone, Debug, PartialEq)]
pub struct DegenerationLimit {
    /// Second apparent point predicted in closed form.
    pub q: Q,
    pub a_limit: ProjPoint<Q>,
    /// Coefficients of (z − t₁)(z − q).
    pub a_expected: ProjPoint<Q>,
    pub b_limit: ProjPoint<Q>,
    /// (b₂ : b₁ : b₀) = (t₁² : t₁ : 0), read literally.
    pub b_expected_literal: ProjPoint<Q>,
    /// D at the first pole, (b₂ : b₁ : b₀) = (t₁² : t₁ : 1).
    pub d_first_pole: ProjPoint<Q>,
    /// Value at t₁ of the limiting apparent polynomial.
    pub apparent_at_t1: Q,
    /// Limit of the blow-up coordinates (u : v : w).
    pub uvw_limit: ProjPoint<Q>,
    pub uvw_expected: ProjPoint<Q>,
    /// (ρ + κ)u + κt₁(t₁ + q)v − κt₁q·w at the limit.
    pub second_blowup_residual: Q,
}

impl DegenerationLimit {
    pub fn a_matches(&self) -> bool {
        self.a_limit == self.a_expected
    }

    pub fn b_matches_literal(&self) -> bool {
        self.b_limit == self.b_expected_literal
    }

    pub fn b_on_first_special_line(&self) -> bool {
        self.b_limit == self.d_first_pole
    }

    pub fn uvw_matches(&self) -> bool {
        self.uvw_limit == self.uvw_expected
    }
}

fn point(v: Vec<Q>) -> Result<ProjPoint<Q>> {
    ProjPoint::new(v).ok_or(Error::ZeroPolynomial)
}

fn div(a: Q, b: &Q) -> Result<Q> {
    a.checked_div(b).ok_or(Error::DivisionByZero)
}

/// The deformed chart over ℚ(s): u₁ = 1/s and c₁ = −sκ + s²c₁ in the degree-0
/// frame, read on O ⊕ O(−1) after Elm⁻ at ∞ (same matrix).
pub fn deformation_chart(t: &[Q; 2], sd: &SpectralData<Q>, c: &[Q; 2], u2: &Q) -> Result<ConnectionChart<QT>> {
    if sd.len() != 5 {
        return Err(Error::InvalidInput("five exponent pairs expected".into()));
    }
    let s = QT::var();
    let lift = |x: &Q| QT::from_q(x);
    let u1 = QT::one().checked_div(&s).expect("s is a unit");
    let c1 = -(s.clone() * lift(&sd.kappa(0))) + s.clone() * s * lift(&c[0]);
    Ok(ConnectionChart::new(
        vec![lift(&t[0]), lift(&t[1])],
        sd.lift(),
        vec![u1, lift(u2)],
        QT::one(),
        vec![c1, lift(&c[1])],
        Frame::Degree0,
    )?
    .with_frame(Frame::DegreeMinus1))
}

/// `sd` carries the five exponent pairs with degree −1 labels, ordered as the
/// poles (t₁, t₂, 0, 1, ∞).
pub fn degeneration_limit(
    t: &[Q; 2],
    sd: &SpectralData<Q>,
    c: &[Q; 2],
    u2: &Q,
) -> Result<DegenerationLimit> {
    let [t1, t2] = t.clone();
    let rho = sd.rho();
    let kappa = sd.kappa(0);
    let chart = deformation_chart(t, sd, c, u2)?;
    let lift = |x: &Q| QT::from_q(x);
    let tq = chart.t().to_vec();
    let uq = chart.u().to_vec();
    let a = app(&chart)?;
    let b = bun(&tq, &uq)?;
    let a_limit = a.limit_at(&Q::zero())?;
    let b_limit = b.limit_at(&Q::zero())?;

    let (ac, bc) = (a.coords(), b.coords());
    let t1q = lift(&t1);
    let u = bc[2].clone() * (t1q.clone() * t1q.clone() * ac[2].clone() + t1q.clone() * ac[1].clone() + ac[0].clone());
    let v = ac[2].clone() * (bc[2].clone() - t1q.clone() * bc[1].clone());
    let w = ac[2].clone() * (bc[2].clone() - t1q.clone() * t1q.clone() * bc[0].clone());
    let uvw_limit = ProjPoint::new(vec![u, v, w]).ok_or(Error::ZeroPolynomial)?.limit_at(&Q::zero())?;

    let den = c[1].clone() * (u2.clone() - t2.clone()) - rho.clone() - kappa.clone();
    let q = div(
        t2.clone() * (c[1].clone() * (u2.clone() - Q::one()) - rho.clone() - kappa.clone()),
        &den,
    )?;
    let a_expected = point(vec![t1.clone() * q.clone(), -(t1.clone() + q.clone()), Q::one()])?;
    let b_expected_literal = point(vec![Q::zero(), t1.clone(), t1.clone() * t1.clone()])?;
    let d_first_pole = point(vec![Q::one(), t1.clone(), t1.clone() * t1.clone()])?;
    let la = a_limit.coords();
    let apparent_at_t1 = la[0].clone() + la[1].clone() * t1.clone() + la[2].clone() * t1.clone() * t1.clone();
    let uvw_expected = point(vec![
        div(kappa.clone() * t1.clone() * t1.clone() * t2.clone() * (t2.clone() - Q::one()), &den)?,
        t2.clone() * (u2.clone() - Q::one()),
        (t1.clone() + t2.clone()) * u2.clone() - (t1.clone() + Q::one()) * t2.clone(),
    ])?;
    let l = uvw_limit.coords();
    let second_blowup_residual = (rho + kappa.clone()) * l[0].clone()
        + kappa.clone() * t1.clone() * (t1.clone() + q.clone()) * l[1].clone()
        - kappa * t1 * q.clone() * l[2].clone();
    Ok(DegenerationLimit {
        q,
        a_limit,
        a_expected,
        b_limit,
        b_expected_literal,
        d_first_pole,
        apparent_at_t1,
        uvw_limit,
        uvw_expected,
        second_blowup_residual,
    })
}
