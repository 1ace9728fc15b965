use alloc::format;
use alloc::vec::Vec;

use crate::chart::{Mat2, ParConnection};
use crate::error::{Error, Result};
use crate::exact::{Field, Poly, ProjPoint, RatFun, Q};
use crate::parabolic::{plan_elm, ElmSign, Gauge, ParabolicBundle, PointConfig, SpectralData, Weights};

/// Elm⁻: (ν⁺, ν⁻) ↦ (ν⁻ + 1, ν⁺), d ↦ d − 1. Elm⁺: (ν⁺, ν⁻) ↦ (ν⁻, ν⁺ − 1), d ↦ d + 1.
pub fn elm_spectral<F: Field>(sd: &SpectralData<F>, i: usize, sign: ElmSign) -> Result<SpectralData<F>> {
    if i >= sd.len() {
        return Err(Error::InvalidInput(format!("pole index {} out of range", i + 1)));
    }
    let (p, m) = sd.pair(i);
    match sign {
        ElmSign::Minus => sd.with_pair(i, m + F::one(), p, sd.degree() - 1),
        ElmSign::Plus => sd.with_pair(i, m, p - F::one(), sd.degree() + 1),
    }
}

/// wᵢ ↦ 1 − wᵢ for either sign.
pub fn elm_weights(w: &Weights, i: usize) -> Result<Weights> {
    if i >= w.len() {
        return Err(Error::InvalidInput(format!("pole index {} out of range", i + 1)));
    }
    Ok(w.flip(i))
}

pub fn elm_minus(b: &ParabolicBundle, config: &PointConfig, i: usize) -> Result<ParabolicBundle> {
    b.elm(config, i, ElmSign::Minus)
}

pub fn elm_plus(b: &ParabolicBundle, config: &PointConfig, i: usize) -> Result<ParabolicBundle> {
    b.elm(config, i, ElmSign::Plus)
}

fn gauge_matrix<F: Field>(g: &Gauge<F>) -> Mat2<F> {
    let one = RatFun::one;
    let zero = RatFun::zero;
    match g {
        Gauge::Shear { x, power } => {
            let b = RatFun::from_poly(Poly::z().pow(*power).scale(x));
            Mat2::new([[one(), b], [zero(), one()]])
        }
        Gauge::Diag { slot, t, exp } => {
            let lin = RatFun::from_poly(Poly::linear(-t.clone(), F::one()));
            let f = if *exp > 0 { lin } else { lin.inv().expect("nonzero") };
            if *slot == 0 {
                Mat2::new([[f, zero()], [zero(), one()]])
            } else {
                Mat2::new([[one(), zero()], [zero(), f]])
            }
        }
        Gauge::Swap => Mat2::new([[zero(), one()], [one(), zero()]]),
    }
}

/// Elm± of a λ-connection at pole i: the frame changes of the bundle Elm are
/// applied to A by A ↦ P⁻¹AP + λP⁻¹P′, and the exponents swap and shift.
pub fn elm_connection<F: Field>(conn: &ParConnection<F>, i: usize, sign: ElmSign) -> Result<ParConnection<F>> {
    let plan = plan_elm(conn.poles(), conn.splitting(), conn.directions(), i, sign)?;
    let mut a = conn.matrix().clone();
    for g in &plan.gauges {
        a = a.gauge(&gauge_matrix(g), conn.lambda())?;
    }
    let mut exponents = conn.exponents().to_vec();
    let (p, m) = exponents[i].clone();
    exponents[i] = match sign {
        ElmSign::Minus => (m + F::one(), p),
        ElmSign::Plus => (m, p - F::one()),
    };
    ParConnection::new(conn.poles().to_vec(), plan.splitting, conn.lambda().clone(), a, plan.dirs, exponents)
}

/// Image of the degree-0 chart under Elm⁻ at ∞.
#[derive(Clone, Debug, PartialEq)]
pub struct ElmChartImage {
    /// Finite coordinates of the n parabolics (xᵢ : 1) on O ⊕ O(−1): (u, 0, 1, 0).
    pub v: Vec<Q>,
    /// The bundle's point (u₁ : … : u_{n−3} : 1).
    pub point: ProjPoint<Q>,
}

/// (u₁, …, u_{n−3}, 0, 1, ∞) ↦ (u₁, …, u_{n−3}, 0, 1, 0), computed by the bundle
/// Elm so that ê₁ stays the cyclic vector.
pub fn elm_chart_map_n(config: &PointConfig, u: &[Q]) -> Result<ElmChartImage> {
    let n = config.len();
    if u.len() + 3 != n {
        return Err(Error::InvalidInput(format!("{} poles need {} coordinates", n, n - 3)));
    }
    let b = ParabolicBundle::trivial_chart(u);
    let e = b.elm(config, n - 1, ElmSign::Minus)?;
    if e.splitting() != (0, -1) {
        return Err(Error::OutOfChart("Elm at ∞ did not land on O ⊕ O(−1)".into()));
    }
    let v = e
        .directions()
        .iter()
        .map(|d| {
            let [x0, x1] = [d.coords()[0].clone(), d.coords()[1].clone()];
            x0.checked_div(&x1).ok_or(Error::OutOfChart("parabolic on the O factor".into()))
        })
        .collect::<Result<Vec<Q>>>()?;
    let mut coords = u.to_vec();
    coords.push(Q::one());
    let point = ProjPoint::new(coords).expect("last coordinate is 1");
    Ok(ElmChartImage { v, point })
}
