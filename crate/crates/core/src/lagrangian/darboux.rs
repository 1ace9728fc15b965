use alloc::format;
use alloc::vec::Vec;

use super::maps::{bun, bundle_polynomial, pole_polynomial};
use crate::chart::{connection_matrix, ConnectionChart};
use crate::error::{Error, Result};
use crate::exact::{dot, wedge_sum, Field, Jet, Matrix, Poly, Q};

/// p = −ρ/(q − 1) + Σ cᵢuᵢ(1/(q − 1) − 1/(q − tᵢ)) at an apparent point q (λ = 1).
pub fn darboux_p<F: Field>(t: &[F], rho: &F, u: &[F], c: &[F], q: &F) -> Result<F> {
    let mut at_one = -rho.clone();
    let mut p = F::zero();
    for i in 0..t.len() {
        let w = c[i].clone() * u[i].clone();
        if w.is_zero() {
            continue;
        }
        at_one = at_one + w.clone();
        let term = w.checked_div(&(q.clone() - t[i].clone())).ok_or(Error::Pole)?;
        p = p - term;
    }
    if !at_one.is_zero() {
        p = p + at_one.checked_div(&(q.clone() - F::one())).ok_or(Error::Pole)?;
    }
    Ok(p)
}

/// The dual variable read off the matrix: A₁₁(q) − Σ ν⁻/(q − pole) over the finite poles.
pub fn darboux_p_from_matrix(chart: &ConnectionChart<Q>, q: &Q) -> Result<Q> {
    if chart.lambda() != &Q::one() {
        return Err(Error::InvalidInput("the dual variable is defined for λ = 1".into()));
    }
    let mut p = connection_matrix(chart).entry(0, 0).eval(q)?;
    let mut poles: Vec<Q> = chart.t().to_vec();
    poles.push(Q::zero());
    poles.push(Q::one());
    for (i, pole) in poles.iter().enumerate() {
        let nu = chart.nu().minus(i).clone();
        if !nu.is_zero() {
            p = p - nu.checked_div(&(q.clone() - pole.clone())).ok_or(Error::Pole)?;
        }
    }
    Ok(p)
}

/// c with P̃(qₖ) = 0 for all k at λ = 1: Σᵢ cᵢPᵢ(qₖ) = ρΠⱼ(qₖ − tⱼ).
pub fn c_from_qu<F: Field>(t: &[F], rho: &F, q: &[F], u: &[F]) -> Result<Vec<F>> {
    let m = t.len();
    if q.len() != m || u.len() != m {
        return Err(Error::InvalidInput(format!("need {} apparent points and coordinates", m)));
    }
    let polys: Vec<Poly<F>> = (0..m).map(|i| bundle_polynomial(t, u, i)).collect();
    let rows = q.iter().map(|qk| polys.iter().map(|p| p.eval(qk)).collect()).collect();
    let rhs: Vec<F> = q.iter().map(|qk| rho.clone() * pole_polynomial(t).eval(qk)).collect();
    Matrix::from_rows(rows, m)
        .solve(&rhs)
        .map_err(|_| Error::Singular("apparent points not realizable on this bundle"))
}

/// Coefficients ω_{ab} of a 2-form on the (q, u) coordinates.
pub type FormCoefficients = Vec<Vec<Q>>;

/// 2-form coefficient arrays on the coordinates (q₁, …, q_m, u₁, …, u_m).
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticReport {
    pub dp_dq: Vec<Vec<Q>>,
    pub dc_du: Vec<Vec<Q>>,
    /// ρ·d(Σ aₖdbₖ / Σ aₖbₖ) = ρ Σₖ d(aₖ/Σab) ∧ dbₖ.
    pub rho_d_ab: Vec<Vec<Q>>,
}

impl SymplecticReport {
    pub fn liouville_holds(&self) -> bool {
        self.dp_dq == self.dc_du
    }

    pub fn duality_holds(&self) -> bool {
        self.dp_dq == self.rho_d_ab
    }
}

struct Sample {
    q: Vec<Jet<Q>>,
    u: Vec<Jet<Q>>,
    c: Vec<Jet<Q>>,
    p: Vec<Jet<Q>>,
    a: Vec<Jet<Q>>,
    b: Vec<Jet<Q>>,
}

fn sample(t: &[Q], rho: &Q, q: &[Q], u: &[Q]) -> Result<Sample> {
    let m = t.len();
    for (k, qk) in q.iter().enumerate() {
        if qk.is_zero() || *qk == Q::one() || t.contains(qk) || q[..k].contains(qk) {
            return Err(Error::InvalidInput("apparent points must be distinct and off the poles".into()));
        }
    }
    let mut point = q.to_vec();
    point.extend_from_slice(u);
    let vars = Jet::variables(&point);
    let (qv, uv) = (vars[..m].to_vec(), vars[m..].to_vec());
    let tj: Vec<Jet<Q>> = t.iter().map(|x| Jet::constant(x.clone())).collect();
    let rj = Jet::constant(rho.clone());
    let c = c_from_qu(&tj, &rj, &qv, &uv)?;
    let p = qv.iter().map(|qk| darboux_p(&tj, &rj, &uv, &c, qk)).collect::<Result<Vec<_>>>()?;
    let a = Poly::from_roots(&qv).coeffs_padded(m + 1);
    let b = bun(&tj, &uv)?.into_coords();
    Ok(Sample { q: qv, u: uv, c, p, a, b })
}

/// Σ dpₖ∧dqₖ, Σ dcᵢ∧duᵢ and ρ·d(Σa db/Σab) at a point of the (q, u) chart, with
/// c and p exact rational functions of (q, u) differentiated by first-order jets.
pub fn symplectic_check(t: &[Q], rho: &Q, q: &[Q], u: &[Q]) -> Result<SymplecticReport> {
    let m = t.len();
    let s = sample(t, rho, q, u)?;
    let k = 2 * m;
    let pairing = dot(&s.a, &s.b);
    let scaled: Vec<Jet<Q>> = s
        .a
        .iter()
        .map(|ak| ak.checked_div(&pairing).ok_or(Error::Indeterminate("point on the incidence variety".into())))
        .collect::<Result<_>>()?;
    let rho_d_ab = wedge_sum(&scaled, &s.b, k)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x * rho.clone()).collect())
        .collect();
    Ok(SymplecticReport { dp_dq: wedge_sum(&s.p, &s.q, k), dc_du: wedge_sum(&s.c, &s.u, k), rho_d_ab })
}

/// ρ·d(Σa db/Σab) and its image under the involution a ↔ b, as coefficient arrays
/// on (q, u). The involution negates the form since their sum is ρ·d(dlog Σab).
pub fn omega_swap(t: &[Q], rho: &Q, q: &[Q], u: &[Q]) -> Result<(FormCoefficients, FormCoefficients)> {
    let k = 2 * t.len();
    let s = sample(t, rho, q, u)?;
    let pairing = dot(&s.a, &s.b);
    let inv = pairing.inv().ok_or(Error::Indeterminate("point on the incidence variety".into()))?;
    let form = |x: &[Jet<Q>], y: &[Jet<Q>]| -> Vec<Vec<Q>> {
        let scaled: Vec<Jet<Q>> = x.iter().map(|xk| xk.clone() * inv.clone()).collect();
        wedge_sum(&scaled, y, k)
            .into_iter()
            .map(|row| row.into_iter().map(|v| v * rho.clone()).collect())
            .collect()
    };
    Ok((form(&s.a, &s.b), form(&s.b, &s.a)))
}

/// Whether the involution a ↔ b negates ρ·d(Σa db/Σab) at the sample.
pub fn omega_anti_invariant(t: &[Q], rho: &Q, q: &[Q], u: &[Q]) -> Result<bool> {
    let (w, swapped) = omega_swap(t, rho, q, u)?;
    Ok(w.iter().zip(&swapped).all(|(r, s)| r.iter().zip(s).all(|(x, y)| (x.clone() + y.clone()).is_zero())))
}

/// The 1-form identity Σ pₖdqₖ = ρ(Σa db)/(Σab) − ρ d(Σab)/(Σab) + ρ da_top/a_top,
/// compared coefficientwise on (q, u).
pub fn eta_check(t: &[Q], rho: &Q, q: &[Q], u: &[Q]) -> Result<bool> {
    let m = t.len();
    let s = sample(t, rho, q, u)?;
    let k = 2 * m;
    let pairing = dot(&s.a, &s.b);
    let inv = pairing.inv().ok_or(Error::Indeterminate("point on the incidence variety".into()))?;
    let top = s.a[m].inv().ok_or(Error::DivisionByZero)?;
    for v in 0..k {
        let lhs = s.p.iter().zip(&s.q).fold(Q::zero(), |acc, (p, q)| acc + p.value().clone() * q.partial(v));
        let a_db = s.a.iter().zip(&s.b).fold(Q::zero(), |acc, (a, b)| acc + a.value().clone() * b.partial(v));
        let rhs = rho.clone()
            * (a_db * inv.value().clone() - pairing.partial(v) * inv.value().clone()
                + s.a[m].partial(v) * top.value().clone());
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
