use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{Field, ProjPoint, Q};
use crate::lagrangian::{bun, c_from_qu, darboux_p};

fn div<F: Field>(a: F, b: F) -> Result<F> {
    a.checked_div(&b).ok_or(Error::DivisionByZero)
}

/// Five poles (t₁, t₂, 0, 1, ∞): (b₀, b₁, b₂) of the bundle with parabolics (u₁, u₂).
pub fn bun_n5<F: Field>(t: &[F; 2], u: &[F; 2]) -> [F; 3] {
    let [t1, t2] = t.clone();
    let [u1, u2] = u.clone();
    let one = F::one();
    let tt = t1.clone() * t2.clone();
    let d = t1.clone() - t2.clone();
    let b2 = tt.clone()
        * (t1.clone() * (t2.clone() - one.clone()) * u1.clone()
            - (t1.clone() - one.clone()) * t2.clone() * u2.clone()
            + d.clone());
    let b1 = tt.clone() * ((t2.clone() - one.clone()) * u1.clone() - (t1.clone() - one.clone()) * u2.clone() + d.clone());
    let b0 = t2.clone() * (t2 - one.clone()) * u1 - t1.clone() * (t1 - one) * u2 + tt * d;
    [b0, b1, b2]
}

/// b₂ − (t₁ + t₂)b₁ + t₁t₂b₀: the pairing of b with Π(z − tⱼ).
fn pole_pairing<F: Field>(t: &[F; 2], b: &[F; 3]) -> F {
    b[2].clone() - (t[0].clone() + t[1].clone()) * b[1].clone() + t[0].clone() * t[1].clone() * b[0].clone()
}

pub fn bun_inverse_n5<F: Field>(t: &[F; 2], b: &[F; 3]) -> Result<[F; 2]> {
    let den = pole_pairing(t, b);
    let one = F::one();
    let u1 = div(
        t[0].clone() * (b[2].clone() - (t[1].clone() + one.clone()) * b[1].clone() + t[1].clone() * b[0].clone()),
        den.clone(),
    )?;
    let u2 = div(
        t[1].clone() * (b[2].clone() - (t[0].clone() + one) * b[1].clone() + t[0].clone() * b[0].clone()),
        den,
    )?;
    Ok([u1, u2])
}

/// c from the apparent points q and the bundle b.
pub fn c_n5_from_qb<F: Field>(t: &[F; 2], rho: &F, q: &[F; 2], b: &[F; 3]) -> Result<[F; 2]> {
    let sum = q[0].clone() + q[1].clone();
    let prod = q[0].clone() * q[1].clone();
    let den = b[2].clone() - sum * b[1].clone() + prod * b[0].clone();
    let ratio = div(pole_pairing(t, b), den)?;
    let one = F::one();
    let ci = |i: usize| {
        let (ti, tj) = (t[i].clone(), t[1 - i].clone());
        let num = (q[0].clone() - ti.clone()) * (q[1].clone() - ti.clone());
        div(rho.clone() * num * ratio.clone(), ti.clone() * (ti.clone() - one.clone()) * (ti - tj))
    };
    Ok([ci(0)?, ci(1)?])
}

/// c from (a, b) with a = (a₀, a₁, a₂) the equation a₂q² + a₁q + a₀ of the apparent points.
pub fn c_n5_from_ab<F: Field>(t: &[F; 2], rho: &F, a: &[F; 3], b: &[F; 3]) -> Result<[F; 2]> {
    let pairing = a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone();
    let ratio = div(pole_pairing(t, b), pairing)?;
    let one = F::one();
    let ci = |i: usize| {
        let (ti, tj) = (t[i].clone(), t[1 - i].clone());
        let num = a[2].clone() * ti.clone() * ti.clone() + a[1].clone() * ti.clone() + a[0].clone();
        div(rho.clone() * num * ratio.clone(), ti.clone() * (ti.clone() - one.clone()) * (ti - tj))
    };
    Ok([ci(0)?, ci(1)?])
}

/// p₁ = ρ(b₁ − q₂b₀)/(b₂ − (q₁ + q₂)b₁ + q₁q₂b₀) and symmetrically p₂.
pub fn p_n5_from_qb<F: Field>(rho: &F, q: &[F; 2], b: &[F; 3]) -> Result<[F; 2]> {
    let den = b[2].clone() - (q[0].clone() + q[1].clone()) * b[1].clone() + q[0].clone() * q[1].clone() * b[0].clone();
    let p1 = div(rho.clone() * (b[1].clone() - q[1].clone() * b[0].clone()), den.clone())?;
    let p2 = div(rho.clone() * (b[1].clone() - q[0].clone() * b[0].clone()), den)?;
    Ok([p1, p2])
}

/// (b₀, b₁, b₂) = (p₁ − p₂, p₁q₁ − p₂q₂, p₁q₁² − p₂q₂² + ρ(q₁ − q₂)).
pub fn b_from_pq<F: Field>(rho: &F, p: &[F; 2], q: &[F; 2]) -> [F; 3] {
    let (p1, p2, q1, q2) = (p[0].clone(), p[1].clone(), q[0].clone(), q[1].clone());
    [
        p1.clone() - p2.clone(),
        p1.clone() * q1.clone() - p2.clone() * q2.clone(),
        p1 * q1.clone() * q1.clone() - p2 * q2.clone() * q2.clone() + rho.clone() * (q1 - q2),
    ]
}

/// Expanded coefficients (a₀, a₁, a₂) of the n = 5 apparent polynomial at λ = 1.
pub fn apparent_n5<F: Field>(t: &[F; 2], rho: &F, u: &[F; 2], c: &[F; 2]) -> [F; 3] {
    let [t1, t2] = t.clone();
    let [u1, u2] = u.clone();
    let [c1, c2] = c.clone();
    let one = F::one();
    let a2 = c1.clone() * (u1.clone() - t1.clone()) + c2.clone() * (u2.clone() - t2.clone()) - rho.clone();
    let a1 = rho.clone() * (t1.clone() + t2.clone())
        + c1.clone() * (t1.clone() * (t2.clone() + one.clone()) - u1.clone() * (t1.clone() + t2.clone()))
        + c2.clone() * ((t1.clone() + one.clone()) * t2.clone() - u2.clone() * (t1.clone() + t2.clone()));
    let a0 = t1 * t2 * (c1 * (u1 - one.clone()) + c2 * (u2 - one) - rho.clone());
    [a0, a1, a2]
}

/// Every n = 5 closed form next to its general-n counterpart, at a point of the
/// (q, u) chart with λ = 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormsN5 {
    pub b_closed: ProjPoint<Q>,
    pub b_kernel: ProjPoint<Q>,
    pub u_from_b: [Q; 2],
    pub c_from_qb: [Q; 2],
    pub c_from_ab: [Q; 2],
    pub c_general: [Q; 2],
    pub a_closed: ProjPoint<Q>,
    pub a_general: ProjPoint<Q>,
    pub p_closed: [Q; 2],
    pub p_general: [Q; 2],
    pub b_from_pq: ProjPoint<Q>,
}

impl ClosedFormsN5 {
    pub fn agrees(&self, u: &[Q; 2]) -> bool {
        self.b_closed == self.b_kernel
            && &self.u_from_b == u
            && self.c_from_qb == self.c_general
            && self.c_from_ab == self.c_general
            && self.a_closed == self.a_general
            && self.p_closed == self.p_general
            && self.b_from_pq == self.b_kernel
    }
}

fn proj(v: Vec<Q>) -> Result<ProjPoint<Q>> {
    ProjPoint::new(v).ok_or(Error::Indeterminate("zero vector".into()))
}

pub fn closed_forms_n5(t: &[Q; 2], rho: &Q, q: &[Q; 2], u: &[Q; 2]) -> Result<ClosedFormsN5> {
    let b_raw = bun_n5(t, u);
    let b_closed = proj(b_raw.to_vec())?;
    let b_kernel = bun(t, u)?;
    let u_from_b = bun_inverse_n5(t, &b_raw)?;
    let general = c_from_qu(t, rho, q, u)?;
    let c_general = [general[0].clone(), general[1].clone()];
    let c_from_qb = c_n5_from_qb(t, rho, q, &b_raw)?;
    let a_monic = [q[0].clone() * q[1].clone(), -(q[0].clone() + q[1].clone()), Q::one()];
    let c_from_ab = c_n5_from_ab(t, rho, &a_monic, &b_raw)?;
    let a_closed = proj(apparent_n5(t, rho, u, &c_general).to_vec())?;
    let a_general = proj(a_monic.to_vec())?;
    let p_closed = p_n5_from_qb(rho, q, &b_raw)?;
    let p_general = [
        darboux_p(t, rho, u, &c_general, &q[0])?,
        darboux_p(t, rho, u, &c_general, &q[1])?,
    ];
    let b_from_pq = proj(b_from_pq(rho, &p_general, q).to_vec())?;
    Ok(ClosedFormsN5 {
        b_closed,
        b_kernel,
        u_from_b,
        c_from_qb,
        c_from_ab,
        c_general,
        a_closed,
        a_general,
        p_closed,
        p_general,
        b_from_pq,
    })
}
