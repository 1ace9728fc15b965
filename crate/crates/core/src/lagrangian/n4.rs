use crate::error::{Error, Result};
use crate::exact::Field;

fn div<F: Field>(a: F, b: F) -> Result<F> {
    a.checked_div(&b).ok_or(Error::DivisionByZero)
}

/// Four poles (t, 0, 1, ∞), λ = 1: p = −(t − u)(ρ + c(t − u))/(t(t − 1)),
/// q = t(ρ + c(1 − u))/(ρ + c(t − u)).
pub fn n4_forward<F: Field>(t: &F, rho: &F, u: &F, c: &F) -> Result<(F, F)> {
    let one = F::one();
    let tu = t.clone() - u.clone();
    let s = rho.clone() + c.clone() * tu.clone();
    let p = div(-(tu * s.clone()), t.clone() * (t.clone() - one.clone()))?;
    let q = div(t.clone() * (rho.clone() + c.clone() * (one - u.clone())), s)?;
    Ok((p, q))
}

/// u = t(ρ + p(q − 1))/(ρ + p(q − t)), c = −(q − t)(ρ + p(q − t))/(t(t − 1)).
pub fn n4_inverse<F: Field>(t: &F, rho: &F, p: &F, q: &F) -> Result<(F, F)> {
    let one = F::one();
    let s = rho.clone() + p.clone() * (q.clone() - t.clone());
    let u = div(t.clone() * (rho.clone() + p.clone() * (q.clone() - one.clone())), s.clone())?;
    let c = div(-((q.clone() - t.clone()) * s), t.clone() * (t.clone() - one))?;
    Ok((u, c))
}

/// μ = t(1 − u)/(t − u), the zero of the bundle polynomial and b₁/b₀.
pub fn n4_mu<F: Field>(t: &F, u: &F) -> Result<F> {
    div(t.clone() * (F::one() - u.clone()), t.clone() - u.clone())
}

/// The involution (q, μ) ↦ (μ, q) exchanging apparent and parabolic data.
pub fn okamoto_swap<F: Field>(q: &F, mu: &F) -> (F, F) {
    (mu.clone(), q.clone())
}
