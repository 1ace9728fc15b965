use alloc::vec;
use alloc::vec::Vec;

use super::maps::{app, bun, bun_inverse, bundle_polynomial, incidence_pairing, pole_polynomial};
use crate::chart::ConnectionChart;
use crate::error::{Error, Result};
use crate::exact::{dot, Field, Matrix, ProjPoint};

/// A λ-connection recovered from its apparent divisor and bundle.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<F> {
    pub u: Vec<F>,
    /// (λ : c₁ : … : c_{n−3}).
    pub lambda_c: ProjPoint<F>,
}

impl<F: Field> Solution<F> {
    pub fn lambda(&self) -> &F {
        &self.lambda_c.coords()[0]
    }

    pub fn c(&self) -> &[F] {
        &self.lambda_c.coords()[1..]
    }

    pub fn is_higgs(&self) -> bool {
        self.lambda().is_zero()
    }
}

/// Columns −ρΠ(z − tⱼ), P₁, …, P_{n−3}: the linear map (λ, c) ↦ P̃.
fn apparent_map<F: Field>(t: &[F], rho: &F, u: &[F]) -> Vec<Vec<F>> {
    let m = t.len();
    let mut cols = vec![pole_polynomial(t).scale(&-rho.clone()).coeffs_padded(m + 1)];
    cols.extend((0..m).map(|i| bundle_polynomial(t, u, i).coeffs_padded(m + 1)));
    cols
}

/// u := Bun⁻¹(b), then (λ, c, s) from P̃(λ, c) = s·a; the solution is unique up to scale.
pub fn solve_connection<F: Field>(t: &[F], rho: &F, a: &ProjPoint<F>, b: &ProjPoint<F>) -> Result<Solution<F>> {
    if rho.is_zero() {
        return Err(Error::InvalidInput("ρ = 0: the apparent map degenerates".into()));
    }
    let m = t.len();
    if a.len() != m + 1 {
        return Err(Error::InvalidInput("a has the wrong length".into()));
    }
    let u = bun_inverse(t, b)?;
    let mut cols = apparent_map(t, rho, &u);
    cols.push(a.coords().iter().map(|x| -x.clone()).collect());
    let rows = (0..=m).map(|k| cols.iter().map(|c| c[k].clone()).collect()).collect();
    let kernel = Matrix::from_rows(rows, m + 2).kernel();
    if kernel.len() != 1 {
        return Err(Error::Singular("apparent map is not injective on this bundle"));
    }
    let mut v = kernel.into_iter().next().expect("one vector");
    v.pop();
    let lambda_c = ProjPoint::new(v).ok_or(Error::Singular("a is not in the image"))?;
    Ok(Solution { u, lambda_c })
}

/// λ in the normalization P̃(λ, c) = a exactly (a taken as the given representative).
pub fn lambda_for<F: Field>(t: &[F], rho: &F, b: &ProjPoint<F>, a: &[F]) -> Result<F> {
    let m = t.len();
    let u = bun_inverse(t, b)?;
    let cols = apparent_map(t, rho, &u);
    let rows = (0..=m).map(|k| cols.iter().map(|c| c[k].clone()).collect()).collect();
    let x = Matrix::from_rows(rows, m + 1).solve(a)?;
    Ok(x[0].clone())
}

/// Pairing P̃ with b kills every Pᵢ, leaving ⟨a, b⟩ = −λρ⟨Π(z − tⱼ), b⟩: λ vanishes
/// exactly on the incidence variety. Returns whether the solved λ obeys this.
pub fn lambda_residue_identity<F: Field>(t: &[F], rho: &F, b: &ProjPoint<F>, a: &[F]) -> Result<bool> {
    let lambda = lambda_for(t, rho, b, a)?;
    let m = t.len();
    let pi_b = dot(&pole_polynomial(t).coeffs_padded(m + 1), b.coords());
    Ok(dot(a, b.coords()) + lambda * rho.clone() * pi_b == F::zero())
}

/// For ρ = 0: φ_{∇₀} ≡ 0, so App(λ∇₀ + Θ) does not depend on λ and pairs to zero
/// with Bun. Checks λ ∈ {0, 1, 5, chart λ}.
pub fn degenerate_rho0_check<F: Field>(chart: &ConnectionChart<F>) -> Result<bool> {
    if !chart.rho().is_zero() {
        return Err(Error::InvalidInput("ρ must vanish".into()));
    }
    let higgs = app(&chart.with_lambda_c(F::zero(), chart.c().to_vec())?)?;
    let b = bun(chart.t(), chart.u())?;
    for lambda in [F::one(), F::from_i64(5), chart.lambda().clone()] {
        if app(&chart.with_lambda_c(lambda, chart.c().to_vec())?)? != higgs {
            return Ok(false);
        }
    }
    Ok(incidence_pairing(&higgs, &b)?.is_zero())
}
