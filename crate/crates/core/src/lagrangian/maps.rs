use alloc::format;
use alloc::vec::Vec;

use crate::chart::ConnectionChart;
use crate::error::{Error, Result};
use crate::exact::{dot, Field, Matrix, Poly, ProjPoint};

/// Π (z − tⱼ) over the finite poles t₁, …, t_{n−3}.
pub fn pole_polynomial<F: Field>(t: &[F]) -> Poly<F> {
    Poly::from_roots(t)
}

/// Pᵢ(z) = [(uᵢ − tᵢ)z + (1 − uᵢ)tᵢ]·Π_{j≠i}(z − tⱼ), the numerator of Θᵢ's lower-left
/// entry; it vanishes at μᵢ and the other tⱼ.
pub fn bundle_polynomial<F: Field>(t: &[F], u: &[F], i: usize) -> Poly<F> {
    let lin = Poly::linear((F::one() - u[i].clone()) * t[i].clone(), u[i].clone() - t[i].clone());
    let others: Vec<F> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
    lin * Poly::from_roots(&others)
}

/// P̃ = −λρ·Π(z − tⱼ) + Σ cᵢPᵢ, so that φ = P̃/(z(z − 1)Π(z − tⱼ)).
pub fn apparent_polynomial<F: Field>(chart: &ConnectionChart<F>) -> Poly<F> {
    let t = chart.t();
    let lead = -(chart.lambda().clone() * chart.rho());
    (0..t.len()).fold(pole_polynomial(t).scale(&lead), |acc, i| {
        acc + bundle_polynomial(t, chart.u(), i).scale(&chart.c()[i])
    })
}

/// Coefficients (a₀ : … : a_{n−3}) of P̃; φ ≡ 0 is the indeterminacy locus.
pub fn app<F: Field>(chart: &ConnectionChart<F>) -> Result<ProjPoint<F>> {
    let p = apparent_polynomial(chart);
    let coeffs = p.coeffs_padded(chart.t().len() + 1);
    ProjPoint::new(coeffs).ok_or(Error::Indeterminate("apparent polynomial vanishes identically".into()))
}

/// The hyperplane of |O(n−3)| containing every Pᵢ: b spans the kernel of the
/// (n−3)×(n−2) coefficient matrix.
pub fn bun<F: Field>(t: &[F], u: &[F]) -> Result<ProjPoint<F>> {
    if u.len() != t.len() {
        return Err(Error::InvalidInput(format!("{} poles need {} coordinates", t.len() + 3, t.len())));
    }
    let m = t.len();
    let rows = (0..m).map(|i| bundle_polynomial(t, u, i).coeffs_padded(m + 1)).collect();
    let kernel = Matrix::from_rows(rows, m + 1).kernel();
    if kernel.len() != 1 {
        return Err(Error::OutOfChart(format!("kernel has dimension {}", kernel.len())));
    }
    Ok(ProjPoint::new(kernel.into_iter().next().expect("one vector")).expect("kernel vectors are nonzero"))
}

/// x ↦ t(x − 1)/(x − t): sends uᵢ to the zero μᵢ of Pᵢ's linear factor and back.
pub fn mu_map<F: Field>(t: &F, x: &F) -> Result<F> {
    (t.clone() * (x.clone() - F::one()))
        .checked_div(&(x.clone() - t.clone()))
        .ok_or(Error::DivisionByZero)
}

/// For each i the hyperplane b meets {(z − μ)Π_{j≠i}(z − tⱼ)} at one μᵢ, and uᵢ = μ(μᵢ).
pub fn bun_inverse<F: Field>(t: &[F], b: &ProjPoint<F>) -> Result<Vec<F>> {
    let m = t.len();
    if b.len() != m + 1 {
        return Err(Error::InvalidInput(format!("b needs {} coordinates", m + 1)));
    }
    (0..m)
        .map(|i| {
            let others: Vec<F> = t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
            let q = Poly::from_roots(&others);
            let zq = Poly::z() * q.clone();
            let den = dot(&q.coeffs_padded(m + 1), b.coords());
            let num = dot(&zq.coeffs_padded(m + 1), b.coords());
            let mu = num.checked_div(&den).ok_or(Error::OutOfChart(format!("line {} lies in the hyperplane", i + 1)))?;
            mu_map(&t[i], &mu).map_err(|_| Error::OutOfChart(format!("μ{} = t{}", i + 1, i + 1)))
        })
        .collect()
}

/// Σ aₖbₖ in the monomial/dual normalization.
pub fn incidence_pairing<F: Field>(a: &ProjPoint<F>, b: &ProjPoint<F>) -> Result<F> {
    if a.len() != b.len() {
        return Err(Error::InvalidInput("a and b have different lengths".into()));
    }
    Ok(a.pairing(b))
}
