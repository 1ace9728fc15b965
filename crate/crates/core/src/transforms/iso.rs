use alloc::vec;
use alloc::vec::Vec;

use crate::chart::ParConnection;
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Poly};
use crate::parabolic::Point;

type PolyMat<F> = [[Poly<F>; 2]; 2];

fn cleared<F: Field>(conn: &ParConnection<F>, d: &Poly<F>) -> Result<PolyMat<F>> {
    let a = conn.matrix().entries();
    let c = |j: usize, k: usize| -> Result<Poly<F>> {
        let f = &a[j][k];
        Ok(f.num().clone() * d.exact_div(f.den())?)
    };
    Ok([[c(0, 0)?, c(0, 1)?], [c(1, 0)?, c(1, 1)?]])
}

/// Basis of parabolic maps G: E₂ → E₁ with λG′ + A₁G − GA₂ = 0.
///
/// G_jk is a polynomial of degree ≤ e₁ⱼ − e₂ₖ (a map O(e₂ₖ) → O(e₁ⱼ)); G must send
/// each parabolic of the source into the corresponding one of the target, read in
/// ε-frames at ∞.
pub fn horizontal_maps<F: Field>(target: &ParConnection<F>, source: &ParConnection<F>) -> Result<Vec<PolyMat<F>>> {
    if target.poles() != source.poles() || target.lambda() != source.lambda() {
        return Err(Error::InvalidInput("connections on different pole sets or with different λ".into()));
    }
    let lambda = target.lambda().clone();
    let d = target
        .finite_poles()
        .iter()
        .fold(Poly::one(), |acc, t| acc * Poly::linear(-t.clone(), F::one()));
    let a1 = cleared(target, &d)?;
    let a2 = cleared(source, &d)?;
    let e1 = [target.splitting().0, target.splitting().1];
    let e2 = [source.splitting().0, source.splitting().1];
    // Unknowns: (j, k, m) for the coefficient of z^m in G_jk.
    let mut unknowns: Vec<(usize, usize, usize)> = Vec::new();
    for j in 0..2 {
        for k in 0..2 {
            let bound = e1[j] - e2[k];
            for m in 0..=bound.max(-1) {
                unknowns.push((j, k, m as usize));
            }
        }
    }
    if unknowns.is_empty() {
        return Ok(Vec::new());
    }
    // Column for each unknown: the polynomial matrix λDG′ + (DA₁)G − G(DA₂).
    let columns: Vec<PolyMat<F>> = unknowns
        .iter()
        .map(|&(j, k, m)| {
            let zm = Poly::z().pow(m as u32);
            let mut out: PolyMat<F> = Default::default();
            if m > 0 {
                out[j][k] = d.clone() * Poly::z().pow(m as u32 - 1).scale(&(lambda.clone() * F::from_i64(m as i64)));
            }
            for r in 0..2 {
                out[r][k] = out[r][k].clone() + a1[r][j].clone() * zm.clone();
                out[j][r] = out[j][r].clone() - zm.clone() * a2[k][r].clone();
            }
            out
        })
        .collect();
    let top = columns
        .iter()
        .flat_map(|c| c.iter().flatten().map(|p| p.degree().unwrap_or(0)))
        .max()
        .unwrap_or(0);
    let mut rows: Vec<Vec<F>> = Vec::new();
    for j in 0..2 {
        for k in 0..2 {
            for deg in 0..=top {
                rows.push(columns.iter().map(|c| c[j][k].coeff(deg)).collect());
            }
        }
    }
    // Parabolic compatibility: G(pᵢ)·l₂ᵢ ∧ l₁ᵢ = 0.
    for (i, p) in target.poles().iter().enumerate() {
        let l1 = &target.directions()[i];
        let l2 = &source.directions()[i];
        let row = unknowns
            .iter()
            .map(|&(j, k, m)| {
                let value = match p {
                    Point::Finite(t) => t.pow(m as u32),
                    Point::Infinity if m as i64 == e1[j] - e2[k] => F::one(),
                    Point::Infinity => F::zero(),
                };
                // (G l₂)_j gains value·l₂ₖ; wedge with l₁ is x₀l₁[1] − x₁l₁[0].
                let sign = if j == 0 { l1[1].clone() } else { -l1[0].clone() };
                value * l2[k].clone() * sign
            })
            .collect();
        rows.push(row);
    }
    let mat = Matrix::from_rows(rows, unknowns.len());
    Ok(mat
        .kernel()
        .into_iter()
        .map(|v| {
            let mut g: PolyMat<F> = Default::default();
            for (x, &(j, k, m)) in v.iter().zip(&unknowns) {
                g[j][k] = g[j][k].clone() + Poly::z().pow(m as u32).scale(x);
            }
            g
        })
        .collect())
}

/// Whether some horizontal parabolic map is invertible.
///
/// det of the generic combination is a polynomial of degree ≤ 2 in each
/// coefficient, so it is nonzero iff it is nonzero somewhere on {0,1,2}^m.
pub fn connections_isomorphic<F: Field>(a: &ParConnection<F>, b: &ParConnection<F>) -> Result<bool> {
    let (sa, sb) = (a.splitting(), b.splitting());
    if sa.0 + sa.1 != sb.0 + sb.1 || sa.0.max(sa.1) != sb.0.max(sb.1) {
        return Ok(false);
    }
    if a.exponents() != b.exponents() {
        return Ok(false);
    }
    let basis = horizontal_maps(a, b)?;
    let m = basis.len();
    if m > 8 {
        return Err(Error::Indeterminate("too many horizontal maps for the grid test".into()));
    }
    let mut s = vec![0usize; m];
    loop {
        let mut g: PolyMat<F> = Default::default();
        for (gk, &sk) in basis.iter().zip(&s) {
            let c = F::from_i64(sk as i64);
            for j in 0..2 {
                for k in 0..2 {
                    g[j][k] = g[j][k].clone() + gk[j][k].scale(&c);
                }
            }
        }
        let det = g[0][0].clone() * g[1][1].clone() - g[0][1].clone() * g[1][0].clone();
        if !det.is_zero() {
            return Ok(true);
        }
        let mut pos = 0;
        while pos < m && s[pos] == 2 {
            s[pos] = 0;
            pos += 1;
        }
        if pos == m {
            return Ok(false);
        }
        s[pos] += 1;
    }
}
