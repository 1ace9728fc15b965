use alloc::format;
use alloc::vec::Vec;

use super::connection::{ParConnection, SpectralMismatch};
use super::mat2::Mat2;
use crate::error::{Error, Result};
use crate::exact::{Field, RatFun};
use crate::parabolic::{Point, SpectralData};

/// Which bundle the chart matrix is read on: the trivial bundle with l_∞ = ê₁,
/// or O ⊕ O(−1) obtained by Elm⁻ at ∞ along it (same matrix, ε₂ = ê₂/z at ∞).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Frame {
    Degree0,
    DegreeMinus1,
}

/// The normal-form λ-connection λ∇₀ + Σ cᵢΘᵢ with poles (t₁, …, t_{n−3}, 0, 1, ∞).
///
/// Exponents are stored with the degree −1 labels (Fuchs sum 1); in the degree 0
/// frame the pair at ∞ reads (ν∞⁻, ν∞⁺ − 1). Parabolics are lᵢ = (uᵢ : 1),
/// l₀ = (0 : 1), l₁ = (1 : 1), and l_∞ = (1 : 0) or (0 : 1) per frame.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionChart<F> {
    t: Vec<F>,
    nu: SpectralData<F>,
    u: Vec<F>,
    lambda: F,
    c: Vec<F>,
    frame: Frame,
}

impl<F: Field> ConnectionChart<F> {
    pub fn new(t: Vec<F>, nu: SpectralData<F>, u: Vec<F>, lambda: F, c: Vec<F>, frame: Frame) -> Result<Self> {
        let m = t.len();
        if nu.len() != m + 3 || u.len() != m || c.len() != m {
            return Err(Error::InvalidInput(format!(
                "n = {} needs {} exponent pairs and {} values of u and c",
                m + 3,
                m + 3,
                m
            )));
        }
        if nu.degree() != -1 {
            return Err(Error::InvalidInput("exponents must carry the degree −1 labels".into()));
        }
        let mut finite = t.clone();
        finite.push(F::zero());
        finite.push(F::one());
        for i in 0..finite.len() {
            for j in 0..i {
                if finite[i] == finite[j] {
                    return Err(Error::InvalidInput("poles must be distinct".into()));
                }
            }
        }
        Ok(ConnectionChart { t, nu, u, lambda, c, frame })
    }

    /// Number of poles.
    pub fn n(&self) -> usize {
        self.t.len() + 3
    }

    pub fn t(&self) -> &[F] {
        &self.t
    }

    pub fn nu(&self) -> &SpectralData<F> {
        &self.nu
    }

    pub fn u(&self) -> &[F] {
        &self.u
    }

    pub fn lambda(&self) -> &F {
        &self.lambda
    }

    pub fn c(&self) -> &[F] {
        &self.c
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    /// Σ ν⁻ over all poles.
    pub fn rho(&self) -> F {
        self.nu.rho()
    }

    pub fn with_lambda_c(&self, lambda: F, c: Vec<F>) -> Result<Self> {
        ConnectionChart::new(self.t.clone(), self.nu.clone(), self.u.clone(), lambda, c, self.frame)
    }

    pub fn with_frame(&self, frame: Frame) -> Self {
        ConnectionChart { frame, ..self.clone() }
    }

    pub fn poles(&self) -> Vec<Point<F>> {
        let mut p: Vec<Point<F>> = self.t.iter().cloned().map(Point::Finite).collect();
        p.push(Point::Finite(F::zero()));
        p.push(Point::Finite(F::one()));
        p.push(Point::Infinity);
        p
    }

    pub fn splitting(&self) -> (i64, i64) {
        match self.frame {
            Frame::Degree0 => (0, 0),
            Frame::DegreeMinus1 => (0, -1),
        }
    }

    pub fn directions(&self) -> Vec<[F; 2]> {
        let mut d: Vec<[F; 2]> = self.u.iter().map(|u| [u.clone(), F::one()]).collect();
        d.push([F::zero(), F::one()]);
        d.push([F::one(), F::one()]);
        d.push(match self.frame {
            Frame::Degree0 => [F::one(), F::zero()],
            Frame::DegreeMinus1 => [F::zero(), F::one()],
        });
        d
    }

    /// (ν⁺, ν⁻) per pole in this chart's frame.
    pub fn exponents(&self) -> Vec<(F, F)> {
        let n = self.n();
        let mut e: Vec<(F, F)> = (0..n).map(|i| self.nu.pair(i)).collect();
        if self.frame == Frame::Degree0 {
            let (p, m) = e[n - 1].clone();
            e[n - 1] = (m, p - F::one());
        }
        e
    }

    pub fn to_connection(&self) -> ParConnection<F> {
        ParConnection::new(
            self.poles(),
            self.splitting(),
            self.lambda.clone(),
            connection_matrix(self),
            self.directions(),
            self.exponents(),
        )
        .expect("chart data is consistent")
    }
}

/// ∇₀: residues [[ν₀⁻, 0], [ρ, ν₀⁺]] at 0, [[ν₁⁻ − ρ, κ₁ + ρ], [−ρ, ν₁⁺ + ρ]] at 1 and
/// [[νᵢ⁻, κᵢuᵢ], [0, νᵢ⁺]] at tᵢ, so that φ has divisor t₁ + … + t_{n−3}.
pub fn nabla0_matrix<F: Field>(chart: &ConnectionChart<F>) -> Mat2<F> {
    let m = chart.t.len();
    let nu = &chart.nu;
    let rho = chart.rho();
    let (p0, m0) = nu.pair(m);
    let (p1, m1) = nu.pair(m + 1);
    let k1 = nu.kappa(m + 1);
    let mut a = Mat2::simple_pole([[m0, F::zero()], [rho.clone(), p0]], &F::zero())
        + Mat2::simple_pole(
            [[m1 - rho.clone(), k1 + rho.clone()], [-rho.clone(), p1 + rho]],
            &F::one(),
        );
    for i in 0..m {
        let (pi, mi) = nu.pair(i);
        let r = [[mi, nu.kappa(i) * chart.u[i].clone()], [F::zero(), pi]];
        a = a + Mat2::simple_pole(r, &chart.t[i]);
    }
    a
}

/// Θᵢ: nilpotent residues [[0, 0], [1 − uᵢ, 0]] at 0, [[uᵢ, −uᵢ], [uᵢ, −uᵢ]] at 1 and
/// [[−uᵢ, uᵢ²], [−1, uᵢ]] at tᵢ, each killing the parabolic there.
pub fn theta_matrix<F: Field>(chart: &ConnectionChart<F>, i: usize) -> Mat2<F> {
    let u = chart.u[i].clone();
    let z = F::zero();
    Mat2::simple_pole([[z.clone(), z.clone()], [F::one() - u.clone(), z]], &F::zero())
        + Mat2::simple_pole([[u.clone(), -u.clone()], [u.clone(), -u.clone()]], &F::one())
        + Mat2::simple_pole([[-u.clone(), u.clone() * u.clone()], [-F::one(), u]], &chart.t[i])
}

/// λ·A₀ + Σ cᵢΘᵢ.
pub fn connection_matrix<F: Field>(chart: &ConnectionChart<F>) -> Mat2<F> {
    (0..chart.t.len()).fold(nabla0_matrix(chart).scale_const(&chart.lambda), |acc, i| {
        acc + theta_matrix(chart, i).scale_const(&chart.c[i])
    })
}

/// The (2,1) entry φ of the chart matrix, whose zeros off the poles are the
/// apparent singular points.
pub fn lower_left<F: Field>(chart: &ConnectionChart<F>) -> RatFun<F> {
    connection_matrix(chart).entry(1, 0).clone()
}

/// Residue and Fuchs checks of the chart matrix against its declared data.
pub fn verify_spectral<F: Field>(chart: &ConnectionChart<F>) -> core::result::Result<(), SpectralMismatch> {
    chart.to_connection().verify()
}

/// Whether the chart lies on the section of reducible connections preserving ê₁:
/// c = 0 and ρ = 0. Off uᵢ = tᵢ this is equivalent to φ ≡ 0.
pub fn is_reducible_section<F: Field>(chart: &ConnectionChart<F>) -> Result<bool> {
    if chart.lambda.is_zero() {
        return Err(Error::InvalidInput("λ must be nonzero".into()));
    }
    Ok(chart.rho().is_zero() && chart.c.iter().all(|x| x.is_zero()))
}
