use alloc::format;
use alloc::vec::Vec;

use crate::chart::{Mat2, ParConnection};
use crate::error::{Error, Result};
use crate::exact::{Field, RatFun, Q};
use crate::parabolic::{Point, SpectralData};

/// A logarithmic connection on a line bundle of degree `degree` with exponent μᵢ
/// at pole i; Fuchs forces degree + Σμᵢ = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct RankOneTwist<F> {
    degree: i64,
    mu: Vec<F>,
}

impl<F: Field> RankOneTwist<F> {
    pub fn new(mu: Vec<F>, degree: i64) -> Result<Self> {
        let sum = mu.iter().fold(F::from_i64(degree), |a, x| a + x.clone());
        if !sum.is_zero() {
            return Err(Error::InvalidInput(format!("exponents do not sum to −{}", degree)));
        }
        Ok(RankOneTwist { degree, mu })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn mu(&self) -> &[F] {
        &self.mu
    }

    pub fn inverse(&self) -> Self {
        RankOneTwist { degree: -self.degree, mu: self.mu.iter().map(|x| -x.clone()).collect() }
    }
}

impl RankOneTwist<Q> {
    /// The twist with the given exponents; the sum must be an integer.
    pub fn from_exponents(mu: Vec<Q>) -> Result<Self> {
        let sum = mu.iter().fold(Q::zero(), |a, x| a + x.clone());
        if !sum.is_integer() {
            return Err(Error::InvalidInput(format!("exponent sum {} is not an integer", sum)));
        }
        let degree = i64::try_from(-sum.numer()).map_err(|_| Error::InvalidInput("degree overflow".into()))?;
        RankOneTwist::new(mu, degree)
    }

    /// O(−tᵢ) with exponent 1 at pole i: the twist realized by Elm⁻∘Elm⁻ at i.
    pub fn point(n: usize, i: usize) -> Self {
        let mu = (0..n).map(|j| if j == i { Q::one() } else { Q::zero() }).collect();
        RankOneTwist { degree: -1, mu }
    }
}

/// (νᵢ^±) ↦ (νᵢ^± + μᵢ), degree d ↦ d + 2·deg L.
pub fn twist<F: Field>(sd: &SpectralData<F>, tw: &RankOneTwist<F>) -> Result<SpectralData<F>> {
    if tw.mu.len() != sd.len() {
        return Err(Error::InvalidInput("twist and exponents have different lengths".into()));
    }
    let shift = |v: &dyn Fn(usize) -> F| (0..sd.len()).map(|i| v(i) + tw.mu[i].clone()).collect();
    SpectralData::new(
        shift(&|i| sd.plus(i).clone()),
        shift(&|i| sd.minus(i).clone()),
        sd.degree() + 2 * tw.degree,
    )
}

/// ∇ ⊗ (d + Σ μⱼ dz/(z − tⱼ)) in the frame ê ⊗ ê_L; at ∞ the frame of O(ℓ) is z^ℓ ê_L.
pub fn twist_connection<F: Field>(conn: &ParConnection<F>, tw: &RankOneTwist<F>) -> Result<ParConnection<F>> {
    if tw.mu.len() != conn.poles().len() {
        return Err(Error::InvalidInput("twist and connection have different pole counts".into()));
    }
    let mut scalar = RatFun::zero();
    for (p, mu) in conn.poles().iter().zip(&tw.mu) {
        if let Point::Finite(t) = p {
            scalar = scalar + RatFun::simple_pole(t) * RatFun::constant(mu.clone());
        }
    }
    let matrix = conn.matrix().clone() + Mat2::scalar(scalar * RatFun::constant(conn.lambda().clone()));
    let (e1, e2) = conn.splitting();
    let exponents = conn
        .exponents()
        .iter()
        .zip(&tw.mu)
        .map(|((p, m), mu)| (p.clone() + mu.clone(), m.clone() + mu.clone()))
        .collect();
    ParConnection::new(
        conn.poles().to_vec(),
        (e1 + tw.degree, e2 + tw.degree),
        conn.lambda().clone(),
        matrix,
        conn.directions().to_vec(),
        exponents,
    )
}
