use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::mat2::{apply, Const2, Mat2};
use crate::error::{Error, Result};
use crate::exact::Field;
use crate::parabolic::Point;

/// A logarithmic λ-connection λd + A(z)dz on O(e₁) ⊕ O(e₂) with a parabolic
/// direction and exponent pair (ν⁺, ν⁻) at each pole.
///
/// Directions at finite poles are read in the global frame ê, at ∞ in εⱼ = z^{eⱼ}êⱼ.
/// The residue at pole i must have eigenvalues λν⁺, λν⁻ with lᵢ a λν⁺-eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct ParConnection<F> {
    poles: Vec<Point<F>>,
    splitting: (i64, i64),
    lambda: F,
    matrix: Mat2<F>,
    dirs: Vec<[F; 2]>,
    exponents: Vec<(F, F)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// A pole of order ≥ 2, or a non-logarithmic term at ∞.
    NotLogarithmic,
    /// A pole of A(z) outside the declared divisor.
    UndeclaredPole,
    Eigenvalues,
    /// The parabolic is not the λν⁺-eigendirection.
    Direction,
    Fuchs,
}

/// First failing pole (0-based, `None` for global conditions) and the reason.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralMismatch {
    pub pole: Option<usize>,
    pub kind: Mismatch,
}

impl fmt::Display for SpectralMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            Mismatch::NotLogarithmic => "residue undefined (pole of order at least 2)",
            Mismatch::UndeclaredPole => "pole outside the declared divisor",
            Mismatch::Eigenvalues => "residue eigenvalues differ from the exponents",
            Mismatch::Direction => "parabolic direction is not the nu+ eigenvector",
            Mismatch::Fuchs => "exponent sum does not match the degree",
        };
        match self.pole {
            Some(i) => write!(f, "pole {}: {}", i + 1, what),
            None => write!(f, "{}", what),
        }
    }
}

impl<F: Field> ParConnection<F> {
    pub fn new(
        poles: Vec<Point<F>>,
        splitting: (i64, i64),
        lambda: F,
        matrix: Mat2<F>,
        dirs: Vec<[F; 2]>,
        exponents: Vec<(F, F)>,
    ) -> Result<Self> {
        let n = poles.len();
        if dirs.len() != n || exponents.len() != n {
            return Err(Error::InvalidInput(format!(
                "{} poles, {} directions, {} exponent pairs",
                n,
                dirs.len(),
                exponents.len()
            )));
        }
        if !poles.iter().any(|p| p.is_infinite()) {
            return Err(Error::InvalidInput("∞ must be one of the poles".into()));
        }
        if dirs.iter().any(|d| d[0].is_zero() && d[1].is_zero()) {
            return Err(Error::InvalidInput("zero parabolic direction".into()));
        }
        Ok(ParConnection { poles, splitting, lambda, matrix, dirs, exponents })
    }

    pub fn poles(&self) -> &[Point<F>] {
        &self.poles
    }

    pub fn splitting(&self) -> (i64, i64) {
        self.splitting
    }

    pub fn degree(&self) -> i64 {
        self.splitting.0 + self.splitting.1
    }

    pub fn lambda(&self) -> &F {
        &self.lambda
    }

    pub fn matrix(&self) -> &Mat2<F> {
        &self.matrix
    }

    pub fn directions(&self) -> &[[F; 2]] {
        &self.dirs
    }

    pub fn exponents(&self) -> &[(F, F)] {
        &self.exponents
    }

    pub fn with_exponents(&self, exponents: Vec<(F, F)>) -> Result<Self> {
        ParConnection::new(
            self.poles.clone(),
            self.splitting,
            self.lambda.clone(),
            self.matrix.clone(),
            self.dirs.clone(),
            exponents,
        )
    }

    pub fn finite_poles(&self) -> Vec<F> {
        self.poles.iter().filter_map(|p| p.finite().cloned()).collect()
    }

    /// Residue at pole i in the frame where its direction is read.
    pub fn residue(&self, i: usize) -> Result<Const2<F>> {
        match &self.poles[i] {
            Point::Finite(t) => self.matrix.residue_at(t),
            Point::Infinity => self.matrix.residue_at_infinity(self.splitting, &self.lambda),
        }
    }

    /// Checks every pole in order, then the Fuchs relation d + Σ(ν⁺ + ν⁻) = 0.
    pub fn verify(&self) -> core::result::Result<(), SpectralMismatch> {
        let fail = |pole, kind| Err(SpectralMismatch { pole, kind });
        if !self.matrix.poles_within(&self.finite_poles()) {
            return fail(None, Mismatch::UndeclaredPole);
        }
        let lambda = &self.lambda;
        for i in 0..self.poles.len() {
            let r = match self.residue(i) {
                Ok(r) => r,
                Err(_) => return fail(Some(i), Mismatch::NotLogarithmic),
            };
            let (plus, minus) = self.exponents[i].clone();
            let (ep, em) = (lambda.clone() * plus, lambda.clone() * minus);
            let trace = r[0][0].clone() + r[1][1].clone();
            let det = r[0][0].clone() * r[1][1].clone() - r[0][1].clone() * r[1][0].clone();
            if trace != ep.clone() + em.clone() || det != ep.clone() * em {
                return fail(Some(i), Mismatch::Eigenvalues);
            }
            let l = &self.dirs[i];
            let rl = apply(&r, l);
            if rl[0] != ep.clone() * l[0].clone() || rl[1] != ep * l[1].clone() {
                return fail(Some(i), Mismatch::Direction);
            }
        }
        let sum = self
            .exponents
            .iter()
            .fold(F::from_i64(self.degree()), |acc, (p, m)| acc + p.clone() + m.clone());
        if !sum.is_zero() {
            return fail(None, Mismatch::Fuchs);
        }
        Ok(())
    }
}
