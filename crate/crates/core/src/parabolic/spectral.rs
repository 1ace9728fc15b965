use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{Field, Q};

/// Local exponents (νᵢ⁺, νᵢ⁻) at every pole of a degree-d bundle, subject to
/// d + Σ(νᵢ⁺ + νᵢ⁻) = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData<F> {
    plus: Vec<F>,
    minus: Vec<F>,
    degree: i64,
}

impl<F: Field> SpectralData<F> {
    pub fn new(plus: Vec<F>, minus: Vec<F>, degree: i64) -> Result<Self> {
        if plus.len() != minus.len() {
            return Err(Error::InvalidInput("exponent lists differ in length".into()));
        }
        let sd = SpectralData { plus, minus, degree };
        if !sd.fuchs_defect().is_zero() {
            return Err(Error::InvalidInput(format!(
                "exponents violate the Fuchs relation for degree {degree}"
            )));
        }
        Ok(sd)
    }

    /// d + Σ(ν⁺ + ν⁻); zero for valid data.
    pub fn fuchs_defect(&self) -> F {
        self.plus
            .iter()
            .chain(&self.minus)
            .fold(F::from_i64(self.degree), |acc, x| acc + x.clone())
    }

    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn plus(&self, i: usize) -> &F {
        &self.plus[i]
    }

    pub fn minus(&self, i: usize) -> &F {
        &self.minus[i]
    }

    pub fn pair(&self, i: usize) -> (F, F) {
        (self.plus[i].clone(), self.minus[i].clone())
    }

    /// ρ = Σ νᵢ⁻.
    pub fn rho(&self) -> F {
        self.minus.iter().fold(F::zero(), |acc, x| acc + x.clone())
    }

    /// κᵢ = νᵢ⁺ − νᵢ⁻.
    pub fn kappa(&self, i: usize) -> F {
        self.plus[i].clone() - self.minus[i].clone()
    }

    /// Replace the pair at `i` and the degree together; Fuchs is re-checked.
    pub fn with_pair(&self, i: usize, plus: F, minus: F, degree: i64) -> Result<Self> {
        let mut out = self.clone();
        out.plus[i] = plus;
        out.minus[i] = minus;
        out.degree = degree;
        SpectralData::new(out.plus, out.minus, out.degree)
    }
}

impl SpectralData<Q> {
    /// The same exponents in a larger field.
    pub fn lift<G: Field>(&self) -> SpectralData<G> {
        SpectralData {
            plus: self.plus.iter().map(G::from_q).collect(),
            minus: self.minus.iter().map(G::from_q).collect(),
            degree: self.degree,
        }
    }

    /// Whether every signed sum ν₁^{±} + ⋯ + νₙ^{±} is a non-integer.
    pub fn genericity_check(&self) -> bool {
        let n = self.len();
        assert!(n < 64, "too many poles for signed-sum enumeration");
        (0u64..1 << n).all(|mask| {
            let s = (0..n).fold(Q::zero(), |acc, i| {
                acc + if mask >> i & 1 == 1 { self.plus[i].clone() } else { self.minus[i].clone() }
            });
            !s.is_integer()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use alloc::vec;

    #[test]
    fn fuchs_is_enforced() {
        assert!(SpectralData::new(vec![q(1, 2)], vec![q(1, 2)], -1).is_ok());
        assert!(SpectralData::new(vec![q(1, 2)], vec![q(1, 3)], -1).is_err());
    }

    #[test]
    fn accessors() {
        let sd = SpectralData::new(vec![q(1, 3), q(1, 5)], vec![q(1, 7), q(-1, 3)], 0).unwrap_err();
        assert!(matches!(sd, Error::InvalidInput(_)));
        let sd = SpectralData::new(vec![q(1, 3), q(1, 5)], vec![q(1, 7), q(-176, 105)], 1).unwrap();
        assert_eq!(sd.rho(), q(1, 7) + q(-176, 105));
        assert_eq!(sd.kappa(0), q(4, 21));
    }

    #[test]
    fn genericity_examples() {
        // 1/11 enters every signed sum with coefficient ±1 (through ν₃⁺ or ν₃⁻).
        let plus = vec![q(1, 5), q(1, 7), q(1, 11)];
        let minus3 = -(q(1, 5) + q(1, 7) + q(1, 11) + q(1, 13) + q(1, 17));
        let sd = SpectralData::new(plus, vec![q(1, 13), q(1, 17), minus3], 0).unwrap();
        assert!(sd.genericity_check());

        // ν_i^± = ±1/8: the all-mixed choice sums to 0.
        let sd = SpectralData::new(vec![q(1, 8); 4], vec![q(-1, 8); 4], 0).unwrap();
        assert!(!sd.genericity_check());

        // ν₁⁺ = 1 − (ν₂⁻ + ν₃⁻) makes ν₁⁺ + ν₂⁻ + ν₃⁻ integral.
        let p1 = Q::one() - q(2, 5) - q(3, 7);
        let rest = p1.clone() + q(1, 5) + q(1, 7) + q(2, 5) + q(3, 7);
        let sd = SpectralData::new(vec![p1, q(1, 5), q(1, 7)], vec![-rest, q(2, 5), q(3, 7)], 0).unwrap();
        assert!(!sd.genericity_check());
    }
}
