use alloc::vec::Vec;

use super::{Field, Q, RatFun};
use crate::error::{Error, Result};

/// Point of projective space stored in the field's canonical normal form, so that
/// derived equality is equality of points.
#[derive(Clone, PartialEq, Debug)]
pub struct ProjPoint<F> {
    x: Vec<F>,
}

impl<F: Field> ProjPoint<F> {
    /// `None` when every coordinate vanishes.
    pub fn new(mut x: Vec<F>) -> Option<Self> {
        if !x.iter().any(|c| c.is_unit()) {
            return None;
        }
        F::normalize_projective(&mut x);
        Some(ProjPoint { x })
    }

    pub fn coords(&self) -> &[F] {
        &self.x
    }

    pub fn into_coords(self) -> Vec<F> {
        self.x
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Σ xₖyₖ in the stored normalization; only its vanishing is intrinsic.
    pub fn pairing(&self, other: &ProjPoint<F>) -> F {
        super::dot(&self.x, &other.x)
    }

    /// Coordinates in reverse order.
    pub fn reversed(&self) -> Self {
        ProjPoint::new(self.x.iter().rev().cloned().collect()).expect("nonzero")
    }
}

impl ProjPoint<RatFun<Q>> {
    /// Limit of a ℚ(t)-point as t → t₀: rescale by the lowest order of vanishing.
    pub fn limit_at(&self, t0: &Q) -> Result<ProjPoint<Q>> {
        let mut lead: Vec<Option<(i64, Q)>> = Vec::new();
        for c in &self.x {
            lead.push(if c.is_zero() { None } else { Some(c.leading_coefficient_at(t0)?) });
        }
        let vmin = lead.iter().flatten().map(|(v, _)| *v).min().ok_or(Error::ZeroPolynomial)?;
        let coords = lead
            .into_iter()
            .map(|e| match e {
                Some((v, c)) if v == vmin => c,
                _ => Q::from(0),
            })
            .collect();
        ProjPoint::new(coords).ok_or(Error::ZeroPolynomial)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, Poly, QT};
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let p = ProjPoint::new(vec![q(-12, 1), q(13, 1), q(-3, 1)]).unwrap();
        assert_eq!(p.coords(), &[q(12, 1), q(-13, 1), q(3, 1)]);
        let r = ProjPoint::new(vec![q(0, 1), q(-1, 2), q(1, 3)]).unwrap();
        assert_eq!(r.coords(), &[q(0, 1), q(3, 1), q(-2, 1)]);
        assert!(ProjPoint::<Q>::new(vec![q(0, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn limit_of_qt_point() {
        // (1/t : 1 : t) → (1 : 0 : 0)
        let t = QT::var();
        let p = ProjPoint::new(vec![t.inv().unwrap(), QT::one(), t]).unwrap();
        assert_eq!(p.limit_at(&Q::zero()).unwrap().coords(), &[q(1, 1), q(0, 1), q(0, 1)]);
        let s = QT::from_poly(Poly::linear(q(-1, 1), q(1, 1)));
        let p2 = ProjPoint::new(vec![s.clone(), s * QT::from_i64(2)]).unwrap();
        assert_eq!(p2.limit_at(&q(1, 1)).unwrap().coords(), &[q(1, 1), q(2, 1)]);
    }

    proptest! {
        #[test]
        fn normalization_is_scale_invariant(
            v in prop::collection::vec((-9i64..10, 1i64..6), 1..5),
            s in (-7i64..8, 1i64..6),
        ) {
            prop_assume!(s.0 != 0);
            let x: Vec<Q> = v.iter().map(|&(n, d)| q(n, d)).collect();
            prop_assume!(x.iter().any(|c| !c.is_zero()));
            let s = q(s.0, s.1);
            let a = ProjPoint::new(x.clone()).unwrap();
            let b = ProjPoint::new(x.iter().map(|c| c.clone() * s.clone()).collect()).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(ProjPoint::new(a.coords().to_vec()).unwrap(), a);
        }
    }
}
