use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exact::{Field, Q};

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point<F> {
    Finite(F),
    Infinity,
}

impl<F> Point<F> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn finite(&self) -> Option<&F> {
        match self {
            Point::Finite(x) => Some(x),
            Point::Infinity => None,
        }
    }
}

/// z ↦ (αz + β)/(γz + δ) with αδ − βγ ≠ 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius {
    m: [Q; 4],
}

impl Mobius {
    pub fn new(a: Q, b: Q, c: Q, d: Q) -> Result<Self> {
        if (a.clone() * d.clone() - b.clone() * c.clone()).is_zero() {
            return Err(Error::InvalidInput("degenerate fractional linear map".into()));
        }
        Ok(Mobius { m: [a, b, c, d] })
    }

    /// The unique map sending (p, q, r) to (0, 1, ∞).
    pub fn normalizing(p: &Point<Q>, q: &Point<Q>, r: &Point<Q>) -> Result<Self> {
        use Point::*;
        let (a, b, c, d) = match (p, q, r) {
            (Finite(p), Finite(q), Infinity) => (Q::one(), -p.clone(), Q::zero(), q.clone() - p.clone()),
            (Infinity, Finite(q), Finite(r)) => (Q::zero(), q.clone() - r.clone(), Q::one(), -r.clone()),
            (Finite(p), Infinity, Finite(r)) => (Q::one(), -p.clone(), Q::one(), -r.clone()),
            (Finite(p), Finite(q), Finite(r)) => {
                let qr = q.clone() - r.clone();
                let qp = q.clone() - p.clone();
                (qr.clone(), -(p.clone() * qr), qp.clone(), -(r.clone() * qp))
            }
            _ => return Err(Error::InvalidInput("normalizing triple must be distinct".into())),
        };
        Mobius::new(a, b, c, d)
    }

    pub fn apply(&self, z: &Point<Q>) -> Point<Q> {
        let [a, b, c, d] = &self.m;
        match z {
            Point::Finite(z) => {
                let den = c.clone() * z.clone() + d.clone();
                match (a.clone() * z.clone() + b.clone()).checked_div(&den) {
                    Some(v) => Point::Finite(v),
                    None => Point::Infinity,
                }
            }
            Point::Infinity => match a.checked_div(c) {
                Some(v) => Point::Finite(v),
                None => Point::Infinity,
            },
        }
    }
}

/// Pairwise distinct poles t₁, …, tₙ. Chart configurations list the finite
/// poles first and end with (0, 1, ∞).
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfig {
    points: Vec<Point<Q>>,
}

impl PointConfig {
    pub fn new(points: Vec<Point<Q>>) -> Result<Self> {
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::InvalidInput(format!("poles {} and {} coincide", j + 1, i + 1)));
                }
            }
        }
        Ok(PointConfig { points })
    }

    /// (t₁, …, t_{n−3}, 0, 1, ∞).
    pub fn chart(t: &[Q]) -> Result<Self> {
        let mut pts: Vec<Point<Q>> = t.iter().cloned().map(Point::Finite).collect();
        pts.extend([Point::Finite(Q::zero()), Point::Finite(Q::one()), Point::Infinity]);
        PointConfig::new(pts)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point<Q> {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point<Q>] {
        &self.points
    }

    /// Whether the last three poles are (0, 1, ∞).
    pub fn is_normalized(&self) -> bool {
        let n = self.points.len();
        n >= 3
            && self.points[n - 3] == Point::Finite(Q::zero())
            && self.points[n - 2] == Point::Finite(Q::one())
            && self.points[n - 1] == Point::Infinity
    }

    /// The finite chart poles t₁, …, t_{n−3} of a normalized configuration.
    pub fn chart_poles(&self) -> Result<Vec<Q>> {
        if !self.is_normalized() {
            return Err(Error::InvalidInput("configuration does not end with 0, 1, ∞".into()));
        }
        Ok(self.points[..self.points.len() - 3]
            .iter()
            .map(|p| p.finite().expect("only the last pole is infinite").clone())
            .collect())
    }

    /// Move the last three poles to (0, 1, ∞) and return the map used.
    pub fn normalize(&self) -> Result<(Mobius, PointConfig)> {
        let n = self.points.len();
        if n < 3 {
            return Err(Error::InvalidInput("at least three poles are needed".into()));
        }
        let m = Mobius::normalizing(&self.points[n - 3], &self.points[n - 2], &self.points[n - 1])?;
        let pts = self.points.iter().map(|p| m.apply(p)).collect();
        Ok((m, PointConfig::new(pts)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use alloc::vec;

    fn fin(n: i64, d: i64) -> Point<Q> {
        Point::Finite(q(n, d))
    }

    #[test]
    fn normalization_fixes_last_three() {
        let cfg = PointConfig::new(vec![fin(5, 1), fin(-1, 1), Point::Infinity, fin(3, 1), fin(2, 1)]).unwrap();
        let (m, norm) = cfg.normalize().unwrap();
        assert!(norm.is_normalized());
        assert_eq!(m.apply(&Point::Infinity), fin(0, 1));
        assert_eq!(m.apply(&fin(3, 1)), fin(1, 1));
        assert_eq!(m.apply(&fin(2, 1)), Point::Infinity);
        assert_eq!(norm.point(0), &m.apply(&fin(5, 1)));
    }

    #[test]
    fn chart_config() {
        let cfg = PointConfig::chart(&[q(2, 1), q(3, 1)]).unwrap();
        assert_eq!(cfg.len(), 5);
        assert_eq!(cfg.chart_poles().unwrap(), vec![q(2, 1), q(3, 1)]);
        assert!(PointConfig::chart(&[q(1, 1)]).is_err());
    }

    #[test]
    fn every_infinite_position_normalizes() {
        for pos in 0..3 {
            let mut pts = vec![fin(7, 2), fin(-2, 1), fin(4, 1)];
            pts[pos] = Point::Infinity;
            let mut all = vec![fin(9, 1)];
            all.extend(pts);
            let (_, norm) = PointConfig::new(all).unwrap().normalize().unwrap();
            assert!(norm.is_normalized());
        }
    }
}
