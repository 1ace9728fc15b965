use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::catalog::{Catalog, CurveTag};
use super::special::{curve_representative, point_representative, SpecialPoint};
use crate::error::Result;
use crate::exact::Q;
use crate::parabolic::{is_stable, Weights};

/// Members tested per curve: containment means every tested generic member is
/// stable.
pub const MEMBERS_PER_CURVE: u64 = 3;

/// The seven charts covering the n = 5 moduli space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    /// Democratic weight in (1/5, 1/3): the projective plane P²_b.
    V,
    /// Democratic weight in (1/3, 3/5): its blow-up at the five Dᵢ.
    VHat,
    /// wᵢ = w and the other four weights 1 − w.
    VI(usize),
}

impl Chart {
    pub fn all() -> Vec<Chart> {
        let mut v = vec![Chart::V, Chart::VHat];
        v.extend((0..5).map(Chart::VI));
        v
    }

    /// Chamber representative: w = 1/4 for V and Vᵢ, 2/5 for V̂.
    pub fn weights(&self) -> Weights {
        let quarter = Q::new(1, 4);
        let w = match self {
            Chart::V => vec![quarter; 5],
            Chart::VHat => vec![Q::new(2, 5); 5],
            Chart::VI(i) => (0..5).map(|k| if k == *i { Q::new(1, 4) } else { Q::new(3, 4) }).collect(),
        };
        Weights::new(w).expect("weights in the open cube")
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chart::V => write!(f, "V"),
            Chart::VHat => write!(f, "V_hat"),
            Chart::VI(i) => write!(f, "V_{}", i + 1),
        }
    }
}

/// A special point or a special curve of the bundle side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialObject {
    Point(SpecialPoint),
    Curve(CurveTag),
}

impl fmt::Display for SpecialObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialObject::Point(p) => p.fmt(f),
            SpecialObject::Curve(c) => c.fmt(f),
        }
    }
}

impl SpecialObject {
    pub fn all() -> Vec<SpecialObject> {
        let mut v: Vec<SpecialObject> = SpecialPoint::all().into_iter().map(SpecialObject::Point).collect();
        v.extend(CurveTag::all().into_iter().map(SpecialObject::Curve));
        v
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipTable {
    pub charts: Vec<Chart>,
    pub rows: Vec<(SpecialObject, Vec<bool>)>,
}

impl MembershipTable {
    pub fn contains(&self, chart: Chart, obj: SpecialObject) -> bool {
        let c = self.charts.iter().position(|&x| x == chart).expect("known chart");
        self.rows.iter().find(|(o, _)| *o == obj).expect("known object").1[c]
    }

    /// Check the six containment statements of the atlas, returning the failed
    /// statements by number (1-based).
    pub fn failed_statements(&self) -> Vec<usize> {
        use SpecialObject::{Curve, Point};
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let checks: [bool; 6] = [
            (0..5).all(|i| self.contains(Chart::VI(i), Point(SpecialPoint::D))),
            (0..5).all(|i| self.contains(Chart::V, Point(SpecialPoint::DI(i)))),
            pairs.iter().all(|&(i, j)| {
                let p = Point(SpecialPoint::DIJ(i, j));
                self.contains(Chart::VI(i), p) && self.contains(Chart::VI(j), p)
            }),
            self.contains(Chart::V, Curve(CurveTag::Conic)) && self.contains(Chart::VHat, Curve(CurveTag::Conic)),
            (0..5).all(|i| {
                let c = Curve(CurveTag::Exceptional(i));
                self.contains(Chart::VHat, c) && (0..5).all(|j| self.contains(Chart::VI(j), c))
            }),
            pairs.iter().all(|&(i, j)| {
                let c = Curve(CurveTag::Line(i, j));
                self.contains(Chart::V, c)
                    && self.contains(Chart::VHat, c)
                    && (0..5).filter(|&k| k != i && k != j).all(|k| self.contains(Chart::VI(k), c))
            }),
        ];
        (1..=6).filter(|k| !checks[k - 1]).collect()
    }
}

/// Membership of every special object in every chart by stability under the
/// chart's weight representative.
pub fn chart_membership_table(catalog: &Catalog) -> Result<MembershipTable> {
    let charts = Chart::all();
    let config = catalog.config();
    let mut rows = Vec::new();
    for obj in SpecialObject::all() {
        let reps = match obj {
            SpecialObject::Point(p) => vec![point_representative(catalog, p, 1)?],
            SpecialObject::Curve(c) => (1..=MEMBERS_PER_CURVE)
                .map(|seed| curve_representative(catalog, c, seed))
                .collect::<Result<Vec<_>>>()?,
        };
        let mut row = Vec::with_capacity(charts.len());
        for chart in &charts {
            let w = chart.weights();
            let mut all = true;
            for r in &reps {
                all &= is_stable(r, config, &w)?;
            }
            row.push(all);
        }
        rows.push((obj, row));
    }
    Ok(MembershipTable { charts, rows })
}
