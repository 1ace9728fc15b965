use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::catalog::{Catalog, CurveTag};
use crate::error::{Error, Result};
use crate::exact::{Field, Poly, ProjPoint, Q};
use crate::parabolic::{direction, is_undecomposable, ParabolicBundle, Section};

/// Special bundles of the n = 5 picture that are points rather than curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialPoint {
    /// The undecomposable bundle on O(1) ⊕ O(−2).
    D,
    /// O ⊕ O(−1) with the four parabolics other than the i-th on one O(−1).
    DI(usize),
    /// O ⊕ O(−1) with the i-th and j-th parabolics on O, i < j.
    DIJ(usize, usize),
}

impl SpecialPoint {
    pub fn all() -> Vec<SpecialPoint> {
        let mut v = vec![SpecialPoint::D];
        v.extend((0..5).map(SpecialPoint::DI));
        for i in 0..5 {
            for j in i + 1..5 {
                v.push(SpecialPoint::DIJ(i, j));
            }
        }
        v
    }
}

impl fmt::Display for SpecialPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialPoint::D => write!(f, "D"),
            SpecialPoint::DI(i) => write!(f, "D_{}", i + 1),
            SpecialPoint::DIJ(i, j) => write!(f, "D_{}{}", i + 1, j + 1),
        }
    }
}

/// Position of a degree −1 bundle with respect to the special loci.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleClass {
    /// In the main chart and off every special curve.
    Generic,
    /// A member of one special curve and of no other.
    Curve(CurveTag),
    Point(SpecialPoint),
    /// Anything else (decomposable, several coincidences, other splittings).
    Other,
}

/// Deterministic stream of rationals for building generic members.
#[derive(Clone, Debug)]
pub struct SampleStream {
    state: u64,
}

impl SampleStream {
    pub fn new(seed: u64) -> Self {
        SampleStream { state: seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xD1B5_4A32_D192_ED03 }
    }

    pub fn next_q(&mut self) -> Q {
        // xorshift64*: statistical quality is irrelevant, only determinism.
        self.state ^= self.state >> 12;
        self.state ^= self.state << 25;
        self.state ^= self.state >> 27;
        let r = self.state.wrapping_mul(0x2545_F491_4F6C_DD1D);
        let num = (r % 41) as i64 - 20;
        let den = ((r >> 32) % 6) as i64 + 1;
        Q::new(num, den)
    }
}

fn on_o() -> ProjPoint<Q> {
    direction(Q::one(), Q::zero())
}

fn generic_dir(s: &mut SampleStream) -> ProjPoint<Q> {
    direction(s.next_q(), Q::one())
}

fn random_poly(s: &mut SampleStream, deg: usize) -> Poly<Q> {
    Poly::new((0..=deg).map(|_| s.next_q()).collect())
}

/// Fiber values of a map O(k) → O ⊕ O(−1) at the five poles.
fn section_dirs(catalog: &Catalog, sec: &Section) -> Option<Vec<ProjPoint<Q>>> {
    catalog
        .config()
        .points()
        .iter()
        .map(|p| {
            let v = sec.value_at((0, -1), p);
            ProjPoint::new(v.to_vec())
        })
        .collect()
}

fn member(
    catalog: &Catalog,
    target: BundleClass,
    seed: u64,
    build: impl Fn(&mut SampleStream) -> Option<ParabolicBundle>,
) -> Result<ParabolicBundle> {
    for attempt in 0..200 {
        let mut s = SampleStream::new(seed.wrapping_mul(1_000_003).wrapping_add(attempt));
        if let Some(b) = build(&mut s) {
            if classify(catalog, &b)? == target {
                return Ok(b);
            }
        }
    }
    Err(Error::Indeterminate(format!("no representative found for {target:?}")))
}

/// A generic member of a catalog curve; different seeds give different members.
pub fn curve_representative(catalog: &Catalog, tag: CurveTag, seed: u64) -> Result<ParabolicBundle> {
    member(catalog, BundleClass::Curve(tag), seed, |s| {
        let mut dirs: Vec<ProjPoint<Q>> = (0..5).map(|_| generic_dir(s)).collect();
        match tag {
            CurveTag::Exceptional(i) => dirs[i] = on_o(),
            CurveTag::Line(i, j) => {
                // The other three poles on one O(−1): f of degree ≤ 1, g = 1.
                let sec = Section { degree: -1, f: random_poly(s, 1), g: Poly::new(vec![Q::one()]) };
                let vals = section_dirs(catalog, &sec)?;
                for k in (0..5).filter(|&k| k != i && k != j) {
                    dirs[k] = vals[k].clone();
                }
            }
            CurveTag::Conic => {
                let sec = Section { degree: -2, f: random_poly(s, 2), g: random_poly(s, 1) };
                dirs = section_dirs(catalog, &sec)?;
            }
        }
        ParabolicBundle::new(0, -1, dirs).ok()
    })
}

pub fn point_representative(catalog: &Catalog, p: SpecialPoint, seed: u64) -> Result<ParabolicBundle> {
    member(catalog, BundleClass::Point(p), seed, |s| {
        let mut dirs: Vec<ProjPoint<Q>> = (0..5).map(|_| generic_dir(s)).collect();
        match p {
            SpecialPoint::D => return ParabolicBundle::new(1, -2, dirs).ok(),
            SpecialPoint::DI(i) => {
                let sec = Section { degree: -1, f: random_poly(s, 1), g: Poly::new(vec![Q::one()]) };
                let vals = section_dirs(catalog, &sec)?;
                for k in (0..5).filter(|&k| k != i) {
                    dirs[k] = vals[k].clone();
                }
            }
            SpecialPoint::DIJ(i, j) => {
                dirs[i] = on_o();
                dirs[j] = on_o();
            }
        }
        ParabolicBundle::new(0, -1, dirs).ok()
    })
}

/// A bundle of the main chart off every special curve.
pub fn generic_representative(catalog: &Catalog, seed: u64) -> Result<ParabolicBundle> {
    member(catalog, BundleClass::Generic, seed, |s| {
        ParabolicBundle::new(0, -1, (0..5).map(|_| generic_dir(s)).collect()).ok()
    })
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Locate a degree −1 bundle among the special loci.
pub fn classify(catalog: &Catalog, b: &ParabolicBundle) -> Result<BundleClass> {
    let config = catalog.config();
    if b.len() != 5 || b.degree() != -1 {
        return Err(Error::InvalidInput("expected a degree −1 bundle with five parabolics".into()));
    }
    match b.splitting() {
        (1, -2) => {
            return Ok(if is_undecomposable(b, config)? {
                BundleClass::Point(SpecialPoint::D)
            } else {
                BundleClass::Other
            })
        }
        (0, -1) => {}
        _ => return Ok(BundleClass::Other),
    }
    let on: Vec<usize> = (0..5).filter(|&i| b.direction(i).coords()[1].is_zero()).collect();
    let all: Vec<usize> = (0..5).collect();
    let line_sets: Vec<Vec<usize>> = subsets(5, 3)
        .into_iter()
        .filter(|s| b.subbundle_exists(config, -1, s).unwrap_or(false))
        .collect();
    let conic = b.subbundle_exists(config, -2, &all)?;
    let four_sets: Vec<Vec<usize>> = subsets(5, 4)
        .into_iter()
        .filter(|s| b.subbundle_exists(config, -1, s).unwrap_or(false))
        .collect();
    let special = usize::from(conic) + line_sets.len();
    Ok(match on.as_slice() {
        [i] if special == 0 => BundleClass::Curve(CurveTag::Exceptional(*i)),
        [i, j] if special == 0 => BundleClass::Point(SpecialPoint::DIJ(*i, *j)),
        [] => match (conic, line_sets.as_slice(), four_sets.as_slice()) {
            (false, [], []) => BundleClass::Generic,
            (true, [], []) => BundleClass::Curve(CurveTag::Conic),
            (false, [s], []) => {
                let rest: Vec<usize> = (0..5).filter(|k| !s.contains(k)).collect();
                BundleClass::Curve(CurveTag::line(rest[0], rest[1]))
            }
            (false, _, [s]) => {
                let i = (0..5).find(|k| !s.contains(k)).expect("four of five");
                BundleClass::Point(SpecialPoint::DI(i))
            }
            _ => BundleClass::Other,
        },
        _ => BundleClass::Other,
    })
}
