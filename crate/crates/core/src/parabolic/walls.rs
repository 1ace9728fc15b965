use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::bundle::{bits, direction, mask_of, ParabolicBundle};
use super::weights::Weights;
use crate::error::{Error, Result};
use crate::exact::{strictly_feasible, Field, LinearConstraint, Q};

/// The hyperplane d − 2k − Σ_{I₁} wᵢ + Σ_{I₂} wᵢ = 0 where degree-k subbundles
/// through the parabolics of I₁ change stability.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    n: usize,
    degree: i64,
    k: i64,
    mask: u64,
}

impl Wall {
    pub fn new(n: usize, degree: i64, k: i64, subset: &[usize]) -> Result<Self> {
        if subset.iter().any(|&i| i >= n) || n > 63 {
            return Err(Error::InvalidInput("wall subset out of range".into()));
        }
        Ok(Wall { n, degree, k, mask: mask_of(subset) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// I₁, 0-based and sorted.
    pub fn subset(&self) -> Vec<usize> {
        bits(self.mask, self.n).collect()
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// The same hyperplane seen from the complementary summand: (d − k, I₂).
    pub fn dual(&self) -> Wall {
        Wall { n: self.n, degree: self.degree, k: self.degree - self.k, mask: self.full() & !self.mask }
    }

    /// Representative whose subset avoids the first pole.
    pub fn canonical(&self) -> Wall {
        if self.mask & 1 == 1 {
            self.dual()
        } else {
            self.clone()
        }
    }

    /// d − 2k.
    pub fn constant(&self) -> i64 {
        self.degree - 2 * self.k
    }

    /// Coefficients of w: −1 on I₁, +1 on I₂.
    pub fn normal(&self) -> Vec<Q> {
        (0..self.n)
            .map(|i| if self.mask >> i & 1 == 1 { -Q::one() } else { Q::one() })
            .collect()
    }

    /// The stability index of a (k, I₁) subbundle at w; zero on the wall.
    pub fn value(&self, w: &Weights) -> Q {
        Q::from(self.constant()) + w.signed_sum(self.mask)
    }

    /// Whether the hyperplane cuts the open cube: −#I₁ < 2k − d < #I₂.
    pub fn meets_open_cube(&self) -> bool {
        let i1 = self.mask.count_ones() as i64;
        let s = 2 * self.k - self.degree;
        -i1 < s && s < self.n as i64 - i1
    }
}

/// Every wall meeting (0, 1)ⁿ once, in canonical form, sorted.
pub fn wall_list(n: usize, d: i64) -> Vec<Wall> {
    assert!(n <= 20, "wall enumeration is exponential in n");
    let mut out = Vec::new();
    for mask in (0u64..1 << n).filter(|m| m & 1 == 0) {
        let i1 = mask.count_ones() as i64;
        // −#I₁ < 2k − d < n − #I₁
        let lo = (d - i1).div_euclid(2) + 1;
        for k in lo.. {
            if 2 * k - d >= n as i64 - i1 {
                break;
            }
            let w = Wall { n, degree: d, k, mask };
            if w.meets_open_cube() {
                out.push(w);
            }
        }
    }
    out.sort();
    out
}

/// The inequalities m − Σ_{I₁} wᵢ + Σ_{I₂} wᵢ > 0 with #I₁ = m + 1, m ≡ d mod 2,
/// m ≥ −1, each written as the wall (k = (d − m)/2, I₁).
pub fn admissibility_walls(n: usize, d: i64) -> Vec<Wall> {
    let mut out = Vec::new();
    let mut m = if d.rem_euclid(2) == 1 { -1 } else { 0 };
    while m < n as i64 {
        for mask in (0u64..1 << n).filter(|x| x.count_ones() as i64 == m + 1) {
            out.push(Wall { n, degree: d, k: (d - m) / 2, mask });
        }
        m += 2;
    }
    out
}

/// Off every wall and satisfying every admissibility inequality. On-wall input
/// is rejected.
pub fn is_admissible(w: &Weights, d: i64) -> Result<bool> {
    let n = w.len();
    if let Some(wall) = wall_list(n, d).into_iter().find(|x| x.value(w).is_zero()) {
        return Err(Error::InvalidInput(format!(
            "weight lies on the wall k = {}, I = {:?}",
            wall.k,
            wall.subset().iter().map(|i| i + 1).collect::<Vec<_>>()
        )));
    }
    Ok(admissibility_walls(n, d).iter().all(|x| x.value(w).cmp_zero() == Ordering::Greater))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Chamber {
    /// Sign of each cutting wall's value, ±1.
    pub signs: Vec<i8>,
    /// An interior rational point.
    pub sample: Vec<Q>,
}

/// Chambers cut out inside the admissible region {every admissibility
/// inequality holds} ∩ (0, 1)ⁿ by the remaining walls.
#[derive(Clone, Debug, PartialEq)]
pub struct ChamberReport {
    pub n: usize,
    pub degree: i64,
    /// Walls bounding the admissible region.
    pub region: Vec<Wall>,
    /// Walls cutting the region into chambers.
    pub cutting: Vec<Wall>,
    pub chambers: Vec<Chamber>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Location {
    OnWall(Wall),
    /// Some admissibility inequality fails: no generic bundle is stable.
    Empty,
    Chamber(usize),
}

impl ChamberReport {
    pub fn locate(&self, w: &Weights) -> Location {
        for wall in self.region.iter().chain(&self.cutting) {
            if wall.value(w).is_zero() {
                return Location::OnWall(wall.clone());
            }
        }
        let region_ok = admissibility_walls(self.n, self.degree)
            .iter()
            .all(|x| x.value(w).cmp_zero() == Ordering::Greater);
        if !region_ok {
            return Location::Empty;
        }
        let signs: Vec<i8> = self
            .cutting
            .iter()
            .map(|x| if x.value(w).is_negative() { -1 } else { 1 })
            .collect();
        match self.chambers.iter().position(|c| c.signs == signs) {
            Some(i) => Location::Chamber(i),
            None => Location::Empty,
        }
    }
}

/// Sign-vector enumeration with an exact strict-feasibility test per pattern.
pub fn chamber_census(n: usize, d: i64) -> Result<ChamberReport> {
    let walls = wall_list(n, d);
    let adm: Vec<Wall> = admissibility_walls(n, d).iter().map(Wall::canonical).collect();
    let (region, cutting): (Vec<Wall>, Vec<Wall>) = walls.into_iter().partition(|w| adm.contains(w));
    if cutting.len() > 20 {
        return Err(Error::InvalidInput(format!("{} cutting walls are too many to enumerate", cutting.len())));
    }
    let mut base: Vec<LinearConstraint> = Vec::new();
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = -Q::one();
        base.push(LinearConstraint { coeffs: e.clone(), rhs: Q::zero(), strict: true });
        e[i] = Q::one();
        base.push(LinearConstraint { coeffs: e, rhs: Q::one(), strict: true });
    }
    // value > 0  ⇔  −normal·w < constant
    let positive = |wall: &Wall, sign: i64| LinearConstraint {
        coeffs: wall.normal().into_iter().map(|c| -c * Q::from(sign)).collect(),
        rhs: Q::from(sign * wall.constant()),
        strict: true,
    };
    for wall in admissibility_walls(n, d) {
        base.push(positive(&wall, 1));
    }
    let mut chambers = Vec::new();
    for code in 0u64..1 << cutting.len() {
        let signs: Vec<i8> = (0..cutting.len()).map(|j| if code >> j & 1 == 1 { -1 } else { 1 }).collect();
        let mut cs = base.clone();
        cs.extend(cutting.iter().zip(&signs).map(|(w, &s)| positive(w, s as i64)));
        if let Some(sample) = strictly_feasible(n, &cs) {
            chambers.push(Chamber { signs, sample });
        }
    }
    Ok(ChamberReport { n, degree: d, region, cutting, chambers })
}

/// The census on [0, 1]⁴ in degree 0.
pub fn chamber_census_n4() -> ChamberReport {
    chamber_census(4, 0).expect("four cutting walls")
}

/// Trivial bundle with lᵢ spanned by (1, εvᵢ) for i ∈ I₁ and (εuᵢ, 1)
/// otherwise; ε → 0 lands on either side of the wall H₀(0, I₁).
pub fn wall_crossing_family(eps: &Q, i1: &[usize], u: &[Q], v: &[Q]) -> Result<ParabolicBundle> {
    if u.len() != v.len() || i1.iter().any(|&i| i >= u.len()) {
        return Err(Error::InvalidInput("family data length mismatch".into()));
    }
    let dirs = (0..u.len())
        .map(|i| {
            if i1.contains(&i) {
                direction(Q::one(), eps.clone() * v[i].clone())
            } else {
                direction(eps.clone() * u[i].clone(), Q::one())
            }
        })
        .collect();
    ParabolicBundle::new(0, 0, dirs)
}
