use alloc::format;
use core::cmp::Ordering;
use alloc::vec;
use alloc::vec::Vec;

use super::bundle::{bits, mask_of, ParabolicBundle, Section};
use super::points::PointConfig;
use super::walls::Wall;
use super::weights::Weights;
use crate::error::{Error, Result};
use crate::exact::{strictly_feasible, Field, LinearConstraint, Q};

/// Largest pole count for exhaustive subset enumeration.
pub const MAX_POLES: usize = 16;

fn check_size(b: &ParabolicBundle, w: Option<&Weights>) -> Result<()> {
    if b.len() > MAX_POLES {
        return Err(Error::InvalidInput(format!("{} poles exceed the enumeration cap", b.len())));
    }
    if let Some(w) = w {
        if w.len() != b.len() {
            return Err(Error::InvalidInput("weight count differs from pole count".into()));
        }
    }
    Ok(())
}

fn index_mask(d: i64, w: &Weights, k: i64, mask: u64) -> Q {
    Q::from(d - 2 * k) + w.signed_sum(mask)
}

/// d − 2k + Σ_{i∉I} wᵢ − Σ_{i∈I} wᵢ for a degree-k subbundle through the
/// parabolics of I.
pub fn stability_index(degree: i64, w: &Weights, k: i64, subset: &[usize]) -> Q {
    index_mask(degree, w, k, mask_of(subset))
}

/// Smallest subbundle degree that can have nonpositive index.
fn k_min(d: i64, n: usize) -> i64 {
    (d - n as i64).div_euclid(2) + (d - n as i64).rem_euclid(2)
}

/// A subbundle (k, I) with index ≤ 0 (strict) or < 0 (semistable test).
///
/// It suffices to find any nonzero map O(k) → E through I: its saturation has
/// degree k + #zeros and loses at most the parabolics at those zeros, so its
/// index is at most that of (k, I) because weights are ≤ 1.
fn destabilizer(b: &ParabolicBundle, config: &PointConfig, w: &Weights, strict: bool) -> Result<Option<(i64, u64)>> {
    check_size(b, Some(w))?;
    let (n, d) = (b.len(), b.degree());
    for k in k_min(d, n)..=b.splitting().0 {
        for mask in 0u64..1 << n {
            let idx = index_mask(d, w, k, mask);
            let bad = if strict { idx.cmp_zero() != Ordering::Greater } else { idx.is_negative() };
            if bad && !b.section_space(config, k, mask).is_empty() {
                return Ok(Some((k, mask)));
            }
        }
    }
    Ok(None)
}

pub fn is_stable(b: &ParabolicBundle, config: &PointConfig, w: &Weights) -> Result<bool> {
    Ok(destabilizer(b, config, w, true)?.is_none())
}

pub fn is_semistable(b: &ParabolicBundle, config: &PointConfig, w: &Weights) -> Result<bool> {
    Ok(destabilizer(b, config, w, false)?.is_none())
}

/// A destabilizing pair (k, I) with 0-based I, if any.
pub fn destabilizing_subbundle(
    b: &ParabolicBundle,
    config: &PointConfig,
    w: &Weights,
) -> Result<Option<(i64, Vec<usize>)>> {
    Ok(destabilizer(b, config, w, true)?.map(|(k, m)| (k, bits(m, b.len()).collect())))
}

/// A splitting E = L₁ ⊕ L₂ carrying every parabolic: the parabolics on L₁ and
/// sections spanning L₁ ≅ O(e₁) and L₂ ≅ O(e₂).
///
/// By uniqueness of the splitting type the summands have degrees e₁ and e₂, and
/// two such maps span E exactly when their (constant) wedge is nonzero.
pub fn decomposition(b: &ParabolicBundle, config: &PointConfig) -> Result<Option<(Vec<usize>, Section, Section)>> {
    check_size(b, None)?;
    let n = b.len();
    let full = (1u64 << n) - 1;
    let (e1, e2) = b.splitting();
    for mask in 0..=full {
        let k1 = b.section_space(config, e1, mask);
        if k1.is_empty() {
            continue;
        }
        let k2 = b.section_space(config, e2, full & !mask);
        for s in &k1 {
            for t in &k2 {
                if !s.wedge(t).is_zero() {
                    return Ok(Some((bits(mask, n).collect(), s.clone(), t.clone())));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_undecomposable(b: &ParabolicBundle, config: &PointConfig) -> Result<bool> {
    Ok(decomposition(b, config)?.is_none())
}

/// Only scalar parabolic endomorphisms.
pub fn is_simple(b: &ParabolicBundle, config: &PointConfig) -> Result<bool> {
    Ok(b.endomorphism_dim(config)? == 1)
}

/// A weight vector for which an undecomposable bundle is stable, by reduction to
/// the trivial splitting: Elm⁻ at e₁ − e₂ parabolics off the O(e₁) factor, put
/// weight ½ on three pairwise distinct directions and 0 elsewhere, then flip
/// w ↦ 1 − w at the transformed poles.
pub fn exists_stabilizing_weight(b: &ParabolicBundle, config: &PointConfig) -> Result<Option<Weights>> {
    if !is_undecomposable(b, config)? {
        return Ok(None);
    }
    let (e1, e2) = b.splitting();
    let gap = (e1 - e2) as usize;
    // Off O(e₁) means a nonzero second coordinate, in ê or ε alike; such
    // directions stay off the new first factor after each Elm⁻ below.
    let off: Vec<usize> = (0..b.len()).filter(|&i| !b.direction(i).coords()[1].is_zero()).collect();
    if off.len() < gap {
        return Ok(None);
    }
    let mut cur = b.clone();
    for &i in &off[..gap] {
        cur = cur.elm_minus(config, i)?;
    }
    debug_assert_eq!(cur.splitting().0, cur.splitting().1);
    let n = b.len();
    let mut chosen: Vec<usize> = Vec::new();
    for i in 0..n {
        if chosen.iter().all(|&j| cur.direction(j) != cur.direction(i)) {
            chosen.push(i);
            if chosen.len() == 3 {
                break;
            }
        }
    }
    if chosen.len() < 3 {
        return Ok(None);
    }
    let half = Q::new(1, 2);
    let mut w: Vec<Q> = (0..n).map(|i| if chosen.contains(&i) { half.clone() } else { Q::zero() }).collect();
    for &i in &off[..gap] {
        w[i] = Q::one() - w[i].clone();
    }
    Ok(Some(Weights::new(w)?))
}

/// The open set of stabilizing weights, cut out of (0, 1)ⁿ by one strict
/// inequality per saturated subbundle (k, I) whose wall meets the cube.
#[derive(Clone, Debug, PartialEq)]
pub struct StableChamber {
    /// Each bounding wall as its (k, I) subbundle; the chamber lies on its positive side.
    pub walls: Vec<Wall>,
    /// An interior rational point.
    pub sample: Weights,
}

/// The chamber of weights for which `b` is stable, found by exact strict
/// feasibility over every saturated subbundle rather than by construction.
///
/// A saturated (k, I) with 2k − d ≥ #I₂ has negative index on the whole open
/// cube, one with 2k − d ≤ −#I₁ positive index there; the rest contribute the
/// half-space on the positive side of their wall. Stability at w means exactly
/// that every such half-space contains w, so `None` is a proof of emptiness.
pub fn stabilizing_chamber(b: &ParabolicBundle, config: &PointConfig) -> Result<Option<StableChamber>> {
    check_size(b, None)?;
    let (n, d) = (b.len(), b.degree());
    let mut walls = Vec::new();
    for k in k_min(d, n)..=b.splitting().0 {
        for mask in 0u64..1 << n {
            let (i1, s) = (mask.count_ones() as i64, 2 * k - d);
            if s <= -i1 || b.saturated_in(&b.section_space(config, k, mask)).is_none() {
                continue;
            }
            if s >= n as i64 - i1 {
                return Ok(None);
            }
            walls.push(Wall::new(n, d, k, &bits(mask, n).collect::<Vec<_>>())?);
        }
    }
    let mut cs = cube_constraints(n);
    // value > 0  ⇔  −normal·w < d − 2k
    cs.extend(walls.iter().map(|w| LinearConstraint {
        coeffs: w.normal().into_iter().map(|c| -c).collect(),
        rhs: Q::from(w.constant()),
        strict: true,
    }));
    Ok(strictly_feasible(n, &cs).map(|x| StableChamber { walls, sample: Weights::new(x).expect("inside the cube") }))
}

fn cube_constraints(n: usize) -> Vec<LinearConstraint> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = -Q::one();
        out.push(LinearConstraint { coeffs: e.clone(), rhs: Q::zero(), strict: true });
        e[i] = Q::one();
        out.push(LinearConstraint { coeffs: e, rhs: Q::one(), strict: true });
    }
    out
}

/// Splitting gap at most one and no degree-k subbundle through more than
/// m + 1 parabolics, m = d − 2k.
pub fn is_generic(b: &ParabolicBundle, config: &PointConfig) -> Result<bool> {
    check_size(b, None)?;
    let (e1, e2) = b.splitting();
    if e1 - e2 > 1 {
        return Ok(false);
    }
    let (n, d) = (b.len() as i64, b.degree());
    for k in k_min(d + 2, n as usize)..=e1 {
        let size = (d - 2 * k + 2).max(0);
        if size > n {
            continue;
        }
        for mask in 0u64..1 << n {
            if mask.count_ones() as i64 == size
                && b.saturated_in(&b.section_space(config, k, mask)).is_some()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership in the projective chart of degree −1 bundles: O ⊕ O(−1), no
/// parabolic on O, and not every parabolic on one O(−1).
pub fn main_chart_membership(b: &ParabolicBundle, config: &PointConfig) -> Result<bool> {
    if b.degree() != -1 {
        return Err(Error::InvalidInput(format!("degree {} instead of −1", b.degree())));
    }
    if b.splitting() != (0, -1) {
        return Ok(false);
    }
    if b.directions().iter().any(|l| l.coords()[1].is_zero()) {
        return Ok(false);
    }
    let all: Vec<usize> = (0..b.len()).collect();
    Ok(!b.subbundle_exists(config, -1, &all)?)
}
