use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::catalog::{Catalog, CurveTag};
use super::special::{classify, curve_representative, BundleClass, SampleStream};
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, ProjPoint, Q};
use crate::lagrangian::{bun, bun_inverse};
use crate::parabolic::ParabolicBundle;

/// Number of samples on which a fitted map is checked after fitting.
pub const VERIFY_SAMPLES: usize = 20;

/// A rational map of P² given by three forms of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneMap {
    pub degree: u32,
    /// Coefficients of each output form over [`monomials`] of that degree.
    pub forms: [Vec<Q>; 3],
}

/// Exponent triples of degree d, lexicographically decreasing.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut v = Vec::new();
    for i in (0..=d).rev() {
        for j in (0..=d - i).rev() {
            v.push([i, j, d - i - j]);
        }
    }
    v
}

fn eval_monomials(d: u32, x: &[Q]) -> Vec<Q> {
    monomials(d)
        .iter()
        .map(|e| x[0].pow(e[0]) * x[1].pow(e[1]) * x[2].pow(e[2]))
        .collect()
}

impl PlaneMap {
    /// Image of a point; an error at a base point.
    pub fn apply(&self, b: &ProjPoint<Q>) -> Result<ProjPoint<Q>> {
        let m = eval_monomials(self.degree, b.coords());
        let img: Vec<Q> = self
            .forms
            .iter()
            .map(|f| f.iter().zip(&m).fold(Q::zero(), |s, (c, x)| s + c.clone() * x.clone()))
            .collect();
        ProjPoint::new(img).ok_or_else(|| Error::Indeterminate("base point of the map".into()))
    }

    /// Fit forms of degree d with F(x) ∥ y on every pair; `None` unless the
    /// solution is unique up to scale.
    pub fn fit(d: u32, pairs: &[(ProjPoint<Q>, ProjPoint<Q>)]) -> Option<PlaneMap> {
        let nm = monomials(d).len();
        let mut rows = Vec::new();
        for (x, y) in pairs {
            let m = eval_monomials(d, x.coords());
            let y = y.coords();
            // y × F(x) = 0: components (r, s) give y_r F_s − y_s F_r = 0.
            for (r, s) in [(0, 1), (1, 2), (0, 2)] {
                let mut row = vec![Q::zero(); 3 * nm];
                for (k, mk) in m.iter().enumerate() {
                    row[s * nm + k] = y[r].clone() * mk.clone();
                    row[r * nm + k] = -(y[s].clone() * mk.clone());
                }
                rows.push(row);
            }
        }
        let kernel = Matrix::from_rows(rows, 3 * nm).kernel();
        if kernel.len() != 1 {
            return None;
        }
        let v = &kernel[0];
        Some(PlaneMap {
            degree: d,
            forms: [v[..nm].to_vec(), v[nm..2 * nm].to_vec(), v[2 * nm..].to_vec()],
        })
    }
}

/// Elm⁻ at pole i after Elm⁺ at pole j.
pub fn elm_pair(catalog: &Catalog, b: &ParabolicBundle, i: usize, j: usize) -> Result<ParabolicBundle> {
    if i == j {
        return Err(Error::InvalidInput("an Elm pair needs two distinct poles".into()));
    }
    b.elm_plus(catalog.config(), j)?.elm_minus(catalog.config(), i)
}

fn chart_poles(catalog: &Catalog) -> Vec<Q> {
    catalog.config().chart_poles().expect("normalized configuration")
}

/// Transport a main-chart point of P²_b through an Elm pair; `None` when the
/// image leaves the main chart.
pub fn transport_b(catalog: &Catalog, b: &ProjPoint<Q>, i: usize, j: usize) -> Result<Option<ProjPoint<Q>>> {
    let t = chart_poles(catalog);
    let u = match bun_inverse(&t, b) {
        Ok(u) => u,
        Err(_) => return Ok(None),
    };
    let image = elm_pair(catalog, &ParabolicBundle::main_chart(&u), i, j)?;
    match image.main_chart_coordinates(catalog.config()) {
        Ok(v) => Ok(bun(&t, &v).ok()),
        Err(Error::OutOfChart(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Action of one Elm pair: its map of P²_b and the permutation it induces on
/// the sixteen curves (entry k is the image of `CurveTag::all()[k]`).
#[derive(Clone, Debug, PartialEq)]
pub struct ElmPairAction {
    pub minus: usize,
    pub plus: usize,
    pub map: PlaneMap,
    pub permutation: Vec<CurveTag>,
}

/// Transported sample pairs (b, image) from a fixed stream of main-chart points.
fn sample_pairs(catalog: &Catalog, i: usize, j: usize, count: usize, seed: u64) -> Result<Vec<(ProjPoint<Q>, ProjPoint<Q>)>> {
    let t = chart_poles(catalog);
    let mut s = SampleStream::new(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..50 * count {
        if out.len() == count {
            break;
        }
        let u: Vec<Q> = t.iter().map(|_| s.next_q()).collect();
        let Ok(b) = bun(&t, &u) else { continue };
        if let Some(img) = transport_b(catalog, &b, i, j)? {
            out.push((b, img));
        }
    }
    if out.len() < count {
        return Err(Error::Indeterminate("too few transportable samples".into()));
    }
    Ok(out)
}

/// Fit the b-space map of an Elm pair by the lowest degree that is determined
/// by the fitting samples, then check it on fresh samples.
pub fn fit_plane_map(catalog: &Catalog, i: usize, j: usize) -> Result<PlaneMap> {
    let check = sample_pairs(catalog, i, j, VERIFY_SAMPLES, 0xC4EC)?;
    for d in 1..=3u32 {
        // Each sample imposes two conditions on 3·#monomials − 1 unknowns.
        let unknowns = 3 * monomials(d).len() - 1;
        let fit_count = unknowns.div_ceil(2) + 2;
        let fit = sample_pairs(catalog, i, j, fit_count, 0xF17 + d as u64)?;
        let Some(map) = PlaneMap::fit(d, &fit) else { continue };
        let mut ok = true;
        for (x, y) in &check {
            if map.apply(x).ok().as_ref() != Some(y) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(map);
        }
    }
    Err(Error::Indeterminate(format!(
        "no plane map of degree ≤ 3 reproduces the Elm pair ({}, {})",
        i + 1,
        j + 1
    )))
}

/// Image of a catalog curve, read off from a transported generic member.
pub fn curve_image(catalog: &Catalog, tag: CurveTag, i: usize, j: usize) -> Result<CurveTag> {
    let rep = curve_representative(catalog, tag, 1)?;
    match classify(catalog, &elm_pair(catalog, &rep, i, j)?)? {
        BundleClass::Curve(img) => Ok(img),
        other => Err(Error::Indeterminate(format!("image of {tag} classified as {other:?}"))),
    }
}

pub fn elm_pair_action(catalog: &Catalog, i: usize, j: usize) -> Result<ElmPairAction> {
    let map = fit_plane_map(catalog, i, j)?;
    let permutation = CurveTag::all()
        .into_iter()
        .map(|tag| curve_image(catalog, tag, i, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(ElmPairAction { minus: i, plus: j, map, permutation })
}

/// The group generated by all Elm pairs acting on the sixteen curves.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupReport {
    pub generators: Vec<ElmPairAction>,
    pub order: usize,
    pub transitive: bool,
    /// Orbit of the conic.
    pub conic_orbit: Vec<CurveTag>,
}

fn as_indices(perm: &[CurveTag]) -> Vec<usize> {
    perm.iter().map(|t| t.index()).collect()
}

pub fn elm_pair_group(catalog: &Catalog) -> Result<GroupReport> {
    let mut generators = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                generators.push(elm_pair_action(catalog, i, j)?);
            }
        }
    }
    let gens: Vec<Vec<usize>> = generators.iter().map(|g| as_indices(&g.permutation)).collect();
    let identity: Vec<usize> = (0..16).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([identity.clone()]);
    seen.insert(identity);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let q: Vec<usize> = p.iter().map(|&k| g[k]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    let tags = CurveTag::all();
    let orbit: BTreeSet<usize> = seen.iter().map(|p| p[0]).collect();
    Ok(GroupReport {
        generators,
        order: seen.len(),
        transitive: orbit.len() == 16,
        conic_orbit: orbit.into_iter().map(|k| tags[k]).collect(),
    })
}
