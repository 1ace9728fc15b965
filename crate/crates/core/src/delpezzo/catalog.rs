use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exact::{Field, ProjPoint, Q};
use crate::parabolic::{Point, PointConfig};

/// The sixteen (−1)-curves of the blow-up of P²_b at the five points Dᵢ.
/// Indices are 0-based pole positions in (t₁, t₂, 0, 1, ∞).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveTag {
    /// Strict transform of the conic through the five Dᵢ.
    Conic,
    /// Exceptional curve over Dᵢ.
    Exceptional(usize),
    /// Strict transform of the line through Dᵢ and Dⱼ, i < j.
    Line(usize, usize),
}

impl CurveTag {
    /// Canonical order: conic, five exceptional curves, ten lines.
    pub fn all() -> Vec<CurveTag> {
        let mut v = vec![CurveTag::Conic];
        v.extend((0..5).map(CurveTag::Exceptional));
        for i in 0..5 {
            for j in i + 1..5 {
                v.push(CurveTag::Line(i, j));
            }
        }
        v
    }

    pub fn index(&self) -> usize {
        match *self {
            CurveTag::Conic => 0,
            CurveTag::Exceptional(i) => 1 + i,
            CurveTag::Line(i, j) => {
                let before: usize = (0..i).map(|k| 4 - k).sum();
                6 + before + (j - i - 1)
            }
        }
    }

    pub fn line(i: usize, j: usize) -> CurveTag {
        CurveTag::Line(i.min(j), i.max(j))
    }
}

impl fmt::Display for CurveTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveTag::Conic => write!(f, "Pi"),
            CurveTag::Exceptional(i) => write!(f, "Pi_{}", i + 1),
            CurveTag::Line(i, j) => write!(f, "Pi_{}{}", i + 1, j + 1),
        }
    }
}

/// Defining data of a catalog curve in b-space.
#[derive(Clone, Debug, PartialEq)]
pub enum CurveEquation {
    /// b₁² − b₀b₂ = 0, parameterized by z ↦ (1 : z : z²).
    Conic,
    /// ℓ₀b₀ + ℓ₁b₁ + ℓ₂b₂ = 0.
    Line([Q; 3]),
    /// Lies over the blown-up point.
    Exceptional(ProjPoint<Q>),
}

/// Homogeneous coordinates (x : y) of a pole, z = x/y.
pub(crate) fn homogeneous(p: &Point<Q>) -> [Q; 2] {
    match p {
        Point::Finite(t) => [t.clone(), Q::one()],
        Point::Infinity => [Q::one(), Q::zero()],
    }
}

pub(crate) fn proj3(v: [Q; 3]) -> ProjPoint<Q> {
    ProjPoint::new(v.to_vec()).expect("nonzero point")
}

pub(crate) fn cross(a: &[Q], b: &[Q]) -> [Q; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot3(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |s, (x, y)| s + x.clone() * y.clone())
}

/// Special points and curves of the n = 5 picture for one pole configuration.
#[derive(Clone, Debug)]
pub struct Catalog {
    config: PointConfig,
    poles: Vec<[Q; 2]>,
}

pub fn sixteen_curves(t: &[Q; 2]) -> Result<Catalog> {
    let config = PointConfig::chart(t)?;
    let poles = config.points().iter().map(homogeneous).collect();
    Ok(Catalog { config, poles })
}

/// Adjacency of the sixteen curves, indexed by [`CurveTag::index`].
#[derive(Clone, Debug, PartialEq)]
pub struct Incidence {
    pub tags: Vec<CurveTag>,
    pub adjacent: Vec<Vec<bool>>,
}

impl Incidence {
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacent.iter().map(|r| r.iter().filter(|&&x| x).count()).collect()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degrees().iter().all(|&d| d == k)
    }

    pub fn meets(&self, a: CurveTag, b: CurveTag) -> bool {
        self.adjacent[a.index()][b.index()]
    }

    pub fn neighbours(&self, a: CurveTag) -> Vec<CurveTag> {
        self.tags.iter().copied().filter(|&b| self.meets(a, b)).collect()
    }
}

impl Catalog {
    pub fn config(&self) -> &PointConfig {
        &self.config
    }

    pub fn pole(&self, i: usize) -> &[Q; 2] {
        &self.poles[i]
    }

    /// Conic parameterization at (x : y): (y² : xy : x²).
    pub fn conic_point(&self, xy: &[Q; 2]) -> ProjPoint<Q> {
        let [x, y] = xy.clone();
        proj3([y.clone() * y.clone(), x.clone() * y, x.clone() * x])
    }

    /// Dᵢ, the image of the i-th pole on the conic.
    pub fn d_point(&self, i: usize) -> ProjPoint<Q> {
        self.conic_point(&self.poles[i])
    }

    /// Coefficients of (yᵢz − xᵢ)(yⱼz − xⱼ), which are also the coefficients
    /// (ℓ₀, ℓ₁, ℓ₂) of the line through Dᵢ and Dⱼ.
    pub fn line_coefficients(&self, i: usize, j: usize) -> [Q; 3] {
        let [xi, yi] = self.poles[i].clone();
        let [xj, yj] = self.poles[j].clone();
        [
            xi.clone() * xj.clone(),
            -(xi * yj.clone() + xj * yi.clone()),
            yi * yj,
        ]
    }

    pub fn conic_contains(&self, b: &ProjPoint<Q>) -> bool {
        let c = b.coords();
        c[1].clone() * c[1].clone() == c[0].clone() * c[2].clone()
    }

    pub fn equation(&self, tag: CurveTag) -> CurveEquation {
        match tag {
            CurveTag::Conic => CurveEquation::Conic,
            CurveTag::Exceptional(i) => CurveEquation::Exceptional(self.d_point(i)),
            CurveTag::Line(i, j) => CurveEquation::Line(self.line_coefficients(i, j)),
        }
    }

    /// Whether a point of P²_b lies on the image of the curve in P²_b.
    pub fn contains(&self, tag: CurveTag, b: &ProjPoint<Q>) -> bool {
        match self.equation(tag) {
            CurveEquation::Conic => self.conic_contains(b),
            CurveEquation::Line(l) => dot3(&l, b.coords()).is_zero(),
            CurveEquation::Exceptional(d) => &d == b,
        }
    }

    fn blown_up_index(&self, b: &ProjPoint<Q>) -> Option<usize> {
        (0..5).find(|&r| &self.d_point(r) == b)
    }

    /// Intersection point of two catalog lines in P²_b.
    pub fn line_intersection(&self, a: (usize, usize), b: (usize, usize)) -> Result<ProjPoint<Q>> {
        let p = cross(&self.line_coefficients(a.0, a.1), &self.line_coefficients(b.0, b.1));
        ProjPoint::new(p.to_vec()).ok_or_else(|| Error::Indeterminate("coincident lines".into()))
    }

    /// Whether the strict transforms of two catalog curves meet on the blow-up.
    fn strict_transforms_meet(&self, a: CurveTag, b: CurveTag) -> Result<bool> {
        use CurveTag::*;
        match (a, b) {
            _ if a == b => Ok(false),
            (Exceptional(_), Exceptional(_)) => Ok(false),
            (Exceptional(r), other) | (other, Exceptional(r)) => Ok(self.contains(other, &self.d_point(r))),
            (Conic, Line(i, j)) | (Line(i, j), Conic) => {
                // Restrict the line to the conic: a binary quadratic in (x : y).
                let l = self.line_coefficients(i, j);
                let mut form = vec![l[0].clone(), l[1].clone(), l[2].clone()];
                // Strip linear factors at the blown-up parameters.
                for r in 0..5 {
                    if form.len() > 1 && eval_binary(&form, &self.poles[r]).is_zero() {
                        form = divide_binary(&form, &self.poles[r]);
                    }
                }
                // A leftover factor is an intersection off the Dᵣ or a tangency at one.
                Ok(form.len() > 1)
            }
            (Line(i, j), Line(k, m)) => {
                let p = self.line_intersection((i, j), (k, m))?;
                match self.blown_up_index(&p) {
                    // Distinct lines through Dᵣ have distinct tangents and separate.
                    Some(r) if [i, j].contains(&r) && [k, m].contains(&r) => Ok(false),
                    Some(r) => Err(Error::Indeterminate(format!(
                        "lines {} and {} meet at the blown-up point D{}",
                        a,
                        b,
                        r + 1
                    ))),
                    None => Ok(true),
                }
            }
            (Conic, Conic) => Ok(false),
        }
    }

    /// Incidence graph of the sixteen curves on the blow-up.
    pub fn incidence(&self) -> Result<Incidence> {
        let tags = CurveTag::all();
        let mut adjacent = vec![vec![false; 16]; 16];
        for a in &tags {
            for b in &tags {
                adjacent[a.index()][b.index()] = self.strict_transforms_meet(*a, *b)?;
            }
        }
        Ok(Incidence { tags, adjacent })
    }

    /// Human-readable description of each curve.
    pub fn describe(&self, tag: CurveTag) -> String {
        match self.equation(tag) {
            CurveEquation::Conic => String::from("b1^2 - b0*b2 = 0"),
            CurveEquation::Line(l) => format!("({})*b0 + ({})*b1 + ({})*b2 = 0", l[0], l[1], l[2]),
            CurveEquation::Exceptional(d) => {
                let c = d.coords();
                format!("exceptional over ({}:{}:{})", c[0], c[1], c[2])
            }
        }
    }
}

/// f(x, y) for a binary form with coefficients of y^{d−k}x^k.
fn eval_binary(form: &[Q], xy: &[Q; 2]) -> Q {
    let d = form.len() - 1;
    form.iter().enumerate().fold(Q::zero(), |s, (k, c)| {
        s + c.clone() * xy[0].pow(k as u32) * xy[1].pow((d - k) as u32)
    })
}

/// Exact quotient of a binary form by (y₀x − x₀y), given a root (x₀ : y₀).
fn divide_binary(form: &[Q], root: &[Q; 2]) -> Vec<Q> {
    let [x0, y0] = root.clone();
    let d = form.len() - 1;
    // form = (y₀x − x₀y)·g with g of degree d − 1: solve top-down or bottom-up
    // depending on which coordinate of the root is a unit.
    let mut g = vec![Q::zero(); d];
    if !y0.is_zero() {
        // Coefficient of x^k: y₀g_{k−1} − x₀g_k = f_k, run from the top.
        let inv = y0.inv().expect("unit");
        for k in (1..=d).rev() {
            let gk = if k < d { g[k].clone() } else { Q::zero() };
            g[k - 1] = (form[k].clone() + x0.clone() * gk) * inv.clone();
        }
    } else {
        // Root at infinity: form = −x₀·y·g.
        let inv = (-x0).inv().expect("unit");
        for k in 0..d {
            g[k] = form[k].clone() * inv.clone();
        }
    }
    g
}
