use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::elm::{plan_elm, ElmSign};
use super::points::{Point, PointConfig};
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix, Poly, ProjPoint, Q};

/// A parabolic structure on O(e₁) ⊕ O(e₂), e₁ ≥ e₂.
///
/// Directions at finite poles are written in the global frame (ê₁, ê₂) over ℂ;
/// at ∞ in the frame εⱼ = z^{eⱼ} êⱼ. A section p·êⱼ with deg p ≤ eⱼ therefore
/// has fiber value at ∞ equal to its coefficient of z^{eⱼ}.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicBundle {
    e1: i64,
    e2: i64,
    dirs: Vec<ProjPoint<Q>>,
}

/// A nonzero map O(k) → O(e₁) ⊕ O(e₂), i.e. a polynomial pair with
/// deg f ≤ e₁ − k and deg g ≤ e₂ − k.
#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    pub degree: i64,
    pub f: Poly<Q>,
    pub g: Poly<Q>,
}

pub fn direction(x0: Q, x1: Q) -> ProjPoint<Q> {
    ProjPoint::new(vec![x0, x1]).expect("nonzero direction")
}

fn coeff_signed(p: &Poly<Q>, k: i64) -> Q {
    if k < 0 {
        Q::zero()
    } else {
        p.coeff(k as usize)
    }
}

/// Evaluation row for a polynomial of degree ≤ `deg` at a pole: powers of t, or
/// the top coefficient at ∞.
fn eval_row(p: &Point<Q>, deg: i64) -> Vec<Q> {
    if deg < 0 {
        return Vec::new();
    }
    match p {
        Point::Finite(t) => (0..=deg as u32).map(|m| t.pow(m)).collect(),
        Point::Infinity => {
            let mut r = vec![Q::zero(); deg as usize + 1];
            r[deg as usize] = Q::one();
            r
        }
    }
}

pub(crate) fn bits(mask: u64, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |i| mask >> i & 1 == 1)
}

pub(crate) fn mask_of(subset: &[usize]) -> u64 {
    subset.iter().fold(0, |m, &i| m | 1 << i)
}

impl Section {
    pub fn value_at(&self, e: (i64, i64), p: &Point<Q>) -> [Q; 2] {
        match p {
            Point::Finite(t) => [self.f.eval(t), self.g.eval(t)],
            Point::Infinity => [
                coeff_signed(&self.f, e.0 - self.degree),
                coeff_signed(&self.g, e.1 - self.degree),
            ],
        }
    }

    /// No zero on the projective line: the image is a line subbundle of degree k.
    pub fn is_saturated(&self, e: (i64, i64)) -> bool {
        let g = Poly::gcd(&self.f, &self.g);
        g.degree() == Some(0) && self.value_at(e, &Point::Infinity).iter().any(|x| !x.is_zero())
    }

    /// f₁g₂ − f₂g₁, a constant when the degrees add up to deg E.
    pub fn wedge(&self, other: &Section) -> Poly<Q> {
        self.f.clone() * other.g.clone() - self.g.clone() * other.f.clone()
    }

    fn combine(basis: &[Section], c: &[Q]) -> Section {
        let mut f = Poly::zero();
        let mut g = Poly::zero();
        for (s, x) in basis.iter().zip(c) {
            f = f + s.f.scale(x);
            g = g + s.g.scale(x);
        }
        Section { degree: basis[0].degree, f, g }
    }
}

impl ParabolicBundle {
    pub fn new(e1: i64, e2: i64, dirs: Vec<ProjPoint<Q>>) -> Result<Self> {
        if e1 < e2 {
            return Err(Error::InvalidInput(format!("splitting ({e1}, {e2}) is not ordered")));
        }
        if dirs.iter().any(|d| d.len() != 2) {
            return Err(Error::InvalidInput("parabolic directions live in a rank-2 fiber".into()));
        }
        Ok(ParabolicBundle { e1, e2, dirs })
    }

    /// Trivial bundle with lᵢ spanned by uᵢê₁ + ê₂ and the last three poles on
    /// ê₂, ê₁ + ê₂, ê₁.
    pub fn trivial_chart(u: &[Q]) -> Self {
        let mut dirs: Vec<_> = u.iter().map(|x| direction(x.clone(), Q::one())).collect();
        dirs.push(direction(Q::zero(), Q::one()));
        dirs.push(direction(Q::one(), Q::one()));
        dirs.push(direction(Q::one(), Q::zero()));
        ParabolicBundle { e1: 0, e2: 0, dirs }
    }

    /// O ⊕ O(−1) with lᵢ spanned by uᵢê₁ + ê₂ and the last three on
    /// ê₂, ê₁ + ê₂, ε₂: the image of [`Self::trivial_chart`] under Elm⁻ at ∞.
    pub fn main_chart(u: &[Q]) -> Self {
        let mut b = Self::trivial_chart(u);
        b.e2 = -1;
        let n = b.dirs.len();
        b.dirs[n - 1] = direction(Q::zero(), Q::one());
        b
    }

    pub fn splitting(&self) -> (i64, i64) {
        (self.e1, self.e2)
    }

    pub fn degree(&self) -> i64 {
        self.e1 + self.e2
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn directions(&self) -> &[ProjPoint<Q>] {
        &self.dirs
    }

    pub fn direction(&self, i: usize) -> &ProjPoint<Q> {
        &self.dirs[i]
    }

    fn check(&self, config: &PointConfig) -> Result<()> {
        if config.len() != self.dirs.len() {
            return Err(Error::InvalidInput(format!(
                "{} directions for {} poles",
                self.dirs.len(),
                config.len()
            )));
        }
        Ok(())
    }

    /// Basis of the maps O(k) → E whose fiber at each pole of `mask` lies on lᵢ.
    pub(crate) fn section_space(&self, config: &PointConfig, k: i64, mask: u64) -> Vec<Section> {
        let (a, b) = (self.e1 - k, self.e2 - k);
        if a < 0 {
            return Vec::new();
        }
        let nf = a as usize + 1;
        let ng = if b < 0 { 0 } else { b as usize + 1 };
        let mut rows = Vec::new();
        for i in bits(mask, self.dirs.len()) {
            let [x0, x1] = [&self.dirs[i].coords()[0], &self.dirs[i].coords()[1]];
            let p = config.point(i);
            // x₁·f(p) − x₀·g(p) = 0
            let mut row: Vec<Q> = eval_row(p, a).into_iter().map(|v| v * x1.clone()).collect();
            row.extend(eval_row(p, b).into_iter().map(|v| -(v * x0.clone())));
            rows.push(row);
        }
        let kernel = if rows.is_empty() {
            Matrix::<Q>::zeros(1, nf + ng).kernel()
        } else {
            Matrix::from_rows(rows, nf + ng).kernel()
        };
        kernel
            .into_iter()
            .map(|v| Section {
                degree: k,
                f: Poly::new(v[..nf].to_vec()),
                g: Poly::new(v[nf..].to_vec()),
            })
            .collect()
    }

    /// Interpolation space of maps O(k) → E through the parabolics of `subset`
    /// (0-based); it contains every saturated such subbundle.
    pub fn sections_through(&self, config: &PointConfig, k: i64, subset: &[usize]) -> Result<Vec<Section>> {
        self.check(config)?;
        Ok(self.section_space(config, k, mask_of(subset)))
    }

    /// A saturated degree-k line subbundle whose fiber is lᵢ for all i in `subset`.
    pub fn subbundle_through(&self, config: &PointConfig, k: i64, subset: &[usize]) -> Result<Option<Section>> {
        self.check(config)?;
        Ok(self.saturated_in(&self.section_space(config, k, mask_of(subset))))
    }

    pub fn subbundle_exists(&self, config: &PointConfig, k: i64, subset: &[usize]) -> Result<bool> {
        Ok(self.subbundle_through(config, k, subset)?.is_some())
    }

    /// A saturated member of the span of `basis`, if one exists.
    pub(crate) fn saturated_in(&self, basis: &[Section]) -> Option<Section> {
        let e = self.splitting();
        let first = basis.first()?;
        let base = basis
            .iter()
            .fold(Poly::zero(), |acc, s| Poly::gcd(&Poly::gcd(&acc, &s.f), &s.g));
        if base.degree() != Some(0) {
            return None;
        }
        if basis.iter().all(|s| s.value_at(e, &Point::Infinity).iter().all(|x| x.is_zero())) {
            return None;
        }
        let proportional = basis.iter().all(|s| s.wedge(first).is_zero());
        if !proportional {
            // Rank-one points of the evaluation map are finite, so the sections
            // with a zero form a proper hypersurface of the span; a grid of side
            // larger than its degree contains a point off it.
            return search_grid(basis.len(), |c| {
                let s = Section::combine(basis, c);
                s.is_saturated(e).then_some(s)
            });
        }
        // Every member is h·w with w primitive: saturated iff h is a nonzero
        // constant and w does not vanish at ∞.
        let content = Poly::gcd(&first.f, &first.g);
        let w = Section {
            degree: first.degree,
            f: first.f.exact_div(&content).ok()?,
            g: first.g.exact_div(&content).ok()?,
        };
        if !w.is_saturated(e) {
            return None;
        }
        let hs: Vec<Poly<Q>> = basis
            .iter()
            .map(|s| {
                let (num, den) = if w.f.is_zero() { (&s.g, &w.g) } else { (&s.f, &w.f) };
                num.exact_div(den).expect("proportional sections")
            })
            .collect();
        let len = hs.iter().filter_map(|h| h.degree()).max().unwrap_or(0) + 1;
        // Columns h₁, …, h_r and the target 1.
        let mut cols: Vec<Vec<Q>> = hs.iter().map(|h| h.coeffs_padded(len)).collect();
        let mut one = vec![Q::zero(); len];
        one[0] = -Q::one();
        cols.push(one);
        let m = Matrix::from_rows(
            (0..len).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect(),
            cols.len(),
        );
        let v = m.kernel().into_iter().find(|v| !v[hs.len()].is_zero())?;
        let scale = v[hs.len()].inv().expect("nonzero");
        let c: Vec<Q> = v[..hs.len()].iter().map(|x| x.clone() * scale.clone()).collect();
        Some(Section::combine(basis, &c))
    }

    /// Basis of the bundle maps E → E′ carrying each lᵢ into l′ᵢ, as 2×2 arrays
    /// of polynomials (entry (j, k) maps O(e_k) into O(e′_j)).
    pub fn hom_space(&self, other: &ParabolicBundle, config: &PointConfig) -> Result<Vec<[[Poly<Q>; 2]; 2]>> {
        self.check(config)?;
        other.check(config)?;
        let src = [self.e1, self.e2];
        let dst = [other.e1, other.e2];
        let degs: Vec<i64> = (0..4).map(|c| dst[c / 2] - src[c % 2]).collect();
        let sizes: Vec<usize> = degs.iter().map(|&d| if d < 0 { 0 } else { d as usize + 1 }).collect();
        let offs: Vec<usize> = (0..4).map(|c| sizes[..c].iter().sum()).collect();
        let total: usize = sizes.iter().sum();
        let mut rows = Vec::new();
        for i in 0..config.len() {
            let p = config.point(i);
            let l = self.dirs[i].coords();
            let lp = other.dirs[i].coords();
            // det[M(p)·l, l′] = (M l)₀ l′₁ − (M l)₁ l′₀ = 0
            let mut row = vec![Q::zero(); total];
            for c in 0..4 {
                let (j, k) = (c / 2, c % 2);
                let coef = l[k].clone() * if j == 0 { lp[1].clone() } else { -lp[0].clone() };
                for (m, v) in eval_row(p, degs[c]).into_iter().enumerate() {
                    row[offs[c] + m] = row[offs[c] + m].clone() + v * coef.clone();
                }
            }
            rows.push(row);
        }
        let kernel = if rows.is_empty() {
            Matrix::<Q>::zeros(1, total).kernel()
        } else {
            Matrix::from_rows(rows, total).kernel()
        };
        Ok(kernel
            .into_iter()
            .map(|v| {
                let entry = |c: usize| Poly::new(v[offs[c]..offs[c] + sizes[c]].to_vec());
                [[entry(0), entry(1)], [entry(2), entry(3)]]
            })
            .collect())
    }

    /// Parabolic endomorphisms; dimension one means the bundle is simple.
    pub fn endomorphism_dim(&self, config: &PointConfig) -> Result<usize> {
        Ok(self.hom_space(self, config)?.len())
    }

    /// Isomorphism of parabolic bundles: some parabolic map has nonzero constant
    /// determinant.
    pub fn is_isomorphic(&self, other: &ParabolicBundle, config: &PointConfig) -> Result<bool> {
        if self.splitting() != other.splitting() {
            return Ok(false);
        }
        let basis = self.hom_space(other, config)?;
        let det = |m: &[[Poly<Q>; 2]; 2]| m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        let add = |a: &[[Poly<Q>; 2]; 2], b: &[[Poly<Q>; 2]; 2]| {
            [
                [a[0][0].clone() + b[0][0].clone(), a[0][1].clone() + b[0][1].clone()],
                [a[1][0].clone() + b[1][0].clone(), a[1][1].clone() + b[1][1].clone()],
            ]
        };
        // det is a quadratic form on the Hom space: it vanishes identically iff
        // it vanishes on the basis and all of its polarizations do.
        for i in 0..basis.len() {
            if !det(&basis[i]).is_zero() {
                return Ok(true);
            }
            for j in 0..i {
                if !det(&add(&basis[i], &basis[j])).is_zero() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Elementary transformation at pole `i`, returned in a frame with ordered
    /// splitting. Elm⁻ is the kernel of E → E_{tᵢ}/lᵢ and Elm⁺ its inverse.
    pub fn elm(&self, config: &PointConfig, i: usize, sign: ElmSign) -> Result<ParabolicBundle> {
        self.check(config)?;
        let dirs: Vec<[Q; 2]> = self
            .dirs
            .iter()
            .map(|d| [d.coords()[0].clone(), d.coords()[1].clone()])
            .collect();
        let plan = plan_elm(config.points(), self.splitting(), &dirs, i, sign)?;
        let (e1, e2) = plan.splitting;
        ParabolicBundle::new(e1, e2, plan.dirs.into_iter().map(|[a, b]| direction(a, b)).collect())
    }

    pub fn elm_minus(&self, config: &PointConfig, i: usize) -> Result<ParabolicBundle> {
        self.elm(config, i, ElmSign::Minus)
    }

    pub fn elm_plus(&self, config: &PointConfig, i: usize) -> Result<ParabolicBundle> {
        self.elm(config, i, ElmSign::Plus)
    }

    /// Chart coordinates of a bundle on O ⊕ O(−1) with no parabolic on O, over
    /// a normalized configuration: the unique automorphism moving the last three
    /// directions to ê₂, ê₁ + ê₂, ε₂ is applied and the remaining uᵢ read off.
    pub fn main_chart_coordinates(&self, config: &PointConfig) -> Result<Vec<Q>> {
        self.check(config)?;
        if !config.is_normalized() {
            return Err(Error::InvalidInput("configuration does not end with 0, 1, ∞".into()));
        }
        if self.splitting() != (0, -1) {
            return Err(Error::OutOfChart(format!("splitting ({}, {})", self.e1, self.e2)));
        }
        let mut v = Vec::with_capacity(self.dirs.len());
        for (i, d) in self.dirs.iter().enumerate() {
            let [x0, x1] = [&d.coords()[0], &d.coords()[1]];
            match x0.checked_div(x1) {
                Some(x) => v.push(x),
                None => return Err(Error::OutOfChart(format!("parabolic {} lies on O", i + 1))),
            }
        }
        // Automorphisms [[a, b₀ + b₁z], [0, 1]] act by v ↦ a·v + b₀ + b₁t, and by
        // v ↦ a·v + b₁ at ∞.
        let n = v.len();
        let (v0, v1, vinf) = (&v[n - 3], &v[n - 2], &v[n - 1]);
        let a = (v1.clone() - v0.clone() - vinf.clone())
            .inv()
            .ok_or_else(|| Error::OutOfChart("last three parabolics lie on one O(−1)".into()))?;
        let b0 = -(a.clone() * v0.clone());
        let b1 = -(a.clone() * vinf.clone());
        let t = config.chart_poles()?;
        Ok(v[..n - 3]
            .iter()
            .zip(&t)
            .map(|(x, ti)| a.clone() * x.clone() + b0.clone() + b1.clone() * ti.clone())
            .collect())
    }
}

/// First point of the grids {0, …, R}^dim (R = 1, 2, …) accepted by `test`.
/// Callers guarantee that the rejected set lies on a proper hypersurface.
fn search_grid<T>(dim: usize, mut test: impl FnMut(&[Q]) -> Option<T>) -> Option<T> {
    for radius in 1i64.. {
        let side = radius as u64 + 1;
        let count = side.checked_pow(dim as u32).expect("grid search overflow");
        for code in 0..count {
            let mut c = Vec::with_capacity(dim);
            let mut rest = code;
            let mut on_shell = false;
            for _ in 0..dim {
                let digit = (rest % side) as i64;
                on_shell |= digit == radius;
                c.push(Q::from(digit));
                rest /= side;
            }
            if !on_shell {
                continue;
            }
            if let Some(found) = test(&c) {
                return Some(found);
            }
        }
    }
    None
}
