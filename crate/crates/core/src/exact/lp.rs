//! Exact strict-feasibility test for small systems of linear inequalities, by a
//! two-phase simplex with Bland's rule over ℚ.

use alloc::vec;
use alloc::vec::Vec;

use super::{Field, Q};

/// `coeffs · x < rhs` when `strict`, otherwise `coeffs · x ≤ rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
    pub strict: bool,
}

impl LinearConstraint {
    pub fn holds_at(&self, x: &[Q]) -> bool {
        let lhs = super::dot(&self.coeffs, x);
        if self.strict {
            lhs < self.rhs
        } else {
            lhs <= self.rhs
        }
    }
}

/// A point satisfying every constraint, or `None` when the system is infeasible.
pub fn strictly_feasible(dim: usize, constraints: &[LinearConstraint]) -> Option<Vec<Q>> {
    // Variables: w⁺ (dim), w⁻ (dim), s⁺, s⁻. Maximize s subject to
    // a·w + s ≤ b for strict rows, a·w ≤ b otherwise, and s ≤ 1.
    let nv = 2 * dim + 2;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), dim);
        let mut r = vec![Q::zero(); nv];
        for (j, a) in c.coeffs.iter().enumerate() {
            r[j] = a.clone();
            r[dim + j] = -a.clone();
        }
        if c.strict {
            r[2 * dim] = Q::one();
            r[2 * dim + 1] = -Q::one();
        }
        rows.push(r);
        rhs.push(c.rhs.clone());
    }
    let mut cap = vec![Q::zero(); nv];
    cap[2 * dim] = Q::one();
    cap[2 * dim + 1] = -Q::one();
    rows.push(cap.clone());
    rhs.push(Q::one());

    let (x, value) = maximize(&rows, &rhs, &cap)?;
    let any_strict = constraints.iter().any(|c| c.strict);
    if any_strict && value.cmp_zero() != core::cmp::Ordering::Greater {
        return None;
    }
    let w: Vec<Q> = (0..dim).map(|j| x[j].clone() - x[dim + j].clone()).collect();
    debug_assert!(constraints.iter().all(|c| c.holds_at(&w)));
    Some(w)
}

/// max c·x subject to A x ≤ b, x ≥ 0. `None` if infeasible or unbounded.
fn maximize(a: &[Vec<Q>], b: &[Q], c: &[Q]) -> Option<(Vec<Q>, Q)> {
    let m = a.len();
    let n = c.len();
    let n_art = b.iter().filter(|x| x.is_negative()).count();
    let width = n + m + n_art + 1;
    let rhs_col = width - 1;
    let mut t = vec![vec![Q::zero(); width]; m];
    let mut basis = vec![0usize; m];
    let mut art = n + m;
    for i in 0..m {
        let flip = b[i].is_negative();
        let sign = if flip { -Q::one() } else { Q::one() };
        for j in 0..n {
            t[i][j] = sign.clone() * a[i][j].clone();
        }
        t[i][n + i] = sign.clone();
        t[i][rhs_col] = sign * b[i].clone();
        if flip {
            t[i][art] = Q::one();
            basis[i] = art;
            art += 1;
        } else {
            basis[i] = n + i;
        }
    }
    let is_art = |j: usize| j >= n + m && j < rhs_col;

    if n_art > 0 {
        let mut obj = vec![Q::zero(); width];
        for j in n + m..rhs_col {
            obj[j] = Q::one();
        }
        canonicalize(&mut obj, &t, &basis);
        run(&mut t, &mut obj, &mut basis, &|_| true)?;
        if obj[rhs_col].is_negative() {
            return None;
        }
        for i in 0..m {
            if is_art(basis[i]) {
                if let Some(j) = (0..n + m).find(|&j| !t[i][j].is_zero()) {
                    pivot(&mut t, &mut obj, &mut basis, i, j);
                }
            }
        }
    }

    let mut obj = vec![Q::zero(); width];
    for j in 0..n {
        obj[j] = -c[j].clone();
    }
    canonicalize(&mut obj, &t, &basis);
    run(&mut t, &mut obj, &mut basis, &|j| !is_art(j))?;
    let mut x = vec![Q::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = t[i][rhs_col].clone();
        }
    }
    Some((x, obj[rhs_col].clone()))
}

fn canonicalize(obj: &mut [Q], t: &[Vec<Q>], basis: &[usize]) {
    for (i, &bv) in basis.iter().enumerate() {
        let f = obj[bv].clone();
        if !f.is_zero() {
            for (o, v) in obj.iter_mut().zip(&t[i]) {
                *o = o.clone() - f.clone() * v.clone();
            }
        }
    }
}

fn pivot(t: &mut [Vec<Q>], obj: &mut [Q], basis: &mut [usize], r: usize, c: usize) {
    let inv = t[r][c].inv().expect("nonzero pivot");
    for v in t[r].iter_mut() {
        *v = v.clone() * inv.clone();
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            *v = v.clone() - f.clone() * p.clone();
        }
    }
    let f = obj[c].clone();
    if !f.is_zero() {
        for (v, p) in obj.iter_mut().zip(&prow) {
            *v = v.clone() - f.clone() * p.clone();
        }
    }
    basis[r] = c;
}

/// Bland's rule iterations; `None` on unboundedness.
fn run(
    t: &mut [Vec<Q>],
    obj: &mut [Q],
    basis: &mut [usize],
    allowed: &dyn Fn(usize) -> bool,
) -> Option<()> {
    let rhs_col = obj.len() - 1;
    loop {
        let Some(enter) = (0..rhs_col).find(|&j| allowed(j) && obj[j].is_negative()) else {
            return Some(());
        };
        let mut best: Option<(usize, Q)> = None;
        for i in 0..t.len() {
            if t[i][enter].is_negative() || t[i][enter].is_zero() {
                continue;
            }
            let ratio = t[i][rhs_col].div(&t[i][enter]).expect("positive");
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && basis[i] < basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        let (r, _) = best?;
        pivot(t, obj, basis, r, enter);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn lc(c: &[i64], r: i64, strict: bool) -> LinearConstraint {
        LinearConstraint { coeffs: c.iter().map(|&x| Q::from(x)).collect(), rhs: Q::from(r), strict }
    }

    #[test]
    fn open_square_is_feasible() {
        let cs = [lc(&[-1, 0], 0, true), lc(&[0, -1], 0, true), lc(&[1, 0], 1, true), lc(&[0, 1], 1, true), lc(&[1, 1], 1, true)];
        let w = strictly_feasible(2, &cs).unwrap();
        assert!(cs.iter().all(|c| c.holds_at(&w)));
    }

    #[test]
    fn touching_halfplanes_are_strictly_infeasible() {
        // x < 0 and x > 0 share only the closed boundary.
        assert!(strictly_feasible(1, &[lc(&[1], 0, true), lc(&[-1], 0, true)]).is_none());
        assert!(strictly_feasible(1, &[lc(&[1], 0, false), lc(&[-1], 0, false)]).is_some());
    }

    #[test]
    fn negative_right_hand_sides() {
        // x > 2, x < 5/2
        let cs = [lc(&[-1], -2, true), LinearConstraint { coeffs: vec![Q::from(1)], rhs: q(5, 2), strict: true }];
        let w = strictly_feasible(1, &cs).unwrap();
        assert!(w[0] > Q::from(2) && w[0] < q(5, 2));
    }
}
