use alloc::format;
use alloc::vec::Vec;

use super::points::Point;
use crate::error::{Error, Result};
use crate::exact::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElmSign {
    Minus,
    Plus,
}

/// One frame change ê′ = ê·P of an elementary transformation.
#[derive(Clone, Debug, PartialEq)]
pub enum Gauge<F> {
    /// P = [[1, x·z^power], [0, 1]].
    Shear { x: F, power: u32 },
    /// P = identity except entry (slot, slot) = (z − t)^exp, exp = ±1.
    Diag { slot: usize, t: F, exp: i32 },
    /// P = [[0, 1], [1, 0]].
    Swap,
}

/// Splitting, directions and frame changes after Elm± at one pole.
#[derive(Clone, Debug, PartialEq)]
pub struct ElmPlan<F> {
    pub splitting: (i64, i64),
    pub dirs: Vec<[F; 2]>,
    pub gauges: Vec<Gauge<F>>,
}

/// Elm± at pole `i` of a parabolic structure on O(e₁) ⊕ O(e₂).
///
/// lᵢ is first moved onto an axis by a shear that equals the identity at every
/// other pole's fiber only up to the shift recorded here; then a diagonal gauge
/// at a finite pole (none at ∞, where only the splitting moves) performs the
/// modification. Directions follow l′ = P(tⱼ)⁻¹ l, read in ε-frames at ∞.
pub fn plan_elm<F: Field>(
    poles: &[Point<F>],
    splitting: (i64, i64),
    dirs: &[[F; 2]],
    i: usize,
    sign: ElmSign,
) -> Result<ElmPlan<F>> {
    if i >= poles.len() || dirs.len() != poles.len() {
        return Err(Error::InvalidInput(format!("pole index {} out of range", i + 1)));
    }
    let (mut e1, mut e2) = splitting;
    let gap = (e1 - e2) as u32;
    let p = poles[i].clone();
    let mut dirs = dirs.to_vec();
    let mut gauges = Vec::new();
    let [x0, x1] = dirs[i].clone();
    let on_first = x1.is_zero();
    if !on_first && !x0.is_zero() {
        // P = [[1, xβ], [0, 1]] with β(pᵢ) = 1: β = 1 at a finite pole, z^gap at ∞.
        let x = x0 * x1.inv().expect("nonzero");
        let power = if p.is_infinite() { gap } else { 0 };
        for (j, d) in dirs.iter_mut().enumerate() {
            let beta = match &poles[j] {
                Point::Finite(t) => t.pow(power),
                Point::Infinity if power == gap => F::one(),
                Point::Infinity => F::zero(),
            };
            d[0] = d[0].clone() - x.clone() * beta * d[1].clone();
        }
        gauges.push(Gauge::Shear { x, power });
    }
    // (slot, exponent of (z − t), new lᵢ)
    let (slot, exp, new_dir) = match (sign, on_first) {
        (ElmSign::Minus, false) => {
            e1 -= 1;
            (0, 1, [F::one(), F::zero()])
        }
        (ElmSign::Minus, true) => {
            e2 -= 1;
            (1, 1, [F::zero(), F::one()])
        }
        (ElmSign::Plus, false) => {
            e2 += 1;
            (1, -1, [F::one(), F::zero()])
        }
        (ElmSign::Plus, true) => {
            e1 += 1;
            (0, -1, [F::zero(), F::one()])
        }
    };
    if let Point::Finite(t) = &p {
        for (j, d) in dirs.iter_mut().enumerate() {
            if let (true, Point::Finite(tj)) = (j != i, &poles[j]) {
                let s = tj.clone() - t.clone();
                d[slot] = if exp > 0 {
                    d[slot].checked_div(&s).ok_or(Error::InvalidInput("coincident poles".into()))?
                } else {
                    d[slot].clone() * s
                };
            }
        }
        gauges.push(Gauge::Diag { slot, t: t.clone(), exp });
    }
    dirs[i] = new_dir;
    if e1 < e2 {
        core::mem::swap(&mut e1, &mut e2);
        for d in dirs.iter_mut() {
            d.swap(0, 1);
        }
        gauges.push(Gauge::Swap);
    }
    Ok(ElmPlan { splitting: (e1, e2), dirs, gauges })
}
