use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Field, Q};
use crate::error::{Error, Result};

/// Univariate polynomial Σ cₖ zᵏ. Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F> {
    c: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(a: F) -> Self {
        Poly::new(vec![a])
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    /// The coordinate z.
    pub fn z() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    /// a + b·z.
    pub fn linear(a: F, b: F) -> Self {
        Poly::new(vec![a, b])
    }

    /// Monic Π (z − rᵢ).
    pub fn from_roots(roots: &[F]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| {
            acc * Poly::linear(-r.clone(), F::one())
        })
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to −1.
    pub fn degree_i64(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> F {
        self.c.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficients c₀..c_{len−1}, zero-padded.
    pub fn coeffs_padded(&self, len: usize) -> Vec<F> {
        (0..len).map(|k| self.coeff(k)).collect()
    }

    pub fn lead(&self) -> Option<&F> {
        self.c.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.c
            .iter()
            .rev()
            .fold(F::zero(), |acc, a| acc * x.clone() + a.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Poly::new(self.c.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.clone() * F::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Poly::one(), |acc, _| acc * self.clone())
    }

    /// Euclidean division; the divisor's leading coefficient must be a unit.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?;
        let inv = dl.inv().ok_or(Error::DivisionByZero)?;
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quo = vec![F::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let f = r[k + dd].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[k + j] = r[k + j].clone() - f.clone() * dj.clone();
            }
            quo[k] = f;
        }
        r.truncate(dd);
        Ok((Poly::new(quo), Poly::new(r)))
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InvalidInput("inexact polynomial division".into()))
        }
    }

    pub fn monic(&self) -> Self {
        match self.lead().and_then(|l| l.inv()) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic gcd; gcd(0,0) = 0.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).expect("nonzero divisor").1;
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Multiplicity of the root `t` (0 if `t` is not a root). Zero polynomial rejected.
    pub fn root_multiplicity(&self, t: &F) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lin = Poly::linear(-t.clone(), F::one());
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = p.div_rem(&lin)?;
            if !r.is_zero() {
                return Ok(m);
            }
            p = q;
            m += 1;
        }
    }

    /// Substitute z ↦ a + b z.
    pub fn compose_linear(&self, a: &F, b: &F) -> Self {
        let lin = Poly::linear(a.clone(), b.clone());
        self.c
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, k| acc * lin.clone() + Poly::constant(k.clone()))
    }
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<F: Field> Add for Poly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<F: Field> Sub for Poly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly::new(self.c.into_iter().map(|a| -a).collect())
    }
}

impl<F: Field> Mul for Poly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

/// Rational roots with multiplicity, plus the cofactor free of rational roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSplit {
    pub roots: Vec<Q>,
    pub remainder: Poly<Q>,
}

impl Poly<Q> {
    /// All rational roots with multiplicity.
    ///
    /// Linear and quadratic factors are solved in closed form (exact integer square
    /// root of the discriminant). Higher degrees use p/q candidates with p | c₀ and
    /// q | c_m, whose divisors come from trial-division factorization; cofactors above
    /// 10¹² that survive trial division up to 10⁶ are treated as prime.
    pub fn rational_roots(&self) -> Result<RootSplit> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        while p.degree().unwrap_or(0) > 0 && p.coeff(0).is_zero() {
            roots.push(Q::zero());
            p = Poly::new(p.c[1..].to_vec());
        }
        loop {
            match p.degree().unwrap_or(0) {
                0 => break,
                1 => {
                    roots.push(-(p.coeff(0).div(&p.coeff(1)).expect("degree one")));
                    p = Poly::constant(p.coeff(1));
                    break;
                }
                2 => {
                    let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
                    let disc = b.clone() * b.clone() - Q::from(4) * a.clone() * c;
                    if let Some(s) = rational_sqrt(&disc) {
                        let two_a = Q::from(2) * a.clone();
                        let mut pair = [
                            (-b.clone() + s.clone()).div(&two_a).expect("a≠0"),
                            (-b - s).div(&two_a).expect("a≠0"),
                        ];
                        pair.sort();
                        roots.extend(pair);
                        p = Poly::constant(a);
                    }
                    break;
                }
                _ => match p.find_candidate_root() {
                    Some(r) => {
                        p = p.div_rem(&Poly::linear(-r.clone(), Q::one()))?.0;
                        roots.push(r);
                    }
                    None => break,
                },
            }
        }
        roots.sort();
        Ok(RootSplit { roots, remainder: p })
    }

    fn find_candidate_root(&self) -> Option<Q> {
        let ints = integer_coefficients(self);
        let c0 = ints.first()?.abs();
        let cm = ints.last()?.abs();
        let nums = divisors(&c0);
        let dens = divisors(&cm);
        for pn in &nums {
            for qd in &dens {
                for sign in [1i64, -1] {
                    let cand = Q::from_bigints(pn * BigInt::from(sign), qd.clone());
                    if self.eval(&cand).is_zero() {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

fn integer_coefficients(p: &Poly<Q>) -> Vec<BigInt> {
    let mut v = p.c.clone();
    Q::normalize_projective(&mut v);
    v.into_iter().map(|x| x.numer().clone()).collect()
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::from_bigints(n, d))
    } else {
        None
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.abs();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &p * &p <= m && p <= limit {
        let mut e = 0;
        while m.is_multiple_of(&p) {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        factors.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::new();
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &prime;
            }
        }
        out = next;
    }
    out.sort();
    out
}
