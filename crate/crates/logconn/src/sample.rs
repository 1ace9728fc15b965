//! Seeded generators of exact random data for the suites.

use logconn_core::chart::{ConnectionChart, Frame};
use logconn_core::exact::{q, Field, ProjPoint, Q};
use logconn_core::parabolic::{direction, ParabolicBundle, PointConfig, SpectralData, Weights};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Rationals a/b with |a| ≤ 30 and 1 ≤ b ≤ 7, and structures built from them.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational(&mut self) -> Q {
        let num = self.rng.random_range(-30..=30);
        let den = self.rng.random_range(1..=7);
        q(num, den)
    }

    pub fn nonzero(&mut self) -> Q {
        loop {
            let x = self.rational();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn rationals(&mut self, k: usize) -> Vec<Q> {
        (0..k).map(|_| self.rational()).collect()
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.random_bool(0.5)
    }

    /// k distinct rationals avoiding `avoid`.
    pub fn distinct(&mut self, k: usize, avoid: &[Q]) -> Vec<Q> {
        let mut out: Vec<Q> = Vec::with_capacity(k);
        while out.len() < k {
            let x = self.rational();
            if !avoid.contains(&x) && !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    /// m distinct finite poles off 0 and 1.
    pub fn poles(&mut self, m: usize) -> Vec<Q> {
        self.distinct(m, &[Q::zero(), Q::one()])
    }

    /// Degree −1 exponents for n poles with Σν⁻ = ρ and Σ(ν⁺ + ν⁻) = 1.
    pub fn spectral(&mut self, n: usize, rho: &Q) -> SpectralData<Q> {
        let mut minus = self.rationals(n);
        let sm = minus.iter().fold(Q::zero(), |a, x| a + x.clone());
        minus[0] = minus[0].clone() + rho.clone() - sm;
        let mut plus = self.rationals(n);
        let sp = plus.iter().fold(Q::zero(), |a, x| a + x.clone());
        plus[n - 1] = plus[n - 1].clone() + Q::one() - rho.clone() - sp;
        SpectralData::new(plus, minus, -1).expect("Fuchs holds by construction")
    }

    pub fn frame(&mut self) -> Frame {
        if self.coin() {
            Frame::Degree0
        } else {
            Frame::DegreeMinus1
        }
    }

    /// Normal-form chart with n poles and the given ρ, λ and frame.
    pub fn chart(&mut self, n: usize, rho: &Q, lambda: Q, frame: Frame) -> ConnectionChart<Q> {
        let m = n - 3;
        let t = self.poles(m);
        let nu = self.spectral(n, rho);
        let u = self.rationals(m);
        let c = self.rationals(m);
        ConnectionChart::new(t, nu, u, lambda, c, frame).expect("distinct poles")
    }

    /// Weights k/12, 0 ≤ k ≤ 12.
    pub fn weights(&mut self, n: usize) -> Weights {
        Weights::new((0..n).map(|_| q(self.int(0, 12), 12)).collect()).expect("inside [0, 1]")
    }

    /// A parabolic direction, usually from a small palette so that coincidences
    /// and special positions are frequent.
    pub fn direction(&mut self) -> ProjPoint<Q> {
        let d = |a: i64, b: i64| direction(Q::from(a), Q::from(b));
        match self.int(0, 9) {
            0 => d(1, 0),
            1 => d(0, 1),
            2 => d(1, 1),
            3 => d(-1, 1),
            4 => d(2, 1),
            5 => direction(q(1, 2), Q::one()),
            6 => d(3, 1),
            7 => d(-2, 1),
            _ => direction(self.rational(), Q::one()),
        }
    }

    /// A bundle O(e₁) ⊕ O(e₂) with 3 ≤ n ≤ 6 poles at (2, 3, …, 0, 1, ∞).
    pub fn bundle(&mut self) -> (ParabolicBundle, PointConfig) {
        let n = self.int(3, 6) as usize;
        let gap = self.int(0, n as i64 - 1);
        let e2 = self.int(-2, 1);
        let dirs = (0..n).map(|_| self.direction()).collect();
        let t: Vec<Q> = (0..n - 3).map(|i| Q::from(i as i64 + 2)).collect();
        (
            ParabolicBundle::new(e2 + gap, e2, dirs).expect("valid bundle"),
            PointConfig::chart(&t).expect("distinct poles"),
        )
    }
}
