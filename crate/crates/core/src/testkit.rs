//! Shared proptest strategies for exact random data.

use alloc::vec::Vec;

use proptest::prelude::*;

use crate::chart::{ConnectionChart, Frame};
use crate::exact::{q, Field, Q};
use crate::parabolic::SpectralData;

/// Small rationals with denominators up to 7.
pub fn rational() -> impl Strategy<Value = Q> {
    (-30i64..=30, 1i64..=7).prop_map(|(a, b)| q(a, b))
}


/// m distinct finite poles avoiding 0 and 1.
pub fn poles(m: usize) -> impl Strategy<Value = Vec<Q>> {
    prop::collection::vec(rational(), m).prop_filter("distinct, off 0 and 1", |t| {
        t.iter().enumerate().all(|(i, x)| {
            !x.is_zero() && *x != Q::one() && t[..i].iter().all(|y| y != x)
        })
    })
}

/// Exponents for n poles with Σ(ν⁺ + ν⁻) = 1 (degree −1 labels).
pub fn spectral(n: usize) -> impl Strategy<Value = SpectralData<Q>> {
    (prop::collection::vec(rational(), n), prop::collection::vec(rational(), n)).prop_map(move |(mut plus, minus)| {
        let total = plus.iter().chain(minus.iter()).fold(Q::zero(), |a, x| a + x.clone());
        plus[n - 1] = plus[n - 1].clone() + Q::one() - total;
        SpectralData::new(plus, minus, -1).expect("Fuchs holds")
    })
}

/// A random chart with n poles, any λ (including 0) and either frame.
pub fn chart(n: usize) -> impl Strategy<Value = ConnectionChart<Q>> {
    let m = n - 3;
    (
        poles(m),
        spectral(n),
        prop::collection::vec(rational(), m),
        rational(),
        prop::collection::vec(rational(), m),
        any::<bool>(),
    )
        .prop_map(|(t, nu, u, lambda, c, deg0)| {
            let frame = if deg0 { Frame::Degree0 } else { Frame::DegreeMinus1 };
            ConnectionChart::new(t, nu, u, lambda, c, frame).expect("valid chart")
        })
}
