//! Exact computations for rank-2 logarithmic connections on the projective line
//! with n poles: the normal-form chart, the apparent and bundle maps and their
//! joint inverse, parabolic stability and wall crossing, elementary
//! transformations, and the n = 5 Del Pezzo picture.
//!
//! Everything is exact: scalars implement [`exact::Field`] and are instantiated
//! with ℚ, with ℚ(t) for degenerations, and with first-order jets for
//! symplectic identities.

#![no_std]
// Index loops are the clearest form for the small dense linear algebra here.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod parabolic;
pub mod chart;
pub mod transforms;
pub mod lagrangian;
pub mod delpezzo;

pub use error::{Error, Result};

#[cfg(test)]
mod testkit;
