//! Normal-form λ-connections on the projective line as explicit 2×2 rational
//! matrices, with residue and spectral verification at every pole including ∞.

mod connection;
mod mat2;
mod normal_form;

pub use connection::{Mismatch, ParConnection, SpectralMismatch};
pub use mat2::{apply, Const2, Mat2};
pub use normal_form::{
    connection_matrix, is_reducible_section, lower_left, nabla0_matrix, theta_matrix, verify_spectral,
    ConnectionChart, Frame,
};
