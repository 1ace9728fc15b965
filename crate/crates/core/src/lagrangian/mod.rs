//! The apparent map App, the bundle map Bun, their joint inverse, Darboux
//! coordinates and exact symplectic identities.
//!
//! Finite poles are t₁, …, t_{n−3} (with 0, 1, ∞ implicit). Points of |O(n−3)| are
//! monomial coefficients a = (a₀ : … : a_{n−3}) of Σ aₖzᵏ; bundle points b live in the
//! dual space so the incidence pairing is Σ aₖbₖ.

mod darboux;
mod duality;
mod maps;
mod n4;

pub use darboux::{
    c_from_qu, darboux_p, darboux_p_from_matrix, eta_check, omega_anti_invariant, omega_swap, symplectic_check,
    FormCoefficients, SymplecticReport,
};
pub use duality::{degenerate_rho0_check, lambda_for, lambda_residue_identity, solve_connection, Solution};
pub use maps::{
    app, apparent_polynomial, bun, bun_inverse, bundle_polynomial, incidence_pairing, mu_map, pole_polynomial,
};
pub use n4::{n4_forward, n4_inverse, n4_mu, okamoto_swap};

#[cfg(test)]
mod tests;
