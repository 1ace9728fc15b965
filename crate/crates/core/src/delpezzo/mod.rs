//! The five-pole picture: closed-form coordinates, the sixteen special curves of
//! the bundle side and of the incidence variety, the chart atlas, the Elm-pair
//! automorphisms and the degeneration onto a special line.
//!
//! Poles are ordered (t₁, t₂, 0, 1, ∞) and indexed from 0 in this order. A pole
//! (x : y) gives Dᵢ = (y² : xy : x²) in (b₀ : b₁ : b₂) on the conic b₁² = b₀b₂.

mod atlas;
mod catalog;
mod closed;
mod degeneration;
mod group;
mod sigma;
mod special;

pub use atlas::{chart_membership_table, Chart, MembershipTable, SpecialObject, MEMBERS_PER_CURVE};
pub use catalog::{sixteen_curves, Catalog, CurveEquation, CurveTag, Incidence};
pub use closed::{
    apparent_n5, b_from_pq, bun_inverse_n5, bun_n5, c_n5_from_ab, c_n5_from_qb, closed_forms_n5, p_n5_from_qb,
    ClosedFormsN5,
};
pub use degeneration::{degeneration_limit, deformation_chart, DegenerationLimit};
pub use group::{
    elm_pair, elm_pair_action, elm_pair_group, fit_plane_map, monomials, transport_b, ElmPairAction, GroupReport,
    PlaneMap, VERIFY_SAMPLES,
};
pub use sigma::{sigma_lift, SigmaCurve, SigmaLift, SigmaPoint};
pub use special::{
    classify, curve_representative, generic_representative, point_representative, BundleClass, SampleStream,
    SpecialPoint,
};

#[cfg(test)]
mod tests;
