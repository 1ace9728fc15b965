//! Spectral data, weights, parabolic bundles on the projective line, their
//! stability and decomposability, and the wall-and-chamber structure of the
//! weight cube.

mod bundle;
mod elm;
mod points;
mod spectral;
mod stability;
mod walls;
mod weights;

pub use bundle::{direction, ParabolicBundle, Section};
pub use elm::{plan_elm, ElmPlan, ElmSign, Gauge};
pub use points::{Mobius, Point, PointConfig};
pub use spectral::SpectralData;
pub use stability::{
    decomposition, destabilizing_subbundle, exists_stabilizing_weight, is_generic, is_semistable, is_simple,
    is_stable, is_undecomposable, main_chart_membership, stability_index, stabilizing_chamber, StableChamber,
    MAX_POLES,
};
pub use walls::{
    admissibility_walls, chamber_census, chamber_census_n4, is_admissible, wall_crossing_family, wall_list, Chamber,
    ChamberReport, Location, Wall,
};
pub use weights::Weights;

#[cfg(test)]
mod tests;
