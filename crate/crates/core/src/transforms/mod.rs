//! Twists by rank-one connections and elementary transformations, acting on
//! exponents, weights, parabolic bundles and matrix realizations.

mod elm;
mod iso;
mod twist;

pub use elm::{
    elm_chart_map_n, elm_connection, elm_minus, elm_plus, elm_spectral, elm_weights, ElmChartImage,
};
pub use iso::{connections_isomorphic, horizontal_maps};
pub use twist::{twist, twist_connection, RankOneTwist};

#[cfg(test)]
mod tests;
