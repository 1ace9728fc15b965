//! Field-generic exact arithmetic: rationals, ℚ(t), polynomials, dense linear
//! algebra, first-order jets and normalized projective points.

mod field;
mod jet;
mod lp;
mod matrix;
mod poly;
mod proj;
mod ratfun;
mod rational;

pub use field::{dot, Field};
pub use jet::{jdiv, jet_eval, wedge_sum, Jet};
pub use lp::{strictly_feasible, LinearConstraint};
pub use matrix::Matrix;
pub use poly::{Poly, RootSplit};
pub use proj::ProjPoint;
pub use ratfun::RatFun;
pub use rational::{q, Q};

/// ℚ(t) as a scalar field.
pub type QT = RatFun<Q>;
