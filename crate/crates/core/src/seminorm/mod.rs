//! Seminorm families: weighted power-series norms, disc sup-norms, the
//! two-parameter plane seminorm, and the fixed-degree families on `y^k x^l`.
//!
//! Exact inputs produce exact values (sums of square roots of rationals);
//! float inputs produce intervals. Every value carries a float bracket so
//! inequality tests can state which side of the bracket they consume.

mod dosi;
mod sup;
mod value;
mod weight;

pub use dosi::{dosi_from_beta_gamma, dosi_norm, pi_family_norm, DosiIndex, PiIndex};
pub use sup::{cauchy_check, plane_seminorm, sup_norm, tilde_norm, FloatPairs, SupNormEstimate, DEFAULT_SAMPLES};
pub use value::{rational_from_f64, NormAccumulator, SeminormValue, SqrtSum};
pub use weight::{cw_norm, weight_submult_check, WeightSpec};

use serde::Serialize;

/// One row of a seminorm sweep, in CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub norm_family: String,
    pub index: Option<u32>,
    pub r: Option<f64>,
    pub rho: Option<f64>,
    pub lower: f64,
    pub upper: f64,
}
