//! Dirichlet areas over Janowski starlike classes.
//!
//! The class `S*(A,B)` collects normalized analytic functions `f` on the unit
//! disk whose logarithmic derivative `z f'(z)/f(z)` is subordinate to the
//! Möbius map `(1+Az)/(1+Bz)`, for `-1 <= B <= 0` and complex `A != B`. This
//! crate computes the maximal Dirichlet area of `z/f` over the class,
//!
//! ```text
//! max Δ(r, z/f) = E_{A,B}(r),
//! ```
//!
//! in closed hypergeometric form, together with the supporting machinery:
//! truncated power-series arithmetic, coefficient inequalities, the
//! triangular multiplier systems behind the partial-sum dominance bounds,
//! and a seeded sampler that builds class members from Schwarz functions and
//! checks the extremal value empirically.

pub mod error;
pub mod janowski;
pub mod multipliers;
pub mod sampler;
pub mod series;
pub mod special;

pub use error::Error;
pub use janowski::{
    area_integral, boundary_point, extremal_area, extremal_area_with_method,
    extremal_reciprocal_series, lemma1_functional, p_image_descriptor, AreaMethod, AreaResult,
    ClassParams, ClassPreset, PImage,
};
pub use multipliers::{
    compute_u, lambda_limit, lambda_recurrence_step, s_bound_check, solve_lambda_system,
    weighted_sum_identity_check, MultiplierTable, PositivityReport, SBoundReport, SignPattern,
};
pub use sampler::{
    build_member, rotation_check, schwarz_series, verify_maximality, SampleReport, SchwarzSpec,
};
pub use series::{TruncatedSeries, DEFAULT_ORDER, MAX_ORDER};
pub use special::{gamma_complex, gauss_at_one, hyp_0f1, hyp_2f1, pochhammer, HypergeomResult};
