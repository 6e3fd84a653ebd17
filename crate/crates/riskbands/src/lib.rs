//! Estimation and resampling inference for right-censored competing-risks data
//! with tied event times.
//!
//! Ties are the normal case in applied event-time data: times get recorded on
//! daily or weekly lattices, so several subjects share an exact event time.
//! The classical wild bootstrap for Nelson-Aalen and Aalen-Johansen estimators
//! assumes continuous event times and silently overestimates variances (and
//! misses the cross-cause dependence) once ties appear. This crate implements
//! the discontinuity-adjusted multiplier resampling scheme that restores the
//! correct tied-data limit covariances, next to the classical scheme for
//! comparison.
//!
//! The pieces:
//!
//! - [`event_data`]: CSV ingestion and the risk-table representation
//!   (distinct event times, at-risk counts, cause-specific jump counts).
//! - [`estimators`]: Nelson-Aalen, Kaplan-Meier, Aalen-Johansen point
//!   estimators and Greenwood-type (co)variance estimators.
//! - [`resampling`]: multiplier generation (standard normal, centered unit
//!   Poisson, weird bootstrap) and the bootstrap path engines, adjusted and
//!   unadjusted.
//! - [`bands`]: time-simultaneous equal-precision and Hall-Wellner confidence
//!   bands for a cumulative incidence function.
//! - [`simulation`]: the discretized-exponential data generator, exact limit
//!   oracles, and a Monte Carlo coverage harness.
//! - [`cli`]: the `estimate` / `bands` / `simulate` command fronts used by the
//!   `riskbands` binary.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `cargo run --release --example estimate_curves`.

pub mod bands;
pub mod cli;
pub mod curve;
pub mod error;
pub mod estimators;
pub mod event_data;
pub mod numeric;
pub mod resampling;
pub mod simulation;

pub use bands::{build_band, BandResult, BandSpec, BandType};
pub use curve::StepCurve;
pub use error::{Error, Result};
pub use estimators::{
    aalen_johansen, cif_covariance, greenwood_covariance, greenwood_variance, kaplan_meier,
    nelson_aalen, unadjusted_variance, CifVariance,
};
pub use event_data::{build_risk_table, parse_cohort, Cohort, Observation, RiskTable};
pub use resampling::{
    draw_multipliers, wild_bootstrap_aalen_johansen, wild_bootstrap_multivariate,
    wild_bootstrap_unadjusted, wild_bootstrap_univariate, BootstrapPath, MultiplierDraw,
    MultiplierLaw,
};
pub use simulation::{run_coverage, CoverageReport, Scenario, TrueParams};
