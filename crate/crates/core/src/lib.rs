//! Numerical laboratory for consumption-saving problems.
//!
//! The crate solves finite-horizon consumption-saving problems by
//! Euler-equation root-finding, scans consumption policies for concavity,
//! classifies marginal utilities by hyperbolic absolute risk aversion
//! (affine risk tolerance), and — for marginal utilities that are *not*
//! HARA — mechanically constructs and certifies a finite-support shock
//! distribution under which the consumption function is non-concave.
//!
//! All numerics are generic over the scalar type through [`Real`]
//! (any `num_traits::Float`); the `*F64` aliases at the crate root pick
//! the double-precision instantiations used by the CLI and test suites.

pub mod error;
pub mod euler;
pub mod hlp;
pub mod interp;
pub mod pipeline;
pub mod rootfind;
pub mod scalar;
pub mod shocks;
pub mod utility;

pub use error::{Error, Result};
pub use scalar::Real;

pub use euler::{
    concavity_scan, concavity_scan_values, consumption_upper_bound, euler_residual,
    find_zero_saving_wealth, mpc, solve_finite_horizon, solve_one_period, ConcavityReport,
    GridSpec, OnePeriodSolution, PolicyFunction, SolverOptions, Spacing,
};
pub use hlp::{
    build_counterexample, find_phi_ratio_violation, lb3_check, phi_capital, phi_ratio_grid,
    GContext, GSecondSign, Lb3Check, RatioViolation, Sign,
};
pub use pipeline::{
    run_pipeline, verify_certificate, CounterexampleCertificate, HaraVerdict, PipelineConfig,
    PipelineOutcome, ScanRow, VerificationReport,
};
pub use shocks::{
    hlp_to_shocks, shocks_to_hlp, HlpParameters, ShockDistribution, ShockSequence, ShockState,
};
pub use utility::{make_utility, HaraFit, UtilityFunction, UtilitySpec};

/// Double-precision utility function.
pub type UtilityF64 = UtilityFunction<f64>;
/// Double-precision shock distribution.
pub type ShocksF64 = ShockDistribution<f64>;
/// Double-precision tabulated consumption policy.
pub type PolicyF64 = PolicyFunction<f64>;
/// Double-precision counterexample certificate.
pub type CertificateF64 = CounterexampleCertificate<f64>;
