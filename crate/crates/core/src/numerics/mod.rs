//! Shared numerical kernel: quadrature, finite differences, Gaussian special
//! functions, seeded Monte Carlo aggregation, and small symmetric matrices.

pub mod diff;
pub mod matrix;
pub mod mc;
pub mod quad;
pub mod special;

pub use diff::{central_diff, central_diff_auto, default_step, richardson_forward};
pub use matrix::{MatrixError, SymMatrix};
pub use mc::{run_trials, summarize, trial_rng, variance_with_se, McConfig, MeanSe};
pub use quad::{integrate, Quadrature, QuadError, QuadRule};
pub use special::{gaussian_cdf, gaussian_pdf, gaussian_quantile, ln_gamma};

/// Relative eigenvalue floor for PSD verdicts on info/variance matrices.
pub const PSD_REL_TOL: f64 = 1e-10;
