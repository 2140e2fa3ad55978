//! Base densities for location-scale constructions. The built-ins are
//! standardized (mean zero, variance one): standard Gaussian, the Laplace
//! density (1/sqrt(2)) exp(-sqrt(2)|x|), and the logistic rescaled to unit
//! variance. A tabulated-cdf base supports user-supplied densities.

use std::f64::consts::SQRT_2;
use std::sync::Arc;

use crate::families::table::TableDensity;
use crate::families::Interval;
use crate::numerics::special::{gaussian_cdf, gaussian_pdf, gaussian_quantile};

/// A fixed probability density on the real line with cdf and quantile.
#[derive(Debug, Clone)]
pub enum BaseDensity {
    Gaussian,
    Laplace,
    Logistic,
    Table(Arc<TableDensity>),
}

/// Scale of the unit-variance logistic: s = sqrt(3)/pi.
const LOGISTIC_S: f64 = 0.551_328_895_421_792_8;

impl BaseDensity {
    pub fn name(&self) -> &str {
        match self {
            BaseDensity::Gaussian => "gaussian",
            BaseDensity::Laplace => "laplace",
            BaseDensity::Logistic => "logistic",
            BaseDensity::Table(_) => "cdf-table",
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match self {
            BaseDensity::Gaussian => gaussian_pdf(x),
            BaseDensity::Laplace => (-SQRT_2 * x.abs()).exp() / SQRT_2,
            BaseDensity::Logistic => {
                let e = (-x.abs() / LOGISTIC_S).exp();
                e / (LOGISTIC_S * (1.0 + e) * (1.0 + e))
            }
            BaseDensity::Table(t) => t.pdf(x),
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            BaseDensity::Gaussian => gaussian_cdf(x),
            BaseDensity::Laplace => {
                if x < 0.0 {
                    0.5 * (SQRT_2 * x).exp()
                } else {
                    1.0 - 0.5 * (-SQRT_2 * x).exp()
                }
            }
            BaseDensity::Logistic => {
                // 1 / (1 + exp(-x/s)), written to avoid overflow on both sides
                if x >= 0.0 {
                    1.0 / (1.0 + (-x / LOGISTIC_S).exp())
                } else {
                    let e = (x / LOGISTIC_S).exp();
                    e / (1.0 + e)
                }
            }
            BaseDensity::Table(t) => t.cdf(x),
        }
    }

    /// Inverse cdf for u in (0, 1).
    pub fn quantile(&self, u: f64) -> f64 {
        debug_assert!(u > 0.0 && u < 1.0, "quantile needs u in (0,1), got {u}");
        match self {
            BaseDensity::Gaussian => gaussian_quantile(u),
            BaseDensity::Laplace => {
                if u < 0.5 {
                    (2.0 * u).ln() / SQRT_2
                } else {
                    -(2.0 * (1.0 - u)).ln() / SQRT_2
                }
            }
            BaseDensity::Logistic => LOGISTIC_S * (u / (1.0 - u)).ln(),
            BaseDensity::Table(t) => t.quantile(u),
        }
    }

    pub fn mean(&self) -> f64 {
        match self {
            BaseDensity::Table(t) => t.mean(),
            _ => 0.0,
        }
    }

    pub fn variance(&self) -> f64 {
        match self {
            BaseDensity::Table(t) => t.variance(),
            _ => 1.0,
        }
    }

    pub fn support(&self) -> Interval {
        match self {
            BaseDensity::Table(t) => t.support(),
            _ => Interval::real_line(),
        }
    }

    /// Whether the base is usable in scale and location-scale families.
    pub fn is_standardized(&self, tol: f64) -> bool {
        self.mean().abs() <= tol && (self.variance() - 1.0).abs() <= tol
    }
}
