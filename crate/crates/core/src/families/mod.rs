//! One-dimensional parametric families: location, scale, and location-scale
//! families over exchangeable base densities, plus fully custom families.
//!
//! A location-scale family has density p(x; mu, sigma) = f((x - mu)/sigma)/sigma
//! with a standardized base f (mean zero, variance one), so its mean and
//! variance are mu and sigma^2. Scale families require the same
//! standardization; location families accept any base.
//!
//! Assumption (documented, not enforced pointwise): the pdf is continuous and
//! strictly positive on the interior of the support, which is what the score
//! solver in `wscore` needs.

pub mod base;
pub mod descriptor;
pub mod table;

pub use base::BaseDensity;
pub use descriptor::FamilyDescriptor;
pub use table::TableDensity;

use std::sync::Arc;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::numerics::diff::{central_diff, default_step};
use crate::numerics::quad::QuadError;

/// Tail probability clipped off each side when an infinite support is
/// truncated for quadrature. The leftover mass (and its second-moment
/// contribution) stays below 1e-9 for all built-in bases.
pub const TAIL_EPS: f64 = 1e-12;

/// Tolerance on |mean| and |variance - 1| for bases used in scale work.
pub const STANDARDIZED_TOL: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("base '{name}' is not standardized (mean {mean:e}, variance {variance})")]
    NotStandardized {
        name: String,
        mean: f64,
        variance: f64,
    },
    #[error("invalid theta {theta:?}: {reason}")]
    InvalidTheta { theta: Vec<f64>, reason: String },
    #[error("parameter index {index} out of range (param_dim {dim})")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("sample size must be at least 1")]
    EmptySample,
    #[error("invalid cdf table: {0}")]
    BadTable(String),
    #[error("bad family descriptor: {0}")]
    Descriptor(String),
    #[error(transparent)]
    Numerics(#[from] QuadError),
}

/// Closed interval of the real line, possibly unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn real_line() -> Self {
        Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Location,
    Scale,
    LocationScale,
    Custom,
}

type XThetaFn = dyn Fn(f64, &[f64]) -> f64 + Send + Sync;
type DthetaFn = dyn Fn(f64, &[f64], usize) -> f64 + Send + Sync;
type SupportFn = dyn Fn(&[f64]) -> Interval + Send + Sync;
type ValidateFn = dyn Fn(&[f64]) -> Result<(), String> + Send + Sync;

/// A family defined by user-supplied evaluators. `pdf` and `dtheta_cdf` are
/// optional; missing ones are derived by central finite differences.
#[derive(Clone)]
pub struct CustomFamily {
    pub name: String,
    pub param_dim: usize,
    pdf: Option<Arc<XThetaFn>>,
    cdf: Arc<XThetaFn>,
    quantile: Arc<XThetaFn>,
    dtheta_cdf: Option<Arc<DthetaFn>>,
    support: Arc<SupportFn>,
    validate: Option<Arc<ValidateFn>>,
}

impl CustomFamily {
    pub fn new(
        name: impl Into<String>,
        param_dim: usize,
        cdf: impl Fn(f64, &[f64]) -> f64 + Send + Sync + 'static,
        quantile: impl Fn(f64, &[f64]) -> f64 + Send + Sync + 'static,
    ) -> Self {
        CustomFamily {
            name: name.into(),
            param_dim,
            pdf: None,
            cdf: Arc::new(cdf),
            quantile: Arc::new(quantile),
            dtheta_cdf: None,
            support: Arc::new(|_| Interval::real_line()),
            validate: None,
        }
    }

    pub fn with_pdf(mut self, pdf: impl Fn(f64, &[f64]) -> f64 + Send + Sync + 'static) -> Self {
        self.pdf = Some(Arc::new(pdf));
        self
    }

    pub fn with_dtheta_cdf(
        mut self,
        d: impl Fn(f64, &[f64], usize) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.dtheta_cdf = Some(Arc::new(d));
        self
    }

    pub fn with_support(mut self, s: impl Fn(&[f64]) -> Interval + Send + Sync + 'static) -> Self {
        self.support = Arc::new(s);
        self
    }

    pub fn with_validator(
        mut self,
        v: impl Fn(&[f64]) -> Result<(), String> + Send + Sync + 'static,
    ) -> Self {
        self.validate = Some(Arc::new(v));
        self
    }
}

impl std::fmt::Debug for CustomFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CustomFamily")
            .field("name", &self.name)
            .field("param_dim", &self.param_dim)
            .finish()
    }
}

#[derive(Debug, Clone)]
enum FamilyRepr {
    Location(BaseDensity),
    Scale(BaseDensity),
    LocationScale(BaseDensity),
    Custom(CustomFamily),
}

/// A theta-indexed density on the real line with pdf/cdf/quantile and
/// parameter-derivative evaluators. Immutable after construction and safe
/// to share across threads.
#[derive(Debug, Clone)]
pub struct ParametricFamily1D {
    repr: FamilyRepr,
    warnings: Vec<String>,
}

impl ParametricFamily1D {
    /// Location family p(x; theta) = f(x - theta). Any base is accepted.
    pub fn location(base: BaseDensity) -> Self {
        ParametricFamily1D {
            repr: FamilyRepr::Location(base),
            warnings: Vec::new(),
        }
    }

    /// Scale family p(x; theta) = f(x/theta)/theta, theta > 0, standardized base.
    pub fn scale(base: BaseDensity) -> Result<Self, FamilyError> {
        Self::require_standardized(&base)?;
        Ok(ParametricFamily1D {
            repr: FamilyRepr::Scale(base),
            warnings: Vec::new(),
        })
    }

    /// Location-scale family p(x; (mu, sigma)) = f((x - mu)/sigma)/sigma.
    pub fn location_scale(base: BaseDensity) -> Result<Self, FamilyError> {
        Self::require_standardized(&base)?;
        Ok(ParametricFamily1D {
            repr: FamilyRepr::LocationScale(base),
            warnings: Vec::new(),
        })
    }

    pub fn custom(custom: CustomFamily) -> Self {
        let mut warnings = Vec::new();
        if custom.pdf.is_none() {
            warnings.push(format!(
                "family '{}': pdf derived from cdf by central differences; \
                 expect reduced accuracy near the support boundary",
                custom.name
            ));
        }
        ParametricFamily1D {
            repr: FamilyRepr::Custom(custom),
            warnings,
        }
    }

    /// One-parameter curve t -> theta(t) through this family.
    pub fn reparametrized(
        self,
        name: impl Into<String>,
        map: impl Fn(f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        let map = Arc::new(map);
        let inner = Arc::new(self);
        let (f1, f2, f3, f4, f5) = (
            inner.clone(),
            inner.clone(),
            inner.clone(),
            inner.clone(),
            inner.clone(),
        );
        let (m1, m2, m3, m4, m5) = (
            map.clone(),
            map.clone(),
            map.clone(),
            map.clone(),
            map.clone(),
        );
        let custom = CustomFamily::new(
            name,
            1,
            move |x, t| f1.cdf(x, &m1(t[0])),
            move |u, t| f2.quantile(u, &m2(t[0])),
        )
        .with_pdf(move |x, t| f3.pdf(x, &m3(t[0])))
        .with_support(move |t| f4.support(&m4(t[0])))
        .with_validator(move |t| {
            f5.check_theta(&m5(t[0]))
                .map_err(|e| format!("mapped theta invalid: {e}"))
        });
        ParametricFamily1D::custom(custom)
    }

    /// Gaussian curve t -> N(mu(t), sigma(t)^2) as a one-parameter family.
    pub fn gaussian_curve(
        mu: impl Fn(f64) -> f64 + Send + Sync + 'static,
        sigma: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        ParametricFamily1D::location_scale(BaseDensity::Gaussian)
            .expect("gaussian base is standardized")
            .reparametrized("gaussian-curve", move |t| vec![mu(t), sigma(t)])
    }

    fn require_standardized(base: &BaseDensity) -> Result<(), FamilyError> {
        if base.is_standardized(STANDARDIZED_TOL) {
            Ok(())
        } else {
            Err(FamilyError::NotStandardized {
                name: base.name().to_string(),
                mean: base.mean(),
                variance: base.variance(),
            })
        }
    }

    pub fn kind(&self) -> FamilyKind {
        match self.repr {
            FamilyRepr::Location(_) => FamilyKind::Location,
            FamilyRepr::Scale(_) => FamilyKind::Scale,
            FamilyRepr::LocationScale(_) => FamilyKind::LocationScale,
            FamilyRepr::Custom(_) => FamilyKind::Custom,
        }
    }

    pub fn base(&self) -> Option<&BaseDensity> {
        match &self.repr {
            FamilyRepr::Location(b) | FamilyRepr::Scale(b) | FamilyRepr::LocationScale(b) => {
                Some(b)
            }
            FamilyRepr::Custom(_) => None,
        }
    }

    pub fn name(&self) -> String {
        match &self.repr {
            FamilyRepr::Location(b) => format!("location[{}]", b.name()),
            FamilyRepr::Scale(b) => format!("scale[{}]", b.name()),
            FamilyRepr::LocationScale(b) => format!("location-scale[{}]", b.name()),
            FamilyRepr::Custom(c) => c.name.clone(),
        }
    }

    pub fn param_dim(&self) -> usize {
        match &self.repr {
            FamilyRepr::Location(_) | FamilyRepr::Scale(_) => 1,
            FamilyRepr::LocationScale(_) => 2,
            FamilyRepr::Custom(c) => c.param_dim,
        }
    }

    /// Accumulated accuracy warnings (e.g. pdf derived by differentiation).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn check_theta(&self, theta: &[f64]) -> Result<(), FamilyError> {
        let bad = |reason: &str| {
            Err(FamilyError::InvalidTheta {
                theta: theta.to_vec(),
                reason: reason.to_string(),
            })
        };
        if theta.len() != self.param_dim() {
            return bad(&format!("expected {} parameters", self.param_dim()));
        }
        if theta.iter().any(|t| !t.is_finite()) {
            return bad("non-finite parameter");
        }
        match &self.repr {
            FamilyRepr::Location(_) => Ok(()),
            FamilyRepr::Scale(_) => {
                if theta[0] > 0.0 {
                    Ok(())
                } else {
                    bad("scale must be positive")
                }
            }
            FamilyRepr::LocationScale(_) => {
                if theta[1] > 0.0 {
                    Ok(())
                } else {
                    bad("sigma must be positive")
                }
            }
            FamilyRepr::Custom(c) => match &c.validate {
                Some(v) => v(theta).or_else(|reason| bad(&reason)),
                None => Ok(()),
            },
        }
    }

    pub fn pdf(&self, x: f64, theta: &[f64]) -> f64 {
        match &self.repr {
            FamilyRepr::Location(b) => b.pdf(x - theta[0]),
            FamilyRepr::Scale(b) => b.pdf(x / theta[0]) / theta[0],
            FamilyRepr::LocationScale(b) => b.pdf((x - theta[0]) / theta[1]) / theta[1],
            FamilyRepr::Custom(c) => match &c.pdf {
                Some(p) => p(x, theta),
                None => {
                    let cdf = &c.cdf;
                    central_diff(|y| cdf(y, theta), x, default_step(x)).unwrap_or(f64::NAN)
                }
            },
        }
    }

    pub fn cdf(&self, x: f64, theta: &[f64]) -> f64 {
        match &self.repr {
            FamilyRepr::Location(b) => b.cdf(x - theta[0]),
            FamilyRepr::Scale(b) => b.cdf(x / theta[0]),
            FamilyRepr::LocationScale(b) => b.cdf((x - theta[0]) / theta[1]),
            FamilyRepr::Custom(c) => (c.cdf)(x, theta),
        }
    }

    pub fn quantile(&self, u: f64, theta: &[f64]) -> f64 {
        match &self.repr {
            FamilyRepr::Location(b) => theta[0] + b.quantile(u),
            FamilyRepr::Scale(b) => theta[0] * b.quantile(u),
            FamilyRepr::LocationScale(b) => theta[0] + theta[1] * b.quantile(u),
            FamilyRepr::Custom(c) => (c.quantile)(u, theta),
        }
    }

    /// dF/dtheta_i at (x, theta): analytic for the built-in kinds, central
    /// finite differences otherwise.
    pub fn dtheta_cdf(&self, x: f64, theta: &[f64], i: usize) -> Result<f64, FamilyError> {
        let dim = self.param_dim();
        if i >= dim {
            return Err(FamilyError::IndexOutOfRange { index: i, dim });
        }
        Ok(match &self.repr {
            FamilyRepr::Location(_) => -self.pdf(x, theta),
            FamilyRepr::Scale(_) => -(x / theta[0]) * self.pdf(x, theta),
            FamilyRepr::LocationScale(_) => {
                if i == 0 {
                    -self.pdf(x, theta)
                } else {
                    -((x - theta[0]) / theta[1]) * self.pdf(x, theta)
                }
            }
            FamilyRepr::Custom(c) => match &c.dtheta_cdf {
                Some(d) => d(x, theta, i),
                None => {
                    let cdf = &c.cdf;
                    central_diff(
                        |ti| {
                            let mut th = theta.to_vec();
                            th[i] = ti;
                            cdf(x, &th)
                        },
                        theta[i],
                        default_step(theta[i]),
                    )?
                }
            },
        })
    }

    pub fn support(&self, theta: &[f64]) -> Interval {
        match &self.repr {
            FamilyRepr::Location(b) => {
                let s = b.support();
                Interval {
                    lo: s.lo + theta[0],
                    hi: s.hi + theta[0],
                }
            }
            FamilyRepr::Scale(b) => {
                let s = b.support();
                Interval {
                    lo: s.lo * theta[0],
                    hi: s.hi * theta[0],
                }
            }
            FamilyRepr::LocationScale(b) => {
                let s = b.support();
                Interval {
                    lo: theta[0] + s.lo * theta[1],
                    hi: theta[0] + s.hi * theta[1],
                }
            }
            FamilyRepr::Custom(c) => (c.support)(theta),
        }
    }

    /// Finite window [quantile(eps), quantile(1-eps)] used for quadrature
    /// over unbounded supports, with eps = [`TAIL_EPS`].
    pub fn truncated_support(&self, theta: &[f64]) -> (f64, f64) {
        let s = self.support(theta);
        let lo = if s.lo.is_finite() {
            s.lo
        } else {
            self.quantile(TAIL_EPS, theta)
        };
        let hi = if s.hi.is_finite() {
            s.hi
        } else {
            self.quantile(1.0 - TAIL_EPS, theta)
        };
        (lo, hi)
    }

    /// Inverse-cdf sampling from a seeded uniform stream; deterministic in
    /// (theta, n, seed).
    pub fn sample(&self, theta: &[f64], n: usize, seed: u64) -> Result<Vec<f64>, FamilyError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_with(theta, n, &mut rng)
    }

    /// Inverse-cdf sampling from a caller-supplied RNG.
    pub fn sample_with<R: Rng>(
        &self,
        theta: &[f64],
        n: usize,
        rng: &mut R,
    ) -> Result<Vec<f64>, FamilyError> {
        if n == 0 {
            return Err(FamilyError::EmptySample);
        }
        self.check_theta(theta)?;
        Ok((0..n)
            .map(|_| self.quantile(open_unit(rng.random::<f64>()), theta))
            .collect())
    }
}

/// Map a [0,1) draw into (0,1); the p = 0 corner would send quantiles to
/// -infinity.
#[inline]
pub(crate) fn open_unit(u: f64) -> f64 {
    if u > 0.0 {
        u
    } else {
        f64::MIN_POSITIVE
    }
}

/// A validated parameter point for a specific family.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterPoint {
    values: Vec<f64>,
}

impl ParameterPoint {
    pub fn new(family: &ParametricFamily1D, values: Vec<f64>) -> Result<Self, FamilyError> {
        family.check_theta(&values)?;
        Ok(ParameterPoint { values })
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

impl std::ops::Deref for ParameterPoint {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::gaussian_pdf;
    use proptest::prelude::*;
    use std::f64::consts::SQRT_2;

    #[test]
    fn location_scale_pdf_examples() {
        let g = ParametricFamily1D::location_scale(BaseDensity::Gaussian).unwrap();
        assert!((g.pdf(0.0, &[0.0, 1.0]) - 0.398_942_280_401_432_7).abs() < 1e-12);
        assert!((g.quantile(0.5, &[3.0, 2.0]) - 3.0).abs() < 1e-12);

        let l = ParametricFamily1D::location_scale(BaseDensity::Laplace).unwrap();
        for &(mu, sigma) in &[(0.0, 1.0), (2.0, 0.5), (-1.0, 3.0)] {
            let got = l.pdf(mu, &[mu, sigma]);
            assert!((got - 1.0 / (SQRT_2 * sigma)).abs() < 1e-12);
        }
    }

    #[test]
    fn location_scale_rejects_nonstandard_base() {
        let xs: Vec<f64> = (0..101).map(|i| i as f64 / 100.0).collect();
        let cdf: Vec<f64> = xs.clone();
        let uniform01 = BaseDensity::Table(Arc::new(TableDensity::new(xs, cdf).unwrap()));
        assert!(matches!(
            ParametricFamily1D::location_scale(uniform01),
            Err(FamilyError::NotStandardized { .. })
        ));
    }

    #[test]
    fn sampling_is_deterministic_and_rejects_bad_theta() {
        let g = ParametricFamily1D::location_scale(BaseDensity::Gaussian).unwrap();
        let a = g.sample(&[0.0, 1.0], 100, 1).unwrap();
        let b = g.sample(&[0.0, 1.0], 100, 1).unwrap();
        assert_eq!(a, b);
        assert!(g.sample(&[0.0, -1.0], 10, 1).is_err());
        assert!(g.sample(&[0.0, 1.0], 0, 1).is_err());
    }

    #[test]
    fn sample_mean_obeys_law_of_large_numbers() {
        let g = ParametricFamily1D::location_scale(BaseDensity::Gaussian).unwrap();
        let n = 100_000;
        let xs = g.sample(&[0.0, 1.0], n, 1).unwrap();
        let mean = xs.iter().sum::<f64>() / n as f64;
        assert!(mean.abs() < 3.0 / (n as f64).sqrt(), "mean {mean}");
    }

    #[test]
    fn laplace_sample_variance_near_one() {
        let l = ParametricFamily1D::location_scale(BaseDensity::Laplace).unwrap();
        let n = 100_000;
        let xs = l.sample(&[0.0, 1.0], n, 2).unwrap();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
        // Analytic variance of the paper's Laplace is sigma^2 = 1.
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }

    #[test]
    fn empirical_cdf_passes_kolmogorov_smirnov() {
        for base in [BaseDensity::Gaussian, BaseDensity::Laplace] {
            let fam = ParametricFamily1D::location_scale(base).unwrap();
            let theta = [0.7, 1.3];
            let n = 100_000;
            let mut xs = fam.sample(&theta, n, 11).unwrap();
            xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut d = 0.0f64;
            for (i, &x) in xs.iter().enumerate() {
                let f = fam.cdf(x, &theta);
                d = d.max((f - i as f64 / n as f64).abs());
                d = d.max(((i + 1) as f64 / n as f64 - f).abs());
            }
            // 99.9% KS critical value is ~1.95/sqrt(n).
            assert!(d * (n as f64).sqrt() < 1.95, "KS statistic {d}");
        }
    }

    #[test]
    fn dtheta_cdf_analytic_values() {
        let loc = ParametricFamily1D::location(BaseDensity::Laplace);
        for &x in &[-1.0, 0.3, 2.0] {
            let d = loc.dtheta_cdf(x, &[0.5], 0).unwrap();
            assert!((d + loc.pdf(x, &[0.5])).abs() < 1e-14);
        }

        let sc = ParametricFamily1D::scale(BaseDensity::Gaussian).unwrap();
        assert_eq!(sc.dtheta_cdf(0.0, &[2.0], 0).unwrap(), 0.0);

        let ls = ParametricFamily1D::location_scale(BaseDensity::Gaussian).unwrap();
        let d = ls.dtheta_cdf(1.0, &[0.0, 1.0], 1).unwrap();
        assert!((d + gaussian_pdf(1.0)).abs() < 1e-12, "dF/dsigma {d}");

        assert!(matches!(
            ls.dtheta_cdf(1.0, &[0.0, 1.0], 2),
            Err(FamilyError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn dtheta_cdf_matches_finite_differences() {
        let bases = [BaseDensity::Gaussian, BaseDensity::Laplace, BaseDensity::Logistic];
        for base in bases {
            let fam = ParametricFamily1D::location_scale(base).unwrap();
            let theta = [0.4, 1.7];
            for i in 0..2 {
                for k in 0..21 {
                    let x = -4.0 + 0.4 * k as f64;
                    let analytic = fam.dtheta_cdf(x, &theta, i).unwrap();
                    let h = 1e-5 * theta[i].abs().max(1.0);
                    let fd = central_diff(
                        |t| {
                            let mut th = theta.to_vec();
                            th[i] = t;
                            fam.cdf(x, &th)
                        },
                        theta[i],
                        h,
                    )
                    .unwrap();
                    assert!(
                        (analytic - fd).abs() < 1e-6,
                        "{} i={i} x={x}: {analytic} vs {fd}",
                        fam.name()
                    );
                }
            }
        }
    }

    #[test]
    fn custom_family_without_pdf_warns_and_differentiates() {
        let fam = ParametricFamily1D::custom(CustomFamily::new(
            "shifted-gaussian",
            1,
            |x, t| crate::numerics::gaussian_cdf(x - t[0]),
            |u, t| t[0] + crate::numerics::gaussian_quantile(u),
        ));
        assert_eq!(fam.warnings().len(), 1);
        let p = fam.pdf(0.3, &[0.1]);
        assert!((p - gaussian_pdf(0.2)).abs() < 1e-9);
        // dtheta_cdf falls back to finite differences.
        let d = fam.dtheta_cdf(0.3, &[0.1], 0).unwrap();
        assert!((d + gaussian_pdf(0.2)).abs() < 1e-8);
    }

    #[test]
    fn parameter_point_validates() {
        let g = ParametricFamily1D::location_scale(BaseDensity::Gaussian).unwrap();
        assert!(ParameterPoint::new(&g, vec![0.0, 1.0]).is_ok());
        assert!(ParameterPoint::new(&g, vec![0.0, 0.0]).is_err());
        assert!(ParameterPoint::new(&g, vec![0.0]).is_err());
    }

    proptest! {
        // Exchanging base densities leaves the location-scale structure
        // intact: composition identities hold for every standardized base.
        #[test]
        fn location_scale_invariants_hold_for_all_bases(
            base_ix in 0usize..3,
            mu in -5.0f64..5.0,
            sigma in 0.1f64..4.0,
            u in 0.01f64..0.99,
        ) {
            let base = [BaseDensity::Gaussian, BaseDensity::Laplace, BaseDensity::Logistic][base_ix].clone();
            let fam = ParametricFamily1D::location_scale(base.clone()).unwrap();
            let theta = [mu, sigma];

            // pdf composition
            let x = mu + 0.7 * sigma;
            prop_assert!((fam.pdf(x, &theta) - base.pdf((x - mu) / sigma) / sigma).abs() < 1e-12);

            // quantile/cdf round trip on interior points
            let q = fam.quantile(u, &theta);
            prop_assert!((fam.cdf(q, &theta) - u).abs() < 1e-8);

            // cdf composition
            prop_assert!((fam.cdf(x, &theta) - base.cdf((x - mu) / sigma)).abs() < 1e-12);
        }

        #[test]
        fn quantile_cdf_identity_all_kinds(
            u in 0.001f64..0.999,
            theta0 in -3.0f64..3.0,
            sigma in 0.2f64..3.0,
        ) {
            let loc = ParametricFamily1D::location(BaseDensity::Logistic);
            prop_assert!((loc.cdf(loc.quantile(u, &[theta0]), &[theta0]) - u).abs() < 1e-8);

            let sc = ParametricFamily1D::scale(BaseDensity::Laplace).unwrap();
            prop_assert!((sc.cdf(sc.quantile(u, &[sigma]), &[sigma]) - u).abs() < 1e-8);

            let ls = ParametricFamily1D::location_scale(BaseDensity::Gaussian).unwrap();
            prop_assert!((ls.cdf(ls.quantile(u, &[theta0, sigma]), &[theta0, sigma]) - u).abs() < 1e-8);
        }
    }
}
