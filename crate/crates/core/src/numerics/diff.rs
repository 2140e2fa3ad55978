//! Central finite differences and Richardson extrapolation.

use super::quad::QuadError;

/// Step size used by [`central_diff_auto`]: 1e-5 * max(1, |x|) balances
/// truncation against round-off at double precision.
pub fn default_step(x: f64) -> f64 {
    1e-5 * x.abs().max(1.0)
}

/// Second-order central difference (f(x+h) - f(x-h)) / 2h.
pub fn central_diff<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64, QuadError> {
    let fp = f(x + h);
    let fm = f(x - h);
    if !fp.is_finite() {
        return Err(QuadError::NonFiniteIntegrand { x: x + h });
    }
    if !fm.is_finite() {
        return Err(QuadError::NonFiniteIntegrand { x: x - h });
    }
    Ok((fp - fm) / (2.0 * h))
}

/// Central difference with the default step.
pub fn central_diff_auto<F: Fn(f64) -> f64>(f: F, x: f64) -> Result<f64, QuadError> {
    let h = default_step(x);
    central_diff(f, x, h)
}

/// One-sided derivative at `x` by Richardson extrapolation of the forward
/// difference quotient (f(x+h) - f(x)) / h, eliminating the O(h) term.
/// Useful when `f` is only defined for arguments >= x.
pub fn richardson_forward<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> Result<f64, QuadError> {
    let f0 = f(x);
    let d = |step: f64| (f(x + step) - f0) / step;
    let d1 = d(h);
    let d2 = d(0.5 * h);
    let r = 2.0 * d2 - d1;
    if r.is_finite() {
        Ok(r)
    } else {
        Err(QuadError::NonFiniteIntegrand { x })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::special::{gaussian_cdf, gaussian_pdf};

    #[test]
    fn quadratic_is_exact() {
        let d = central_diff(|x| x * x, 3.0, 1e-5).unwrap();
        assert!((d - 6.0).abs() < 1e-8);
    }

    #[test]
    fn sine_at_zero() {
        let h = 1e-4;
        let d = central_diff(f64::sin, 0.0, h).unwrap();
        assert!((d - 1.0).abs() < h * h);
    }

    #[test]
    fn gaussian_cdf_derivative_is_pdf() {
        let d = central_diff_auto(gaussian_cdf, 0.0).unwrap();
        assert!((d - gaussian_pdf(0.0)).abs() < 1e-10);
    }

    #[test]
    fn central_diff_is_second_order() {
        // Richardson check: halving h must shrink the error ~4x on smooth f.
        let f = |x: f64| x.exp() * x.sin();
        let x = 0.7;
        let exact = x.exp() * (x.sin() + x.cos());
        let e1 = (central_diff(f, x, 1e-3).unwrap() - exact).abs();
        let e2 = (central_diff(f, x, 5e-4).unwrap() - exact).abs();
        let ratio = e1 / e2;
        assert!(
            (3.0..5.0).contains(&ratio),
            "order-2 ratio expected ~4, got {ratio}"
        );
    }

    #[test]
    fn non_finite_values_error() {
        assert!(central_diff(|x| 1.0 / x, 1e-6, 1e-5).is_err());
    }

    #[test]
    fn richardson_forward_on_sqrt_like_smooth_part() {
        let d = richardson_forward(|x| x * x + 3.0 * x, 0.0, 1e-4).unwrap();
        assert!((d - 3.0).abs() < 1e-8);
    }
}
