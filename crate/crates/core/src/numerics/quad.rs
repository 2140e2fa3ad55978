//! One-dimensional quadrature: adaptive Simpson and fixed Gauss-Legendre
//! panels behind a single `integrate` entry point.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("max depth {max_depth} exceeded; achieved tolerance ~{achieved:e} (requested {requested:e})")]
    MaxDepthExceeded {
        max_depth: u32,
        achieved: f64,
        requested: f64,
    },
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFiniteIntegrand { x: f64 },
    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },
}

/// Quadrature rule selector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadRule {
    AdaptiveSimpson,
    /// Fixed-order Gauss-Legendre rule applied on `panels` equal panels.
    GaussLegendrePanels { order: usize, panels: usize },
}

/// Quadrature configuration. `abs_tol`/`rel_tol` control the adaptive rule;
/// the Gauss-Legendre rule is non-adaptive and ignores them.
#[derive(Debug, Clone, Copy)]
pub struct Quadrature {
    pub rule: QuadRule,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            rule: QuadRule::AdaptiveSimpson,
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_depth: 60,
        }
    }
}

impl Quadrature {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        Quadrature {
            abs_tol,
            rel_tol,
            ..Quadrature::default()
        }
    }
}

/// Integrate `f` over `[a, b]` (either orientation) with the given rule.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, quad: &Quadrature) -> Result<f64, QuadError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(QuadError::InvalidInterval { a, b });
    }
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate(f, b, a, quad).map(|v| -v);
    }
    match quad.rule {
        QuadRule::AdaptiveSimpson => adaptive_simpson(&f, a, b, quad),
        QuadRule::GaussLegendrePanels { order, panels } => {
            gauss_legendre_panels(&f, a, b, order, panels)
        }
    }
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64, QuadError> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(QuadError::NonFiniteIntegrand { x })
    }
}

fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    quad: &Quadrature,
) -> Result<f64, QuadError> {
    let m = 0.5 * (a + b);
    let fa = eval(f, a)?;
    let fm = eval(f, m)?;
    let fb = eval(f, b)?;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // Rough magnitude estimate so the relative tolerance has something to
    // bite on before recursion starts.
    let scale = whole.abs().max(quad.abs_tol);
    let tol = quad.abs_tol.max(quad.rel_tol * scale);
    let mut overshoot = 0.0f64;
    let total = simpson_rec(
        f,
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        tol,
        quad.max_depth,
        &mut overshoot,
    )?;
    let requested = quad.abs_tol.max(quad.rel_tol * total.abs());
    if overshoot > requested {
        return Err(QuadError::MaxDepthExceeded {
            max_depth: quad.max_depth,
            achieved: overshoot,
            requested,
        });
    }
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    overshoot: &mut f64,
) -> Result<f64, QuadError> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = eval(f, lm)?;
    let frm = eval(f, rm)?;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let err = (left + right - whole) / 15.0;
    if err.abs() <= tol || (b - a) < 1e-15 * (a.abs() + b.abs() + 1.0) {
        return Ok(left + right + err);
    }
    if depth == 0 {
        *overshoot += err.abs();
        return Ok(left + right + err);
    }
    let l = simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, overshoot)?;
    let r = simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, overshoot)?;
    Ok(l + r)
}

fn gauss_legendre_panels<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    order: usize,
    panels: usize,
) -> Result<f64, QuadError> {
    let order = order.max(2);
    let panels = panels.max(1);
    let (nodes, weights) = gauss_legendre_nodes(order);
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut acc = 0.0;
        for (&x, &w) in nodes.iter().zip(weights.iter()) {
            acc += w * eval(f, mid + half * x)?;
        }
        total += acc * half;
    }
    Ok(total)
}

/// Nodes and weights of the `order`-point Gauss-Legendre rule on [-1, 1],
/// via Newton iteration on the Legendre polynomial from Chebyshev guesses.
pub fn gauss_legendre_nodes(order: usize) -> (Vec<f64>, Vec<f64>) {
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_deriv(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        let (_, d) = legendre_and_deriv(n, 0.0);
        nodes[n / 2] = 0.0;
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
