//! Cdf-table densities: a strictly increasing cdf sampled on a grid, with
//! pdf obtained by differencing. Moments are exact for the interpolant.

use crate::families::{FamilyError, Interval};

/// Piecewise-linear cdf on a grid; the implied pdf is piecewise constant.
#[derive(Debug, Clone)]
pub struct TableDensity {
    xs: Vec<f64>,
    cdf: Vec<f64>,
    mean: f64,
    variance: f64,
}

impl TableDensity {
    pub fn new(xs: Vec<f64>, mut cdf: Vec<f64>) -> Result<Self, FamilyError> {
        if xs.len() != cdf.len() || xs.len() < 2 {
            return Err(FamilyError::BadTable(
                "xs and cdf must have equal length >= 2".into(),
            ));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(FamilyError::BadTable("xs must be strictly increasing".into()));
        }
        if cdf.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(FamilyError::BadTable(
                "cdf must be strictly increasing".into(),
            ));
        }
        let first = cdf[0];
        let last = *cdf.last().unwrap();
        if first.abs() > 1e-8 || (last - 1.0).abs() > 1e-8 {
            return Err(FamilyError::BadTable(format!(
                "cdf must run from 0 to 1 (got {first} .. {last})"
            )));
        }
        cdf[0] = 0.0;
        let n = cdf.len();
        cdf[n - 1] = 1.0;

        // Exact moments of the piecewise-constant density.
        let mut mean = 0.0;
        let mut m2 = 0.0;
        for i in 0..xs.len() - 1 {
            let p = (cdf[i + 1] - cdf[i]) / (xs[i + 1] - xs[i]);
            mean += p * (xs[i + 1] * xs[i + 1] - xs[i] * xs[i]) / 2.0;
            m2 += p * (xs[i + 1].powi(3) - xs[i].powi(3)) / 3.0;
        }
        Ok(TableDensity {
            xs,
            cdf,
            mean,
            variance: m2 - mean * mean,
        })
    }

    fn segment(&self, x: f64) -> usize {
        match self.xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
            Ok(i) => i.min(self.xs.len() - 2),
            Err(0) => 0,
            Err(i) => (i - 1).min(self.xs.len() - 2),
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        if x < self.xs[0] || x > *self.xs.last().unwrap() {
            return 0.0;
        }
        let i = self.segment(x);
        (self.cdf[i + 1] - self.cdf[i]) / (self.xs[i + 1] - self.xs[i])
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= self.xs[0] {
            return 0.0;
        }
        if x >= *self.xs.last().unwrap() {
            return 1.0;
        }
        let i = self.segment(x);
        let t = (x - self.xs[i]) / (self.xs[i + 1] - self.xs[i]);
        self.cdf[i] + t * (self.cdf[i + 1] - self.cdf[i])
    }

    pub fn quantile(&self, u: f64) -> f64 {
        let u = u.clamp(0.0, 1.0);
        let i = match self
            .cdf
            .binary_search_by(|v| v.partial_cmp(&u).unwrap())
        {
            Ok(i) => return self.xs[i.min(self.xs.len() - 1)],
            Err(0) => 0,
            Err(i) => (i - 1).min(self.cdf.len() - 2),
        };
        let t = (u - self.cdf[i]) / (self.cdf[i + 1] - self.cdf[i]);
        self.xs[i] + t * (self.xs[i + 1] - self.xs[i])
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn variance(&self) -> f64 {
        self.variance
    }

    pub fn support(&self) -> Interval {
        Interval {
            lo: self.xs[0],
            hi: *self.xs.last().unwrap(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_table() -> TableDensity {
        // Triangular density on [-1, 1]: cdf tabulated on a fine grid.
        let n = 401;
        let xs: Vec<f64> = (0..n).map(|i| -1.0 + 2.0 * i as f64 / (n - 1) as f64).collect();
        let cdf = xs
            .iter()
            .map(|&x| {
                if x < 0.0 {
                    (1.0 + x) * (1.0 + x) / 2.0
                } else {
                    1.0 - (1.0 - x) * (1.0 - x) / 2.0
                }
            })
            .collect();
        TableDensity::new(xs, cdf).unwrap()
    }

    #[test]
    fn roundtrip_and_moments() {
        let t = triangle_table();
        for i in 1..100 {
            let u = i as f64 / 100.0;
            assert!((t.cdf(t.quantile(u)) - u).abs() < 1e-12);
        }
        assert!(t.mean().abs() < 1e-6);
        // Triangular variance is 1/6.
        assert!((t.variance() - 1.0 / 6.0).abs() < 1e-4);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(TableDensity::new(vec![0.0, 1.0], vec![0.0, 0.5]).is_err());
        assert!(TableDensity::new(vec![0.0, 0.0], vec![0.0, 1.0]).is_err());
        assert!(TableDensity::new(vec![0.0], vec![0.0]).is_err());
    }
}
