//! Uniform grids and grid-sampled wavefunctions.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// A uniform grid of `n_points` points spanning `[x_min, x_max]` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_max > x_min) {
            return Err(Error::InvalidParameter {
                name: "x_max",
                value: x_max,
                reason: "must exceed x_min",
            });
        }
        if n_points < 16 {
            return Err(Error::GridTooCoarse("grids need at least 16 points"));
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
        })
    }

    /// Grid spacing.
    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    /// The i-th grid point.
    pub fn point(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    /// All grid points, in order.
    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// A grid over the same interval with spacing halved (shared endpoints).
    pub fn refined(&self) -> Self {
        Self {
            x_min: self.x_min,
            x_max: self.x_max,
            n_points: 2 * self.n_points - 1,
        }
    }
}

/// A wavefunction sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveSample {
    pub grid: GridSpec,
    pub values: Vec<Complex64>,
}

impl WaveSample {
    pub fn new(grid: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n_points {
            return Err(Error::GridMismatch("sample length differs from grid size"));
        }
        Ok(Self { grid, values })
    }

    /// Sample a complex-valued function on the grid.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.points().iter().map(|&x| f(x)).collect();
        Self { grid, values }
    }

    /// Sample a real-valued function on the grid.
    pub fn from_real_fn(grid: GridSpec, f: impl Fn(f64) -> f64) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    /// |psi|^2 at every grid point.
    pub fn abs2(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// sup-norm distance to another sample on the same grid.
    pub fn sup_distance(&self, other: &WaveSample) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("sup_distance needs a common grid"));
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Index of the sample with the largest modulus.
    pub fn peak_index(&self) -> usize {
        let mut best = 0;
        let mut best_val = -1.0;
        for (i, v) in self.values.iter().enumerate() {
            let n = v.norm();
            if n > best_val {
                best_val = n;
                best = i;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_points_span_interval() {
        let g = GridSpec::new(-1.0, 1.0, 21).unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 21);
        assert_eq!(pts[0], -1.0);
        assert_eq!(*pts.last().unwrap(), 1.0);
        assert!((g.dx() - 0.1).abs() < 1e-15);
    }

    #[test]
    fn refined_grid_shares_endpoints() {
        let g = GridSpec::new(0.0, 2.0, 64).unwrap();
        let r = g.refined();
        assert_eq!(r.n_points, 127);
        assert_eq!(r.point(0), g.point(0));
        assert!((r.dx() - g.dx() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_tiny_or_inverted_grids() {
        assert!(GridSpec::new(0.0, 1.0, 8).is_err());
        assert!(GridSpec::new(1.0, 0.0, 32).is_err());
    }

    #[test]
    fn sample_length_must_match() {
        let g = GridSpec::new(0.0, 1.0, 32).unwrap();
        assert!(WaveSample::new(g, vec![Complex64::new(0.0, 0.0); 31]).is_err());
    }

    #[test]
    fn peak_index_finds_maximum_modulus() {
        let g = GridSpec::new(-4.0, 4.0, 801).unwrap();
        let s = WaveSample::from_real_fn(g, |x| (-(x - 1.0) * (x - 1.0)).exp());
        let peak = s.grid.point(s.peak_index());
        assert!((peak - 1.0).abs() <= g.dx());
    }
}
