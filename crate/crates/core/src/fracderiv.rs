//! Discrete fractional calculus: Grunwald-Letnikov derivatives of order
//! `0 < alpha <= 1` with the lower terminal fixed at the grid origin, a
//! power-rule oracle for them, and the semigroup residual that quantifies
//! how closely two half-derivatives compose to an ordinary derivative.

use crate::error::{Error, Result};
use statrs::function::gamma::gamma;

/// A real-valued function sampled on `[x0, x0 + (n-1) dx]`.
///
/// `x0` is also the lower terminal of every fractional derivative taken of
/// the sample; the operators here are terminal-dependent by definition.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    pub x0: f64,
    pub dx: f64,
    pub values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(x0: f64, dx: f64, values: Vec<f64>) -> Result<Self> {
        if !(dx > 0.0) || !dx.is_finite() {
            return Err(Error::InvalidParameter {
                name: "dx",
                value: dx,
                reason: "must be strictly positive and finite",
            });
        }
        if values.len() < 4 {
            return Err(Error::GridTooCoarse(
                "sampled functions need at least 4 samples",
            ));
        }
        Ok(Self { x0, dx, values })
    }

    /// Sample `f` on `[x0, x0 + (n-1) dx]`.
    pub fn from_fn(x0: f64, dx: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = (0..n).map(|i| f(x0 + i as f64 * dx)).collect();
        Self::new(x0, dx, values)
    }

    /// Parse from CSV text with header `x,value`.
    ///
    /// The x column must be uniformly spaced; `#`-prefixed lines are
    /// comments.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut rows: Vec<(f64, f64)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if rows.is_empty() && line.to_ascii_lowercase().starts_with("x,") {
                continue; // header
            }
            let mut parts = line.split(',');
            let x = parts
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: bad x value", lineno + 1)))?;
            let v = parts
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| Error::Parse(format!("line {}: bad value column", lineno + 1)))?;
            rows.push((x, v));
        }
        if rows.len() < 4 {
            return Err(Error::GridTooCoarse("CSV needs at least 4 data rows"));
        }
        let dx = rows[1].0 - rows[0].0;
        for w in rows.windows(2) {
            let step = w[1].0 - w[0].0;
            if (step - dx).abs() > 1e-9 * dx.abs().max(1.0) {
                return Err(Error::Parse("x column is not uniformly spaced".into()));
            }
        }
        Self::new(rows[0].0, dx, rows.iter().map(|r| r.1).collect())
    }

    fn index_of(&self, x: f64) -> Result<usize> {
        let t = (x - self.x0) / self.dx;
        let idx = t.round();
        if (t - idx).abs() > 1e-6 || idx < 0.0 || idx as usize >= self.values.len() {
            return Err(Error::PointOffGrid { x });
        }
        Ok(idx as usize)
    }
}

/// A fractional order in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder {
    alpha: f64,
}

impl FracOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "fractional order must lie in (0, 1]",
            });
        }
        Ok(Self { alpha })
    }

    /// Order 1/2, the case of interest for the damped wave equation.
    pub fn half() -> Self {
        Self { alpha: 0.5 }
    }

    pub fn value(&self) -> f64 {
        self.alpha
    }
}

/// Grunwald-Letnikov binomial weights `w_k = (-1)^k C(alpha, k)`, by the
/// stable recurrence `w_k = w_{k-1} (k - 1 - alpha) / k`.
fn gl_weights(alpha: f64, count: usize) -> Vec<f64> {
    let mut w = Vec::with_capacity(count);
    w.push(1.0);
    for k in 1..count {
        let prev = w[k - 1];
        w.push(prev * ((k as f64 - 1.0 - alpha) / k as f64));
    }
    w
}

fn gl_at_index(f: &SampledFunction, weights: &[f64], alpha: f64, idx: usize) -> f64 {
    let scale = f.dx.powf(-alpha);
    let sum: f64 = (0..=idx).map(|k| weights[k] * f.values[idx - k]).sum();
    scale * sum
}

/// Grunwald-Letnikov approximation of the order-`alpha` derivative of `f`
/// at the grid point `x`, with lower terminal `f.x0`.
///
/// Converges to the Riemann-Liouville value as `dx -> 0` for functions
/// continuous on the interval.
pub fn gl_derivative(f: &SampledFunction, alpha: FracOrder, x: f64) -> Result<f64> {
    let idx = f.index_of(x)?;
    if idx == 0 {
        return Err(Error::PointOffGrid { x });
    }
    let w = gl_weights(alpha.value(), idx + 1);
    Ok(gl_at_index(f, &w, alpha.value(), idx))
}

/// Closed-form fractional derivative of `x^p` with terminal 0:
/// `Gamma(p+1) / Gamma(p+1-alpha) * x^(p-alpha)`.
///
/// When `p + 1 - alpha` lands on a pole of the gamma function the
/// coefficient vanishes and the oracle returns 0 (the constant function
/// under an integer-order derivative).
pub fn power_rule_oracle(p: f64, alpha: FracOrder, x: f64) -> f64 {
    assert!(p >= 0.0 && x > 0.0);
    let z = p + 1.0 - alpha.value();
    if z <= 0.0 && (z - z.round()).abs() < 1e-12 {
        return 0.0;
    }
    gamma(p + 1.0) / gamma(z) * x.powf(p - alpha.value())
}

/// Residual `|D^{1/2}(D^{1/2} f)(x) - f'(x)|`, with `f'` the 3-point
/// central difference. Quantifies the operator identity that two
/// half-derivatives compose to one ordinary derivative.
pub fn semigroup_residual(f: &SampledFunction, x: f64) -> Result<f64> {
    let idx = f.index_of(x)?;
    if idx < 8 {
        return Err(Error::GridTooCoarse(
            "semigroup residual needs at least 8 points before x",
        ));
    }
    if idx + 1 >= f.values.len() {
        return Err(Error::PointOffGrid { x });
    }
    let half = FracOrder::half();
    let w = gl_weights(half.value(), idx + 1);
    // First pass: half-derivative on every grid point up to x.
    let g_values: Vec<f64> = (0..=idx)
        .map(|i| gl_at_index(f, &w, half.value(), i))
        .collect();
    let g = SampledFunction {
        x0: f.x0,
        dx: f.dx,
        values: g_values,
    };
    // Second pass: half-derivative of the half-derivative, at x.
    let composed = gl_at_index(&g, &w, half.value(), idx);
    let fprime = (f.values[idx + 1] - f.values[idx - 1]) / (2.0 * f.dx);
    Ok((composed - fprime).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn grid_fn(f: impl Fn(f64) -> f64, dx: f64, upto: f64) -> SampledFunction {
        let n = (upto / dx).round() as usize + 2;
        SampledFunction::from_fn(0.0, dx, n, f).unwrap()
    }

    #[test]
    fn half_derivative_of_identity() {
        let f = grid_fn(|x| x, 1e-4, 1.0);
        let d = gl_derivative(&f, FracOrder::half(), 1.0).unwrap();
        let exact = 2.0 / PI.sqrt();
        assert!((d - exact).abs() < 1e-3, "{d} vs {exact}");
        assert!((exact - 1.1284).abs() < 1e-4);
    }

    #[test]
    fn half_derivative_of_constant() {
        let f = grid_fn(|_| 1.0, 1e-4, 1.0);
        let d = gl_derivative(&f, FracOrder::half(), 1.0).unwrap();
        let exact = 1.0 / PI.sqrt();
        assert!((d - exact).abs() < 1e-3, "{d} vs {exact}");
    }

    #[test]
    fn integer_order_recovers_ordinary_derivative() {
        let f = grid_fn(|x| x * x, 1e-4, 1.0);
        let d = gl_derivative(&f, FracOrder::new(1.0).unwrap(), 1.0).unwrap();
        assert!((d - 2.0).abs() < 1e-3, "{d}");
    }

    #[test]
    fn alpha_one_is_exactly_the_backward_difference() {
        let f = grid_fn(|x| (3.0 * x).sin(), 1e-3, 1.0);
        let idx = 500;
        let x = f.x0 + idx as f64 * f.dx;
        let d = gl_derivative(&f, FracOrder::new(1.0).unwrap(), x).unwrap();
        let backward = (f.values[idx] - f.values[idx - 1]) / f.dx;
        assert!((d - backward).abs() < 1e-12);
    }

    #[test]
    fn power_rule_values() {
        let half = FracOrder::half();
        assert!((power_rule_oracle(1.0, half, 1.0) - 2.0 / PI.sqrt()).abs() < 1e-14);
        let v = power_rule_oracle(0.0, half, 4.0);
        assert!((v - 1.0 / (2.0 * PI.sqrt())).abs() < 1e-14);
        assert!((v - 0.2821).abs() < 1e-4);
        let d = power_rule_oracle(2.0, FracOrder::new(1.0).unwrap(), 3.0);
        assert!((d - 6.0).abs() < 1e-12 * 6.0);
        // Pole of Gamma at p = 0, alpha = 1: derivative of a constant.
        assert_eq!(
            power_rule_oracle(0.0, FracOrder::new(1.0).unwrap(), 1.0),
            0.0
        );
    }

    #[test]
    fn gl_matches_power_rule_for_monomials() {
        let half = FracOrder::half();
        for p in [1.0, 2.0, 3.0] {
            let f = grid_fn(|x| x.powf(p), 1e-4, 1.0);
            let d = gl_derivative(&f, half, 1.0).unwrap();
            let exact = power_rule_oracle(p, half, 1.0);
            assert!((d - exact).abs() < 1e-3, "p={p}: {d} vs {exact}");
        }
    }

    #[test]
    fn convergence_is_at_least_linear() {
        let half = FracOrder::half();
        for p in [1.0, 2.0, 3.0] {
            let err_at = |dx: f64| {
                let f = grid_fn(|x| x.powf(p), dx, 1.0);
                let d = gl_derivative(&f, half, 1.0).unwrap();
                (d - power_rule_oracle(p, half, 1.0)).abs()
            };
            let (e1, e2) = (err_at(2e-3), err_at(1e-3));
            assert!(e2 < 0.6 * e1, "p={p}: halving dx gave {e1} -> {e2}");
        }
    }

    #[test]
    fn linearity_to_machine_precision() {
        let half = FracOrder::half();
        let dx = 1e-3;
        let f = grid_fn(|x| x, dx, 1.0);
        let g = grid_fn(|x| (2.0 * x).cos(), dx, 1.0);
        let combo = grid_fn(|x| 2.5 * x - 4.0 * (2.0 * x).cos(), dx, 1.0);
        let d_combo = gl_derivative(&combo, half, 1.0).unwrap();
        let d_parts = 2.5 * gl_derivative(&f, half, 1.0).unwrap()
            - 4.0 * gl_derivative(&g, half, 1.0).unwrap();
        assert!((d_combo - d_parts).abs() < 1e-10 * d_combo.abs().max(1.0));
    }

    #[test]
    fn semigroup_identity_for_linear_function() {
        // D^1/2 D^1/2 x = 1 analytically. The discrete weights convolve to
        // the order-1 weights exactly, so for linear f the residual sits at
        // rounding level already.
        let r = semigroup_residual(&grid_fn(|x| x, 1e-3, 1.0), 1.0).unwrap();
        assert!(r < 5e-2, "residual {r}");
        assert!(r < 1e-9, "residual {r} should be at rounding level");
    }

    #[test]
    fn semigroup_residual_shrinks_with_dx() {
        let r1 = semigroup_residual(&grid_fn(|x| x * x, 1e-2, 1.0), 1.0).unwrap();
        let r2 = semigroup_residual(&grid_fn(|x| x * x, 1e-3, 1.0), 1.0).unwrap();
        assert!(r2 < r1, "{r2} !< {r1}");
        // Observed order at least 1/2.
        let order = (r1 / r2).log10();
        assert!(order >= 0.5, "observed order {order}");
    }

    #[test]
    fn semigroup_residual_within_tolerance_curve() {
        // Default acceptance curve: residual < 10 sqrt(dx).
        for dx in [4e-3, 1e-3] {
            for f in [grid_fn(|x| x * x, dx, 1.0), grid_fn(|_| 1.0, dx, 1.0)] {
                let r = semigroup_residual(&f, 1.0).unwrap();
                assert!(r < 10.0 * dx.sqrt(), "dx={dx}: residual {r}");
            }
        }
    }

    #[test]
    fn semigroup_needs_enough_points() {
        let f = SampledFunction::from_fn(0.0, 0.25, 6, |x| x).unwrap();
        assert!(matches!(
            semigroup_residual(&f, 1.0),
            Err(Error::GridTooCoarse(_))
        ));
    }

    #[test]
    fn rejects_out_of_range_orders_and_points() {
        assert!(FracOrder::new(0.0).is_err());
        assert!(FracOrder::new(1.5).is_err());
        let f = grid_fn(|x| x, 0.1, 1.0);
        assert!(gl_derivative(&f, FracOrder::half(), 0.333).is_err());
        assert!(gl_derivative(&f, FracOrder::half(), 0.0).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let text = "x,value\n0.0,1.0\n0.5,2.0\n1.0,3.0\n1.5,4.0\n";
        let f = SampledFunction::from_csv_str(text).unwrap();
        assert_eq!(f.values, vec![1.0, 2.0, 3.0, 4.0]);
        assert_eq!(f.x0, 0.0);
        assert_eq!(f.dx, 0.5);
        assert!(SampledFunction::from_csv_str("x,value\n0,1\n1,2\n3,4\n9,9\n").is_err());
    }
}
