//! Quadrature utilities: composite trapezoid on samples, Romberg
//! (Richardson-extrapolated trapezoid) for function integrands, and
//! Gauss-Hermite rules built by Golub-Welsch on the Jacobi matrix.

use crate::tridiag;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Composite trapezoid rule over uniformly spaced samples.
pub fn trapezoid(values: &[f64], dx: f64) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let interior: f64 = values[1..n - 1].iter().sum();
    dx * (0.5 * (values[0] + values[n - 1]) + interior)
}

/// Composite trapezoid rule for complex samples.
pub fn trapezoid_complex(values: &[Complex64], dx: f64) -> Complex64 {
    let n = values.len();
    if n < 2 {
        return Complex64::default();
    }
    let interior: Complex64 = values[1..n - 1].iter().sum();
    (0.5 * (values[0] + values[n - 1]) + interior) * dx
}

/// Romberg integration of `f` over `[a, b]`.
///
/// Builds the trapezoid sequence with halved steps and extrapolates the
/// tableau until two successive diagonal entries agree to `tol`
/// (relative to max(1, |I|)). For analytic integrands this converges far
/// faster than the raw trapezoid rule.
pub fn romberg(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    const MAX_LEVELS: usize = 22;
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(MAX_LEVELS);
    let mut h = b - a;
    let mut trap = 0.5 * h * (f(a) + f(b));
    rows.push(vec![trap]);
    let mut intervals = 1_usize;
    for k in 1..MAX_LEVELS {
        h *= 0.5;
        let mid_sum: f64 = (0..intervals)
            .map(|i| f(a + (2 * i + 1) as f64 * h))
            .sum();
        trap = 0.5 * rows[k - 1][0] + h * mid_sum;
        intervals *= 2;

        let mut row = vec![trap];
        let mut factor = 1.0;
        for j in 1..=k {
            factor *= 4.0;
            let better = (factor * row[j - 1] - rows[k - 1][j - 1]) / (factor - 1.0);
            row.push(better);
        }
        let prev_best = *rows[k - 1].last().unwrap();
        let best = *row.last().unwrap();
        rows.push(row);
        if k >= 4 && (best - prev_best).abs() <= tol * best.abs().max(1.0) {
            return best;
        }
    }
    *rows.last().unwrap().last().unwrap()
}

/// Gauss-Hermite nodes and weights for integrals of the form
/// `integral of e^{-x^2} f(x) dx` over the whole line.
///
/// An `n`-point rule is exact for polynomial `f` of degree `2n - 1`.
/// Built by Golub-Welsch: the Jacobi matrix for Hermite polynomials is
/// tridiagonal with zero diagonal and off-diagonal `sqrt(k/2)`; nodes are
/// its eigenvalues, weights are `sqrt(pi)` times the squared first
/// components of the normalized eigenvectors.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    if n == 1 {
        return (vec![0.0], vec![PI.sqrt()]);
    }
    let diag = vec![0.0_f64; n];
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let nodes = tridiag::smallest_eigenvalues(&diag, &off, n)
        .expect("Hermite Jacobi matrix eigensolve cannot fail");
    let weights: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let v = tridiag::eigenvector(&diag, &off, x);
            PI.sqrt() * v[0] * v[0]
        })
        .collect();
    (nodes, weights)
}

/// Integrate `e^{-x^2} f(x)` over the line with an `n`-point Gauss-Hermite
/// rule.
pub fn gauss_hermite_integrate(n: usize, f: impl Fn(f64) -> f64) -> f64 {
    let (nodes, weights) = gauss_hermite(n);
    nodes.iter().zip(&weights).map(|(&x, &w)| w * f(x)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trapezoid_linear_exact() {
        let dx = 0.1;
        let values: Vec<f64> = (0..11).map(|i| 3.0 * i as f64 * dx + 1.0).collect();
        assert!((trapezoid(&values, dx) - 2.5).abs() < 1e-14);
    }

    #[test]
    fn romberg_matches_analytic() {
        let v = romberg(|x| x.sin(), 0.0, std::f64::consts::PI, 1e-13);
        assert!((v - 2.0).abs() < 1e-12);

        // Oscillatory integrand with exponential envelope, as in the box
        // normalization integrals.
        let xi = 1.0_f64;
        let k = 2.0 * PI;
        let v = romberg(
            |x| (-2.0 * xi * x).exp() * (k * x).sin().powi(2),
            -0.5,
            0.5,
            1e-13,
        );
        let exact = (xi * 1.0_f64).sinh() * k * k / (2.0 * xi * (xi * xi + k * k));
        assert!((v - exact).abs() < 1e-12, "{v} vs {exact}");
    }

    #[test]
    fn gauss_hermite_moments() {
        let (nodes, weights) = gauss_hermite(8);
        assert_eq!(nodes.len(), 8);
        let m0: f64 = weights.iter().sum();
        assert!((m0 - PI.sqrt()).abs() < 1e-12);
        let m2: f64 = nodes.iter().zip(&weights).map(|(x, w)| w * x * x).sum();
        assert!((m2 - PI.sqrt() / 2.0).abs() < 1e-12);
        let m4: f64 = nodes
            .iter()
            .zip(&weights)
            .map(|(x, w)| w * x.powi(4))
            .sum();
        assert!((m4 - 0.75 * PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn gauss_hermite_exact_for_high_degree() {
        // 14-point rule integrates x^24 e^{-x^2} exactly:
        // integral = (23)!! sqrt(pi) / 2^12.
        let n = 14;
        let v = gauss_hermite_integrate(n, |x| x.powi(24));
        let dfact: f64 = (1..=23).step_by(2).map(|k| k as f64).product();
        let exact = dfact * PI.sqrt() / 2.0_f64.powi(12);
        assert!((v - exact).abs() < 1e-9 * exact, "{v} vs {exact}");
    }
}

