//! Finite-difference stencils on uniform grids.
//!
//! Interior points use 4th-order central stencils; the two points nearest
//! each boundary use one-sided stencils of matching order.

use num_complex::Complex64;

/// 4th-order first derivative of a uniformly sampled function.
///
/// Needs at least 5 points.
pub fn first_derivative(values: &[Complex64], dx: f64) -> Vec<Complex64> {
    let n = values.len();
    assert!(n >= 5, "first_derivative needs at least 5 points");
    let inv = 1.0 / (12.0 * dx);
    let mut out = vec![Complex64::default(); n];
    out[0] = (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2] + 16.0 * values[3]
        - 3.0 * values[4])
        * inv;
    out[1] =
        (-3.0 * values[0] - 10.0 * values[1] + 18.0 * values[2] - 6.0 * values[3] + values[4])
            * inv;
    for i in 2..n - 2 {
        out[i] = (values[i - 2] - 8.0 * values[i - 1] + 8.0 * values[i + 1] - values[i + 2]) * inv;
    }
    out[n - 2] = (3.0 * values[n - 1] + 10.0 * values[n - 2] - 18.0 * values[n - 3]
        + 6.0 * values[n - 4]
        - values[n - 5])
        * inv;
    out[n - 1] = (25.0 * values[n - 1] - 48.0 * values[n - 2] + 36.0 * values[n - 3]
        - 16.0 * values[n - 4]
        + 3.0 * values[n - 5])
        * inv;
    out
}

/// 4th-order second derivative of a uniformly sampled function.
///
/// Needs at least 6 points.
pub fn second_derivative(values: &[Complex64], dx: f64) -> Vec<Complex64> {
    let n = values.len();
    assert!(n >= 6, "second_derivative needs at least 6 points");
    let inv = 1.0 / (12.0 * dx * dx);
    let mut out = vec![Complex64::default(); n];
    let edge = |a: [f64; 6], f: &[Complex64], idx: [usize; 6]| -> Complex64 {
        (0..6).map(|k| a[k] * f[idx[k]]).sum::<Complex64>() * inv
    };
    out[0] = edge(
        [45.0, -154.0, 214.0, -156.0, 61.0, -10.0],
        values,
        [0, 1, 2, 3, 4, 5],
    );
    out[1] = edge(
        [10.0, -15.0, -4.0, 14.0, -6.0, 1.0],
        values,
        [0, 1, 2, 3, 4, 5],
    );
    for i in 2..n - 2 {
        out[i] = (-values[i - 2] + 16.0 * values[i - 1] - 30.0 * values[i]
            + 16.0 * values[i + 1]
            - values[i + 2])
            * inv;
    }
    out[n - 2] = edge(
        [10.0, -15.0, -4.0, 14.0, -6.0, 1.0],
        values,
        [n - 1, n - 2, n - 3, n - 4, n - 5, n - 6],
    );
    out[n - 1] = edge(
        [45.0, -154.0, 214.0, -156.0, 61.0, -10.0],
        values,
        [n - 1, n - 2, n - 3, n - 4, n - 5, n - 6],
    );
    out
}

/// Plain central differences (2nd order), used by residual oracles that are
/// specified in terms of the classic 3-point stencils. Endpoints are not
/// populated; only indices `1..n-1` are meaningful.
pub fn central_first(values: &[Complex64], dx: f64) -> Vec<Complex64> {
    let n = values.len();
    let mut out = vec![Complex64::default(); n];
    for i in 1..n - 1 {
        out[i] = (values[i + 1] - values[i - 1]) / (2.0 * dx);
    }
    out
}

/// 3-point second central difference; endpoints not populated.
pub fn central_second(values: &[Complex64], dx: f64) -> Vec<Complex64> {
    let n = values.len();
    let mut out = vec![Complex64::default(); n];
    for i in 1..n - 1 {
        out[i] = (values[i + 1] - 2.0 * values[i] + values[i - 1]) / (dx * dx);
    }
    out
}
