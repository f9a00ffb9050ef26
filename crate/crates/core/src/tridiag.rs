//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for
//! eigenvalues, inverse iteration for eigenvectors.

use crate::error::{Error, Result};

const MAX_BISECTION_ITER: usize = 240;
const PIVOT_GUARD: f64 = 1e-290;

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly less
/// than `lambda`, via the signs of the LDLT pivots (Sturm sequence).
pub fn sturm_count(diag: &[f64], off: &[f64], lambda: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    let mut count = 0;
    let mut q = diag[0] - lambda;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let q_safe = if q.abs() < PIVOT_GUARD {
            if q >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            q
        };
        q = (diag[i] - lambda) - off[i - 1] * off[i - 1] / q_safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `count` smallest eigenvalues, ascending, by bisection on the Sturm
/// count. Exact to roundoff for the matrix as stored.
pub fn smallest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Result<Vec<f64>> {
    let n = diag.len();
    assert!(off.len() + 1 == n, "off-diagonal must have n-1 entries");
    assert!(count <= n);

    // Gershgorin bounds.
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let e_left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let e_right = if i < n - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - e_left - e_right);
        hi = hi.max(diag[i] + e_left + e_right);
    }
    lo -= 1.0;
    hi += 1.0;

    let mut eigenvalues = Vec::with_capacity(count);
    for k in 0..count {
        let mut a = lo;
        let mut b = hi;
        let mut iterations = 0;
        loop {
            let mid = 0.5 * (a + b);
            if (b - a) < 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if iterations >= MAX_BISECTION_ITER {
                return Err(Error::ConvergenceFailure { iterations });
            }
            if sturm_count(diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
            iterations += 1;
        }
        let lambda = 0.5 * (a + b);
        eigenvalues.push(lambda);
        lo = lambda; // eigenvalue k+1 cannot lie below eigenvalue k
    }
    Ok(eigenvalues)
}

/// Solve `(T - shift I) x = rhs` for tridiagonal `T`, with partial pivoting.
/// Near-singular pivots are replaced by a tiny guard value, which is exactly
/// what inverse iteration wants.
pub fn solve_shifted(diag: &[f64], off: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert!(n >= 2 && off.len() == n - 1 && rhs.len() == n);

    // Pivot guard scaled to the matrix: keeps near-singular solves large
    // but finite, so inverse iteration can normalize the result.
    let scale = (0..n)
        .map(|i| {
            let e_left = if i > 0 { off[i - 1].abs() } else { 0.0 };
            let e_right = if i < n - 1 { off[i].abs() } else { 0.0 };
            (diag[i] - shift).abs() + e_left + e_right
        })
        .fold(0.0_f64, f64::max)
        .max(1.0);
    let guard = f64::EPSILON * scale;

    let mut d: Vec<f64> = diag.iter().map(|&v| v - shift).collect();
    let mut e: Vec<f64> = off.to_vec(); // superdiagonal, row i col i+1
    let mut f2 = vec![0.0_f64; n]; // second superdiagonal fill-in
    let mut sub: Vec<f64> = off.to_vec(); // subdiagonal entry for row i+1
    let mut x: Vec<f64> = rhs.to_vec();

    for i in 0..n - 1 {
        if sub[i].abs() > d[i].abs() {
            std::mem::swap(&mut d[i], &mut sub[i]);
            let t = e[i];
            e[i] = d[i + 1];
            d[i + 1] = t;
            let t = f2[i];
            f2[i] = if i + 1 < n - 1 { e[i + 1] } else { 0.0 };
            if i + 1 < n - 1 {
                e[i + 1] = t;
            }
            x.swap(i, i + 1);
        }
        let pivot = if d[i].abs() < guard {
            guard.copysign(d[i])
        } else {
            d[i]
        };
        let m = sub[i] / pivot;
        d[i + 1] -= m * e[i];
        if i + 1 < n - 1 {
            e[i + 1] -= m * f2[i];
        }
        x[i + 1] -= m * x[i];
    }

    let safe = |v: f64| {
        if v.abs() < guard {
            guard.copysign(v)
        } else {
            v
        }
    };
    let mut out = vec![0.0_f64; n];
    out[n - 1] = x[n - 1] / safe(d[n - 1]);
    out[n - 2] = (x[n - 2] - e[n - 2] * out[n - 1]) / safe(d[n - 2]);
    for i in (0..n - 2).rev() {
        out[i] = (x[i] - e[i] * out[i + 1] - f2[i] * out[i + 2]) / safe(d[i]);
    }
    out
}

/// Eigenvector for an eigenvalue computed by [`smallest_eigenvalues`], via
/// inverse iteration. Normalized to unit Euclidean norm with the
/// largest-magnitude component positive, so the output is deterministic.
pub fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    // Deterministic, structure-free start vector.
    let mut v: Vec<f64> = (0..n)
        .map(|i| {
            let t = (i as f64 + 1.0) * 0.754_877_666_246_692_7;
            t.fract() - 0.5
        })
        .collect();
    normalize(&mut v);
    for _ in 0..4 {
        let mut w = solve_shifted(diag, off, lambda, &v);
        normalize(&mut w);
        v = w;
    }
    // Fix the overall sign.
    let lead = v
        .iter()
        .cloned()
        .fold(0.0_f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
    if lead < 0.0 {
        for x in &mut v {
            *x = -*x;
        }
    }
    v
}

fn normalize(v: &mut [f64]) {
    // Prescale by the largest magnitude so huge inverse-iteration outputs
    // cannot overflow the norm.
    let peak = v.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    if peak == 0.0 || !peak.is_finite() {
        return;
    }
    for x in v.iter_mut() {
        *x /= peak;
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sturm_count_2x2() {
        // [[1, -1], [-1, 3]] has eigenvalues 2 -+ sqrt(2).
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
    }

    #[test]
    fn chain_eigenvalues_match_closed_form() {
        // Tight-binding chain d=0, e=-1: eigenvalues -2 cos(k pi / (n+1)).
        let n = 40;
        let d = vec![0.0; n];
        let e = vec![-1.0; n - 1];
        let evals = smallest_eigenvalues(&d, &e, n).unwrap();
        let mut exact: Vec<f64> = (1..=n)
            .map(|k| -2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos())
            .collect();
        exact.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in evals.iter().zip(&exact) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn eigenvalues_strictly_increasing() {
        let n = 60;
        let d: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).sin()).collect();
        let e = vec![0.5; n - 1];
        let evals = smallest_eigenvalues(&d, &e, 10).unwrap();
        for w in evals.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn inverse_iteration_recovers_chain_eigenvector() {
        // Eigenvector k of the chain is sin(k pi i / (n+1)).
        let n = 50;
        let d = vec![0.0; n];
        let e = vec![-1.0; n - 1];
        let evals = smallest_eigenvalues(&d, &e, 2).unwrap();
        let v = eigenvector(&d, &e, evals[0]);
        // Smallest eigenvalue -2cos(pi n/(n+1)) pairs with k = n (fastest
        // oscillation); compare |v| against the normalized closed form.
        let k = n as f64;
        let mut exact: Vec<f64> = (1..=n)
            .map(|i| (k * PI * i as f64 / (n as f64 + 1.0)).sin())
            .collect();
        let norm = exact.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut exact {
            *x /= norm;
        }
        let err: f64 = v
            .iter()
            .zip(&exact)
            .map(|(a, b)| (a.abs() - b.abs()).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-8, "eigenvector error {err}");
    }

    #[test]
    fn shifted_solve_matches_direct_multiply() {
        let n = 12;
        let d: Vec<f64> = (0..n).map(|i| 2.0 + (i as f64 * 0.91).cos()).collect();
        let e: Vec<f64> = (0..n - 1).map(|i| -0.7 + 0.01 * i as f64).collect();
        let x_true: Vec<f64> = (0..n).map(|i| (i as f64 * 1.3).sin()).collect();
        // rhs = (T - s I) x_true
        let s = 0.25;
        let mut rhs = vec![0.0; n];
        for i in 0..n {
            rhs[i] = (d[i] - s) * x_true[i];
            if i > 0 {
                rhs[i] += e[i - 1] * x_true[i - 1];
            }
            if i < n - 1 {
                rhs[i] += e[i] * x_true[i + 1];
            }
        }
        let x = solve_shifted(&d, &e, s, &rhs);
        for (a, b) in x.iter().zip(&x_true) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
