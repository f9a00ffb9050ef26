//! Physicists' Hermite polynomials H_n, generated by the recurrence
//! `H_{n+1}(y) = 2 y H_n(y) - 2 n H_{n-1}(y)`.

/// Evaluate H_n(y).
pub fn hermite(n: usize, y: f64) -> f64 {
    let mut prev = 1.0; // H_0
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * y; // H_1
    for k in 1..n {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluate H_0..H_n at a point, returning all values.
pub fn hermite_all(n: usize, y: f64) -> Vec<f64> {
    let mut vals = Vec::with_capacity(n + 1);
    vals.push(1.0);
    if n == 0 {
        return vals;
    }
    vals.push(2.0 * y);
    for k in 1..n {
        let next = 2.0 * y * vals[k] - 2.0 * k as f64 * vals[k - 1];
        vals.push(next);
    }
    vals
}
