//! The damped infinite well: quantization, zero-point energy, normalized
//! eigenfunctions and momentum expectations.
//!
//! Levels carry `E_n = m^3 c^2 / (2 B^2) + hbar^2 pi^2 n^2 / (2 m L^2)` and
//! wave numbers `k_n = 2 pi n / L`; eigenfunctions are
//! `A_n e^{-xi x} sin(k_n x)` on `[-L/2, L/2]`.

use crate::error::{Error, Result};
use crate::grid::{GridSpec, WaveSample};
use crate::params::PhysicalParams;
use crate::quad;
use num_complex::Complex64;
use std::f64::consts::PI;

/// One quantized level of the damped box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxLevel {
    pub n: usize,
    /// Wave number `k_n = 2 pi n / L`.
    pub k_n: f64,
    pub energy: f64,
}

/// The ordered spectrum. `n = 0` is excluded: its wavefunction vanishes
/// identically, so the rest-energy value it would carry is reported
/// separately, not listed as a level.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxSpectrum {
    pub levels: Vec<BoxLevel>,
}

/// Zero-point term `m^3 c^2 / (2 B^2)` of the box spectrum.
pub fn zero_point_energy(params: &PhysicalParams) -> f64 {
    let m = params.mass;
    m * m * m * params.light_speed * params.light_speed / (2.0 * params.damping * params.damping)
}

/// Zero-point term written in terms of the exact squared mass-to-damping
/// ratio `(m/B)^2`. With the ratio given exactly (2 for the box special
/// damping) this reduces to the rest energy without rounding.
pub fn zero_point_from_ratio(ratio_squared: f64, mass: f64, light_speed: f64) -> f64 {
    0.5 * ratio_squared * mass * light_speed * light_speed
}

/// Quantize the damped box: levels `1..=n_max`.
pub fn quantize_box(params: &PhysicalParams, n_max: usize) -> BoxSpectrum {
    let zero_point = zero_point_energy(params);
    let length = params.box_length;
    let kinetic_scale =
        params.hbar * params.hbar * PI * PI / (2.0 * params.mass * length * length);
    let levels = (1..=n_max)
        .map(|n| BoxLevel {
            n,
            k_n: 2.0 * PI * n as f64 / length,
            energy: zero_point + kinetic_scale * (n * n) as f64,
        })
        .collect();
    BoxSpectrum { levels }
}

/// Hyperbolic cosecant, evaluated as `2 e^{-z} / (1 - e^{-2z})` so large
/// arguments decay instead of overflowing. Returns 0.0 once `e^{-z}`
/// underflows.
fn csch(z: f64) -> f64 {
    2.0 * (-z).exp() / (-(-2.0 * z).exp_m1())
}

/// Normalization constant
/// `A_n = sqrt(2 xi [ (xi L / 2 pi n)^2 + 1 ] csch(xi L))`.
///
/// Errors when `csch(xi L)` underflows; the constant is then not
/// representable and silently returning zero would poison downstream
/// quadratures.
pub fn box_normalization(params: &PhysicalParams, n: usize) -> Result<f64> {
    assert!(n >= 1, "levels start at n = 1");
    let xi = params.xi();
    let length = params.box_length;
    let z = xi * length;
    let csch_z = csch(z);
    if csch_z == 0.0 || !csch_z.is_finite() {
        return Err(Error::CschUnderflow(z));
    }
    let ratio = z / (2.0 * PI * n as f64);
    Ok((2.0 * xi * (ratio * ratio + 1.0) * csch_z).sqrt())
}

/// The `xi -> 0` limit of the normalization constant, `sqrt(2 / L)`.
pub fn box_normalization_undamped_limit(length: f64) -> f64 {
    (2.0 / length).sqrt()
}

/// Evaluate the normalized eigenfunction `psi_n` at a point.
///
/// The Dirichlet boundary values are honored exactly: at `x = +-L/2` the
/// result is 0.0 rather than `sin` evaluated at a rounded multiple of pi.
pub fn box_eigenfunction_value(params: &PhysicalParams, n: usize, x: f64) -> Result<f64> {
    let a_n = box_normalization(params, n)?;
    Ok(box_eval(params, n, a_n, x))
}

fn box_eval(params: &PhysicalParams, n: usize, a_n: f64, x: f64) -> f64 {
    let half = params.box_length / 2.0;
    if x == half || x == -half {
        return 0.0;
    }
    let k_n = 2.0 * PI * n as f64 / params.box_length;
    a_n * (-params.xi() * x).exp() * (k_n * x).sin()
}

/// Derivative of the eigenfunction,
/// `A_n e^{-xi x} (-xi sin(k x) + k cos(k x))`.
fn box_eval_derivative(params: &PhysicalParams, n: usize, a_n: f64, x: f64) -> f64 {
    let xi = params.xi();
    let k_n = 2.0 * PI * n as f64 / params.box_length;
    a_n * (-xi * x).exp() * (-xi * (k_n * x).sin() + k_n * (k_n * x).cos())
}

/// Sample the normalized eigenfunction on a grid inside `[-L/2, L/2]`.
pub fn box_eigenfunction(params: &PhysicalParams, n: usize, grid: GridSpec) -> Result<WaveSample> {
    let half = params.box_length / 2.0;
    let slack = 1e-12 * params.box_length;
    if grid.x_min < -half - slack || grid.x_max > half + slack {
        return Err(Error::GridMismatch(
            "grid must lie inside the box [-L/2, L/2]",
        ));
    }
    let a_n = box_normalization(params, n)?;
    Ok(WaveSample::from_real_fn(grid, |x| {
        box_eval(params, n, a_n, x)
    }))
}

/// Quadrature of `|psi_n|^2` over the box, Romberg to `tol`.
pub fn box_norm_quadrature(params: &PhysicalParams, n: usize, tol: f64) -> Result<f64> {
    let a_n = box_normalization(params, n)?;
    let half = params.box_length / 2.0;
    Ok(quad::romberg(
        |x| {
            let v = box_eval(params, n, a_n, x);
            v * v
        },
        -half,
        half,
        tol,
    ))
}

/// Momentum expectation of the n-th eigenfunction: the quadrature value of
/// `integral psi_n (-i hbar) psi_n' dx` next to the exact boundary-term
/// value `(-i hbar / 2) [psi_n^2] = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxMomentum {
    pub quadrature: Complex64,
    /// `(-i hbar / 2) [psi^2]` across the box: exactly zero, since the
    /// eigenfunction vanishes at both walls.
    pub boundary_term: Complex64,
}

pub fn box_momentum_expectation(params: &PhysicalParams, n: usize) -> Result<BoxMomentum> {
    let a_n = box_normalization(params, n)?;
    let half = params.box_length / 2.0;
    let real_integral = quad::romberg(
        |x| box_eval(params, n, a_n, x) * box_eval_derivative(params, n, a_n, x),
        -half,
        half,
        1e-13,
    );
    Ok(BoxMomentum {
        quadrature: Complex64::new(0.0, -params.hbar) * real_integral,
        boundary_term: Complex64::new(0.0, 0.0),
    })
}

/// Overlap `integral psi_m psi_n e^{2 xi x} dx` over the box. The weight
/// cancels the damping envelopes, leaving plain sine orthogonality.
pub fn box_weighted_overlap(params: &PhysicalParams, m: usize, n: usize) -> Result<f64> {
    let a_m = box_normalization(params, m)?;
    let a_n = box_normalization(params, n)?;
    let xi = params.xi();
    let half = params.box_length / 2.0;
    Ok(quad::romberg(
        |x| {
            box_eval(params, m, a_m, x) * box_eval(params, n, a_n, x) * (2.0 * xi * x).exp()
        },
        -half,
        half,
        1e-13,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{special_damping_ratio_squared, Problem};
    use approx::assert_relative_eq;

    fn natural(damping: f64) -> PhysicalParams {
        PhysicalParams::natural(damping, 1.0, 1.0).unwrap()
    }

    #[test]
    fn first_level_energy_and_wavenumber() {
        let s = quantize_box(&natural(1.0), 5);
        assert_relative_eq!(s.levels[0].energy, 0.5 + PI * PI / 2.0, max_relative = 1e-15);
        assert_relative_eq!(s.levels[0].energy, 5.4348, max_relative = 1e-4);
        assert_relative_eq!(s.levels[0].k_n, 2.0 * PI, max_relative = 1e-15);
        for w in s.levels.windows(2) {
            assert!(w[1].energy > w[0].energy);
        }
    }

    #[test]
    fn special_damping_zero_point_is_rest_energy() {
        // Exact-ratio route: bitwise equality.
        let zp = zero_point_from_ratio(
            special_damping_ratio_squared(Problem::Box),
            1.0,
            1.0,
        );
        assert_eq!(zp, 1.0);
        // f64 damping route: equal to within final rounding of B.
        let p = natural(crate::params::special_damping_coefficient(Problem::Box));
        let zp = zero_point_energy(&p);
        assert!((zp - 1.0).abs() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn undamped_limit_recovers_even_standard_levels() {
        // xi -> 0: E_n -> hbar^2 pi^2 n^2 / (2 m L^2).
        let s = quantize_box(&natural(1e14), 3);
        for level in &s.levels {
            let expected = PI * PI * (level.n * level.n) as f64 / 2.0;
            assert_relative_eq!(level.energy, expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn determinant_condition_holds_at_every_level() {
        // sin(sqrt(|Delta_n|) L / 2) = 0 with |Delta| = 8mE/hbar^2 - 4xi^2.
        let p = natural(1.0);
        let s = quantize_box(&p, 5);
        for level in &s.levels {
            let delta = 8.0 * level.energy - 4.0 * p.xi() * p.xi();
            let v = (delta.sqrt() * p.box_length / 2.0).sin();
            assert!(v.abs() < 1e-12, "n={}: {v}", level.n);
        }
    }

    #[test]
    fn normalization_examples() {
        // xi -> 0 limit.
        assert_relative_eq!(
            box_normalization_undamped_limit(1.0),
            2.0_f64.sqrt(),
            max_relative = 1e-15
        );
        let nearly_undamped = natural(1e10);
        assert_relative_eq!(
            box_normalization(&nearly_undamped, 1).unwrap(),
            2.0_f64.sqrt(),
            epsilon = 1e-8
        );

        // xi = 1, L = 1, n = 1.
        let p = natural(1.0);
        let a1 = box_normalization(&p, 1).unwrap();
        assert_relative_eq!(a1, 1.3210, max_relative = 1e-4);

        // Large n: A_n -> sqrt(2 xi csch(xi L)).
        let a_big = box_normalization(&p, 1_000_000).unwrap();
        assert_relative_eq!(a_big, (2.0 * csch(1.0)).sqrt(), max_relative = 1e-10);
        assert_relative_eq!(a_big, 1.3046, max_relative = 1e-4);
    }

    #[test]
    fn normalization_underflow_is_an_error() {
        let p = PhysicalParams::natural(1e-3, 1.0, 1.0).unwrap(); // xi = 1000, xi L = 1000
        assert!(matches!(
            box_normalization(&p, 1),
            Err(Error::CschUnderflow(_))
        ));
    }

    #[test]
    fn quadrature_of_density_is_one() {
        let p = natural(1.0);
        for n in 1..=3 {
            let v = box_norm_quadrature(&p, n, 1e-13).unwrap();
            assert!((v - 1.0).abs() < 1e-10, "n={n}: {v}");
        }
    }

    #[test]
    fn eigenfunction_boundary_and_origin_zeros() {
        let p = natural(1.0);
        let grid = GridSpec::new(-0.5, 0.5, 257).unwrap();
        for n in 1..=5 {
            let psi = box_eigenfunction(&p, n, grid).unwrap();
            assert_eq!(psi.values[0], Complex64::new(0.0, 0.0));
            assert_eq!(psi.values[256], Complex64::new(0.0, 0.0));
            // Origin (index 128) is a node of every level.
            assert!(psi.values[128].norm() < 1e-12);
        }
    }

    #[test]
    fn eigenfunction_point_value() {
        let p = natural(1.0);
        let v = box_eigenfunction_value(&p, 1, 0.25).unwrap();
        // A_1 e^{-1/4} sin(pi/2)
        let expect = box_normalization(&p, 1).unwrap() * (-0.25_f64).exp();
        assert_relative_eq!(v, expect, max_relative = 1e-14);
        assert_relative_eq!(v, 1.0288, max_relative = 1e-4);
    }

    #[test]
    fn eigenfunction_rejects_grid_outside_box() {
        let p = natural(1.0);
        let grid = GridSpec::new(-0.6, 0.5, 64).unwrap();
        assert!(box_eigenfunction(&p, 1, grid).is_err());
    }

    #[test]
    fn momentum_expectation_vanishes() {
        let p = natural(1.0);
        for n in [1, 2] {
            let m = box_momentum_expectation(&p, n).unwrap();
            assert!(m.quadrature.norm() < 1e-10, "n={n}: {}", m.quadrature);
            assert_eq!(m.boundary_term, Complex64::new(0.0, 0.0));
        }
        let undamped = natural(1e12);
        let m = box_momentum_expectation(&undamped, 1).unwrap();
        assert!(m.quadrature.norm() < 1e-10);
    }

    #[test]
    fn weighted_orthogonality() {
        let p = natural(1.0);
        for (m, n) in [(1, 2), (1, 3), (2, 3)] {
            let v = box_weighted_overlap(&p, m, n).unwrap();
            assert!(v.abs() < 1e-10, "({m},{n}): {v}");
        }
        // Diagonal overlap is not 1 (the weight breaks normalization), but
        // it must be positive.
        assert!(box_weighted_overlap(&p, 1, 1).unwrap() > 0.0);
    }

    #[test]
    fn spectral_shift_is_n_independent_in_closed_form() {
        let damped = natural(1.0);
        let undamped = natural(1e14);
        let s1 = quantize_box(&damped, 5);
        let s0 = quantize_box(&undamped, 5);
        let shift = damped.hbar * damped.hbar * damped.xi() * damped.xi() / (2.0 * damped.mass);
        for (a, b) in s1.levels.iter().zip(&s0.levels) {
            assert_relative_eq!(a.energy - b.energy, shift, max_relative = 1e-10);
        }
    }
}
