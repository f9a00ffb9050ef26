//! The damped harmonic oscillator in dimensionless form
//! `psi'' + g psi' + (2 eps - y^2) psi = 0`: series recursion, quantized
//! levels, shifted-Gaussian eigenfunctions and the normalization
//! polynomials P_n(mu).
//!
//! Eigenfunctions are `A_n H_n(y) e^{-(y + mu)^2 / 2}` with `mu = g/2`;
//! quantized levels are `eps_n = (n + 1/2) + g^2 / 8`.

use crate::error::Result;
use crate::grid::{GridSpec, WaveSample};
use crate::hermite::hermite;
use crate::params::{derive_scales, Convention, PhysicalParams};
use crate::quad;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use std::f64::consts::PI;

/// One quantized oscillator level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorLevel {
    pub n: usize,
    /// Dimensionless energy `eps_n = (n + 1/2) + g^2/8`.
    pub eps_n: f64,
    /// `E_n = hbar omega eps_n`.
    pub energy: f64,
}

/// The quantized spectrum under a chosen damping convention.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorSpectrum {
    pub levels: Vec<OscillatorLevel>,
    pub convention: Convention,
}

/// Dimensionless energy shift `g^2 / 8`, written so that
/// [`series_ratio`] evaluated at a quantized level cancels bitwise.
#[inline]
fn eps_level(n: usize, g: f64) -> f64 {
    (n as f64 + 0.5) + g * g / 8.0
}

/// Ratio `C_{n+2} / C_n = (2n + 1 + g^2/4 - 2 eps) / ((n+1)(n+2))` of
/// consecutive same-parity series coefficients.
///
/// At a level produced by [`quantize_oscillator`] the numerator is the
/// exact floating-point difference of two identical expressions, so the
/// ratio vanishes bitwise and the series terminates.
pub fn series_ratio(n: usize, eps: f64, g: f64) -> f64 {
    let numerator = 2.0 * (eps_level(n, g) - eps);
    let denominator = ((n + 1) * (n + 2)) as f64;
    numerator / denominator
}

/// Quantize the damped oscillator: levels `0..=n_max`.
pub fn quantize_oscillator(
    params: &PhysicalParams,
    convention: Convention,
    n_max: usize,
) -> Result<OscillatorSpectrum> {
    let scales = derive_scales(params, convention)?;
    let quantum = params.hbar * params.omega;
    let levels = (0..=n_max)
        .map(|n| {
            let eps_n = eps_level(n, scales.g);
            OscillatorLevel {
                n,
                eps_n,
                energy: quantum * eps_n,
            }
        })
        .collect();
    Ok(OscillatorSpectrum { levels, convention })
}

/// Oscillator energy with the squared mass-to-damping ratio `(m/B)^2`
/// given exactly. With ratio 8 this reduces to
/// `m c^2 + (n + 1/2) hbar omega` without rounding, which is what the
/// rest-energy identity checks assert at the bit level.
pub fn oscillator_energy_from_ratio(
    ratio_squared: f64,
    params: &PhysicalParams,
    n: usize,
) -> f64 {
    let quantum = params.hbar * params.omega;
    quantum * (n as f64 + 0.5) + quantum * (ratio_squared / 8.0) * params.eps_r()
}

/// The even-power normalization polynomial
/// `P_n(mu) = sum_k G_{n,2k} mu^{2k}`, with exact integer coefficients.
///
/// `sqrt(P_n(mu))` normalizes the n-th shifted-Hermite eigenfunction;
/// `P_n(0) = n!` recovers the undamped constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnPolynomial {
    pub n: usize,
    /// `coeffs[k]` multiplies `mu^{2k}`, `k = 0..=n`.
    pub coeffs: Vec<BigUint>,
}

impl PnPolynomial {
    /// Evaluate at `mu` in floating point.
    pub fn eval(&self, mu: f64) -> f64 {
        let mu2 = mu * mu;
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * mu2 + c.to_f64().expect("P_n coefficient out of f64 range");
        }
        acc
    }

    /// `P_n(1)`: the plain sum of the coefficients, exact.
    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `P_n(0) = G_{n,0}`, exact.
    pub fn constant_term(&self) -> &BigUint {
        &self.coeffs[0]
    }
}

/// Build `P_n` by the coefficient recursion
/// `G_{n,2k} = n^2 G_{n-1,2k} / (n - k)` for `1 <= k <= n-1`, with
/// `G_{n,0} = n!` and `G_{n,2n} = 2^n`. All divisions are exact.
pub fn pn_polynomial(n: usize) -> PnPolynomial {
    let mut prev = PnPolynomial {
        n: 0,
        coeffs: vec![BigUint::one()],
    };
    if n == 0 {
        return prev;
    }
    let mut factorial = BigUint::one();
    for m in 1..=n {
        let m_big = BigUint::from(m);
        factorial *= &m_big;
        let mut coeffs = Vec::with_capacity(m + 1);
        coeffs.push(factorial.clone());
        let m_sq = BigUint::from(m * m);
        for k in 1..m {
            let numerator = &m_sq * &prev.coeffs[k];
            let divisor = BigUint::from(m - k);
            debug_assert!((&numerator % &divisor).to_u32() == Some(0));
            coeffs.push(numerator / divisor);
        }
        coeffs.push(BigUint::from(2u32).pow(m as u32));
        prev = PnPolynomial { n: m, coeffs };
    }
    prev
}

/// Independent definition of `P_n(mu)` through the normalization integral
/// it encodes:
///
/// ```text
/// P_n(mu) = (1 / (2^n sqrt(pi))) * integral H_n(t - mu)^2 e^{-t^2} dt
/// ```
///
/// evaluated by Gauss-Hermite quadrature with `n + 6` nodes, which is
/// exact for the degree-2n polynomial integrand.
pub fn pn_oracle(n: usize, mu: f64) -> f64 {
    assert!(n <= 30, "quadrature degree limit");
    let integral = quad::gauss_hermite_integrate(n + 6, |t| {
        let h = hermite(n, t - mu);
        h * h
    });
    integral / (2.0_f64.powi(n as i32) * PI.sqrt())
}

/// Normalization constant
/// `A_n = (m omega / (hbar pi 2^{2n}))^{1/4} / sqrt(P_n(mu))`.
pub fn osc_normalization(params: &PhysicalParams, n: usize, mu: f64) -> f64 {
    let b2 = params.mass * params.omega / params.hbar;
    let quartic = (b2 / (PI * 4.0_f64.powi(n as i32))).powf(0.25);
    quartic / pn_polynomial(n).eval(mu).sqrt()
}

fn osc_eval_y(n: usize, mu: f64, a_n: f64, y: f64) -> f64 {
    let arg = y + mu;
    a_n * hermite(n, y) * (-arg * arg / 2.0).exp()
}

/// Sample the normalized eigenfunction
/// `psi_n(x) = A_n H_n(b x) e^{-(b x + mu)^2 / 2}` on a grid.
pub fn osc_eigenfunction(
    params: &PhysicalParams,
    convention: Convention,
    n: usize,
    grid: GridSpec,
) -> Result<WaveSample> {
    let scales = derive_scales(params, convention)?;
    let a_n = osc_normalization(params, n, scales.mu);
    let b = scales.b;
    Ok(WaveSample::from_real_fn(grid, |x| {
        osc_eval_y(n, scales.mu, a_n, b * x)
    }))
}

/// Evaluate the normalized eigenfunction at a point.
pub fn osc_eigenfunction_value(
    params: &PhysicalParams,
    convention: Convention,
    n: usize,
    x: f64,
) -> Result<f64> {
    let scales = derive_scales(params, convention)?;
    let a_n = osc_normalization(params, n, scales.mu);
    Ok(osc_eval_y(n, scales.mu, a_n, scales.b * x))
}

/// Gauss-Hermite quadrature of `|psi_n|^2` over the line; 1 for a
/// correctly normalized eigenfunction.
pub fn osc_norm_quadrature(params: &PhysicalParams, n: usize, mu: f64) -> f64 {
    let a_n = osc_normalization(params, n, mu);
    let b = (params.mass * params.omega / params.hbar).sqrt();
    // integral |psi|^2 dx = (A_n^2 / b) integral H_n(t - mu)^2 e^{-t^2} dt.
    let integral = quad::gauss_hermite_integrate(n + 6, |t| {
        let h = hermite(n, t - mu);
        h * h
    });
    a_n * a_n / b * integral
}

/// Inner-product weight for oscillator overlaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscWeight {
    /// Plain `integral psi_m psi_n dx`.
    Unweighted,
    /// `integral psi_m psi_n e^{g y} dx` with `g = 2 mu`: the weight that
    /// cancels the Gaussian shift and restores Hermite orthogonality.
    DampingWeight,
}

/// Closed-quadrature overlap of two normalized eigenfunctions.
pub fn osc_overlap(params: &PhysicalParams, mu: f64, m: usize, n: usize, w: OscWeight) -> f64 {
    let a_m = osc_normalization(params, m, mu);
    let a_n = osc_normalization(params, n, mu);
    let b = (params.mass * params.omega / params.hbar).sqrt();
    let nodes = m + n + 6;
    let integral = match w {
        // integral H_m(t-mu) H_n(t-mu) e^{-t^2} dt after t = y + mu.
        OscWeight::Unweighted => {
            quad::gauss_hermite_integrate(nodes, |t| hermite(m, t - mu) * hermite(n, t - mu))
        }
        // e^{g y} with g = 2 mu collapses the exponent to -y^2 - mu^2.
        OscWeight::DampingWeight => {
            (-mu * mu).exp()
                * quad::gauss_hermite_integrate(nodes, |y| hermite(m, y) * hermite(n, y))
        }
    };
    a_m * a_n / b * integral
}

/// Max interior residual of the dimensionless equation
/// `psi'' + g psi' + (2 eps - y^2) psi` for samples on a y-grid.
pub fn oscillator_equation_residual(psi: &WaveSample, g: f64, eps: f64) -> f64 {
    let dy = psi.grid.dx();
    let d1 = crate::stencil::central_first(&psi.values, dy);
    let d2 = crate::stencil::central_second(&psi.values, dy);
    let mut worst: f64 = 0.0;
    for i in 1..psi.values.len() - 1 {
        let y = psi.grid.point(i);
        let r = d2[i] + g * d1[i] + (2.0 * eps - y * y) * psi.values[i];
        worst = worst.max(r.norm());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{special_damping_coefficient, special_damping_ratio_squared, Problem};
    use approx::assert_relative_eq;

    fn special_params() -> PhysicalParams {
        PhysicalParams::natural(
            special_damping_coefficient(Problem::Oscillator),
            1.0,
            1.0,
        )
        .unwrap()
    }

    #[test]
    fn series_ratio_examples() {
        // Terminating cases.
        assert!(series_ratio(0, 1.5, 8.0_f64.sqrt()).abs() < 1e-15);
        assert_eq!(series_ratio(0, 0.5, 0.0), 0.0);
        // Generic value: (2*1 + 1 - 2*0.5) / (2*3) = 1/3.
        assert_relative_eq!(series_ratio(1, 0.5, 0.0), 1.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn quantized_levels_terminate_the_series_bitwise() {
        let p = special_params();
        for convention in Convention::ALL {
            let scales = derive_scales(&p, convention).unwrap();
            let spectrum = quantize_oscillator(&p, convention, 8).unwrap();
            for level in &spectrum.levels {
                assert_eq!(series_ratio(level.n, level.eps_n, scales.g), 0.0);
            }
        }
    }

    #[test]
    fn ground_level_examples() {
        let p = special_params();
        let s = quantize_oscillator(&p, Convention::Hamiltonian, 0).unwrap();
        assert_relative_eq!(s.levels[0].eps_n, 1.5, max_relative = 1e-15);

        let s = quantize_oscillator(&p, Convention::WaveEquation, 0).unwrap();
        assert_relative_eq!(s.levels[0].eps_n, 4.5, max_relative = 1e-15);

        // Undamped limit.
        let undamped = PhysicalParams::natural(1e14, 1.0, 1.0).unwrap();
        let s = quantize_oscillator(&undamped, Convention::Hamiltonian, 3).unwrap();
        for level in &s.levels {
            assert_relative_eq!(level.eps_n, level.n as f64 + 0.5, max_relative = 1e-14);
        }
    }

    #[test]
    fn rest_energy_identity_is_bitwise_with_exact_ratio() {
        let p = special_params();
        let ratio = special_damping_ratio_squared(Problem::Oscillator);
        for n in 0..6 {
            let e = oscillator_energy_from_ratio(ratio, &p, n);
            let expected = p.rest_energy() + (n as f64 + 0.5) * p.hbar * p.omega;
            assert_eq!(e, expected, "n={n}");
        }
        // The f64-damping pipeline agrees to final rounding.
        let s = quantize_oscillator(&p, Convention::Hamiltonian, 5).unwrap();
        for level in &s.levels {
            let expected = p.rest_energy() + (level.n as f64 + 0.5) * p.hbar * p.omega;
            assert!((level.energy - expected).abs() <= 8.0 * f64::EPSILON * expected);
        }
    }

    #[test]
    fn pn_first_three_polynomials() {
        let p1 = pn_polynomial(1);
        assert_eq!(p1.coeffs, vec![BigUint::from(1u32), BigUint::from(2u32)]);
        assert_eq!(p1.eval_at_one(), BigUint::from(3u32));

        let p2 = pn_polynomial(2);
        assert_eq!(
            p2.coeffs,
            vec![
                BigUint::from(2u32),
                BigUint::from(8u32),
                BigUint::from(4u32)
            ]
        );
        assert_eq!(p2.eval_at_one(), BigUint::from(14u32));

        let p3 = pn_polynomial(3);
        assert_eq!(
            p3.coeffs,
            vec![
                BigUint::from(6u32),
                BigUint::from(36u32),
                BigUint::from(36u32),
                BigUint::from(8u32)
            ]
        );
        assert_eq!(p3.eval_at_one(), BigUint::from(86u32));
    }

    #[test]
    fn pn_constant_term_is_factorial_and_leading_is_power_of_two() {
        let mut factorial = BigUint::one();
        for n in 0..=12usize {
            if n > 0 {
                factorial *= BigUint::from(n);
            }
            let p = pn_polynomial(n);
            assert_eq!(*p.constant_term(), factorial, "n={n}");
            assert_eq!(
                *p.coeffs.last().unwrap(),
                BigUint::from(2u32).pow(n as u32)
            );
        }
    }

    #[test]
    fn pn_oracle_examples() {
        assert!((pn_oracle(0, 0.0) - 1.0).abs() < 1e-13);
        assert!((pn_oracle(0, 1.7) - 1.0).abs() < 1e-12);
        assert!((pn_oracle(2, 1.0) - 14.0).abs() < 1e-10);
        assert!((pn_oracle(3, 1.0) - 86.0).abs() < 1e-10);
    }

    #[test]
    fn recursion_matches_oracle() {
        for n in 0..=10 {
            let p = pn_polynomial(n);
            for mu in [0.0, 0.5, 1.0, 2.0_f64.sqrt()] {
                let exact = p.eval(mu);
                let quad = pn_oracle(n, mu);
                assert!(
                    (exact - quad).abs() <= 1e-9 * exact.abs(),
                    "n={n}, mu={mu}: {exact} vs {quad}"
                );
            }
        }
    }

    #[test]
    fn normalization_examples() {
        let p = PhysicalParams::natural(1.0, 1.0, 1.0).unwrap();
        // n = 0: (m omega / hbar pi)^{1/4}, independent of mu.
        assert_relative_eq!(
            osc_normalization(&p, 0, 0.0),
            (1.0 / PI).powf(0.25),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            osc_normalization(&p, 0, 1.3),
            (1.0 / PI).powf(0.25),
            max_relative = 1e-14
        );
        // mu = 0 reduces to the undamped constants.
        for n in 0..6usize {
            let expected = (1.0 / (PI * 4.0_f64.powi(n as i32))).powf(0.25)
                / (1..=n).map(|k| k as f64).product::<f64>().sqrt();
            assert_relative_eq!(osc_normalization(&p, n, 0.0), expected, max_relative = 1e-13);
        }
        // n = 1, mu = sqrt(2).
        let a1 = osc_normalization(&p, 1, 2.0_f64.sqrt());
        assert_relative_eq!(a1, 0.23753, max_relative = 1e-4);
    }

    #[test]
    fn norm_quadrature_is_one() {
        let p = special_params();
        let mu = 2.0_f64.sqrt();
        for n in 0..=6 {
            let v = osc_norm_quadrature(&p, n, mu);
            assert!((v - 1.0).abs() < 1e-9, "n={n}: {v}");
        }
    }

    #[test]
    fn ground_state_peaks_at_minus_mu() {
        let p = special_params();
        let grid = GridSpec::new(-8.0, 8.0, 4001).unwrap();
        let psi = osc_eigenfunction(&p, Convention::Hamiltonian, 0, grid).unwrap();
        let scales = derive_scales(&p, Convention::Hamiltonian).unwrap();
        let peak = grid.point(psi.peak_index());
        assert!(
            (peak + scales.mu).abs() <= grid.dx(),
            "peak {peak} vs -mu {}",
            -scales.mu
        );
    }

    #[test]
    fn undamped_limit_matches_standard_states() {
        let p = PhysicalParams::natural(1e14, 1.0, 1.0).unwrap();
        let grid = GridSpec::new(-6.0, 6.0, 801).unwrap();
        for n in 0..4usize {
            let psi = osc_eigenfunction(&p, Convention::Hamiltonian, n, grid).unwrap();
            let norm = (1.0 / (PI * 4.0_f64.powi(n as i32))).powf(0.25)
                / (1..=n).map(|k| k as f64).product::<f64>().sqrt();
            for (i, v) in psi.values.iter().enumerate() {
                let y = grid.point(i);
                let expected = norm * hermite(n, y) * (-y * y / 2.0).exp();
                assert!((v.re - expected).abs() < 1e-10, "n={n}, y={y}");
            }
        }
    }

    #[test]
    fn eigenfunctions_solve_the_dimensionless_equation() {
        // Natural units, omega = 1: x and y coincide, so the x-space
        // samples satisfy the y-space equation directly.
        let p = special_params();
        let scales = derive_scales(&p, Convention::Hamiltonian).unwrap();
        let spectrum = quantize_oscillator(&p, Convention::Hamiltonian, 2).unwrap();
        for level in &spectrum.levels {
            // Higher levels carry larger fourth derivatives; shrink dy to
            // keep the 3-point truncation inside the same bound.
            let dy = if level.n < 2 { 1e-3 } else { 5e-4 };
            let span = scales.mu + 12.0;
            let n_points = (span / dy).round() as usize + 1;
            let grid = GridSpec::new(-scales.mu - 6.0, 6.0, n_points).unwrap();
            let psi = osc_eigenfunction(&p, Convention::Hamiltonian, level.n, grid).unwrap();
            let r = oscillator_equation_residual(&psi, scales.g, level.eps_n);
            assert!(r < 1e-6, "n={}: residual {r}", level.n);
        }
    }

    #[test]
    fn termination_respects_parity() {
        // With eps = eps_n the coefficient chain of n's parity terminates;
        // the opposite-parity chain does not.
        let g = 8.0_f64.sqrt();
        for n in 0..6usize {
            let eps = eps_level(n, g);
            let mut same_parity_terminated = false;
            let mut c = 1.0;
            let mut k = n % 2;
            while k <= n + 4 {
                if c == 0.0 {
                    same_parity_terminated = true;
                    break;
                }
                c *= series_ratio(k, eps, g);
                k += 2;
            }
            assert!(same_parity_terminated, "n={n}");

            let mut c = 1.0;
            let mut k = (n + 1) % 2;
            while k <= n + 4 {
                assert!(c != 0.0, "opposite parity chain terminated at n={n}");
                c *= series_ratio(k, eps, g);
                k += 2;
            }
        }
    }

    #[test]
    fn weighted_orthogonality_holds_unweighted_does_not() {
        let p = special_params();
        let mu = derive_scales(&p, Convention::Hamiltonian).unwrap().mu;
        for (m, n) in [(0, 1), (0, 2), (1, 2), (2, 3)] {
            let w = osc_overlap(&p, mu, m, n, OscWeight::DampingWeight);
            assert!(w.abs() < 1e-9, "({m},{n}) weighted: {w}");
        }
        // <0|1> = -2 mu sqrt(pi) A_0 A_1 / b, nonzero for mu > 0.
        let v = osc_overlap(&p, mu, 0, 1, OscWeight::Unweighted);
        let a0 = osc_normalization(&p, 0, mu);
        let a1 = osc_normalization(&p, 1, mu);
        let expected = -2.0 * mu * PI.sqrt() * a0 * a1;
        assert_relative_eq!(v, expected, max_relative = 1e-10);
        assert!(v.abs() > 0.1);
    }
}
