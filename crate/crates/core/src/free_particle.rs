//! Free-particle solutions of the damped wave equation: characteristic
//! roots, damped plane waves, and the exact Gaussian-packet translation
//! identity.

use crate::error::Result;
use crate::grid::{GridSpec, WaveSample};
use crate::params::PhysicalParams;
use num_complex::Complex64;

/// Sign of the characteristic discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Oscillatory solutions under an exponential envelope; the only
    /// regime that admits quantization.
    UnderDamped,
    Critical,
    OverDamped,
}

/// Roots of `lambda^2 + 2 xi lambda + 2 m E / hbar^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicRoots {
    /// First root: positive imaginary part when complex, the larger root
    /// when real.
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// `Delta = 4 xi^2 - 8 m E / hbar^2`.
    pub discriminant: f64,
    pub regime: Regime,
}

/// Solve the characteristic polynomial of the free damped equation.
pub fn characteristic_roots(params: &PhysicalParams, energy: f64) -> CharacteristicRoots {
    let xi = params.xi();
    let energy_coeff = 2.0 * params.mass * energy / (params.hbar * params.hbar);
    let discriminant = 4.0 * xi * xi - 4.0 * energy_coeff;
    let half_sqrt = (discriminant.abs()).sqrt() / 2.0;
    let (lambda1, lambda2, regime) = if discriminant < 0.0 {
        (
            Complex64::new(-xi, half_sqrt),
            Complex64::new(-xi, -half_sqrt),
            Regime::UnderDamped,
        )
    } else if discriminant > 0.0 {
        (
            Complex64::new(-xi + half_sqrt, 0.0),
            Complex64::new(-xi - half_sqrt, 0.0),
            Regime::OverDamped,
        )
    } else {
        (
            Complex64::new(-xi, 0.0),
            Complex64::new(-xi, 0.0),
            Regime::Critical,
        )
    };
    CharacteristicRoots {
        lambda1,
        lambda2,
        discriminant,
        regime,
    }
}

impl CharacteristicRoots {
    /// Wave number `k = sqrt(|Delta|) / 2`.
    pub fn wave_number(&self) -> f64 {
        self.discriminant.abs().sqrt() / 2.0
    }
}

/// A damped plane wave `psi(x) = e^{-xi x} (A e^{i k x} + B e^{-i k x})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampedPlaneWave {
    pub xi: f64,
    pub k: f64,
    pub amp_a: Complex64,
    pub amp_b: Complex64,
}

impl DampedPlaneWave {
    pub fn new(xi: f64, k: f64, amp_a: Complex64, amp_b: Complex64) -> Self {
        assert!(k >= 0.0, "wave number must be non-negative");
        Self {
            xi,
            k,
            amp_a,
            amp_b,
        }
    }

    /// The underdamped solution at energy `E` for the given parameters.
    pub fn from_energy(
        params: &PhysicalParams,
        energy: f64,
        amp_a: Complex64,
        amp_b: Complex64,
    ) -> Self {
        let roots = characteristic_roots(params, energy);
        Self::new(params.xi(), roots.wave_number(), amp_a, amp_b)
    }

    /// Evaluate the wave at a point.
    pub fn eval(&self, x: f64) -> Complex64 {
        let phase = Complex64::new(0.0, self.k * x);
        (-self.xi * x).exp() * (self.amp_a * phase.exp() + self.amp_b * (-phase).exp())
    }
}

/// Sample a damped plane wave on a grid. Exact evaluation, no
/// discretization involved.
pub fn sample_damped_wave(wave: &DampedPlaneWave, grid: GridSpec) -> WaveSample {
    WaveSample::from_fn(grid, |x| wave.eval(x))
}

/// Max interior residual of the damped free equation
/// `psi'' + 2 xi psi' + (2 m E / hbar^2) psi` on a sample, using the
/// classic 3-point central stencils. An independent discretization check
/// that a sample really solves the equation.
pub fn damped_equation_residual(psi: &WaveSample, xi: f64, energy_coeff: f64) -> f64 {
    let dx = psi.grid.dx();
    let d1 = crate::stencil::central_first(&psi.values, dx);
    let d2 = crate::stencil::central_second(&psi.values, dx);
    let mut worst: f64 = 0.0;
    for i in 1..psi.values.len() - 1 {
        let r = d2[i] + 2.0 * xi * d1[i] + energy_coeff * psi.values[i];
        worst = worst.max(r.norm());
    }
    worst
}

/// Completed-square parameters of the damped Gaussian packet: pointwise,
///
/// ```text
/// e^{-xi x} e^{-(x - c t)^2 + i k0 (x - c t)}
///   = A' e^{-(x - c t + shift)^2 + i k0 (x - c t)}
/// ```
///
/// with `shift = xi / 2` and `A' = e^{-xi c t + xi^2 / 4}`. Exact algebra;
/// damping only translates the Gaussian envelope and rescales it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketTranslation {
    /// Spatial displacement of the Gaussian envelope.
    pub shift: f64,
    /// Real amplitude prefactor A'.
    pub amplitude: f64,
}

/// Compute the translation parameters for damping `xi`, packet speed
/// `speed` and time `t`. The carrier wave number does not enter the
/// envelope algebra; it is accepted so callers can state the full identity.
pub fn packet_translation(xi: f64, speed: f64, t: f64, _carrier_k0: f64) -> PacketTranslation {
    let amplitude = (-xi * speed * t + xi * xi / 4.0).exp();
    assert!(amplitude > 0.0);
    PacketTranslation {
        shift: xi / 2.0,
        amplitude,
    }
}

/// Max pointwise residual of the packet-translation identity on a grid.
pub fn packet_identity_residual(
    xi: f64,
    speed: f64,
    t: f64,
    carrier_k0: f64,
    grid: GridSpec,
) -> Result<f64> {
    let tr = packet_translation(xi, speed, t, carrier_k0);
    let mut worst: f64 = 0.0;
    for x in grid.points() {
        let u = x - speed * t;
        let carrier = Complex64::new(0.0, carrier_k0 * u).exp();
        let lhs = (-xi * x).exp() * (-u * u).exp() * carrier;
        let rhs = tr.amplitude * (-(u + tr.shift) * (u + tr.shift)).exp() * carrier;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}
