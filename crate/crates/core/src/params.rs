//! Physical parameters and the scales derived from them.
//!
//! Every other module consumes these types, so each symbol of the damped
//! wave equation has exactly one home: `xi = m^2 c / (hbar B)` is the
//! inverse-length damping rate, `eps_r = m c^2 / (hbar omega)` the rest
//! energy in oscillator quanta, `b = sqrt(m omega / hbar)` the
//! dimensionless-coordinate scale `y = b x`, and `g` the dimensionless
//! damping coefficient of the oscillator equation
//! `psi'' + g psi' + (2 eps - y^2) psi = 0`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Primary physical parameters, stored in one coherent unit system chosen
/// at construction. No runtime unit conversion happens anywhere downstream.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Particle mass m.
    pub mass: f64,
    /// Speed of light c.
    pub light_speed: f64,
    /// Reduced Planck constant.
    pub hbar: f64,
    /// Damping coefficient B (mass units).
    pub damping: f64,
    /// Angular frequency omega (oscillator problems only).
    pub omega: f64,
    /// Box length L (infinite-well problems only).
    pub box_length: f64,
}

impl PhysicalParams {
    /// Validating constructor. All fields must be strictly positive.
    pub fn new(
        mass: f64,
        light_speed: f64,
        hbar: f64,
        damping: f64,
        omega: f64,
        box_length: f64,
    ) -> Result<Self> {
        let p = Self {
            mass,
            light_speed,
            hbar,
            damping,
            omega,
            box_length,
        };
        p.validate()?;
        Ok(p)
    }

    /// Natural units: m = c = hbar = 1.
    pub fn natural(damping: f64, omega: f64, box_length: f64) -> Result<Self> {
        Self::new(1.0, 1.0, 1.0, damping, omega, box_length)
    }

    fn validate(&self) -> Result<()> {
        let fields = [
            ("mass", self.mass),
            ("light_speed", self.light_speed),
            ("hbar", self.hbar),
            ("damping", self.damping),
            ("omega", self.omega),
            ("box_length", self.box_length),
        ];
        for (name, value) in fields {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be strictly positive and finite",
                });
            }
        }
        Ok(())
    }

    /// Damping rate `xi = m^2 c / (hbar B)`, in inverse length units.
    pub fn xi(&self) -> f64 {
        self.mass * self.mass * self.light_speed / (self.hbar * self.damping)
    }

    /// Rest energy in oscillator quanta, `eps_r = m c^2 / (hbar omega)`.
    pub fn eps_r(&self) -> f64 {
        self.mass * self.light_speed * self.light_speed / (self.hbar * self.omega)
    }

    /// Coordinate scale `b = sqrt(m omega / hbar)` making `y = b x`
    /// dimensionless.
    pub fn coord_scale(&self) -> f64 {
        (self.mass * self.omega / self.hbar).sqrt()
    }

    /// Rest energy `m c^2`.
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.light_speed * self.light_speed
    }
}

/// Which dimensionless damping coefficient the oscillator solution uses.
///
/// The two routes from the damped wave equation to its dimensionless form
/// disagree by a factor of two, and the source material never reconciles
/// them. Both are first-class here; neither is declared canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    /// `g = xi / b = (m/B) sqrt(eps_r)` - the coefficient consistent with
    /// the fractional Hamiltonian operator, and the one the published
    /// oscillator spectrum is built on.
    Hamiltonian,
    /// `g = 2 xi / b = 2 (m/B) sqrt(eps_r)` - the coefficient obtained by
    /// substituting `y = b x` directly into the damped wave equation with
    /// its `2 xi psi'` term.
    WaveEquation,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Hamiltonian, Convention::WaveEquation];

    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::Hamiltonian => "hamiltonian",
            Convention::WaveEquation => "wave-equation",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hamiltonian" => Ok(Convention::Hamiltonian),
            "wave-equation" | "wave_equation" | "waveequation" => Ok(Convention::WaveEquation),
            other => Err(Error::Parse(format!(
                "unknown convention `{other}` (expected `hamiltonian` or `wave-equation`)"
            ))),
        }
    }
}

/// Scales derived from [`PhysicalParams`] under a chosen [`Convention`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedScales {
    /// Damping rate `xi = m^2 c / (hbar B)` (inverse length).
    pub xi: f64,
    /// `eps_r = m c^2 / (hbar omega)` (dimensionless).
    pub eps_r: f64,
    /// Coordinate scale `b = sqrt(m omega / hbar)` (inverse length).
    pub b: f64,
    /// Dimensionless oscillator damping coefficient.
    pub g: f64,
    /// Gaussian shift `mu = g / 2` of the oscillator eigenfunctions.
    pub mu: f64,
}

/// Compute all derived scalars. Pure and deterministic.
///
/// Under [`Convention::WaveEquation`] the coefficient is computed as exactly
/// twice the [`Convention::Hamiltonian`] one; the two closed forms
/// `2 xi / b` and `2 (m/B) sqrt(eps_r)` are algebraically identical.
pub fn derive_scales(params: &PhysicalParams, convention: Convention) -> Result<DerivedScales> {
    params.validate()?;
    let xi = params.xi();
    let eps_r = params.eps_r();
    let b = params.coord_scale();
    let g_hamiltonian = (params.mass / params.damping) * eps_r.sqrt();
    let g = match convention {
        Convention::Hamiltonian => g_hamiltonian,
        Convention::WaveEquation => 2.0 * g_hamiltonian,
    };
    Ok(DerivedScales {
        xi,
        eps_r,
        b,
        g,
        mu: g / 2.0,
    })
}

/// Which bound-state problem a damping coefficient is special for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    Box,
    Oscillator,
}

/// The multiple of the mass at which the zero-point term of a spectrum
/// equals the rest energy `m c^2`: `B = m/sqrt(2)` for the box and
/// `B = m/sqrt(8)` for the oscillator.
pub fn special_damping_coefficient(problem: Problem) -> f64 {
    match problem {
        Problem::Box => 1.0 / 2.0_f64.sqrt(),
        Problem::Oscillator => 1.0 / 8.0_f64.sqrt(),
    }
}

/// Exact squared mass-to-damping ratio `(m/B)^2` of the special damping
/// coefficients. Unlike `B` itself these are exactly representable, which
/// lets the rest-energy identities be checked at the bit level.
pub fn special_damping_ratio_squared(problem: Problem) -> f64 {
    match problem {
        Problem::Box => 2.0,
        Problem::Oscillator => 8.0,
    }
}

/// Underdamped condition `xi^2 < 2 m E / hbar^2`: the discriminant of the
/// free-particle characteristic polynomial is negative, so solutions
/// oscillate under an exponential envelope. Only this regime quantizes.
pub fn underdamped_condition(params: &PhysicalParams, energy: f64) -> bool {
    let xi = params.xi();
    xi * xi < 2.0 * params.mass * energy / (params.hbar * params.hbar)
}
