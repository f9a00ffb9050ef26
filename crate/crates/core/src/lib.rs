//! Closed-form solutions of a linearly damped Schrodinger wave equation,
//! paired with independent numerical oracles.
//!
//! The damped wave equation studied here is
//!
//! ```text
//! psi'' + 2 xi psi' + (2m/hbar^2) (E - V(x)) psi = 0,     xi = m^2 c / (hbar B)
//! ```
//!
//! where `B` is a mass-dimension damping coefficient. The crate implements
//! the closed-form results for the free particle, the infinite well and the
//! damped harmonic oscillator, together with the machinery needed to check
//! every one of them against an independent numerical route: a
//! finite-difference eigensolver on the similarity-transformed operator,
//! quadrature oracles, and discrete fractional derivatives. The [`verify`]
//! module assembles the full claim-by-claim agreement report.

pub mod box_well;
pub mod error;
pub mod fracderiv;
pub mod free_particle;
pub mod grid;
pub mod hermite;
pub mod ladder;
pub mod oracle;
pub mod oscillator;
pub mod params;
pub mod quad;
pub mod report;
pub mod stencil;
pub mod svg;
pub mod tridiag;
pub mod verify;

pub use error::Error;
pub use grid::{GridSpec, WaveSample};
pub use params::{Convention, DerivedScales, PhysicalParams, Problem};
pub use report::{Report, Verdict, VerificationRow};
