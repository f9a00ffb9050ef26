//! Ladder operators for the damped oscillator, acting on grid-sampled
//! wavefunctions.
//!
//! The destruction and creation operators extend the standard pair by a
//! real constant `(m/2B) sqrt(eps_r / 2)`:
//!
//! ```text
//! a  = sqrt(m omega / 2 hbar) x + const + sqrt(hbar / 2 m omega) d/dx
//! a+ = sqrt(m omega / 2 hbar) x - const - sqrt(hbar / 2 m omega) d/dx
//! ```
//!
//! They ladder between the shifted-Gaussian eigenfunctions, but they are
//! not mutually adjoint: the numerically computed adjoint of `a` differs
//! from `a+` by `2 const` times the identity. That defect is measured and
//! reported here, never corrected, because it is the root of the
//! formula-versus-quadrature discrepancies in the expectation values.
//!
//! Everything in this module uses the damping coefficient of the
//! fractional Hamiltonian route ([`Convention::Hamiltonian`]), which is
//! the convention the published oscillator results are built on.

use crate::error::{Error, Result};
use crate::grid::{GridSpec, WaveSample};
use crate::oscillator::{osc_eigenfunction, pn_polynomial};
use crate::params::{derive_scales, Convention, PhysicalParams};
use crate::quad;
use crate::stencil;
use num_complex::Complex64;

/// Which direction the operator ladders.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderKind {
    Destroy,
    Create,
}

/// A ladder operator bound to a parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderOperator {
    pub kind: LadderKind,
    pub params: PhysicalParams,
    /// The signed constant term: `+(m/2B) sqrt(eps_r/2)` for Destroy,
    /// `-(m/2B) sqrt(eps_r/2)` for Create.
    pub constant: f64,
}

impl LadderOperator {
    pub fn new(kind: LadderKind, params: PhysicalParams) -> Self {
        let magnitude =
            params.mass / (2.0 * params.damping) * (params.eps_r() / 2.0).sqrt();
        let constant = match kind {
            LadderKind::Destroy => magnitude,
            LadderKind::Create => -magnitude,
        };
        Self {
            kind,
            params,
            constant,
        }
    }
}

/// Apply a ladder operator to a sampled wavefunction with 4th-order
/// stencils for the derivative.
pub fn apply_ladder(op: &LadderOperator, psi: &WaveSample) -> Result<WaveSample> {
    if psi.grid.n_points < 5 {
        return Err(Error::GridTooCoarse("ladder application needs >= 5 points"));
    }
    let p = &op.params;
    let pos_coeff = (p.mass * p.omega / (2.0 * p.hbar)).sqrt();
    let deriv_coeff = (p.hbar / (2.0 * p.mass * p.omega)).sqrt();
    let sign = match op.kind {
        LadderKind::Destroy => 1.0,
        LadderKind::Create => -1.0,
    };
    let d = stencil::first_derivative(&psi.values, psi.grid.dx());
    let values = psi
        .values
        .iter()
        .zip(&d)
        .enumerate()
        .map(|(i, (v, dv))| {
            let x = psi.grid.point(i);
            (pos_coeff * x + op.constant) * v + sign * deriv_coeff * dv
        })
        .collect();
    WaveSample::new(psi.grid, values)
}

/// The commutator of the destruction operator with the position form of
/// the squared half-derivative momentum, `-hbar m c d/dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutatorCheck {
    /// Closed form `hbar m c sqrt(m omega / 2 hbar)`.
    pub analytic: f64,
    /// Least-squares coefficient fitted from the grid commutator's action
    /// on the first test function.
    pub measured: f64,
    /// Max deviation of the grid commutator from `analytic * identity`
    /// applied to the test functions.
    pub max_deviation: f64,
}

/// Evaluate the commutator closed form and verify it numerically on three
/// decaying test functions.
pub fn commutator_value(params: &PhysicalParams) -> Result<CommutatorCheck> {
    let p = params;
    let analytic = p.hbar * p.mass * p.light_speed * (p.mass * p.omega / (2.0 * p.hbar)).sqrt();
    let destroy = LadderOperator::new(LadderKind::Destroy, *p);

    let scales = derive_scales(p, Convention::Hamiltonian)?;
    let b = scales.b;
    let grid = GridSpec::new((-scales.mu - 10.0) / b, 10.0 / b, 4001)?;
    let frac_coeff = -p.hbar * p.mass * p.light_speed;
    let frac_momentum_sq = |w: &WaveSample| -> WaveSample {
        let d = stencil::first_derivative(&w.values, w.grid.dx());
        WaveSample {
            grid: w.grid,
            values: d.iter().map(|v| frac_coeff * v).collect(),
        }
    };

    let tests: [Box<dyn Fn(f64) -> f64>; 3] = [
        Box::new(|x: f64| (-x * x / 2.0).exp()),
        Box::new(|x: f64| x * (-x * x / 2.0).exp()),
        Box::new(|x: f64| x.sin() * (-x * x / 2.0).exp()),
    ];
    let mut max_deviation: f64 = 0.0;
    let mut measured = 0.0;
    for (t, f) in tests.iter().enumerate() {
        let h = WaveSample::from_real_fn(grid, f);
        // [a, Op] h = a(Op h) - Op(a h)
        let a_op_h = apply_ladder(&destroy, &frac_momentum_sq(&h))?;
        let op_a_h = frac_momentum_sq(&apply_ladder(&destroy, &h)?);
        let mut num = 0.0;
        let mut den = 0.0;
        for i in 8..grid.n_points - 8 {
            let commutator = a_op_h.values[i] - op_a_h.values[i];
            let expected = analytic * h.values[i];
            max_deviation = max_deviation.max((commutator - expected).norm());
            num += (commutator * h.values[i].conj()).re;
            den += h.values[i].norm_sqr();
        }
        if t == 0 {
            measured = num / den;
        }
    }
    Ok(CommutatorCheck {
        analytic,
        measured,
        max_deviation,
    })
}

/// Ladder scaling ratio from the normalization polynomials:
/// `sqrt(P_n / P_{n-1})` for Destroy, `sqrt(P_{n+1} / P_n)` for Create.
/// Both reduce to the standard `sqrt(n)` / `sqrt(n+1)` at `mu = 0`.
pub fn ladder_ratio(kind: LadderKind, n: usize, mu: f64) -> f64 {
    match kind {
        LadderKind::Destroy => {
            assert!(n >= 1, "destroy direction needs n >= 1");
            (pn_polynomial(n).eval(mu) / pn_polynomial(n - 1).eval(mu)).sqrt()
        }
        LadderKind::Create => {
            (pn_polynomial(n + 1).eval(mu) / pn_polynomial(n).eval(mu)).sqrt()
        }
    }
}

/// Build the n-th eigenfunction as `(a+)^n psi_0 / sqrt(P_n(mu))`.
///
/// Each application loses a little accuracy to the finite-difference
/// derivative; the result is audited against unit norm and rejected when
/// the accumulated error exceeds `1e-3`.
pub fn build_state(params: &PhysicalParams, n: usize, grid: GridSpec) -> Result<WaveSample> {
    if n > 12 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            reason: "finite-difference error growth caps ladder towers at n = 12",
        });
    }
    let scales = derive_scales(params, Convention::Hamiltonian)?;
    let mut state = osc_eigenfunction(params, Convention::Hamiltonian, 0, grid)?;
    let create = LadderOperator::new(LadderKind::Create, *params);
    for _ in 0..n {
        state = apply_ladder(&create, &state)?;
    }
    let scale = 1.0 / pn_polynomial(n).eval(scales.mu).sqrt();
    for v in &mut state.values {
        *v *= scale;
    }
    let norm_sq: Vec<f64> = state.values.iter().map(|v| v.norm_sqr()).collect();
    let norm = quad::trapezoid(&norm_sq, grid.dx()).sqrt();
    let deviation = (norm - 1.0).abs();
    if deviation > 1e-3 {
        return Err(Error::AccumulatedError {
            deviation,
            tolerance: 1e-3,
        });
    }
    Ok(state)
}

/// Apply the full damped-oscillator Hamiltonian
/// `-(hbar^2/2m) d^2/dx^2 - (hbar m c / 2B) d/dx + (1/2) m omega^2 x^2`
/// to a sample.
pub fn apply_hamiltonian(params: &PhysicalParams, psi: &WaveSample) -> WaveSample {
    let p = params;
    let dx = psi.grid.dx();
    let d1 = stencil::first_derivative(&psi.values, dx);
    let d2 = stencil::second_derivative(&psi.values, dx);
    let kin = -p.hbar * p.hbar / (2.0 * p.mass);
    let damp = -p.hbar * p.mass * p.light_speed / (2.0 * p.damping);
    let values = psi
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let x = psi.grid.point(i);
            kin * d2[i] + damp * d1[i] + 0.5 * p.mass * p.omega * p.omega * x * x * v
        })
        .collect();
    WaveSample {
        grid: psi.grid,
        values,
    }
}

/// One expectation-value claim: the closed formula next to the value the
/// quadrature oracle actually produces.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectationReport {
    pub quantity: String,
    pub paper_formula_value: Complex64,
    pub quadrature_value: Complex64,
    pub deviation: f64,
}

impl ExpectationReport {
    fn new(quantity: String, paper: Complex64, quadrature: Complex64) -> Self {
        Self {
            quantity,
            paper_formula_value: paper,
            quadrature_value: quadrature,
            deviation: (paper - quadrature).norm(),
        }
    }
}

fn oscillator_grid(params: &PhysicalParams) -> Result<GridSpec> {
    let scales = derive_scales(params, Convention::Hamiltonian)?;
    let b = scales.b;
    GridSpec::new((-scales.mu - 12.0) / b, 12.0 / b, 4001)
}

/// Quadrature of `integral psi (coeff d/dx) psi dx` for a real sampled
/// state, with the derivative from 4th-order stencils.
fn first_derivative_expectation(psi: &WaveSample, coeff: Complex64) -> Complex64 {
    let d = stencil::first_derivative(&psi.values, psi.grid.dx());
    let integrand: Vec<Complex64> = psi
        .values
        .iter()
        .zip(&d)
        .map(|(v, dv)| v.conj() * coeff * dv)
        .collect();
    quad::trapezoid_complex(&integrand, psi.grid.dx())
}

/// Quantized fractional kinetic energy: formula value
/// `hbar omega (n - P_n/P_{n-1}) + (m^2 / 4 B^2) m c^2` (the polynomial
/// ratio is dropped at n = 0, where the destruction operator kills the
/// state), next to the quadrature value of
/// `integral psi_n (-hbar m c / 2B) psi_n' dx`, which vanishes for every
/// real normalizable eigenfunction.
pub fn fractionary_energy_paper(params: &PhysicalParams, n: usize) -> Result<ExpectationReport> {
    let p = params;
    let scales = derive_scales(p, Convention::Hamiltonian)?;
    let ratio_term = if n == 0 {
        0.0
    } else {
        pn_polynomial(n).eval(scales.mu) / pn_polynomial(n - 1).eval(scales.mu)
    };
    let mass_ratio_sq = (p.mass / p.damping) * (p.mass / p.damping);
    let formula = p.hbar * p.omega * (n as f64 - ratio_term)
        + mass_ratio_sq / 4.0 * p.rest_energy();

    let grid = oscillator_grid(p)?;
    let psi = osc_eigenfunction(p, Convention::Hamiltonian, n, grid)?;
    let coeff = Complex64::new(-p.hbar * p.mass * p.light_speed / (2.0 * p.damping), 0.0);
    let quadrature = first_derivative_expectation(&psi, coeff);

    Ok(ExpectationReport::new(
        format!("fractionary-energy-n{n}"),
        Complex64::new(formula, 0.0),
        quadrature,
    ))
}

/// Momentum expectation: formula value
/// `-i sqrt(2 hbar m omega eps_r) / (2 sqrt(2))`, next to the quadrature
/// value of `integral psi_n (-i hbar) psi_n' dx`.
pub fn momentum_expectation_paper(params: &PhysicalParams, n: usize) -> Result<ExpectationReport> {
    let p = params;
    let formula = Complex64::new(
        0.0,
        -(2.0 * p.hbar * p.mass * p.omega * p.eps_r()).sqrt() / (2.0 * 2.0_f64.sqrt()),
    );
    let grid = oscillator_grid(p)?;
    let psi = osc_eigenfunction(p, Convention::Hamiltonian, n, grid)?;
    let quadrature = first_derivative_expectation(&psi, Complex64::new(0.0, -p.hbar));
    Ok(ExpectationReport::new(
        format!("momentum-n{n}"),
        formula,
        quadrature,
    ))
}

/// Measured adjointness defect of the ladder pair on a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdjointAudit {
    /// `2 (m/2B) sqrt(eps_r/2)`: the identity coefficient by which the
    /// numerical adjoint of the destroy matrix differs from the create
    /// matrix.
    pub expected_identity_coeff: f64,
    /// Mean diagonal entry of `transpose(destroy) - create` over the
    /// interior.
    pub measured_identity_coeff: f64,
    /// Max interior deviation of `transpose(destroy) - create` from
    /// `expected * identity`.
    pub max_interior_deviation: f64,
}

/// Build the dense matrix of a ladder operator by applying it to the
/// basis vectors of the grid.
pub fn ladder_matrix(op: &LadderOperator, grid: GridSpec) -> Result<Vec<Vec<f64>>> {
    let n = grid.n_points;
    let mut columns = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut basis = vec![Complex64::default(); n];
        basis[j] = Complex64::new(1.0, 0.0);
        let col = apply_ladder(op, &WaveSample::new(grid, basis)?)?;
        for i in 0..n {
            columns[j][i] = col.values[i].re;
        }
    }
    // Transpose columns into rows.
    let mut rows = vec![vec![0.0; n]; n];
    for (j, col) in columns.iter().enumerate() {
        for i in 0..n {
            rows[i][j] = col[i];
        }
    }
    Ok(rows)
}

/// Compare the numerical adjoint (transpose) of the destroy matrix with
/// the create matrix: away from the one-sided boundary stencils they must
/// differ by exactly twice the ladder constant on the diagonal.
pub fn adjointness_audit(params: &PhysicalParams, grid: GridSpec) -> Result<AdjointAudit> {
    let destroy = ladder_matrix(&LadderOperator::new(LadderKind::Destroy, *params), grid)?;
    let create = ladder_matrix(&LadderOperator::new(LadderKind::Create, *params), grid)?;
    let expected =
        params.mass / params.damping * (params.eps_r() / 2.0).sqrt();
    let n = grid.n_points;
    let mut worst: f64 = 0.0;
    let mut diag_sum = 0.0;
    for i in 4..n - 4 {
        for j in 4..n - 4 {
            let defect = destroy[j][i] - create[i][j];
            if i == j {
                diag_sum += defect;
            }
            let target = if i == j { expected } else { 0.0 };
            worst = worst.max((defect - target).abs());
        }
    }
    Ok(AdjointAudit {
        expected_identity_coeff: expected,
        measured_identity_coeff: diag_sum / (n - 8) as f64,
        max_interior_deviation: worst,
    })
}
