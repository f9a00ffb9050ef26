//! Subcommand implementations. Every command renders its outputs in
//! memory and persists them atomically through [`crate::output::OutputSet`].

use crate::config::RunConfig;
use crate::output::OutputSet;
use anyhow::{bail, Context, Result};
use fracschrod_core::fracderiv::{self, FracOrder, SampledFunction};
use fracschrod_core::free_particle::{self, DampedPlaneWave};
use fracschrod_core::grid::GridSpec;
use fracschrod_core::ladder;
use fracschrod_core::oracle;
use fracschrod_core::oscillator;
use fracschrod_core::params::{derive_scales, underdamped_condition, PhysicalParams};
use fracschrod_core::report::{csv_table, format_float as ff, Report};
use fracschrod_core::svg::{emit_svg, Axes, Curve};
use fracschrod_core::verify::{run_verification, VerifySettings};
use fracschrod_core::box_well;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::path::{Path, PathBuf};

const PLOT_POINTS: usize = 801;

pub fn free(
    cfg: &RunConfig,
    energy: f64,
    amp_a: (f64, f64),
    amp_b: (f64, f64),
    window: (f64, f64),
    svg: bool,
) -> Result<Vec<PathBuf>> {
    let p = &cfg.params;
    if !underdamped_condition(p, energy) {
        bail!(
            "energy {energy} is not underdamped for xi = {}: only the oscillatory regime \
             admits wave solutions (need xi^2 < 2 m E / hbar^2)",
            p.xi()
        );
    }
    let wave = DampedPlaneWave::from_energy(
        p,
        energy,
        Complex64::new(amp_a.0, amp_a.1),
        Complex64::new(amp_b.0, amp_b.1),
    );
    let grid = GridSpec::new(window.0, window.1, cfg.grid_points)?;
    let psi = free_particle::sample_damped_wave(&wave, grid);

    let rows: Vec<Vec<String>> = psi
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            vec![
                ff(grid.point(i)),
                ff(v.re),
                ff(v.im),
                ff(v.norm_sqr()),
            ]
        })
        .collect();
    let csv = cfg.csv_echo() + &csv_table(&["x", "re_psi", "im_psi", "abs2_psi"], &rows);

    let mut out = OutputSet::new(&cfg.out_dir);
    out.add("free.csv", csv);
    if svg {
        let density: Vec<(f64, f64)> = psi
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| (grid.point(i), v.norm_sqr()))
            .collect();
        let plot = emit_svg(
            &[Curve::new("|psi|^2", density)],
            &Axes {
                title: format!("damped plane wave, E = {energy}, xi = {}", p.xi()),
                x_label: "x".into(),
                y_label: "|psi|^2".into(),
                ..Axes::default()
            },
        )?;
        out.add("free.svg", plot);
    }
    out.persist()
}

pub fn box_well(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let p = &cfg.params;
    let closed = box_well::quantize_box(p, cfg.levels);
    let oracle_spectrum = oracle::box_oracle_spectrum(p, cfg.levels, cfg.grid_points, true)?;

    let spectrum_rows: Vec<Vec<String>> = closed
        .levels
        .iter()
        .zip(&oracle_spectrum.eigenvalues)
        .map(|(level, e_oracle)| {
            let deviation = (level.energy - e_oracle).abs() / level.energy.abs();
            vec![
                level.n.to_string(),
                ff(level.k_n),
                ff(level.energy),
                ff(*e_oracle),
                ff(deviation),
            ]
        })
        .collect();
    let spectrum_csv = cfg.csv_echo()
        + &csv_table(&["n", "k_n", "E_n", "E_oracle", "deviation"], &spectrum_rows);

    let half = p.box_length / 2.0;
    let plot_grid = GridSpec::new(-half, half, PLOT_POINTS)?;
    let mut wf_rows = Vec::new();
    let mut curves = Vec::new();
    for level in &closed.levels {
        let psi = box_well::box_eigenfunction(p, level.n, plot_grid)?;
        let mut points = Vec::with_capacity(plot_grid.n_points);
        for (i, v) in psi.values.iter().enumerate() {
            let x = plot_grid.point(i);
            wf_rows.push(vec![
                level.n.to_string(),
                ff(x),
                ff(v.re),
                ff(v.norm_sqr()),
            ]);
            points.push((x, v.norm_sqr()));
        }
        curves.push(Curve::new(format!("n={} density", level.n), points));
    }
    let wf_csv = cfg.csv_echo() + &csv_table(&["n", "x", "psi", "abs2_psi"], &wf_rows);
    let plot = emit_svg(
        &curves,
        &Axes {
            title: format!("damped box densities, xi = {}, L = {}", p.xi(), p.box_length),
            x_label: "x".into(),
            y_label: "|psi|^2".into(),
            ..Axes::default()
        },
    )?;

    let mut out = OutputSet::new(&cfg.out_dir);
    out.add("box_spectrum.csv", spectrum_csv);
    out.add("box_wavefunctions.csv", wf_csv);
    out.add("box_wavefunctions.svg", plot);
    out.persist()
}

pub fn oscillator(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let p = &cfg.params;
    let convention = cfg.convention;
    let scales = derive_scales(p, convention)?;
    let closed = oscillator::quantize_oscillator(p, convention, cfg.levels)?;
    let oracle_spectrum = oracle::oscillator_oracle_spectrum(
        p,
        convention,
        cfg.levels + 1,
        cfg.grid_points,
        true,
    )?;

    let spectrum_rows: Vec<Vec<String>> = closed
        .levels
        .iter()
        .zip(&oracle_spectrum.eigenvalues)
        .map(|(level, eps_oracle)| {
            vec![
                level.n.to_string(),
                ff(level.eps_n),
                ff(level.energy),
                ff(*eps_oracle),
                ff((level.eps_n - eps_oracle).abs()),
            ]
        })
        .collect();
    let spectrum_csv = cfg.csv_echo()
        + &csv_table(
            &["n", "eps_n", "E_n", "eps_oracle", "deviation"],
            &spectrum_rows,
        );

    // Exact P_n coefficients, one row per mu power.
    let mut pn_rows = Vec::new();
    for n in 0..=cfg.levels {
        let poly = oscillator::pn_polynomial(n);
        for (k, coeff) in poly.coeffs.iter().enumerate() {
            pn_rows.push(vec![
                n.to_string(),
                (2 * k).to_string(),
                coeff.to_string(),
                ff(coeff.to_f64().unwrap_or(f64::INFINITY)),
            ]);
        }
    }
    let pn_csv = cfg.csv_echo()
        + &csv_table(
            &["n", "mu_power", "coefficient_exact", "coefficient_f64"],
            &pn_rows,
        );

    let b = scales.b;
    let plot_grid = GridSpec::new((-scales.mu - 8.0) / b, 8.0 / b, PLOT_POINTS)?;
    let mut wf_rows = Vec::new();
    let mut curves = Vec::new();
    for n in 0..=cfg.levels.min(3) {
        let psi = oscillator::osc_eigenfunction(p, convention, n, plot_grid)?;
        let mut points = Vec::with_capacity(plot_grid.n_points);
        for (i, v) in psi.values.iter().enumerate() {
            let x = plot_grid.point(i);
            wf_rows.push(vec![n.to_string(), ff(x), ff(v.re), ff(v.norm_sqr())]);
            points.push((x, v.re));
        }
        curves.push(Curve::new(format!("psi_{n}"), points));
    }
    let wf_csv = cfg.csv_echo() + &csv_table(&["n", "x", "psi", "abs2_psi"], &wf_rows);
    let plot = emit_svg(
        &curves,
        &Axes {
            title: format!("damped oscillator states, g = {:.6}", scales.g),
            x_label: "x".into(),
            y_label: "psi".into(),
            ..Axes::default()
        },
    )?;

    // Ground-state comparison: damped versus undamped envelope.
    let undamped = PhysicalParams::new(
        p.mass,
        p.light_speed,
        p.hbar,
        1e12 * p.mass,
        p.omega,
        p.box_length,
    )?;
    let damped_psi0 = oscillator::osc_eigenfunction(p, convention, 0, plot_grid)?;
    let undamped_psi0 = oscillator::osc_eigenfunction(&undamped, convention, 0, plot_grid)?;
    let as_points = |psi: &fracschrod_core::WaveSample| -> Vec<(f64, f64)> {
        psi.values
            .iter()
            .enumerate()
            .map(|(i, v)| (plot_grid.point(i), v.re))
            .collect()
    };
    let compare = emit_svg(
        &[
            Curve::new("damped psi_0", as_points(&damped_psi0)),
            Curve::new("undamped psi_0", as_points(&undamped_psi0)),
        ],
        &Axes {
            title: format!("ground state displacement, mu = {:.6}", scales.mu),
            x_label: "x".into(),
            y_label: "psi".into(),
            ..Axes::default()
        },
    )?;

    let mut out = OutputSet::new(&cfg.out_dir);
    out.add("osc_spectrum.csv", spectrum_csv);
    out.add("osc_pn.csv", pn_csv);
    out.add("osc_wavefunctions.csv", wf_csv);
    out.add("osc_wavefunctions.svg", plot);
    out.add("osc_ground_comparison.svg", compare);
    out.persist()
}

pub fn ladder(cfg: &RunConfig, n_max: usize) -> Result<Vec<PathBuf>> {
    let p = &cfg.params;
    let mut reports = Vec::new();
    for n in 0..=n_max {
        reports.push(ladder::fractionary_energy_paper(p, n)?);
        reports.push(ladder::momentum_expectation_paper(p, n)?);
    }

    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.quantity.clone(),
                ff(r.paper_formula_value.re),
                ff(r.paper_formula_value.im),
                ff(r.quadrature_value.re),
                ff(r.quadrature_value.im),
                ff(r.deviation),
            ]
        })
        .collect();
    let csv = cfg.csv_echo()
        + &csv_table(
            &[
                "quantity",
                "formula_re",
                "formula_im",
                "quadrature_re",
                "quadrature_im",
                "deviation",
            ],
            &rows,
        );

    let json_rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            serde_json::json!({
                "quantity": r.quantity,
                "formula": { "re": r.paper_formula_value.re, "im": r.paper_formula_value.im },
                "quadrature": { "re": r.quadrature_value.re, "im": r.quadrature_value.im },
                "deviation": r.deviation,
            })
        })
        .collect();
    let json = serde_json::to_string_pretty(&serde_json::json!({
        "config": cfg.effective(),
        "rows": json_rows,
    }))? + "\n";

    let mut out = OutputSet::new(&cfg.out_dir);
    out.add("ladder_expectations.csv", csv);
    out.add("ladder_expectations.json", json);
    out.persist()
}

pub fn frac(cfg: &RunConfig, demo: bool, input: Option<&Path>, alpha: f64) -> Result<Vec<PathBuf>> {
    let order = FracOrder::new(alpha)?;
    let mut out = OutputSet::new(&cfg.out_dir);
    if demo {
        // Half derivative of f(x) = x against the closed form 2 sqrt(x/pi).
        let half = FracOrder::half();
        let dx = 1e-3;
        let f = SampledFunction::from_fn(0.0, dx, 2002, |x| x)?;
        let mut rows = Vec::new();
        for i in (10..=2000).step_by(10) {
            let x = i as f64 * dx;
            let gl = fracderiv::gl_derivative(&f, half, x)?;
            let exact = fracderiv::power_rule_oracle(1.0, half, x);
            rows.push(vec![ff(x), ff(gl), ff(exact), ff((gl - exact).abs())]);
        }
        let csv = cfg.csv_echo()
            + &csv_table(
                &["x", "gl_half_derivative", "power_rule", "deviation"],
                &rows,
            );
        out.add("frac_table.csv", csv);
    } else {
        let path = input.context("`frac` needs either --demo or --input FILE")?;
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let f = SampledFunction::from_csv_str(&text)?;
        let mut rows = Vec::new();
        for i in 1..f.values.len() {
            let x = f.x0 + i as f64 * f.dx;
            let d = fracderiv::gl_derivative(&f, order, x)?;
            rows.push(vec![ff(x), ff(d)]);
        }
        let csv = cfg.csv_echo() + &csv_table(&["x", "derivative"], &rows);
        out.add("frac_table.csv", csv);
    }
    out.persist()
}

pub fn verify(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let settings = VerifySettings {
        params: cfg.params,
        grid_points: cfg.grid_points,
        levels: cfg.levels,
        tolerance_overrides: cfg.tolerance_overrides.clone(),
    };
    let rows = run_verification(&settings)?;
    let report = Report::new(cfg.effective(), rows);

    let confirmed = report
        .rows
        .iter()
        .filter(|r| r.verdict == fracschrod_core::Verdict::Confirmed)
        .count();
    let discrepant = report
        .rows
        .iter()
        .filter(|r| r.verdict == fracschrod_core::Verdict::Discrepant)
        .count();
    println!(
        "{} claims checked: {confirmed} confirmed, {discrepant} discrepant",
        report.rows.len()
    );

    let mut out = OutputSet::new(&cfg.out_dir);
    out.add("report.csv", report.to_csv());
    out.add("report.json", report.to_json());
    out.persist()
}
