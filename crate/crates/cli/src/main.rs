//! `fracschrod`: closed-form solutions of a linearly damped wave equation
//! cross-checked against independent numerical oracles.

mod commands;
mod config;
mod output;

use anyhow::Result;
use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "fracschrod",
    version,
    about = "Verification lab for the damped Schrodinger wave equation",
    long_about = "Solves the damped wave equation's closed-form problems (free particle,\n\
                  infinite well, damped harmonic oscillator, ladder algebra) and\n\
                  re-derives every result with independent numerical oracles,\n\
                  emitting deterministic CSV/JSON/SVG outputs."
)]
struct Cli {
    /// Flat `key = value` configuration file (keys: m, c, hbar, B, omega,
    /// L, convention, grid_points, levels, out, tol.<claim-id>).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Output directory (overrides FRACSCHROD_OUT and the config file).
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a damped plane wave and its probability density.
    Free {
        /// Energy of the wave; must lie in the underdamped regime.
        #[arg(long, default_value_t = 1.0)]
        energy: f64,
        /// Real and imaginary parts of the two amplitudes.
        #[arg(long, default_value_t = 1.0)]
        amp_a_re: f64,
        #[arg(long, default_value_t = 0.0)]
        amp_a_im: f64,
        #[arg(long, default_value_t = 0.0)]
        amp_b_re: f64,
        #[arg(long, default_value_t = 0.0)]
        amp_b_im: f64,
        #[arg(long, default_value_t = -2.0)]
        x_min: f64,
        #[arg(long, default_value_t = 6.0)]
        x_max: f64,
        #[arg(long)]
        grid_points: Option<usize>,
        /// Also emit an SVG plot of |psi|^2.
        #[arg(long)]
        svg: bool,
    },
    /// Infinite-well spectrum, oracle deviations and eigenfunctions.
    Box {
        /// Box length L.
        #[arg(long = "L", value_name = "L")]
        length: Option<f64>,
        /// Damping coefficient B.
        #[arg(long = "B", value_name = "B")]
        damping: Option<f64>,
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long)]
        grid_points: Option<usize>,
    },
    /// Damped-oscillator spectrum, P_n coefficient table and
    /// eigenfunctions.
    Osc {
        #[arg(long)]
        omega: Option<f64>,
        /// Damping coefficient B.
        #[arg(long = "B", value_name = "B")]
        damping: Option<f64>,
        /// Damping convention: `hamiltonian` or `wave-equation`.
        #[arg(long)]
        convention: Option<String>,
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long)]
        grid_points: Option<usize>,
    },
    /// Ladder-operator expectation values: closed formulas next to
    /// quadrature oracles.
    Ladder {
        /// Highest level to report.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        omega: Option<f64>,
        /// Damping coefficient B (defaults to m/sqrt(8)).
        #[arg(long = "B", value_name = "B")]
        damping: Option<f64>,
    },
    /// Fractional derivative tables.
    Frac {
        /// Emit the half-derivative demo table for f(x) = x.
        #[arg(long, conflicts_with = "input")]
        demo: bool,
        /// CSV file with columns `x,value` to differentiate.
        #[arg(long, value_name = "FILE")]
        input: Option<PathBuf>,
        /// Fractional order in (0, 1].
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
    },
    /// Run the full claim suite and write report.csv / report.json.
    Verify {
        #[arg(long)]
        grid_points: Option<usize>,
        #[arg(long)]
        levels: Option<usize>,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let mut cfg = config::RunConfig::load(cli.config.as_deref(), cli.out.as_deref())?;

    let written = match cli.command {
        Command::Free {
            energy,
            amp_a_re,
            amp_a_im,
            amp_b_re,
            amp_b_im,
            x_min,
            x_max,
            grid_points,
            svg,
        } => {
            if let Some(g) = grid_points {
                cfg.grid_points = g;
            }
            commands::free(
                &cfg,
                energy,
                (amp_a_re, amp_a_im),
                (amp_b_re, amp_b_im),
                (x_min, x_max),
                svg,
            )?
        }
        Command::Box {
            length,
            damping,
            levels,
            grid_points,
        } => {
            if let Some(l) = length {
                cfg.params.box_length = l;
            }
            if let Some(b) = damping {
                cfg.params.damping = b;
            }
            if let Some(n) = levels {
                cfg.levels = n;
            }
            if let Some(g) = grid_points {
                cfg.grid_points = g;
            }
            commands::box_well(&cfg)?
        }
        Command::Osc {
            omega,
            damping,
            convention,
            levels,
            grid_points,
        } => {
            if let Some(w) = omega {
                cfg.params.omega = w;
            }
            if let Some(b) = damping {
                cfg.params.damping = b;
            }
            if let Some(c) = convention {
                cfg.convention = c.parse()?;
            }
            if let Some(n) = levels {
                cfg.levels = n;
            }
            if let Some(g) = grid_points {
                cfg.grid_points = g;
            }
            commands::oscillator(&cfg)?
        }
        Command::Ladder { n, omega, damping } => {
            if let Some(w) = omega {
                cfg.params.omega = w;
            }
            match damping {
                Some(b) => cfg.params.damping = b,
                None => {
                    cfg.params.damping = cfg.params.mass
                        * fracschrod_core::params::special_damping_coefficient(
                            fracschrod_core::params::Problem::Oscillator,
                        )
                }
            }
            commands::ladder(&cfg, n)?
        }
        Command::Frac { demo, input, alpha } => commands::frac(&cfg, demo, input.as_deref(), alpha)?,
        Command::Verify {
            grid_points,
            levels,
        } => {
            if let Some(g) = grid_points {
                cfg.grid_points = g;
            }
            if let Some(n) = levels {
                cfg.levels = n;
            }
            commands::verify(&cfg)?
        }
    };

    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}
