//! Run configuration: a flat `key = value` file overridden by CLI flags
//! and the `FRACSCHROD_OUT` environment variable.

use anyhow::{bail, Context, Result};
use fracschrod_core::params::{Convention, PhysicalParams};
use fracschrod_core::report::EffectiveConfig;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Fully resolved configuration. After [`RunConfig::load`] every field is
/// explicit; reports echo all of it, so outputs carry no hidden defaults.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: PhysicalParams,
    pub convention: Convention,
    pub grid_points: usize,
    pub levels: usize,
    pub out_dir: PathBuf,
    /// Per-claim tolerance overrides for the verification suite, from
    /// `tol.<claim-id> = <value>` lines.
    pub tolerance_overrides: Vec<(String, f64)>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            params: PhysicalParams::natural(1.0, 1.0, 1.0).expect("natural units are valid"),
            convention: Convention::Hamiltonian,
            grid_points: 4000,
            levels: 5,
            out_dir: PathBuf::from("out"),
            tolerance_overrides: Vec::new(),
        }
    }
}

impl RunConfig {
    /// Resolve the configuration: defaults, then the config file, then the
    /// `FRACSCHROD_OUT` environment variable, then the `--out` flag.
    pub fn load(config_path: Option<&Path>, out_flag: Option<&Path>) -> Result<Self> {
        let mut cfg = RunConfig::default();
        if let Some(path) = config_path {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config file {}", path.display()))?;
            cfg.apply_file(&text)
                .with_context(|| format!("parsing config file {}", path.display()))?;
        }
        if let Ok(dir) = std::env::var("FRACSCHROD_OUT") {
            if !dir.is_empty() {
                cfg.out_dir = PathBuf::from(dir);
            }
        }
        if let Some(dir) = out_flag {
            cfg.out_dir = dir.to_path_buf();
        }
        Ok(cfg)
    }

    fn apply_file(&mut self, text: &str) -> Result<()> {
        let mut keys: BTreeMap<String, String> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected `key = value`", lineno + 1);
            };
            keys.insert(key.trim().to_string(), value.trim().to_string());
        }
        let mut parse_f64 = |name: &str, target: &mut f64| -> Result<()> {
            if let Some(v) = keys.remove(name) {
                *target = v
                    .parse::<f64>()
                    .with_context(|| format!("key `{name}`: bad number `{v}`"))?;
            }
            Ok(())
        };
        parse_f64("m", &mut self.params.mass)?;
        parse_f64("c", &mut self.params.light_speed)?;
        parse_f64("hbar", &mut self.params.hbar)?;
        parse_f64("B", &mut self.params.damping)?;
        parse_f64("omega", &mut self.params.omega)?;
        parse_f64("L", &mut self.params.box_length)?;
        if let Some(v) = keys.remove("convention") {
            self.convention = v.parse::<Convention>()?;
        }
        if let Some(v) = keys.remove("grid_points") {
            self.grid_points = v
                .parse::<usize>()
                .with_context(|| format!("key `grid_points`: bad integer `{v}`"))?;
        }
        if let Some(v) = keys.remove("levels") {
            self.levels = v
                .parse::<usize>()
                .with_context(|| format!("key `levels`: bad integer `{v}`"))?;
        }
        if let Some(v) = keys.remove("out") {
            self.out_dir = PathBuf::from(v);
        }
        let tolerance_keys: Vec<String> = keys
            .keys()
            .filter(|k| k.starts_with("tol."))
            .cloned()
            .collect();
        for key in tolerance_keys {
            let value = keys.remove(&key).expect("key just listed");
            let id = key.trim_start_matches("tol.").to_string();
            let tol = value
                .parse::<f64>()
                .with_context(|| format!("key `{key}`: bad number `{value}`"))?;
            self.tolerance_overrides.push((id, tol));
        }
        if let Some(unknown) = keys.keys().next() {
            bail!("unknown config key `{unknown}`");
        }
        // Revalidate: file values may be non-positive.
        self.params = PhysicalParams::new(
            self.params.mass,
            self.params.light_speed,
            self.params.hbar,
            self.params.damping,
            self.params.omega,
            self.params.box_length,
        )?;
        self.tolerance_overrides.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(())
    }

    /// The configuration block echoed into reports.
    pub fn effective(&self) -> EffectiveConfig {
        EffectiveConfig {
            mass: self.params.mass,
            light_speed: self.params.light_speed,
            hbar: self.params.hbar,
            damping: self.params.damping,
            omega: self.params.omega,
            box_length: self.params.box_length,
            convention: self.convention.as_str().to_string(),
            grid_points: self.grid_points,
            levels: self.levels,
        }
    }

    /// The `#` comment block echoed at the top of CSV outputs.
    pub fn csv_echo(&self) -> String {
        use fracschrod_core::report::format_float as ff;
        let mut s = String::new();
        s.push_str(&format!("# m = {}\n", ff(self.params.mass)));
        s.push_str(&format!("# c = {}\n", ff(self.params.light_speed)));
        s.push_str(&format!("# hbar = {}\n", ff(self.params.hbar)));
        s.push_str(&format!("# B = {}\n", ff(self.params.damping)));
        s.push_str(&format!("# omega = {}\n", ff(self.params.omega)));
        s.push_str(&format!("# L = {}\n", ff(self.params.box_length)));
        s.push_str(&format!("# convention = {}\n", self.convention));
        s.push_str(&format!("# grid_points = {}\n", self.grid_points));
        s.push_str(&format!("# levels = {}\n", self.levels));
        s
    }
}
