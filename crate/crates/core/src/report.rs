//! Verification rows and their deterministic CSV / JSON serialization.
//!
//! A row pairs one published claim with the value an independent oracle
//! produced for it. Discrepant rows are successes of the lab, not
//! failures: they are the detections the whole artifact exists to make.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Verdict of a single claim row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// Both values exist and agree within the row tolerance.
    Confirmed,
    /// The oracle contradicts the claim.
    Discrepant,
    /// The claim has no independent oracle; only the formula value is
    /// recorded.
    FormulaOnly,
}

/// A complex value in a serialization-friendly shape.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(v: Complex64) -> Self {
        Self { re: v.re, im: v.im }
    }
}

impl ComplexValue {
    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// One verified claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRow {
    /// Stable claim identifier, unique within a report.
    pub id: String,
    /// Which published formula or statement the row checks.
    pub paper_ref: String,
    /// The value the published formula produces, when it produces one.
    pub paper_value: Option<ComplexValue>,
    /// The value of the independent oracle, when one exists.
    pub oracle_value: Option<ComplexValue>,
    /// `|paper - oracle|` when both exist.
    pub deviation: Option<f64>,
    /// Absolute tolerance the verdict was judged at.
    pub tolerance: f64,
    pub verdict: Verdict,
    /// Free-text context, mainly for discrepancies.
    pub note: Option<String>,
}

impl VerificationRow {
    /// Compare a formula value against an oracle value.
    pub fn compare(
        id: impl Into<String>,
        paper_ref: impl Into<String>,
        paper: Complex64,
        oracle: Complex64,
        tolerance: f64,
    ) -> Self {
        let deviation = (paper - oracle).norm();
        let verdict = if deviation <= tolerance {
            Verdict::Confirmed
        } else {
            Verdict::Discrepant
        };
        Self {
            id: id.into(),
            paper_ref: paper_ref.into(),
            paper_value: Some(paper.into()),
            oracle_value: Some(oracle.into()),
            deviation: Some(deviation),
            tolerance,
            verdict,
            note: None,
        }
    }

    /// A claim with a formula value but no oracle.
    pub fn formula_only(
        id: impl Into<String>,
        paper_ref: impl Into<String>,
        paper: Complex64,
    ) -> Self {
        Self {
            id: id.into(),
            paper_ref: paper_ref.into(),
            paper_value: Some(paper.into()),
            oracle_value: None,
            deviation: None,
            tolerance: 0.0,
            verdict: Verdict::FormulaOnly,
            note: None,
        }
    }

    /// A qualitative claim with no formula value of its own, contradicted
    /// by an oracle value. Requires a note saying what the claim asserted.
    pub fn contradicted_claim(
        id: impl Into<String>,
        paper_ref: impl Into<String>,
        oracle: Complex64,
        note: impl Into<String>,
    ) -> Self {
        Self {
            id: id.into(),
            paper_ref: paper_ref.into(),
            paper_value: None,
            oracle_value: Some(oracle.into()),
            deviation: None,
            tolerance: 0.0,
            verdict: Verdict::Discrepant,
            note: Some(note.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// The effective configuration echoed into every report; no hidden
/// defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EffectiveConfig {
    pub mass: f64,
    pub light_speed: f64,
    pub hbar: f64,
    pub damping: f64,
    pub omega: f64,
    pub box_length: f64,
    pub convention: String,
    pub grid_points: usize,
    pub levels: usize,
}

/// A full verification report: effective configuration plus rows sorted
/// by claim id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: EffectiveConfig,
    pub rows: Vec<VerificationRow>,
}

impl Report {
    /// Build a report; rows are merged deterministically by claim id.
    pub fn new(config: EffectiveConfig, mut rows: Vec<VerificationRow>) -> Self {
        rows.sort_by(|a, b| a.id.cmp(&b.id));
        debug_assert!(
            rows.windows(2).all(|w| w[0].id != w[1].id),
            "claim ids must be unique"
        );
        Self { config, rows }
    }

    /// Deterministic CSV: config echoed as `#` comments, then a header and
    /// one line per row. 17 significant digits, `.` decimal, `,`
    /// separator, LF line ends.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        out.push_str(&format!("# m = {}\n", format_float(c.mass)));
        out.push_str(&format!("# c = {}\n", format_float(c.light_speed)));
        out.push_str(&format!("# hbar = {}\n", format_float(c.hbar)));
        out.push_str(&format!("# B = {}\n", format_float(c.damping)));
        out.push_str(&format!("# omega = {}\n", format_float(c.omega)));
        out.push_str(&format!("# L = {}\n", format_float(c.box_length)));
        out.push_str(&format!("# convention = {}\n", c.convention));
        out.push_str(&format!("# grid_points = {}\n", c.grid_points));
        out.push_str(&format!("# levels = {}\n", c.levels));
        out.push_str(
            "id,paper_ref,paper_re,paper_im,oracle_re,oracle_im,deviation,tolerance,verdict,note\n",
        );
        for row in &self.rows {
            let complex_cols = |v: &Option<ComplexValue>| match v {
                Some(c) => (format_float(c.re), format_float(c.im)),
                None => (String::new(), String::new()),
            };
            let (paper_re, paper_im) = complex_cols(&row.paper_value);
            let (oracle_re, oracle_im) = complex_cols(&row.oracle_value);
            let verdict = match row.verdict {
                Verdict::Confirmed => "confirmed",
                Verdict::Discrepant => "discrepant",
                Verdict::FormulaOnly => "formula-only",
            };
            let fields = [
                row.id.clone(),
                row.paper_ref.clone(),
                paper_re,
                paper_im,
                oracle_re,
                oracle_im,
                row.deviation.map(format_float).unwrap_or_default(),
                format_float(row.tolerance),
                verdict.to_string(),
                row.note.clone().unwrap_or_default(),
            ];
            let line: Vec<String> = fields.iter().map(|f| csv_escape(f)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Deterministic JSON mirror of the CSV rows.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail") + "\n"
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Fixed float formatting: 17 significant digits in scientific notation,
/// enough to round-trip any f64 and be byte-stable across runs.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Quote a CSV field when it contains a separator, quote or newline.
pub fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Render a plain CSV table with a header row.
pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|f| csv_escape(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
