//! Minimal standalone SVG line plots, written directly so the output
//! stays auditable and byte-deterministic.

use crate::error::{Error, Result};

/// One polyline.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

impl Curve {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> Self {
        Self {
            label: label.into(),
            points,
        }
    }
}

/// Plot metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Axes {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub width: f64,
    pub height: f64,
}

impl Default for Axes {
    fn default() -> Self {
        Self {
            title: String::new(),
            x_label: "x".into(),
            y_label: "y".into(),
            width: 720.0,
            height: 440.0,
        }
    }
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 18.0;
const MARGIN_TOP: f64 = 34.0;
const MARGIN_BOTTOM: f64 = 48.0;
const TICKS: usize = 5;

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

fn fmt_tick(v: f64) -> String {
    let s = format!("{v:.4}");
    // Trim trailing zeros but keep one digit after the point.
    let trimmed = s.trim_end_matches('0');
    let trimmed = trimmed.strip_suffix('.').unwrap_or(trimmed);
    if trimmed == "-0" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Render curves as a standalone SVG document with axis ticks and a
/// legend. Identical input yields identical bytes.
pub fn emit_svg(curves: &[Curve], axes: &Axes) -> Result<String> {
    if curves.is_empty() || curves.iter().all(|c| c.points.is_empty()) {
        return Err(Error::InvalidParameter {
            name: "curves",
            value: 0.0,
            reason: "SVG plots need at least one nonempty curve",
        });
    }
    let mut x_min = f64::MAX;
    let mut x_max = f64::MIN;
    let mut y_min = f64::MAX;
    let mut y_max = f64::MIN;
    for c in curves {
        for &(x, y) in &c.points {
            x_min = x_min.min(x);
            x_max = x_max.max(x);
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
    }
    if x_max - x_min < 1e-300 {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if y_max - y_min < 1e-300 {
        y_min -= 0.5;
        y_max += 0.5;
    }
    // A little headroom above and below the data.
    let pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    let plot_w = axes.width - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = axes.height - MARGIN_TOP - MARGIN_BOTTOM;
    let to_px = |x: f64, y: f64| -> (f64, f64) {
        (
            MARGIN_LEFT + (x - x_min) / (x_max - x_min) * plot_w,
            MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h,
        )
    };

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\">\n",
        fmt(axes.width),
        fmt(axes.height),
        fmt(axes.width),
        fmt(axes.height)
    ));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    if !axes.title.is_empty() {
        s.push_str(&format!(
            "<text x=\"{}\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" \
             text-anchor=\"middle\">{}</text>\n",
            fmt(axes.width / 2.0),
            escape_xml(&axes.title)
        ));
    }
    // Frame.
    s.push_str(&format!(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" \
         stroke=\"#333333\" stroke-width=\"1\"/>\n",
        fmt(MARGIN_LEFT),
        fmt(MARGIN_TOP),
        fmt(plot_w),
        fmt(plot_h)
    ));
    // Ticks and grid.
    for i in 0..TICKS {
        let f = i as f64 / (TICKS - 1) as f64;
        let xv = x_min + f * (x_max - x_min);
        let yv = y_min + f * (y_max - y_min);
        let (px, _) = to_px(xv, y_min);
        let (_, py) = to_px(x_min, yv);
        s.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#333333\" \
             stroke-width=\"1\"/>\n",
            fmt(px),
            fmt(MARGIN_TOP + plot_h),
            fmt(MARGIN_TOP + plot_h + 6.0)
        ));
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"middle\">{}</text>\n",
            fmt(px),
            fmt(MARGIN_TOP + plot_h + 20.0),
            fmt_tick(xv)
        ));
        s.push_str(&format!(
            "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#333333\" \
             stroke-width=\"1\"/>\n",
            fmt(py),
            fmt(MARGIN_LEFT - 6.0),
            fmt(MARGIN_LEFT)
        ));
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"end\">{}</text>\n",
            fmt(MARGIN_LEFT - 9.0),
            fmt(py + 4.0),
            fmt_tick(yv)
        ));
    }
    // Axis labels.
    s.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">{}</text>\n",
        fmt(MARGIN_LEFT + plot_w / 2.0),
        fmt(axes.height - 10.0),
        escape_xml(&axes.x_label)
    ));
    s.push_str(&format!(
        "<text x=\"14\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\" transform=\"rotate(-90 14 {})\">{}</text>\n",
        fmt(MARGIN_TOP + plot_h / 2.0),
        fmt(MARGIN_TOP + plot_h / 2.0),
        escape_xml(&axes.y_label)
    ));
    // Curves.
    for (idx, curve) in curves.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let mut path = String::new();
        for &(x, y) in &curve.points {
            let (px, py) = to_px(x, y);
            if !path.is_empty() {
                path.push(' ');
            }
            path.push_str(&format!("{},{}", fmt(px), fmt(py)));
        }
        s.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{path}\"/>\n"
        ));
    }
    // Legend.
    for (idx, curve) in curves.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let y = MARGIN_TOP + 14.0 + idx as f64 * 16.0;
        let x = MARGIN_LEFT + plot_w - 150.0;
        s.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" \
             stroke-width=\"2\"/>\n",
            fmt(x),
            fmt(y - 4.0),
            fmt(x + 22.0),
            fmt(y - 4.0)
        ));
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            fmt(x + 28.0),
            fmt(y),
            escape_xml(&curve.label)
        ));
    }
    s.push_str("</svg>\n");
    Ok(s)
}
