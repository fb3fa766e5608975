//! Deterministic SVG plots of polylines with point markers.

use std::fmt::Write;

use crate::error::{CliError, Result};

const COLORS: [&str; 6] = ["#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d35400", "#555555"];

#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    pub closed: bool,
    /// Singular points drawn as circles.
    pub markers: Vec<(f64, f64)>,
}

fn bounds<'a>(pts: impl Iterator<Item = &'a (f64, f64)>) -> (f64, f64, f64, f64) {
    pts.fold(
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY),
        |(x0, y0, x1, y1), &(x, y)| (x0.min(x), y0.min(y), x1.max(x), y1.max(y)),
    )
}

fn f(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// Renders the curves with the y axis pointing up. The view box is the
/// bounding box plus a 5% margin; a box of zero extent becomes a unit box.
/// A curve whose points all coincide is drawn as a filled dot.
pub fn render_svg(curves: &[Polyline]) -> Result<String> {
    if curves.is_empty() || curves.iter().any(|c| c.points.is_empty()) {
        return Err(CliError::Usage("nothing to plot".into()));
    }
    let all = curves.iter().flat_map(|c| c.points.iter().chain(&c.markers));
    let (x0, y0, x1, y1) = bounds(all);
    let (mut w, mut h) = (x1 - x0, y1 - y0);
    let ext = w.max(h);
    let tiny = 1e-12 * (1.0 + x0.abs().max(x1.abs()).max(y0.abs()).max(y1.abs()));
    let ext = if ext <= tiny { 1.0 } else { ext };
    if w <= tiny {
        w = ext;
    }
    if h <= tiny {
        h = ext;
    }
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let (w, h) = (w * 1.1, h * 1.1);
    let stroke = ext * 0.004;
    let radius = ext * 0.012;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
        f(cx - w / 2.0),
        f(-cy - h / 2.0),
        f(w),
        f(h),
        (600.0 * h / w).round() as i64
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)" fill="none" stroke-width="{}">"#, f(stroke));
    for (k, c) in curves.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let (a, b, p, q) = bounds(c.points.iter());
        if (p - a).max(q - b) <= tiny {
            let _ = writeln!(
                out,
                r#"<circle class="point" cx="{}" cy="{}" r="{}" fill="{color}"><title>{}</title></circle>"#,
                f(c.points[0].0),
                f(c.points[0].1),
                f(radius),
                c.label
            );
        } else {
            let mut d = String::new();
            for (i, &(x, y)) in c.points.iter().enumerate() {
                let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, f(x), f(y));
            }
            if c.closed {
                d.push_str(" Z");
            }
            let _ = writeln!(out, r#"<path d="{d}" stroke="{color}"><title>{}</title></path>"#, c.label);
        }
        for &(x, y) in &c.markers {
            let _ = writeln!(
                out,
                r#"<circle class="marker" cx="{}" cy="{}" r="{}" stroke="{color}"/>"#,
                f(x),
                f(y),
                f(radius)
            );
        }
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
