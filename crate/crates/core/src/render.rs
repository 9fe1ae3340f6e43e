//! SVG output for lattice paths.
//!
//! The document holds a single `<polyline>`. The y axis is flipped so the
//! picture appears upright on screen, and numbers are printed as integers
//! when exact and with three decimals otherwise, which keeps output
//! byte-stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{bounding_box, Path};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CornerStyle {
    #[default]
    Miter,
    Rounded,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit step.
    pub scale: f64,
    pub margin: f64,
    pub stroke_width: f64,
    pub corner_style: CornerStyle,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 10.0,
            margin: 10.0,
            stroke_width: 1.0,
            corner_style: CornerStyle::Miter,
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if !(self.scale.is_finite() && self.scale > 0.0) {
            return Err(Error::RenderOptions("scale must be a positive number"));
        }
        if !(self.margin.is_finite() && self.margin >= 0.0) {
            return Err(Error::RenderOptions("margin must be a nonnegative number"));
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return Err(Error::RenderOptions("stroke width must be a positive number"));
        }
        Ok(())
    }
}

pub(crate) fn fmt_num(v: f64) -> String {
    // Integral values within the exactly representable range print bare.
    if v.fract() == 0.0 && v.abs() < 9.0e15 {
        format!("{}", v as i64)
    } else {
        format!("{v:.3}")
    }
}

/// Renders `p` as a standalone SVG 1.1 document.
pub fn path_to_svg(p: &Path, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    let (lo, hi) = bounding_box(p)?;
    let width = (hi.x - lo.x) as f64 * opts.scale + 2.0 * opts.margin;
    let height = (hi.y - lo.y) as f64 * opts.scale + 2.0 * opts.margin;

    let (join, cap) = match opts.corner_style {
        CornerStyle::Miter => ("miter", "butt"),
        CornerStyle::Rounded => ("round", "round"),
    };

    let mut points = String::with_capacity(p.len() * 12);
    for (i, q) in p.points().iter().enumerate() {
        let x = (q.x - lo.x) as f64 * opts.scale + opts.margin;
        let y = (hi.y - q.y) as f64 * opts.scale + opts.margin;
        if i > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{},{}", fmt_num(x), fmt_num(y));
    }

    let (w, h) = (fmt_num(width), fmt_num(height));
    let mut svg = String::with_capacity(points.len() + 512);
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(
        svg,
        "<polyline points=\"{points}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\" stroke-linejoin=\"{join}\" stroke-linecap=\"{cap}\"/>",
        fmt_num(opts.stroke_width)
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
