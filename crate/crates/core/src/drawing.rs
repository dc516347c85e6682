//! SVG dominance drawings of downset lattices.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::poset::{ElementId, Poset};
use crate::revlex::{dominance_coordinates, LatticeExtension};

/// Pixels per rank unit unless overridden.
pub const DEFAULT_SCALE: u32 = 24;

/// Draws the downset lattice of `p` with each downset at its ranks in `l1`
/// (x) and `l2` (y), and one segment per cover relation.
///
/// Point coordinates are the ranks themselves; a single group transform
/// scales them to pixels and flips the y axis.
pub fn dominance_svg(p: &Poset, l1: &LatticeExtension, l2: &LatticeExtension, scale: u32) -> Result<String> {
    let points = dominance_coordinates(l1, l2)?;
    let m = points.len();
    let scale = scale.max(1);
    let side = (m + 1) as u32 * scale;

    let mut segments = Vec::new();
    for (i, pt) in points.iter().enumerate() {
        let d = pt.downset.set();
        for x in p.elements() {
            if d.contains(x.index()) || !p.below(x).is_subset(d) {
                continue;
            }
            let mut bigger = d.clone();
            bigger.insert(x.index());
            let j = l1.position(&bigger).ok_or(Error::MismatchedGroundSets)?;
            segments.push((i, j, x));
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    );
    let _ = writeln!(svg, r#"<g transform="translate(0 {side}) scale({scale} -{scale})">"#);
    let _ = writeln!(svg, r#"<g class="covers" stroke="black" stroke-width="0.05">"#);
    for (i, j, x) in segments {
        let (a, b) = (&points[i], &points[j]);
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" data-element="{}"/>"#,
            a.x,
            a.y,
            b.x,
            b.y,
            ElementId::one_based(x)
        );
    }
    svg.push_str("</g>\n");
    svg.push_str("<g class=\"downsets\" fill=\"black\">\n");
    for pt in &points {
        let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="0.15" data-downset="{}"/>"#, pt.x, pt.y, pt.downset);
    }
    svg.push_str("</g>\n</g>\n</svg>\n");
    Ok(svg)
}
