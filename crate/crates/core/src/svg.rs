//! Standalone SVG figures of lattice hexagons.
//!
//! Counting stays in integer lattice code; floating point appears only here,
//! at render time. A lattice point (u, v, w) is embedded with the basis
//! (1, 0) and (1/2, sqrt(3)/2) as `x = u + v/2`, `y = -v * sqrt(3)/2`
//! (y negated for screen coordinates), then scaled by the cell size.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{Hexagon, LatticePoint};

/// Largest side count accepted by the renderer.
pub const MAX_RENDER_SIDE: u64 = 100;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Rendering options.
#[derive(Debug, Clone)]
pub struct SvgStyle {
    /// Lattice spacing in pixels.
    pub cell: f64,
    /// Radius of the region point markers.
    pub point_radius: f64,
    /// Blank border around the figure.
    pub margin: f64,
    /// Draw the background triangular grid.
    pub draw_grid: bool,
    pub region_fill: String,
    pub region_stroke: String,
    pub point_fill: String,
    pub grid_stroke: String,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            cell: 40.0,
            point_radius: 5.0,
            margin: 40.0,
            draw_grid: true,
            region_fill: "#dcefdc".to_string(),
            region_stroke: "#5d8a5d".to_string(),
            point_fill: "#c62828".to_string(),
            grid_stroke: "#c4c4c4".to_string(),
        }
    }
}

/// A rendered standalone SVG document.
#[derive(Debug, Clone)]
pub struct SvgDocument {
    text: String,
    width: f64,
    height: f64,
    point_markers: usize,
}

impl SvgDocument {
    /// The complete SVG text.
    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    /// Number of region point markers in the figure; equals the hexagon's
    /// discrete volume.
    pub fn point_markers(&self) -> usize {
        self.point_markers
    }
}

/// Renders the hexagon region with grid lines and one filled circle per
/// lattice point of the region.
pub fn render_svg(hexagon: &Hexagon, style: &SvgStyle) -> Result<SvgDocument> {
    let max_side = hexagon.sides().into_iter().max().unwrap_or(1);
    if max_side > MAX_RENDER_SIDE {
        return Err(Error::TooLarge {
            value: max_side,
            max: MAX_RENDER_SIDE,
        });
    }

    let vertices = hexagon.vertices()?;
    let region_points = hexagon.points()?;

    // Figure extent from the boundary vertices, padded by one lattice step
    // so the surrounding grid is visible.
    let pad = 1i64;
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut u_lo = i64::MAX;
    let mut u_hi = i64::MIN;
    let mut v_lo = i64::MAX;
    let mut v_hi = i64::MIN;
    for p in vertices {
        u_lo = u_lo.min(p.u);
        u_hi = u_hi.max(p.u);
        v_lo = v_lo.min(p.v);
        v_hi = v_hi.max(p.v);
    }
    u_lo -= pad;
    u_hi += pad;
    v_lo -= pad;
    v_hi += pad;
    for u in [u_lo, u_hi] {
        for v in [v_lo, v_hi] {
            let (x, y) = embed(style.cell, u, v);
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
    }

    let width = max_x - min_x + 2.0 * style.margin;
    let height = max_y - min_y + 2.0 * style.margin;
    let ox = style.margin - min_x;
    let oy = style.margin - min_y;
    let place = |u: i64, v: i64| -> (f64, f64) {
        let (x, y) = embed(style.cell, u, v);
        (x + ox, y + oy)
    };

    let mut text = String::new();
    writeln!(text, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        text,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    )
    .unwrap();
    writeln!(text, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    if style.draw_grid {
        writeln!(
            text,
            r#"<g stroke="{}" stroke-width="1">"#,
            style.grid_stroke
        )
        .unwrap();
        // Segments to three of the six neighbors cover each grid edge once.
        for u in u_lo..=u_hi {
            for v in v_lo..=v_hi {
                for (du, dv) in [(1i64, 0i64), (0, 1), (1, -1)] {
                    let (nu, nv) = (u + du, v + dv);
                    if nu < u_lo || nu > u_hi || nv < v_lo || nv > v_hi {
                        continue;
                    }
                    let (x1, y1) = place(u, v);
                    let (x2, y2) = place(nu, nv);
                    writeln!(
                        text,
                        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
                    )
                    .unwrap();
                }
            }
        }
        writeln!(text, "</g>").unwrap();
    }

    // Region polygon through the walk vertices.
    let mut polygon = String::new();
    for p in vertices {
        let (x, y) = place(p.u, p.v);
        write!(polygon, "{x:.2},{y:.2} ").unwrap();
    }
    writeln!(
        text,
        r#"<polygon points="{}" fill="{}" stroke="{}" stroke-width="1.5"/>"#,
        polygon.trim_end(),
        style.region_fill,
        style.region_stroke
    )
    .unwrap();

    if style.draw_grid {
        // Faint dots on surrounding lattice points outside the region.
        writeln!(text, r##"<g fill="#9e9e9e">"##).unwrap();
        for u in u_lo..=u_hi {
            for v in v_lo..=v_hi {
                if hexagon.contains(LatticePoint::new(u, v)) {
                    continue;
                }
                let (x, y) = place(u, v);
                writeln!(
                    text,
                    r#"<circle cx="{x:.2}" cy="{y:.2}" r="{:.2}"/>"#,
                    style.point_radius * 0.45
                )
                .unwrap();
            }
        }
        writeln!(text, "</g>").unwrap();
    }

    // One marker per lattice point of the region.
    writeln!(text, r#"<g fill="{}">"#, style.point_fill).unwrap();
    for p in &region_points {
        let (x, y) = place(p.u, p.v);
        writeln!(
            text,
            r#"<circle class="pt" cx="{x:.2}" cy="{y:.2}" r="{:.2}"/>"#,
            style.point_radius
        )
        .unwrap();
    }
    writeln!(text, "</g>").unwrap();
    writeln!(text, "</svg>").unwrap();

    Ok(SvgDocument {
        text,
        width,
        height,
        point_markers: region_points.len(),
    })
}

fn embed(cell: f64, u: i64, v: i64) -> (f64, f64) {
    let x = cell * (u as f64 + v as f64 / 2.0);
    let y = -cell * (v as f64 * SQRT_3 / 2.0);
    (x, y)
}
