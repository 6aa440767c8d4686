//! Static SVG sheet of small lattice polygons drawn on a unit grid.

use std::fmt::Write;

use crate::lattice::Dimension;
use crate::SmallPolygon;

const UNIT: i64 = 24;
const PAD: i64 = 16;
const TITLE: i64 = 18;
const COLUMNS: usize = 5;

/// One drawing: a caption and the polygon to draw.
#[derive(Clone, Debug)]
pub struct Panel {
    pub title: String,
    pub polygon: SmallPolygon,
}

fn extent(p: &SmallPolygon) -> (i64, i64, i64, i64) {
    let vs = p.vertices();
    let xs = vs.iter().map(|v| v.x);
    let ys = vs.iter().map(|v| v.y);
    (
        xs.clone().min().unwrap_or(0),
        xs.max().unwrap_or(0),
        ys.clone().min().unwrap_or(0),
        ys.max().unwrap_or(0),
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Lays panels out on a fixed grid; every cell is sized for the largest
/// polygon so all drawings share one scale.
pub fn render_sheet(panels: &[Panel]) -> String {
    let span = panels
        .iter()
        .map(|p| {
            let (x0, x1, y0, y1) = extent(&p.polygon);
            (x1 - x0).max(y1 - y0)
        })
        .max()
        .unwrap_or(0)
        + 2;
    let cell = span * UNIT + 2 * PAD;
    let cols = panels.len().clamp(1, COLUMNS);
    let rows = panels.len().div_ceil(COLUMNS).max(1);
    let width = cols as i64 * cell;
    let height = rows as i64 * (cell + TITLE);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    for (k, panel) in panels.iter().enumerate() {
        let ox = (k % COLUMNS) as i64 * cell;
        let oy = (k / COLUMNS) as i64 * (cell + TITLE);
        let (x0, _, y0, _) = extent(&panel.polygon);
        // lattice (x, y) -> screen, y pointing up, polygon offset by one unit
        let sx = |x: i64| ox + PAD + (x - x0 + 1) * UNIT;
        let sy = |y: i64| oy + TITLE + PAD + (span - (y - y0 + 1)) * UNIT;

        writeln!(out, r#"<g class="panel" id="panel-{k}">"#).unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}">{}</text>"#,
            ox + PAD,
            oy + TITLE,
            escape(&panel.title)
        )
        .unwrap();
        for gx in 0..=span {
            for gy in 0..=span {
                writeln!(
                    out,
                    r##"<circle cx="{}" cy="{}" r="1.5" fill="#bbb"/>"##,
                    sx(x0 - 1 + gx),
                    sy(y0 - 1 + gy)
                )
                .unwrap();
            }
        }
        let pts: Vec<String> = panel
            .polygon
            .vertices()
            .iter()
            .map(|v| format!("{},{}", sx(v.x), sy(v.y)))
            .collect();
        match panel.polygon.dimension() {
            Dimension::Full => writeln!(
                out,
                r##"<polygon points="{}" fill="#cde" stroke="#235" stroke-width="2"/>"##,
                pts.join(" ")
            ),
            Dimension::Segment => writeln!(
                out,
                r##"<polyline points="{}" fill="none" stroke="#235" stroke-width="2"/>"##,
                pts.join(" ")
            ),
            _ => Ok(()),
        }
        .unwrap();
        for p in panel.polygon.lattice_points() {
            writeln!(
                out,
                r##"<circle cx="{}" cy="{}" r="3.5" fill="#235"/>"##,
                sx(p.x),
                sy(p.y)
            )
            .unwrap();
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::simplex;

    #[test]
    fn one_group_per_panel() {
        let panels: Vec<_> = (1..8)
            .map(|d| Panel {
                title: format!("{d}Σ <"),
                polygon: simplex(d),
            })
            .collect();
        let svg = render_sheet(&panels);
        assert_eq!(svg.matches(r#"<g class="panel""#).count(), 7);
        assert!(svg.contains("&lt;"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(render_sheet(&panels), svg);
    }
}
