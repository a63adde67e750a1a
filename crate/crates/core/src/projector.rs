//! Axonometric projection of 4-space onto the plane and wireframe output.

use std::fmt::Write as _;
use std::path::Path;

use crate::builder::Polytope;
use crate::error::{Error, Result};
use crate::exactnum::Point4;

const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Row-vector map `(x1, x2, x3, x4) · A = (y1, y2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectionMatrix {
    pub rows: [[f64; 2]; 4],
}

impl ProjectionMatrix {
    /// The fixed matrix: x1 along the lower-left diagonal, x2 and x3 on the
    /// screen axes, x4 along the lower-right diagonal.
    pub const STANDARD: ProjectionMatrix = ProjectionMatrix {
        rows: [[-H, -H], [1.0, 0.0], [0.0, 1.0], [H, -H]],
    };

    pub fn apply(&self, x: &[f64; 4]) -> Point2 {
        let mut y = [0.0; 2];
        for (xi, row) in x.iter().zip(&self.rows) {
            y[0] += xi * row[0];
            y[1] += xi * row[1];
        }
        Point2 { y1: y[0], y2: y[1] }
    }

    /// `AᵀA`, the Gram matrix of the two columns.
    pub fn column_gram(&self) -> [[f64; 2]; 2] {
        let mut g = [[0.0; 2]; 2];
        for row in &self.rows {
            for i in 0..2 {
                for j in 0..2 {
                    g[i][j] += row[i] * row[j];
                }
            }
        }
        g
    }

    pub fn row_norms(&self) -> [f64; 4] {
        self.rows.map(|r| r[0].hypot(r[1]))
    }
}

impl Default for ProjectionMatrix {
    fn default() -> Self {
        ProjectionMatrix::STANDARD
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    pub y1: f64,
    pub y2: f64,
}

pub fn project(p: &Point4) -> Point2 {
    ProjectionMatrix::STANDARD.apply(&p.to_f64())
}

pub fn project_f64(x: &[f64; 4]) -> Point2 {
    ProjectionMatrix::STANDARD.apply(x)
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Wireframe {
    pub points: Vec<Point2>,
    pub segments: Vec<(usize, usize)>,
}

pub fn project_polytope(p: &Polytope, edges: &[(usize, usize)]) -> Wireframe {
    Wireframe {
        points: p.vertices.iter().map(project).collect(),
        segments: edges.to_vec(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    pub width: f64,
    pub height: f64,
    pub stroke: String,
    pub stroke_width: f64,
    /// Draw a dot at every vertex.
    pub vertices: bool,
    /// Print 1-based vertex indices.
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 800.0,
            height: 800.0,
            stroke: "black".into(),
            stroke_width: 0.5,
            vertices: false,
            labels: false,
        }
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// SVG 1.1 drawing fitted to the view box with a 5% margin; y points up.
pub fn emit_svg(w: &Wireframe, opts: &SvgOptions) -> String {
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in &w.points {
        lo = [lo[0].min(p.y1), lo[1].min(p.y2)];
        hi = [hi[0].max(p.y1), hi[1].max(p.y2)];
    }
    let margin = 0.05;
    let inner_w = opts.width * (1.0 - 2.0 * margin);
    let inner_h = opts.height * (1.0 - 2.0 * margin);
    let span = [(hi[0] - lo[0]).max(f64::EPSILON), (hi[1] - lo[1]).max(f64::EPSILON)];
    let scale = (inner_w / span[0]).min(inner_h / span[1]);
    let center = [(lo[0] + hi[0]) / 2.0, (lo[1] + hi[1]) / 2.0];
    let screen = |p: &Point2| -> (f64, f64) {
        (
            opts.width / 2.0 + (p.y1 - center[0]) * scale,
            opts.height / 2.0 - (p.y2 - center[1]) * scale,
        )
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(
        out,
        r#"<g id="edges" stroke="{}" stroke-width="{}" fill="none">"#,
        xml_escape(&opts.stroke),
        opts.stroke_width
    );
    for &(a, b) in &w.segments {
        let (x1, y1) = screen(&w.points[a]);
        let (x2, y2) = screen(&w.points[b]);
        let _ = writeln!(out, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
    }
    out.push_str("</g>\n");
    if opts.vertices && !w.points.is_empty() {
        let _ = writeln!(out, r#"<g id="vertices" fill="{}">"#, xml_escape(&opts.stroke));
        for p in &w.points {
            let (x, y) = screen(p);
            let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}"/>"#, 2.0 * opts.stroke_width);
        }
        out.push_str("</g>\n");
    }
    if opts.labels && !w.points.is_empty() {
        out.push_str("<g id=\"labels\" font-family=\"sans-serif\" font-size=\"8\" fill=\"red\">\n");
        for (i, p) in w.points.iter().enumerate() {
            let (x, y) = screen(p);
            let _ = writeln!(out, r#"<text x="{:.3}" y="{:.3}">{}</text>"#, x + 2.0, y - 2.0, i + 1);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// `index,y1,y2` with 1-based indices and 10 decimals.
pub fn emit_csv(w: &Wireframe) -> String {
    let mut out = String::from("index,y1,y2\n");
    for (i, p) in w.points.iter().enumerate() {
        let _ = writeln!(out, "{},{:.10},{:.10}", i + 1, p.y1 + 0.0, p.y2 + 0.0);
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_images() {
        let y = project(&Point4::from_integers([1, 0, 0, 0]));
        assert_eq!((y.y1, y.y2), (-H, -H));
        let y = project(&Point4::zero());
        assert_eq!((y.y1, y.y2), (0.0, 0.0));
        let y = project(&Point4::from_integers([1, 1, 1, 1]));
        assert!((y.y1 - 1.0).abs() < 1e-15);
        assert!((y.y2 - (1.0 - 2f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn matrix_shape() {
        let a = ProjectionMatrix::STANDARD;
        for n in a.row_norms() {
            assert!((n - 1.0).abs() < 1e-15);
        }
        let g = a.column_gram();
        assert!((g[0][0] - 2.0).abs() < 1e-15);
        assert!((g[1][1] - 2.0).abs() < 1e-15);
        assert!(g[0][1].abs() < 1e-15);
    }

    #[test]
    fn empty_wireframe_svg() {
        let svg = emit_svg(&Wireframe::default(), &SvgOptions::default());
        assert!(svg.contains("<g id=\"edges\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<line").count(), 0);
    }

    #[test]
    fn csv_has_no_negative_zero() {
        let w = Wireframe {
            points: vec![Point2 { y1: -0.0, y2: 0.0 }],
            segments: vec![],
        };
        assert_eq!(emit_csv(&w), "index,y1,y2\n1,0.0000000000,0.0000000000\n");
    }

    #[test]
    fn labels_and_vertices_are_optional() {
        let w = Wireframe {
            points: vec![Point2 { y1: 0.0, y2: 0.0 }, Point2 { y1: 1.0, y2: 1.0 }],
            segments: vec![(0, 1)],
        };
        let plain = emit_svg(&w, &SvgOptions::default());
        assert!(!plain.contains("<text"));
        let opts = SvgOptions {
            labels: true,
            vertices: true,
            stroke: "a<b".into(),
            ..SvgOptions::default()
        };
        let rich = emit_svg(&w, &opts);
        assert_eq!(rich.matches("<text").count(), 2);
        assert_eq!(rich.matches("<circle").count(), 2);
        assert!(rich.contains("a&lt;b"));
    }
}
