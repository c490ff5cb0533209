//! Deterministic SVG 1.1 drawings of polygons, nets and developments.

use std::fmt::Write as _;

use crate::embed::LABELS;
use crate::geodesic::GeodesicPath;
use crate::geom::{Isometry2, Vec2};
use crate::gluing::HalvingGluing;
use crate::net::{Alignment, PlanarNet};
use crate::polygon::EquilateralPolygon;
use crate::{Error, Result};

const MARGIN: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stroke {
    Boundary,
    Crease,
    Zipper,
    Copy,
    Path,
}

impl Stroke {
    fn attrs(self) -> &'static str {
        match self {
            Stroke::Boundary => r##"fill="none" stroke="#000000" stroke-width="0.02""##,
            Stroke::Crease => r##"stroke="#555555" stroke-width="0.015" stroke-dasharray="0.06,0.04""##,
            Stroke::Zipper => r##"stroke="#d62728" stroke-width="0.04""##,
            Stroke::Copy => r##"fill="none" stroke="#9e9e9e" stroke-width="0.01""##,
            Stroke::Path => r##"stroke="#1f77b4" stroke-width="0.02""##,
        }
    }
}

/// Shapes in math coordinates (y up); rendering flips y.
#[derive(Clone, Debug, Default)]
pub struct Scene {
    polygons: Vec<(Vec<Vec2>, Stroke)>,
    lines: Vec<(Vec2, Vec2, Stroke)>,
    labels: Vec<(Vec2, String)>,
}

impl Scene {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn polygon(&mut self, pts: Vec<Vec2>, stroke: Stroke) -> &mut Self {
        self.polygons.push((pts, stroke));
        self
    }

    pub fn line(&mut self, a: Vec2, b: Vec2, stroke: Stroke) -> &mut Self {
        self.lines.push((a, b, stroke));
        self
    }

    pub fn label(&mut self, at: Vec2, text: impl Into<String>) -> &mut Self {
        self.labels.push((at, text.into()));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty() && self.lines.is_empty()
    }

    pub fn render(&self) -> Result<String> {
        if self.is_empty() {
            return Err(Error::EmptyScene);
        }
        let pts = self
            .polygons
            .iter()
            .flat_map(|(p, _)| p.iter().copied())
            .chain(self.lines.iter().flat_map(|(a, b, _)| [*a, *b]))
            .chain(self.labels.iter().map(|(p, _)| *p));
        let (mut lo, mut hi) = (Vec2::repeat(f64::INFINITY), Vec2::repeat(f64::NEG_INFINITY));
        for p in pts {
            let q = Vec2::new(p.x, -p.y);
            lo = lo.inf(&q);
            hi = hi.sup(&q);
        }
        lo -= Vec2::repeat(MARGIN);
        hi += Vec2::repeat(MARGIN);
        let size = hi - lo;

        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
            num(lo.x),
            num(lo.y),
            num(size.x),
            num(size.y)
        );
        for (poly, stroke) in &self.polygons {
            let coords: Vec<String> = poly
                .iter()
                .map(|p| format!("{},{}", num(p.x), num(-p.y)))
                .collect();
            let _ = writeln!(s, r#"  <polygon points="{}" {}/>"#, coords.join(" "), stroke.attrs());
        }
        for (a, b, stroke) in &self.lines {
            let _ = writeln!(
                s,
                r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" {}/>"#,
                num(a.x),
                num(-a.y),
                num(b.x),
                num(-b.y),
                stroke.attrs()
            );
        }
        for (p, text) in &self.labels {
            let _ = writeln!(
                s,
                r#"  <text x="{}" y="{}" font-size="0.12" font-family="sans-serif">{}</text>"#,
                num(p.x),
                num(-p.y),
                text
            );
        }
        s.push_str("</svg>\n");
        Ok(s)
    }
}

fn num(x: f64) -> String {
    // Avoid "-0.000000000".
    let x = if x.abs() < 5e-10 { 0.0 } else { x };
    format!("{x:.9}")
}

fn label_offset(p: &Vec2, centroid: &Vec2) -> Vec2 {
    let d = p - centroid;
    let n = d.norm();
    if n > 0.0 {
        p + d / n * 0.08
    } else {
        *p
    }
}

/// The polygon with vertex labels `v0..`.
pub fn polygon_svg(poly: &EquilateralPolygon) -> Result<String> {
    let mut scene = Scene::new();
    scene.polygon(poly.vertices().to_vec(), Stroke::Boundary);
    let c = poly.centroid();
    for (i, p) in poly.vertices().iter().enumerate() {
        scene.label(label_offset(p, &c), format!("v{i}"));
    }
    scene.render()
}

/// The net with dashed creases and tetrahedron labels.
pub fn net_svg(net: &PlanarNet) -> Result<String> {
    let mut scene = Scene::new();
    scene.polygon(net.boundary.clone(), Stroke::Boundary);
    for [i, j] in &net.creases {
        scene.line(net.boundary[*i], net.boundary[*j], Stroke::Crease);
    }
    let c = net.boundary.iter().sum::<Vec2>() / net.boundary.len() as f64;
    for (p, l) in net.boundary.iter().zip(&net.labels) {
        scene.label(label_offset(p, &c), LABELS[*l].to_string());
    }
    scene.render()
}

/// The source polygon with the zipper highlighted and the net's creases
/// drawn where the alignment puts them.
pub fn overlay_svg(gluing: &HalvingGluing, net: &PlanarNet, alignment: &Alignment) -> Result<String> {
    let poly = gluing.polygon();
    let mut scene = Scene::new();
    scene.polygon(poly.vertices().to_vec(), Stroke::Boundary);
    for e in gluing.zipper_edges() {
        let (a, b) = poly.edge(e);
        scene.line(a, b, Stroke::Zipper);
    }
    let m = &alignment.transform;
    for [i, j] in &net.creases {
        scene.line(m.apply(&net.boundary[*i]), m.apply(&net.boundary[*j]), Stroke::Crease);
    }
    let c = poly.centroid();
    for (i, p) in poly.vertices().iter().enumerate() {
        scene.label(label_offset(p, &c), format!("v{i}"));
    }
    scene.render()
}

/// Developed copies visited by each path and the straight segments.
pub fn geodesic_svg(gluing: &HalvingGluing, paths: &[GeodesicPath]) -> Result<String> {
    let poly = gluing.polygon();
    let mut scene = Scene::new();
    let mut drawn: Vec<Isometry2> = Vec::new();
    for path in paths {
        for copy in &path.copies {
            if drawn.iter().any(|d| d.max_abs_diff(copy) < 1e-9) {
                continue;
            }
            drawn.push(*copy);
            let pts = poly.vertices().iter().map(|p| copy.apply(p)).collect();
            let stroke = if drawn.len() == 1 { Stroke::Boundary } else { Stroke::Copy };
            scene.polygon(pts, stroke);
        }
        scene.line(poly.vertex(path.source_vertex), path.target_image, Stroke::Path);
    }
    let c = poly.centroid();
    for (i, p) in poly.vertices().iter().enumerate() {
        scene.label(label_offset(p, &c), format!("v{i}"));
    }
    scene.render()
}
