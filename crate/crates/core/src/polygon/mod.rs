//! Equilateral convex polygons: construction, hypothesis checks and sampling.

mod closure;
mod independence;
mod io;
mod sampler;

use std::f64::consts::PI;

use serde::Serialize;

use crate::geom::{cross, signed_area2, Vec2};
use crate::{Error, Result, Tolerances};

pub use closure::{closure_candidates, edge_directions, solve_closure};
pub use independence::{
    check_independence, find_relation, IndependenceReport, PairStatus, PairVerdict, Rational,
    Relation, DEFAULT_INDEPENDENCE_BOUND,
};
pub use io::{parse_polygon_json, polygon_to_json, PolygonFile};
pub use sampler::{sample_fat_hexagon, sample_polygon, Sample, SamplerConfig};

/// A closed planar polygon intended to have unit edges.
///
/// Construction only enforces structure (even `n >= 6`, finite, no repeated
/// vertices). Metric properties are reported by [`validate`] so that
/// non-compliant inputs can still be inspected.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquilateralPolygon {
    vertices: Vec<Vec2>,
}

impl EquilateralPolygon {
    pub fn new(vertices: Vec<Vec2>) -> Result<Self> {
        check_structure(&vertices)?;
        Ok(Self { vertices })
    }

    pub fn from_points(points: &[[f64; 2]]) -> Result<Self> {
        Self::new(points.iter().map(|p| Vec2::new(p[0], p[1])).collect())
    }

    /// The regular unit-edge `n`-gon, counterclockwise, with `v0` at the origin
    /// and `v0 v1` along +x.
    pub fn regular(n: usize) -> Result<Self> {
        let turn = 2.0 * PI / n as f64;
        let mut v = Vec::with_capacity(n);
        let mut p = Vec2::zeros();
        for k in 0..n {
            v.push(p);
            let a = turn * k as f64;
            p += Vec2::new(a.cos(), a.sin());
        }
        Self::new(v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Vertex `i mod n`.
    pub fn vertex(&self, i: usize) -> Vec2 {
        self.vertices[i % self.len()]
    }

    /// Endpoints of edge `i`, which runs from `v_i` to `v_{i+1}`.
    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        (self.vertex(i), self.vertex(i + 1))
    }

    /// +1 for counterclockwise vertex order, -1 for clockwise.
    pub fn orientation(&self) -> f64 {
        if signed_area2(&self.vertices) >= 0.0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn centroid(&self) -> Vec2 {
        self.vertices.iter().sum::<Vec2>() / self.len() as f64
    }

    pub fn area(&self) -> f64 {
        signed_area2(&self.vertices).abs() / 2.0
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                (b - a).norm()
            })
            .sum()
    }

    pub fn to_points(&self) -> Vec<[f64; 2]> {
        self.vertices.iter().map(|p| [p.x, p.y]).collect()
    }
}

fn check_structure(vertices: &[Vec2]) -> Result<()> {
    let n = vertices.len();
    if n < 6 {
        return Err(Error::MalformedPolygon(format!("{n} vertices, need at least 6")));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::MalformedPolygon(format!("{n} vertices, need an even count")));
    }
    if let Some(i) = vertices.iter().position(|p| !p.x.is_finite() || !p.y.is_finite()) {
        return Err(Error::MalformedPolygon(format!("vertex {i} is not finite")));
    }
    for i in 0..n {
        for j in i + 1..n {
            if (vertices[i] - vertices[j]).norm() < 1e-9 {
                return Err(Error::MalformedPolygon(format!(
                    "vertices {i} and {j} coincide"
                )));
            }
        }
    }
    Ok(())
}

/// Interior angles of a polygon, in vertex order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AngleProfile {
    pub angles: Vec<f64>,
    /// `Σα - (n-2)π`.
    pub sum_residual: f64,
}

impl std::ops::Deref for AngleProfile {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.angles
    }
}

/// Interior angles of an arbitrary closed vertex loop.
///
/// Uses the loop's own orientation, so reflex vertices come out above π.
pub fn interior_angles_of(points: &[Vec2]) -> AngleProfile {
    let n = points.len();
    let sigma = if signed_area2(points) >= 0.0 { 1.0 } else { -1.0 };
    let angles: Vec<f64> = (0..n)
        .map(|i| {
            let prev = points[(i + n - 1) % n];
            let cur = points[i];
            let next = points[(i + 1) % n];
            let din = cur - prev;
            let dout = next - cur;
            let turn = cross(&din, &dout).atan2(din.dot(&dout));
            PI - sigma * turn
        })
        .collect();
    let sum_residual = angles.iter().sum::<f64>() - (n as f64 - 2.0) * PI;
    AngleProfile {
        angles,
        sum_residual,
    }
}

pub fn interior_angles(poly: &EquilateralPolygon) -> AngleProfile {
    interior_angles_of(poly.vertices())
}

/// Opposite diagonals `|v_i v_{i+n/2}|` for `i < n/2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Diagonals {
    pub lengths: Vec<f64>,
    /// Indices `i` whose diagonal falls below `1 - tol`.
    pub violations: Vec<usize>,
}

impl Diagonals {
    pub fn min(&self) -> f64 {
        self.lengths.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn diagonal_lengths(poly: &EquilateralPolygon, tol: &Tolerances) -> Diagonals {
    let half = poly.len() / 2;
    let lengths: Vec<f64> = (0..half)
        .map(|i| (poly.vertex(i + half) - poly.vertex(i)).norm())
        .collect();
    let violations = lengths
        .iter()
        .enumerate()
        .filter(|(_, d)| **d < 1.0 - tol.len)
        .map(|(i, _)| i)
        .collect();
    Diagonals {
        lengths,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub equilateral: bool,
    pub max_edge_error: f64,
    /// Convex, allowing straight (angle π) vertices.
    pub convex: bool,
    pub strictly_convex: bool,
    /// Vertices whose turn is within tolerance of zero.
    pub weakly_convex_vertices: Vec<usize>,
    /// Every angle in `(π/3 + tol, π - tol)`.
    pub fat: bool,
    pub thin_vertices: Vec<usize>,
    pub angles: Vec<f64>,
    pub angle_sum_residual: f64,
    pub diagonals: Vec<f64>,
    pub diagonal_bound: bool,
}

impl ValidationReport {
    /// All geometric hypotheses of the three-tetrahedra construction.
    pub fn geometry_ok(&self) -> bool {
        self.equilateral && self.strictly_convex && self.fat && self.diagonal_bound
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.equilateral {
            out.push("equilateral");
        }
        if !self.convex {
            out.push("convex");
        } else if !self.strictly_convex {
            out.push("strictly convex");
        }
        if !self.fat {
            out.push("fat");
        }
        if !self.diagonal_bound {
            out.push("diagonal bound");
        }
        out
    }
}

/// Structural checks followed by [`validate`].
pub fn validate_vertices(vertices: &[Vec2], tol: &Tolerances) -> Result<ValidationReport> {
    let poly = EquilateralPolygon::new(vertices.to_vec())?;
    Ok(validate(&poly, tol))
}

pub fn validate(poly: &EquilateralPolygon, tol: &Tolerances) -> ValidationReport {
    let n = poly.len();
    let max_edge_error = (0..n)
        .map(|i| {
            let (a, b) = poly.edge(i);
            ((b - a).norm() - 1.0).abs()
        })
        .fold(0.0, f64::max);
    let equilateral = max_edge_error <= tol.len;

    let sigma = poly.orientation();
    let mut weakly_convex_vertices = Vec::new();
    let mut reflex = false;
    for i in 0..n {
        let din = poly.vertex(i) - poly.vertex(i + n - 1);
        let dout = poly.vertex(i + 1) - poly.vertex(i);
        let c = sigma * cross(&din, &dout);
        if c.abs() <= tol.convex {
            weakly_convex_vertices.push(i);
        } else if c < 0.0 {
            reflex = true;
        }
    }
    let profile = interior_angles(poly);
    // Consistent turning plus a total of 2π rules out self-overlapping loops.
    let winds_once = profile.sum_residual.abs() <= n as f64 * tol.ang.max(1e-12) * 10.0;
    let convex = !reflex && winds_once;
    let strictly_convex = convex && weakly_convex_vertices.is_empty();

    let lo = PI / 3.0 + tol.ang;
    let hi = PI - tol.ang;
    let thin_vertices: Vec<usize> = profile
        .angles
        .iter()
        .enumerate()
        .filter(|(_, a)| !(**a > lo && **a < hi))
        .map(|(i, _)| i)
        .collect();
    let diagonals = diagonal_lengths(poly, tol);

    ValidationReport {
        n,
        equilateral,
        max_edge_error,
        convex,
        strictly_convex,
        weakly_convex_vertices,
        fat: thin_vertices.is_empty(),
        thin_vertices,
        angle_sum_residual: profile.sum_residual,
        angles: profile.angles,
        diagonal_bound: diagonals.violations.is_empty(),
        diagonals: diagonals.lengths,
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// 1×2 rectangle with the midpoints of its long sides as extra vertices.
    pub fn degenerate_rectangle() -> EquilateralPolygon {
        EquilateralPolygon::from_points(&[
            [0.0, 0.0],
            [1.0, 0.0],
            [2.0, 0.0],
            [2.0, 1.0],
            [1.0, 1.0],
            [0.0, 1.0],
        ])
        .unwrap()
    }
}
