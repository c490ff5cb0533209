use serde::Serialize;

use super::search::{GeodesicEngine, GeodesicPath, Lookup};
use crate::embed::{TetraMetric, PAIRS};
use crate::geom::point_segment_distance;
use crate::gluing::HalvingGluing;
use crate::{Error, Result};

/// Largest possible excursion of a unit disk past an edge of a fat polygon.
pub const OVERHANG_BOUND: f64 = 1.0 - 0.866_025_403_784_438_6;

/// Entry angle of a chord of a unit circle cut off at depth `h`.
pub fn overhang_beta(h: f64) -> f64 {
    2.0 * (h / 2.0).asin()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DiskStatus {
    Empty,
    Occupied { cone_point: usize, distance: f64 },
    Inconclusive { developments: usize },
}

/// Is the open geodesic disk of radius `r` around cone point `c` free of
/// other cone points?
pub fn disk_empty(engine: &GeodesicEngine<'_>, c: usize, r: f64, tol: f64) -> Result<DiskStatus> {
    if !(r > 0.0) {
        return Err(Error::MalformedInput("disk radius must be positive".into()));
    }
    let budget = r - tol;
    if budget <= 0.0 {
        return Ok(DiskStatus::Empty);
    }
    Ok(match engine.nearest_other(c, budget)? {
        Lookup::Found(p) if p.length < budget => DiskStatus::Occupied {
            cone_point: p.target,
            distance: p.length,
        },
        Lookup::Inconclusive { developments } => DiskStatus::Inconclusive { developments },
        _ => DiskStatus::Empty,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Overhang {
    pub cone_point: usize,
    pub radius: f64,
    /// Deepest excursion of the disk past any non-incident edge.
    pub width: f64,
    pub vertex: usize,
    pub edge: usize,
    pub beta: f64,
}

/// How far the disk of radius `r` around cone point `c` spills over the
/// polygon edges it does not touch, measured in the base copy.
pub fn overhang_audit(gluing: &HalvingGluing, c: usize, r: f64) -> Result<Overhang> {
    if c >= gluing.cone_points().len() {
        return Err(Error::MalformedInput(format!("no cone point {c}")));
    }
    let poly = gluing.polygon();
    let n = poly.len();
    let mut best = Overhang {
        cone_point: c,
        radius: r,
        width: 0.0,
        vertex: gluing.cone_points()[c].vertices[0],
        edge: 0,
        beta: 0.0,
    };
    for &v in &gluing.cone_points()[c].vertices {
        let p = poly.vertex(v);
        for e in (0..n).filter(|&e| e != v && (e + 1) % n != v) {
            let (a, b) = poly.edge(e);
            let width = (r - point_segment_distance(&p, &a, &b)).max(0.0);
            if width > best.width {
                best.width = width;
                best.vertex = v;
                best.edge = e;
            }
        }
    }
    best.beta = overhang_beta(best.width.min(2.0));
    Ok(best)
}

/// The six geodesic distances a tetrahedron edge would have, with paths.
#[derive(Clone, Debug, Serialize)]
pub struct MetricMeasurement {
    pub metric: TetraMetric,
    /// In metric pair order.
    pub paths: Vec<GeodesicPath>,
    pub budgets: [f64; 6],
}

/// Budget slack over the straight chord for each distance query.
const CHORD_SLACK: f64 = 1e-6;

/// Measures the four-cone-point metric of a hexagon gluing.
///
/// Cone points are labeled a, b (fold vertices), c (their neighbours), d.
/// Every query is bounded by the shortest chord between representatives,
/// which is itself a geodesic, plus a small slack.
pub fn tetra_metric(engine: &GeodesicEngine<'_>) -> Result<MetricMeasurement> {
    let g = engine.gluing();
    if g.cone_points().len() != 4 {
        return Err(Error::MalformedInput(format!(
            "a tetrahedron needs 4 cone points, the gluing has {}",
            g.cone_points().len()
        )));
    }
    let poly = g.polygon();
    let chord = |x: usize, y: usize| {
        let mut best = f64::INFINITY;
        for &u in &g.cone_points()[x].vertices {
            for &w in &g.cone_points()[y].vertices {
                best = best.min((poly.vertex(u) - poly.vertex(w)).norm());
            }
        }
        best
    };
    let mut d = [0.0; 6];
    let mut budgets = [0.0; 6];
    let mut paths = Vec::with_capacity(6);
    for (k, &(x, y)) in PAIRS.iter().enumerate() {
        let budget = chord(x, y) + CHORD_SLACK;
        budgets[k] = budget;
        match engine.shortest_geodesic(x, y, budget)? {
            Lookup::Found(p) => {
                d[k] = p.length;
                paths.push(p);
            }
            Lookup::NotFound { budget } => {
                return Err(Error::GeodesicNotFound {
                    source_point: x,
                    target: y,
                    budget,
                })
            }
            Lookup::Inconclusive { developments } => {
                return Err(Error::SearchInconclusive { developments })
            }
        }
    }
    Ok(MetricMeasurement {
        metric: TetraMetric::new(d)?,
        paths,
        budgets,
    })
}
