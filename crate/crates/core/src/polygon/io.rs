//! Polygon files: JSON holding either explicit vertices or closure turns.
//!
//! ```json
//! {"vertices": [[0, 0], [1, 0], ...]}
//! {"turns": [0.0, 1.0472, 2.0944, 3.1416]}
//! ```

use serde::{Deserialize, Serialize};

use crate::polygon::{solve_closure, EquilateralPolygon};
use crate::{Error, Result, Tolerances};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawPolygonFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    turns: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PolygonFile {
    Vertices(Vec<[f64; 2]>),
    /// Edge directions for the two-link closure solver.
    Turns(Vec<f64>),
}

pub fn parse_polygon_json(text: &str) -> Result<PolygonFile> {
    let raw: RawPolygonFile = serde_json::from_str(text)?;
    match (raw.vertices, raw.turns) {
        (Some(v), None) => Ok(PolygonFile::Vertices(v)),
        (None, Some(t)) => Ok(PolygonFile::Turns(t)),
        (Some(_), Some(_)) => Err(Error::MalformedInput(
            "polygon file has both \"vertices\" and \"turns\"".into(),
        )),
        (None, None) => Err(Error::MalformedInput(
            "polygon file needs \"vertices\" or \"turns\"".into(),
        )),
    }
}

impl PolygonFile {
    pub fn into_polygon(self, tol: &Tolerances) -> Result<EquilateralPolygon> {
        match self {
            PolygonFile::Vertices(v) => EquilateralPolygon::from_points(&v),
            PolygonFile::Turns(t) => solve_closure(&t, tol),
        }
    }

    pub fn to_json(&self) -> String {
        let raw = match self {
            PolygonFile::Vertices(v) => RawPolygonFile {
                vertices: Some(v.clone()),
                turns: None,
            },
            PolygonFile::Turns(t) => RawPolygonFile {
                vertices: None,
                turns: Some(t.clone()),
            },
        };
        serde_json::to_string_pretty(&raw).expect("polygon file serializes")
    }
}

pub fn polygon_to_json(poly: &EquilateralPolygon) -> String {
    PolygonFile::Vertices(poly.to_points()).to_json()
}
