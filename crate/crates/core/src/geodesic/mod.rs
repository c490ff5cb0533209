//! Geodesics between cone points of the glued surface.
//!
//! The surface is one polygon whose boundary is zipped to itself, so any
//! straight path can be unrolled into a chain of polygon copies in the plane,
//! each copy attached to the previous one along the edge the path crosses.

mod audit;
mod search;

pub use audit::{
    disk_empty, overhang_audit, overhang_beta, tetra_metric, DiskStatus, MetricMeasurement,
    Overhang, OVERHANG_BOUND,
};
pub use search::{
    Development, Enumeration, GeodesicEngine, GeodesicPath, Lookup, SearchConfig,
};

use serde::Serialize;

/// Machine-readable record of a set of paths, with the copies they visit.
#[derive(Clone, Debug, Serialize)]
pub struct GeodesicDump<'a> {
    pub fold: usize,
    pub paths: &'a [GeodesicPath],
}

impl GeodesicDump<'_> {
    pub fn to_json(&self) -> crate::Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
