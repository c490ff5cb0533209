use serde::{Deserialize, Serialize};

/// Numerical tolerances shared by every stage.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Edge-length predicates.
    pub len: f64,
    /// Angle predicates (fatness margins, angle sums).
    pub ang: f64,
    /// Minimum turn cross product for a vertex to count as strictly convex.
    pub convex: f64,
    /// Curvature multiset comparisons and the Gauss-Bonnet residual.
    pub curvature: f64,
    /// Minimum distance between a geodesic interior and any cone point image.
    pub clearance: f64,
    /// Squared-volume threshold below which a tetrahedron is flat.
    pub volume2: f64,
    /// End-to-end congruence (tetrahedra and net round trips).
    pub congruence: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            len: 1e-9,
            ang: 1e-9,
            convex: 1e-9,
            curvature: 1e-8,
            clearance: 1e-9,
            volume2: 1e-12,
            congruence: 1e-6,
        }
    }
}

impl Tolerances {
    /// Sets every predicate tolerance (length, angle, convexity) at once.
    pub fn with_predicate(mut self, tol: f64) -> Self {
        self.len = tol;
        self.ang = tol;
        self.convex = tol;
        self
    }

    pub fn is_valid(&self) -> bool {
        [
            self.len,
            self.ang,
            self.convex,
            self.curvature,
            self.clearance,
            self.volume2,
            self.congruence,
        ]
        .iter()
        .all(|t| t.is_finite() && *t > 0.0)
    }
}
