//! Perimeter-halving self-gluings of a polygon boundary.
//!
//! Folding at vertex `i` zips the boundary arc `i -> i+1 -> ... -> i+n/2`
//! onto the arc `i -> i-1 -> ... -> i+n/2`. Vertex `m` is identified with
//! vertex `2i - m (mod n)`, so the two fold vertices stay single and every
//! other vertex is paired. The result is a closed flat surface whose cone
//! points are the `n/2 + 1` vertex classes.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::polygon::{interior_angles, EquilateralPolygon};
use crate::{Error, Result, Tolerances};

/// Edge `edge` (from `v_edge` to `v_{edge+1}`) is glued onto `partner`,
/// matching `v_edge` with `v_{partner+1}`. The boundary orientation is always
/// reversed by the identification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeIdentification {
    pub edge: usize,
    pub partner: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConePoint {
    /// One vertex for a fold point, two for a paired point.
    pub vertices: Vec<usize>,
    /// Total incident face angle.
    pub cone_angle: f64,
}

impl ConePoint {
    pub fn curvature(&self) -> f64 {
        2.0 * PI - self.cone_angle
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HalvingGluing {
    polygon: EquilateralPolygon,
    fold: usize,
    identifications: Vec<EdgeIdentification>,
    cone_points: Vec<ConePoint>,
    vertex_cone: Vec<usize>,
}

impl HalvingGluing {
    pub fn polygon(&self) -> &EquilateralPolygon {
        &self.polygon
    }

    pub fn n(&self) -> usize {
        self.polygon.len()
    }

    /// The fold pair `(i, i + n/2)`.
    pub fn fold_pair(&self) -> (usize, usize) {
        (self.fold, self.fold + self.n() / 2)
    }

    pub fn fold(&self) -> usize {
        self.fold
    }

    /// One entry per glued pair, for `k = 0 .. n/2 - 1`.
    pub fn identifications(&self) -> &[EdgeIdentification] {
        &self.identifications
    }

    /// Ordered as `{i}`, `{i + n/2}`, then `{i+k, i-k}` for `k = 1 .. n/2 - 1`.
    pub fn cone_points(&self) -> &[ConePoint] {
        &self.cone_points
    }

    /// Cone point index of polygon vertex `v`.
    pub fn cone_of(&self, v: usize) -> usize {
        self.vertex_cone[v % self.n()]
    }

    /// The edge that `edge` is glued to.
    pub fn partner_edge(&self, edge: usize) -> usize {
        let n = self.n();
        (2 * self.fold + 2 * n - 1 - edge % n) % n
    }

    /// The vertex that `v` is identified with (itself for fold vertices).
    pub fn partner_vertex(&self, v: usize) -> usize {
        let n = self.n();
        (2 * self.fold + n - v % n) % n
    }

    /// Boundary edges whose images form the zipper path from `i` to `i + n/2`.
    pub fn zipper_edges(&self) -> Vec<usize> {
        (0..self.n() / 2).map(|k| (self.fold + k) % self.n()).collect()
    }

    /// Consecutive cone point pairs along the zipper path.
    pub fn zipper_pairs(&self) -> Vec<(usize, usize)> {
        self.zipper_edges()
            .into_iter()
            .map(|e| (self.cone_of(e), self.cone_of(e + 1)))
            .collect()
    }

    pub fn gauss_bonnet_residual(&self) -> f64 {
        self.cone_points.iter().map(ConePoint::curvature).sum::<f64>() - 4.0 * PI
    }
}

pub fn glue_halving(
    poly: &EquilateralPolygon,
    fold: usize,
    tol: &Tolerances,
) -> Result<HalvingGluing> {
    let n = poly.len();
    let half = n / 2;
    if fold >= half {
        return Err(Error::InvalidFoldIndex {
            index: fold,
            limit: half,
        });
    }
    let identifications: Vec<EdgeIdentification> = (0..half)
        .map(|k| EdgeIdentification {
            edge: (fold + k) % n,
            partner: (fold + n - k - 1) % n,
        })
        .collect();
    for id in &identifications {
        let (a, b) = poly.edge(id.edge);
        let (c, d) = poly.edge(id.partner);
        let (la, lb) = ((b - a).norm(), (d - c).norm());
        if (la - lb).abs() > tol.len {
            return Err(Error::GluingInvariant(format!(
                "edges {} and {} have lengths {la} and {lb}",
                id.edge, id.partner
            )));
        }
    }

    let angles = interior_angles(poly);
    let mut classes = vec![vec![fold], vec![fold + half]];
    classes.extend((1..half).map(|k| vec![(fold + k) % n, (fold + n - k) % n]));
    let mut vertex_cone = vec![usize::MAX; n];
    let cone_points = classes
        .into_iter()
        .enumerate()
        .map(|(c, vertices)| {
            for &v in &vertices {
                vertex_cone[v] = c;
            }
            ConePoint {
                cone_angle: vertices.iter().map(|&v| angles[v]).sum(),
                vertices,
            }
        })
        .collect();

    let gluing = HalvingGluing {
        polygon: poly.clone(),
        fold,
        identifications,
        cone_points,
        vertex_cone,
    };
    debug_assert!(gluing.vertex_cone.iter().all(|&c| c != usize::MAX));
    let residual = gluing.gauss_bonnet_residual();
    if residual.abs() > tol.curvature {
        return Err(Error::GaussBonnet { residual });
    }
    Ok(gluing)
}

/// The `n/2` distinct halvings, at fold indices `0 .. n/2`.
pub fn enumerate_halvings(poly: &EquilateralPolygon, tol: &Tolerances) -> Result<Vec<HalvingGluing>> {
    (0..poly.len() / 2)
        .map(|i| glue_halving(poly, i, tol))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvatureEntry {
    pub cone_point: usize,
    pub curvature: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurvatureVector {
    pub entries: Vec<CurvatureEntry>,
}

impl CurvatureVector {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.curvature).collect()
    }

    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.values();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn total(&self) -> f64 {
        self.entries.iter().map(|e| e.curvature).sum()
    }
}

/// Curvature `2π - θ` at every cone point.
pub fn cone_angles(gluing: &HalvingGluing, tol: &Tolerances) -> Result<CurvatureVector> {
    let v = CurvatureVector {
        entries: gluing
            .cone_points()
            .iter()
            .enumerate()
            .map(|(i, c)| CurvatureEntry {
                cone_point: i,
                curvature: c.curvature(),
            })
            .collect(),
    };
    let residual = v.total() - 4.0 * PI;
    if residual.abs() > tol.curvature {
        return Err(Error::GaussBonnet { residual });
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurvatureVerdict {
    /// Curvature multisets differ, so the surfaces cannot be congruent.
    Incongruent,
    /// Multisets agree; congruence must be settled another way.
    UndecidedByCurvature,
}

/// Pairwise comparison of sorted curvature multisets. Entry `[i][j]` is
/// `None` on the diagonal.
pub fn distinct_check(
    vectors: &[CurvatureVector],
    tol: f64,
) -> Result<Vec<Vec<Option<CurvatureVerdict>>>> {
    if vectors.len() < 2 {
        return Err(Error::MalformedInput(
            "distinctness needs at least two curvature vectors".into(),
        ));
    }
    let len = vectors[0].len();
    if vectors.iter().any(|v| v.len() != len) {
        return Err(Error::MalformedInput(
            "curvature vectors have different lengths".into(),
        ));
    }
    let sorted: Vec<Vec<f64>> = vectors.iter().map(CurvatureVector::sorted).collect();
    let m = vectors.len();
    let mut out = vec![vec![None; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let same = sorted[i]
                .iter()
                .zip(&sorted[j])
                .all(|(a, b)| (a - b).abs() <= tol);
            out[i][j] = Some(if same {
                CurvatureVerdict::UndecidedByCurvature
            } else {
                CurvatureVerdict::Incongruent
            });
        }
    }
    Ok(out)
}

/// Comparison against the alternative bookkeeping that halves the fold-vertex
/// curvatures, plus residuals of three low-height angle relations.
///
/// Informational only: the halved convention cannot satisfy Gauss-Bonnet.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HalvedTableDiagnostic {
    pub fold: usize,
    /// `½(2π - α)` at fold vertices, `2π - (α_a + α_b)` elsewhere.
    pub halved_curvatures: Vec<f64>,
    pub halved_total: f64,
    /// `halved_total - 4π`.
    pub halved_gauss_bonnet_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationResidual {
    pub relation: &'static str,
    pub residual: f64,
}

pub fn halved_table_diagnostic(gluing: &HalvingGluing) -> HalvedTableDiagnostic {
    let halved: Vec<f64> = gluing
        .cone_points()
        .iter()
        .map(|c| {
            if c.vertices.len() == 1 {
                0.5 * c.curvature()
            } else {
                c.curvature()
            }
        })
        .collect();
    let total: f64 = halved.iter().sum();
    HalvedTableDiagnostic {
        fold: gluing.fold(),
        halved_curvatures: halved,
        halved_total: total,
        halved_gauss_bonnet_residual: total - 4.0 * PI,
    }
}

/// Residuals of `α2 = π - α0/2`, `α4 = 2π - 2α2`, `α1 = 3π/4 - α0` (hexagons).
pub fn relation_residuals(angles: &[f64]) -> Vec<RelationResidual> {
    if angles.len() != 6 {
        return Vec::new();
    }
    let a = angles;
    vec![
        RelationResidual {
            relation: "a2 = pi - a0/2",
            residual: a[2] - (PI - 0.5 * a[0]),
        },
        RelationResidual {
            relation: "a4 = 2pi - 2a2",
            residual: a[4] - (2.0 * PI - 2.0 * a[2]),
        },
        RelationResidual {
            relation: "a1 = 3pi/4 - a0",
            residual: a[1] - (0.75 * PI - a[0]),
        },
    ]
}

/// Serialized form of a gluing, self-contained so it can be re-read.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingReport {
    pub polygon: Vec<[f64; 2]>,
    pub fold_pair: [usize; 2],
    /// Each entry is `[[u, v], [w, x]]`: edge `u v` glued to edge `w x` with
    /// `u ~ x` and `v ~ w`.
    pub identifications: Vec<[[usize; 2]; 2]>,
    pub cone_points: Vec<ConePointReport>,
    pub gauss_bonnet_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConePointReport {
    pub vertices: Vec<usize>,
    pub cone_angle: f64,
    pub curvature: f64,
}

impl GluingReport {
    pub fn new(gluing: &HalvingGluing) -> Self {
        let n = gluing.n();
        let (i, j) = gluing.fold_pair();
        Self {
            polygon: gluing.polygon().to_points(),
            fold_pair: [i, j],
            identifications: gluing
                .identifications()
                .iter()
                .map(|id| [[id.edge, (id.edge + 1) % n], [id.partner, (id.partner + 1) % n]])
                .collect(),
            cone_points: gluing
                .cone_points()
                .iter()
                .map(|c| ConePointReport {
                    vertices: c.vertices.clone(),
                    cone_angle: c.cone_angle,
                    curvature: c.curvature(),
                })
                .collect(),
            gauss_bonnet_residual: gluing.gauss_bonnet_residual(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("gluing report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Rebuilds the gluing from the polygon and fold pair, and checks that the
    /// listed identifications and cone points agree with it.
    pub fn into_gluing(&self, tol: &Tolerances) -> Result<HalvingGluing> {
        let poly = EquilateralPolygon::from_points(&self.polygon)?;
        let n = poly.len();
        let [i, j] = self.fold_pair;
        if j != i + n / 2 {
            return Err(Error::MalformedInput(format!(
                "fold pair ({i}, {j}) is not a pair of opposite vertices"
            )));
        }
        let gluing = glue_halving(&poly, i, tol)?;
        let rebuilt = GluingReport::new(&gluing);
        if rebuilt.identifications != self.identifications {
            return Err(Error::MalformedInput(
                "identifications do not match the fold pair".into(),
            ));
        }
        let cones_match = rebuilt.cone_points.len() == self.cone_points.len()
            && rebuilt.cone_points.iter().zip(&self.cone_points).all(|(a, b)| {
                a.vertices == b.vertices
                    && (a.cone_angle - b.cone_angle).abs() <= tol.curvature
                    && (a.curvature - b.curvature).abs() <= tol.curvature
            });
        if !cones_match {
            return Err(Error::MalformedInput(
                "cone points do not match the polygon".into(),
            ));
        }
        Ok(gluing)
    }
}
