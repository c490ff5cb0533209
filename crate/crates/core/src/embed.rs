//! Tetrahedra from six distances.

use std::f64::consts::PI;
use std::fmt::Write as _;

use nalgebra::{Matrix3, Matrix5, Vector3};
use serde::Serialize;

use crate::gluing::CurvatureVector;
use crate::{Error, Result};

pub type Vec3 = Vector3<f64>;

/// Vertex pairs in metric order: ab, ac, ad, bc, bd, cd.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
pub const LABELS: [char; 4] = ['a', 'b', 'c', 'd'];
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];

/// Slack allowed in the triangle inequality so flat faces survive rounding.
const TRIANGLE_SLACK: f64 = 1e-9;
/// Distances must round-trip through the embedding to this accuracy.
const ROUND_TRIP: f64 = 1e-8;

/// Labeled distances among four points; `a`, `b` are the fold vertices and
/// `c`, `d` the paired ones.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TetraMetric {
    /// In [`PAIRS`] order.
    pub d: [f64; 6],
}

impl TetraMetric {
    pub fn new(d: [f64; 6]) -> Result<Self> {
        if let Some(k) = d.iter().position(|x| !(x.is_finite() && *x > 0.0)) {
            let (i, j) = PAIRS[k];
            return Err(Error::InvalidMetric(format!(
                "distance {}{} = {} is not positive",
                LABELS[i], LABELS[j], d[k]
            )));
        }
        let m = Self { d };
        for face in FACES {
            for r in 0..3 {
                let (x, y, z) = (face[r], face[(r + 1) % 3], face[(r + 2) % 3]);
                if m.get(x, y) > m.get(x, z) + m.get(z, y) + TRIANGLE_SLACK {
                    return Err(Error::InvalidMetric(format!(
                        "triangle inequality fails: {}{} > {}{} + {}{}",
                        LABELS[x], LABELS[y], LABELS[x], LABELS[z], LABELS[z], LABELS[y]
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn regular() -> Self {
        Self { d: [1.0; 6] }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i != j && i < 4 && j < 4);
        let (i, j) = (i.min(j), i.max(j));
        let k = PAIRS.iter().position(|&p| p == (i, j)).unwrap();
        self.d[k]
    }

    /// The zipper path a–c–d–b.
    pub fn zipper(&self) -> [f64; 3] {
        [self.get(0, 2), self.get(2, 3), self.get(3, 1)]
    }

    fn relabeled(&self, perm: &[usize; 4]) -> [f64; 6] {
        PAIRS.map(|(i, j)| self.get(perm[i], perm[j]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VolumeCertificate {
    pub volume2: f64,
    pub flat: bool,
}

impl VolumeCertificate {
    pub fn volume(&self) -> f64 {
        self.volume2.max(0.0).sqrt()
    }
}

/// Squared volume from the bordered Cayley-Menger determinant.
pub fn cayley_menger_volume2(metric: &TetraMetric, tol_vol: f64) -> Result<VolumeCertificate> {
    let mut cm = Matrix5::<f64>::zeros();
    for k in 1..5 {
        cm[(0, k)] = 1.0;
        cm[(k, 0)] = 1.0;
    }
    for (&(i, j), &d) in PAIRS.iter().zip(&metric.d) {
        cm[(i + 1, j + 1)] = d * d;
        cm[(j + 1, i + 1)] = d * d;
    }
    let volume2 = cm.determinant() / 288.0;
    if volume2 < -tol_vol {
        return Err(Error::NonRealizable(format!(
            "Cayley-Menger squared volume {volume2:e} is negative"
        )));
    }
    Ok(VolumeCertificate {
        volume2,
        flat: volume2.abs() <= tol_vol,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Tetrahedron3D {
    /// a, b, c, d.
    pub points: [Vec3; 4],
    pub volume2: f64,
    pub flat: bool,
}

impl Tetrahedron3D {
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        (self.points[i] - self.points[j]).norm()
    }

    pub fn edge_lengths(&self) -> [f64; 6] {
        PAIRS.map(|(i, j)| self.distance(i, j))
    }

    pub fn metric(&self) -> TetraMetric {
        TetraMetric {
            d: self.edge_lengths(),
        }
    }

    /// `det(b - a, c - a, d - a) / 6`.
    pub fn signed_volume(&self) -> f64 {
        let [a, b, c, d] = self.points;
        Matrix3::from_columns(&[b - a, c - a, d - a]).determinant() / 6.0
    }

    pub fn surface_area(&self) -> f64 {
        FACES.iter().map(|f| self.face_area(f)).sum()
    }

    pub fn face_area(&self, f: &[usize; 3]) -> f64 {
        let [p, q, r] = f.map(|i| self.points[i]);
        (q - p).cross(&(r - p)).norm() / 2.0
    }
}

/// Canonical placement: `a` at the origin, `b` on +x, `c` in the upper
/// xy half-plane, `d` with `z >= 0`.
pub fn embed(metric: &TetraMetric, tol_vol: f64) -> Result<Tetrahedron3D> {
    let vol = cayley_menger_volume2(metric, tol_vol)?;
    let sq = |i, j| metric.get(i, j).powi(2);
    let ab = metric.get(0, 1);

    let cx = (sq(0, 1) + sq(0, 2) - sq(1, 2)) / (2.0 * ab);
    let cy = (sq(0, 2) - cx * cx).max(0.0).sqrt();
    if cy < 1e-12 {
        return Err(Error::NonRealizable("face abc is degenerate".into()));
    }
    let dx = (sq(0, 1) + sq(0, 3) - sq(1, 3)) / (2.0 * ab);
    let dy = (sq(0, 3) - sq(2, 3) + cx * cx + cy * cy - 2.0 * dx * cx) / (2.0 * cy);
    let dz = (sq(0, 3) - dx * dx - dy * dy).max(0.0).sqrt();

    let t = Tetrahedron3D {
        points: [
            Vec3::zeros(),
            Vec3::new(ab, 0.0, 0.0),
            Vec3::new(cx, cy, 0.0),
            Vec3::new(dx, dy, dz),
        ],
        volume2: vol.volume2,
        flat: vol.flat,
    };
    let worst = max_distance_error(&t, metric);
    if worst > ROUND_TRIP {
        return Err(Error::NonRealizable(format!(
            "embedded distances deviate by {worst:e}"
        )));
    }
    Ok(t)
}

pub fn max_distance_error(t: &Tetrahedron3D, metric: &TetraMetric) -> f64 {
    t.edge_lengths()
        .iter()
        .zip(&metric.d)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn angle_at(p: &Vec3, q: &Vec3, r: &Vec3) -> f64 {
    let (u, v) = (q - p, r - p);
    u.cross(&v).norm().atan2(u.dot(&v))
}

/// Sum of the three face angles at each vertex.
pub fn vertex_angle_sums(t: &Tetrahedron3D) -> [f64; 4] {
    let mut sums = [0.0; 4];
    for f in FACES {
        for r in 0..3 {
            let [p, q, s] = [f[r], f[(r + 1) % 3], f[(r + 2) % 3]].map(|i| t.points[i]);
            sums[f[r]] += angle_at(&p, &q, &s);
        }
    }
    sums
}

/// Residuals `(2π - angle sum) - ω` per vertex; errors past `tol`.
pub fn check_curvatures(t: &Tetrahedron3D, curvatures: &CurvatureVector, tol: f64) -> Result<[f64; 4]> {
    if curvatures.len() != 4 {
        return Err(Error::InvalidMetric(format!(
            "expected 4 curvatures, got {}",
            curvatures.len()
        )));
    }
    let sums = vertex_angle_sums(t);
    let mut out = [0.0; 4];
    for e in &curvatures.entries {
        let v = e.cone_point;
        out[v] = (2.0 * PI - sums[v]) - e.curvature;
        if out[v].abs() > tol {
            return Err(Error::CurvatureMismatch {
                vertex: v,
                residual: out[v],
            });
        }
    }
    Ok(out)
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in (0..4).filter(|&b| b != a) {
            for c in (0..4).filter(|&c| c != a && c != b) {
                out.push([a, b, c, 6 - a - b - c]);
            }
        }
    }
    out
}

/// Smallest worst-edge deviation over the 24 vertex correspondences.
///
/// Edge lengths determine a tetrahedron up to a motion that may include a
/// reflection, so mirror images compare equal.
pub fn congruence_defect(m1: &TetraMetric, m2: &TetraMetric) -> f64 {
    permutations4()
        .iter()
        .map(|p| {
            m2.relabeled(p)
                .iter()
                .zip(&m1.d)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
        })
        .fold(f64::INFINITY, f64::min)
}

pub fn congruent_tetrahedra(t1: &Tetrahedron3D, t2: &Tetrahedron3D, tol: f64) -> bool {
    congruence_defect(&t1.metric(), &t2.metric()) <= tol
}

/// Wavefront OBJ with outward counterclockwise faces.
pub fn to_obj(t: &Tetrahedron3D, name: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "o {name}");
    for p in &t.points {
        let _ = writeln!(s, "v {:.9} {:.9} {:.9}", p.x, p.y, p.z);
    }
    let centroid = t.points.iter().sum::<Vec3>() / 4.0;
    for f in FACES {
        let [p, q, r] = f.map(|i| t.points[i]);
        let normal = (q - p).cross(&(r - p));
        let [i, j, k] = if normal.dot(&(p - centroid)) < 0.0 {
            [f[0], f[2], f[1]]
        } else {
            f
        };
        let _ = writeln!(s, "f {} {} {}", i + 1, j + 1, k + 1);
    }
    s
}
