//! Cutting a tetrahedron along a Hamiltonian path and flattening it.

use serde::Serialize;

use crate::embed::{Tetrahedron3D, LABELS};
use crate::geom::{cross, segments_touch, signed_area2, Isometry2, Vec2};
use crate::polygon::EquilateralPolygon;
use crate::{Error, Result};

/// The zipper of a halving tetrahedron: a–c, c–d, d–b.
pub const ZIPPER: [(usize, usize); 3] = [(0, 2), (2, 3), (3, 1)];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlanarNet {
    /// Boundary walk, counterclockwise or not depending on the layout.
    pub boundary: Vec<Vec2>,
    /// Tetrahedron vertex behind each boundary vertex.
    pub labels: Vec<usize>,
    /// Uncut tetrahedron edges, as boundary index pairs.
    pub creases: Vec<[usize; 2]>,
    /// Faces in layout order, as boundary index triples.
    pub faces: Vec<[usize; 3]>,
    /// Tetrahedron vertex triples matching `faces`.
    pub face_sources: Vec<[usize; 3]>,
    pub flat: bool,
}

impl PlanarNet {
    pub fn area(&self) -> f64 {
        signed_area2(&self.boundary).abs() / 2.0
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.boundary.len();
        (0..n)
            .map(|i| (self.boundary[(i + 1) % n] - self.boundary[i]).norm())
            .sum()
    }

    pub fn face_area(&self, k: usize) -> f64 {
        let [i, j, l] = self.faces[k].map(|i| self.boundary[i]);
        cross(&(j - i), &(l - i)).abs() / 2.0
    }

    pub fn label_string(&self) -> String {
        self.labels.iter().map(|&l| LABELS[l]).collect()
    }
}

/// Orders the cut edges into a path `p0 p1 p2 p3` starting at the lower
/// endpoint.
fn hamiltonian_order(cut: &[(usize, usize); 3]) -> Result<[usize; 4]> {
    let mut degree = [0usize; 4];
    for &(u, v) in cut {
        if u >= 4 || v >= 4 || u == v {
            return Err(Error::NonHamiltonian(format!("bad edge {u}{v}")));
        }
        degree[u] += 1;
        degree[v] += 1;
    }
    let start = degree
        .iter()
        .position(|&d| d == 1)
        .ok_or_else(|| Error::NonHamiltonian("no path endpoint".into()))?;
    let mut order = vec![start];
    let mut used = [false; 3];
    while order.len() < 4 {
        let here = *order.last().unwrap();
        let next = (0..3).find(|&k| !used[k] && (cut[k].0 == here || cut[k].1 == here));
        let Some(k) = next else {
            return Err(Error::NonHamiltonian("cut edges do not form a path".into()));
        };
        used[k] = true;
        let other = if cut[k].0 == here { cut[k].1 } else { cut[k].0 };
        if order.contains(&other) {
            return Err(Error::NonHamiltonian("cut edges close a cycle".into()));
        }
        order.push(other);
    }
    Ok([order[0], order[1], order[2], order[3]])
}

/// Third triangle vertex at distances `rp`, `rq` from `p`, `q`, on the side
/// of line `pq` opposite to `away`.
fn apex(p: Vec2, q: Vec2, rp: f64, rq: f64, away: Option<Vec2>) -> Vec2 {
    let base = q - p;
    let l = base.norm();
    let u = base / l;
    let x = (rp * rp - rq * rq + l * l) / (2.0 * l);
    let h = (rp * rp - x * x).max(0.0).sqrt();
    let normal = Vec2::new(-u.y, u.x);
    let side = match away {
        Some(w) if cross(&base, &(w - p)) > 0.0 => -1.0,
        _ => 1.0,
    };
    p + u * x + normal * (h * side)
}

/// Cuts `t` along the Hamiltonian path `cut` and unfolds the four faces by
/// successive hinge rotations about the uncut edges.
pub fn cut_and_unfold(t: &Tetrahedron3D, cut: &[(usize, usize); 3]) -> Result<PlanarNet> {
    let [p0, p1, p2, p3] = hamiltonian_order(cut)?;
    let d = |i: usize, j: usize| t.distance(i, j);

    // Faces p0p1p2, p0p2p3, p0p3p1, p3p1p2 hinge on p0p2, p0p3, p3p1.
    let a = Vec2::zeros();
    let c1 = Vec2::new(d(p0, p1), 0.0);
    let d1 = apex(a, c1, d(p0, p2), d(p1, p2), None);
    let b = apex(a, d1, d(p0, p3), d(p2, p3), Some(c1));
    let c2 = apex(a, b, d(p0, p1), d(p3, p1), Some(d1));
    let d2 = apex(b, c2, d(p3, p2), d(p1, p2), Some(a));

    Ok(PlanarNet {
        boundary: vec![a, c1, d1, b, d2, c2],
        labels: vec![p0, p1, p2, p3, p2, p1],
        creases: vec![[0, 2], [0, 3], [3, 5]],
        faces: vec![[0, 1, 2], [0, 2, 3], [0, 3, 5], [3, 5, 4]],
        face_sources: vec![[p0, p1, p2], [p0, p2, p3], [p0, p3, p1], [p3, p1, p2]],
        flat: t.flat,
    })
}

/// No two boundary edges meet except consecutive ones at their shared
/// vertex, and no consecutive pair folds back on itself.
pub fn is_simple(net: &PlanarNet, eps: f64) -> bool {
    boundary_is_simple(&net.boundary, eps)
}

pub fn boundary_is_simple(pts: &[Vec2], eps: f64) -> bool {
    let n = pts.len();
    if n < 3 {
        return false;
    }
    let seg = |i: usize| (pts[i], pts[(i + 1) % n]);
    for i in 0..n {
        let (a, b) = seg(i);
        let (_, c) = seg((i + 1) % n);
        let (u, v) = (b - a, c - b);
        if cross(&u, &v).abs() <= eps * u.norm() * v.norm() && u.dot(&v) < 0.0 {
            return false;
        }
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (p, q) = seg(j);
            if segments_touch(&a, &b, &p, &q, eps) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Alignment {
    pub congruent: bool,
    pub max_deviation: f64,
    /// Net vertex `k` lands on polygon vertex `(shift + k)` or
    /// `(shift - k)` when `reversed`.
    pub shift: usize,
    pub reversed: bool,
    /// Maps net coordinates onto polygon coordinates.
    pub transform: Isometry2,
}

/// Best rigid fit of `src` onto `dst`, point for point, with or without a
/// reflection.
fn procrustes(src: &[Vec2], dst: &[Vec2], reflected: bool) -> Isometry2 {
    let m = src.len() as f64;
    let flip = |p: &Vec2| if reflected { Vec2::new(p.x, -p.y) } else { *p };
    let s: Vec<Vec2> = src.iter().map(flip).collect();
    let cs = s.iter().sum::<Vec2>() / m;
    let cd = dst.iter().sum::<Vec2>() / m;
    let (mut sc, mut sd) = (0.0, 0.0);
    for (p, q) in s.iter().zip(dst) {
        let (p, q) = (p - cs, q - cd);
        sc += cross(&p, &q);
        sd += p.dot(&q);
    }
    let angle = sc.atan2(sd);
    let rot = Isometry2::from_rotation(angle, Vec2::zeros()).linear;
    let linear = if reflected {
        rot * nalgebra::Matrix2::new(1.0, 0.0, 0.0, -1.0)
    } else {
        rot
    };
    Isometry2 {
        linear,
        // `cs` is already in flipped coordinates.
        translation: cd - rot * cs,
        reflected,
    }
}

/// Tries every cyclic shift, both walk directions and reflection.
pub fn congruent_to_polygon(net: &PlanarNet, poly: &EquilateralPolygon, tol: f64) -> Alignment {
    congruent_points(&net.boundary, poly.vertices(), tol)
}

pub fn congruent_points(src: &[Vec2], dst: &[Vec2], tol: f64) -> Alignment {
    let n = src.len();
    let mut best = Alignment {
        congruent: false,
        max_deviation: f64::INFINITY,
        shift: 0,
        reversed: false,
        transform: Isometry2::identity(),
    };
    if n != dst.len() || n == 0 {
        return best;
    }
    for reversed in [false, true] {
        for shift in 0..n {
            let target: Vec<Vec2> = (0..n)
                .map(|k| {
                    let idx = if reversed { (shift + n - k) % n } else { (shift + k) % n };
                    dst[idx]
                })
                .collect();
            for reflected in [false, true] {
                let iso = procrustes(src, &target, reflected);
                let dev = src
                    .iter()
                    .zip(&target)
                    .map(|(p, q)| (iso.apply(p) - q).norm())
                    .fold(0.0, f64::max);
                if dev < best.max_deviation {
                    best = Alignment {
                        congruent: false,
                        max_deviation: dev,
                        shift,
                        reversed,
                        transform: iso,
                    };
                }
            }
        }
    }
    best.congruent = best.max_deviation <= tol;
    best
}

/// Largest side-length mismatch between a net face and its source face.
pub fn face_isometry_defect(net: &PlanarNet, t: &Tetrahedron3D) -> f64 {
    let mut worst: f64 = 0.0;
    for (f, src) in net.faces.iter().zip(&net.face_sources) {
        for r in 0..3 {
            let (i, j) = (f[r], f[(r + 1) % 3]);
            let (u, v) = (src[r], src[(r + 1) % 3]);
            let planar = (net.boundary[i] - net.boundary[j]).norm();
            worst = worst.max((planar - t.distance(u, v)).abs());
        }
    }
    worst
}
