//! Planar primitives: vectors, rigid motions and segment predicates.

use nalgebra::{Matrix2, Vector2};
use serde::{Deserialize, Serialize};

pub type Vec2 = Vector2<f64>;

#[inline]
pub fn cross(a: &Vec2, b: &Vec2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Twice the signed area of the closed polygon (positive for counterclockwise).
pub fn signed_area2(points: &[Vec2]) -> f64 {
    let n = points.len();
    (0..n).map(|i| cross(&points[i], &points[(i + 1) % n])).sum()
}

/// Distance from `p` to the closed segment `ab`.
pub fn point_segment_distance(p: &Vec2, a: &Vec2, b: &Vec2) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Parameters `(s, t)` with `a + s(b-a) = c + t(d-c)`, or `None` for parallel lines.
pub fn line_intersection(a: &Vec2, b: &Vec2, c: &Vec2, d: &Vec2) -> Option<(f64, f64)> {
    let r = b - a;
    let q = d - c;
    let denom = cross(&r, &q);
    if denom.abs() < 1e-300 {
        return None;
    }
    let ac = c - a;
    Some((cross(&ac, &q) / denom, cross(&ac, &r) / denom))
}

/// True if closed segments `ab` and `cd` share at least one point, within `eps`.
pub fn segments_touch(a: &Vec2, b: &Vec2, c: &Vec2, d: &Vec2, eps: f64) -> bool {
    if let Some((s, t)) = line_intersection(a, b, c, d) {
        let ls = (b - a).norm().max(f64::MIN_POSITIVE);
        let lt = (d - c).norm().max(f64::MIN_POSITIVE);
        if s >= -eps / ls && s <= 1.0 + eps / ls && t >= -eps / lt && t <= 1.0 + eps / lt {
            return true;
        }
    }
    point_segment_distance(a, c, d) <= eps
        || point_segment_distance(b, c, d) <= eps
        || point_segment_distance(c, a, b) <= eps
        || point_segment_distance(d, a, b) <= eps
}

/// A planar isometry `x -> linear * x + translation`.
///
/// `reflected` mirrors the sign of `det(linear)`; it is carried explicitly so
/// that developments can report handedness without recomputing determinants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Isometry2 {
    pub linear: Matrix2<f64>,
    pub translation: Vec2,
    pub reflected: bool,
}

impl Isometry2 {
    pub fn identity() -> Self {
        Self {
            linear: Matrix2::identity(),
            translation: Vec2::zeros(),
            reflected: false,
        }
    }

    pub fn from_rotation(angle: f64, translation: Vec2) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            linear: Matrix2::new(c, -s, s, c),
            translation,
            reflected: false,
        }
    }

    /// The isometry taking `src.0 -> dst.0` and `src.1 -> dst.1`.
    ///
    /// The two segments must have equal length; only their directions are used
    /// beyond the first anchor point.
    pub fn from_segments(src: (Vec2, Vec2), dst: (Vec2, Vec2), reflected: bool) -> Self {
        let mut u = src.1 - src.0;
        let flip = Matrix2::new(1.0, 0.0, 0.0, -1.0);
        if reflected {
            u.y = -u.y;
        }
        let v = dst.1 - dst.0;
        let angle = v.y.atan2(v.x) - u.y.atan2(u.x);
        let (s, c) = angle.sin_cos();
        let rot = Matrix2::new(c, -s, s, c);
        let linear = if reflected { rot * flip } else { rot };
        Self {
            linear,
            translation: dst.0 - linear * src.0,
            reflected,
        }
    }

    #[inline]
    pub fn apply(&self, p: &Vec2) -> Vec2 {
        self.linear * p + self.translation
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry2) -> Isometry2 {
        Isometry2 {
            linear: self.linear * other.linear,
            translation: self.linear * other.translation + self.translation,
            reflected: self.reflected != other.reflected,
        }
    }

    pub fn inverse(&self) -> Isometry2 {
        // Orthogonal, so the inverse is the transpose.
        let lt = self.linear.transpose();
        Isometry2 {
            linear: lt,
            translation: -(lt * self.translation),
            reflected: self.reflected,
        }
    }

    pub fn max_abs_diff(&self, other: &Isometry2) -> f64 {
        let dl = (self.linear - other.linear).abs().max();
        let dt = (self.translation - other.translation).abs().max();
        dl.max(dt)
    }

    /// Rotation angle of the proper part (after undoing any reflection).
    pub fn angle(&self) -> f64 {
        self.linear[(1, 0)].atan2(self.linear[(0, 0)])
    }
}
