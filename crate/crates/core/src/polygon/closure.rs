use crate::geom::Vec2;
use crate::polygon::{validate, EquilateralPolygon};
use crate::{Error, Result, Tolerances};

/// Both two-link closures of a unit chain with the given edge directions.
///
/// The chain starts at the origin; `directions.len() + 2` is the vertex count
/// of the closed polygon. The last two edges bridge the gap from the chain's
/// tip back to the origin, which needs a gap chord no longer than 2.
pub fn closure_candidates(directions: &[f64]) -> Result<[Vec<Vec2>; 2]> {
    if directions.len() < 4 || !directions.len().is_multiple_of(2) {
        return Err(Error::MalformedInput(format!(
            "need an even number (>= 4) of edge directions, got {}",
            directions.len()
        )));
    }
    if directions.iter().any(|d| !d.is_finite()) {
        return Err(Error::MalformedInput("edge direction is not finite".into()));
    }
    let mut chain = Vec::with_capacity(directions.len() + 2);
    let mut p = Vec2::zeros();
    chain.push(p);
    for d in directions {
        p += Vec2::new(d.cos(), d.sin());
        chain.push(p);
    }
    let tip = *chain.last().unwrap();
    let gap = tip.norm();
    if gap > 2.0 {
        return Err(Error::NoClosure { gap });
    }
    if gap < 1e-12 {
        return Err(Error::ClosureRejected("chain tip returns to the start".into()));
    }
    let mid = tip / 2.0;
    // Unit normal to the gap chord.
    let normal = Vec2::new(-tip.y, tip.x) / gap;
    let h = (1.0 - gap * gap / 4.0).max(0.0).sqrt();
    let mut out = [chain.clone(), chain];
    out[0].push(mid + normal * h);
    out[1].push(mid - normal * h);
    Ok(out)
}

/// Closes the chain and returns the first convex candidate.
///
/// Strictly convex candidates are preferred over weakly convex ones.
pub fn solve_closure(directions: &[f64], tol: &Tolerances) -> Result<EquilateralPolygon> {
    let candidates = closure_candidates(directions)?;
    let mut weak = None;
    let mut reason = String::from("no candidate is convex");
    for cand in candidates {
        let poly = match EquilateralPolygon::new(cand) {
            Ok(p) => p,
            Err(e) => {
                reason = e.to_string();
                continue;
            }
        };
        let report = validate(&poly, tol);
        if report.strictly_convex {
            return Ok(poly);
        }
        if report.convex && weak.is_none() {
            weak = Some(poly);
        }
    }
    weak.ok_or(Error::ClosureRejected(reason))
}

/// Directions of the first `n - 2` edges, the inverse of [`solve_closure`]
/// up to the rigid motion placing `v0` at the origin.
pub fn edge_directions(poly: &EquilateralPolygon) -> Vec<f64> {
    (0..poly.len() - 2)
        .map(|i| {
            let (a, b) = poly.edge(i);
            let d = b - a;
            d.y.atan2(d.x)
        })
        .collect()
}
