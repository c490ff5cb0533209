//! Entry points shared by the fuzz targets and the corpus regression test.
//! None of them may panic, whatever the input.

use crate::geom::Vec2;
use crate::gluing::{cone_angles, enumerate_halvings, GluingReport};
use crate::polygon::{parse_polygon_json, validate, validate_vertices, EquilateralPolygon};
use crate::Tolerances;

const MAX_INPUT: usize = 1 << 14;

fn fold_all(poly: &EquilateralPolygon, tol: &Tolerances) {
    if !validate(poly, tol).equilateral {
        return;
    }
    if let Ok(gluings) = enumerate_halvings(poly, tol) {
        for g in gluings {
            let c = cone_angles(&g, tol).expect("cone angles of a built gluing");
            assert!((c.total() - 4.0 * std::f64::consts::PI).abs() <= tol.curvature);
            let back = GluingReport::new(&g).into_gluing(tol).expect("report round trip");
            assert_eq!(back.fold(), g.fold());
        }
    }
}

pub fn polygon_json(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > MAX_INPUT {
        return;
    }
    let tol = Tolerances::default();
    let Ok(file) = parse_polygon_json(text) else { return };
    let again = parse_polygon_json(&file.to_json()).expect("re-parse of serialized file");
    assert_eq!(again, file);
    if let Ok(poly) = file.into_polygon(&tol) {
        fold_all(&poly, &tol);
    }
}

pub fn gluing_report(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > MAX_INPUT {
        return;
    }
    let tol = Tolerances::default();
    let Ok(report) = GluingReport::from_json(text) else { return };
    if let Ok(g) = report.into_gluing(&tol) {
        assert_eq!(g.fold_pair().0, report.fold_pair[0]);
        assert!(g.gauss_bonnet_residual().abs() <= tol.curvature);
    }
}

/// Little-endian `f64` pairs, one vertex per 16 bytes.
pub fn polygon_validate(data: &[u8]) {
    if data.len() > MAX_INPUT {
        return;
    }
    let vertices: Vec<Vec2> = data
        .chunks_exact(16)
        .map(|c| {
            let x = f64::from_le_bytes(c[..8].try_into().unwrap());
            let y = f64::from_le_bytes(c[8..].try_into().unwrap());
            Vec2::new(x, y)
        })
        .collect();
    let tol = Tolerances::default();
    if let Ok(report) = validate_vertices(&vertices, &tol) {
        assert_eq!(report.n, vertices.len());
        assert_eq!(report.angles.len(), vertices.len());
        if report.geometry_ok() {
            fold_all(&EquilateralPolygon::new(vertices).unwrap(), &tol);
        }
    }
}
