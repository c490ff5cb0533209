//! Volumes frozen from `oracles/cayley_menger.py` (exact rational arithmetic).

use std::f64::consts::PI;

use zipfold_core::embed::{cayley_menger_volume2, congruent_tetrahedra, embed, vertex_angle_sums, TetraMetric};
use zipfold_core::geodesic::{tetra_metric, GeodesicEngine, SearchConfig};
use zipfold_core::gluing::{enumerate_halvings, glue_halving};
use zipfold_core::polygon::EquilateralPolygon;
use zipfold_core::Tolerances;

const R3: f64 = 1.732_050_807_568_877_2;

#[test]
fn regular_tetrahedron_volume2() {
    let v = cayley_menger_volume2(&TetraMetric::regular(), 1e-12).unwrap();
    assert!((v.volume2 - 1.0 / 72.0).abs() < 1e-15);
    assert!(!v.flat);
}

#[test]
fn regular_hexagon_fold_is_a_flat_trapezoid() {
    let tol = Tolerances::default();
    let g = glue_halving(&EquilateralPolygon::regular(6).unwrap(), 0, &tol).unwrap();
    let m = tetra_metric(&GeodesicEngine::new(&g, SearchConfig::default())).unwrap().metric;
    for (got, want) in m.d.iter().zip([2.0, 1.0, R3, R3, 1.0, 1.0]) {
        assert!((got - want).abs() < 1e-12, "{:?}", m.d);
    }
    // Exact value is zero.
    let v = cayley_menger_volume2(&m, 1e-12).unwrap();
    assert!(v.volume2.abs() <= 1e-12);
    assert!(v.flat);

    let t = embed(&m, 1e-12).unwrap();
    let want = [[0.0, 0.0], [2.0, 0.0], [0.5, R3 / 2.0], [1.5, R3 / 2.0]];
    for (p, w) in t.points.iter().zip(want) {
        assert!((p.x - w[0]).abs() < 1e-9 && (p.y - w[1]).abs() < 1e-9 && p.z.abs() < 1e-6, "{p:?}");
    }
    let sums = vertex_angle_sums(&t);
    for (s, w) in sums.iter().zip([2.0 * PI / 3.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0, 4.0 * PI / 3.0]) {
        assert!((s - w).abs() < 1e-7, "{sums:?}");
    }
}

#[test]
fn regular_hexagon_halvings_agree() {
    let tol = Tolerances::default();
    let tets: Vec<_> = enumerate_halvings(&EquilateralPolygon::regular(6).unwrap(), &tol)
        .unwrap()
        .iter()
        .map(|g| embed(&tetra_metric(&GeodesicEngine::new(g, SearchConfig::default())).unwrap().metric, 1e-12).unwrap())
        .collect();
    for a in &tets {
        for b in &tets {
            assert!(congruent_tetrahedra(a, b, 1e-9));
        }
    }
}

#[test]
fn doubly_covered_square_volume2() {
    let s = 2f64.sqrt();
    let v = cayley_menger_volume2(&TetraMetric::new([1.0, 1.0, s, s, 1.0, 1.0]).unwrap(), 1e-12).unwrap();
    assert!(v.volume2.abs() <= 1e-12 && v.flat);
}
