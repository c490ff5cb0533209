//! Exit criteria. Each test prints one PASS/FAIL line and then asserts.

use std::f64::consts::PI;

use zipfold_core::embed::{
    cayley_menger_volume2, check_curvatures, congruent_tetrahedra, embed, vertex_angle_sums,
    Tetrahedron3D,
};
use zipfold_core::geodesic::{overhang_audit, overhang_beta, tetra_metric, GeodesicEngine, SearchConfig, OVERHANG_BOUND};
use zipfold_core::gluing::{cone_angles, enumerate_halvings, glue_halving, HalvingGluing};
use zipfold_core::net::{congruent_to_polygon, cut_and_unfold, is_simple, ZIPPER};
use zipfold_core::pipeline::{audit_polygon, PipelineConfig, Verdict};
use zipfold_core::polygon::{
    check_independence, diagonal_lengths, polygon_to_json, sample_polygon, validate,
    EquilateralPolygon, PairStatus, SamplerConfig,
};
use zipfold_core::Tolerances;

const GAUSS_BONNET_TOL: f64 = 1e-8;
const ZIPPER_TOL: f64 = 1e-9;
const CONGRUENCE_TOL: f64 = 1e-6;
const REGULAR_CONGRUENCE_TOL: f64 = 1e-9;
const ANGLE_SUM_TOL: f64 = 1e-7;
const FLAT_VOLUME2: f64 = 1e-12;
const CURVATURE_TOL: f64 = 1e-9;
const OVERHANG_SLACK: f64 = 1e-9;
const BETA_DEGREES: f64 = 7.6829;
const BETA_DEGREES_TOL: f64 = 0.001;
const DIAGONAL_TOL: f64 = 1e-9;
const INDEPENDENCE_BOUND: u32 = 16;
const INDEPENDENCE_TOL: f64 = 1e-9;

fn report(id: u32, ok: bool, what: &str, detail: String) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("{tag} criterion {id}: {what} ({detail})");
}

fn fat(n: usize, seed: u64) -> EquilateralPolygon {
    sample_polygon(&SamplerConfig::fat(n), seed).unwrap().polygon
}

fn rectangle() -> EquilateralPolygon {
    EquilateralPolygon::from_points(&[
        [0.0, 0.0],
        [1.0, 0.0],
        [2.0, 0.0],
        [2.0, 1.0],
        [1.0, 1.0],
        [0.0, 1.0],
    ])
    .unwrap()
}

fn archive_counterexample(tag: &str, seed: u64, poly: &EquilateralPolygon) {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("counterexamples");
    let _ = std::fs::create_dir_all(&dir);
    let _ = std::fs::write(dir.join(format!("{tag}_seed{seed}.json")), polygon_to_json(poly));
}

fn realize(g: &HalvingGluing) -> Tetrahedron3D {
    let eng = GeodesicEngine::new(g, SearchConfig::default());
    embed(&tetra_metric(&eng).unwrap().metric, FLAT_VOLUME2).unwrap()
}

#[test]
fn criterion_1_gauss_bonnet() {
    let tol = Tolerances::default();
    let mut worst: f64 = 0.0;
    let samples = 10_000;
    for seed in 0..samples {
        let poly = fat(6, seed);
        for g in enumerate_halvings(&poly, &tol).unwrap() {
            let omega = cone_angles(&g, &tol).unwrap();
            worst = worst.max((omega.total() - 4.0 * PI).abs());
        }
    }
    let g = glue_halving(&EquilateralPolygon::regular(6).unwrap(), 0, &tol).unwrap();
    let regular_total = cone_angles(&g, &tol).unwrap().total();
    let not_halved = (regular_total - 8.0 * PI / 3.0).abs() > 1e-6;
    let ok = worst <= GAUSS_BONNET_TOL && not_halved;
    report(
        1,
        ok,
        "total curvature is 4π on every halving",
        format!("{samples} hexagons, max residual {worst:.2e}, regular total {regular_total:.12}"),
    );
    assert!(ok);
}

#[test]
fn criterion_2_zipper_edges_are_shortest() {
    let cfg = PipelineConfig::default();
    let samples = 1_000;
    let mut worst: f64 = 0.0;
    let mut shorter = 0;
    let mut bad = Vec::new();
    for seed in 0..samples {
        let poly = fat(6, seed);
        for g in enumerate_halvings(&poly, &cfg.tol).unwrap() {
            let eng = GeodesicEngine::new(&g, cfg.search);
            for (x, y) in g.zipper_pairs() {
                let d = eng
                    .shortest_geodesic(x, y, 1.0 + cfg.zipper_slack)
                    .unwrap()
                    .path()
                    .map_or(f64::INFINITY, |p| p.length);
                worst = worst.max((d - 1.0).abs());
                let below = eng.enumerate_geodesics(x, y, 1.0 - ZIPPER_TOL).unwrap();
                shorter += below.paths.len();
                if below.partial || !below.paths.is_empty() || (d - 1.0).abs() > ZIPPER_TOL {
                    bad.push(seed);
                }
            }
        }
    }
    let ok = bad.is_empty();
    report(
        2,
        ok,
        "zipper distances are 1 and nothing shorter exists",
        format!("{samples} hexagons, max |d-1| {worst:.2e}, shorter paths {shorter}, failing seeds {bad:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_3_incongruent_tetrahedra_and_round_trip() {
    let cfg = PipelineConfig::default();
    let samples = 1_000;
    let mut congruent_pairs = 0;
    let mut round_trip_failures = 0;
    let mut worst_round_trip: f64 = 0.0;
    let mut min_defect = f64::INFINITY;
    for seed in 0..samples {
        let poly = fat(6, seed);
        let gluings = enumerate_halvings(&poly, &cfg.tol).unwrap();
        let tets: Vec<Tetrahedron3D> = gluings.iter().map(realize).collect();
        let mut failed = false;
        for i in 0..3 {
            for j in i + 1..3 {
                if congruent_tetrahedra(&tets[i], &tets[j], CONGRUENCE_TOL) {
                    congruent_pairs += 1;
                    failed = true;
                }
                min_defect = min_defect.min(zipfold_core::embed::congruence_defect(
                    &tets[i].metric(),
                    &tets[j].metric(),
                ));
            }
            let net = cut_and_unfold(&tets[i], &ZIPPER).unwrap();
            let al = congruent_to_polygon(&net, &poly, CONGRUENCE_TOL);
            worst_round_trip = worst_round_trip.max(al.max_deviation);
            if !al.congruent || !is_simple(&net, cfg.tol.len) {
                round_trip_failures += 1;
                failed = true;
            }
        }
        if failed {
            archive_counterexample("criterion3", seed, &poly);
        }
    }
    let ok = congruent_pairs == 0 && round_trip_failures == 0;
    report(
        3,
        ok,
        "three pairwise incongruent tetrahedra unfold back to the source",
        format!(
            "{samples} hexagons, congruent pairs {congruent_pairs}, smallest defect {min_defect:.2e}, \
             round-trip failures {round_trip_failures}, max deviation {worst_round_trip:.2e}"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_4_regular_hexagon_control() {
    let tol = Tolerances::default();
    let poly = EquilateralPolygon::regular(6).unwrap();
    let gluings = enumerate_halvings(&poly, &tol).unwrap();
    let tets: Vec<Tetrahedron3D> = gluings.iter().map(realize).collect();
    let congruent = (0..3).all(|i| {
        (0..3).all(|j| congruent_tetrahedra(&tets[i], &tets[j], REGULAR_CONGRUENCE_TOL))
    });
    let want = [2.0 * PI / 3.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0, 4.0 * PI / 3.0];
    let mut multiset_ok = true;
    let mut worst_angle: f64 = 0.0;
    for (g, t) in gluings.iter().zip(&tets) {
        let omega = cone_angles(g, &tol).unwrap();
        multiset_ok &= omega
            .sorted()
            .iter()
            .zip(want)
            .all(|(a, b)| (a - b).abs() <= CURVATURE_TOL);
        match check_curvatures(t, &omega, ANGLE_SUM_TOL) {
            Ok(r) => worst_angle = worst_angle.max(r.iter().map(|x| x.abs()).fold(0.0, f64::max)),
            Err(_) => worst_angle = f64::INFINITY,
        }
    }
    let ok = congruent && multiset_ok && worst_angle <= ANGLE_SUM_TOL;
    report(
        4,
        ok,
        "regular hexagon gives three congruent tetrahedra",
        format!("congruent {congruent}, curvature multiset {multiset_ok}, max angle residual {worst_angle:.2e}"),
    );
    assert!(ok);
}

#[test]
fn criterion_5_degenerate_square() {
    let cfg = PipelineConfig {
        force: true,
        ..PipelineConfig::default()
    };
    let poly = rectangle();
    let g = glue_halving(&poly, 1, &cfg.tol).unwrap();
    let omega = cone_angles(&g, &cfg.tol).unwrap();
    let curv_ok = omega.values().iter().all(|w| (w - PI).abs() <= CURVATURE_TOL);
    let eng = GeodesicEngine::new(&g, cfg.search);
    let metric = tetra_metric(&eng).unwrap().metric;
    let vol = cayley_menger_volume2(&metric, FLAT_VOLUME2).unwrap();
    let t = embed(&metric, FLAT_VOLUME2).unwrap();
    let net = cut_and_unfold(&t, &ZIPPER).unwrap();
    let al = congruent_to_polygon(&net, &poly, CONGRUENCE_TOL);
    let audit = audit_polygon(&poly, &cfg).unwrap();
    let forced_round_trip = audit.halvings[1]
        .realization
        .as_ref()
        .is_some_and(|r| r.round_trip == Verdict::Pass);
    let ok = vol.volume2.abs() <= FLAT_VOLUME2
        && t.flat
        && curv_ok
        && al.congruent
        && forced_round_trip
        && audit.scorecard.hypotheses == Verdict::Fail;
    report(
        5,
        ok,
        "degenerate hexagon folds flat to a doubly covered square",
        format!(
            "V² {:.2e}, curvatures {:?}, round-trip deviation {:.2e}",
            vol.volume2,
            omega.values(),
            al.max_deviation
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_overhang_constants() {
    let tol = Tolerances::default();
    let samples = 1_000;
    let mut worst: f64 = 0.0;
    for seed in 0..samples {
        let poly = fat(6, seed);
        for g in enumerate_halvings(&poly, &tol).unwrap() {
            for c in 0..g.cone_points().len() {
                worst = worst.max(overhang_audit(&g, c, 1.0).unwrap().width);
            }
        }
    }
    let h = 1.0 - 3f64.sqrt() / 2.0;
    let beta = overhang_beta(h);
    let bound_ok = (OVERHANG_BOUND - h).abs() < 1e-15 && (h - 0.1339746).abs() < 1e-7;
    let beta_ok = (beta.to_degrees() - BETA_DEGREES).abs() <= BETA_DEGREES_TOL && beta.to_degrees() < 8.0;
    let ok = worst <= OVERHANG_BOUND + OVERHANG_SLACK && bound_ok && beta_ok;
    report(
        6,
        ok,
        "unit-disk overhang stays under 1 - √3/2 with entry angle under 8°",
        format!(
            "{samples} hexagons, max overhang {worst:.9}, bound {h:.9}, β {beta:.6} rad = {:.5}°",
            beta.to_degrees()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_diagonal_bound() {
    let tol = Tolerances::default();
    let cfg = SamplerConfig::convex(6);
    let samples = 10_000;
    let mut shortest = f64::INFINITY;
    let mut thin = 0;
    for seed in 0..samples {
        let poly = sample_polygon(&cfg, seed).unwrap().polygon;
        if !validate(&poly, &tol).fat {
            thin += 1;
        }
        shortest = shortest.min(diagonal_lengths(&poly, &tol).min());
    }
    let ok = shortest >= 1.0 - DIAGONAL_TOL;
    report(
        7,
        ok,
        "opposite diagonals of convex equilateral hexagons are at least 1",
        format!("{samples} hexagons ({thin} not fat), shortest diagonal {shortest:.9}"),
    );
    assert!(ok);
}

#[test]
fn criterion_8_larger_polygons() {
    let tol = Tolerances::default();
    let samples = 20;
    let mut count_ok = true;
    let mut gluing_count_ok = true;
    let mut worst_gb: f64 = 0.0;
    let mut worst_zip: f64 = 0.0;
    let mut cone_counts = Vec::new();
    for n in [8usize, 10] {
        for seed in 0..samples {
            let poly = fat(n, seed);
            let gluings = enumerate_halvings(&poly, &tol).unwrap();
            gluing_count_ok &= gluings.len() == n / 2;
            for g in &gluings {
                let cones = g.cone_points().len();
                if !cone_counts.contains(&(n, cones)) {
                    cone_counts.push((n, cones));
                }
                count_ok &= cones == n - 2;
                worst_gb = worst_gb.max(g.gauss_bonnet_residual().abs());
                let eng = GeodesicEngine::new(g, SearchConfig::default());
                for (x, y) in g.zipper_pairs() {
                    let d = eng
                        .shortest_geodesic(x, y, 1.0 + 1e-6)
                        .unwrap()
                        .path()
                        .map_or(f64::INFINITY, |p| p.length);
                    worst_zip = worst_zip.max((d - 1.0).abs());
                }
            }
        }
    }
    let ok = gluing_count_ok && count_ok && worst_gb <= GAUSS_BONNET_TOL && worst_zip <= ZIPPER_TOL;
    report(
        8,
        ok,
        "n/2 halvings of n-2 cone points, 4π total, unit zipper distances (n = 8, 10)",
        format!(
            "gluing counts {gluing_count_ok}, (n, cone points) {cone_counts:?}, \
             max Gauss-Bonnet residual {worst_gb:.2e}, max |d-1| {worst_zip:.2e}"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_9_relations_detected() {
    let a0 = 2.0;
    let a2 = PI - 0.5 * a0;
    let a4 = 2.0 * PI - 2.0 * a2;
    let a1 = 0.75 * PI - a0;
    let mut hits = Vec::new();
    for (x, y) in [(a0, a2), (a2, a4), (a0, a1)] {
        let rep = check_independence(&[x, y], INDEPENDENCE_BOUND, INDEPENDENCE_TOL);
        hits.push(matches!(rep.pairs[0].status, PairStatus::Dependent { .. }));
    }
    let ok = hits.iter().all(|h| *h);
    report(
        9,
        ok,
        "the three low-height angle relations are flagged as dependent",
        format!("detected {hits:?}"),
    );
    assert!(ok);
}

#[test]
fn regular_angle_sums_complement_curvatures() {
    let tol = Tolerances::default();
    let g = glue_halving(&EquilateralPolygon::regular(6).unwrap(), 0, &tol).unwrap();
    let sums = vertex_angle_sums(&realize(&g));
    let mut sorted = sums.to_vec();
    sorted.sort_by(f64::total_cmp);
    for (s, w) in sorted.iter().zip([2.0 * PI / 3.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0, 4.0 * PI / 3.0]) {
        assert!((s - w).abs() < ANGLE_SUM_TOL);
    }
}
