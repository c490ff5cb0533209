//! Distances and geodesic spectra checked against a brute-force enumeration
//! of crossing sequences (depth 6), see `oracles/geodesic_oracle.py`.

use zipfold_core::geodesic::{GeodesicEngine, Lookup, SearchConfig};
use zipfold_core::gluing::glue_halving;
use zipfold_core::polygon::EquilateralPolygon;
use zipfold_core::Tolerances;

const TOL: f64 = 1e-10;

const S0: [[f64; 2]; 6] = [
    [0.0, 0.0],
    [1.0, 0.0],
    [1.5409315870749407, 0.8410665955229619],
    [0.7548292034549441, 1.4591629006947042],
    [-0.1339837181789555, 1.9174331161098144],
    [-0.34267926643020097, 0.9394524577427319],
];

const S1: [[f64; 2]; 6] = [
    [0.0, 0.0],
    [1.0, 0.0],
    [1.4133450725761878, 0.9105744620716012],
    [0.5307465505364585, 1.3807019436053714],
    [-0.36052605451641606, 1.8341698514911033],
    [-0.5291989555086947, 0.8484977698783344],
];

const S2: [[f64; 2]; 6] = [
    [0.0, 0.0],
    [1.0, 0.0],
    [0.8576385645091231, 0.989814741092987],
    [0.3508193827136197, 1.8518671275313845],
    [-0.36076957862577286, 1.1492711197858774],
    [-0.9420229383849232, 0.33554848167833407],
];

const S3: [[f64; 2]; 6] = [
    [0.0, 0.0],
    [1.0, 0.0],
    [1.3615766452539981, 0.9323423886142175],
    [0.7791919186070759, 1.7452556866776638],
    [-0.09320505559509207, 1.256457651285845],
    [-0.8211061520519995, 0.5707755137200251],
];

const RECTANGLE: [[f64; 2]; 6] = [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], [2.0, 1.0], [1.0, 1.0], [0.0, 1.0]];

fn polygon(name: &str) -> EquilateralPolygon {
    match name {
        "regular" => EquilateralPolygon::regular(6).unwrap(),
        "rectangle" => EquilateralPolygon::from_points(&RECTANGLE).unwrap(),
        "s0" => EquilateralPolygon::from_points(&S0).unwrap(),
        "s1" => EquilateralPolygon::from_points(&S1).unwrap(),
        "s2" => EquilateralPolygon::from_points(&S2).unwrap(),
        "s3" => EquilateralPolygon::from_points(&S3).unwrap(),
        _ => unreachable!(),
    }
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Shortest distance per cone pair, in `PAIRS` order.
const SHORTEST: &[(&str, usize, [f64; 6])] = &[
    ("regular", 0, [2.0, 1.0000000000000004, 1.7320508075688772, 1.7320508075688772, 1.0, 1.0]),
    ("regular", 1, [2.0, 1.0, 1.7320508075688772, 1.7320508075688772, 1.0, 0.9999999999999999]),
    ("regular", 2, [2.0, 0.9999999999999999, 1.7320508075688772, 1.7320508075688774, 1.0, 1.0]),
    ("rectangle", 0, [2.23606797749979, 1.0, 1.4142135623730951, 1.4142135623730951, 1.0, 1.0]),
    ("rectangle", 1, [1.0, 1.0, 1.4142135623730951, 1.4142135623730951, 1.0, 1.0]),
    ("rectangle", 2, [2.23606797749979, 1.0, 1.4142135623730951, 1.4142135623730951, 1.0, 1.0]),
    ("s0", 0, [1.6428400704731452, 1.0, 1.7555236182261638, 1.2143408854119042, 1.0, 1.0]),
    ("s0", 1, [2.227659944392223, 0.9999999999999999, 1.479616534863787, 1.9221085795270907, 1.0, 1.0]),
    ("s0", 2, [1.8861785772633237, 1.0, 1.7555236182261638, 1.2143408854119042, 1.0, 1.0]),
    ("s1", 0, [1.479199025818365, 1.0000000000000002, 1.6812763440768372, 1.1860547029196395, 1.0, 1.0]),
    ("s1", 1, [2.2836834695589716, 0.9999999999999999, 1.4582649474320786, 1.8692667225690587, 1.0, 1.0]),
    ("s1", 2, [1.9435356484412367, 1.0, 1.6812763440768372, 1.1860547029196395, 1.0, 1.0]),
    ("s2", 0, [1.8848039944033719, 1.0, 1.2045658120815574, 1.9623575953153052, 1.0, 1.0]),
    ("s2", 1, [1.7811563527347194, 0.9999999999999999, 1.9623575953153052, 1.2045658120815574, 1.0, 0.9999999999999999]),
    ("s2", 2, [1.9149010061116214, 0.9999999999999999, 1.2287980875486728, 1.970798284140172, 1.0, 1.0]),
    ("s3", 0, [1.9112973232606434, 1.0, 1.2599099221226993, 1.759168445797374, 1.0, 1.0]),
    ("s3", 1, [1.665467839093091, 1.0, 1.759168445797374, 1.2599099221226993, 1.0, 0.9999999999999999]),
    ("s3", 2, [2.212427354440432, 0.9999999999999999, 1.4904497645415862, 1.9084580959780069, 1.0, 1.0]),
];

/// Every geodesic length up to 4 for one cone pair.
const SPECTRA: &[(&str, usize, (usize, usize), &[f64])] = &[
    ("regular", 0, (0, 1), &[2.0, 2.6457513110645903, 2.6457513110645907]),
    ("regular", 0, (0, 2), &[1.0000000000000004, 3.605551275463989, 3.60555127546399]),
    ("regular", 0, (0, 3), &[1.7320508075688772, 1.7320508075688774]),
    ("regular", 0, (1, 2), &[1.7320508075688772, 1.7320508075688774]),
    ("regular", 0, (1, 3), &[1.0, 3.6055512754639887, 3.6055512754639905]),
    ("regular", 0, (2, 3), &[1.0, 2.0, 2.0, 2.6457513110645903, 2.6457513110645907, 2.645751311064591, 2.6457513110645916, 3.6055512754639896, 3.60555127546399]),
    ("regular", 1, (0, 1), &[2.0, 2.64575131106459, 2.6457513110645916]),
    ("regular", 1, (0, 2), &[1.0, 3.6055512754639896, 3.6055512754639896]),
    ("regular", 1, (0, 3), &[1.7320508075688772, 1.7320508075688776]),
    ("regular", 1, (1, 2), &[1.7320508075688772, 1.7320508075688774]),
    ("regular", 1, (1, 3), &[1.0, 3.6055512754639887, 3.60555127546399]),
    ("regular", 1, (2, 3), &[0.9999999999999999, 2.0, 2.0, 2.6457513110645903, 2.6457513110645907, 2.6457513110645907, 2.645751311064591, 3.6055512754639887, 3.6055512754639905]),
    ("rectangle", 0, (0, 1), &[2.23606797749979, 2.23606797749979]),
    ("rectangle", 0, (0, 2), &[1.0, 3.605551275463989, 3.605551275463989]),
    ("rectangle", 0, (0, 3), &[1.4142135623730951, 3.1622776601683795, 3.1622776601683795]),
    ("rectangle", 0, (1, 2), &[1.4142135623730951, 3.1622776601683795, 3.1622776601683795]),
    ("rectangle", 0, (1, 3), &[1.0, 3.605551275463989, 3.605551275463989]),
    ("rectangle", 0, (2, 3), &[1.0, 1.0, 2.23606797749979, 2.23606797749979, 2.23606797749979, 2.23606797749979, 2.23606797749979, 2.23606797749979, 3.605551275463989, 3.605551275463989, 3.605551275463989, 3.605551275463989]),
    ("rectangle", 1, (0, 1), &[1.0, 2.23606797749979, 2.23606797749979, 3.605551275463989, 3.605551275463989]),
    ("rectangle", 1, (0, 2), &[1.0, 2.23606797749979, 2.23606797749979, 3.605551275463989, 3.605551275463989]),
    ("rectangle", 1, (0, 3), &[1.4142135623730951, 1.4142135623730951, 3.1622776601683795, 3.1622776601683795, 3.1622776601683795, 3.1622776601683795]),
    ("rectangle", 1, (1, 2), &[1.4142135623730951, 1.4142135623730951, 3.1622776601683795, 3.1622776601683795, 3.1622776601683795, 3.1622776601683795]),
    ("rectangle", 1, (1, 3), &[1.0, 2.23606797749979, 2.23606797749979, 3.605551275463989, 3.605551275463989]),
    ("rectangle", 1, (2, 3), &[1.0, 2.23606797749979, 2.23606797749979, 3.605551275463989, 3.605551275463989]),
    ("s0", 0, (0, 1), &[1.6428400704731452, 2.212544325014658]),
    ("s0", 0, (0, 2), &[1.0, 2.61389770957124, 2.8555699855833363, 3.406743174929683]),
    ("s0", 0, (0, 3), &[1.7555236182261638, 1.9221085795270907]),
    ("s0", 0, (1, 2), &[1.2143408854119042, 1.479616534863787, 2.594807255028948, 2.6377794599248783, 2.688075040212492, 3.0458812166048173, 3.8841993687778484]),
    ("s0", 0, (1, 3), &[1.0, 2.967422949536525, 2.967422949536525, 2.989039163572942, 2.989039163572942, 3.2327821185368184, 3.365765479230599, 3.684680326823194]),
    ("s0", 0, (2, 3), &[1.0, 1.8861785772633237, 2.227659944392223, 2.591956393630983, 3.5078790495617342, 3.864378007371463]),
    ("s0", 1, (0, 1), &[2.227659944392223]),
    ("s0", 1, (0, 2), &[0.9999999999999999, 2.754557135607989, 2.7545571356079894]),
    ("s0", 1, (0, 3), &[1.479616534863787, 1.638706359559394, 2.513337223869104, 2.693924206146066, 2.767014449257323, 2.830893280531634, 3.4061503315716806]),
    ("s0", 1, (1, 2), &[1.9221085795270907, 1.9909560935424968]),
    ("s0", 1, (1, 3), &[1.0, 3.531572295328396, 3.560286159144773, 3.7124760836368065, 3.874450201551193]),
    ("s0", 1, (2, 3), &[1.0, 1.6428400704731452, 1.8861785772633237, 2.459286880971294, 2.591956393630983, 2.709349299016124, 2.8539347275897824, 2.8616444752728025, 2.901322983326583, 3.3889178720992863, 3.6364721860470293, 3.801699847222581]),
    ("s2", 0, (0, 1), &[1.8848039944033719]),
    ("s2", 0, (0, 2), &[1.0, 2.8556680146179465, 2.855668014617947, 2.950130474650592, 2.950130474650592]),
    ("s2", 0, (0, 3), &[1.2045658120815574, 1.3096858894476362, 2.391086407593696, 2.4227639378171792, 2.502719365063331, 2.522618137901353]),
    ("s2", 0, (1, 2), &[1.9623575953153052, 1.992652378862178]),
    ("s2", 0, (1, 3), &[1.0, 2.8382891462161424, 2.907795011791786, 2.945373651634725]),
    ("s2", 0, (2, 3), &[1.0, 1.7811563527347194, 1.9149010061116214, 2.8069949275921484, 2.8813858321072545, 2.932468551559679]),
    ("s2", 1, (0, 1), &[1.7811563527347194]),
    ("s2", 1, (0, 2), &[0.9999999999999999, 2.7931339874884857, 2.8119479208283393, 2.926111576360081, 2.929250153245188, 3.8471608532330626, 3.88568272356863]),
    ("s2", 1, (0, 3), &[1.9623575953153052, 1.970798284140172]),
    ("s2", 1, (1, 2), &[1.2045658120815574, 1.2287980875486728, 2.4617487124946966, 2.477087326025461, 2.4819886785487317, 2.5119019910183034]),
    ("s2", 1, (1, 3), &[1.0, 2.869507264287501, 2.869507264287501]),
    ("s2", 1, (2, 3), &[0.9999999999999999, 1.8848039944033719, 1.9149010061116214, 2.8865241252247245, 2.901986745510588, 2.9595929999343693, 2.966443670282777, 3.8774337244406767, 3.907508952067857]),
];

#[test]
fn shortest_distances_match_enumeration() {
    for &(name, fold, want) in SHORTEST {
        let g = glue_halving(&polygon(name), fold, &Tolerances::default()).unwrap();
        let eng = GeodesicEngine::new(&g, SearchConfig::default());
        for (&(i, j), w) in PAIRS.iter().zip(want) {
            let Lookup::Found(p) = eng.shortest_geodesic(i, j, 2.5).unwrap() else {
                panic!("{name} fold {fold}: no path {i}-{j}");
            };
            assert!((p.length - w).abs() < TOL, "{name} fold {fold} {i}-{j}: {} vs {w}", p.length);
            // Searching from the other end gives the same distance.
            let back = eng.shortest_geodesic(j, i, 2.5).unwrap();
            assert!((back.path().unwrap().length - p.length).abs() < TOL);
        }
    }
}

#[test]
fn geodesic_spectra_match_enumeration() {
    for &(name, fold, (i, j), want) in SPECTRA {
        let g = glue_halving(&polygon(name), fold, &Tolerances::default()).unwrap();
        let eng = GeodesicEngine::new(&g, SearchConfig::default());
        let e = eng.enumerate_geodesics(i, j, 4.0).unwrap();
        assert!(!e.partial);
        let got: Vec<f64> = e.paths.iter().map(|p| p.length).collect();
        assert_eq!(got.len(), want.len(), "{name} fold {fold} {i}-{j}: {got:?} vs {want:?}");
        for (a, b) in got.iter().zip(want.iter()) {
            assert!((a - b).abs() < TOL, "{name} fold {fold} {i}-{j}: {got:?} vs {want:?}");
        }
        for p in &e.paths {
            assert!((eng.verify(p).unwrap() - p.length).abs() < TOL);
        }
    }
}

#[test]
fn regular_fold_distance_is_two() {
    let g = glue_halving(&EquilateralPolygon::regular(6).unwrap(), 0, &Tolerances::default()).unwrap();
    let eng = GeodesicEngine::new(&g, SearchConfig::default());
    let d = eng.shortest_geodesic(0, 1, 2.0 + 1e-6).unwrap().path().unwrap().length;
    assert!(d > 1.0 && d <= 2.0 + TOL);
    assert!((d - 2.0).abs() < TOL);
}

#[test]
fn rectangle_adjacent_corners_have_one_seam_geodesic() {
    let g = glue_halving(&polygon("rectangle"), 1, &Tolerances::default()).unwrap();
    let eng = GeodesicEngine::new(&g, SearchConfig::default());
    let e = eng.enumerate_geodesics(0, 2, 1.01).unwrap();
    assert_eq!(e.paths.len(), 1);
    let p = &e.paths[0];
    assert!((p.length - 1.0).abs() < TOL);
    // Front and back copies of the square edge are the two glued twins.
    let [x, y] = p.seam.unwrap();
    assert_eq!(g.partner_edge(x), y);
}
