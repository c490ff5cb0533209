//! The per-polygon audit: hypotheses, then every halving through folding,
//! measuring, embedding and unfolding.

use std::f64::consts::PI;

use serde::Serialize;

use crate::embed::{
    check_curvatures, congruence_defect, embed, max_distance_error, Tetrahedron3D,
};
use crate::geodesic::{
    disk_empty, overhang_audit, tetra_metric, DiskStatus, GeodesicEngine, Lookup, SearchConfig,
};
use crate::gluing::{
    cone_angles, distinct_check, enumerate_halvings, CurvatureVector, CurvatureVerdict,
    HalvingGluing,
};
use crate::net::{congruent_to_polygon, cut_and_unfold, face_isometry_defect, is_simple, PlanarNet, ZIPPER};
use crate::polygon::{
    check_independence, validate, EquilateralPolygon, IndependenceReport, ValidationReport,
    DEFAULT_INDEPENDENCE_BOUND,
};
use crate::{Error, Result, Tolerances};

/// Allowed deviation of a zipper distance from 1.
pub const ZIPPER_TOL: f64 = 1e-9;
/// Allowed gap between face angle sums and cone angles.
pub const ANGLE_SUM_TOL: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineConfig {
    pub tol: Tolerances,
    pub independence_bound: u32,
    pub search: SearchConfig,
    /// Slack added to the unit length when confirming zipper edges.
    pub zipper_slack: f64,
    /// Run the checks even when the hypotheses fail.
    pub force: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            tol: Tolerances::default(),
            independence_bound: DEFAULT_INDEPENDENCE_BOUND,
            search: SearchConfig::default(),
            zipper_slack: 1e-6,
            force: false,
        }
    }
}

impl PipelineConfig {
    pub fn check(&self) -> Result<()> {
        if !self.tol.is_valid() {
            return Err(Error::MalformedInput("tolerances must be positive".into()));
        }
        if self.independence_bound < 1 {
            return Err(Error::MalformedInput("independence bound must be >= 1".into()));
        }
        if self.search.max_developments < 1 {
            return Err(Error::MalformedInput("development cap must be >= 1".into()));
        }
        if !(self.search.clearance > 0.0 && self.zipper_slack > 0.0) {
            return Err(Error::MalformedInput("search tolerances must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Skipped,
}

impl Verdict {
    /// Fail dominates inconclusive, which dominates pass; skipped is neutral.
    pub fn all(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Skipped;
        for v in items {
            out = match (out, v) {
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
                (Verdict::Pass, _) | (_, Verdict::Pass) => Verdict::Pass,
                _ => Verdict::Skipped,
            };
        }
        out
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZipperCheck {
    pub cone_pair: (usize, usize),
    pub distance: Option<f64>,
    /// Geodesics strictly shorter than the edge.
    pub shorter: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Realization {
    pub metric: [f64; 6],
    pub tetrahedron: Tetrahedron3D,
    pub distance_error: f64,
    pub angle_sum_residuals: Option<[f64; 4]>,
    pub net: PlanarNet,
    pub net_simple: bool,
    pub net_area_error: f64,
    pub face_defect: f64,
    pub round_trip_deviation: f64,
    pub round_trip: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct HalvingAudit {
    pub fold: usize,
    pub curvatures: Vec<f64>,
    pub gauss_bonnet_residual: f64,
    pub disks: Vec<DiskStatus>,
    pub max_overhang: f64,
    pub zipper: Vec<ZipperCheck>,
    pub realization: Option<Realization>,
    pub errors: Vec<String>,
    /// Disks empty and zipper edges strictly shortest.
    pub shortest_paths: Verdict,
    /// Zipper distances realized as tetrahedron edges with matching curvature.
    pub edges: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct Scorecard {
    pub hypotheses: Verdict,
    pub shortest_paths: Verdict,
    pub zipper_edges: Verdict,
    pub distinct_curvatures: Verdict,
    pub incongruent_tetrahedra: Verdict,
    pub round_trip: Verdict,
    pub overall: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolygonAudit {
    pub n: usize,
    pub validation: ValidationReport,
    pub independence: IndependenceReport,
    pub halvings: Vec<HalvingAudit>,
    pub curvature_verdicts: Option<Vec<Vec<Option<CurvatureVerdict>>>>,
    /// Smallest relabeling defect between each pair of tetrahedra.
    pub congruence_defects: Option<Vec<Vec<f64>>>,
    pub scorecard: Scorecard,
}

fn zipper_checks(engine: &GeodesicEngine<'_>, slack: f64) -> Result<Vec<ZipperCheck>> {
    let mut out = Vec::new();
    for (x, y) in engine.gluing().zipper_pairs() {
        let mut check = ZipperCheck {
            cone_pair: (x, y),
            distance: None,
            shorter: 0,
            verdict: Verdict::Fail,
        };
        match engine.shortest_geodesic(x, y, 1.0 + slack)? {
            Lookup::Found(p) => check.distance = Some(p.length),
            Lookup::NotFound { .. } => {}
            Lookup::Inconclusive { .. } => check.verdict = Verdict::Inconclusive,
        }
        let below = engine.enumerate_geodesics(x, y, 1.0 - ZIPPER_TOL)?;
        check.shorter = below.paths.len();
        if check.verdict != Verdict::Inconclusive {
            check.verdict = if below.partial {
                Verdict::Inconclusive
            } else {
                let unit = check.distance.is_some_and(|d| (d - 1.0).abs() <= ZIPPER_TOL);
                Verdict::from_bool(unit && check.shorter == 0)
            };
        }
        out.push(check);
    }
    Ok(out)
}

fn realize(
    gluing: &HalvingGluing,
    engine: &GeodesicEngine<'_>,
    curvatures: &CurvatureVector,
    cfg: &PipelineConfig,
    errors: &mut Vec<String>,
) -> Result<Realization> {
    let measured = tetra_metric(engine)?;
    let t = embed(&measured.metric, cfg.tol.volume2)?;
    let angle_sum_residuals = match check_curvatures(&t, curvatures, ANGLE_SUM_TOL) {
        Ok(r) => Some(r),
        Err(e) => {
            errors.push(e.to_string());
            None
        }
    };
    let net = cut_and_unfold(&t, &ZIPPER)?;
    let align = congruent_to_polygon(&net, gluing.polygon(), cfg.tol.congruence);
    let net_simple = is_simple(&net, cfg.tol.len);
    Ok(Realization {
        metric: measured.metric.d,
        distance_error: max_distance_error(&t, &measured.metric),
        angle_sum_residuals,
        net_area_error: (net.area() - t.surface_area()).abs(),
        face_defect: face_isometry_defect(&net, &t),
        round_trip_deviation: align.max_deviation,
        round_trip: Verdict::from_bool(align.congruent && net_simple),
        net_simple,
        net,
        tetrahedron: t,
    })
}

/// Folds, measures and (for hexagons) realizes one halving.
pub fn audit_halving(gluing: &HalvingGluing, cfg: &PipelineConfig) -> Result<HalvingAudit> {
    let curvatures = cone_angles(gluing, &cfg.tol)?;
    let engine = GeodesicEngine::new(gluing, cfg.search);
    let mut errors = Vec::new();

    let mut disks = Vec::new();
    let mut max_overhang: f64 = 0.0;
    for c in 0..gluing.cone_points().len() {
        disks.push(disk_empty(&engine, c, 1.0, cfg.tol.len)?);
        max_overhang = max_overhang.max(overhang_audit(gluing, c, 1.0)?.width);
    }
    let zipper = zipper_checks(&engine, cfg.zipper_slack)?;
    let disk_verdict = Verdict::all(disks.iter().map(|d| match d {
        DiskStatus::Empty => Verdict::Pass,
        DiskStatus::Occupied { .. } => Verdict::Fail,
        DiskStatus::Inconclusive { .. } => Verdict::Inconclusive,
    }));
    let shortest_paths = Verdict::all(std::iter::once(disk_verdict).chain(zipper.iter().map(|z| z.verdict)));

    let (realization, edges) = if gluing.cone_points().len() == 4 {
        match realize(gluing, &engine, &curvatures, cfg, &mut errors) {
            Ok(r) => {
                // ac, cd, bd.
                let unit = [r.metric[1], r.metric[5], r.metric[4]]
                    .iter()
                    .all(|d| (d - 1.0).abs() <= ZIPPER_TOL);
                let ok = unit && r.angle_sum_residuals.is_some();
                (Some(r), Verdict::from_bool(ok))
            }
            Err(Error::SearchInconclusive { developments }) => {
                errors.push(format!("search inconclusive after {developments} developments"));
                (None, Verdict::Inconclusive)
            }
            Err(e) => {
                errors.push(e.to_string());
                (None, Verdict::Fail)
            }
        }
    } else {
        (None, Verdict::Skipped)
    };

    Ok(HalvingAudit {
        fold: gluing.fold(),
        gauss_bonnet_residual: curvatures.total() - 4.0 * PI,
        curvatures: curvatures.values(),
        disks,
        max_overhang,
        zipper,
        realization,
        errors,
        shortest_paths,
        edges,
    })
}

pub fn hypotheses(poly: &EquilateralPolygon, cfg: &PipelineConfig) -> (ValidationReport, IndependenceReport) {
    let v = validate(poly, &cfg.tol);
    let ind = check_independence(&v.angles, cfg.independence_bound, cfg.tol.ang);
    (v, ind)
}

/// Hypotheses first; the halvings only run when they hold or `force` is set.
pub fn audit_polygon(poly: &EquilateralPolygon, cfg: &PipelineConfig) -> Result<PolygonAudit> {
    cfg.check()?;
    let (validation, independence) = hypotheses(poly, cfg);
    let hyp = Verdict::from_bool(validation.geometry_ok() && independence.all_independent());
    let skipped = |hypotheses| Scorecard {
        hypotheses,
        shortest_paths: Verdict::Skipped,
        zipper_edges: Verdict::Skipped,
        distinct_curvatures: Verdict::Skipped,
        incongruent_tetrahedra: Verdict::Skipped,
        round_trip: Verdict::Skipped,
        overall: Verdict::Fail,
    };
    if hyp == Verdict::Fail && !cfg.force {
        return Ok(PolygonAudit {
            n: poly.len(),
            validation,
            independence,
            halvings: Vec::new(),
            curvature_verdicts: None,
            congruence_defects: None,
            scorecard: skipped(hyp),
        });
    }

    let gluings = enumerate_halvings(poly, &cfg.tol)?;
    let halvings = gluings
        .iter()
        .map(|g| audit_halving(g, cfg))
        .collect::<Result<Vec<_>>>()?;

    let vectors = gluings
        .iter()
        .map(|g| cone_angles(g, &cfg.tol))
        .collect::<Result<Vec<_>>>()?;
    let verdicts = distinct_check(&vectors, cfg.tol.curvature)?;
    let distinct_curvatures = Verdict::all(
        verdicts
            .iter()
            .flatten()
            .flatten()
            .map(|v| Verdict::from_bool(*v == CurvatureVerdict::Incongruent)),
    );

    let realized: Option<Vec<&Realization>> = halvings.iter().map(|h| h.realization.as_ref()).collect();
    let (congruence_defects, incongruent_tetrahedra, round_trip) = match realized {
        Some(rs) if !rs.is_empty() => {
            let m = rs.len();
            let mut defects = vec![vec![0.0; m]; m];
            for i in 0..m {
                for j in 0..m {
                    if i != j {
                        defects[i][j] =
                            congruence_defect(&rs[i].tetrahedron.metric(), &rs[j].tetrahedron.metric());
                    }
                }
            }
            let incongruent = Verdict::from_bool(
                (0..m).all(|i| (0..m).all(|j| i == j || defects[i][j] > cfg.tol.congruence)),
            );
            let rt = Verdict::all(rs.iter().map(|r| r.round_trip));
            (Some(defects), incongruent, rt)
        }
        // Some hexagon halving could not be realized.
        _ if poly.len() == 6 => {
            let missing = Verdict::all(halvings.iter().map(|h| h.edges));
            (None, missing, missing)
        }
        _ => (None, Verdict::Skipped, Verdict::Skipped),
    };

    let shortest_paths = Verdict::all(halvings.iter().map(|h| h.shortest_paths));
    let zipper_edges = Verdict::all(halvings.iter().map(|h| h.edges));
    let overall = Verdict::all([
        hyp,
        shortest_paths,
        zipper_edges,
        distinct_curvatures,
        incongruent_tetrahedra,
        round_trip,
    ]);
    Ok(PolygonAudit {
        n: poly.len(),
        validation,
        independence,
        halvings,
        curvature_verdicts: Some(verdicts),
        congruence_defects,
        scorecard: Scorecard {
            hypotheses: hyp,
            shortest_paths,
            zipper_edges,
            distinct_curvatures,
            incongruent_tetrahedra,
            round_trip,
            overall,
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub seed: u64,
    pub n: usize,
    pub attempts: usize,
    pub angles: Vec<f64>,
    pub audit: Option<PolygonAudit>,
    pub error: Option<String>,
    /// Wall-clock time, kept out of the deterministic CSV.
    #[serde(skip)]
    pub elapsed_ms: f64,
}

/// Column order of the sweep CSV.
pub const SWEEP_COLUMNS: [&str; 16] = [
    "seed",
    "n",
    "attempts",
    "angles",
    "curvatures",
    "max_gauss_bonnet_residual",
    "max_zipper_error",
    "max_overhang",
    "hypotheses",
    "shortest_paths",
    "zipper_edges",
    "distinct_curvatures",
    "incongruent_tetrahedra",
    "round_trip",
    "overall",
    "error",
];

fn join(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(";")
}

impl SweepRecord {
    pub fn scorecard(&self) -> Option<&Scorecard> {
        self.audit.as_ref().map(|a| &a.scorecard)
    }

    pub fn row(&self) -> Vec<String> {
        let mut row = vec![self.seed.to_string(), self.n.to_string(), self.attempts.to_string(), join(&self.angles)];
        match &self.audit {
            Some(a) => {
                let curv: Vec<String> = a.halvings.iter().map(|h| join(&h.curvatures)).collect();
                let gb = a.halvings.iter().map(|h| h.gauss_bonnet_residual.abs()).fold(0.0, f64::max);
                let zip = a
                    .halvings
                    .iter()
                    .flat_map(|h| h.zipper.iter())
                    .map(|z| z.distance.map_or(f64::INFINITY, |d| (d - 1.0).abs()))
                    .fold(0.0, f64::max);
                let over = a.halvings.iter().map(|h| h.max_overhang).fold(0.0, f64::max);
                let s = &a.scorecard;
                row.extend([
                    curv.join("|"),
                    format!("{gb:.3e}"),
                    format!("{zip:.3e}"),
                    format!("{over:.12}"),
                    s.hypotheses.as_str().into(),
                    s.shortest_paths.as_str().into(),
                    s.zipper_edges.as_str().into(),
                    s.distinct_curvatures.as_str().into(),
                    s.incongruent_tetrahedra.as_str().into(),
                    s.round_trip.as_str().into(),
                    s.overall.as_str().into(),
                ]);
            }
            None => {
                row.extend(std::iter::repeat_n(String::new(), 4));
                row.extend(std::iter::repeat_n(Verdict::Inconclusive.as_str().to_string(), 7));
            }
        }
        row.push(self.error.clone().unwrap_or_default());
        row
    }
}

/// Pass rate per verdict column, in [`SWEEP_COLUMNS`] order.
pub fn summary_row(label: &str, records: &[&SweepRecord]) -> Vec<String> {
    let total = records.len();
    let rate = |pick: fn(&Scorecard) -> Verdict| {
        if total == 0 {
            return String::new();
        }
        let pass = records
            .iter()
            .filter(|r| r.scorecard().is_some_and(|s| pick(s) == Verdict::Pass))
            .count();
        format!("{:.6}", pass as f64 / total as f64)
    };
    let inconclusive = records
        .iter()
        .filter(|r| r.scorecard().is_none_or(|s| s.overall == Verdict::Inconclusive))
        .count();
    vec![
        label.to_string(),
        records.first().map_or(String::new(), |r| r.n.to_string()),
        total.to_string(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        rate(|s| s.hypotheses),
        rate(|s| s.shortest_paths),
        rate(|s| s.zipper_edges),
        rate(|s| s.distinct_curvatures),
        rate(|s| s.incongruent_tetrahedra),
        rate(|s| s.round_trip),
        rate(|s| s.overall),
        format!("inconclusive={inconclusive}"),
    ]
}

/// Header, one row per record, then a summary row.
pub fn write_sweep_csv<W: std::io::Write>(out: W, records: &[SweepRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_COLUMNS)?;
    for r in records {
        w.write_record(r.row())?;
    }
    if !records.is_empty() {
        let all: Vec<&SweepRecord> = records.iter().collect();
        w.write_record(summary_row("summary", &all))?;
        let thin: Vec<&SweepRecord> = records
            .iter()
            .filter(|r| r.audit.as_ref().is_some_and(|a| !a.validation.fat))
            .collect();
        if !thin.is_empty() {
            w.write_record(summary_row("summary_thin", &thin))?;
        }
    }
    w.flush()?;
    Ok(())
}
