use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use zipfold_core::embed::{congruent_tetrahedra, embed, to_obj, Tetrahedron3D};
use zipfold_core::geodesic::{tetra_metric, GeodesicEngine};
use zipfold_core::gluing::{
    cone_angles, enumerate_halvings, glue_halving, halved_table_diagnostic, relation_residuals,
    GluingReport, HalvedTableDiagnostic, HalvingGluing, RelationResidual,
};
use zipfold_core::net::congruent_to_polygon;
use zipfold_core::pipeline::{audit_polygon, write_sweep_csv, PipelineConfig, PolygonAudit, SweepRecord, Verdict};
use zipfold_core::polygon::{
    check_independence, parse_polygon_json, polygon_to_json, sample_polygon, validate, EquilateralPolygon,
    PairStatus, SamplerConfig,
};
use zipfold_core::svg::{geodesic_svg, net_svg, overlay_svg, polygon_svg};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

/// Fold equilateral polygons into tetrahedra by perimeter halving and audit the result.
#[derive(Parser)]
#[command(name = "zipfold", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args, Clone)]
struct Options {
    /// Predicate tolerance for lengths, angles and convexity.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Largest numerator or denominator tried by the rational-relation screen.
    #[arg(long, global = true, default_value_t = 16)]
    independence_bound: u32,
    /// Cap on developments expanded per geodesic query.
    #[arg(long, global = true)]
    dev_cap: Option<usize>,
    #[arg(long, global = true, env = "ZIPFOLD_OUT_DIR", default_value = "zipfold-out")]
    out_dir: PathBuf,
    /// Run the checks even when the polygon fails the hypotheses.
    #[arg(long, global = true)]
    force: bool,
    #[arg(long, global = true)]
    emit_svg: bool,
    #[arg(long, global = true)]
    emit_obj: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the hypotheses of a polygon file.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Glue, measure and embed one halving or all of them.
    Fold {
        #[arg(long)]
        input: PathBuf,
        /// A fold index, or "all".
        #[arg(long, default_value = "all")]
        fold_index: String,
    },
    /// Full audit with a per-check scorecard.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// Sample polygons, write them out, and audit each one.
    Sample {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// Audit a seed range in parallel and write a CSV.
    Sweep {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
    },
    /// Audit and write every artifact: JSON, SVG and OBJ.
    Report {
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = config(&cli.opts)?;
    match cli.command {
        Command::Validate { input } => cmd_validate(&input, &cfg),
        Command::Fold { input, fold_index } => cmd_fold(&input, &fold_index, &cfg, &cli.opts),
        Command::Verify { input } => cmd_verify(&input, &cfg, &cli.opts, false),
        Command::Report { input } => cmd_verify(&input, &cfg, &cli.opts, true),
        Command::Sample { n, seed, count } => cmd_sweep(n, seed, count, &cfg, &cli.opts, true),
        Command::Sweep { n, seed, count } => cmd_sweep(n, seed, count, &cfg, &cli.opts, false),
    }
}

fn config(opts: &Options) -> Result<PipelineConfig> {
    let mut cfg = PipelineConfig {
        independence_bound: opts.independence_bound,
        force: opts.force,
        ..PipelineConfig::default()
    };
    if let Some(t) = opts.tol {
        cfg.tol = cfg.tol.with_predicate(t);
    }
    if let Some(cap) = opts.dev_cap {
        cfg.search.max_developments = cap;
    }
    cfg.check()?;
    Ok(cfg)
}

fn read_polygon(path: &Path, cfg: &PipelineConfig) -> Result<EquilateralPolygon> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = parse_polygon_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(file.into_polygon(&cfg.tol)?)
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

fn exit_code(v: Verdict) -> u8 {
    match v {
        Verdict::Pass | Verdict::Skipped => 0,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

#[derive(Serialize)]
struct ValidateOutput<'a> {
    validation: &'a zipfold_core::polygon::ValidationReport,
    independence: &'a zipfold_core::polygon::IndependenceReport,
    warnings: Vec<String>,
}

fn cmd_validate(input: &Path, cfg: &PipelineConfig) -> Result<u8> {
    let poly = read_polygon(input, cfg)?;
    let v = validate(&poly, &cfg.tol);
    let ind = check_independence(&v.angles, cfg.independence_bound, cfg.tol.ang);
    let mut warnings = Vec::new();
    for p in &ind.pairs {
        match p.status {
            PairStatus::Dependent {
                x_index,
                y_index,
                relation,
            } => warnings.push(format!(
                "angles {x_index} and {y_index} are dependent: a{y_index} = ({})pi + ({})a{x_index}",
                relation.pi_coeff, relation.x_coeff
            )),
            PairStatus::Inconclusive { closest_residual } => warnings.push(format!(
                "angles {} and {} are inconclusive (closest residual {closest_residual:e})",
                p.i, p.j
            )),
            PairStatus::Independent => {}
        }
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let out = ValidateOutput {
        validation: &v,
        independence: &ind,
        warnings: warnings.clone(),
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    if v.geometry_ok() {
        Ok(0)
    } else {
        eprintln!("hypotheses failed: {}", v.failures().join(", "));
        Ok(EXIT_FAIL)
    }
}

#[derive(Serialize)]
struct FoldEntry {
    fold: usize,
    gluing: GluingReport,
    curvatures: Vec<f64>,
    gauss_bonnet_residual: f64,
    halved_table: HalvedTableDiagnostic,
    metric: Option<[f64; 6]>,
    volume2: Option<f64>,
    flat: Option<bool>,
    obj: Option<String>,
    error: Option<String>,
}

#[derive(Serialize)]
struct FoldReport {
    n: usize,
    angles: Vec<f64>,
    relation_residuals: Vec<RelationResidual>,
    halvings: Vec<FoldEntry>,
    /// `[i][j]` is true when halvings `i` and `j` give congruent tetrahedra.
    congruent: Option<Vec<Vec<bool>>>,
}

fn realize(g: &HalvingGluing, cfg: &PipelineConfig) -> zipfold_core::Result<Tetrahedron3D> {
    let metric = tetra_metric(&GeodesicEngine::new(g, cfg.search))?.metric;
    embed(&metric, cfg.tol.volume2)
}

fn cmd_fold(input: &Path, index: &str, cfg: &PipelineConfig, opts: &Options) -> Result<u8> {
    let poly = read_polygon(input, cfg)?;
    let gluings = if index == "all" {
        enumerate_halvings(&poly, &cfg.tol)?
    } else {
        let i: usize = index
            .parse()
            .with_context(|| format!("fold index must be a number or \"all\", got {index:?}"))?;
        vec![glue_halving(&poly, i, &cfg.tol)?]
    };
    let angles = validate(&poly, &cfg.tol).angles;
    let mut entries = Vec::new();
    let mut tets = Vec::new();
    let mut failed = false;
    for g in &gluings {
        let curv = cone_angles(g, &cfg.tol)?;
        let mut entry = FoldEntry {
            fold: g.fold(),
            gluing: GluingReport::new(g),
            curvatures: curv.values(),
            gauss_bonnet_residual: g.gauss_bonnet_residual(),
            halved_table: halved_table_diagnostic(g),
            metric: None,
            volume2: None,
            flat: None,
            obj: None,
            error: None,
        };
        if g.cone_points().len() == 4 {
            match realize(g, cfg) {
                Ok(t) => {
                    entry.metric = Some(t.metric().d);
                    entry.volume2 = Some(t.volume2);
                    entry.flat = Some(t.flat);
                    let name = format!("fold_{}.obj", g.fold());
                    write(&opts.out_dir, &name, &to_obj(&t, &format!("fold_{}", g.fold())))?;
                    entry.obj = Some(name);
                    tets.push(t);
                }
                Err(e) => {
                    failed = true;
                    entry.error = Some(e.to_string());
                }
            }
        }
        eprintln!(
            "fold {}: curvatures [{}], Gauss-Bonnet residual {:.2e}",
            g.fold(),
            curv.values().iter().map(|w| format!("{w:.9}")).collect::<Vec<_>>().join(", "),
            g.gauss_bonnet_residual()
        );
        entries.push(entry);
    }
    let congruent = (tets.len() == entries.len() && tets.len() > 1).then(|| {
        tets.iter()
            .map(|a| tets.iter().map(|b| congruent_tetrahedra(a, b, cfg.tol.congruence)).collect())
            .collect::<Vec<Vec<bool>>>()
    });
    if let Some(c) = &congruent {
        if c.iter().flatten().all(|x| *x) {
            eprintln!("all tetrahedra are congruent");
        }
    }
    let report = FoldReport {
        n: poly.len(),
        relation_residuals: relation_residuals(&angles),
        angles,
        halvings: entries,
        congruent,
    };
    let json = serde_json::to_string_pretty(&report)?;
    write(&opts.out_dir, "fold_report.json", &json)?;
    println!("{json}");
    Ok(if failed { EXIT_FAIL } else { 0 })
}

fn print_scorecard(audit: &PolygonAudit) {
    let s = &audit.scorecard;
    println!("hypotheses             {}", s.hypotheses.as_str());
    let failures = audit.validation.failures();
    if !failures.is_empty() {
        println!("  failed: {}", failures.join(", "));
    }
    let dependent = audit.independence.dependent().count();
    if dependent > 0 {
        println!("  dependent angle pairs: {dependent}");
    }
    println!("shortest paths         {}", s.shortest_paths.as_str());
    println!("zipper edges           {}", s.zipper_edges.as_str());
    println!("distinct curvatures    {}", s.distinct_curvatures.as_str());
    println!("incongruent tetrahedra {}", s.incongruent_tetrahedra.as_str());
    println!("round trip             {}", s.round_trip.as_str());
    println!("overall                {}", s.overall.as_str());
    for h in &audit.halvings {
        for e in &h.errors {
            println!("  fold {}: {e}", h.fold);
        }
    }
}

fn emit_artifacts(poly: &EquilateralPolygon, audit: &PolygonAudit, cfg: &PipelineConfig, dir: &Path, svg: bool, obj: bool) -> Result<()> {
    if svg {
        write(dir, "polygon.svg", &polygon_svg(poly)?)?;
    }
    for h in &audit.halvings {
        let g = glue_halving(poly, h.fold, &cfg.tol)?;
        if svg {
            if let Ok(m) = tetra_metric(&GeodesicEngine::new(&g, cfg.search)) {
                write(dir, &format!("geodesics_{}.svg", h.fold), &geodesic_svg(&g, &m.paths)?)?;
            }
        }
        let Some(r) = &h.realization else { continue };
        if svg {
            let al = congruent_to_polygon(&r.net, poly, cfg.tol.congruence);
            write(dir, &format!("net_{}.svg", h.fold), &net_svg(&r.net)?)?;
            write(dir, &format!("overlay_{}.svg", h.fold), &overlay_svg(&g, &r.net, &al)?)?;
        }
        if obj {
            let name = format!("fold_{}", h.fold);
            write(dir, &format!("{name}.obj"), &to_obj(&r.tetrahedron, &name))?;
        }
    }
    Ok(())
}

fn cmd_verify(input: &Path, cfg: &PipelineConfig, opts: &Options, everything: bool) -> Result<u8> {
    let poly = read_polygon(input, cfg)?;
    let audit = audit_polygon(&poly, cfg)?;
    print_scorecard(&audit);
    if audit.halvings.is_empty() && audit.scorecard.hypotheses == Verdict::Fail {
        println!("checks skipped; pass --force to run them anyway");
    }
    let name = if everything { "report.json" } else { "audit.json" };
    write(&opts.out_dir, name, &serde_json::to_string_pretty(&audit)?)?;
    if everything {
        write(&opts.out_dir, "polygon.json", &polygon_to_json(&poly))?;
    }
    emit_artifacts(
        &poly,
        &audit,
        cfg,
        &opts.out_dir,
        everything || opts.emit_svg,
        everything || opts.emit_obj,
    )?;
    Ok(exit_code(audit.scorecard.overall))
}

#[derive(Serialize)]
struct SweepMetadata {
    n: usize,
    first_seed: u64,
    count: u64,
    threads: usize,
    total_ms: f64,
    elapsed_ms: Vec<(u64, f64)>,
}

fn sweep_record(seed: u64, sampler: &SamplerConfig, cfg: &PipelineConfig) -> (SweepRecord, Option<EquilateralPolygon>) {
    let start = Instant::now();
    let mut rec = SweepRecord {
        seed,
        n: sampler.n,
        attempts: 0,
        angles: Vec::new(),
        audit: None,
        error: None,
        elapsed_ms: 0.0,
    };
    let mut poly = None;
    match sample_polygon(sampler, seed) {
        Ok(s) => {
            rec.attempts = s.attempts;
            rec.angles = validate(&s.polygon, &cfg.tol).angles;
            match audit_polygon(&s.polygon, cfg) {
                Ok(a) => rec.audit = Some(a),
                Err(e) => rec.error = Some(e.to_string()),
            }
            poly = Some(s.polygon);
        }
        Err(e) => rec.error = Some(e.to_string()),
    }
    rec.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    (rec, poly)
}

fn cmd_sweep(n: usize, seed: u64, count: u64, cfg: &PipelineConfig, opts: &Options, emit_polygons: bool) -> Result<u8> {
    if n < 6 || !n.is_multiple_of(2) {
        bail!("--n must be an even number of at least 6, got {n}");
    }
    let Some(end) = seed.checked_add(count) else {
        bail!("seed range overflows");
    };
    // Outside the hypotheses on request: any convex polygon, audited regardless.
    let sampler = if cfg.force { SamplerConfig::convex(n) } else { SamplerConfig::fat(n) };
    let start = Instant::now();
    let results: Vec<(SweepRecord, Option<EquilateralPolygon>)> =
        (seed..end).into_par_iter().map(|s| sweep_record(s, &sampler, cfg)).collect();
    let total_ms = start.elapsed().as_secs_f64() * 1e3;

    if emit_polygons {
        for (rec, poly) in &results {
            if let Some(p) = poly {
                write(&opts.out_dir, &format!("sample_{}.json", rec.seed), &polygon_to_json(p))?;
            }
        }
    }
    let records: Vec<SweepRecord> = results.into_iter().map(|(r, _)| r).collect();
    let mut csv = Vec::new();
    write_sweep_csv(&mut csv, &records)?;
    let stem = if emit_polygons { "sample" } else { "sweep" };
    let path = write(&opts.out_dir, &format!("{stem}.csv"), std::str::from_utf8(&csv)?)?;
    let meta = SweepMetadata {
        n,
        first_seed: seed,
        count,
        threads: rayon::current_num_threads(),
        total_ms,
        elapsed_ms: records.iter().map(|r| (r.seed, r.elapsed_ms)).collect(),
    };
    write(&opts.out_dir, &format!("{stem}_meta.json"), &serde_json::to_string_pretty(&meta)?)?;

    let overall = Verdict::all(records.iter().map(|r| match r.scorecard() {
        Some(s) => s.overall,
        None => Verdict::Inconclusive,
    }));
    let passed = records
        .iter()
        .filter(|r| r.scorecard().is_some_and(|s| s.overall == Verdict::Pass))
        .count();
    println!("{passed}/{} samples pass, csv at {}", records.len(), path.display());
    Ok(exit_code(overall))
}
