use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::polygon::{
    check_independence, closure_candidates, validate, EquilateralPolygon,
    DEFAULT_INDEPENDENCE_BOUND,
};
use crate::{Error, Result, Tolerances};

#[derive(Clone, Debug, Serialize)]
pub struct SamplerConfig {
    pub n: usize,
    /// Interior angles of the free chain vertices are drawn from this range.
    pub min_angle: f64,
    pub max_angle: f64,
    pub require_fat: bool,
    pub require_independent: bool,
    pub independence_bound: u32,
    pub max_attempts: usize,
    pub tol: Tolerances,
}

impl SamplerConfig {
    /// Fat, strictly convex, pairwise independent `n`-gons.
    pub fn fat(n: usize) -> Self {
        Self {
            n,
            min_angle: PI / 3.0,
            max_angle: PI,
            require_fat: true,
            require_independent: true,
            independence_bound: DEFAULT_INDEPENDENCE_BOUND,
            max_attempts: 100_000,
            tol: Tolerances::default(),
        }
    }

    /// Any strictly convex equilateral `n`-gon.
    pub fn convex(n: usize) -> Self {
        Self {
            min_angle: 0.0,
            require_fat: false,
            require_independent: false,
            ..Self::fat(n)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Sample {
    pub seed: u64,
    pub attempts: usize,
    pub polygon: EquilateralPolygon,
}

/// Rejection sampling over closure-solver inputs, deterministic in `seed`.
///
/// The chain's interior angles `α_1 .. α_{n-3}` are drawn uniformly, which
/// fixes the first `n - 2` edge directions; the two-link closure then picks
/// the last vertex. Either closure branch may be kept.
pub fn sample_polygon(cfg: &SamplerConfig, seed: u64) -> Result<Sample> {
    if cfg.n < 6 || !cfg.n.is_multiple_of(2) {
        return Err(Error::MalformedInput(format!(
            "sampler needs an even n >= 6, got {}",
            cfg.n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = cfg.min_angle.max(1e-6);
    let hi = cfg.max_angle.min(PI - 1e-6);
    let mut directions = vec![0.0; cfg.n - 2];
    for attempt in 1..=cfg.max_attempts {
        for k in 1..directions.len() {
            let alpha: f64 = rng.random_range(lo..hi);
            directions[k] = directions[k - 1] + (PI - alpha);
        }
        let first: usize = rng.random_range(0..2);
        let Ok(cands) = closure_candidates(&directions) else {
            continue;
        };
        for branch in [first, 1 - first] {
            let Ok(poly) = EquilateralPolygon::new(cands[branch].clone()) else {
                continue;
            };
            if accept(cfg, &poly) {
                return Ok(Sample {
                    seed,
                    attempts: attempt,
                    polygon: poly,
                });
            }
        }
    }
    Err(Error::SamplingExhausted {
        attempts: cfg.max_attempts,
    })
}

fn accept(cfg: &SamplerConfig, poly: &EquilateralPolygon) -> bool {
    let report = validate(poly, &cfg.tol);
    if !(report.equilateral && report.strictly_convex) {
        return false;
    }
    if cfg.require_fat && !report.fat {
        return false;
    }
    if cfg.require_independent {
        let ind = check_independence(&report.angles, cfg.independence_bound, cfg.tol.ang);
        if !ind.all_independent() {
            return false;
        }
    }
    true
}

/// A fat, independent hexagon for `seed`.
pub fn sample_fat_hexagon(seed: u64) -> Result<EquilateralPolygon> {
    sample_polygon(&SamplerConfig::fat(6), seed).map(|s| s.polygon)
}
