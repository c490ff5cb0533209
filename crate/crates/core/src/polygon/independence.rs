//! Screening angle pairs for rational dependence `y = aπ + bx`.
//!
//! Exact independence over ℚ cannot be decided in floating point. A pair is
//! reported dependent when some `a = p/q`, `b = r/s` with all four integers
//! bounded by `D` reproduces `y` within tolerance, and "independent up to D"
//! otherwise.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

pub const DEFAULT_INDEPENDENCE_BOUND: u32 = 16;

/// Residuals within this multiple of the tolerance are reported as near misses.
const NEAR_MISS_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Self {
            num: sign * num / g.max(1),
            den: sign * den / g.max(1),
        }
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn height(&self) -> i64 {
        self.num.abs().max(self.den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Witness `y = pi_coeff·π + x_coeff·x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Relation {
    pub pi_coeff: Rational,
    pub x_coeff: Rational,
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PairStatus {
    /// `y_index` angle expressed through the `x_index` angle.
    Dependent {
        x_index: usize,
        y_index: usize,
        relation: Relation,
    },
    /// Closest candidate landed within a few tolerances without a hit.
    Inconclusive { closest_residual: f64 },
    Independent,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub status: PairStatus,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependenceReport {
    pub pairs: Vec<PairVerdict>,
    pub bound: u32,
    pub tol: f64,
}

impl IndependenceReport {
    pub fn dependent(&self) -> impl Iterator<Item = &PairVerdict> {
        self.pairs
            .iter()
            .filter(|p| matches!(p.status, PairStatus::Dependent { .. }))
    }

    /// No pair is dependent or inconclusive.
    pub fn all_independent(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| matches!(p.status, PairStatus::Independent))
    }
}

/// Reduced fractions `p/q` with `|p| <= bound`, `1 <= q <= bound`.
fn fractions(bound: u32) -> Vec<Rational> {
    let d = bound as i64;
    let mut out = Vec::new();
    for q in 1..=d {
        for p in -d..=d {
            if gcd(p.unsigned_abs(), q as u64) == 1 {
                out.push(Rational { num: p, den: q });
            }
        }
    }
    out
}

struct Search {
    residual: f64,
    relation: Option<Relation>,
}

fn search(x: f64, y: f64, tol: f64, table: &[Rational]) -> Search {
    // `table` is sorted by value; the b-candidates are the same set.
    let values: Vec<f64> = table.iter().map(Rational::value).collect();
    let mut best: Option<Relation> = None;
    let mut closest = f64::INFINITY;
    for b in table {
        let target = (y - b.value() * x) / PI;
        let idx = values.partition_point(|v| *v < target);
        for k in [idx.wrapping_sub(1), idx] {
            let Some(a) = table.get(k) else { continue };
            let residual = (y - a.value() * PI - b.value() * x).abs();
            closest = closest.min(residual);
            if residual < tol {
                let cand = Relation {
                    pi_coeff: *a,
                    x_coeff: *b,
                    residual,
                };
                let simpler = match &best {
                    None => true,
                    Some(cur) => complexity(&cand).cmp(&complexity(cur)) == Ordering::Less,
                };
                if simpler {
                    best = Some(cand);
                }
            }
        }
    }
    Search {
        residual: closest,
        relation: best,
    }
}

fn complexity(r: &Relation) -> (i64, i64, i64) {
    let ha = r.pi_coeff.height();
    let hb = r.x_coeff.height();
    (ha.max(hb), ha + hb, r.x_coeff.num.abs())
}

fn sorted_table(bound: u32) -> Vec<Rational> {
    let mut table = fractions(bound);
    table.sort_by(|a, b| a.value().total_cmp(&b.value()));
    table
}

/// The simplest relation `y = aπ + bx` with coefficients bounded by `bound`.
pub fn find_relation(x: f64, y: f64, bound: u32, tol: f64) -> Option<Relation> {
    search(x, y, tol, &sorted_table(bound.max(1))).relation
}

/// Screens every unordered pair of angles, trying both orientations.
pub fn check_independence(angles: &[f64], bound: u32, tol: f64) -> IndependenceReport {
    let bound = bound.max(1);
    let table = sorted_table(bound);
    let mut pairs = Vec::new();
    for i in 0..angles.len() {
        for j in i + 1..angles.len() {
            let fwd = search(angles[i], angles[j], tol, &table);
            let rev = search(angles[j], angles[i], tol, &table);
            let status = match (fwd.relation, rev.relation) {
                (Some(r), None) => dependent(i, j, r),
                (None, Some(r)) => dependent(j, i, r),
                (Some(f), Some(r)) => {
                    if complexity(&r) < complexity(&f) {
                        dependent(j, i, r)
                    } else {
                        dependent(i, j, f)
                    }
                }
                (None, None) => {
                    let closest = fwd.residual.min(rev.residual);
                    if closest < NEAR_MISS_FACTOR * tol {
                        PairStatus::Inconclusive {
                            closest_residual: closest,
                        }
                    } else {
                        PairStatus::Independent
                    }
                }
            };
            pairs.push(PairVerdict { i, j, status });
        }
    }
    IndependenceReport { pairs, bound, tol }
}

fn dependent(x_index: usize, y_index: usize, relation: Relation) -> PairStatus {
    PairStatus::Dependent {
        x_index,
        y_index,
        relation,
    }
}
