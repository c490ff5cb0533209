use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use ordered_float::OrderedFloat;
use serde::Serialize;

use crate::geom::{cross, line_intersection, point_segment_distance, Isometry2, Vec2};
use crate::gluing::HalvingGluing;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    /// Cap on expanded developments per query; hitting it makes the result
    /// partial or inconclusive.
    pub max_developments: usize,
    /// Minimum distance between a path interior and any cone point image.
    pub clearance: f64,
    /// Rounding step for development deduplication keys.
    pub dedup_granularity: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_developments: 100_000,
            clearance: 1e-9,
            dedup_granularity: 1e-8,
        }
    }
}

/// One polygon copy placed in the plane of the base copy.
#[derive(Clone, Debug, Serialize)]
pub struct Development {
    /// Maps polygon coordinates of this copy into the base plane.
    pub transform: Isometry2,
    /// Local edge indices crossed, each in the frame of the copy being left.
    pub crossings: Vec<usize>,
    /// Local edge through which this copy was entered.
    pub entry_edge: Option<usize>,
    /// Portion of the entry edge visible from the source, in the base plane,
    /// ordered counterclockwise around the source.
    pub window: [Vec2; 2],
    /// Distance from the source to the window.
    pub lower_bound: f64,
}

/// A straight geodesic between two cone points, as a developed segment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GeodesicPath {
    pub source: usize,
    pub target: usize,
    pub source_vertex: usize,
    pub target_vertex: usize,
    pub length: f64,
    pub crossings: Vec<usize>,
    /// Transform of every copy the path visits, base copy first.
    pub copies: Vec<Isometry2>,
    pub target_image: Vec2,
    /// The part of the path inside each visited copy, in that copy's own
    /// polygon coordinates.
    pub segments: Vec<[Vec2; 2]>,
    /// Set when the path runs along a boundary edge: that edge and its twin.
    pub seam: Option<[usize; 2]>,
}

impl GeodesicPath {
    fn dedup_key(&self) -> PathKey {
        match self.seam {
            Some([a, b]) => PathKey::Seam(a.min(b)),
            None => PathKey::Interior(self.source_vertex, self.crossings.clone(), self.target_vertex),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum PathKey {
    Seam(usize),
    Interior(usize, Vec<usize>, usize),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Lookup {
    Found(GeodesicPath),
    NotFound { budget: f64 },
    Inconclusive { developments: usize },
}

impl Lookup {
    pub fn path(&self) -> Option<&GeodesicPath> {
        match self {
            Lookup::Found(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Enumeration {
    pub paths: Vec<GeodesicPath>,
    /// The development cap was reached before the budget was exhausted.
    pub partial: bool,
    pub developments: usize,
    /// Candidates dropped for passing too close to a cone point.
    pub rejected_near_cone: usize,
}

struct Explored {
    paths: Vec<GeodesicPath>,
    developments: usize,
    truncated: bool,
    rejected_near_cone: usize,
}

#[derive(Clone, Copy)]
enum Mode {
    Shortest,
    All,
}

/// Geodesic queries on one glued surface.
pub struct GeodesicEngine<'g> {
    gluing: &'g HalvingGluing,
    transitions: Vec<Isometry2>,
    cfg: SearchConfig,
}

impl<'g> GeodesicEngine<'g> {
    pub fn new(gluing: &'g HalvingGluing, cfg: SearchConfig) -> Self {
        let transitions = (0..gluing.n()).map(|e| transition(gluing, e)).collect();
        Self {
            gluing,
            transitions,
            cfg,
        }
    }

    pub fn gluing(&self) -> &HalvingGluing {
        self.gluing
    }

    pub fn config(&self) -> &SearchConfig {
        &self.cfg
    }

    /// Map taking the neighbour copy across local edge `e` into this copy's frame.
    pub fn transition(&self, e: usize) -> &Isometry2 {
        &self.transitions[e]
    }

    /// Composes transitions along a crossing sequence, one transform per copy.
    pub fn develop(&self, crossings: &[usize]) -> Vec<Isometry2> {
        let mut out = Vec::with_capacity(crossings.len() + 1);
        let mut t = Isometry2::identity();
        out.push(t);
        for &e in crossings {
            t = t.compose(&self.transitions[e]);
            out.push(t);
        }
        out
    }

    fn vertex(&self, v: usize) -> Vec2 {
        self.gluing.polygon().vertex(v)
    }

    fn check_cone(&self, c: usize) -> Result<()> {
        if c >= self.gluing.cone_points().len() {
            return Err(Error::MalformedInput(format!("no cone point {c}")));
        }
        Ok(())
    }

    /// Shortest geodesic from `src` to `dst` of length at most `budget`.
    pub fn shortest_geodesic(&self, src: usize, dst: usize, budget: f64) -> Result<Lookup> {
        self.check_cone(src)?;
        self.check_cone(dst)?;
        if src == dst {
            return Err(Error::MalformedInput("source and target coincide".into()));
        }
        if !(budget > 0.0) {
            return Err(Error::MalformedInput("budget must be positive".into()));
        }
        let targets = self.cone_mask(&[dst]);
        let out = self.explore(src, &targets, budget, Mode::Shortest);
        Ok(self.best_of(out, budget))
    }

    /// Every geodesic from `src` to `dst` no longer than `budget`, shortest first.
    pub fn enumerate_geodesics(&self, src: usize, dst: usize, budget: f64) -> Result<Enumeration> {
        self.check_cone(src)?;
        self.check_cone(dst)?;
        if src == dst {
            return Err(Error::MalformedInput("source and target coincide".into()));
        }
        let targets = self.cone_mask(&[dst]);
        let out = self.explore(src, &targets, budget, Mode::All);
        let mut seen = HashSet::new();
        let mut paths: Vec<GeodesicPath> = out
            .paths
            .into_iter()
            .filter(|p| seen.insert(p.dedup_key()))
            .collect();
        paths.sort_by(|a, b| a.length.total_cmp(&b.length));
        Ok(Enumeration {
            paths,
            partial: out.truncated,
            developments: out.developments,
            rejected_near_cone: out.rejected_near_cone,
        })
    }

    /// Nearest cone point other than `src` within `budget` (any target).
    pub(crate) fn nearest_other(&self, src: usize, budget: f64) -> Result<Lookup> {
        self.check_cone(src)?;
        let others: Vec<usize> = (0..self.gluing.cone_points().len())
            .filter(|&c| c != src)
            .collect();
        let targets = self.cone_mask(&others);
        let out = self.explore(src, &targets, budget, Mode::Shortest);
        Ok(self.best_of(out, budget))
    }

    fn best_of(&self, out: Explored, budget: f64) -> Lookup {
        let best = out
            .paths
            .into_iter()
            .min_by(|a, b| a.length.total_cmp(&b.length));
        match (best, out.truncated) {
            (Some(p), false) => Lookup::Found(p),
            // A hit found before truncation may not be the shortest.
            (_, true) => Lookup::Inconclusive {
                developments: out.developments,
            },
            (None, false) => Lookup::NotFound { budget },
        }
    }

    fn cone_mask(&self, cones: &[usize]) -> Vec<bool> {
        (0..self.gluing.n())
            .map(|v| cones.contains(&self.gluing.cone_of(v)))
            .collect()
    }

    fn explore(&self, src: usize, targets: &[bool], budget: f64, mode: Mode) -> Explored {
        let n = self.gluing.n();
        let mut arena: Vec<(usize, Development)> = Vec::new();
        let mut heap = BinaryHeap::new();
        let mut seen = HashSet::new();
        let mut out = Explored {
            paths: Vec::new(),
            developments: 0,
            truncated: false,
            rejected_near_cone: 0,
        };

        for &sv in &self.gluing.cone_points()[src].vertices {
            let s = self.vertex(sv);
            // Chords inside the base copy, including the two seams at `sv`.
            for w in (0..n).filter(|&w| w != sv && targets[w]) {
                let len = (self.vertex(w) - s).norm();
                if len > budget {
                    continue;
                }
                let seam = if w == (sv + 1) % n {
                    Some([sv, self.gluing.partner_edge(sv)])
                } else if (w + 1) % n == sv {
                    Some([w, self.gluing.partner_edge(w)])
                } else {
                    None
                };
                self.offer(src, sv, w, &[], seam, &mut out);
            }
            for e in (0..n).filter(|&e| e != sv && (e + 1) % n != sv) {
                let (a, b) = self.gluing.polygon().edge(e);
                if let Some(window) = orient_window(&s, a, b, self.cfg.clearance) {
                    let dev = Development {
                        transform: self.transitions[e],
                        crossings: vec![e],
                        entry_edge: Some(self.gluing.partner_edge(e)),
                        lower_bound: point_segment_distance(&s, &window[0], &window[1]),
                        window,
                    };
                    self.push(sv, dev, budget, &mut arena, &mut heap, &mut seen);
                }
            }
        }

        while let Some(Reverse((lb, id))) = heap.pop() {
            let lb = lb.into_inner();
            if lb > budget {
                break;
            }
            if let Mode::Shortest = mode {
                let best = out.paths.iter().map(|p| p.length).fold(f64::INFINITY, f64::min);
                if best <= lb {
                    break;
                }
            }
            if out.developments >= self.cfg.max_developments {
                out.truncated = true;
                break;
            }
            out.developments += 1;
            let (sv, dev) = arena[id].clone();
            self.expand(src, sv, &dev, targets, budget, &mut out, &mut arena, &mut heap, &mut seen);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn expand(
        &self,
        src: usize,
        sv: usize,
        dev: &Development,
        targets: &[bool],
        budget: f64,
        out: &mut Explored,
        arena: &mut Vec<(usize, Development)>,
        heap: &mut BinaryHeap<Reverse<(OrderedFloat<f64>, usize)>>,
        seen: &mut HashSet<Vec<i64>>,
    ) {
        let n = self.gluing.n();
        let s = self.vertex(sv);
        let entry = dev.entry_edge.expect("child developments have an entry edge");
        let on_entry = |w: usize| w == entry || w == (entry + 1) % n;
        let [p, q] = dev.window;
        let (dp, dq) = (p - s, q - s);

        for w in (0..n).filter(|&w| targets[w] && !on_entry(w)) {
            let img = dev.transform.apply(&self.vertex(w));
            let d = img - s;
            if d.norm() > budget {
                continue;
            }
            if cross(&dp, &d) > 0.0 && cross(&d, &dq) > 0.0 {
                self.offer(src, sv, w, &dev.crossings, None, out);
            }
        }

        for e in (0..n).filter(|&e| e != entry) {
            let a = dev.transform.apply(&self.vertex(e));
            let b = dev.transform.apply(&self.vertex(e + 1));
            let Some(window) = clip_to_cone(&s, &dp, &dq, a, b, self.cfg.clearance) else {
                continue;
            };
            let mut crossings = dev.crossings.clone();
            crossings.push(e);
            let child = Development {
                transform: dev.transform.compose(&self.transitions[e]),
                crossings,
                entry_edge: Some(self.gluing.partner_edge(e)),
                lower_bound: point_segment_distance(&s, &window[0], &window[1]),
                window,
            };
            self.push(sv, child, budget, arena, heap, seen);
        }
    }

    fn push(
        &self,
        sv: usize,
        dev: Development,
        budget: f64,
        arena: &mut Vec<(usize, Development)>,
        heap: &mut BinaryHeap<Reverse<(OrderedFloat<f64>, usize)>>,
        seen: &mut HashSet<Vec<i64>>,
    ) {
        if dev.lower_bound > budget {
            return;
        }
        let g = self.cfg.dedup_granularity;
        let r = |x: f64| (x / g).round() as i64;
        let t = &dev.transform;
        let key = vec![
            sv as i64,
            dev.entry_edge.map_or(-1, |e| e as i64),
            r(t.linear[(0, 0)]),
            r(t.linear[(0, 1)]),
            r(t.linear[(1, 0)]),
            r(t.linear[(1, 1)]),
            r(t.translation.x),
            r(t.translation.y),
            r(dev.window[0].x),
            r(dev.window[0].y),
            r(dev.window[1].x),
            r(dev.window[1].y),
        ];
        if !seen.insert(key) {
            return;
        }
        heap.push(Reverse((OrderedFloat(dev.lower_bound), arena.len())));
        arena.push((sv, dev));
    }

    /// Builds the candidate from its crossing sequence and keeps it only if
    /// it re-verifies.
    fn offer(
        &self,
        src: usize,
        sv: usize,
        tv: usize,
        crossings: &[usize],
        seam: Option<[usize; 2]>,
        out: &mut Explored,
    ) {
        match self.trace(src, sv, tv, crossings, seam) {
            Some(path) => out.paths.push(path),
            None => out.rejected_near_cone += 1,
        }
    }

    fn trace(
        &self,
        src: usize,
        sv: usize,
        tv: usize,
        crossings: &[usize],
        seam: Option<[usize; 2]>,
    ) -> Option<GeodesicPath> {
        let n = self.gluing.n();
        let copies = self.develop(crossings);
        let s = self.vertex(sv);
        let t = copies.last().unwrap().apply(&self.vertex(tv));
        let clearance = self.cfg.clearance;

        // Parameters along s→t where the path leaves each copy.
        let mut params = Vec::with_capacity(crossings.len() + 2);
        params.push(0.0);
        let mut entry: Option<usize> = None;
        for (k, &e) in crossings.iter().enumerate() {
            if entry == Some(e) {
                return None;
            }
            let a = copies[k].apply(&self.vertex(e));
            let b = copies[k].apply(&self.vertex(e + 1));
            let (lambda, mu) = line_intersection(&s, &t, &a, &b)?;
            let edge_len = (b - a).norm();
            let prev = *params.last().unwrap();
            if !(lambda > prev && lambda < 1.0) {
                return None;
            }
            if mu * edge_len < clearance || (1.0 - mu) * edge_len < clearance {
                return None;
            }
            params.push(lambda);
            entry = Some(self.gluing.partner_edge(e));
        }
        params.push(1.0);

        let at = |lambda: f64| s + (t - s) * lambda;
        let mut segments = Vec::with_capacity(copies.len());
        for (k, copy) in copies.iter().enumerate() {
            let (p0, p1) = (at(params[k]), at(params[k + 1]));
            for w in 0..n {
                let is_start = k == 0 && w == sv;
                let is_end = k == copies.len() - 1 && w == tv;
                if is_start || is_end {
                    continue;
                }
                let img = copy.apply(&self.vertex(w));
                if point_segment_distance(&img, &p0, &p1) < clearance {
                    return None;
                }
            }
            let inv = copy.inverse();
            segments.push([inv.apply(&p0), inv.apply(&p1)]);
        }

        Some(GeodesicPath {
            source: src,
            target: self.gluing.cone_of(tv),
            source_vertex: sv,
            target_vertex: tv,
            length: (t - s).norm(),
            crossings: crossings.to_vec(),
            copies,
            target_image: t,
            segments,
            seam,
        })
    }

    /// Redevelops a path from its crossing sequence and returns its length.
    pub fn verify(&self, path: &GeodesicPath) -> Result<f64> {
        let again = self
            .trace(path.source, path.source_vertex, path.target_vertex, &path.crossings, path.seam)
            .ok_or_else(|| {
                Error::InvalidMetric("path does not re-verify against the gluing".into())
            })?;
        Ok(again.length)
    }
}

/// The rigid map placing the neighbour copy across edge `e` so that its
/// partner edge lands on `e` with matching vertices, on the far side of `e`.
fn transition(gluing: &HalvingGluing, e: usize) -> Isometry2 {
    let poly = gluing.polygon();
    let p = gluing.partner_edge(e);
    // v_{p+1} ~ v_e and v_p ~ v_{e+1}.
    let src = (poly.vertex(p + 1), poly.vertex(p));
    let dst = (poly.vertex(e), poly.vertex(e + 1));
    let centroid = poly.centroid();
    let side = |x: &Vec2| cross(&(dst.1 - dst.0), &(x - dst.0));
    let own = side(&centroid);
    [false, true]
        .into_iter()
        .map(|reflected| Isometry2::from_segments(src, dst, reflected))
        .find(|m| side(&m.apply(&centroid)) * own < 0.0)
        .expect("one of the two edge maps sends the polygon across the edge")
}

/// Orders the window `[a, b]` counterclockwise around `s`; `None` if it is
/// too narrow to carry a path that clears its endpoints.
fn orient_window(s: &Vec2, a: Vec2, b: Vec2, clearance: f64) -> Option<[Vec2; 2]> {
    if (b - a).norm() < 2.0 * clearance {
        return None;
    }
    let c = cross(&(a - s), &(b - s));
    if c > 0.0 {
        Some([a, b])
    } else if c < 0.0 {
        Some([b, a])
    } else {
        None
    }
}

/// The part of segment `ab` inside the open cone from `s` spanned
/// counterclockwise from `dp` to `dq`.
fn clip_to_cone(s: &Vec2, dp: &Vec2, dq: &Vec2, a: Vec2, b: Vec2, clearance: f64) -> Option<[Vec2; 2]> {
    let f1 = |x: &Vec2| cross(dp, &(x - s));
    let f2 = |x: &Vec2| cross(&(x - s), dq);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for (fa, fb) in [(f1(&a), f1(&b)), (f2(&a), f2(&b))] {
        // Keep t with fa + t (fb - fa) >= 0.
        let slope = fb - fa;
        if slope == 0.0 {
            if fa < 0.0 {
                return None;
            }
        } else {
            let root = -fa / slope;
            if slope > 0.0 {
                lo = lo.max(root);
            } else {
                hi = hi.min(root);
            }
        }
    }
    if !(hi > lo) {
        return None;
    }
    let x0 = a + (b - a) * lo;
    let x1 = a + (b - a) * hi;
    orient_window(s, x0, x1, clearance)
}
