//! Exhaustive ground truth for small instances.
//!
//! Edge headings are fixed by the sequence (edge 0 heads East), so a
//! realization is a choice of positive lengths. Horizontal and vertical lengths
//! are independent: each side only has to close up on its own. We enumerate
//! both sides separately and pair them up in an order that allows early exit:
//! by perimeter for the perimeter and area objectives (a polyomino of
//! perimeter `p` has area at least `p/2 - 1`), by bounding-box area otherwise.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::{GridPolygon, Objective, Point};
use crate::sequences::{directions, Direction, Turn, TurnSequence};

pub const DEFAULT_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Upper bound on every edge length.
    pub max_edge_len: i64,
    pub objective: Objective,
    /// Raise the bound as needed and certify the optimum exactly.
    pub escalate: bool,
    /// Refuse sequences longer than this.
    pub max_n: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_edge_len: 4,
            objective: Objective::Area,
            escalate: true,
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl OracleConfig {
    pub fn new(objective: Objective, max_edge_len: i64) -> Self {
        OracleConfig {
            objective,
            max_edge_len,
            ..Default::default()
        }
    }
}

/// All length assignments for one axis, with the resulting coordinates.
struct AxisSide {
    /// Signed unit direction (+1/-1) of each edge on this axis, in edge order.
    signs: Vec<i64>,
    /// Edge indices on this axis.
    edges: Vec<usize>,
}

#[derive(Debug, Clone)]
struct AxisChoice {
    /// Coordinate of every vertex along this axis (vertex 0 at 0).
    coords: Vec<i64>,
    /// Sum of the positive-direction lengths (half the total length).
    half_total: i64,
    /// Extent (max - min coordinate).
    extent: i64,
}

/// Pruning limits for one axis.
#[derive(Debug, Clone, Copy)]
struct Limits {
    max_len: i64,
    /// Bound on the sum of positive-direction lengths.
    max_half: i64,
    /// Bound on the extent.
    max_extent: i64,
}

impl Limits {
    fn edges_only(max_len: i64) -> Self {
        Limits {
            max_len,
            max_half: i64::MAX,
            max_extent: i64::MAX,
        }
    }
}

struct Dfs<'a> {
    side: &'a AxisSide,
    limits: Limits,
    pos_after: Vec<i64>,
    neg_after: Vec<i64>,
    lengths: Vec<i64>,
    n: usize,
    out: Vec<AxisChoice>,
}

impl Dfs<'_> {
    fn run(&mut self, i: usize, sum: i64, half: i64, lo: i64, hi: i64) {
        let k = self.side.edges.len();
        if i == k {
            if sum == 0 {
                let c = self.side.choice(&self.lengths, self.n);
                self.out.push(c);
            }
            return;
        }
        let sign = self.side.signs[i];
        let max_len = self.limits.max_len;
        for len in 1..=max_len {
            let next = sum + sign * len;
            let half2 = if sign > 0 { half + len } else { half };
            // Every remaining positive edge adds at least one.
            if half2 + self.pos_after[i + 1] > self.limits.max_half {
                break;
            }
            let (lo2, hi2) = (lo.min(next), hi.max(next));
            if hi2 - lo2 > self.limits.max_extent {
                break;
            }
            // The remaining edges must be able to bring the sum back to zero.
            let reach_lo = next + self.pos_after[i + 1] - self.neg_after[i + 1] * max_len;
            let reach_hi = next + self.pos_after[i + 1] * max_len - self.neg_after[i + 1];
            if reach_lo > 0 || reach_hi < 0 {
                continue;
            }
            self.lengths[i] = len;
            self.run(i + 1, next, half2, lo2, hi2);
        }
    }
}

impl AxisSide {
    fn enumerate(&self, n: usize, limits: Limits) -> Vec<AxisChoice> {
        let k = self.edges.len();
        let mut pos_after = vec![0i64; k + 1];
        let mut neg_after = vec![0i64; k + 1];
        for i in (0..k).rev() {
            pos_after[i] = pos_after[i + 1] + i64::from(self.signs[i] > 0);
            neg_after[i] = neg_after[i + 1] + i64::from(self.signs[i] < 0);
        }
        let mut dfs = Dfs {
            side: self,
            limits,
            pos_after,
            neg_after,
            lengths: vec![0; k],
            n,
            out: Vec::new(),
        };
        dfs.run(0, 0, 0, 0, 0);
        dfs.out
    }

    /// Number of positive-direction edges: the least possible half total.
    fn min_half(&self) -> i64 {
        self.signs.iter().filter(|&&s| s > 0).count() as i64
    }

    fn choice(&self, lengths: &[i64], n: usize) -> AxisChoice {
        let mut coords = vec![0i64; n];
        let mut pos = 0;
        let mut next_edge = 0;
        for (v, c) in coords.iter_mut().enumerate() {
            *c = pos;
            if next_edge < self.edges.len() && self.edges[next_edge] == v {
                pos += self.signs[next_edge] * lengths[next_edge];
                next_edge += 1;
            }
        }
        let half_total = lengths
            .iter()
            .zip(&self.signs)
            .filter(|(_, &s)| s > 0)
            .map(|(l, _)| l)
            .sum();
        let extent = coords.iter().max().unwrap() - coords.iter().min().unwrap();
        AxisChoice {
            coords,
            half_total,
            extent,
        }
    }
}

fn check_size(s: &TurnSequence, cfg: &OracleConfig) -> Result<()> {
    s.validate()?;
    if s.len() > cfg.max_n {
        return Err(Error::InstanceTooLarge {
            n: s.len(),
            limit: cfg.max_n,
        });
    }
    if cfg.max_edge_len < 1 {
        return Err(Error::NoRealizationWithinBound(cfg.max_edge_len));
    }
    Ok(())
}

fn axis_sides(s: &TurnSequence) -> (AxisSide, AxisSide) {
    let headings = directions(s, Direction::East);
    let mut h = AxisSide {
        signs: vec![],
        edges: vec![],
    };
    let mut v = AxisSide {
        signs: vec![],
        edges: vec![],
    };
    for (i, d) in headings.iter().enumerate() {
        let (dx, dy) = d.unit();
        if dx != 0 {
            h.signs.push(dx);
            h.edges.push(i);
        } else {
            v.signs.push(dy);
            v.edges.push(i);
        }
    }
    (h, v)
}

/// Allocation-free pairwise simplicity test for small polygons.
fn simple_small(xs: &[i64], ys: &[i64]) -> bool {
    let n = xs.len();
    let seg = |i: usize| {
        let j = (i + 1) % n;
        (
            xs[i].min(xs[j]),
            xs[i].max(xs[j]),
            ys[i].min(ys[j]),
            ys[i].max(ys[j]),
        )
    };
    for i in 0..n {
        let (ax0, ax1, ay0, ay1) = seg(i);
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let (bx0, bx1, by0, by1) = seg(j);
            if ax0 <= bx1 && bx0 <= ax1 && ay0 <= by1 && by0 <= ay1 {
                return false;
            }
        }
    }
    true
}

fn twice_area(xs: &[i64], ys: &[i64]) -> i64 {
    let n = xs.len();
    (0..n)
        .map(|i| xs[i] * ys[(i + 1) % n] - xs[(i + 1) % n] * ys[i])
        .sum()
}

fn build(xs: &[i64], ys: &[i64]) -> GridPolygon {
    GridPolygon::new_unchecked(xs.iter().zip(ys).map(|(&x, &y)| Point::new(x, y)).collect())
}

/// Every simple realization with all edge lengths in `[1, max_edge_len]`,
/// vertex 0 pinned at the origin and edge 0 heading East. The order is
/// deterministic.
pub fn enumerate_realizations(s: &TurnSequence, cfg: &OracleConfig) -> Result<Vec<GridPolygon>> {
    check_size(s, cfg)?;
    let n = s.len();
    let (h, v) = axis_sides(s);
    let hs = h.enumerate(n, Limits::edges_only(cfg.max_edge_len));
    let vs = v.enumerate(n, Limits::edges_only(cfg.max_edge_len));
    let mut out = Vec::new();
    for hc in &hs {
        for vc in &vs {
            if simple_small(&hc.coords, &vc.coords) {
                out.push(build(&hc.coords, &vc.coords));
            }
        }
    }
    Ok(out)
}

/// Number of simple realizations within the bound, without materializing them.
pub fn count_realizations(s: &TurnSequence, cfg: &OracleConfig) -> Result<usize> {
    check_size(s, cfg)?;
    let n = s.len();
    let (h, v) = axis_sides(s);
    let hs = h.enumerate(n, Limits::edges_only(cfg.max_edge_len));
    let vs = v.enumerate(n, Limits::edges_only(cfg.max_edge_len));
    Ok(hs
        .iter()
        .map(|hc| {
            vs.iter()
                .filter(|vc| simple_small(&hc.coords, &vc.coords))
                .count()
        })
        .sum())
}

#[derive(Default)]
struct Best {
    value: Option<i64>,
    witness: Option<GridPolygon>,
}

impl Best {
    fn offer(&mut self, value: i64, xs: &[i64], ys: &[i64]) {
        match self.value {
            Some(b) if value > b => {}
            Some(b) if value == b => {
                let cand = build(xs, ys);
                if Some(&cand) < self.witness.as_ref() {
                    self.witness = Some(cand);
                }
            }
            _ => {
                self.value = Some(value);
                self.witness = Some(build(xs, ys));
            }
        }
    }
}

fn group_by<F: Fn(&AxisChoice) -> i64>(
    choices: &[AxisChoice],
    key: F,
) -> BTreeMap<i64, Vec<&AxisChoice>> {
    let mut map: BTreeMap<i64, Vec<&AxisChoice>> = BTreeMap::new();
    for c in choices {
        map.entry(key(c)).or_default().push(c);
    }
    map
}

/// Best realization with edges up to `max_len`. With `budget`, only
/// realizations whose objective is at most `budget` are considered, which
/// allows much larger edge bounds.
fn search(
    s: &TurnSequence,
    objective: Objective,
    max_len: i64,
    budget: Option<i64>,
) -> Option<(i64, GridPolygon)> {
    let n = s.len();
    let (h, v) = axis_sides(s);
    let (mut lh, mut lv) = (Limits::edges_only(max_len), Limits::edges_only(max_len));
    if let Some(b) = budget {
        match objective {
            // perimeter = 2 (half_h + half_v)
            Objective::Perimeter => {
                lh.max_half = b / 2 - v.min_half();
                lv.max_half = b / 2 - h.min_half();
            }
            // area >= half_h + half_v - 1 for a polyomino
            Objective::Area => {
                lh.max_half = b + 1 - v.min_half();
                lv.max_half = b + 1 - h.min_half();
            }
            Objective::Bbox => {
                lh.max_extent = b;
                lv.max_extent = b;
            }
        }
    }
    let hs = h.enumerate(n, lh);
    let vs = v.enumerate(n, lv);
    let mut best = Best::default();
    match objective {
        Objective::Area | Objective::Perimeter => {
            let hg = group_by(&hs, |c| c.half_total);
            let vg = group_by(&vs, |c| c.half_total);
            let max_total =
                hg.keys().last().copied().unwrap_or(0) + vg.keys().last().copied().unwrap_or(0);
            let min_total =
                hg.keys().next().copied().unwrap_or(0) + vg.keys().next().copied().unwrap_or(0);
            for total in min_total..=max_total {
                if let Some(b) = best.value {
                    let done = match objective {
                        Objective::Perimeter => 2 * total > b,
                        _ => total - 1 > b,
                    };
                    if done {
                        break;
                    }
                }
                for (&a, hlist) in &hg {
                    let Some(vlist) = vg.get(&(total - a)) else {
                        continue;
                    };
                    for hc in hlist {
                        for vc in vlist {
                            let value = match objective {
                                Objective::Perimeter => 2 * total,
                                _ => twice_area(&hc.coords, &vc.coords) / 2,
                            };
                            if best.value.is_some_and(|b| value > b) {
                                continue;
                            }
                            if simple_small(&hc.coords, &vc.coords) {
                                best.offer(value, &hc.coords, &vc.coords);
                            }
                        }
                    }
                }
            }
        }
        Objective::Bbox => {
            let hg = group_by(&hs, |c| c.extent);
            let vg = group_by(&vs, |c| c.extent);
            let mut pairs: Vec<(i64, i64, i64)> = hg
                .keys()
                .flat_map(|&w| vg.keys().map(move |&hh| (w * hh, w, hh)))
                .collect();
            pairs.sort();
            for (product, w, hh) in pairs {
                if best.value.is_some_and(|b| product > b) {
                    break;
                }
                for hc in &hg[&w] {
                    for vc in &vg[&hh] {
                        if simple_small(&hc.coords, &vc.coords) {
                            best.offer(product, &hc.coords, &vc.coords);
                        }
                    }
                }
            }
        }
    }
    Some((best.value?, best.witness?))
}

fn max_edge(p: &GridPolygon) -> i64 {
    p.edge_lengths().into_iter().max().unwrap_or(0)
}

/// Minimum objective and a witness.
///
/// Without escalation only edge lengths up to `max_edge_len` are searched.
/// With it, the bound is raised until some realization is found, and the
/// value `v` of the best one is then certified by searching every
/// realization that could match it: no edge of such a polygon is longer than
/// `v`, and its half perimeter (area, perimeter) or extent (bbox) is bounded by
/// `v` too. Ties are broken by the lexicographically smallest vertex list.
pub fn oracle_min(s: &TurnSequence, cfg: &OracleConfig) -> Result<(i64, GridPolygon)> {
    check_size(s, cfg)?;
    if !cfg.escalate {
        return search(s, cfg.objective, cfg.max_edge_len, None)
            .ok_or(Error::NoRealizationWithinBound(cfg.max_edge_len));
    }
    let mut bound = cfg.max_edge_len;
    let first = loop {
        if let Some(found) = search(s, cfg.objective, bound, None) {
            break found;
        }
        bound += 1;
    };
    let v = first.0;
    if max_edge(&first.1) >= v {
        return Ok(first);
    }
    Ok(search(s, cfg.objective, v, Some(v)).expect("the first witness is within budget"))
}

/// All words of length `n` with four more `L`s than `R`s, in lexicographic
/// order (`L < R`). With `dedup`, only the lexicographically smallest rotation
/// of each cyclic class is kept.
pub fn all_sequences(n: usize, dedup: bool) -> Result<Vec<TurnSequence>> {
    if n > DEFAULT_MAX_N {
        return Err(Error::InstanceTooLarge {
            n,
            limit: DEFAULT_MAX_N,
        });
    }
    if n < 4 || !n.is_multiple_of(2) {
        return Ok(vec![]);
    }
    let r = (n - 4) / 2;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        // Bit (n - 1 - i) set means turn i is R, so increasing masks are lexicographic.
        let turns: Vec<Turn> = (0..n)
            .map(|i| {
                if mask >> (n - 1 - i) & 1 == 1 {
                    Turn::R
                } else {
                    Turn::L
                }
            })
            .collect();
        let s = TurnSequence::new(turns);
        if dedup && (1..n).any(|k| s.rotated(k) < s) {
            continue;
        }
        out.push(s);
    }
    Ok(out)
}

/// Smallest and largest minimum area over all sequences of length `n`.
#[allow(non_snake_case)]
pub fn delta_Delta(n: usize) -> Result<(i64, i64)> {
    let seqs = all_sequences(n, true)?;
    if seqs.is_empty() {
        return Err(Error::TooShort(n));
    }
    let cfg = OracleConfig::new(Objective::Area, 3);
    let areas: Result<Vec<i64>> = seqs
        .par_iter()
        .map(|s| oracle_min(s, &cfg).map(|(a, _)| a))
        .collect();
    let areas = areas?;
    Ok((*areas.iter().min().unwrap(), *areas.iter().max().unwrap()))
}
