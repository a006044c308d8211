//! Exact solvers for x-monotone sequences.
//!
//! All three objectives work on the hull decomposition: the upper hull is a
//! left-to-right list of horizontal edges joined by single vertical steps, the
//! lower hull likewise, and the two are closed off by `e_L` and `e_R`. A
//! drawing is fixed by the width and height of every horizontal edge. It is
//! simple exactly when, at every integer x, every upper edge touching x lies
//! strictly above every lower edge touching x.

use crate::polygon::GridPolygon;
use crate::sequences::{HullDecomposition, Turn};

/// Widths and heights of the horizontal hull edges, left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Drawing {
    pub up_w: Vec<i64>,
    pub up_y: Vec<i64>,
    pub lo_w: Vec<i64>,
    pub lo_y: Vec<i64>,
}

impl Drawing {
    /// Builds a drawing from a monotone path of (upper, lower) cells, one cell
    /// per unit column.
    pub(crate) fn from_columns(
        k: usize,
        m: usize,
        cells: &[(usize, usize)],
        up_y: Vec<i64>,
        lo_y: Vec<i64>,
    ) -> Drawing {
        let mut up_w = vec![0; k];
        let mut lo_w = vec![0; m];
        for &(i, j) in cells {
            up_w[i] += 1;
            lo_w[j] += 1;
        }
        Drawing {
            up_w,
            up_y,
            lo_w,
            lo_y,
        }
    }

    pub fn polygon(&self, d: &HullDecomposition) -> GridPolygon {
        let n = d.sequence.len();
        let mut lengths = vec![0i64; n];
        let up = d.upper_ltr();
        let lo = d.lower_ltr();
        for (i, &e) in up.iter().enumerate() {
            lengths[e] = self.up_w[i];
            if i + 1 < up.len() {
                lengths[(up[i + 1] + 1) % n] = (self.up_y[i + 1] - self.up_y[i]).abs();
            }
        }
        for (j, &e) in lo.iter().enumerate() {
            lengths[e] = self.lo_w[j];
            if j + 1 < lo.len() {
                lengths[(e + 1) % n] = (self.lo_y[j + 1] - self.lo_y[j]).abs();
            }
        }
        lengths[d.left_edge] = self.up_y[0] - self.lo_y[0];
        lengths[d.right_edge] = self.up_y[up.len() - 1] - self.lo_y[lo.len() - 1];
        GridPolygon::trace(&d.sequence, d.start, &lengths)
            .expect("hull drawing closes by construction")
            .normalized()
    }
}

/// Prefix sums of unit steps: hull heights relative to the first edge.
pub(crate) fn relative_heights(steps: &[i64]) -> Vec<i64> {
    let mut y = vec![0];
    for s in steps {
        y.push(y.last().unwrap() + s);
    }
    y
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Upper,
    Lower,
    Both,
}

impl Move {
    fn code(self) -> u8 {
        match self {
            Move::Upper => 0,
            Move::Lower => 1,
            Move::Both => 2,
        }
    }

    fn from_code(c: u8) -> Move {
        [Move::Upper, Move::Lower, Move::Both][c as usize]
    }

    /// Predecessor cell, if it exists.
    fn back(self, i: usize, j: usize) -> Option<(usize, usize)> {
        match self {
            Move::Upper if i > 0 => Some((i - 1, j)),
            Move::Lower if j > 0 => Some((i, j - 1)),
            Move::Both if i > 0 && j > 0 => Some((i - 1, j - 1)),
            _ => None,
        }
    }
}

const MOVES: [Move; 3] = [Move::Upper, Move::Lower, Move::Both];

/// Minimum bounding box `(w, h, witness)`.
///
/// For a fixed height `H`, pushing every upper edge as high and every lower
/// edge as low as unit steps allow keeps any simple drawing simple and within
/// the same box. With those heights fixed, the narrowest drawing is a
/// shortest monotone path through the feasible (upper, lower) cells.
pub fn x_min_bbox(d: &HullDecomposition) -> (i64, i64, GridPolygon) {
    let (up_steps, lo_steps) = (d.upper_steps(), d.lower_steps());
    let (k, m) = (up_steps.len() + 1, lo_steps.len() + 1);
    let n = d.sequence.len() as i64;
    let min_width = k.max(m) as i64;
    // (w, h, cells, upper ys, lower ys) of the best drawing so far.
    type Best = (i64, i64, Vec<(usize, usize)>, Vec<i64>, Vec<i64>);
    let mut best: Option<Best> = None;
    for h in 1..=n {
        if let Some((w, bh, ..)) = &best {
            if min_width * h >= w * bh {
                break;
            }
        }
        let up_y = canonical_upper(&up_steps, h);
        let lo_y = canonical_lower(&lo_steps);
        if let Some(cells) = narrowest_path(&up_y, &lo_y) {
            let w = cells.len() as i64;
            if best.as_ref().is_none_or(|(bw, bh, ..)| w * h < bw * bh) {
                best = Some((w, h, cells, up_y, lo_y));
            }
        }
    }
    let (w, h, cells, up_y, lo_y) = best.expect("some height up to n is always feasible");
    let drawing = Drawing::from_columns(k, m, &cells, up_y, lo_y);
    (w, h, drawing.polygon(d))
}

/// Lengths of the runs of `dir` steps starting at each edge going right, and
/// of `-dir` steps ending at each edge coming from the left.
fn runs(steps: &[i64], dir: i64) -> Vec<i64> {
    let k = steps.len() + 1;
    let mut right = vec![0i64; k];
    for i in (0..k - 1).rev() {
        right[i] = if steps[i] == dir { right[i + 1] + 1 } else { 0 };
    }
    let mut left = vec![0i64; k];
    for i in 1..k {
        left[i] = if steps[i - 1] == -dir {
            left[i - 1] + 1
        } else {
            0
        };
    }
    right.iter().zip(&left).map(|(a, b)| *a.max(b)).collect()
}

pub(crate) fn canonical_upper(steps: &[i64], h: i64) -> Vec<i64> {
    runs(steps, 1).into_iter().map(|r| h - r).collect()
}

pub(crate) fn canonical_lower(steps: &[i64]) -> Vec<i64> {
    runs(steps, -1)
}

/// Shortest monotone cell path from (0,0) to (k-1,m-1) keeping the upper hull
/// strictly above the lower one at every column boundary.
pub(crate) fn narrowest_path(up_y: &[i64], lo_y: &[i64]) -> Option<Vec<(usize, usize)>> {
    let (k, m) = (up_y.len(), lo_y.len());
    if up_y[0] <= lo_y[0] {
        return None;
    }
    // Rolling rows of path lengths (0 = unreachable); predecessors per cell.
    let mut prev = vec![0u32; m];
    let mut cur = vec![0u32; m];
    let mut pred = vec![0u8; k * m];
    for i in 0..k {
        cur.fill(0);
        if i == 0 {
            cur[0] = 1;
        }
        for j in 0..m {
            if (i, j) == (0, 0) || up_y[i] <= lo_y[j] {
                continue;
            }
            for mv in MOVES {
                let Some((pi, pj)) = mv.back(i, j) else {
                    continue;
                };
                let pd = if pi == i { cur[pj] } else { prev[pj] };
                if pd == 0 || up_y[i].min(up_y[pi]) <= lo_y[j].max(lo_y[pj]) {
                    continue;
                }
                if cur[j] == 0 || pd + 1 < cur[j] {
                    cur[j] = pd + 1;
                    pred[i * m + j] = mv.code();
                }
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    if prev[m - 1] == 0 {
        return None;
    }
    Some(backtrack(k - 1, m - 1, |i, j| {
        Move::from_code(pred[i * m + j])
    }))
}

fn backtrack(
    mut i: usize,
    mut j: usize,
    pred: impl Fn(usize, usize) -> Move,
) -> Vec<(usize, usize)> {
    let mut cells = vec![(i, j)];
    while (i, j) != (0, 0) {
        (i, j) = pred(i, j).back(i, j).expect("predecessor exists");
        cells.push((i, j));
    }
    cells.reverse();
    cells
}

fn min_opt(a: Option<(i64, usize)>, b: Option<(i64, usize)>) -> Option<(i64, usize)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Whether a column with gap `h2` may follow a column with gap `h1` when the
/// hulls advance according to `mv` (`su`, `sl`: +1 if that hull rises).
fn gap_step_ok(mv: Move, su: i64, sl: i64, h1: i64, h2: i64) -> bool {
    match (mv, su, sl) {
        (Move::Upper, 1, _) => h2 > h1,
        (Move::Upper, _, _) => h2 < h1,
        (Move::Lower, _, 1) => h2 < h1,
        (Move::Lower, _, _) => h2 > h1,
        (Move::Both, 1, -1) => h2 >= h1 + 2,
        (Move::Both, -1, 1) => h2 <= h1 - 2,
        (Move::Both, _, _) => h1 >= 2 && h2 >= 2,
    }
}

/// Minimum area `(area, witness)`.
///
/// In an area-minimal drawing every (upper, lower) edge pair shares at most
/// one column, so a drawing is a monotone cell path where each column has a
/// gap `h`. `T[i][j][h]` is the least area left of and including the column
/// of cell `(i, j)` with gap `h`; whether gap `h2` may follow `h1` depends only
/// on which hulls step and in which direction.
pub fn x_min_area(d: &HullDecomposition) -> (i64, GridPolygon) {
    area_dp(d, false)
}

/// The valid predecessor gaps for gap `h2` form an interval (empty if
/// `lo > hi`).
fn gap_interval(mv: Move, su: i64, sl: i64, h2: usize, hmax: usize) -> (usize, usize) {
    let below = |d: usize| (1, h2.saturating_sub(d));
    let above = |d: usize| (h2 + d, hmax);
    match (mv, su, sl) {
        (Move::Upper, 1, _) => below(1),
        (Move::Upper, _, _) => above(1),
        (Move::Lower, _, 1) => above(1),
        (Move::Lower, _, _) => below(1),
        (Move::Both, 1, -1) => below(2),
        (Move::Both, -1, 1) => above(2),
        (Move::Both, _, _) if h2 >= 2 => (2, hmax),
        (Move::Both, _, _) => (1, 0),
    }
}

/// Same table as [`x_min_area`], but each transition reads a prefix or suffix
/// minimum instead of scanning all predecessor gaps: `O(n^3)` instead of
/// `O(n^4)`.
pub(crate) fn x_min_area_fast(d: &HullDecomposition) -> (i64, GridPolygon) {
    area_dp(d, true)
}

fn area_dp(d: &HullDecomposition, fast: bool) -> (i64, GridPolygon) {
    let (up_steps, lo_steps) = (d.upper_steps(), d.lower_steps());
    let (k, m) = (up_steps.len() + 1, lo_steps.len() + 1);
    let hmax = d.sequence.len().max(2);
    let idx = |i: usize, j: usize, h: usize| (i * m + j) * (hmax + 1) + h;
    let mut table: Vec<Option<i64>> = vec![None; k * m * (hmax + 1)];
    // Predecessor move and gap for backtracking.
    let mut pred: Vec<(u8, u32)> = vec![(0, 0); k * m * (hmax + 1)];
    for h in 1..=hmax {
        table[idx(0, 0, h)] = Some(h as i64);
    }
    for i in 0..k {
        for j in 0..m {
            if (i, j) == (0, 0) {
                continue;
            }
            for mv in MOVES {
                let Some((pi, pj)) = mv.back(i, j) else {
                    continue;
                };
                let su = if pi < i { up_steps[pi] } else { 0 };
                let sl = if pj < j { lo_steps[pj] } else { 0 };
                if fast {
                    // Running minima (value, gap) from below and from above.
                    let mut pre = vec![None::<(i64, usize)>; hmax + 2];
                    let mut suf = vec![None::<(i64, usize)>; hmax + 2];
                    for h1 in 1..=hmax {
                        let here = table[idx(pi, pj, h1)].map(|v| (v, h1));
                        pre[h1] = min_opt(pre[h1 - 1], here);
                    }
                    for h1 in (1..=hmax).rev() {
                        let here = table[idx(pi, pj, h1)].map(|v| (v, h1));
                        suf[h1] = min_opt(suf[h1 + 1], here);
                    }
                    for h2 in 1..=hmax {
                        let (lo, hi) = gap_interval(mv, su, sl, h2, hmax);
                        let best = if lo > hi {
                            None
                        } else if lo == 1 {
                            pre[hi]
                        } else {
                            suf[lo]
                        };
                        let Some((prev, h1)) = best else { continue };
                        let cand = prev + h2 as i64;
                        let slot = idx(i, j, h2);
                        if table[slot].is_none_or(|t| cand < t) {
                            table[slot] = Some(cand);
                            pred[slot] = (mv.code(), h1 as u32);
                        }
                    }
                    continue;
                }
                for h2 in 1..=hmax {
                    for h1 in 1..=hmax {
                        let Some(prev) = table[idx(pi, pj, h1)] else {
                            continue;
                        };
                        if !gap_step_ok(mv, su, sl, h1 as i64, h2 as i64) {
                            continue;
                        }
                        let cand = prev + h2 as i64;
                        let slot = idx(i, j, h2);
                        if table[slot].is_none_or(|t| cand < t) {
                            table[slot] = Some(cand);
                            pred[slot] = (mv.code(), h1 as u32);
                        }
                    }
                }
            }
        }
    }
    let (area, mut h) = (1..=hmax)
        .filter_map(|h| table[idx(k - 1, m - 1, h)].map(|a| (a, h)))
        .min()
        .expect("some gap is always feasible");
    // Walk back collecting (cell, gap, move into the cell).
    let (mut i, mut j) = (k - 1, m - 1);
    let mut path = vec![(i, j, h as i64, None)];
    while (i, j) != (0, 0) {
        let (code, h1) = pred[idx(i, j, h)];
        let mv = Move::from_code(code);
        path.last_mut().unwrap().3 = Some(mv);
        (i, j) = mv.back(i, j).unwrap();
        h = h1 as usize;
        path.push((i, j, h as i64, None));
    }
    path.reverse();
    let mut up_y = vec![0i64; k];
    let mut lo_y = vec![0i64; m];
    let (mut yu, mut yl) = (path[0].2, 0i64);
    up_y[0] = yu;
    for w in path.windows(2) {
        let (pi, pj, h1, _) = w[0];
        let (i, j, h2, mv) = w[1];
        match mv.expect("every step records its move") {
            Move::Upper => yu = yl + h2,
            Move::Lower => yl = yu - h2,
            Move::Both => {
                let (su, sl) = (up_steps[pi], lo_steps[pj]);
                let (a, b) = match (su, sl) {
                    (1, -1) => (1, -(h2 - h1 - 1)),
                    (-1, 1) => (-1, h1 - h2 - 1),
                    (1, _) if h2 >= h1 => (h2 - h1 + 1, 1),
                    (1, _) => (1, h1 - h2 + 1),
                    (_, _) if h2 >= h1 => (-1, -(h2 - h1 + 1)),
                    (_, _) => (-(h1 - h2 + 1), -1),
                };
                yu += a;
                yl += b;
            }
        }
        debug_assert_eq!(yu - yl, h2);
        up_y[i] = yu;
        lo_y[j] = yl;
    }
    let cells: Vec<(usize, usize)> = path.iter().map(|&(i, j, ..)| (i, j)).collect();
    let drawing = Drawing::from_columns(k, m, &cells, up_y, lo_y);
    (area, drawing.polygon(d))
}

/// Minimum perimeter `(perimeter, witness)`.
///
/// Some optimal drawing has unit steps everywhere except `e_L` and `e_R`, and
/// unit-width upper edges (the upper hull has at least as many reflex
/// vertices). The perimeter is then `3 r(T) + r(B) + 2 + |e_L| + |e_R|` and
/// `|e_R| - |e_L|` is fixed, so it remains to choose the lower edge widths
/// minimizing `|e_L|`. That is a minimax path: each column boundary demands
/// a least offset between the hulls.
pub fn x_min_perimeter(d: &HullDecomposition) -> (i64, GridPolygon) {
    let (up_steps, lo_steps) = (d.upper_steps(), d.lower_steps());
    let (k, m) = (up_steps.len() + 1, lo_steps.len() + 1);
    let yu = relative_heights(&up_steps);
    let yl = relative_heights(&lo_steps);
    // Rolling rows of the least offset; only the diagonal choices are kept,
    // one bit per cell, for the backtrack.
    const NONE: i64 = i64::MAX;
    let mut prev = vec![NONE; m];
    let mut cur = vec![NONE; m];
    let mut diag = vec![0u64; (k * m).div_ceil(64)];
    let bit = |i: usize, j: usize| (i * m + j) / 64;
    let mask = |i: usize, j: usize| 1u64 << ((i * m + j) % 64);
    prev[0] = 1 - yu[0] + yl[0];
    for i in 1..k {
        cur.fill(NONE);
        for j in 0..m.min(i + 1) {
            let offset = |pj: usize| 1 - yu[i].min(yu[i - 1]) + yl[j].max(yl[pj]);
            if prev[j] != NONE {
                cur[j] = prev[j].max(offset(j));
            }
            if j > 0 && prev[j - 1] != NONE {
                let cand = prev[j - 1].max(offset(j - 1));
                if cand < cur[j] {
                    cur[j] = cand;
                    diag[bit(i, j)] |= mask(i, j);
                }
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let gap = prev[m - 1];
    assert!(gap != NONE, "r(T) >= r(B) leaves room for the lower hull");
    let cells = backtrack(k - 1, m - 1, |i, j| {
        if diag[bit(i, j)] & mask(i, j) != 0 {
            Move::Both
        } else {
            Move::Upper
        }
    });
    let up_y = yu.iter().map(|y| y + gap).collect();
    let drawing = Drawing::from_columns(k, m, &cells, up_y, yl);
    let p = drawing.polygon(d);
    (p.perimeter(), p)
}

/// `|e_L|` of a minimum-perimeter drawing, by the right-to-left recurrence
/// over the turn pairs of consecutive hull steps.
pub fn min_left_edge_by_turn_table(d: &HullDecomposition) -> i64 {
    let s = &d.sequence;
    let n = s.len();
    let (rt, rb) = (d.upper.len(), d.lower.len());
    // Turn pair at the ends of the vertical following hull edge `e` (ccw).
    let pair = |e: usize| {
        let v = (e + 1) % n;
        (s.at(v), s.at(v + 1))
    };
    let rl = (Turn::R, Turn::L);
    // a[i][j] over the rightmost i upper and j lower edges; None = undefined.
    let mut a = vec![vec![None::<i64>; rb + 1]; rt + 1];
    a[1][1] = Some(1);
    for i in 2..=rt {
        // Upper: t_{i-1} (right) then a vertical then t_i.
        let up_rl = pair(d.upper[i - 2].edge) == rl;
        for j in 1..=rb.min(i) {
            let prev_same = a[i - 1][j];
            let value = if j == 1 {
                prev_same.map(|v| if up_rl { v + 1 } else { (v - 1).max(1) })
            } else {
                // Lower: b_j (left) then a vertical then b_{j-1}.
                let lo_rl = pair(d.lower[j - 1].edge) == rl;
                let prev_diag = a[i - 1][j - 1];
                let via_diag = prev_diag.map(|v| match (up_rl, lo_rl) {
                    (true, true) | (false, false) => v.max(2),
                    (true, false) => v + 2,
                    (false, true) => (v - 2).max(1),
                });
                let via_same = prev_same.map(|v| if up_rl { v + 1 } else { (v - 1).max(1) });
                match (via_diag, via_same) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                }
            };
            a[i][j] = value;
        }
    }
    a[rt][rb].expect("table is defined at the full extent")
}
