//! Gadgets from the 3-Partition reduction: the FitUpperRight sequence `S`,
//! the wrapped sequence `T`, and a drawing of `S` for yes-instances.
//!
//! `S = LL snail_1 ... snail_3m LL` where each snail is a thin connector
//! leaving the wall plus a tightly wound spiral whose height encodes `a_i`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polygon::{GridPolygon, Point};
use crate::sequences::{Turn, TurnSequence};

/// Emitted sequences longer than this are refused.
pub const MAX_SEQUENCE_LEN: usize = 50_000_000;

/// Default stand-in for the wrap spiral's winding count.
pub const DEFAULT_WRAP_WINDINGS: u64 = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInstance {
    pub m: usize,
    #[serde(rename = "B")]
    pub b: u64,
    #[serde(rename = "A")]
    pub a: Vec<u64>,
}

impl ThreePartitionInstance {
    pub fn new(m: usize, b: u64, a: Vec<u64>) -> Result<Self> {
        let inst = ThreePartitionInstance { m, b, a };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if self.m == 0 {
            return bad("m must be positive".into());
        }
        if self.a.len() != 3 * self.m {
            return bad(format!("|A| = {} but 3m = {}", self.a.len(), 3 * self.m));
        }
        let sum: u64 = self.a.iter().sum();
        if sum != self.m as u64 * self.b {
            return bad(format!(
                "sum of A is {sum} but mB = {}",
                self.m as u64 * self.b
            ));
        }
        if let Some(&x) = self.a.iter().find(|&&x| 4 * x <= self.b || 2 * x >= self.b) {
            return bad(format!(
                "element {x} violates B/4 < a < B/2 for B = {}",
                self.b
            ));
        }
        Ok(())
    }
}

/// Sizes of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetParams {
    /// Windings per spiral, `B m^3`.
    pub rho: u64,
    /// Box width `4 rho m + 16 m^2`.
    #[serde(rename = "W")]
    pub w: u64,
    /// Box height `12 rho + 2 B m^2 + 6 m`.
    #[serde(rename = "H")]
    pub h: u64,
    pub wrap_windings: u64,
}

impl GadgetParams {
    pub fn for_instance(inst: &ThreePartitionInstance, wrap_windings: u64) -> Self {
        let m = inst.m as u64;
        let rho = inst.b * m * m * m;
        GadgetParams {
            rho,
            w: 4 * rho * m + 16 * m * m,
            h: 12 * rho + 2 * inst.b * m * m + 6 * m,
            wrap_windings,
        }
    }
}

fn ladder_reps(a: u64, m: usize) -> u64 {
    (a - 1) * (m * m) as u64
}

/// Length of `S` from the production rules, without building it.
pub fn fit_sequence_len(inst: &ThreePartitionInstance) -> u64 {
    let m = inst.m as u64;
    let rho = inst.b * m * m * m;
    4 + inst
        .a
        .iter()
        .map(|&a| 2 + 8 * (m - 1) + 8 * rho - 2 + 4 * ladder_reps(a, inst.m))
        .sum::<u64>()
}

/// Number of turns `build_wrapped_sequence` adds to `S`.
pub fn wrap_extra_len(params: &GadgetParams) -> u64 {
    24 * params.wrap_windings + 4 * params.w + 4 * params.h + 2
}

fn push_rep(out: &mut Vec<Turn>, word: &str, times: u64) {
    let w: Vec<Turn> = word
        .chars()
        .map(|c| if c == 'L' { Turn::L } else { Turn::R })
        .collect();
    for _ in 0..times {
        out.extend_from_slice(&w);
    }
}

fn guard(len: u64) -> Result<()> {
    if len > MAX_SEQUENCE_LEN as u64 {
        return Err(Error::InstanceTooLarge {
            n: len.min(usize::MAX as u64) as usize,
            limit: MAX_SEQUENCE_LEN,
        });
    }
    Ok(())
}

/// Expands the four production rules literally. Turn 0 is the wall's
/// top-right corner.
pub fn build_fit_sequence(inst: &ThreePartitionInstance) -> Result<(TurnSequence, GadgetParams)> {
    inst.validate()?;
    guard(fit_sequence_len(inst))?;
    let params = GadgetParams::for_instance(inst, DEFAULT_WRAP_WINDINGS);
    let m = inst.m as u64;
    let mut t = Vec::with_capacity(fit_sequence_len(inst) as usize);
    push_rep(&mut t, "LL", 1);
    for &a in &inst.a {
        push_rep(&mut t, "R", 1);
        push_rep(&mut t, "LRRL", m - 1);
        push_rep(&mut t, "LLLL", params.rho);
        push_rep(&mut t, "RRLL", ladder_reps(a, inst.m));
        push_rep(&mut t, "RRRR", params.rho - 1);
        push_rep(&mut t, "RR", 1);
        push_rep(&mut t, "RLLR", m - 1);
        push_rep(&mut t, "R", 1);
    }
    push_rep(&mut t, "LL", 1);
    let s = TurnSequence::new(t);
    s.validate()?;
    Ok((s, params))
}

/// Wraps `s` in a band spiral of `wrap_windings` windings attached to the
/// right side of the wall. The result is `s` followed by the band, so `s` is
/// its prefix.
///
/// The band leaves the wall eastward and winds clockwise outward, one arm per
/// corner (`4 w` arms), turns around with `LL` and comes back on the outside.
/// The inner side of the first bottom and left arms carries
/// `(LLRR)^{W/2}` and `(LLRR)^{H/2}`; the outer side of the last horizontal
/// and vertical arms carries `(LLRR)^{(4w+W)/2}` and `(LLRR)^{(4w+H)/2}`.
pub fn build_wrapped_sequence(s: &TurnSequence, params: &GadgetParams) -> Result<TurnSequence> {
    let w = params.wrap_windings;
    if w < 2 {
        return Err(Error::WindingsTooSmall(w));
    }
    s.validate()?;
    guard(s.len() as u64 + wrap_extra_len(params))?;
    let arms = 4 * w;
    let inner = |k: u64| match k {
        2 => params.w / 2,
        3 => params.h / 2,
        _ => 0,
    };
    let outer = |k: u64| {
        if k == arms - 2 {
            (4 * w + params.w) / 2
        } else if k == arms - 1 {
            (4 * w + params.h) / 2
        } else {
            0
        }
    };
    let mut t = s.turns().to_vec();
    t.reserve(wrap_extra_len(params) as usize);
    push_rep(&mut t, "R", 1);
    for k in 0..arms {
        push_rep(&mut t, "LLRR", inner(k));
        if k + 1 < arms {
            push_rep(&mut t, "R", 1);
        }
    }
    push_rep(&mut t, "LL", 1);
    for k in (0..arms).rev() {
        push_rep(&mut t, "LLRR", outer(k));
        if k > 0 {
            push_rep(&mut t, "L", 1);
        }
    }
    push_rep(&mut t, "R", 1);
    let t = TurnSequence::new(t);
    t.validate()?;
    Ok(t)
}

/// True iff `p` fits in a `w x h` box with vertex 0 at the upper-right
/// corner of its bounding box.
pub fn verify_fit(p: &GridPolygon, w: i64, h: i64) -> bool {
    let (x0, y0, x1, y1) = p.bounds();
    x1 - x0 <= w && y1 - y0 <= h && p.vertex(0) == Point::new(x1, y1)
}

/// One y-change of a connector: the top boundary dips at `x - 1..x` and the
/// bottom boundary at `x - 2..x + 1`. `from` is the band's top to the right,
/// `to` to the left.
#[derive(Debug, Clone, Copy)]
struct Jog {
    x: i64,
    from: i64,
    to: i64,
}

impl Jog {
    fn top(&self, out: &mut Vec<Point>) {
        let low = self.from.min(self.to) - 1;
        out.extend([
            Point::new(self.x, self.from),
            Point::new(self.x, low),
            Point::new(self.x - 1, low),
            Point::new(self.x - 1, self.to),
        ]);
    }

    fn bottom(&self, out: &mut Vec<Point>) {
        let dip = self.from.min(self.to) - 2;
        out.extend([
            Point::new(self.x - 2, self.to - 1),
            Point::new(self.x - 2, dip),
            Point::new(self.x + 1, dip),
            Point::new(self.x + 1, self.from - 1),
        ]);
    }
}

/// Width and height of a tight spiral whose ladder has `k` rungs.
fn spiral_size(rho: i64, k: i64) -> (i64, i64) {
    (4 * rho - 2, 4 * rho - 1 + 2 * k)
}

/// Vertices of `(LLLL)^rho (RRLL)^k (RRRR)^(rho-1) RR` drawn as a width-1
/// band spiralling inward, in local coordinates with the bounding box at the
/// origin. The first vertex is the top-left corner, where the incoming
/// connector top turns south; the last one sits at `(1, height - 1)`, where
/// the connector bottom leaves eastward.
fn spiral_vertices(rho: i64, k: i64) -> Vec<Point> {
    let (x_max, height) = spiral_size(rho, k);
    let top = height - 2;
    let (y0, p) = (2 * rho - 1, 2 * rho - 1);
    let mut v = vec![Point::new(0, height)];
    for t in 0..rho {
        v.push(Point::new(2 * t, 2 * t));
        v.push(Point::new(x_max - 2 * t, 2 * t));
        if t + 1 < rho {
            v.push(Point::new(x_max - 2 * t, top - 2 * t));
            v.push(Point::new(2 * t + 2, top - 2 * t));
        } else {
            v.push(Point::new(x_max - 2 * t, y0));
        }
    }
    for j in 0..k {
        v.push(Point::new(p, y0 + 2 * j));
        v.push(Point::new(p, y0 + 2 * j + 1));
        v.push(Point::new(p + 1, y0 + 2 * j + 1));
        v.push(Point::new(p + 1, y0 + 2 * j + 2));
    }
    v.push(Point::new(p, y0 + 2 * k));
    // The inner boundary runs one unit inside the outer edge it faces; edge
    // `j` of the outer path (0 = connector top) is matched by inner edge
    // `4 rho - 2 - j`.
    enum Line {
        X(i64),
        Y(i64),
    }
    let line = |j: i64| match (j, j % 4) {
        (0, _) => Line::Y(top + 1),
        (_, 1) => Line::X(2 * ((j - 1) / 4) + 1),
        (_, 2) => Line::Y(2 * ((j - 2) / 4) + 1),
        (_, 3) => Line::X(x_max - 2 * ((j - 3) / 4) - 1),
        _ => Line::Y(top - 2 * ((j - 4) / 4) - 1),
    };
    for i in 1..=4 * rho - 3 {
        let j = 4 * rho - 2 - i;
        let corner = match (line(j), line(j - 1)) {
            (Line::X(x), Line::Y(y)) | (Line::Y(y), Line::X(x)) => Point::new(x, y),
            _ => unreachable!("consecutive edges are perpendicular"),
        };
        v.push(corner);
    }
    v
}

/// Checks that `partition` groups all indices into triples summing to `B`
/// and returns the column of each element.
fn columns_of(inst: &ThreePartitionInstance, partition: &[[usize; 3]]) -> Result<Vec<usize>> {
    let n = inst.a.len();
    if partition.len() != inst.m {
        return Err(Error::NotAPartition(format!(
            "{} triples for m = {}",
            partition.len(),
            inst.m
        )));
    }
    let mut col = vec![usize::MAX; n];
    for (c, triple) in partition.iter().enumerate() {
        for &i in triple {
            if i >= n {
                return Err(Error::NotAPartition(format!("index {i} out of range")));
            }
            if col[i] != usize::MAX {
                return Err(Error::NotAPartition(format!("index {i} used twice")));
            }
            col[i] = c;
        }
        let sum: u64 = triple.iter().map(|&i| inst.a[i]).sum();
        if sum != inst.b {
            return Err(Error::NotAPartition(format!(
                "triple {triple:?} sums to {sum}, not {}",
                inst.b
            )));
        }
    }
    Ok(col)
}

/// Draws `S` exactly filling `[0, W] x [0, H]`, with vertex 0 at `(W, H)`.
///
/// Column `c` (counted leftward from the wall) holds the spirals of triple
/// `c`. Inside every column, spirals and passing connectors appear in index
/// order from the top, so connectors never cross; connector bands are three
/// rows apart. A connector changes height only in the gap just right of each
/// column it reaches; there the jogs are staggered four units apart, first
/// the descending bands bottom-up, then the rising ones top-down. Leftover
/// jogs are zero-height dips near the wall.
pub fn build_witness(
    inst: &ThreePartitionInstance,
    partition: &[[usize; 3]],
) -> Result<GridPolygon> {
    let (s, params) = build_fit_sequence(inst)?;
    let col = columns_of(inst, partition)?;
    let m = inst.m;
    let n = inst.a.len();
    let (rho, width, height) = (params.rho as i64, params.w as i64, params.h as i64);
    let rungs: Vec<i64> = inst.a.iter().map(|&a| ladder_reps(a, m) as i64).collect();
    let spiral_w = spiral_size(rho, 0).0;
    let fail = |msg: String| Err(Error::RoutingFailure(msg));

    // Band tops per column.
    let mut pos = vec![vec![i64::MIN; n]; m];
    for (g, row) in pos.iter_mut().enumerate() {
        let mut cursor = height - 1;
        for i in (0..n).filter(|&i| col[i] >= g) {
            row[i] = cursor;
            cursor -= if col[i] == g {
                spiral_size(rho, rungs[i]).1 + 1
            } else {
                3
            };
        }
        if cursor < 0 {
            return fail(format!("column {g} needs {} more rows", -cursor));
        }
    }

    // Horizontal layout, right to left, then shifted so the last column
    // starts at x = 0 and the wall absorbs the slack.
    let mut wall_x = width - 1;
    let mut region_right = vec![0i64; m];
    let mut column_left = vec![0i64; m];
    for g in 0..m {
        let (right, slots) = if g == 0 {
            (wall_x, m as i64 - 1)
        } else {
            (column_left[g - 1] - 1, 3 * (m - g) as i64)
        };
        region_right[g] = right;
        column_left[g] = right - 4 * slots - 2 - spiral_w;
    }
    let slack = column_left[m - 1];
    if slack < 0 {
        return fail(format!("columns overflow the box by {}", -slack));
    }
    wall_x -= slack;
    region_right
        .iter_mut()
        .chain(column_left.iter_mut())
        .for_each(|x| *x -= slack);
    let slot_x = |g: usize, s: usize| region_right[g] - 2 - 4 * s as i64;

    let mut jogs: Vec<Vec<Jog>> = (0..n)
        .map(|i| {
            (0..m - 1 - col[i])
                .map(|s| Jog {
                    x: slot_x(0, s),
                    from: pos[0][i],
                    to: pos[0][i],
                })
                .collect()
        })
        .collect();
    for g in 1..m {
        let present: Vec<usize> = (0..n).filter(|&i| col[i] >= g).collect();
        let down = present.iter().rev().filter(|&&i| pos[g][i] < pos[g - 1][i]);
        let up = present.iter().filter(|&&i| pos[g][i] > pos[g - 1][i]);
        let stay = present.iter().filter(|&&i| pos[g][i] == pos[g - 1][i]);
        for (s, &i) in down.chain(up).chain(stay).enumerate() {
            jogs[i].push(Jog {
                x: slot_x(g, s),
                from: pos[g - 1][i],
                to: pos[g][i],
            });
        }
    }

    let mut v = vec![Point::new(width, height), Point::new(wall_x, height)];
    for i in 0..n {
        let c = col[i];
        let top = pos[c][i];
        v.push(Point::new(wall_x, pos[0][i]));
        for j in &jogs[i] {
            j.top(&mut v);
        }
        let (_, h) = spiral_size(rho, rungs[i]);
        let (ox, oy) = (column_left[c], top - h);
        v.extend(
            spiral_vertices(rho, rungs[i])
                .into_iter()
                .map(|p| Point::new(p.x + ox, p.y + oy)),
        );
        for j in jogs[i].iter().rev() {
            j.bottom(&mut v);
        }
        v.push(Point::new(wall_x, pos[0][i] - 1));
    }
    v.push(Point::new(wall_x, 0));
    v.push(Point::new(width, 0));

    let p = GridPolygon::new(v).or_else(|e| fail(format!("drawing is invalid: {e}")))?;
    if p.sequence() != s {
        return fail("drawing does not realize S".into());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> ThreePartitionInstance {
        ThreePartitionInstance::new(2, 10, vec![3, 3, 3, 3, 4, 4]).unwrap()
    }

    #[test]
    fn params_and_length() {
        let (s, p) = build_fit_sequence(&example()).unwrap();
        assert_eq!((p.rho, p.w, p.h), (80, 704, 1052));
        assert_eq!(s.len() as u64, fit_sequence_len(&example()));
        assert_eq!(s.lefts() - s.rights(), 4);
    }

    #[test]
    fn instance_checks() {
        assert!(ThreePartitionInstance::new(2, 10, vec![3, 3, 3, 3, 4]).is_err());
        assert!(ThreePartitionInstance::new(2, 10, vec![2, 4, 3, 3, 4, 4]).is_err());
        assert!(ThreePartitionInstance::new(1, 12, vec![3, 4, 5]).is_err());
        assert!(ThreePartitionInstance::new(1, 10, vec![3, 3, 4]).is_ok());
    }

    #[test]
    fn spiral_alone_is_simple() {
        for rho in 1..5 {
            for k in 0..4 {
                let mut v = spiral_vertices(rho, k);
                // Close the connector with a short stub to the right.
                let (w, h) = spiral_size(rho, k);
                v.push(Point::new(w + 2, h - 1));
                v.push(Point::new(w + 2, h));
                let p = GridPolygon::new(v).unwrap();
                assert_eq!(p.bbox(), (w + 2, h));
            }
        }
    }

    #[test]
    fn wrapped_sequence() {
        let (s, mut p) = build_fit_sequence(&example()).unwrap();
        p.wrap_windings = 2;
        let t = build_wrapped_sequence(&s, &p).unwrap();
        assert_eq!(&t.turns()[..s.len()], s.turns());
        assert_eq!(t.len() as u64, s.len() as u64 + wrap_extra_len(&p));
        p.wrap_windings = 1;
        assert_eq!(
            build_wrapped_sequence(&s, &p),
            Err(Error::WindingsTooSmall(1))
        );
    }

    #[test]
    fn witness_fits() {
        let inst = example();
        let p = build_witness(&inst, &[[0, 1, 4], [2, 3, 5]]).unwrap();
        assert!(verify_fit(&p, 704, 1052));
        assert_eq!(p.bounds(), (0, 0, 704, 1052));
        assert!(!verify_fit(&p, 703, 1052));
        assert!(verify_fit(&p.translated(5, -3), 704, 1052));
        let bad = build_witness(&inst, &[[0, 1, 2], [3, 4, 5]]);
        assert!(matches!(bad, Err(Error::NotAPartition(_))));
    }
}
