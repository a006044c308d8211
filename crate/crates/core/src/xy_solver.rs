//! Solvers for xy-monotone sequences.
//!
//! Values come from closed forms in the stair counts wherever those exist;
//! witnesses are built directly for the cases with at most two stairs and
//! otherwise by the x-monotone machinery.

use serde::{Deserialize, Serialize};

use crate::polygon::GridPolygon;
use crate::sequences::{
    directions, hull_decomposition_for, x_monotone_starts, Direction, EdgeKind, HullDecomposition,
    StairDecomposition,
};
use crate::x_solver::{
    canonical_lower, canonical_upper, narrowest_path, x_min_area_fast, x_min_perimeter, Drawing,
};

/// Closed-form optimum for two nonempty opposite stairs with `a <= b` reflex
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoStairSolution {
    /// Reflex count of the shorter stair (drawn as TR).
    pub a: usize,
    /// Reflex count of the longer stair (drawn as BL).
    pub b: usize,
    pub q: usize,
    pub rem: usize,
    pub min_area: i64,
}

/// Order of the long (`q + 1`) and short (`q`) TR segments.
///
/// For a standalone two-stair instance both choices give left extreme edge 1
/// (2 when `a == b`) and top edge `1 + q`, so they produce the same drawing;
/// the distinction is kept for callers that glue instances together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StairPreference {
    MinLeftEdge,
    MinTopEdge,
}

/// Minimum area of two opposite stairs with `a` and `b` reflex vertices.
pub fn two_stair_min_area(a: usize, b: usize) -> TwoStairSolution {
    let (a, b) = (a.min(b), a.max(b));
    let q = b / (a + 1);
    let rem = b % (a + 1);
    let (a_, q_, rem_) = (a as i64, q as i64, rem as i64);
    let min_area = if a == b && a > 0 {
        2 * (b as i64 + 1)
    } else {
        (a_ + 1) * (q_ + 1) * (q_ + 2) / 2 - a_ + rem_ * (q_ + 2)
    };
    TwoStairSolution {
        a,
        b,
        q,
        rem,
        min_area,
    }
}

/// Drawing for a decomposition whose only stairs are TR (`a`) and BL (`b`)
/// with `a <= b`, in hull coordinates: BL all unit, TR segment widths in
/// `{q, q+1}`, every height as low as simplicity allows.
fn two_stair_drawing(sol: &TwoStairSolution, _prefer: StairPreference) -> Drawing {
    let (a, b) = (sol.a, sol.b as i64);
    let tr: Vec<i64> = if a == sol.b {
        vec![1; a + 1]
    } else {
        // Short segments first keeps the top edge at 1 + q.
        let mut w = vec![sol.q as i64; a + 1];
        for x in w.iter_mut().skip(a + 1 - sol.rem) {
            *x += 1;
        }
        w[0] += 1;
        w
    };
    let lo_y: Vec<i64> = (0..=b).rev().collect();
    let lo_w = vec![1i64; b as usize + 1];
    let mut left_x = vec![0i64; tr.len()];
    for i in 1..tr.len() {
        left_x[i] = left_x[i - 1] + tr[i - 1];
    }
    // Lowest heights: above the lower hull at every left boundary, and one
    // above the next segment to the right.
    let mut up_y = vec![0i64; tr.len()];
    for i in (0..tr.len()).rev() {
        let floor = if i == 0 { b + 1 } else { b - left_x[i] + 2 };
        let next = if i + 1 < tr.len() { up_y[i + 1] + 1 } else { 1 };
        up_y[i] = floor.max(next);
    }
    Drawing {
        up_w: tr,
        up_y,
        lo_w,
        lo_y,
    }
}

/// Hull decompositions of an xy-monotone sequence in every orientation,
/// with the stair counts `(r1, r2, r3, r4)` seen in that orientation.
fn orientations(d: &StairDecomposition) -> Vec<(HullDecomposition, [usize; 4])> {
    let s = d.sequence();
    x_monotone_starts(&s)
        .into_iter()
        .map(|start| {
            let h = hull_decomposition_for(&s, start, false, 0);
            let top = h
                .upper
                .iter()
                .rev()
                .position(|e| e.kind == EdgeKind::Outer)
                .unwrap();
            let bottom = h
                .lower
                .iter()
                .rev()
                .position(|e| e.kind == EdgeKind::Outer)
                .unwrap();
            let counts = [
                h.upper.len() - 1 - top,
                top,
                bottom,
                h.lower.len() - 1 - bottom,
            ];
            (h, counts)
        })
        .collect()
}

/// Draws a two-stair solution as a polygon realizing
/// `StairDecomposition::new(a, 0, b, 0).expand()`.
pub fn two_stair_construct(sol: &TwoStairSolution, prefer: StairPreference) -> GridPolygon {
    let d = StairDecomposition::new(sol.a, 0, sol.b, 0);
    let (h, _) = orientations(&d)
        .into_iter()
        .find(|(_, c)| *c == [sol.a, 0, sol.b, 0])
        .expect("the identity orientation exists");
    two_stair_drawing(sol, prefer).polygon(&h)
}

/// The patterns `(r,0,r,0)` and `(0,r,0,r)` with `r > 0`: two opposite
/// stairs and nothing else, equally long.
fn balanced_opposite_pair(d: &StairDecomposition) -> bool {
    (d.r2 == 0 && d.r4 == 0 && d.r1 == d.r3 && d.r1 > 0)
        || (d.r1 == 0 && d.r3 == 0 && d.r2 == d.r4 && d.r2 > 0)
}

/// Minimum bounding box: `max(r(T), r(B)) + 1` by `max(r(L), r(R)) + 1`,
/// except that a balanced opposite pair needs one extra column. The witness
/// is drawn with the top extreme edge of `d` on top.
pub fn xy_min_bbox(d: &StairDecomposition) -> (i64, i64, GridPolygon) {
    let h = d.r_left().max(d.r_right()) as i64 + 1;
    let s = d.sequence();
    let start = Direction::ALL
        .into_iter()
        .find(|&st| directions(&s, st)[d.rotation_offset] == Direction::West)
        .expect("some start puts the top edge on top");
    let hd = hull_decomposition_for(&s, start, false, 0);
    let (up, lo) = (
        canonical_upper(&hd.upper_steps(), h),
        canonical_lower(&hd.lower_steps()),
    );
    let cells = narrowest_path(&up, &lo).expect("the height bound is attainable");
    let w = cells.len() as i64;
    debug_assert_eq!(
        w,
        d.r_top().max(d.r_bottom()) as i64 + 1 + balanced_opposite_pair(d) as i64
    );
    let drawing = Drawing::from_columns(up.len(), lo.len(), &cells, up, lo);
    (w, h, drawing.polygon(&hd))
}

/// Minimum area.
///
/// Up to two adjacent stairs are drawn as a unit-width pyramid with area
/// `a(a+1)/2 + b(b+1)/2 + max(a,b) + 1`.
/// Two opposite stairs use the two-stair closed form. Three or four stairs are solved by the
/// exact column DP (`O(n^3)`).
pub fn xy_min_area(d: &StairDecomposition) -> (i64, GridPolygon) {
    let [tl, bl, br, tr] = d.ccw();
    let opposite =
        (tl == 0 && br == 0 && tr > 0 && bl > 0) || (tr == 0 && bl == 0 && tl > 0 && br > 0);
    let orients = orientations(d);
    if opposite {
        // Turn so that the pair is TR/BL with BL the longer one.
        let (h, c) = orients
            .iter()
            .find(|(_, c)| c[1] == 0 && c[3] == 0 && c[2] >= c[0])
            .expect("one of the four orientations fits");
        let sol = two_stair_min_area(c[0], c[2]);
        let p = two_stair_drawing(&sol, StairPreference::MinLeftEdge).polygon(h);
        debug_assert_eq!(p.area(), sol.min_area);
        return (sol.min_area, p);
    }
    if let Some((h, c)) = orients.iter().find(|(_, c)| c[2] == 0 && c[3] == 0) {
        // At most two adjacent stairs, both on the upper hull: columns rise
        // one unit at a time to a single peak and fall the same way.
        let (tr, tl) = (c[0] as i64, c[1] as i64);
        let peak = tl.max(tr) + 1;
        let up_y: Vec<i64> = (1..=tl).chain([peak]).chain((1..=tr).rev()).collect();
        let up_w = vec![1; up_y.len()];
        let p = Drawing {
            lo_w: vec![up_y.len() as i64],
            lo_y: vec![0],
            up_w,
            up_y,
        }
        .polygon(h);
        debug_assert!(p.is_simple());
        return (p.area(), p);
    }
    let (h, _) = &orients[0];
    x_min_area_fast(h)
}

/// Closed-form minimum perimeter: `4r + 6` for the patterns `(r,0,r,0)` and
/// `(0,r,0,r)`, otherwise `3(r1+r2) + (r3+r4) + |r2+r3-r1-r4| + 4` with the
/// orientation chosen so that `r(T) >= r(B)`.
pub fn xy_perimeter_formula(d: &StairDecomposition) -> i64 {
    let d = if d.r_top() < d.r_bottom() {
        d.rotated_quarter().rotated_quarter()
    } else {
        *d
    };
    if balanced_opposite_pair(&d) {
        return 4 * d.r_top() as i64 + 6;
    }
    let (r1, r2, r3, r4) = (d.r1 as i64, d.r2 as i64, d.r3 as i64, d.r4 as i64);
    3 * (r1 + r2) + (r3 + r4) + (r2 + r3 - r1 - r4).abs() + 4
}

/// Minimum perimeter with a witness drawn by the perimeter DP.
pub fn xy_min_perimeter(d: &StairDecomposition) -> (i64, GridPolygon) {
    let s = d.sequence();
    let hd = crate::sequences::decompose_x(&s).expect("xy-monotone sequences are x-monotone");
    let (p, poly) = x_min_perimeter(&hd);
    debug_assert_eq!(p, xy_perimeter_formula(d));
    (p, poly)
}
