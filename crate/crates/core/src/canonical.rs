//! Canonical forms of x-monotone polygons.
//!
//! Both transforms only ever raise the upper hull or lower the lower hull
//! pointwise (or shift a right part of both hulls together), which is why they
//! cannot create intersections.

use crate::error::{Error, Result};
use crate::polygon::{GridPolygon, Point};
use crate::sequences::{hull_decomposition_for, x_monotone_starts, EdgeKind, HullDecomposition};
use crate::x_solver::{canonical_lower, canonical_upper, Drawing};

/// An x-monotone polygon turned so that its own orientation matches a hull
/// decomposition, plus the number of quarter turns applied.
struct Oriented {
    d: HullDecomposition,
    drawing: Drawing,
    quarter_turns: usize,
}

fn rotate(p: &GridPolygon, quarter_turns: usize) -> GridPolygon {
    let vs = p
        .vertices()
        .iter()
        .map(|v| match quarter_turns % 4 {
            0 => *v,
            1 => Point::new(-v.y, v.x),
            2 => Point::new(-v.x, -v.y),
            _ => Point::new(v.y, -v.x),
        })
        .collect();
    GridPolygon::new_unchecked(vs)
}

/// Finds a rotation under which `p` is x-monotone. With `upper_heavy`, the
/// upper hull must carry at least as many reflex vertices as the lower one.
fn orient(p: &GridPolygon, upper_heavy: bool) -> Result<Oriented> {
    if !p.is_valid() {
        return Err(Error::InvalidPolygon(
            "input is not a simple ccw rectilinear polygon".into(),
        ));
    }
    let s = p.sequence();
    let starts = x_monotone_starts(&s);
    if starts.is_empty() {
        return Err(Error::NotXMonotone);
    }
    let mut fallback = None;
    for q in 0..4 {
        let rp = rotate(p, q);
        let start = rp.heading(0);
        if !starts.contains(&start) {
            continue;
        }
        let d = hull_decomposition_for(&s, start, false, 0);
        if upper_heavy && d.r_top < d.r_bottom {
            fallback.get_or_insert((rp, d, q));
            continue;
        }
        return Ok(Oriented {
            drawing: extract(&rp, &d),
            d,
            quarter_turns: q,
        });
    }
    let (rp, d, q) = fallback.ok_or(Error::NotXMonotone)?;
    Ok(Oriented {
        drawing: extract(&rp, &d),
        d,
        quarter_turns: q,
    })
}

fn extract(p: &GridPolygon, d: &HullDecomposition) -> Drawing {
    let up = d.upper_ltr();
    let lo = d.lower_ltr();
    Drawing {
        up_w: up.iter().map(|&e| p.edge_len(e)).collect(),
        up_y: up.iter().map(|&e| p.vertex(e).y).collect(),
        lo_w: lo.iter().map(|&e| p.edge_len(e)).collect(),
        lo_y: lo.iter().map(|&e| p.vertex(e).y).collect(),
    }
}

/// Rebuilds the polygon and puts its bounding box corner where `anchor` had it.
fn finish(o: &Oriented, drawing: &Drawing, anchor: &GridPolygon) -> GridPolygon {
    let p = rotate(&drawing.polygon(&o.d), 4 - o.quarter_turns % 4).normalized();
    let (x0, y0, _, _) = anchor.bounds();
    p.translated(x0, y0)
}

fn kinds(d: &HullDecomposition) -> (Vec<EdgeKind>, Vec<EdgeKind>) {
    (
        d.upper.iter().rev().map(|e| e.kind).collect(),
        d.lower.iter().rev().map(|e| e.kind).collect(),
    )
}

/// Widths after packing every stair toward its non-outer end: all non-outer
/// edges get width 1, inner edges keep their left x, outer edges absorb the
/// slack.
fn packed_widths(widths: &[i64], kind: &[EdgeKind]) -> Vec<i64> {
    let k = widths.len();
    let total: i64 = widths.iter().sum();
    let mut left_x = vec![0i64; k];
    for i in 1..k {
        left_x[i] = left_x[i - 1] + widths[i - 1];
    }
    // New left x of each non-outer edge.
    let mut new_left: Vec<Option<i64>> = vec![None; k];
    let outers: Vec<usize> = (0..k).filter(|&i| kind[i] == EdgeKind::Outer).collect();
    let first = outers[0];
    let last = *outers.last().unwrap();
    // Before the first outer edge: pack toward e_L.
    for (c, i) in (0..first).enumerate() {
        new_left[i] = Some(c as i64);
    }
    // After the last outer edge: pack toward e_R.
    for (c, i) in (last + 1..k).rev().enumerate() {
        new_left[i] = Some(total - 1 - c as i64);
    }
    // Between consecutive outer edges: pack toward the inner edge.
    for w in outers.windows(2) {
        let (a, b) = (w[0], w[1]);
        let x = (a + 1..b)
            .find(|&i| kind[i] == EdgeKind::Inner)
            .expect("hull extremes alternate");
        let xl = left_x[x];
        for (i, slot) in new_left.iter_mut().enumerate().take(b).skip(a + 1) {
            *slot = Some(xl + i as i64 - x as i64);
        }
    }
    let mut out = vec![1i64; k];
    for &o in &outers {
        let start = if o == 0 {
            0
        } else {
            new_left[o - 1].unwrap() + 1
        };
        let end = if o + 1 == k {
            total
        } else {
            new_left[o + 1].unwrap()
        };
        out[o] = end - start;
    }
    out
}

/// Canonical form (D1-D3) for the bounding-box objective: horizontals
/// pushed outward as far as unit steps allow, then every stair packed toward
/// its inner extreme edge (or toward the vertical extreme edge). The bounding
/// box does not change.
pub fn canonicalize_x_bbox(p: &GridPolygon) -> Result<GridPolygon> {
    let o = orient(p, false)?;
    let (bottom, top) = (
        o.drawing.lo_y.iter().copied().min().unwrap(),
        o.drawing.up_y.iter().copied().max().unwrap(),
    );
    let (uk, lk) = kinds(&o.d);
    let drawing = Drawing {
        up_y: canonical_upper(&o.d.upper_steps(), top - bottom)
            .iter()
            .map(|y| y + bottom)
            .collect(),
        lo_y: canonical_lower(&o.d.lower_steps())
            .iter()
            .map(|y| y + bottom)
            .collect(),
        up_w: packed_widths(&o.drawing.up_w, &uk),
        lo_w: packed_widths(&o.drawing.lo_w, &lk),
    };
    Ok(finish(&o, &drawing, p))
}

/// Canonical form (P1-P2) for the perimeter objective: every hull
/// vertical shortened to unit length (shifting the part beyond it toward
/// `e_L` or `e_R`), then every long upper edge shortened together with a long
/// lower edge, lifting the upper hull by one when the shift would collide.
/// The perimeter does not increase.
pub fn canonicalize_x_perimeter(p: &GridPolygon) -> Result<GridPolygon> {
    let o = orient(p, true)?;
    let mut dr = o.drawing.clone();
    // Step 1: unit verticals. Upper hull only moves up, lower only down.
    for i in 0..dr.up_y.len().saturating_sub(1) {
        let d = dr.up_y[i + 1] - dr.up_y[i];
        if d > 1 {
            dr.up_y[..=i].iter_mut().for_each(|y| *y += d - 1);
        } else if d < -1 {
            dr.up_y[i + 1..].iter_mut().for_each(|y| *y += -d - 1);
        }
    }
    for j in 0..dr.lo_y.len().saturating_sub(1) {
        let d = dr.lo_y[j + 1] - dr.lo_y[j];
        if d > 1 {
            dr.lo_y[j + 1..].iter_mut().for_each(|y| *y -= d - 1);
        } else if d < -1 {
            dr.lo_y[..=j].iter_mut().for_each(|y| *y -= -d - 1);
        }
    }
    // Step 2: unit upper widths.
    while let Some(e) = dr.up_w.iter().rposition(|&w| w > 1) {
        let f = dr
            .lo_w
            .iter()
            .rposition(|&w| w > 1)
            .expect("r(T) >= r(B) forces a long lower edge");
        let mut shifted = dr.clone();
        shifted.up_w[e] -= 1;
        shifted.lo_w[f] -= 1;
        if !shifted.polygon(&o.d).is_simple() {
            shifted.up_y.iter_mut().for_each(|y| *y += 1);
            debug_assert!(shifted.polygon(&o.d).is_simple());
        }
        dr = shifted;
    }
    Ok(finish(&o, &dr, p))
}

/// D1-D3: outer extreme edges on the bounding box, unit verticals except at
/// inner extreme edges, unit non-outer horizontals.
pub fn satisfies_bbox_canonical(p: &GridPolygon) -> Result<bool> {
    let o = orient(p, false)?;
    let dr = &o.drawing;
    let (uk, lk) = kinds(&o.d);
    let (bottom, top) = (
        dr.lo_y.iter().copied().min().unwrap(),
        dr.up_y.iter().copied().max().unwrap(),
    );
    let d1 = (0..uk.len()).all(|i| uk[i] != EdgeKind::Outer || dr.up_y[i] == top)
        && (0..lk.len()).all(|j| lk[j] != EdgeKind::Outer || dr.lo_y[j] == bottom);
    let unit_unless_inner = |ys: &[i64], kind: &[EdgeKind]| {
        ys.windows(2).enumerate().all(|(i, w)| {
            (w[1] - w[0]).abs() == 1 || kind[i] == EdgeKind::Inner || kind[i + 1] == EdgeKind::Inner
        })
    };
    let d2 = unit_unless_inner(&dr.up_y, &uk) && unit_unless_inner(&dr.lo_y, &lk);
    let d3 = (0..uk.len()).all(|i| uk[i] == EdgeKind::Outer || dr.up_w[i] == 1)
        && (0..lk.len()).all(|j| lk[j] == EdgeKind::Outer || dr.lo_w[j] == 1);
    Ok(d1 && d2 && d3)
}

/// P1-P2: unit hull verticals, unit upper edges (upper hull the one with at
/// least as many reflex vertices).
pub fn satisfies_perimeter_canonical(p: &GridPolygon) -> Result<bool> {
    let o = orient(p, true)?;
    let dr = &o.drawing;
    let unit = |ys: &[i64]| ys.windows(2).all(|w| (w[1] - w[0]).abs() == 1);
    Ok(unit(&dr.up_y) && unit(&dr.lo_y) && dr.up_w.iter().all(|&w| w == 1))
}
