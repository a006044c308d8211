//! Integer grid polygons and their measures.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{Direction, Turn, TurnSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

/// A rectilinear polygon on the integer grid, vertices in ccw order.
/// Vertex `i` carries turn `i` of the realized sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPolygon {
    vertices: Vec<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Measures {
    pub area: i64,
    pub perimeter: i64,
    pub bbox_w: i64,
    pub bbox_h: i64,
}

impl Measures {
    pub fn bbox_area(&self) -> i64 {
        self.bbox_w * self.bbox_h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Area,
    Perimeter,
    Bbox,
}

impl Objective {
    pub fn of(self, m: &Measures) -> i64 {
        match self {
            Objective::Area => m.area,
            Objective::Perimeter => m.perimeter,
            Objective::Bbox => m.bbox_area(),
        }
    }
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "area" => Ok(Objective::Area),
            "perimeter" => Ok(Objective::Perimeter),
            "bbox" => Ok(Objective::Bbox),
            other => Err(Error::Format(format!("unknown objective {other:?}"))),
        }
    }
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Objective::Area => "area",
            Objective::Perimeter => "perimeter",
            Objective::Bbox => "bbox",
        })
    }
}

impl GridPolygon {
    /// Builds a polygon and checks every invariant: axis-parallel alternating
    /// edges, no zero-length edges, closed, simple and counterclockwise.
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let p = GridPolygon { vertices };
        p.check()?;
        Ok(p)
    }

    /// Builds without checking. Callers must guarantee validity.
    pub(crate) fn new_unchecked(vertices: Vec<Point>) -> Self {
        GridPolygon { vertices }
    }

    /// Traces `lengths[i]` units along the heading of edge `i`, starting at the
    /// origin with edge 0 heading `start`. The result may be non-simple.
    pub fn trace(s: &TurnSequence, start: Direction, lengths: &[i64]) -> Result<Self> {
        if lengths.len() != s.len() {
            return Err(Error::InvalidPolygon("one length per edge required".into()));
        }
        let mut vertices = Vec::with_capacity(s.len());
        let (mut x, mut y) = (0i64, 0i64);
        let mut heading = start;
        for (i, &len) in lengths.iter().enumerate() {
            if i > 0 {
                heading = heading.turn(s.at(i));
            }
            vertices.push(Point::new(x, y));
            let (dx, dy) = heading.unit();
            x = x
                .checked_add(dx * len)
                .ok_or_else(|| Error::InvalidPolygon("coordinate overflow".into()))?;
            y = y
                .checked_add(dy * len)
                .ok_or_else(|| Error::InvalidPolygon("coordinate overflow".into()))?;
        }
        if (x, y) != (0, 0) {
            return Err(Error::InvalidPolygon(
                "edge lengths do not close the polygon".into(),
            ));
        }
        Ok(GridPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Signed length of edge `i` as `(dx, dy)`.
    pub fn edge_vector(&self, i: usize) -> (i64, i64) {
        let a = self.vertex(i);
        let b = self.vertex(i + 1);
        (b.x - a.x, b.y - a.y)
    }

    pub fn edge_len(&self, i: usize) -> i64 {
        let (dx, dy) = self.edge_vector(i);
        dx.abs() + dy.abs()
    }

    pub fn edge_lengths(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.edge_len(i)).collect()
    }

    pub fn heading(&self, i: usize) -> Direction {
        let (dx, dy) = self.edge_vector(i);
        Direction::from_delta(dx, dy).expect("axis-parallel edge")
    }

    pub fn translated(&self, dx: i64, dy: i64) -> GridPolygon {
        GridPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| Point::new(p.x + dx, p.y + dy))
                .collect(),
        }
    }

    /// Translated so that the bounding box's lower-left corner is the origin.
    pub fn normalized(&self) -> GridPolygon {
        let (min_x, min_y, _, _) = self.bounds();
        self.translated(-min_x, -min_y)
    }

    /// `(min_x, min_y, max_x, max_y)`.
    pub fn bounds(&self) -> (i64, i64, i64, i64) {
        let min_x = self.vertices.iter().map(|p| p.x).min().unwrap_or(0);
        let max_x = self.vertices.iter().map(|p| p.x).max().unwrap_or(0);
        let min_y = self.vertices.iter().map(|p| p.y).min().unwrap_or(0);
        let max_y = self.vertices.iter().map(|p| p.y).max().unwrap_or(0);
        (min_x, min_y, max_x, max_y)
    }

    fn twice_signed_area(&self) -> i128 {
        let n = self.len();
        (0..n)
            .map(|i| {
                let a = self.vertex(i);
                let b = self.vertex(i + 1);
                a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128
            })
            .sum()
    }

    pub fn area(&self) -> i64 {
        (self.twice_signed_area().abs() / 2) as i64
    }

    pub fn perimeter(&self) -> i64 {
        (0..self.len()).map(|i| self.edge_len(i)).sum()
    }

    pub fn bbox(&self) -> (i64, i64) {
        let (x0, y0, x1, y1) = self.bounds();
        (x1 - x0, y1 - y0)
    }

    pub fn measures(&self) -> Measures {
        let (bbox_w, bbox_h) = self.bbox();
        Measures {
            area: self.area(),
            perimeter: self.perimeter(),
            bbox_w,
            bbox_h,
        }
    }

    /// The turn at every vertex, from the cross product of its two edges.
    pub fn sequence(&self) -> TurnSequence {
        let n = self.len();
        let turns = (0..n)
            .map(|i| {
                let (ax, ay) = self.edge_vector(i + n - 1);
                let (bx, by) = self.edge_vector(i);
                if ax * by - ay * bx > 0 {
                    Turn::L
                } else {
                    Turn::R
                }
            })
            .collect();
        TurnSequence::new(turns)
    }

    /// True iff no two non-adjacent edges meet and adjacent edges share only
    /// their common endpoint.
    pub fn is_simple(&self) -> bool {
        let n = self.len();
        if n < 4 {
            return false;
        }
        let segs: Vec<(Point, Point)> = (0..n)
            .map(|i| (self.vertex(i), self.vertex(i + 1)))
            .collect();
        // Split into horizontal and vertical segments, normalized to (lo, hi).
        let mut hs = Vec::new();
        let mut vs = Vec::new();
        for (i, &(a, b)) in segs.iter().enumerate() {
            if a.y == b.y && a.x != b.x {
                hs.push((i, a.y, a.x.min(b.x), a.x.max(b.x)));
            } else if a.x == b.x && a.y != b.y {
                vs.push((i, a.x, a.y.min(b.y), a.y.max(b.y)));
            } else {
                return false;
            }
        }
        let adjacent = |i: usize, j: usize| (i + 1) % n == j || (j + 1) % n == i;
        // Parallel overlaps (collinear touching counts as an intersection).
        for list in [&hs, &vs] {
            let mut sorted = list.clone();
            sorted.sort_by_key(|&(_, c, lo, _)| (c, lo));
            for w in 0..sorted.len() {
                let (i, c, _, hi) = sorted[w];
                for &(j, c2, lo2, _) in &sorted[w + 1..] {
                    if c2 != c || lo2 > hi {
                        break;
                    }
                    if i != j {
                        return false;
                    }
                }
            }
        }
        // Perpendicular crossings or touchings: sweep over x with the active
        // horizontals keyed by y. After the collinear check at most one
        // horizontal per y is active, and a vertical may only meet its two
        // neighbours, so every query stops early.
        let mut events: Vec<(i64, u8, usize)> = Vec::with_capacity(2 * hs.len() + vs.len());
        for (k, &(_, _, x0, x1)) in hs.iter().enumerate() {
            events.push((x0, 0, k));
            events.push((x1, 2, k));
        }
        for (k, &(_, x, _, _)) in vs.iter().enumerate() {
            events.push((x, 1, k));
        }
        events.sort_unstable();
        let mut active = std::collections::BTreeMap::new();
        for (_, kind, k) in events {
            match kind {
                0 => {
                    active.insert(hs[k].1, hs[k].0);
                }
                2 => {
                    active.remove(&hs[k].1);
                }
                _ => {
                    let (j, x, y0, y1) = vs[k];
                    for (&y, &i) in active.range(y0..=y1) {
                        if !adjacent(i, j) {
                            return false;
                        }
                        // They must meet only at the shared vertex.
                        let shared = if (i + 1) % n == j {
                            segs[i].1
                        } else {
                            segs[j].1
                        };
                        if shared != Point::new(x, y) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn check(&self) -> Result<()> {
        let n = self.len();
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::InvalidPolygon(format!("{n} vertices")));
        }
        for i in 0..n {
            let (dx, dy) = self.edge_vector(i);
            if (dx == 0) == (dy == 0) {
                return Err(Error::InvalidPolygon(format!(
                    "edge {i} is not axis-parallel or has zero length"
                )));
            }
            let (px, _) = self.edge_vector(i + n - 1);
            if (px == 0) == (dx == 0) {
                return Err(Error::InvalidPolygon(format!(
                    "edges {} and {i} are collinear",
                    (i + n - 1) % n
                )));
            }
        }
        if !self.is_simple() {
            return Err(Error::InvalidPolygon("boundary self-intersects".into()));
        }
        if self.twice_signed_area() <= 0 {
            return Err(Error::InvalidPolygon(
                "vertices are not counterclockwise".into(),
            ));
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// True if the vertex carrying turn 0 is the upper-right corner of the bounding box.
    pub fn first_vertex_upper_right(&self) -> bool {
        let (_, _, x1, y1) = self.bounds();
        self.vertex(0) == Point::new(x1, y1)
    }

    pub fn to_json(&self) -> PolygonJson {
        PolygonJson {
            sequence: self.sequence().to_string(),
            vertices: self.vertices.iter().map(|p| [p.x, p.y]).collect(),
        }
    }

    /// SVG rendering: one closed path, y axis flipped, `scale` pixels per unit.
    pub fn to_svg(&self, scale: i64, show_bbox: bool) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let margin = scale;
        let width = (x1 - x0) * scale + 2 * margin;
        let height = (y1 - y0) * scale + 2 * margin;
        let px = |p: &Point| ((p.x - x0) * scale + margin, (y1 - p.y) * scale + margin);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        if show_bbox {
            let _ = writeln!(
                out,
                r#"  <rect x="{margin}" y="{margin}" width="{}" height="{}" fill="none" stroke="gray" stroke-dasharray="4 2"/>"#,
                (x1 - x0) * scale,
                (y1 - y0) * scale
            );
        }
        let mut d = String::new();
        for (i, p) in self.vertices.iter().enumerate() {
            let (x, y) = px(p);
            let _ = write!(d, "{}{x} {y} ", if i == 0 { "M" } else { "L" });
        }
        d.push('Z');
        let _ = writeln!(
            out,
            r#"  <path d="{d}" fill="lightsteelblue" stroke="black" stroke-width="1"/>"#
        );
        out.push_str("</svg>\n");
        out
    }

    /// Recovers vertices from an SVG path produced by [`GridPolygon::to_svg`].
    pub fn from_svg(svg: &str, scale: i64) -> Result<GridPolygon> {
        let bad = |m: &str| Error::Format(format!("svg: {m}"));
        let start = svg.find(" d=\"").ok_or_else(|| bad("no path"))? + 4;
        let end = svg[start..]
            .find('"')
            .ok_or_else(|| bad("unterminated path"))?
            + start;
        let mut pts = Vec::new();
        for tok in svg[start..end].split(['M', 'L', 'Z']) {
            let nums: Vec<&str> = tok.split_whitespace().collect();
            if nums.is_empty() {
                continue;
            }
            if nums.len() != 2 {
                return Err(bad("expected coordinate pairs"));
            }
            let x: i64 = nums[0].parse().map_err(|_| bad("number"))?;
            let y: i64 = nums[1].parse().map_err(|_| bad("number"))?;
            pts.push((x, y));
        }
        if pts.is_empty() {
            return Err(bad("empty path"));
        }
        let max_y = pts.iter().map(|p| p.1).max().unwrap_or(0);
        let min_x = pts.iter().map(|p| p.0).min().unwrap_or(0);
        let vertices = pts
            .iter()
            .map(|&(x, y)| Point::new((x - min_x) / scale, (max_y - y) / scale))
            .collect();
        GridPolygon::new(vertices)
    }
}

/// Wire format: `{"sequence": "LLLL", "vertices": [[0,0],[1,0],[1,1],[0,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub sequence: String,
    pub vertices: Vec<[i64; 2]>,
}

impl PolygonJson {
    /// Validates the polygon and checks that vertex `i` carries turn `i` of `sequence`.
    pub fn into_polygon(self) -> Result<(TurnSequence, GridPolygon)> {
        let seq = crate::sequences::parse_sequence(&self.sequence)?;
        let poly = GridPolygon::new(
            self.vertices
                .iter()
                .map(|&[x, y]| Point::new(x, y))
                .collect(),
        )?;
        if poly.sequence() != seq {
            return Err(Error::InvalidPolygon(
                "vertices do not realize the stated sequence".into(),
            ));
        }
        Ok((seq, poly))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> GridPolygon {
        GridPolygon::new_unchecked(pts.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    /// Interior cell count by testing every cell center (even-odd rule).
    fn cell_count(p: &GridPolygon) -> i64 {
        let (x0, y0, x1, y1) = p.bounds();
        let mut count = 0;
        for cx in x0..x1 {
            for cy in y0..y1 {
                let (px, py) = (2 * cx + 1, 2 * cy + 1);
                let mut inside = false;
                for i in 0..p.len() {
                    let a = p.vertex(i);
                    let b = p.vertex(i + 1);
                    if a.x == b.x && 2 * a.x > px && (2 * a.y > py) != (2 * b.y > py) {
                        inside = !inside;
                    }
                }
                if inside {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn unit_square() {
        let sq = GridPolygon::new(vec![
            Point::new(0, 0),
            Point::new(1, 0),
            Point::new(1, 1),
            Point::new(0, 1),
        ])
        .unwrap();
        assert_eq!(sq.area(), 1);
        assert_eq!(sq.perimeter(), 4);
        assert_eq!(sq.bbox(), (1, 1));
        assert!(sq.is_simple());
        assert_eq!(sq.sequence().to_string(), "LLLL");
    }

    #[test]
    fn figure_eight_is_not_simple() {
        let p = poly(&[(0, 0), (2, 0), (2, 1), (1, 1), (1, -1), (0, -1)]);
        assert!(!p.is_simple());
        assert!(GridPolygon::new(p.vertices.clone()).is_err());
    }

    #[test]
    fn clockwise_rejected() {
        assert!(GridPolygon::new(vec![
            Point::new(0, 0),
            Point::new(0, 1),
            Point::new(1, 1),
            Point::new(1, 0)
        ])
        .is_err());
    }

    #[test]
    fn touching_vertex_is_not_simple() {
        // Two squares sharing a corner, traced as one boundary.
        let p = poly(&[
            (0, 0),
            (1, 0),
            (1, 1),
            (2, 1),
            (2, 2),
            (1, 2),
            (1, 1),
            (0, 1),
        ]);
        assert!(!p.is_simple());
    }

    #[test]
    fn shoelace_matches_cell_count() {
        let l_shape = poly(&[(0, 0), (3, 0), (3, 1), (1, 1), (1, 4), (0, 4)]);
        assert_eq!(l_shape.area(), cell_count(&l_shape));
        assert_eq!(l_shape.area(), 6);
        assert_eq!(l_shape.perimeter() % 2, 0);
    }

    #[test]
    fn svg_round_trip() {
        let l_shape = GridPolygon::new(vec![
            Point::new(0, 0),
            Point::new(3, 0),
            Point::new(3, 1),
            Point::new(1, 1),
            Point::new(1, 4),
            Point::new(0, 4),
        ])
        .unwrap();
        let svg = l_shape.to_svg(10, true);
        assert_eq!(GridPolygon::from_svg(&svg, 10).unwrap(), l_shape);
    }
}
