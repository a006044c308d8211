//! Rectilinear angle sequences: parsing, validation, headings, classification
//! and the stair / hull decompositions used by the solvers.
//!
//! Conventions used throughout the crate: vertex `i` of a polygon carries turn
//! `i` of its sequence, and edge `i` runs from vertex `i` to vertex `i + 1`
//! (indices taken modulo `n`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Turn {
    /// Convex vertex, +90 degrees.
    L,
    /// Reflex vertex, -90 degrees.
    R,
}

impl Turn {
    pub fn as_char(self) -> char {
        match self {
            Turn::L => 'L',
            Turn::R => 'R',
        }
    }

    pub fn flipped(self) -> Turn {
        match self {
            Turn::L => Turn::R,
            Turn::R => Turn::L,
        }
    }
}

/// Grid heading of a boundary edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    East,
    North,
    West,
    South,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::East,
        Direction::North,
        Direction::West,
        Direction::South,
    ];

    fn index(self) -> usize {
        match self {
            Direction::East => 0,
            Direction::North => 1,
            Direction::West => 2,
            Direction::South => 3,
        }
    }

    fn from_index(i: usize) -> Direction {
        Self::ALL[i % 4]
    }

    /// Heading after taking `turn`: `L` rotates by +90 degrees, `R` by -90.
    pub fn turn(self, turn: Turn) -> Direction {
        match turn {
            Turn::L => Self::from_index(self.index() + 1),
            Turn::R => Self::from_index(self.index() + 3),
        }
    }

    pub fn opposite(self) -> Direction {
        Self::from_index(self.index() + 2)
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Direction::East | Direction::West)
    }

    pub fn unit(self) -> (i64, i64) {
        match self {
            Direction::East => (1, 0),
            Direction::North => (0, 1),
            Direction::West => (-1, 0),
            Direction::South => (0, -1),
        }
    }

    /// The heading of the unit vector `(dx, dy)`'s sign pattern, if axis-parallel.
    pub fn from_delta(dx: i64, dy: i64) -> Option<Direction> {
        match (dx.signum(), dy.signum()) {
            (1, 0) => Some(Direction::East),
            (-1, 0) => Some(Direction::West),
            (0, 1) => Some(Direction::North),
            (0, -1) => Some(Direction::South),
            _ => None,
        }
    }
}

/// A cyclic word over `{L, R}`.
///
/// Construction does not check the balance condition; call [`TurnSequence::validate`]
/// before handing a sequence to a solver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TurnSequence {
    turns: Vec<Turn>,
}

impl TurnSequence {
    pub fn new(turns: Vec<Turn>) -> Self {
        TurnSequence { turns }
    }

    pub fn turns(&self) -> &[Turn] {
        &self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    /// Turn at cyclic index `i`.
    pub fn at(&self, i: usize) -> Turn {
        self.turns[i % self.turns.len()]
    }

    pub fn lefts(&self) -> usize {
        self.turns.iter().filter(|&&t| t == Turn::L).count()
    }

    /// Number of reflex vertices `r`.
    pub fn rights(&self) -> usize {
        self.turns.len() - self.lefts()
    }

    pub fn validate(&self) -> Result<()> {
        if self.turns.len() < 4 {
            return Err(Error::TooShort(self.turns.len()));
        }
        let (left, right) = (self.lefts(), self.rights());
        if left != right + 4 {
            return Err(Error::BalanceViolation { left, right });
        }
        Ok(())
    }

    /// Cyclic rotation so that the result starts at old index `k`.
    pub fn rotated(&self, k: usize) -> TurnSequence {
        let n = self.turns.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut turns = Vec::with_capacity(n);
        turns.extend_from_slice(&self.turns[k..]);
        turns.extend_from_slice(&self.turns[..k]);
        TurnSequence { turns }
    }

    /// Sequence of the mirror image, walked counterclockwise. Vertex `i` of the
    /// mirrored polygon carries old turn `n - 1 - i`.
    pub fn reflected(&self) -> TurnSequence {
        let mut turns = self.turns.clone();
        turns.reverse();
        TurnSequence { turns }
    }

    /// True if edge `i` has turn `a` at its start vertex and `b` at its end vertex.
    pub(crate) fn edge_is(&self, i: usize, a: Turn, b: Turn) -> bool {
        self.at(i) == a && self.at(i + 1) == b
    }

    /// Smallest `k` with `self` rotated by `k` equal to `other`, if any.
    pub fn rotation_to(&self, other: &TurnSequence) -> Option<usize> {
        if self.len() != other.len() {
            return None;
        }
        let n = self.len();
        (0..n.max(1)).find(|&k| (0..n).all(|i| self.at(i + k) == other.turns[i]))
    }
}

impl fmt::Display for TurnSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.turns {
            write!(f, "{}", t.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for TurnSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

/// Parses the text format: `L`/`R` characters, whitespace ignored, `#` starts
/// a comment running to the end of the line.
pub fn parse_sequence(text: &str) -> Result<TurnSequence> {
    let mut turns = Vec::new();
    let mut in_comment = false;
    for (position, c) in text.chars().enumerate() {
        if in_comment {
            if c == '\n' {
                in_comment = false;
            }
            continue;
        }
        match c {
            'L' => turns.push(Turn::L),
            'R' => turns.push(Turn::R),
            '#' => in_comment = true,
            c if c.is_whitespace() => {}
            found => return Err(Error::IllegalCharacter { position, found }),
        }
    }
    if turns.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(TurnSequence { turns })
}

/// Headings of all edges when edge 0 heads `start`.
pub fn directions(s: &TurnSequence, start: Direction) -> Vec<Direction> {
    let mut out = Vec::with_capacity(s.len());
    let mut heading = start;
    for i in 0..s.len() {
        if i > 0 {
            heading = heading.turn(s.at(i));
        }
        out.push(heading);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    XYMonotone,
    XMonotone,
    General,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceClass {
    pub tag: ClassTag,
    /// Index of the normalized start: the first `LL` edge for xy-monotone input,
    /// the first `RR` edge for x-monotone input.
    pub rotation_offset: usize,
}

fn first_edge_of(s: &TurnSequence, a: Turn, b: Turn) -> Option<usize> {
    (0..s.len()).find(|&i| s.edge_is(i, a, b))
}

fn has_rr(s: &TurnSequence) -> bool {
    first_edge_of(s, Turn::R, Turn::R).is_some()
}

/// True if, with edge 0 heading `start`, the East-going edges form one cyclic
/// run among the horizontal edges (and hence so do the West-going ones).
fn hulls_contiguous(headings: &[Direction]) -> bool {
    let horizontals: Vec<Direction> = headings
        .iter()
        .copied()
        .filter(|d| d.is_horizontal())
        .collect();
    let k = horizontals.len();
    let switches = (0..k)
        .filter(|&i| {
            horizontals[i] == Direction::East && horizontals[(i + 1) % k] == Direction::West
        })
        .count();
    switches == 1
}

/// Start headings for edge 0 under which the sequence is x-monotone.
pub(crate) fn x_monotone_starts(s: &TurnSequence) -> Vec<Direction> {
    Direction::ALL
        .into_iter()
        .filter(|&d| hulls_contiguous(&directions(s, d)))
        .collect()
}

/// Classifies a valid sequence.
pub fn classify(s: &TurnSequence) -> SequenceClass {
    if s.validate().is_err() {
        return SequenceClass {
            tag: ClassTag::General,
            rotation_offset: 0,
        };
    }
    if !has_rr(s) {
        let offset = first_edge_of(s, Turn::L, Turn::L).unwrap_or(0);
        return SequenceClass {
            tag: ClassTag::XYMonotone,
            rotation_offset: offset,
        };
    }
    if !x_monotone_starts(s).is_empty() {
        let offset = first_edge_of(s, Turn::R, Turn::R).unwrap_or(0);
        return SequenceClass {
            tag: ClassTag::XMonotone,
            rotation_offset: offset,
        };
    }
    SequenceClass {
        tag: ClassTag::General,
        rotation_offset: 0,
    }
}

/// Reflex counts of the four stairs of an xy-monotone sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StairDecomposition {
    /// Top-right stair.
    pub r1: usize,
    /// Top-left stair.
    pub r2: usize,
    /// Bottom-left stair.
    pub r3: usize,
    /// Bottom-right stair.
    pub r4: usize,
    /// Index of the edge drawn as the top extreme edge.
    pub rotation_offset: usize,
}

impl StairDecomposition {
    pub fn new(r1: usize, r2: usize, r3: usize, r4: usize) -> Self {
        StairDecomposition {
            r1,
            r2,
            r3,
            r4,
            rotation_offset: 0,
        }
    }

    pub fn total(&self) -> usize {
        self.r1 + self.r2 + self.r3 + self.r4
    }

    pub fn r_top(&self) -> usize {
        self.r1 + self.r2
    }

    pub fn r_bottom(&self) -> usize {
        self.r3 + self.r4
    }

    pub fn r_left(&self) -> usize {
        self.r2 + self.r3
    }

    pub fn r_right(&self) -> usize {
        self.r4 + self.r1
    }

    /// Stair counts in ccw order starting after the top edge: TL, BL, BR, TR.
    pub fn ccw(&self) -> [usize; 4] {
        [self.r2, self.r3, self.r4, self.r1]
    }

    pub fn nonempty(&self) -> usize {
        self.ccw().iter().filter(|&&r| r > 0).count()
    }

    /// The sequence `L (LR)^TL L (LR)^BL L (LR)^BR L (LR)^TR`, rotated so that
    /// it starts at the top extreme edge (`rotation_offset` is 0).
    pub fn expand(&self) -> TurnSequence {
        // Top edge is edge 0: vertex 0 and vertex 1 are both L.
        let mut turns = vec![Turn::L];
        for r in [self.r2, self.r3, self.r4, self.r1] {
            turns.push(Turn::L);
            for _ in 0..r {
                turns.push(Turn::R);
                turns.push(Turn::L);
            }
        }
        turns.pop();
        TurnSequence::new(turns)
    }

    /// The sequence this decomposition came from: [`Self::expand`] rotated back
    /// by `rotation_offset`.
    pub fn sequence(&self) -> TurnSequence {
        let e = self.expand();
        let n = e.len();
        e.rotated((n - self.rotation_offset % n) % n)
    }

    /// The decomposition of the same polygon turned by 90 degrees ccw
    /// (the right extreme edge becomes the top one).
    pub fn rotated_quarter(&self) -> Self {
        // The right extreme edge sits just before the TR stair, counting back
        // from the top edge.
        let n = 4 + 2 * self.total();
        let offset = (self.rotation_offset + n - 1 - 2 * self.r1) % n;
        StairDecomposition {
            r1: self.r4,
            r2: self.r1,
            r3: self.r2,
            r4: self.r3,
            rotation_offset: offset,
        }
    }
}

/// Splits an xy-monotone sequence into its four stairs, using the first `LL`
/// edge as the top extreme edge.
pub fn decompose_xy(s: &TurnSequence) -> Result<StairDecomposition> {
    s.validate()?;
    if has_rr(s) {
        return Err(Error::NotXYMonotone);
    }
    let n = s.len();
    let top = first_edge_of(s, Turn::L, Turn::L).ok_or(Error::NotXYMonotone)?;
    let extremes: Vec<usize> = (0..n)
        .map(|i| (top + i) % n)
        .filter(|&i| s.edge_is(i, Turn::L, Turn::L))
        .collect();
    if extremes.len() != 4 {
        return Err(Error::NotXYMonotone);
    }
    let mut counts = [0usize; 4];
    for (k, count) in counts.iter_mut().enumerate() {
        let from = extremes[k];
        let to = if k == 3 {
            extremes[0] + n
        } else {
            extremes[k + 1]
        };
        *count = (from + 1..=to).filter(|&v| s.at(v) == Turn::R).count();
    }
    let [tl, bl, br, tr] = counts;
    Ok(StairDecomposition {
        r1: tr,
        r2: tl,
        r3: bl,
        r4: br,
        rotation_offset: top,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    /// `LL` edge: a local extremum on the outside of its hull.
    Outer,
    /// `RR` edge: the bottom of a notch.
    Inner,
    /// `LR` or `RL` edge inside a stair.
    Step,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HullEdge {
    /// Edge index in the sequence.
    pub edge: usize,
    pub kind: EdgeKind,
}

/// Upper/lower hull structure of an x-monotone sequence.
///
/// The orientation is chosen so that the upper hull carries at least as many
/// reflex vertices as the lower one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullDecomposition {
    pub sequence: TurnSequence,
    /// Heading of edge 0.
    pub start: Direction,
    /// Edge headings under `start`.
    pub headings: Vec<Direction>,
    /// Horizontal edges of the upper hull, right to left.
    pub upper: Vec<HullEdge>,
    /// Horizontal edges of the lower hull, right to left.
    pub lower: Vec<HullEdge>,
    /// Leftmost vertical edge (heads South).
    pub left_edge: usize,
    /// Rightmost vertical edge (heads North).
    pub right_edge: usize,
    pub r_top: usize,
    pub r_bottom: usize,
    /// True if the hulls were swapped (half-turn) relative to the orientation
    /// that puts the first `RR` edge on the lower hull.
    pub flipped: bool,
    pub rotation_offset: usize,
}

impl HullDecomposition {
    /// Upper hull edge indices, left to right.
    pub fn upper_ltr(&self) -> Vec<usize> {
        self.upper.iter().rev().map(|e| e.edge).collect()
    }

    /// Lower hull edge indices, left to right.
    pub fn lower_ltr(&self) -> Vec<usize> {
        self.lower.iter().rev().map(|e| e.edge).collect()
    }

    /// Vertical steps between consecutive upper-hull edges, left to right:
    /// `+1` if the hull rises when moving right.
    pub fn upper_steps(&self) -> Vec<i64> {
        let n = self.sequence.len();
        // ccw walks the upper hull right to left; the vertical after edge e_{i+1} leads to e_i.
        let ltr = self.upper_ltr();
        ltr.windows(2)
            .map(|w| {
                let vertical = (w[1] + 1) % n;
                if self.headings[vertical] == Direction::North {
                    -1
                } else {
                    1
                }
            })
            .collect()
    }

    /// Vertical steps between consecutive lower-hull edges, left to right.
    pub fn lower_steps(&self) -> Vec<i64> {
        let n = self.sequence.len();
        let ltr = self.lower_ltr();
        ltr.windows(2)
            .map(|w| {
                let vertical = (w[0] + 1) % n;
                if self.headings[vertical] == Direction::North {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    pub fn has_inner_extreme(&self) -> bool {
        self.upper
            .iter()
            .chain(&self.lower)
            .any(|e| e.kind == EdgeKind::Inner)
    }
}

pub(crate) fn hull_decomposition_for(
    s: &TurnSequence,
    start: Direction,
    flipped: bool,
    offset: usize,
) -> HullDecomposition {
    let n = s.len();
    let headings = directions(s, start);
    let kind_of = |i: usize| {
        if s.edge_is(i, Turn::L, Turn::L) {
            EdgeKind::Outer
        } else if s.edge_is(i, Turn::R, Turn::R) {
            EdgeKind::Inner
        } else {
            EdgeKind::Step
        }
    };
    // The vertical between the last West edge and the first East edge is e_L.
    let mut left_edge = 0;
    let mut right_edge = 0;
    for i in 0..n {
        let prev = headings[(i + n - 1) % n];
        let next = headings[(i + 1) % n];
        if headings[i] == Direction::South && prev == Direction::West && next == Direction::East {
            left_edge = i;
        }
        if headings[i] == Direction::North && prev == Direction::East && next == Direction::West {
            right_edge = i;
        }
    }
    // ccw from e_L: lower hull left to right, then e_R, then upper hull right to left.
    let mut lower_ltr = Vec::new();
    let mut i = (left_edge + 1) % n;
    while i != right_edge {
        if headings[i].is_horizontal() {
            lower_ltr.push(HullEdge {
                edge: i,
                kind: kind_of(i),
            });
        }
        i = (i + 1) % n;
    }
    let mut upper_rtl = Vec::new();
    let mut i = (right_edge + 1) % n;
    while i != left_edge {
        if headings[i].is_horizontal() {
            upper_rtl.push(HullEdge {
                edge: i,
                kind: kind_of(i),
            });
        }
        i = (i + 1) % n;
    }
    lower_ltr.reverse();
    let r_top = upper_rtl.len() - 1;
    let r_bottom = lower_ltr.len() - 1;
    HullDecomposition {
        sequence: s.clone(),
        start,
        headings,
        upper: upper_rtl,
        lower: lower_ltr,
        left_edge,
        right_edge,
        r_top,
        r_bottom,
        flipped,
        rotation_offset: offset,
    }
}

/// Splits an x-monotone (or xy-monotone) sequence into upper and lower hulls.
pub fn decompose_x(s: &TurnSequence) -> Result<HullDecomposition> {
    s.validate()?;
    let starts = x_monotone_starts(s);
    if starts.is_empty() {
        return Err(Error::NotXMonotone);
    }
    let offset = first_edge_of(s, Turn::R, Turn::R);
    // Reference orientation: the first RR edge heads East (lies on the lower hull).
    let reference = match offset {
        Some(k) => *starts
            .iter()
            .find(|&&d| directions(s, d)[k] == Direction::East)
            .unwrap_or(&starts[0]),
        None => starts[0],
    };
    let base = hull_decomposition_for(s, reference, false, offset.unwrap_or(0));
    if base.r_top >= base.r_bottom {
        return Ok(base);
    }
    Ok(hull_decomposition_for(
        s,
        reference.opposite(),
        true,
        offset.unwrap_or(0),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "LLRRLLRLLRLRLLRLRLLR";

    fn seq(s: &str) -> TurnSequence {
        parse_sequence(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(seq("LLLL").turns(), &[Turn::L; 4]);
        let ex = seq(EXAMPLE);
        assert_eq!((ex.len(), ex.lefts(), ex.rights()), (20, 12, 8));
        assert_eq!(
            parse_sequence("LLXR"),
            Err(Error::IllegalCharacter {
                position: 2,
                found: 'X'
            })
        );
        assert_eq!(parse_sequence("  # nothing\n"), Err(Error::EmptySequence));
        assert_eq!(seq("LL # comment R\n L L").to_string(), "LLLL");
    }

    #[test]
    fn validate_examples() {
        assert!(seq("LLLL").validate().is_ok());
        assert_eq!(
            seq("LLRR").validate(),
            Err(Error::BalanceViolation { left: 2, right: 2 })
        );
        assert_eq!(seq("LL").validate(), Err(Error::TooShort(2)));
        let ex = seq(EXAMPLE);
        assert!(ex.validate().is_ok());
        assert_eq!(ex.len(), 2 * ex.rights() + 4);
    }

    #[test]
    fn square_headings() {
        use Direction::*;
        assert_eq!(
            directions(&seq("LLLL"), East),
            vec![East, North, West, South]
        );
    }

    #[test]
    fn example_hulls_have_single_heading() {
        let d = decompose_x(&seq(EXAMPLE)).unwrap();
        for e in &d.lower {
            assert_eq!(d.headings[e.edge], Direction::East);
        }
        for e in &d.upper {
            assert_eq!(d.headings[e.edge], Direction::West);
        }
        assert_eq!(d.r_top + d.r_bottom, 8);
        assert!(d.r_top >= d.r_bottom);
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify(&seq("LLLL")),
            SequenceClass {
                tag: ClassTag::XYMonotone,
                rotation_offset: 0
            }
        );
        assert_eq!(classify(&seq(EXAMPLE)).tag, ClassTag::XMonotone);
        // A square with one notch from the top and one from the left.
        let general = seq("LLLLRRLLLRRL");
        assert!(general.validate().is_ok());
        assert_eq!(classify(&general).tag, ClassTag::General);
        for d in Direction::ALL {
            assert!(!hulls_contiguous(&directions(&general, d)));
        }
    }

    #[test]
    fn xy_decomposition() {
        assert_eq!(decompose_xy(&seq("LLLL")).unwrap().ccw(), [0, 0, 0, 0]);
        let d = decompose_xy(&seq("LLRLLLRL")).unwrap();
        assert_eq!((d.r1, d.r2, d.r3, d.r4), (0, 1, 0, 1));
        assert_eq!(decompose_xy(&seq(EXAMPLE)), Err(Error::NotXYMonotone));
    }

    #[test]
    fn xy_expand_round_trip() {
        for quad in [(0, 0, 0, 0), (1, 2, 0, 3), (2, 0, 2, 0), (1, 1, 1, 1)] {
            let d = StairDecomposition::new(quad.0, quad.1, quad.2, quad.3);
            let s = d.expand();
            assert!(s.validate().is_ok());
            let back = decompose_xy(&s).unwrap();
            assert!(back.expand().rotation_to(&s).is_some());
            assert_eq!(back.total(), d.total());
        }
    }

    #[test]
    fn square_hulls() {
        let d = decompose_x(&seq("LLLL")).unwrap();
        assert_eq!((d.r_top, d.r_bottom), (0, 0));
        assert!(!d.has_inner_extreme());
    }
}
