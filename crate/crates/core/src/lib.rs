//! Realizing rectilinear turn sequences as small grid polygons.
//!
//! A turn sequence is a cyclic word over `{L, R}` with four more `L`s than
//! `R`s. The crate finds polygons realizing such a sequence that minimize the
//! area, the perimeter or the bounding-box area, exactly and in polynomial time
//! for x-monotone and xy-monotone sequences, and by exhaustive search for small
//! general ones. It also generates the 3-Partition gadget sequences for which
//! the general problem is hard.

pub mod canonical;
pub mod error;
pub mod hardness;
pub mod oracle;
pub mod polygon;
pub mod sequences;
pub mod solve;
pub mod x_solver;
pub mod xy_solver;

pub use canonical::{canonicalize_x_bbox, canonicalize_x_perimeter};
pub use error::{Error, Result};
pub use oracle::{all_sequences, delta_Delta, enumerate_realizations, oracle_min, OracleConfig};
pub use polygon::{GridPolygon, Measures, Objective, Point, PolygonJson};
pub use sequences::{
    classify, decompose_x, decompose_xy, directions, parse_sequence, ClassTag, Direction,
    HullDecomposition, SequenceClass, StairDecomposition, Turn, TurnSequence,
};
pub use solve::solve;
pub use x_solver::{x_min_area, x_min_bbox, x_min_perimeter};
pub use xy_solver::{
    two_stair_construct, two_stair_min_area, xy_min_area, xy_min_bbox, xy_min_perimeter,
};
