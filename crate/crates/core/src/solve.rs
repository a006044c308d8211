//! One entry point over the monotone solvers.

use crate::error::{Error, Result};
use crate::polygon::{GridPolygon, Objective};
use crate::sequences::{classify, decompose_x, decompose_xy, ClassTag, TurnSequence};
use crate::x_solver::{x_min_area, x_min_bbox, x_min_perimeter};
use crate::xy_solver::{xy_min_area, xy_min_bbox, xy_min_perimeter};

/// Optimal value and witness for an x- or xy-monotone sequence. The witness
/// realizes `s` with vertex `i` carrying turn `i`. General sequences give
/// [`Error::NotXMonotone`]; use the oracle for those.
pub fn solve(s: &TurnSequence, objective: Objective) -> Result<(i64, GridPolygon)> {
    s.validate()?;
    let area = |(w, h, p): (i64, i64, GridPolygon)| (w * h, p);
    match classify(s).tag {
        ClassTag::General => Err(Error::NotXMonotone),
        ClassTag::XYMonotone => {
            let d = decompose_xy(s)?;
            Ok(match objective {
                Objective::Area => xy_min_area(&d),
                Objective::Perimeter => xy_min_perimeter(&d),
                Objective::Bbox => area(xy_min_bbox(&d)),
            })
        }
        ClassTag::XMonotone => {
            let d = decompose_x(s)?;
            Ok(match objective {
                Objective::Area => x_min_area(&d),
                Objective::Perimeter => x_min_perimeter(&d),
                Objective::Bbox => area(x_min_bbox(&d)),
            })
        }
    }
}
