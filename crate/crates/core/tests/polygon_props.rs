//! The sweep-based validity check against a brute-force pairwise test.

use proptest::prelude::*;
use rectiturn::{GridPolygon, Point};

type Seg = (Point, Point);

fn touches(a: Seg, b: Seg) -> bool {
    let (ax0, ax1) = (a.0.x.min(a.1.x), a.0.x.max(a.1.x));
    let (ay0, ay1) = (a.0.y.min(a.1.y), a.0.y.max(a.1.y));
    let (bx0, bx1) = (b.0.x.min(b.1.x), b.0.x.max(b.1.x));
    let (by0, by1) = (b.0.y.min(b.1.y), b.0.y.max(b.1.y));
    ax0 <= bx1 && bx0 <= ax1 && ay0 <= by1 && by0 <= ay1
}

fn brute_force_valid(v: &[Point]) -> bool {
    let n = v.len();
    let seg = |i: usize| (v[i], v[(i + 1) % n]);
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if !adjacent && touches(seg(i), seg(j)) {
                return false;
            }
        }
    }
    let twice_area: i64 = (0..n)
        .map(|i| v[i].x * v[(i + 1) % n].y - v[(i + 1) % n].x * v[i].y)
        .sum();
    twice_area > 0
}

/// Alternating horizontal and vertical edges through the given coordinates;
/// `None` if some edge would have length zero.
fn staircase_loop(xs: &[i64], ys: &[i64]) -> Option<Vec<Point>> {
    let k = xs.len();
    let mut v = Vec::with_capacity(2 * k);
    for i in 0..k {
        v.push(Point::new(xs[i], ys[i]));
        v.push(Point::new(xs[(i + 1) % k], ys[i]));
    }
    let n = v.len();
    (0..n).all(|i| v[i] != v[(i + 1) % n]).then_some(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4000))]
    #[test]
    fn sweep_matches_brute_force(coords in (2usize..8).prop_flat_map(|k| {
        (prop::collection::vec(0i64..6, k), prop::collection::vec(0i64..6, k))
    })) {
        let (xs, ys) = coords;
        if let Some(v) = staircase_loop(&xs, &ys) {
            prop_assert_eq!(GridPolygon::new(v.clone()).is_ok(), brute_force_valid(&v), "{:?}", v);
        }
    }
}
