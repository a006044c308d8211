//! xy-monotone closed forms and constructions against the oracle and the DPs.

use rectiturn::oracle::{oracle_min, OracleConfig};
use rectiturn::x_solver::{x_min_area, x_min_bbox, x_min_perimeter};
use rectiturn::xy_solver::xy_perimeter_formula;
use rectiturn::{
    decompose_x, decompose_xy, xy_min_area, xy_min_bbox, xy_min_perimeter, Objective,
    StairDecomposition,
};

fn quadruples(max_sum: usize) -> Vec<StairDecomposition> {
    let mut out = Vec::new();
    for r1 in 0..=max_sum {
        for r2 in 0..=max_sum - r1 {
            for r3 in 0..=max_sum - r1 - r2 {
                for r4 in 0..=max_sum - r1 - r2 - r3 {
                    out.push(StairDecomposition::new(r1, r2, r3, r4));
                }
            }
        }
    }
    out
}

#[test]
fn quadruples_match_oracle() {
    for d in quadruples(4) {
        let s = d.sequence();
        assert_eq!(decompose_xy(&s).unwrap().sequence(), s);
        let (a, pa) = xy_min_area(&d);
        let (p, pp) = xy_min_perimeter(&d);
        let (w, h, pb) = xy_min_bbox(&d);
        for poly in [&pa, &pp, &pb] {
            assert!(poly.is_valid(), "{d:?}");
            assert_eq!(poly.sequence(), s, "{d:?}");
        }
        assert_eq!(
            (pa.area(), pp.perimeter(), pb.bbox()),
            (a, p, (w, h)),
            "{d:?}"
        );
        let oa = oracle_min(&s, &OracleConfig::new(Objective::Area, 3))
            .unwrap()
            .0;
        let op = oracle_min(&s, &OracleConfig::new(Objective::Perimeter, 3))
            .unwrap()
            .0;
        let ob = oracle_min(&s, &OracleConfig::new(Objective::Bbox, 3))
            .unwrap()
            .0;
        assert_eq!((a, p, w * h), (oa, op, ob), "{d:?}");
    }
}

#[test]
fn opposite_pairs_give_4r_plus_6() {
    for r in 1..30 {
        let (w, h, _) = xy_min_bbox(&StairDecomposition::new(r, 0, r, 0));
        assert_eq!(w * h, (r as i64 + 1) * (r as i64 + 2));
        assert_eq!(
            xy_perimeter_formula(&StairDecomposition::new(r, 0, r, 0)),
            4 * r as i64 + 6
        );
        assert_eq!(
            xy_perimeter_formula(&StairDecomposition::new(0, r, 0, r)),
            4 * r as i64 + 6
        );
    }
}

#[test]
fn closed_forms_match_dps() {
    for d in quadruples(10) {
        let hd = decompose_x(&d.sequence()).unwrap();
        assert_eq!(xy_perimeter_formula(&d), x_min_perimeter(&hd).0, "{d:?}");
        let (w, h, _) = xy_min_bbox(&d);
        let (dw, dh, _) = x_min_bbox(&hd);
        assert_eq!(w * h, dw * dh, "{d:?}");
        if d.total() <= 8 {
            assert_eq!(xy_min_area(&d).0, x_min_area(&hd).0, "{d:?}");
        }
    }
}

#[test]
fn quarter_turns_keep_the_sequence() {
    for d in quadruples(5) {
        let q = d.rotated_quarter();
        assert_eq!(q.sequence(), d.sequence(), "{d:?}");
        assert_eq!(
            decompose_xy(&q.sequence()).unwrap().sequence(),
            d.sequence()
        );
    }
}
