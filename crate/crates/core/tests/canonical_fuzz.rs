//! Canonicalizers over every small x-monotone realization.

use rectiturn::canonical::{satisfies_bbox_canonical, satisfies_perimeter_canonical};
use rectiturn::oracle::{all_sequences, enumerate_realizations, OracleConfig};
use rectiturn::{canonicalize_x_bbox, canonicalize_x_perimeter, classify, ClassTag, Objective};

#[test]
fn canonical_forms_over_enumerations() {
    let mut cases = 0usize;
    for n in [4, 6, 8, 10, 12] {
        for s in all_sequences(n, true).unwrap() {
            if classify(&s).tag == ClassTag::General {
                continue;
            }
            for p in enumerate_realizations(&s, &OracleConfig::new(Objective::Area, 3)).unwrap() {
                let b = canonicalize_x_bbox(&p).unwrap();
                assert!(b.is_valid(), "{s} {p:?}");
                assert_eq!(b.sequence(), s);
                assert!(b.measures().bbox_area() <= p.measures().bbox_area());
                assert!(satisfies_bbox_canonical(&b).unwrap(), "{s} {p:?} -> {b:?}");
                let q = canonicalize_x_perimeter(&p).unwrap();
                assert!(q.is_valid(), "{s} {p:?}");
                assert_eq!(q.sequence(), s);
                assert!(q.perimeter() <= p.perimeter());
                assert!(
                    satisfies_perimeter_canonical(&q).unwrap(),
                    "{s} {p:?} -> {q:?}"
                );
                cases += 1;
            }
        }
    }
    eprintln!("{cases} cases");
    assert!(cases >= 10_000);
}
