//! Random yes-instances of 3-Partition through the fit gadget.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rectiturn::hardness::{
    build_fit_sequence, build_witness, build_wrapped_sequence, fit_sequence_len, verify_fit,
    wrap_extra_len, ThreePartitionInstance,
};
use rectiturn::Turn;

/// A yes-instance with `m` triples summing to `b`, shuffled, plus the
/// partition into index triples that solves it.
fn yes_instance(
    rng: &mut ChaCha8Rng,
    m: usize,
    b: u64,
) -> Option<(ThreePartitionInstance, Vec<[usize; 3]>)> {
    let ok = |x: u64| 4 * x > b && 2 * x < b;
    let mut triples = Vec::new();
    for _ in 0..m {
        let t = (0..200).find_map(|_| {
            let x = rng.gen_range(b / 4..=b / 2);
            let y = rng.gen_range(b / 4..=b / 2);
            let z = b.checked_sub(x + y)?;
            (ok(x) && ok(y) && ok(z)).then_some([x, y, z])
        })?;
        triples.push(t);
    }
    let mut order: Vec<usize> = (0..3 * m).collect();
    order.shuffle(rng);
    let mut a = vec![0; 3 * m];
    let mut partition = vec![[0; 3]; m];
    for (slot, &pos) in order.iter().enumerate() {
        a[pos] = triples[slot / 3][slot % 3];
        partition[slot / 3][slot % 3] = pos;
    }
    Some((ThreePartitionInstance::new(m, b, a).unwrap(), partition))
}

#[test]
fn random_yes_instances_have_fitting_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3a11);
    let mut built = 0;
    for trial in 0..40 {
        let m = 1 + trial % 3;
        let b = rng.gen_range(5..=if m == 3 { 14 } else { 22 });
        let Some((inst, partition)) = yes_instance(&mut rng, m, b) else {
            continue;
        };
        let (s, params) = build_fit_sequence(&inst).unwrap();
        assert_eq!(s.len() as u64, fit_sequence_len(&inst));
        let p = build_witness(&inst, &partition)
            .unwrap_or_else(|e| panic!("{inst:?} {partition:?}: {e}"));
        assert_eq!(p.sequence(), s, "{inst:?}");
        let (w, h) = (params.w as i64, params.h as i64);
        assert!(verify_fit(&p, w, h), "{inst:?}");
        assert!(
            !verify_fit(&p, w - 1, h),
            "wall should absorb all slack: {inst:?}"
        );
        built += 1;
    }
    assert!(built >= 20, "only {built} instances generated");
}

#[test]
fn single_triple() {
    let inst = ThreePartitionInstance::new(1, 7, vec![2, 2, 3]).unwrap();
    let (s, params) = build_fit_sequence(&inst).unwrap();
    assert_eq!((params.rho, params.w, params.h), (7, 44, 104));
    let p = build_witness(&inst, &[[2, 0, 1]]).unwrap();
    assert_eq!(p.sequence(), s);
    assert!(verify_fit(&p, 44, 104));
}

#[test]
fn wrapping_appends_a_balanced_band() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for windings in [2, 3, 4, 6] {
        let (inst, _) = yes_instance(&mut rng, 2, 10).unwrap();
        let (s, mut params) = build_fit_sequence(&inst).unwrap();
        params.wrap_windings = windings;
        let t = build_wrapped_sequence(&s, &params).unwrap();
        assert_eq!(&t.turns()[..s.len()], s.turns());
        assert_eq!(t.len() as u64, s.len() as u64 + wrap_extra_len(&params));
        let band = &t.turns()[s.len()..];
        let lefts = band.iter().filter(|&&x| x == Turn::L).count();
        assert_eq!(2 * lefts, band.len(), "band must be turn-neutral");
    }
}
