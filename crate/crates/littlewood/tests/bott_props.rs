//! Placement rule invariants: independence of the ambient vector length,
//! the untwisted regime, and counting consistency.

use littlewood::{bott, bott_with_r, delta_count, partitions_of, BottResult, Partition};
use proptest::prelude::*;

fn arb_partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

#[test]
fn untwisted_regime_pads_with_a_long_first_row() {
    for size in 0..=6 {
        for lambda in partitions_of(size) {
            for n in (size + lambda.part(1))..=(size + lambda.part(1) + 4) {
                let mut padded = vec![n - size];
                padded.extend_from_slice(lambda.parts());
                let expected = Partition::new(padded).unwrap();
                assert_eq!(
                    bott(&lambda, n as i64),
                    BottResult::Defined { result: expected, delta: 0 },
                    "lambda {lambda:?}, n {n}"
                );
            }
        }
    }
}

#[test]
fn defined_results_are_partitions_of_n() {
    for size in 0..=7 {
        for lambda in partitions_of(size) {
            for n in 0..=12i64 {
                if let BottResult::Defined { result, delta } = bott(&lambda, n) {
                    assert_eq!(result.size() as i64, n, "lambda {lambda:?}, n {n}");
                    assert!(delta <= lambda.len(), "sorting length is at most l(lambda)");
                    assert_eq!(delta, delta_count(&lambda, n));
                }
            }
        }
    }
}

#[test]
fn negative_ranks_are_never_defined() {
    for size in 0..=6 {
        for lambda in partitions_of(size) {
            for n in -5..0i64 {
                assert_eq!(bott(&lambda, n), BottResult::Undefined);
            }
        }
    }
}

proptest! {
    #[test]
    fn placement_ignores_the_vector_length(
        lambda in arb_partition(6, 6),
        n in 0i64..=15,
        extra in 0usize..5,
    ) {
        let base = bott(&lambda, n);
        let widened = bott_with_r(&lambda, n, lambda.len() + 1 + extra);
        prop_assert_eq!(base, widened);
    }

    #[test]
    fn delta_zero_exactly_in_the_untwisted_regime(
        lambda in arb_partition(6, 6),
        n in 0i64..=15,
    ) {
        let untwisted = n >= (lambda.size() + lambda.part(1)) as i64;
        match bott(&lambda, n) {
            BottResult::Defined { delta: 0, .. } => prop_assert!(untwisted),
            _ => prop_assert!(!untwisted),
        }
    }
}
