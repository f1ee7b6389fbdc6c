//! Multiplicity spaces, stable polynomials, and descriptors against
//! independent routes: hook content for dimensions, character values for
//! untwisted evaluations, and structural invariants of the tables.

mod support;

use littlewood::{
    bott, complex_terms, eval_stable_specht, mn_character, mult_dim, multiplicity_table,
    partitions_of, rat, schur_dimension, stable_specht, BottResult, CycleType, Partition,
};

#[test]
fn the_diagonal_multiplicity_is_one_and_larger_shapes_vanish() {
    for size in 0..=5 {
        for lambda in partitions_of(size) {
            assert_eq!(mult_dim(&lambda, &lambda), 1, "diagonal at {lambda:?}");
            for bigger in partitions_of(size + 1) {
                assert_eq!(mult_dim(&lambda, &bigger), 0, "{bigger:?} in {lambda:?}");
            }
        }
    }
}

#[test]
fn tables_list_exactly_the_nonzero_multiplicities() {
    for size in 0..=4 {
        for lambda in partitions_of(size) {
            let table = multiplicity_table(&lambda);
            for (mu, &m) in &table.entries {
                assert!(m > 0);
                assert_eq!(m, mult_dim(&lambda, mu));
            }
            for small in 0..=size {
                for mu in partitions_of(small) {
                    let m = mult_dim(&lambda, &mu);
                    if m > 0 {
                        assert_eq!(table.entries.get(&mu), Some(&m));
                    } else {
                        assert!(!table.entries.contains_key(&mu));
                    }
                }
            }
        }
    }
}

#[test]
fn stable_polynomials_have_unit_leading_term_and_alternating_signs() {
    for size in 0..=6 {
        for lambda in partitions_of(size) {
            let f = stable_specht(&lambda);
            assert_eq!(f.coeff(&lambda), rat(1), "leading coefficient at {lambda:?}");
            for (mu, c) in f.terms() {
                assert!(mu.size() <= size, "support stays at or below |lambda|");
                assert!(c.is_integer(), "integral coefficients");
                let sign = if (size - mu.size()) % 2 == 0 { rat(1) } else { rat(-1) };
                assert!(c.clone() * sign > rat(0), "sign pattern at {lambda:?}, term {mu:?}: {c}");
            }
        }
    }
}

#[test]
fn untwisted_evaluations_are_plain_character_values() {
    // for n at least |lambda| + lambda_1 the placement has no twist and the
    // evaluation is the character of the padded shape
    for size in 0..=4 {
        for lambda in partitions_of(size) {
            for n in (size + lambda.part(1))..=8 {
                let mut padded = vec![n - size];
                padded.extend_from_slice(lambda.parts());
                let shape = Partition::new(padded).unwrap();
                for rho in partitions_of(n) {
                    let rho = CycleType::new(rho);
                    assert_eq!(
                        eval_stable_specht(&lambda, &rho),
                        mn_character(&shape, &rho),
                        "lambda {lambda:?}, rho {rho:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn weyl_dimensions_match_hook_content() {
    for size in 0..=5 {
        for mu in partitions_of(size) {
            for n in 0..=8 {
                assert_eq!(
                    schur_dimension(&mu, n),
                    support::hook_content_dim(&mu, n),
                    "dim of {mu:?} at rank {n}"
                );
            }
        }
    }
}

#[test]
fn degree_zero_of_every_descriptor_is_the_shape_itself() {
    for size in 0..=4 {
        for lambda in partitions_of(size) {
            for n in 0..=6 {
                let desc = complex_terms(&lambda, n);
                let top = &desc.terms[0];
                assert_eq!(top.len(), 1);
                assert_eq!(top[0].mu, lambda);
                assert_eq!(top[0].mult, 1);
                assert_eq!(top[0].dim, schur_dimension(&lambda, n));
            }
        }
    }
}

#[test]
fn acyclic_descriptors_have_zero_euler_count() {
    for size in 0..=4 {
        for lambda in partitions_of(size) {
            for n in 0..=6 {
                let desc = complex_terms(&lambda, n);
                if let BottResult::Undefined = bott(&lambda, n as i64) {
                    assert_eq!(desc.euler_count(), 0, "acyclic at {lambda:?}, n {n}");
                }
            }
        }
    }
}
