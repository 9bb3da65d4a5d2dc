mod common;

use common::{rows, Oracle};
use latpath_core::closed_form::{filter_count, strip_sum_f1, uq_multiplicity};
use latpath_core::{count_paths, Error, ModelSpec};
use num_bigint::BigInt;

#[test]
fn type_one_filter_matches_dp() {
    for d in [1, 2, 5] {
        let table = rows(Oracle::Filter { d, weight: 1 }, 3, 30);
        for n in 0..=30 {
            for m in (-n..=n).step_by(2).filter(|&m| m != d) {
                assert_eq!(
                    filter_count(m, n, d, 1).unwrap(),
                    BigInt::from(table.get(m, n)),
                    "d = {d}, M = {m}, N = {n}"
                );
            }
        }
    }
}

// A path that crosses a type-n filter c times has weight n^c 2^(c-1), so
// n C(N, (N-M)/2) only holds while no path can come back and recross.
#[test]
fn heavier_filters_break_the_product_form() {
    let dp = count_paths(&ModelSpec::single_filter(3, 2, 2).unwrap(), 5).unwrap();
    assert_eq!(dp.get(3, 5), 14u32.into());
    assert_eq!(filter_count(3, 5, 2, 2).unwrap(), BigInt::from(10));
    assert_eq!(dp.get(5, 5), 2u32.into());
    assert_eq!(filter_count(5, 5, 2, 2).unwrap(), BigInt::from(2));
    // nothing returns left of the filter line, so that side ignores the type
    for (m, n) in [(0, 6), (1, 7), (-4, 10)] {
        assert_eq!(BigInt::from(dp_at(m, n)), filter_count(m, n, 2, 2).unwrap());
    }
}

fn dp_at(m: i64, n: i64) -> u128 {
    rows(Oracle::Filter { d: 2, weight: 2 }, 3, n).get(m, n)
}

#[test]
fn strip_sum_rejects_other_strips() {
    assert_eq!(
        strip_sum_f1(3, 1, 8, 10),
        Err(Error::StripMismatch {
            l: 3,
            strip: 2,
            m: 8
        })
    );
    assert!(strip_sum_f1(3, 0, 0, 10).is_err());
}

#[test]
fn beyond_the_cone() {
    assert_eq!(uq_multiplicity(3, 10, 8).unwrap(), BigInt::from(0));
    assert!(uq_multiplicity(3, 3, 8).is_err());
    assert!(uq_multiplicity(2, 0, 8).is_err());
}
