#![allow(dead_code)]

use farey_ideals::ContinuedFraction;
use proptest::prelude::*;

/// Quadratic irrationals in (0,1) with terms in `1..=max_term`.
pub fn irrational(max_term: u64) -> impl Strategy<Value = ContinuedFraction> {
    (
        prop::collection::vec(1..=max_term, 0..6),
        prop::collection::vec(1..=max_term, 1..4),
    )
        .prop_map(|(pre, period)| {
            let mut head = vec![0];
            head.extend(pre);
            ContinuedFraction::periodic(head, period).unwrap()
        })
}

pub fn cf(s: &str) -> ContinuedFraction {
    s.parse().unwrap()
}
