mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::irrational;
use farey_ideals::bratteli::farey_diagram;
use farey_ideals::ideal::{
    enumerate_coherent_ideals, ideal_metric, restrict_level, validate_ideal, IdealDiagram,
};
use farey_ideals::theta::theta_ideal_diagram_over;
use farey_ideals::{check_unital_embedding, farey_level, Distance};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn farey_embeddings_are_unital_through_level_12() {
    for n in 1..=12 {
        assert!(check_unital_embedding(n).unwrap(), "level {n}");
        let level = farey_level(n).unwrap();
        for k in 0..level.len() - 1 {
            let d = BigInt::from(level.p[k + 1].clone() * &level.q[k])
                - BigInt::from(level.p[k].clone() * &level.q[k + 1]);
            assert_eq!(d, BigInt::from(1));
        }
    }
}

#[test]
fn zero_ideal_quotient_is_identity() {
    let base = Arc::new(farey_diagram(5).unwrap());
    let zero = IdealDiagram::zero(Arc::clone(&base), 5).unwrap();
    assert_eq!(base.quotient(&zero).unwrap(), *base);
    let full = IdealDiagram::full(Arc::clone(&base), 5).unwrap();
    assert!(matches!(
        base.quotient(&full),
        Err(farey_ideals::Error::EmptyQuotient { level: 0 })
    ));
}

#[test]
fn theta_quotients_are_valid_diagrams() {
    let base = Arc::new(farey_diagram(12).unwrap());
    for s in [
        "0;(1)",
        "0;2,(1)",
        "0;1000,(1)",
        "0;3,1,4,(1,5)",
        "0;1,1,2,(9)",
        "0;(2,3,4)",
    ] {
        let ideal = theta_ideal_diagram_over(&s.parse().unwrap(), Arc::clone(&base)).unwrap();
        assert!(validate_ideal(&base, ideal.levels()).unwrap().is_valid());
        let q = base.quotient(&ideal).unwrap();
        assert!(q.validate().is_ok());
        for n in 2..=12 {
            assert_eq!(q.level_size(n), 2);
        }
    }
}

#[test]
fn enumerated_ideals_form_an_ultrametric_space() {
    let base = Arc::new(farey_diagram(3).unwrap());
    let ideals = enumerate_coherent_ideals(&base, 3).unwrap();
    assert_eq!(ideals.len(), 32);
    let d = |a: &IdealDiagram, b: &IdealDiagram| match ideal_metric(a, b, 3).unwrap() {
        Distance::Dyadic { exponent } => 1.0 / (1u64 << exponent) as f64,
        _ => 0.0,
    };
    for i in &ideals {
        for j in &ideals {
            for k in &ideals {
                assert!(d(i, k) <= d(i, j).max(d(j, k)));
            }
        }
    }
    for ideal in &ideals {
        for n in 0..3 {
            assert_eq!(
                ideal.level(n),
                &restrict_level(&base, n, ideal.level(n + 1)).unwrap()
            );
        }
        assert!(validate_ideal(&base, ideal.levels()).unwrap().is_valid());
    }
}

proptest! {
    #[test]
    fn theta_ideals_are_valid(theta in irrational(4), depth in 2usize..9) {
        let base = Arc::new(farey_diagram(depth).unwrap());
        let ideal = theta_ideal_diagram_over(&theta, Arc::clone(&base)).unwrap();
        prop_assert!(ideal.level(0).is_empty() && ideal.level(1).is_empty());
        let q = base.quotient(&ideal).unwrap();
        prop_assert!(q.validate().is_ok());
    }

    #[test]
    fn proper_ideals_are_at_most_half_apart(mask_a in 0u32..32, mask_b in 0u32..32) {
        let base = Arc::new(farey_diagram(3).unwrap());
        let ideals = enumerate_coherent_ideals(&base, 3).unwrap();
        let (a, b) = (&ideals[mask_a as usize], &ideals[mask_b as usize]);
        if !a.is_improper() && !b.is_improper() {
            prop_assert_ne!(ideal_metric(a, b, 3).unwrap(), Distance::dyadic(0));
        }
        let levels: Vec<BTreeSet<usize>> = a.levels().to_vec();
        prop_assert_eq!(&levels[0], &restrict_level(&base, 0, &levels[1]).unwrap());
    }
}
