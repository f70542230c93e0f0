mod common;

use common::{cf, irrational};
use farey_ideals::ideal::{detect_fusing, first_disagreement, ideal_metric};
use farey_ideals::theta::{r_approach, trace_coefficient, ThetaIdeal};
use farey_ideals::{farey_level, CfOrdering, ContinuedFraction, Distance};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

/// `j_n` by scanning the whole Farey row.
fn j_by_scan(theta: &ContinuedFraction, n: usize) -> usize {
    let level = farey_level(n).unwrap();
    let above = |k: usize| {
        let r = level.r(k);
        theta.compare_to_rational(r.numer(), r.denom(), 0).unwrap() == CfOrdering::Greater
    };
    (0..level.len() - 1)
        .find(|&k| above(k) && !above(k + 1))
        .unwrap()
}

/// `j_n` from the Stern-Brocot path `L^(a_1 - 1) R^(a_2) L^(a_3) ...`.
fn j_by_path(theta: &ContinuedFraction, depth: usize) -> Vec<BigUint> {
    let mut moves = Vec::new();
    let mut i = 1;
    while moves.len() < depth {
        let a = theta.term(i).unwrap() - u64::from(i == 1);
        moves.extend(std::iter::repeat_n(i % 2 == 0, a as usize));
        i += 1;
    }
    let mut j = vec![BigUint::from(0u32)];
    for &right in moves.iter().take(depth - 1) {
        let next = (j.last().unwrap() << 1u32) + u32::from(right);
        j.push(next);
    }
    j
}

/// θ with the same first `n` terms but a different term `n + 1`.
fn perturb(theta: &ContinuedFraction, n: usize) -> ContinuedFraction {
    let mut pre = theta.terms_through(n).unwrap();
    let next = theta.term(n + 1).unwrap();
    pre.push(if next == 1 { 2 } else { next - 1 });
    ContinuedFraction::periodic(pre, vec![1, 2]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn descent_matches_row_scan(theta in irrational(5)) {
        let ideal = ThetaIdeal::new(&theta, 12).unwrap();
        for n in 1..=12 {
            prop_assert_eq!(ideal.j(n).unwrap().to_usize().unwrap(), j_by_scan(&theta, n));
        }
    }

    #[test]
    fn descent_matches_stern_brocot_path(theta in irrational(10)) {
        let ideal = ThetaIdeal::new(&theta, 40).unwrap();
        prop_assert_eq!(ideal.j_sequence(), &j_by_path(&theta, 40)[..]);
    }

    #[test]
    fn doubling_growth_and_beta(theta in irrational(10)) {
        let ideal = ThetaIdeal::new(&theta, 41).unwrap();
        for n in 1..=40 {
            let (j, j1) = (ideal.j(n).unwrap(), ideal.j(n + 1).unwrap());
            prop_assert!(j1 == &(j << 1u32) || j1 == &((j << 1u32) + 1u32));
            let b = ideal.bracket(n).unwrap();
            let nn = BigUint::from(n);
            prop_assert!(b.left_q >= nn || b.right_q >= nn);
            let bound = BigRational::new(BigInt::one(), BigInt::from(n * n));
            prop_assert!(ideal.beta(n).unwrap() <= bound);
        }
    }

    #[test]
    fn coefficients_are_certified_in_unit_interval(theta in irrational(10), n in 1usize..=40) {
        let c = trace_coefficient(&theta, n).unwrap();
        prop_assert!(c.certify_unit_interval(&theta).is_ok());
    }

    #[test]
    fn agreeing_prefixes_give_agreeing_ideals(theta in irrational(6), n in 2usize..6) {
        let mu = perturb(&theta, n);
        let a1 = theta.term(1).unwrap() as usize;
        let rest: usize = (2..=n).map(|k| theta.term(k).unwrap() as usize).sum();
        let bound = 1usize.max(a1 - 1 + rest);
        let depth = bound + 12;
        let (i, j) = (ThetaIdeal::new(&theta, depth).unwrap(), ThetaIdeal::new(&mu, depth).unwrap());
        let first = first_disagreement(&i, &j, depth).unwrap().expect("θ ≠ μ separate eventually");
        prop_assert!(first >= bound, "first disagreement {first} < {bound}");
        // Agreement through level N pins the affine coefficient at N.
        let agree = first - 1;
        prop_assert_eq!(i.trace_coefficient(agree).unwrap(), j.trace_coefficient(agree).unwrap());
    }

    #[test]
    fn r_gaps_shrink(theta in irrational(10)) {
        let r = r_approach(&theta, 30).unwrap();
        for w in r.windows(2) {
            prop_assert!(w[1].1 <= w[0].1);
        }
        for (left, gap) in &r {
            let right = left + gap;
            prop_assert_eq!(theta.compare_to_rational(left.numer(), left.denom(), 0).unwrap(), CfOrdering::Greater);
            prop_assert_eq!(theta.compare_to_rational(right.numer(), right.denom(), 0).unwrap(), CfOrdering::Less);
        }
    }

    #[test]
    fn fusing_agrees_with_metric(theta in irrational(3), k_max in 4usize..10) {
        let a1 = theta.term(1).unwrap();
        let tail: u64 = (2..=k_max).map(|k| theta.term(k).unwrap()).sum();
        let depth = ((a1 - 1 + tail).max(1) as usize).min(12);
        let limit = ThetaIdeal::new(&theta, depth).unwrap();
        let family: Vec<ThetaIdeal> = (1..=k_max)
            .map(|k| ThetaIdeal::new(&perturb(&theta, k), depth).unwrap())
            .collect();
        let report = detect_fusing(&family, &limit, depth).unwrap();
        prop_assert!(report.is_fused());
        for (n, &c) in report.sequence.iter().enumerate() {
            for member in &family[c..] {
                let d = ideal_metric(member, &limit, depth).unwrap();
                prop_assert!(d.upper_bound() <= Distance::dyadic(n as u64 + 1).upper_bound());
            }
        }
        prop_assert!(report.sequence.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn remark_ideal_metric() {
    let theta = ThetaIdeal::new(&cf("0;1000,(1)"), 1001).unwrap();
    let mu = ThetaIdeal::new(&cf("0;(1)"), 1001).unwrap();
    let mu2 = ThetaIdeal::new(&cf("0;999,(1)"), 1001).unwrap();
    assert_eq!(
        ideal_metric(&theta, &mu, 1001).unwrap(),
        Distance::dyadic(2)
    );
    let d = ideal_metric(&theta, &mu2, 1001).unwrap();
    assert_eq!(d, Distance::dyadic(1000));
    let exact = d.to_rational().unwrap();
    assert_eq!(exact.denom(), &(BigInt::one() << 1000usize));
}

#[test]
fn coefficient_chain_below_first_term() {
    for a1 in 2..=12u64 {
        let theta = ContinuedFraction::periodic(vec![0, a1], vec![1, 3]).unwrap();
        for m in 1..=a1 {
            let c = trace_coefficient(&theta, m as usize).unwrap();
            // m(1 - θ) - (m - 1) = -mθ + 1
            assert_eq!(c.a, BigRational::from_integer(-BigInt::from(m)));
            assert_eq!(c.b, BigRational::one());
        }
    }
}
