mod common;

use common::{cf, irrational};
use farey_ideals::{baire_distance, CfOrdering, ContinuedFraction, Distance};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn det(p1: &BigInt, q1: &BigInt, p0: &BigInt, q0: &BigInt) -> BigInt {
    p1 * q0 - p0 * q1
}

#[test]
fn determinant_identity_to_depth_50() {
    for s in [
        "0;(1)",
        "0;1000,(1)",
        "0;(2,7,1)",
        "0;3,1,4,1,5,9,2,6,(5,3)",
    ] {
        let conv = cf(s).convergents(50).unwrap();
        for w in conv.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let d = det(
                &b.p.clone().into(),
                &b.q.clone().into(),
                &a.p.clone().into(),
                &a.q.clone().into(),
            );
            assert_eq!(d.magnitude(), &1u32.into(), "{s} at n={}", b.n);
        }
        for w in conv.windows(2).skip(1) {
            assert!(w[1].q > w[0].q);
        }
    }
}

proptest! {
    #[test]
    fn enclosure_is_monotone_and_certified(theta in irrational(10), depth in 2usize..30) {
        let conv = theta.convergents(depth).unwrap();
        for w in conv.windows(3) {
            let (a, c) = (w[0].value(), w[2].value());
            if w[0].n % 2 == 0 { prop_assert!(a < c) } else { prop_assert!(a > c) }
        }
        for c in &conv {
            let v = c.value();
            let ord = theta.compare_to_rational(v.numer(), v.denom(), 0).unwrap();
            let expected = if c.n % 2 == 0 { CfOrdering::Greater } else { CfOrdering::Less };
            prop_assert_eq!(ord, expected);
        }
    }

    #[test]
    fn comparison_matches_term_oracle(theta in irrational(6), num in 1i64..200, den in 1i64..200) {
        prop_assume!(num < den);
        // Term-wise oracle: at the first index where θ's effective term is
        // larger, θ is larger iff that index is even. If r is a prefix of θ,
        // θ's tail makes its last term effectively larger.
        let r = ContinuedFraction::from_ratio(num, den).unwrap();
        let len = r.len().unwrap();
        let first = (0..len).find(|&i| theta.term(i) != r.term(i));
        let (index, theta_term_larger) = match first {
            Some(i) => (i, theta.term(i) > r.term(i)),
            None => (len - 1, true),
        };
        let expected = if (index % 2 == 0) == theta_term_larger { CfOrdering::Greater } else { CfOrdering::Less };
        prop_assert_eq!(theta.compare_to_rational(&num.into(), &den.into(), 0).unwrap(), expected);
    }

    #[test]
    fn baire_is_an_ultrametric(x in irrational(3), y in irrational(3), z in irrational(3)) {
        let d = |a: &ContinuedFraction, b: &ContinuedFraction| baire_distance(a, b, 30).unwrap();
        prop_assert_eq!(d(&x, &y), d(&y, &x));
        let bound = |v: Distance| v.to_rational().unwrap_or_else(|| BigRational::from_integer(0.into()));
        let (xz, xy, yz) = (bound(d(&x, &z)), bound(d(&x, &y)), bound(d(&y, &z)));
        prop_assert!(xz <= xy.clone().max(yz));
    }

    #[test]
    fn rational_round_trip(num in 0i64..500, den in 1i64..500) {
        prop_assume!(num < den);
        let c = ContinuedFraction::from_ratio(num, den).unwrap();
        prop_assert_eq!(c.rational_value().unwrap(), BigRational::new(num.into(), den.into()));
        let back: ContinuedFraction = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }
}

#[test]
fn remark_baire_values() {
    let theta = cf("0;1000,(1)");
    assert_eq!(
        baire_distance(&theta, &cf("0;(1)"), 1001).unwrap(),
        Distance::dyadic(1)
    );
    assert_eq!(
        baire_distance(&theta, &cf("0;999,(1)"), 1001).unwrap(),
        Distance::dyadic(1)
    );
    assert_eq!(
        baire_distance(&theta, &theta, 50).unwrap(),
        Distance::AgreeToDepth { depth: 50 }
    );
    assert_eq!(
        baire_distance(&cf("0;2,3"), &cf("0;2,3"), 5).unwrap(),
        Distance::Zero
    );
}
