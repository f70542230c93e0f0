use farey_ideals::ContinuedFraction;
use rand::Rng;

use crate::oracle::Terms;

/// A random quadratic irrational in `(0, 1)`: prefix of 1 to 6 terms and
/// period of 1 to 3 terms, each in `1..=max_term`.
pub fn theta<R: Rng>(rng: &mut R, max_term: u64) -> (Terms, ContinuedFraction) {
    let mut prefix = vec![0];
    prefix.extend((0..rng.gen_range(1..=6)).map(|_| rng.gen_range(1..=max_term)));
    let period: Vec<u64> = (0..rng.gen_range(1..=3))
        .map(|_| rng.gen_range(1..=max_term))
        .collect();
    build(prefix, period)
}

pub fn build(prefix: Vec<u64>, period: Vec<u64>) -> (Terms, ContinuedFraction) {
    let cf = ContinuedFraction::periodic(prefix.clone(), period.clone()).expect("valid sample");
    (Terms { prefix, period }, cf)
}
