//! Reference computations that share no code with the library under test.
//!
//! Each oracle works from the raw term list of a continued fraction or from
//! hand-written matrices, never from library results.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Terms `a_0, a_1, ...` of an eventually periodic expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Terms {
    pub prefix: Vec<u64>,
    pub period: Vec<u64>,
}

impl Terms {
    pub fn get(&self, i: usize) -> u64 {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// Syntax `0;a1,...,(p1,...)`.
    pub fn render(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let rest = join(&self.prefix[1..]);
        let sep = if rest.is_empty() { "" } else { "," };
        format!("{};{rest}{sep}({})", self.prefix[0], join(&self.period))
    }
}

/// The first `len` Stern-Brocot moves below `1/1` toward θ in `(0, 1)`:
/// `a_1 - 1` left moves, then `a_2` right, `a_3` left, and so on.
/// `true` is a right move.
pub fn sb_path(t: &Terms, len: usize) -> Vec<bool> {
    let mut out = Vec::with_capacity(len);
    let mut i = 1;
    let mut run = t.get(1) - 1;
    let mut right = false;
    while out.len() < len {
        if run == 0 {
            i += 1;
            run = t.get(i);
            right = !right;
            continue;
        }
        out.push(right);
        run -= 1;
    }
    out
}

/// `j_1, ..., j_depth` read off the path as binary digits.
pub fn j_from_path(t: &Terms, depth: usize) -> Vec<BigUint> {
    let mut j = vec![BigUint::zero()];
    for right in sb_path(t, depth.saturating_sub(1)) {
        let next = (j.last().unwrap() << 1u32) + u32::from(right);
        j.push(next);
    }
    j
}

/// Bracket `(p_l, q_l, p_r, q_r)` at levels `1..=depth`, by following the
/// path from `(0/1, 1/1)`.
pub fn brackets_from_path(t: &Terms, depth: usize) -> Vec<[BigUint; 4]> {
    let one = BigUint::one;
    let mut cur = [BigUint::zero(), one(), one(), one()];
    let mut out = vec![cur.clone()];
    for right in sb_path(t, depth.saturating_sub(1)) {
        let mp = &cur[0] + &cur[2];
        let mq = &cur[1] + &cur[3];
        if right {
            cur[0] = mp;
            cur[1] = mq;
        } else {
            cur[2] = mp;
            cur[3] = mq;
        }
        out.push(cur.clone());
    }
    out
}

/// Level of first disagreement between two paths, or `None` if they agree
/// through `depth`. Move `i` decides level `i + 2`.
pub fn first_disagreement_level(x: &Terms, y: &Terms, depth: usize) -> Option<usize> {
    let len = depth.saturating_sub(1);
    sb_path(x, len)
        .iter()
        .zip(sb_path(y, len))
        .position(|(a, b)| *a != b)
        .map(|i| i + 2)
}

/// Canonical expansion of `p/q >= 0` by Euclid, last term `>= 2` unless the
/// expansion is a single term.
pub fn rational_terms(p: &BigUint, q: &BigUint) -> Vec<BigUint> {
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut out = Vec::new();
    while !b.is_zero() {
        out.push(&a / &b);
        let r = &a % &b;
        a = b;
        b = r;
    }
    out
}

/// Orders irrational θ against `p/q` by the alternating lexicographic rule:
/// at the first differing index `i`, θ is larger iff its term is larger
/// and `i` is even, or smaller and `i` is odd.
pub fn compare_theta(t: &Terms, p: &BigUint, q: &BigUint) -> Ordering {
    let r = rational_terms(p, q);
    for (i, ri) in r.iter().enumerate() {
        let ti = BigUint::from(t.get(i));
        let last = i + 1 == r.len();
        // A rational prefix ends where θ continues, so θ's complete
        // quotient at the last index is strictly above r's term.
        let theta_bigger = match ti.cmp(ri) {
            Ordering::Equal if last => true,
            Ordering::Equal => continue,
            o => o == Ordering::Greater,
        };
        return if theta_bigger == (i % 2 == 0) {
            Ordering::Greater
        } else {
            Ordering::Less
        };
    }
    unreachable!("rational expansions are nonempty")
}

/// Sum of the canonical terms after `a_0`; the Farey level at which `p/q`
/// first appears (`0/1` and `1/1` both at level 1).
pub fn farey_birth_level(p: u64, q: u64) -> u64 {
    if p == 0 || p == q {
        return 1;
    }
    let (mut a, mut b, mut sum, mut first) = (p, q, 0, true);
    while b != 0 {
        if !first {
            sum += a / b;
        }
        first = false;
        let r = a % b;
        a = b;
        b = r;
    }
    sum
}

/// Level `n` of the Farey diagram as `(p, q)` pairs in increasing order,
/// by brute force over all fractions with bounded denominator.
pub fn farey_level_by_birth(n: u64) -> Vec<(u64, u64)> {
    // Denominators at level n are at most Fibonacci(n + 1).
    let (mut f0, mut f1) = (1u64, 1u64);
    for _ in 0..n {
        (f0, f1) = (f1, f0 + f1);
    }
    let mut out: Vec<(u64, u64)> = Vec::new();
    for q in 1..=f1 {
        for p in 0..=q {
            if gcd(p, q) == 1 && farey_birth_level(p, q) <= n {
                out.push((p, q));
            }
        }
    }
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All level tuples `(S_0, ..., S_N)` of a diagram given by dense matrices
/// (row = upper vertex) satisfying `k ∈ S_n ⇔ every successor of k lies in
/// S_{n+1}`, by exhausting every tuple of subsets.
pub fn brute_force_ideals(
    sizes: &[usize],
    matrices: &[Vec<Vec<u64>>],
) -> BTreeSet<Vec<BTreeSet<usize>>> {
    let total: usize = sizes.iter().sum();
    assert!(
        total <= 20,
        "brute force is exponential in the vertex count"
    );
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << total) {
        let mut levels = Vec::with_capacity(sizes.len());
        let mut bit = 0;
        for &s in sizes {
            levels.push(
                (0..s)
                    .filter(|k| mask >> (bit + k) & 1 == 1)
                    .collect::<BTreeSet<usize>>(),
            );
            bit += s;
        }
        let ok = (0..sizes.len() - 1).all(|n| {
            (0..sizes[n]).all(|k| {
                let all_succ_in = (0..sizes[n + 1])
                    .filter(|&i| matrices[n][i][k] > 0)
                    .all(|i| levels[n + 1].contains(&i));
                levels[n].contains(&k) == all_succ_in
            })
        });
        if ok {
            out.insert(levels);
        }
    }
    out
}

pub fn ratio(p: &BigUint, q: &BigUint) -> BigRational {
    BigRational::new(p.clone().into(), q.clone().into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(prefix: &[u64], period: &[u64]) -> Terms {
        Terms {
            prefix: prefix.to_vec(),
            period: period.to_vec(),
        }
    }

    #[test]
    fn paths() {
        let golden = t(&[0], &[1]);
        assert_eq!(sb_path(&golden, 4), vec![true, false, true, false]);
        assert_eq!(
            sb_path(&t(&[0, 3], &[2]), 4),
            vec![false, false, true, true]
        );
        let j: Vec<u64> = j_from_path(&golden, 4)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(j, vec![0, 1, 2, 5]);
        assert_eq!(
            first_disagreement_level(&t(&[0, 1000], &[1]), &golden, 10),
            Some(2)
        );
    }

    #[test]
    fn farey_births() {
        assert_eq!(
            farey_level_by_birth(3),
            vec![(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]
        );
        assert_eq!(farey_level_by_birth(5).len(), 17);
    }

    #[test]
    fn comparisons() {
        let golden = t(&[0], &[1]);
        let b = |x: u64| BigUint::from(x);
        assert_eq!(compare_theta(&golden, &b(1), &b(2)), Ordering::Greater);
        assert_eq!(compare_theta(&golden, &b(2), &b(3)), Ordering::Less);
        assert_eq!(compare_theta(&golden, &b(3), &b(5)), Ordering::Greater);
        assert_eq!(
            compare_theta(&t(&[0, 2], &[1]), &b(1), &b(2)),
            Ordering::Less
        );
    }

    #[test]
    fn toy_brute_force() {
        let ideals = brute_force_ideals(&[1, 2], &[vec![vec![1], vec![1]]]);
        assert_eq!(ideals.len(), 4);
    }
}
