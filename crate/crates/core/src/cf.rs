//! Continued fractions of numbers in `[0, 1)`.
//!
//! A [`ContinuedFraction`] is either a finite term list, whose value is the
//! rational `[0; a_1, ..., a_n]`, or an eventually periodic stream, which
//! always denotes a quadratic irrational. No floating-point value enters
//! this module except through [`ContinuedFraction::approx_f64`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::distance::Distance;
use crate::error::{Error, Result};

pub type Term = u64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Finite(Vec<Term>),
    Periodic {
        preperiod: Vec<Term>,
        period: Vec<Term>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    repr: Repr,
}

/// `(p_n, q_n)` with `p_n / q_n = [a_0; a_1, ..., a_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvergentPair {
    pub n: usize,
    #[serde(serialize_with = "crate::format::ser_biguint")]
    pub p: BigUint,
    #[serde(serialize_with = "crate::format::ser_biguint")]
    pub q: BigUint,
}

impl ConvergentPair {
    pub fn value(&self) -> BigRational {
        BigRational::new(BigInt::from(self.p.clone()), BigInt::from(self.q.clone()))
    }
}

/// Outcome of comparing a continued fraction against a rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CfOrdering {
    Less,
    Greater,
    EqualAtDepth,
}

impl CfOrdering {
    pub fn to_ordering(self) -> Ordering {
        match self {
            CfOrdering::Less => Ordering::Less,
            CfOrdering::Greater => Ordering::Greater,
            CfOrdering::EqualAtDepth => Ordering::Equal,
        }
    }
}

fn check_terms(terms: &[Term]) -> Result<()> {
    match terms.first() {
        None => return Err(Error::Domain("empty term list".into())),
        Some(&a0) if a0 != 0 => {
            return Err(Error::Domain(format!(
                "leading term must be 0 for values in [0,1), got {a0}"
            )))
        }
        _ => {}
    }
    if let Some(pos) = terms.iter().skip(1).position(|&t| t == 0) {
        return Err(Error::Domain(format!("term {} is zero", pos + 1)));
    }
    Ok(())
}

impl ContinuedFraction {
    /// Finite expansion `[terms[0]; terms[1], ...]`, taken verbatim.
    pub fn finite(terms: Vec<Term>) -> Result<Self> {
        check_terms(&terms)?;
        Ok(ContinuedFraction {
            repr: Repr::Finite(terms),
        })
    }

    /// Eventually periodic expansion. `preperiod` starts with `a_0 = 0`.
    pub fn periodic(preperiod: Vec<Term>, period: Vec<Term>) -> Result<Self> {
        check_terms(&preperiod)?;
        if period.is_empty() {
            return Err(Error::Domain("period must be nonempty".into()));
        }
        if period.contains(&0) {
            return Err(Error::Domain("period entries must be >= 1".into()));
        }
        Ok(ContinuedFraction {
            repr: Repr::Periodic { preperiod, period },
        })
    }

    /// Canonical expansion of `num/den` (last term >= 2 when there is more
    /// than one term).
    pub fn from_rational(num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let (mut num, mut den) = (num.clone(), den.clone());
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if num.is_negative() || num >= den {
            return Err(Error::Domain(format!("{num}/{den} is not in [0,1)")));
        }
        let mut terms = Vec::new();
        let (mut a, mut b) = (num, den);
        // a/b in [0,1): first quotient is 0, then Euclid on b/a.
        loop {
            let (quot, rem) = a.div_rem(&b);
            terms.push(
                quot.to_u64()
                    .ok_or_else(|| Error::Domain("partial quotient exceeds u64".into()))?,
            );
            if rem.is_zero() {
                break;
            }
            a = b;
            b = rem;
        }
        ContinuedFraction::finite(terms)
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self> {
        ContinuedFraction::from_rational(&BigInt::from(num), &BigInt::from(den))
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.repr, Repr::Periodic { .. })
    }

    /// Number of terms for a finite expansion, `None` when infinite.
    pub fn len(&self) -> Option<usize> {
        match &self.repr {
            Repr::Finite(t) => Some(t.len()),
            Repr::Periodic { .. } => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Term `a_i`, or `None` past the end of a finite expansion.
    pub fn term(&self, i: usize) -> Option<Term> {
        match &self.repr {
            Repr::Finite(t) => t.get(i).copied(),
            Repr::Periodic { preperiod, period } => Some(if i < preperiod.len() {
                preperiod[i]
            } else {
                period[(i - preperiod.len()) % period.len()]
            }),
        }
    }

    /// Terms `a_0..=a_n`.
    pub fn terms_through(&self, n: usize) -> Result<Vec<Term>> {
        (0..=n)
            .map(|i| {
                self.term(i).ok_or(Error::Depth {
                    requested: n + 1,
                    available: self.len().unwrap_or(usize::MAX),
                })
            })
            .collect()
    }

    /// Exact value of a finite expansion.
    pub fn rational_value(&self) -> Option<BigRational> {
        let Repr::Finite(terms) = &self.repr else {
            return None;
        };
        convergents_of(terms.iter().copied())
            .last()
            .map(ConvergentPair::value)
    }

    /// Convergents `(p_k, q_k)` for `k = 0..=n`.
    pub fn convergents(&self, n: usize) -> Result<Vec<ConvergentPair>> {
        let terms = self.terms_through(n)?;
        Ok(convergents_of(terms.into_iter()))
    }

    /// Lazily generated convergents; finite expansions stop after the last term.
    pub fn convergent_iter(&self) -> impl Iterator<Item = ConvergentPair> + '_ {
        let mut i = 0;
        let terms = std::iter::from_fn(move || {
            let t = self.term(i);
            i += 1;
            t
        });
        ConvergentIter::new(terms)
    }

    /// Exact comparison of this value against `num/den`.
    ///
    /// A periodic expansion is irrational, so the convergent enclosure
    /// eventually separates it from any rational. A finite expansion is
    /// compared exactly when it has at most `depth + 1` terms; longer ones
    /// are compared through the enclosure of their first `depth + 1`
    /// convergents and yield [`Error::Indeterminate`] if that does not
    /// resolve.
    pub fn compare_to_rational(
        &self,
        num: &BigInt,
        den: &BigInt,
        depth: usize,
    ) -> Result<CfOrdering> {
        RationalComparator::new(self, depth).compare(num, den)
    }

    /// Floating-point approximation from the first 64 convergents. Inexact;
    /// never used by the exact layer.
    pub fn approx_f64(&self) -> f64 {
        let last = self.convergent_iter().take(64).last().expect("a_0 exists");
        let v = last.value();
        v.numer().to_f64().unwrap_or(f64::NAN) / v.denom().to_f64().unwrap_or(f64::NAN)
    }
}

/// Repeated comparisons of one expansion against many rationals.
///
/// Convergents are cached, and since the enclosures between consecutive
/// convergents are nested, the index at which a comparison resolved is a
/// valid starting point for the next one. A sequence of comparisons thus
/// costs time linear in the number of convergents it needs.
pub struct RationalComparator<'a> {
    cf: &'a ContinuedFraction,
    depth: usize,
    exact: Option<(BigInt, BigInt)>,
    convergents: Vec<(BigInt, BigInt)>,
    k: usize,
}

impl<'a> RationalComparator<'a> {
    /// Same depth semantics as [`ContinuedFraction::compare_to_rational`].
    pub fn new(cf: &'a ContinuedFraction, depth: usize) -> Self {
        let exact = match cf.len() {
            Some(len) if len <= depth.saturating_add(1) => {
                let terms = cf.terms_through(len - 1).expect("finite");
                let last = convergents_of(terms.into_iter()).pop().expect("a_0 exists");
                Some((BigInt::from(last.p), BigInt::from(last.q)))
            }
            _ => None,
        };
        RationalComparator {
            cf,
            depth,
            exact,
            convergents: Vec::new(),
            k: 0,
        }
    }

    fn convergent(&mut self, i: usize) -> Option<&(BigInt, BigInt)> {
        while self.convergents.len() <= i {
            let n = self.convergents.len();
            if !self.cf.is_periodic() && n > self.depth {
                return None;
            }
            let a = BigInt::from(self.cf.term(n)?);
            let (pp, pq, qp, qq) = match n {
                0 => (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()),
                1 => {
                    let c = &self.convergents[0];
                    (c.0.clone(), c.1.clone(), BigInt::one(), BigInt::zero())
                }
                _ => {
                    let (c, d) = (&self.convergents[n - 1], &self.convergents[n - 2]);
                    (c.0.clone(), c.1.clone(), d.0.clone(), d.1.clone())
                }
            };
            self.convergents.push((&a * pp + qp, &a * pq + qq));
        }
        self.convergents.get(i)
    }

    /// Orders the value against `num / den`.
    pub fn compare(&mut self, num: &BigInt, den: &BigInt) -> Result<CfOrdering> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let (num, den) = if den.is_negative() {
            (-num, -den)
        } else {
            (num.clone(), den.clone())
        };
        // sign of p/q - num/den for q > 0
        let side = |c: &(BigInt, BigInt)| (&c.0 * &den).cmp(&(&num * &c.1));
        if let Some(v) = self.exact.as_ref() {
            return Ok(match side(v) {
                Ordering::Less => CfOrdering::Less,
                Ordering::Greater => CfOrdering::Greater,
                Ordering::Equal => CfOrdering::EqualAtDepth,
            });
        }
        loop {
            let k = self.k;
            // The value lies strictly between consecutive convergents of an
            // expansion that continues past them.
            let (Some(a), Some(b)) = (self.convergent(k).cloned(), self.convergent(k + 1).cloned())
            else {
                return Err(Error::Indeterminate { depth: self.depth });
            };
            let (sa, sb) = (side(&a), side(&b));
            if sa != Ordering::Greater && sb != Ordering::Greater {
                return Ok(CfOrdering::Less);
            }
            if sa != Ordering::Less && sb != Ordering::Less {
                return Ok(CfOrdering::Greater);
            }
            self.k += 1;
        }
    }
}

/// Convergents via `p_{k+1} = a_{k+1} p_k + p_{k-1}`, seeded with
/// `(p_0, q_0) = (a_0, 1)` and `(p_1, q_1) = (a_0 a_1 + 1, a_1)`.
struct ConvergentIter<I> {
    terms: I,
    n: usize,
    prev: (BigUint, BigUint),
    cur: (BigUint, BigUint),
}

impl<I: Iterator<Item = Term>> ConvergentIter<I> {
    fn new(terms: I) -> Self {
        ConvergentIter {
            terms,
            n: 0,
            // (p_{-1}, q_{-1}) = (1, 0) and (p_{-2}, q_{-2}) = (0, 1)
            prev: (BigUint::zero(), BigUint::one()),
            cur: (BigUint::one(), BigUint::zero()),
        }
    }
}

impl<I: Iterator<Item = Term>> Iterator for ConvergentIter<I> {
    type Item = ConvergentPair;

    fn next(&mut self) -> Option<ConvergentPair> {
        let a = BigUint::from(self.terms.next()?);
        let p = &a * &self.cur.0 + &self.prev.0;
        let q = &a * &self.cur.1 + &self.prev.1;
        let next = (p, q);
        self.prev = std::mem::replace(&mut self.cur, next);
        let out = ConvergentPair {
            n: self.n,
            p: self.cur.0.clone(),
            q: self.cur.1.clone(),
        };
        self.n += 1;
        Some(out)
    }
}

fn convergents_of<I: Iterator<Item = Term>>(terms: I) -> Vec<ConvergentPair> {
    ConvergentIter::new(terms).collect()
}

/// Baire distance `2^-m`, `m` the first index where the term sequences
/// differ. Index 0 is compared as well.
pub fn baire_distance(
    x: &ContinuedFraction,
    y: &ContinuedFraction,
    depth: usize,
) -> Result<Distance> {
    for i in 0..=depth {
        match (x.term(i), y.term(i)) {
            (Some(a), Some(b)) if a != b => return Ok(Distance::dyadic(i as u64)),
            (Some(_), Some(_)) => {}
            (None, None) => return Ok(Distance::Zero),
            (Some(_), None) | (None, Some(_)) => {
                return Err(Error::Depth {
                    requested: depth + 1,
                    available: i,
                })
            }
        }
    }
    Ok(Distance::AgreeToDepth { depth })
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Accepts `0;a1,a2,...` with an optional trailing parenthesised period,
    /// e.g. `0;1000,(1)` or `0;(1,2)`. Surrounding brackets are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        let (head, tail) = match s.split_once(';') {
            Some((h, t)) => (h.trim(), t.trim()),
            None => (s, ""),
        };
        let parse_term = |t: &str| -> Result<Term> {
            t.trim()
                .parse::<Term>()
                .map_err(|e| Error::Parse(format!("bad term {t:?}: {e}")))
        };
        let mut pre = vec![parse_term(head)?];
        let (body, period) = match tail.find('(') {
            Some(open) => {
                let close = tail
                    .rfind(')')
                    .filter(|&c| c > open && tail[c + 1..].trim().is_empty())
                    .ok_or_else(|| Error::Parse("period must be a trailing (...) group".into()))?;
                (&tail[..open], Some(&tail[open + 1..close]))
            }
            None => (tail, None),
        };
        for t in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            pre.push(parse_term(t)?);
        }
        match period {
            None => ContinuedFraction::finite(pre),
            Some(p) => {
                let period = p
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(parse_term)
                    .collect::<Result<Vec<_>>>()?;
                ContinuedFraction::periodic(pre, period)
            }
        }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |ts: &[Term]| {
            ts.iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let (pre, period) = match &self.repr {
            Repr::Finite(t) => (t.as_slice(), None),
            Repr::Periodic { preperiod, period } => (preperiod.as_slice(), Some(period)),
        };
        write!(f, "{}", pre[0])?;
        let rest = join(&pre[1..]);
        match period {
            None if rest.is_empty() => Ok(()),
            None => write!(f, ";{rest}"),
            Some(p) if rest.is_empty() => write!(f, ";({})", join(p)),
            Some(p) => write!(f, ";{rest},({})", join(p)),
        }
    }
}
