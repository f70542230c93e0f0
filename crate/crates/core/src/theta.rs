//! The θ-indexed primitive ideals `I_θ` of the Farey AF algebra.
//!
//! `j_n(θ)` is the index of the Farey interval `(r(n, j_n), r(n, j_n + 1))`
//! containing θ. Each level refines the previous interval at its mediant, so
//! the sequence is computed by a Stern-Brocot descent with one exact
//! comparison per level. The ideal at level `n >= 2` is every block except
//! `j_n` and `j_n + 1`; levels 0 and 1 are zero.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::bratteli::{effros_shen_diagram, farey_diagram, BratteliDiagram};
use crate::cf::{CfOrdering, ContinuedFraction, RationalComparator};
use crate::error::{Error, Result};
use crate::farey::MAX_EXPLICIT_LEVEL;
use crate::format::{rational_string, rational_to_f64};
use crate::ideal::{IdealDiagram, LevelwiseIdeal};
use crate::matrix::MultiplicityMatrix;

/// Comparisons against rationals are exact for finite expansions and
/// terminate for periodic ones, so no truncation depth is imposed.
const UNBOUNDED: usize = usize::MAX - 1;

/// The Farey interval `p_l/q_l < θ < p_r/q_r` at one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bracket {
    #[serde(serialize_with = "crate::format::ser_biguint")]
    pub left_p: BigUint,
    #[serde(serialize_with = "crate::format::ser_biguint")]
    pub left_q: BigUint,
    #[serde(serialize_with = "crate::format::ser_biguint")]
    pub right_p: BigUint,
    #[serde(serialize_with = "crate::format::ser_biguint")]
    pub right_q: BigUint,
}

impl Bracket {
    fn unit() -> Self {
        Bracket {
            left_p: BigUint::zero(),
            left_q: BigUint::one(),
            right_p: BigUint::one(),
            right_q: BigUint::one(),
        }
    }

    pub fn left(&self) -> BigRational {
        ratio(&self.left_p, &self.left_q)
    }

    pub fn right(&self) -> BigRational {
        ratio(&self.right_p, &self.right_q)
    }

    /// `r(n, j_n + 1) - r(n, j_n) = 1 / (q_l q_r)`.
    pub fn gap(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(&self.left_q * &self.right_q))
    }

    /// `q_l^2 + q_r^2`.
    pub fn dimension(&self) -> BigUint {
        &self.left_q * &self.left_q + &self.right_q * &self.right_q
    }
}

fn ratio(p: &BigUint, q: &BigUint) -> BigRational {
    BigRational::new(BigInt::from(p.clone()), BigInt::from(q.clone()))
}

/// `I_θ` through a finite level: the sequence `j_1, ..., j_N` and the Farey
/// brackets certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaIdeal {
    cf: ContinuedFraction,
    j: Vec<BigUint>,
    brackets: Vec<Bracket>,
}

impl ThetaIdeal {
    /// Runs the descent through level `depth >= 1`.
    pub fn new(cf: &ContinuedFraction, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::Domain("θ-ideals start at level 1".into()));
        }
        let mut j = vec![BigUint::zero()];
        let mut brackets = vec![Bracket::unit()];
        let mut cmp = RationalComparator::new(cf, UNBOUNDED);
        for level in 2..=depth {
            let b = brackets.last().expect("nonempty");
            let mp = &b.left_p + &b.right_p;
            let mq = &b.left_q + &b.right_q;
            let jn = j.last().expect("nonempty") << 1u32;
            let ord = cmp.compare(&BigInt::from(mp.clone()), &BigInt::from(mq.clone()))?;
            let next = match ord {
                CfOrdering::Less => {
                    j.push(jn);
                    Bracket {
                        left_p: b.left_p.clone(),
                        left_q: b.left_q.clone(),
                        right_p: mp,
                        right_q: mq,
                    }
                }
                CfOrdering::Greater => {
                    j.push(jn + 1u32);
                    Bracket {
                        left_p: mp,
                        left_q: mq,
                        right_p: b.right_p.clone(),
                        right_q: b.right_q.clone(),
                    }
                }
                CfOrdering::EqualAtDepth => {
                    return Err(Error::IndeterminateLevel {
                        level,
                        mediant: format!("{mp}/{mq}"),
                    })
                }
            };
            brackets.push(next);
        }
        Ok(ThetaIdeal {
            cf: cf.clone(),
            j,
            brackets,
        })
    }

    pub fn cf(&self) -> &ContinuedFraction {
        &self.cf
    }

    pub fn depth(&self) -> usize {
        self.j.len()
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.depth() {
            return Err(Error::Depth {
                requested: n,
                available: self.depth(),
            });
        }
        Ok(())
    }

    /// `j_n(θ)` for `1 <= n <= depth`.
    pub fn j(&self, n: usize) -> Result<&BigUint> {
        self.check(n)?;
        Ok(&self.j[n - 1])
    }

    pub fn j_sequence(&self) -> &[BigUint] {
        &self.j
    }

    pub fn bracket(&self, n: usize) -> Result<&Bracket> {
        self.check(n)?;
        Ok(&self.brackets[n - 1])
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    /// Whether block `(n, k)` lies in `I_θ`.
    pub fn contains(&self, n: usize, k: &BigUint) -> Result<bool> {
        if n <= 1 {
            return Ok(false);
        }
        let j = self.j(n)?;
        Ok(k != j && k != &(j + 1u32))
    }

    /// Level-`n` blocks of `I_θ` as explicit indices.
    pub fn blocks(&self, n: usize) -> Result<BTreeSet<usize>> {
        if n <= 1 {
            return Ok(BTreeSet::new());
        }
        if n > MAX_EXPLICIT_LEVEL {
            return Err(Error::SizeGuard(format!("level {n} is too wide to list")));
        }
        let j = self.j(n)?.to_usize().expect("fits below the size guard");
        Ok((0..=1usize << (n - 1))
            .filter(|&k| k != j && k != j + 1)
            .collect())
    }

    /// `dim(F^n / I_θ ∩ F^n)`: 1 at level 0, `q_l^2 + q_r^2` otherwise.
    pub fn quotient_dimension(&self, n: usize) -> Result<BigUint> {
        if n == 0 {
            return Ok(BigUint::one());
        }
        Ok(self.bracket(n)?.dimension())
    }

    /// `β^θ(n) = 1 / quotient_dimension(n)`.
    pub fn beta(&self, n: usize) -> Result<BigRational> {
        Ok(BigRational::new(
            BigInt::one(),
            BigInt::from(self.quotient_dimension(n)?),
        ))
    }

    /// `(r(n, j_n), gap)` for `n = 1..=depth`.
    pub fn r_approach(&self) -> Vec<(BigRational, BigRational)> {
        self.brackets.iter().map(|b| (b.left(), b.gap())).collect()
    }

    /// The affine coefficient `c(n, θ)`, derived from `c(1, θ) = 1 - θ`.
    pub fn trace_coefficient(&self, n: usize) -> Result<AffineCoefficient> {
        self.check(n)?;
        let mut c =
            AffineCoefficient::new(BigRational::from_integer((-1).into()), BigRational::one());
        for m in 1..n {
            let b = &self.brackets[m - 1];
            let ql = BigRational::from_integer(BigInt::from(b.left_q.clone()));
            let qr = BigRational::from_integer(BigInt::from(b.right_q.clone()));
            c = if self.j[m] == (&self.j[m - 1] << 1u32) {
                let s = (&ql + &qr) / &qr;
                AffineCoefficient::new(&c.a * &s, &c.b * &s - &ql / &qr)
            } else {
                let s = (&ql + &qr) / &ql;
                AffineCoefficient::new(&c.a * &s, &c.b * &s)
            };
        }
        c.certify_unit_interval(&self.cf)?;
        Ok(c)
    }

    /// `c·t_0 + (1 - c)·t_1` for the normalized traces `t_0, t_1` of blocks
    /// `j_n` and `j_n + 1`.
    pub fn trace_value(&self, n: usize, block_traces: &[BigRational]) -> Result<AffineCoefficient> {
        match block_traces.len() {
            0 | 1 => return Err(Error::MissingBlockTrace(block_traces.len())),
            2 => {}
            len => {
                return Err(Error::Shape(format!(
                    "{len} block traces given, the quotient has 2 blocks"
                )))
            }
        }
        let c = self.trace_coefficient(n)?;
        let (t0, t1) = (&block_traces[0], &block_traces[1]);
        Ok(AffineCoefficient::new(
            &c.a * (t0 - t1),
            &c.b * t0 + (BigRational::one() - &c.b) * t1,
        ))
    }

    /// The quotient diagram `F / I_θ` through level `depth`, built from the
    /// two surviving blocks per level without materialising Farey rows.
    pub fn quotient_diagram(&self, depth: usize) -> Result<BratteliDiagram> {
        if depth == 0 || depth > self.depth() {
            return Err(Error::Depth {
                requested: depth,
                available: self.depth(),
            });
        }
        let mut labels = vec![vec![BigUint::one()]];
        let mut matrices = vec![MultiplicityMatrix::from_dense(&[vec![1], vec![1]])?];
        for n in 1..=depth {
            let b = &self.brackets[n - 1];
            labels.push(vec![b.left_q.clone(), b.right_q.clone()]);
            if n < depth {
                let (j, jn) = (&self.j[n - 1], &self.j[n]);
                let mut dense = vec![vec![0; 2]; 2];
                for (r, row) in dense.iter_mut().enumerate() {
                    for (c, entry) in row.iter_mut().enumerate() {
                        let twice_col: BigInt = BigInt::from(j + BigUint::from(c)) * 2;
                        let row_idx = BigInt::from(jn + BigUint::from(r));
                        *entry = u64::from((twice_col - row_idx).abs() <= BigInt::one());
                    }
                }
                matrices.push(MultiplicityMatrix::from_dense(&dense)?);
            }
        }
        BratteliDiagram::unital_with_labels(labels, matrices)
    }
}

impl LevelwiseIdeal for ThetaIdeal {
    fn known_depth(&self) -> usize {
        self.depth()
    }

    fn check_compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }

    fn agrees_at(&self, other: &Self, n: usize) -> bool {
        n <= 1 || self.j[n - 1] == other.j[n - 1]
    }
}

/// `j_1(θ), ..., j_N(θ)`.
pub fn j_sequence(cf: &ContinuedFraction, depth: usize) -> Result<Vec<BigUint>> {
    Ok(ThetaIdeal::new(cf, depth)?.j)
}

pub fn ideal_blocks(cf: &ContinuedFraction, n: usize) -> Result<BTreeSet<usize>> {
    if n <= 1 {
        return Ok(BTreeSet::new());
    }
    ThetaIdeal::new(cf, n)?.blocks(n)
}

/// `I_θ` as an ideal diagram over the Farey diagram through level `depth`.
pub fn theta_ideal_diagram(cf: &ContinuedFraction, depth: usize) -> Result<IdealDiagram> {
    theta_ideal_diagram_over(cf, Arc::new(farey_diagram(depth)?))
}

/// As [`theta_ideal_diagram`], reusing an existing Farey diagram.
pub fn theta_ideal_diagram_over(
    cf: &ContinuedFraction,
    farey: Arc<BratteliDiagram>,
) -> Result<IdealDiagram> {
    let depth = farey.depth();
    let ideal = ThetaIdeal::new(cf, depth)?;
    let mut levels = vec![BTreeSet::new()];
    for n in 1..=depth {
        levels.push(ideal.blocks(n)?);
    }
    IdealDiagram::new(farey, levels)
}

pub fn quotient_dimension(cf: &ContinuedFraction, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Ok(BigUint::one());
    }
    ThetaIdeal::new(cf, n)?.quotient_dimension(n)
}

pub fn beta(cf: &ContinuedFraction, n: usize) -> Result<BigRational> {
    Ok(BigRational::new(
        BigInt::one(),
        BigInt::from(quotient_dimension(cf, n)?),
    ))
}

pub fn trace_coefficient(cf: &ContinuedFraction, n: usize) -> Result<AffineCoefficient> {
    ThetaIdeal::new(cf, n)?.trace_coefficient(n)
}

pub fn trace_value(
    cf: &ContinuedFraction,
    n: usize,
    block_traces: &[BigRational],
) -> Result<AffineCoefficient> {
    ThetaIdeal::new(cf, n)?.trace_value(n, block_traces)
}

pub fn r_approach(cf: &ContinuedFraction, depth: usize) -> Result<Vec<(BigRational, BigRational)>> {
    Ok(ThetaIdeal::new(cf, depth)?.r_approach())
}

/// `a·θ + b` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffineCoefficient {
    #[serde(serialize_with = "crate::format::ser_rational")]
    pub a: BigRational,
    #[serde(serialize_with = "crate::format::ser_rational")]
    pub b: BigRational,
}

impl AffineCoefficient {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        AffineCoefficient { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        AffineCoefficient::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn eval(&self, theta: &BigRational) -> BigRational {
        &self.a * theta + &self.b
    }

    pub fn eval_f64(&self, theta: &BigRational) -> f64 {
        rational_to_f64(&self.eval(theta))
    }

    /// Certifies `0 < aθ + b < 1` by comparing θ with the two rational
    /// endpoints of the solution interval.
    pub fn certify_unit_interval(&self, cf: &ContinuedFraction) -> Result<()> {
        let fail = || Error::Certification(format!("{self} is not in (0,1) at θ = {cf}"));
        if self.a.is_zero() {
            return if self.b.is_positive() && self.b < BigRational::one() {
                Ok(())
            } else {
                Err(fail())
            };
        }
        let zero_at = -&self.b / &self.a;
        let one_at = (BigRational::one() - &self.b) / &self.a;
        let (lo, hi) = if self.a.is_positive() {
            (zero_at, one_at)
        } else {
            (one_at, zero_at)
        };
        let mut cmp = RationalComparator::new(cf, UNBOUNDED);
        if cmp.compare(lo.numer(), lo.denom())? == CfOrdering::Greater
            && cmp.compare(hi.numer(), hi.denom())? == CfOrdering::Less
        {
            Ok(())
        } else {
            Err(fail())
        }
    }
}

impl fmt::Display for AffineCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = if self.b.is_negative() {
            format!("- {}", rational_string(&-&self.b))
        } else {
            format!("+ {}", rational_string(&self.b))
        };
        write!(f, "{}·θ {b}", rational_string(&self.a))
    }
}

/// Which telescoped levels get their two blocks swapped before comparing
/// with the Effros-Shen diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SwapRule {
    /// Swap at odd telescope positions `x_1, x_3, ...`, where the newest
    /// convergent is the right endpoint of the Farey bracket.
    #[default]
    Alternating,
    Always,
    Never,
}

impl SwapRule {
    fn swaps(self, t: usize) -> bool {
        match self {
            SwapRule::Alternating => t % 2 == 1,
            SwapRule::Always => t >= 1,
            SwapRule::Never => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentificationReport {
    /// Telescope levels `0, x_1, ..., x_J`.
    pub levels: Vec<usize>,
    pub swap_rule: SwapRule,
    pub matches: bool,
    /// First telescope position whose labels or incoming matrix differ.
    pub first_mismatch: Option<usize>,
}

/// Telescopes `F / I_θ` at `x_t = a_1 + ... + a_t` for `t = 1..=J` and
/// compares with the Effros-Shen diagram of θ through level `J`.
pub fn effros_shen_identification(
    cf: &ContinuedFraction,
    j: usize,
    rule: SwapRule,
) -> Result<IdentificationReport> {
    if j < 1 {
        return Err(Error::Domain(
            "at least one telescope level is needed".into(),
        ));
    }
    let terms = cf.terms_through(j)?;
    let mut levels = vec![0usize];
    for &a in &terms[1..] {
        let a = usize::try_from(a).map_err(|_| Error::SizeGuard(format!("term {a} too large")))?;
        let next = levels
            .last()
            .expect("nonempty")
            .checked_add(a)
            .ok_or(Error::Overflow)?;
        levels.push(next);
    }
    let top = *levels.last().expect("nonempty");
    let quotient = ThetaIdeal::new(cf, top)?.quotient_diagram(top)?;
    let telescoped = quotient.telescope(&levels)?;
    let perms: Vec<Vec<usize>> = (0..levels.len())
        .map(|t| {
            if t == 0 {
                vec![0]
            } else if rule.swaps(t) {
                vec![1, 0]
            } else {
                vec![0, 1]
            }
        })
        .collect();
    let swapped = telescoped.permute_levels(&perms)?;
    let target = effros_shen_diagram(cf, j)?;
    let first_mismatch = (0..=j).find(|&t| {
        swapped.labels(t) != target.labels(t)
            || (t > 0 && swapped.matrix(t - 1) != target.matrix(t - 1))
    });
    Ok(IdentificationReport {
        levels,
        swap_rule: rule,
        matches: first_mismatch.is_none(),
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(s: &str) -> ContinuedFraction {
        s.parse().unwrap()
    }

    fn ints(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn j_examples() {
        assert_eq!(ints(&j_sequence(&cf("0;(1)"), 3).unwrap()), vec![0, 1, 2]);
        assert_eq!(
            ints(&j_sequence(&cf("0;1000,(1)"), 3).unwrap()),
            vec![0, 0, 0]
        );
        assert_eq!(ints(&j_sequence(&cf("0;7,(2,3)"), 1).unwrap()), vec![0]);
        let half = cf("0;2");
        assert_eq!(
            j_sequence(&half, 3),
            Err(Error::IndeterminateLevel {
                level: 2,
                mediant: "1/2".into()
            })
        );
    }

    #[test]
    fn blocks_and_dimensions() {
        let golden = cf("0;(1)");
        assert!(ideal_blocks(&golden, 1).unwrap().is_empty());
        assert_eq!(ideal_blocks(&golden, 3).unwrap(), [0, 1, 4].into());
        assert_eq!(
            ideal_blocks(&cf("0;1000,(1)"), 3).unwrap(),
            [2, 3, 4].into()
        );
        assert_eq!(
            quotient_dimension(&golden, 3).unwrap(),
            BigUint::from(13u32)
        );
        assert_eq!(beta(&golden, 3).unwrap(), q(1, 13));
        assert_eq!(beta(&golden, 1).unwrap(), q(1, 2));
        assert_eq!(beta(&golden, 0).unwrap(), q(1, 1));
    }

    #[test]
    fn theta_diagram_is_valid() {
        let d = theta_ideal_diagram(&cf("0;(1)"), 5).unwrap();
        assert!(d.level(0).is_empty() && d.level(1).is_empty());
        let quotient = d.base().quotient(&d).unwrap();
        assert_eq!(ints(quotient.labels(3)), vec![2, 3]);
    }

    #[test]
    fn trace_coefficient_examples() {
        assert_eq!(
            trace_coefficient(&cf("0;(1)"), 1).unwrap(),
            AffineCoefficient::from_integers(-1, 1)
        );
        let t = cf("0;5,(2,1)");
        assert_eq!(
            trace_coefficient(&t, 5).unwrap(),
            AffineCoefficient::from_integers(-5, 1)
        );
        for m in 1..=5 {
            let c = trace_coefficient(&t, m).unwrap();
            assert_eq!(c, AffineCoefficient::from_integers(-(m as i64), 1));
        }
    }

    #[test]
    fn trace_value_examples() {
        let g = cf("0;(1)");
        let one = BigRational::one();
        let zero = BigRational::zero();
        assert_eq!(
            trace_value(&g, 1, &[one.clone(), zero.clone()]).unwrap(),
            AffineCoefficient::from_integers(-1, 1)
        );
        assert_eq!(
            trace_value(&g, 1, &[zero.clone(), one.clone()]).unwrap(),
            AffineCoefficient::from_integers(1, 0)
        );
        let t = q(3, 7);
        assert_eq!(
            trace_value(&g, 4, &[t.clone(), t.clone()]).unwrap(),
            AffineCoefficient::new(BigRational::zero(), t)
        );
        assert_eq!(trace_value(&g, 1, &[one]), Err(Error::MissingBlockTrace(1)));
    }

    #[test]
    fn affine_display() {
        assert_eq!(
            AffineCoefficient::new(q(-3, 2), q(1, 4)).to_string(),
            "-3/2·θ + 1/4"
        );
        assert_eq!(
            AffineCoefficient::from_integers(2, -1).to_string(),
            "2·θ - 1"
        );
    }

    #[test]
    fn certification_rejects_out_of_range() {
        let c = AffineCoefficient::from_integers(1, 0);
        assert!(c.certify_unit_interval(&cf("0;(1)")).is_ok());
        let c = AffineCoefficient::from_integers(2, 0);
        assert!(matches!(
            c.certify_unit_interval(&cf("0;(1)")),
            Err(Error::Certification(_))
        ));
    }

    #[test]
    fn r_approach_examples() {
        let r = r_approach(&cf("0;(1)"), 3).unwrap();
        assert_eq!(
            r.iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
            vec![q(0, 1), q(1, 2), q(1, 2)]
        );
        assert_eq!(
            r.iter().map(|x| x.1.clone()).collect::<Vec<_>>(),
            vec![q(1, 1), q(1, 2), q(1, 6)]
        );
        let r = r_approach(&cf("0;2,(1)"), 3).unwrap();
        assert_eq!(
            r.iter().map(|x| x.0.clone()).collect::<Vec<_>>(),
            vec![q(0, 1), q(0, 1), q(1, 3)]
        );
    }

    #[test]
    fn sparse_quotient_matches_explicit_quotient() {
        for s in ["0;(1)", "0;2,(1)", "0;1,3,(2,5)", "0;4,1,1,(3)"] {
            let theta = cf(s);
            for depth in 1..=10 {
                let ideal = theta_ideal_diagram(&theta, depth).unwrap();
                let explicit = ideal.base().quotient(&ideal).unwrap();
                let sparse = ThetaIdeal::new(&theta, depth)
                    .unwrap()
                    .quotient_diagram(depth)
                    .unwrap();
                assert_eq!(sparse, explicit, "θ = {s}, depth {depth}");
            }
        }
    }

    #[test]
    fn identification_examples() {
        for s in ["0;(1)", "0;2,(1)", "0;3,1,4,(1,5)"] {
            let r = effros_shen_identification(&cf(s), 4, SwapRule::Alternating).unwrap();
            assert!(r.matches, "{s}: {r:?}");
        }
        assert_eq!(
            effros_shen_identification(&cf("0;2,(1)"), 1, SwapRule::Alternating)
                .unwrap()
                .levels,
            vec![0, 2]
        );
        let wrong = effros_shen_identification(&cf("0;(1)"), 4, SwapRule::Always).unwrap();
        assert!(!wrong.matches);
        let wrong = effros_shen_identification(&cf("0;2,(1)"), 4, SwapRule::Never).unwrap();
        assert_eq!(wrong.first_mismatch, Some(1));
    }

    #[test]
    fn remark_depth_is_cheap() {
        let theta = ThetaIdeal::new(&cf("0;1000,(1)"), 1001).unwrap();
        assert!(theta.j(1000).unwrap().is_zero());
        assert!(theta.j(1001).unwrap().is_one());
    }
}
