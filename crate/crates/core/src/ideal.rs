//! Ideals of AF algebras as truncated ideal diagrams, the first-disagreement
//! metric on them, and fusing sequences.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bratteli::BratteliDiagram;
use crate::distance::Distance;
use crate::error::{Error, Result};

/// Largest level enumerated by [`enumerate_coherent_ideals`].
pub const MAX_ENUMERATION_VERTICES: usize = 20;

/// Anything that can be compared level by level with another ideal of the
/// same kind.
pub trait LevelwiseIdeal {
    /// Last level for which the ideal is known.
    fn known_depth(&self) -> usize;

    /// Errors if the two ideals live over different diagrams.
    fn check_compatible(&self, other: &Self) -> Result<()>;

    /// Whether both ideals have the same vertices at level `n`.
    fn agrees_at(&self, other: &Self, n: usize) -> bool;
}

/// First level in `0..=depth` where `a` and `b` differ.
pub fn first_disagreement<I: LevelwiseIdeal>(a: &I, b: &I, depth: usize) -> Result<Option<usize>> {
    a.check_compatible(b)?;
    let available = a.known_depth().min(b.known_depth());
    if depth > available {
        return Err(Error::Depth {
            requested: depth,
            available,
        });
    }
    Ok((0..=depth).find(|&n| !a.agrees_at(b, n)))
}

/// `2^-m` for the first disagreeing level `m`, or agree-to-depth.
pub fn ideal_metric<I: LevelwiseIdeal>(a: &I, b: &I, depth: usize) -> Result<Distance> {
    Ok(match first_disagreement(a, b, depth)? {
        Some(m) => Distance::dyadic(m as u64),
        None => Distance::AgreeToDepth { depth },
    })
}

/// Vertex subsets of a diagram, one per level `0..=depth`, forming a
/// directed and hereditary set.
#[derive(Debug, Clone)]
pub struct IdealDiagram {
    base: Arc<BratteliDiagram>,
    levels: Vec<BTreeSet<usize>>,
}

impl PartialEq for IdealDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels
            && (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base)
    }
}

impl Eq for IdealDiagram {}

impl IdealDiagram {
    /// Validated ideal; `levels` may stop before the base's last level.
    pub fn new(base: Arc<BratteliDiagram>, levels: Vec<BTreeSet<usize>>) -> Result<Self> {
        match validate_ideal(&base, &levels)? {
            IdealValidity::Valid { .. } => Ok(IdealDiagram { base, levels }),
            IdealValidity::Invalid(v) => Err(Error::Axiom(v.to_string())),
        }
    }

    /// The zero ideal through level `depth`.
    pub fn zero(base: Arc<BratteliDiagram>, depth: usize) -> Result<Self> {
        IdealDiagram::new(base, vec![BTreeSet::new(); depth + 1])
    }

    /// The improper ideal through level `depth`.
    pub fn full(base: Arc<BratteliDiagram>, depth: usize) -> Result<Self> {
        let levels = (0..=depth)
            .map(|n| (0..base.level_size(n)).collect())
            .collect();
        IdealDiagram::new(base, levels)
    }

    pub(crate) fn from_parts_unchecked(
        base: Arc<BratteliDiagram>,
        levels: Vec<BTreeSet<usize>>,
    ) -> Self {
        IdealDiagram { base, levels }
    }

    pub fn base(&self) -> &Arc<BratteliDiagram> {
        &self.base
    }

    pub fn levels(&self) -> &[BTreeSet<usize>] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> &BTreeSet<usize> {
        &self.levels[n]
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(BTreeSet::is_empty)
    }

    /// Contains every vertex at some level (then at every later level too).
    pub fn is_improper(&self) -> bool {
        self.levels
            .iter()
            .enumerate()
            .any(|(n, s)| s.len() == self.base.level_size(n))
    }

    pub fn truncate(&self, depth: usize) -> Result<IdealDiagram> {
        if depth > self.depth() {
            return Err(Error::Depth {
                requested: depth,
                available: self.depth(),
            });
        }
        Ok(IdealDiagram {
            base: Arc::clone(&self.base),
            levels: self.levels[..=depth].to_vec(),
        })
    }

    /// Max block norm outside the ideal at level `n`.
    pub fn quotient_norm_at_level(
        &self,
        n: usize,
        block_norms: &[BigRational],
    ) -> Result<BigRational> {
        if n > self.depth() {
            return Err(Error::Depth {
                requested: n,
                available: self.depth(),
            });
        }
        if block_norms.len() != self.base.level_size(n) {
            return Err(Error::Shape(format!(
                "{} norms for {} blocks at level {n}",
                block_norms.len(),
                self.base.level_size(n)
            )));
        }
        Ok(quotient_norm(block_norms, &self.levels[n]))
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            levels: self
                .levels
                .iter()
                .map(|s| s.iter().copied().collect())
                .collect(),
        }
    }
}

impl LevelwiseIdeal for IdealDiagram {
    fn known_depth(&self) -> usize {
        self.depth()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.base, &other.base) || self.base == other.base {
            Ok(())
        } else {
            Err(Error::BaseMismatch)
        }
    }

    fn agrees_at(&self, other: &Self, n: usize) -> bool {
        self.levels[n] == other.levels[n]
    }
}

/// JSON form `{levels:[[indices]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub levels: Vec<Vec<usize>>,
}

/// Max of the norms outside `ideal_blocks`; zero if every block is killed.
pub fn quotient_norm(block_norms: &[BigRational], ideal_blocks: &BTreeSet<usize>) -> BigRational {
    block_norms
        .iter()
        .enumerate()
        .filter(|(k, _)| !ideal_blocks.contains(k))
        .map(|(_, v)| v.clone())
        .max()
        .unwrap_or_else(BigRational::zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealAxiom {
    Directed,
    Hereditary,
}

/// A failed axiom at vertex `(level, vertex)`. For `Directed`, `witness` is
/// a successor outside the set; for `Hereditary` it is `None` because every
/// successor lies inside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealViolation {
    pub axiom: IdealAxiom,
    pub level: usize,
    pub vertex: usize,
    pub witness: Option<usize>,
}

impl fmt::Display for IdealViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, k) = (self.level, self.vertex);
        match (self.axiom, self.witness) {
            (IdealAxiom::Directed, Some(w)) => {
                write!(
                    f,
                    "directed axiom fails at ({n},{k}): successor ({},{w}) is missing",
                    n + 1
                )
            }
            _ => write!(
                f,
                "hereditary axiom fails at ({n},{k}): all successors are in the ideal"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum IdealValidity {
    Valid { zero: bool, improper: bool },
    Invalid(IdealViolation),
}

impl IdealValidity {
    pub fn is_valid(&self) -> bool {
        matches!(self, IdealValidity::Valid { .. })
    }
}

/// Checks the directed and hereditary axioms between consecutive given
/// levels, lowest level first, and reports the first violation.
pub fn validate_ideal(base: &BratteliDiagram, levels: &[BTreeSet<usize>]) -> Result<IdealValidity> {
    if levels.is_empty() {
        return Err(Error::Shape("an ideal needs at least level 0".into()));
    }
    if levels.len() > base.depth() + 1 {
        return Err(Error::Depth {
            requested: levels.len() - 1,
            available: base.depth(),
        });
    }
    for (n, set) in levels.iter().enumerate() {
        if let Some(&k) = set.iter().find(|&&k| k >= base.level_size(n)) {
            return Err(Error::IndexOutOfRange { level: n, index: k });
        }
    }
    for n in 0..levels.len() - 1 {
        let next = &levels[n + 1];
        for k in 0..base.level_size(n) {
            let succ = base.successors(n, k);
            let missing = succ.iter().find(|q| !next.contains(q)).copied();
            let inside = levels[n].contains(&k);
            if inside {
                if let Some(w) = missing {
                    return Ok(IdealValidity::Invalid(IdealViolation {
                        axiom: IdealAxiom::Directed,
                        level: n,
                        vertex: k,
                        witness: Some(w),
                    }));
                }
            } else if missing.is_none() {
                return Ok(IdealValidity::Invalid(IdealViolation {
                    axiom: IdealAxiom::Hereditary,
                    level: n,
                    vertex: k,
                    witness: None,
                }));
            }
        }
    }
    Ok(IdealValidity::Valid {
        zero: levels.iter().all(BTreeSet::is_empty),
        improper: levels
            .iter()
            .enumerate()
            .any(|(n, s)| s.len() == base.level_size(n)),
    })
}

/// Level-`n` vertices all of whose successors lie in `upper` (a subset of
/// level `n + 1`).
pub fn restrict_level(
    base: &BratteliDiagram,
    n: usize,
    upper: &BTreeSet<usize>,
) -> Result<BTreeSet<usize>> {
    if n >= base.depth() {
        return Err(Error::Depth {
            requested: n + 1,
            available: base.depth(),
        });
    }
    if let Some(&k) = upper.iter().find(|&&k| k >= base.level_size(n + 1)) {
        return Err(Error::IndexOutOfRange {
            level: n + 1,
            index: k,
        });
    }
    let cols = base.matrix(n).columns();
    Ok((0..base.level_size(n))
        .filter(|&k| cols[k].iter().all(|(q, _)| upper.contains(q)))
        .collect())
}

/// Every coherent truncation through level `depth`, one per subset of that
/// level, ordered by the subset's bitmask.
pub fn enumerate_coherent_ideals(
    base: &Arc<BratteliDiagram>,
    depth: usize,
) -> Result<Vec<IdealDiagram>> {
    if depth > base.depth() {
        return Err(Error::Depth {
            requested: depth,
            available: base.depth(),
        });
    }
    let v = base.level_size(depth);
    if v > MAX_ENUMERATION_VERTICES {
        return Err(Error::SizeGuard(format!(
            "level {depth} has {v} vertices; enumeration is limited to {MAX_ENUMERATION_VERTICES}"
        )));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << v) {
        let mut levels = vec![BTreeSet::new(); depth + 1];
        levels[depth] = (0..v).filter(|k| mask >> k & 1 == 1).collect();
        for n in (0..depth).rev() {
            levels[n] = restrict_level(base, n, &levels[n + 1])?;
        }
        if seen.insert(levels.clone()) {
            out.push(IdealDiagram::from_parts_unchecked(Arc::clone(base), levels));
        }
    }
    Ok(out)
}

/// Minimal fusing sequence `c_0, ..., c_N` of a finite family against a
/// limit, or the first level at which even the last member disagrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusingReport {
    /// `c[n]` for every level before the failure (all levels on success).
    pub sequence: Vec<usize>,
    pub failed_at: Option<usize>,
}

impl FusingReport {
    pub fn is_fused(&self) -> bool {
        self.failed_at.is_none()
    }
}

pub fn detect_fusing<I: LevelwiseIdeal>(
    family: &[I],
    limit: &I,
    depth: usize,
) -> Result<FusingReport> {
    if family.is_empty() {
        return Err(Error::EmptySequence);
    }
    let first_diff = family
        .iter()
        .map(|i| first_disagreement(i, limit, depth))
        .collect::<Result<Vec<_>>>()?;
    let agrees_through = |k: usize, n: usize| first_diff[k].is_none_or(|m| m > n);
    let mut sequence = Vec::with_capacity(depth + 1);
    for n in 0..=depth {
        let mut k0 = family.len();
        while k0 > 0 && agrees_through(k0 - 1, n) {
            k0 -= 1;
        }
        if k0 == family.len() {
            return Ok(FusingReport {
                sequence,
                failed_at: Some(n),
            });
        }
        sequence.push(k0);
    }
    Ok(FusingReport {
        sequence,
        failed_at: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bratteli::{diagram_from_matrices, farey_diagram};
    use crate::matrix::MultiplicityMatrix;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn toy() -> Arc<BratteliDiagram> {
        let m = MultiplicityMatrix::from_dense(&[vec![1], vec![1]]).unwrap();
        Arc::new(diagram_from_matrices(&[1], vec![m]).unwrap())
    }

    #[test]
    fn validation_examples() {
        let f = farey_diagram(3).unwrap();
        let empty = vec![BTreeSet::new(); 4];
        assert_eq!(
            validate_ideal(&f, &empty).unwrap(),
            IdealValidity::Valid {
                zero: true,
                improper: false
            }
        );
        let all: Vec<_> = (0..4).map(|n| (0..f.level_size(n)).collect()).collect();
        assert_eq!(
            validate_ideal(&f, &all).unwrap(),
            IdealValidity::Valid {
                zero: false,
                improper: true
            }
        );
        let bad = vec![set(&[]), set(&[]), set(&[1]), set(&[])];
        match validate_ideal(&f, &bad).unwrap() {
            IdealValidity::Invalid(v) => {
                assert_eq!((v.axiom, v.level, v.vertex), (IdealAxiom::Directed, 2, 1));
            }
            other => panic!("{other:?}"),
        }
        let out_of_range = vec![set(&[]), set(&[5])];
        assert_eq!(
            validate_ideal(&f, &out_of_range),
            Err(Error::IndexOutOfRange { level: 1, index: 5 })
        );
    }

    #[test]
    fn restriction_examples() {
        let f = farey_diagram(2).unwrap();
        assert_eq!(
            restrict_level(&f, 1, &set(&[0, 1, 2])).unwrap(),
            set(&[0, 1])
        );
        assert_eq!(restrict_level(&f, 1, &set(&[])).unwrap(), set(&[]));
        assert_eq!(restrict_level(&f, 1, &set(&[0, 1])).unwrap(), set(&[0]));
    }

    #[test]
    fn toy_enumeration() {
        let ideals = enumerate_coherent_ideals(&toy(), 1).unwrap();
        let levels: Vec<_> = ideals.iter().map(|i| i.levels().to_vec()).collect();
        assert_eq!(
            levels,
            vec![
                vec![set(&[]), set(&[])],
                vec![set(&[]), set(&[0])],
                vec![set(&[]), set(&[1])],
                vec![set(&[0]), set(&[0, 1])],
            ]
        );
        let trivial = Arc::new(
            diagram_from_matrices(&[1], vec![MultiplicityMatrix::identity(1); 3]).unwrap(),
        );
        assert_eq!(enumerate_coherent_ideals(&trivial, 3).unwrap().len(), 2);
    }

    #[test]
    fn metric_values() {
        let base = toy();
        let zero = IdealDiagram::zero(Arc::clone(&base), 1).unwrap();
        let full = IdealDiagram::full(Arc::clone(&base), 1).unwrap();
        let left = IdealDiagram::new(Arc::clone(&base), vec![set(&[]), set(&[0])]).unwrap();
        assert_eq!(
            ideal_metric(&zero, &zero, 1).unwrap(),
            Distance::AgreeToDepth { depth: 1 }
        );
        assert_eq!(ideal_metric(&zero, &left, 1).unwrap(), Distance::dyadic(1));
        assert_eq!(ideal_metric(&zero, &full, 1).unwrap(), Distance::dyadic(0));
        assert!(full.is_improper() && !left.is_improper());
        assert!(matches!(
            ideal_metric(&zero, &left, 2),
            Err(Error::Depth { .. })
        ));
        let other = Arc::new(farey_diagram(1).unwrap().telescope(&[0, 1]).unwrap());
        let other_zero = IdealDiagram::zero(Arc::new(farey_diagram(2).unwrap()), 1).unwrap();
        assert_eq!(IdealDiagram::zero(other, 1).unwrap(), zero);
        assert_eq!(
            ideal_metric(&zero, &other_zero, 1),
            Err(Error::BaseMismatch)
        );
    }

    #[test]
    fn quotient_norms() {
        let r = |n: i64| BigRational::from_integer(n.into());
        let norms = [r(5), r(3), r(7)];
        assert_eq!(quotient_norm(&norms, &set(&[])), r(7));
        assert_eq!(quotient_norm(&norms, &set(&[2])), r(5));
        assert_eq!(quotient_norm(&norms, &set(&[0, 1, 2])), r(0));
    }

    #[test]
    fn fusing_examples() {
        let base = toy();
        let zero = IdealDiagram::zero(Arc::clone(&base), 1).unwrap();
        let left = IdealDiagram::new(Arc::clone(&base), vec![set(&[]), set(&[0])]).unwrap();
        let constant = vec![zero.clone(); 4];
        assert_eq!(
            detect_fusing(&constant, &zero, 1).unwrap(),
            FusingReport {
                sequence: vec![0, 0],
                failed_at: None
            }
        );
        let never = vec![left.clone(); 3];
        assert_eq!(
            detect_fusing(&never, &zero, 1).unwrap(),
            FusingReport {
                sequence: vec![0],
                failed_at: Some(1)
            }
        );
        let late = vec![left.clone(), zero.clone(), left, zero.clone()];
        assert_eq!(detect_fusing(&late, &zero, 1).unwrap().sequence, vec![0, 3]);
        assert_eq!(
            detect_fusing::<IdealDiagram>(&[], &zero, 1),
            Err(Error::EmptySequence)
        );
    }
}
