use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::algebra::{Element, MultiMatrixAlgebra};
use crate::bratteli::BratteliDiagram;
use crate::error::{Error, Result};
use crate::format::{parse_rational, rational_to_f64};
use crate::matrix::MultiplicityMatrix;

/// Where one copy of a lower-level block sits inside the top algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub block: usize,
    pub offset: usize,
}

/// A finite tower `C = A_0 ⊂ A_1 ⊂ ... ⊂ A_N` with a faithful tracial state
/// on `A_N` and weights `β(0), ..., β(N)`.
///
/// Embeddings repeat blocks along the diagonal: target block `i` of level
/// `n + 1` holds the source blocks of level `n` in increasing order, block
/// `j` repeated `M[i][j]` times in a row.
#[derive(Debug, Clone)]
pub struct ChainSpace {
    levels: Vec<MultiMatrixAlgebra>,
    matrices: Vec<MultiplicityMatrix>,
    trace: Vec<f64>,
    beta: Vec<f64>,
    /// `placements[n][j]`: copies of block `j` of level `n` in the top level.
    placements: Vec<Vec<Vec<Placement>>>,
}

impl ChainSpace {
    pub fn new(
        levels: Vec<MultiMatrixAlgebra>,
        matrices: Vec<MultiplicityMatrix>,
        trace: Vec<f64>,
        beta: Vec<f64>,
    ) -> Result<Self> {
        if levels.first().map(MultiMatrixAlgebra::block_sizes) != Some(&[1][..]) {
            return Err(Error::Domain("level 0 must be the scalars".into()));
        }
        if matrices.len() + 1 != levels.len() {
            return Err(Error::Shape(format!(
                "{} levels need {} matrices",
                levels.len(),
                levels.len() - 1
            )));
        }
        if beta.len() != levels.len() {
            return Err(Error::Shape(format!(
                "{} levels need {} β values",
                levels.len(),
                levels.len()
            )));
        }
        if let Some(n) = beta.iter().position(|b| !(b.is_finite() && *b > 0.0)) {
            return Err(Error::Domain(format!("β({n}) must be positive")));
        }
        for (n, m) in matrices.iter().enumerate() {
            let (src, dst) = (levels[n].block_sizes(), levels[n + 1].block_sizes());
            if m.cols() != src.len() || m.rows() != dst.len() {
                return Err(Error::Shape(format!(
                    "matrix {n} does not fit levels {n} and {}",
                    n + 1
                )));
            }
            if let Some(j) = m.first_zero_col() {
                return Err(Error::Domain(format!(
                    "block {j} of level {n} does not embed"
                )));
            }
            for (i, &d) in dst.iter().enumerate() {
                let size: usize = m
                    .row(i)
                    .iter()
                    .map(|&(j, mult)| mult as usize * src[j])
                    .sum();
                if size != d {
                    return Err(Error::Domain(format!(
                        "embedding {n} is not unital: block {i} of level {} has size {d}, receives {size}",
                        n + 1
                    )));
                }
            }
        }
        let top = levels.last().expect("nonempty");
        if trace.len() != top.num_blocks() {
            return Err(Error::Shape(format!(
                "{} trace weights for {} blocks",
                trace.len(),
                top.num_blocks()
            )));
        }
        if let Some(i) = trace.iter().position(|&t| !(t.is_finite() && t > 0.0)) {
            return Err(Error::NonFaithfulTrace(i));
        }
        if (trace.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState("trace weights must sum to 1".into()));
        }

        let depth = levels.len() - 1;
        let mut placements = vec![Vec::new(); depth + 1];
        placements[depth] = (0..top.num_blocks())
            .map(|i| {
                vec![Placement {
                    block: i,
                    offset: 0,
                }]
            })
            .collect();
        for n in (0..depth).rev() {
            let src = levels[n].block_sizes();
            let mut local = vec![Vec::new(); src.len()];
            for i in 0..matrices[n].rows() {
                let mut offset = 0;
                for &(j, mult) in matrices[n].row(i) {
                    for _ in 0..mult {
                        local[j].push((i, offset));
                        offset += src[j];
                    }
                }
            }
            placements[n] = local
                .iter()
                .map(|copies| {
                    copies
                        .iter()
                        .flat_map(|&(i, off)| {
                            placements[n + 1][i].iter().map(move |p| Placement {
                                block: p.block,
                                offset: p.offset + off,
                            })
                        })
                        .collect()
                })
                .collect();
        }
        Ok(ChainSpace {
            levels,
            matrices,
            trace,
            beta,
            placements,
        })
    }

    /// The tower of a unital Bratteli diagram truncated at its last level.
    pub fn from_diagram(d: &BratteliDiagram, trace: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        let levels = d
            .all_labels()
            .iter()
            .map(|l| {
                MultiMatrixAlgebra::new(
                    l.iter()
                        .map(|x| {
                            x.to_usize()
                                .ok_or_else(|| Error::SizeGuard(format!("block size {x}")))
                        })
                        .collect::<Result<_>>()?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        ChainSpace::new(levels, d.matrices().to_vec(), trace, beta)
    }

    pub fn from_file(file: &ChainFile) -> Result<Self> {
        let levels = file
            .blocks
            .iter()
            .map(|b| MultiMatrixAlgebra::new(b.clone()))
            .collect::<Result<Vec<_>>>()?;
        let matrices = file
            .matrices
            .iter()
            .map(|m| MultiplicityMatrix::from_dense(m))
            .collect::<Result<Vec<_>>>()?;
        let trace = file
            .trace
            .iter()
            .map(Number::to_f64)
            .collect::<Result<Vec<_>>>()?;
        let beta = file
            .beta
            .iter()
            .map(Number::to_f64)
            .collect::<Result<Vec<_>>>()?;
        ChainSpace::new(levels, matrices, trace, beta)
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &MultiMatrixAlgebra {
        &self.levels[n]
    }

    pub fn top(&self) -> &MultiMatrixAlgebra {
        self.levels.last().expect("nonempty")
    }

    pub fn matrix(&self, n: usize) -> &MultiplicityMatrix {
        &self.matrices[n]
    }

    pub fn trace_weights(&self) -> &[f64] {
        &self.trace
    }

    pub fn beta(&self) -> &[f64] {
        &self.beta
    }

    pub fn placements(&self, n: usize) -> &[Vec<Placement>] {
        &self.placements[n]
    }

    /// `w_i = t_i / d_i`, the weight of the unnormalized trace on block `i`.
    pub fn block_weight(&self, i: usize) -> f64 {
        self.trace[i] / self.top().block_sizes()[i] as f64
    }

    /// `μ(a) = Σ_i t_i tr_{d_i}(a_i)`.
    pub fn state(&self, a: &Element) -> f64 {
        a.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| self.block_weight(i) * b.trace().re)
            .sum()
    }

    /// `⟨x, y⟩_μ = Re μ(y* x)`.
    pub fn inner(&self, x: &Element, y: &Element) -> f64 {
        x.blocks
            .iter()
            .zip(&y.blocks)
            .enumerate()
            .map(|(i, (a, b))| self.block_weight(i) * b.dotc(a).re)
            .sum()
    }

    /// Image of a level-`n` element in the top algebra.
    pub fn embed(&self, x: &Element, n: usize) -> Result<Element> {
        self.embed_between(x, n, self.depth())
    }

    /// Image of a level-`n` element in level `m >= n`.
    pub fn embed_between(&self, x: &Element, n: usize, m: usize) -> Result<Element> {
        if n > m || m > self.depth() {
            return Err(Error::Domain(format!(
                "cannot embed level {n} into level {m}"
            )));
        }
        self.levels[n].check(x)?;
        let mut cur = x.clone();
        for k in n..m {
            let src = self.levels[k].block_sizes();
            let mut out = self.levels[k + 1].zero();
            for (i, target) in out.blocks.iter_mut().enumerate() {
                let mut offset = 0;
                for &(j, mult) in self.matrices[k].row(i) {
                    for _ in 0..mult {
                        target
                            .view_mut((offset, offset), (src[j], src[j]))
                            .copy_from(&cur.blocks[j]);
                        offset += src[j];
                    }
                }
            }
            cur = out;
        }
        Ok(cur)
    }

    /// `E_n(a)` as an element of level `n`: per block, the trace-weighted
    /// average of the diagonal sub-blocks where it is placed.
    pub fn expectation_at_level(&self, a: &Element, n: usize) -> Result<Element> {
        self.top().check(a)?;
        if n > self.depth() {
            return Err(Error::Depth {
                requested: n,
                available: self.depth(),
            });
        }
        let sizes = self.levels[n].block_sizes();
        let blocks = self.placements[n]
            .iter()
            .zip(sizes)
            .map(|(copies, &d)| {
                let mut acc = DMatrix::<Complex64>::zeros(d, d);
                let mut total = 0.0;
                for p in copies {
                    let w = self.block_weight(p.block);
                    acc += a.blocks[p.block].view((p.offset, p.offset), (d, d))
                        * Complex64::new(w, 0.0);
                    total += w;
                }
                acc / Complex64::new(total, 0.0)
            })
            .collect();
        Ok(Element::new(blocks))
    }

    /// `E_n(a)` embedded back in the top algebra.
    pub fn conditional_expectation(&self, a: &Element, n: usize) -> Result<Element> {
        self.embed(&self.expectation_at_level(a, n)?, n)
    }

    /// `‖a - E_n(a)‖` for `n = 0..=N`.
    pub fn deviations(&self, a: &Element) -> Result<Vec<f64>> {
        (0..=self.depth())
            .map(|n| Ok(a.sub(&self.conditional_expectation(a, n)?).norm()))
            .collect()
    }

    /// `L(a) = max_n ‖a - E_n(a)‖ / β(n)`.
    pub fn lip_norm(&self, a: &Element) -> Result<f64> {
        Ok(self
            .deviations(a)?
            .iter()
            .zip(&self.beta)
            .map(|(d, b)| d / b)
            .fold(0.0, f64::max))
    }
}

/// JSON form `{blocks:[[d...]...], matrices:[...], trace:[t...], beta:["p/q"...]}`.
/// Trace weights and β values may be numbers or rational strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainFile {
    pub blocks: Vec<Vec<usize>>,
    pub matrices: Vec<Vec<Vec<u64>>>,
    pub trace: Vec<Number>,
    pub beta: Vec<Number>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Float(f64),
    Text(String),
}

impl Number {
    pub fn to_f64(&self) -> Result<f64> {
        match self {
            Number::Float(x) => Ok(*x),
            Number::Text(s) => Ok(rational_to_f64(&parse_rational(s)?)),
        }
    }
}
