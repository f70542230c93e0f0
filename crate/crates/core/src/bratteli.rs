//! Leveled Bratteli diagrams stored as label vectors and partial
//! multiplicity matrices.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cf::ContinuedFraction;
use crate::error::{Error, Result};
use crate::farey::{farey_levels, farey_multiplicity_matrix, MAX_EXPLICIT_LEVEL};
use crate::ideal::IdealDiagram;
use crate::matrix::MultiplicityMatrix;

/// A diagram truncated at a finite depth.
///
/// Level `n` has vertices `(n, 0), ..., (n, v_n)`; `matrices[n]` holds the
/// edge multiplicities from level `n` to level `n + 1` (rows index level
/// `n + 1`). A diagram flagged as a unital tower additionally satisfies
/// `labels[n + 1] = matrices[n] · labels[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliDiagram {
    labels: Vec<Vec<BigUint>>,
    matrices: Vec<MultiplicityMatrix>,
    unital: bool,
}

impl BratteliDiagram {
    /// Labels propagated from `label0` through the matrices.
    pub fn unital_tower(label0: Vec<BigUint>, matrices: Vec<MultiplicityMatrix>) -> Result<Self> {
        let mut labels = vec![label0];
        for (n, m) in matrices.iter().enumerate() {
            let prev = labels.last().expect("nonempty");
            if m.cols() != prev.len() {
                return Err(Error::Shape(format!(
                    "matrix {n} has {} columns but level {n} has {} vertices",
                    m.cols(),
                    prev.len()
                )));
            }
            let next = m.apply(prev)?;
            labels.push(next);
        }
        let d = BratteliDiagram {
            labels,
            matrices,
            unital: true,
        };
        d.validate()?;
        Ok(d)
    }

    /// Explicit labels; no label/matrix compatibility is required.
    pub fn with_labels(
        labels: Vec<Vec<BigUint>>,
        matrices: Vec<MultiplicityMatrix>,
    ) -> Result<Self> {
        let d = BratteliDiagram {
            labels,
            matrices,
            unital: false,
        };
        d.validate()?;
        Ok(d)
    }

    /// Explicit labels that must also satisfy the unital compatibility.
    pub fn unital_with_labels(
        labels: Vec<Vec<BigUint>>,
        matrices: Vec<MultiplicityMatrix>,
    ) -> Result<Self> {
        let d = BratteliDiagram {
            labels,
            matrices,
            unital: true,
        };
        d.validate()?;
        Ok(d)
    }

    /// Checks shapes, positive labels, axioms (ii) and (iii), and label
    /// compatibility for unital towers. Axiom (i) holds by representation.
    pub fn validate(&self) -> Result<()> {
        if self.labels.is_empty() {
            return Err(Error::Shape("diagram has no levels".into()));
        }
        if self.matrices.len() + 1 != self.labels.len() {
            return Err(Error::Shape(format!(
                "{} levels need {} matrices, got {}",
                self.labels.len(),
                self.labels.len() - 1,
                self.matrices.len()
            )));
        }
        for (n, level) in self.labels.iter().enumerate() {
            if level.is_empty() {
                return Err(Error::Shape(format!("level {n} has no vertices")));
            }
        }
        for (n, m) in self.matrices.iter().enumerate() {
            if m.cols() != self.labels[n].len() || m.rows() != self.labels[n + 1].len() {
                return Err(Error::Shape(format!(
                    "matrix {n} is {}x{} between levels of sizes {} and {}",
                    m.rows(),
                    m.cols(),
                    self.labels[n].len(),
                    self.labels[n + 1].len()
                )));
            }
            if let Some(k) = m.first_zero_col() {
                return Err(Error::Axiom(format!(
                    "vertex ({n},{k}) has no outgoing edge"
                )));
            }
            if let Some(k) = m.first_zero_row() {
                return Err(Error::Axiom(format!(
                    "vertex ({},{k}) has no incoming edge",
                    n + 1
                )));
            }
        }
        for (n, level) in self.labels.iter().enumerate() {
            if let Some(k) = level.iter().position(Zero::is_zero) {
                return Err(Error::Axiom(format!("vertex ({n},{k}) has label 0")));
            }
        }
        for (n, m) in self.matrices.iter().enumerate() {
            if self.unital && m.apply(&self.labels[n])? != self.labels[n + 1] {
                return Err(Error::Axiom(format!(
                    "labels at level {} are not the image of level {n}",
                    n + 1
                )));
            }
        }
        Ok(())
    }

    /// Index of the last level.
    pub fn depth(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn labels(&self, n: usize) -> &[BigUint] {
        &self.labels[n]
    }

    pub fn all_labels(&self) -> &[Vec<BigUint>] {
        &self.labels
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    /// Edge multiplicities from level `n` to level `n + 1`.
    pub fn matrix(&self, n: usize) -> &MultiplicityMatrix {
        &self.matrices[n]
    }

    pub fn matrices(&self) -> &[MultiplicityMatrix] {
        &self.matrices
    }

    /// `R_(n,k)`: indices of the level `n + 1` vertices reached from `(n, k)`.
    pub fn successors(&self, n: usize, k: usize) -> Vec<usize> {
        let m = &self.matrices[n];
        (0..m.rows()).filter(|&r| m.get(r, k) != 0).collect()
    }

    /// `sum_k label(n, k)^2`.
    pub fn dimension_at_level(&self, n: usize) -> Result<BigUint> {
        let level = self.labels.get(n).ok_or(Error::Depth {
            requested: n,
            available: self.depth(),
        })?;
        Ok(level.iter().map(|l| l * l).sum())
    }

    /// Keeps the listed levels; the matrices become ordered products.
    pub fn telescope(&self, indices: &[usize]) -> Result<BratteliDiagram> {
        if indices.is_empty() {
            return Err(Error::Domain("telescoping needs at least one level".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain(format!(
                "levels {indices:?} are not strictly increasing"
            )));
        }
        let last = *indices.last().expect("nonempty");
        if last > self.depth() {
            return Err(Error::Depth {
                requested: last,
                available: self.depth(),
            });
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let mut matrices = Vec::with_capacity(indices.len() - 1);
        for w in indices.windows(2) {
            let mut prod = self.matrices[w[0]].clone();
            for n in w[0] + 1..w[1] {
                prod = self.matrices[n].mul(&prod)?;
            }
            matrices.push(prod);
        }
        let d = BratteliDiagram {
            labels,
            matrices,
            unital: self.unital,
        };
        d.validate()?;
        Ok(d)
    }

    /// The diagram on the vertices outside `ideal`, with induced edges.
    pub fn quotient(&self, ideal: &IdealDiagram) -> Result<BratteliDiagram> {
        let levels = ideal.levels();
        if levels.len() > self.labels.len() {
            return Err(Error::Shape(format!(
                "ideal has {} levels, diagram only {}",
                levels.len(),
                self.labels.len()
            )));
        }
        let kept: Vec<Vec<usize>> = levels
            .iter()
            .enumerate()
            .map(|(n, set)| {
                (0..self.level_size(n))
                    .filter(|k| !set.contains(k))
                    .collect()
            })
            .collect();
        if let Some(level) = kept.iter().position(Vec::is_empty) {
            return Err(Error::EmptyQuotient { level });
        }
        let labels = kept
            .iter()
            .enumerate()
            .map(|(n, ks)| ks.iter().map(|&k| self.labels[n][k].clone()).collect())
            .collect();
        let matrices = kept
            .windows(2)
            .enumerate()
            .map(|(n, w)| self.matrices[n].select(&w[1], &w[0]))
            .collect();
        let d = BratteliDiagram {
            labels,
            matrices,
            unital: self.unital,
        };
        d.validate()?;
        Ok(d)
    }

    /// Reorders the vertices of each level; `perms[n][i]` is the old index
    /// placed at position `i`.
    pub fn permute_levels(&self, perms: &[Vec<usize>]) -> Result<BratteliDiagram> {
        if perms.len() != self.labels.len() {
            return Err(Error::Shape("one permutation per level required".into()));
        }
        for (n, p) in perms.iter().enumerate() {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            if sorted != (0..self.level_size(n)).collect::<Vec<_>>() {
                return Err(Error::Shape(format!("not a permutation of level {n}")));
            }
        }
        let labels = perms
            .iter()
            .enumerate()
            .map(|(n, p)| p.iter().map(|&k| self.labels[n][k].clone()).collect())
            .collect();
        let matrices = self
            .matrices
            .iter()
            .enumerate()
            .map(|(n, m)| m.select(&perms[n + 1], &perms[n]))
            .collect();
        Ok(BratteliDiagram {
            labels,
            matrices,
            unital: self.unital,
        })
    }

    /// Graphviz rendering; vertices are named `n_k` and labelled with their
    /// matrix size, edges carry their multiplicity.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph bratteli {\n  rankdir=LR;\n");
        for (n, level) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  subgraph level_{n} {{\n    rank=same;");
            for (k, label) in level.iter().enumerate() {
                let _ = writeln!(out, "    \"{n}_{k}\" [label=\"{label}\"];");
            }
            out.push_str("  }\n");
        }
        for (n, m) in self.matrices.iter().enumerate() {
            for r in 0..m.rows() {
                for &(c, mult) in m.row(r) {
                    let _ = writeln!(
                        out,
                        "  \"{n}_{c}\" -> \"{}_{r}\" [label=\"{mult}\"];",
                        n + 1
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_file(&self) -> DiagramFile {
        DiagramFile {
            levels: self
                .labels
                .iter()
                .map(|l| LevelFile {
                    labels: l.iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
            matrices: self
                .matrices
                .iter()
                .map(MultiplicityMatrix::to_dense)
                .collect(),
            unital: Some(self.unital),
        }
    }

    pub fn from_file(file: &DiagramFile) -> Result<Self> {
        let labels = file
            .levels
            .iter()
            .map(|l| {
                l.labels
                    .iter()
                    .map(|s| {
                        s.parse::<BigUint>()
                            .map_err(|e| Error::Parse(format!("label {s:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let matrices = file
            .matrices
            .iter()
            .map(|m| MultiplicityMatrix::from_dense(m))
            .collect::<Result<Vec<_>>>()?;
        if file.unital.unwrap_or(false) {
            BratteliDiagram::unital_with_labels(labels, matrices)
        } else {
            BratteliDiagram::with_labels(labels, matrices)
        }
    }
}

/// JSON form `{levels:[{labels:[...]}], matrices:[[[...]]]}`; labels are
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub levels: Vec<LevelFile>,
    pub matrices: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unital: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelFile {
    #[serde(deserialize_with = "de_labels")]
    pub labels: Vec<String>,
}

fn de_labels<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<String>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Label {
        Num(u64),
        Str(String),
    }
    let raw: Vec<Label> = Vec::deserialize(d)?;
    Ok(raw
        .into_iter()
        .map(|l| match l {
            Label::Num(n) => n.to_string(),
            Label::Str(s) => s,
        })
        .collect())
}

/// Diagram of `label0` pushed through `matrices` (unital tower).
pub fn diagram_from_matrices(
    label0: &[u64],
    matrices: Vec<MultiplicityMatrix>,
) -> Result<BratteliDiagram> {
    if label0.is_empty() || label0.contains(&0) {
        return Err(Error::Domain("level-0 labels must be positive".into()));
    }
    BratteliDiagram::unital_tower(label0.iter().map(|&l| BigUint::from(l)).collect(), matrices)
}

/// The Farey diagram through level `depth`: the scalar vertex at level 0,
/// the doubling embedding into level 1, then `F_1, ..., F_{depth-1}`.
pub fn farey_diagram(depth: usize) -> Result<BratteliDiagram> {
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1".into()));
    }
    if depth > MAX_EXPLICIT_LEVEL {
        return Err(Error::SizeGuard(format!(
            "Farey diagram depth {depth} exceeds {MAX_EXPLICIT_LEVEL}"
        )));
    }
    let mut labels = vec![vec![BigUint::one()]];
    labels.extend(farey_levels(depth)?.into_iter().map(|l| l.q));
    let mut matrices = vec![MultiplicityMatrix::from_dense(&[vec![1], vec![1]])?];
    for n in 1..depth {
        matrices.push(farey_multiplicity_matrix(n)?);
    }
    BratteliDiagram::unital_with_labels(labels, matrices)
}

/// Effros-Shen diagram of `cf` through level `depth`: `A_0 = (a_1, 1)^T`,
/// `A_n = [[a_{n+1}, 1], [1, 0]]`, labels `(q_n, q_{n-1})`.
pub fn effros_shen_diagram(cf: &ContinuedFraction, depth: usize) -> Result<BratteliDiagram> {
    if depth == 0 {
        return Err(Error::Domain("depth must be at least 1".into()));
    }
    let terms = cf.terms_through(depth)?;
    let mut matrices = vec![MultiplicityMatrix::from_dense(&[vec![terms[1]], vec![1]])?];
    for n in 1..depth {
        matrices.push(MultiplicityMatrix::from_dense(&[
            vec![terms[n + 1], 1],
            vec![1, 0],
        ])?);
    }
    BratteliDiagram::unital_tower(vec![BigUint::one()], matrices)
}
