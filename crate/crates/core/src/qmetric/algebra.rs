use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

/// `⊕_i M(d_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMatrixAlgebra {
    block_sizes: Vec<usize>,
}

impl MultiMatrixAlgebra {
    pub fn new(block_sizes: Vec<usize>) -> Result<Self> {
        if block_sizes.is_empty() || block_sizes.contains(&0) {
            return Err(Error::Domain(
                "block sizes must be a nonempty list of positive integers".into(),
            ));
        }
        Ok(MultiMatrixAlgebra { block_sizes })
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    pub fn num_blocks(&self) -> usize {
        self.block_sizes.len()
    }

    /// `Σ d_i^2`.
    pub fn dimension(&self) -> usize {
        self.block_sizes.iter().map(|d| d * d).sum()
    }

    pub fn zero(&self) -> Element {
        Element {
            blocks: self
                .block_sizes
                .iter()
                .map(|&d| CMatrix::zeros(d, d))
                .collect(),
        }
    }

    pub fn scalar(&self, lambda: f64) -> Element {
        Element {
            blocks: self
                .block_sizes
                .iter()
                .map(|&d| CMatrix::identity(d, d) * Complex64::new(lambda, 0.0))
                .collect(),
        }
    }

    pub fn identity(&self) -> Element {
        self.scalar(1.0)
    }

    /// Self-adjoint element with entries drawn uniformly from `[-1, 1]`.
    pub fn random_self_adjoint<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        let blocks = self
            .block_sizes
            .iter()
            .map(|&d| {
                let m = CMatrix::from_fn(d, d, |_, _| {
                    Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
                });
                (&m + m.adjoint()) * Complex64::new(0.5, 0.0)
            })
            .collect();
        Element { blocks }
    }

    pub fn check(&self, a: &Element) -> Result<()> {
        if a.blocks.len() != self.block_sizes.len()
            || a.blocks
                .iter()
                .zip(&self.block_sizes)
                .any(|(b, &d)| b.nrows() != d || b.ncols() != d)
        {
            return Err(Error::Shape(format!(
                "element does not match block sizes {:?}",
                self.block_sizes
            )));
        }
        Ok(())
    }
}

/// A block-diagonal element, one square matrix per block.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub blocks: Vec<CMatrix>,
}

impl Element {
    pub fn new(blocks: Vec<CMatrix>) -> Self {
        Element { blocks }
    }

    /// Diagonal element with real entries, one list per block.
    pub fn diagonal(entries: &[Vec<f64>]) -> Self {
        Element {
            blocks: entries
                .iter()
                .map(|e| {
                    CMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                        e.len(),
                        e.iter().map(|&x| Complex64::new(x, 0.0)),
                    ))
                })
                .collect(),
        }
    }

    fn zip(&self, other: &Element, f: impl Fn(&CMatrix, &CMatrix) -> CMatrix) -> Element {
        Element {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, s: f64) -> Element {
        self.scale_complex(Complex64::new(s, 0.0))
    }

    pub fn scale_complex(&self, s: Complex64) -> Element {
        Element {
            blocks: self.blocks.iter().map(|b| b * s).collect(),
        }
    }

    pub fn adjoint(&self) -> Element {
        Element {
            blocks: self.blocks.iter().map(|b| b.adjoint()).collect(),
        }
    }

    /// `(ab + ba) / 2`.
    pub fn jordan(&self, other: &Element) -> Element {
        self.mul(other).add(&other.mul(self)).scale(0.5)
    }

    /// `(ab - ba) / 2i`.
    pub fn lie(&self, other: &Element) -> Element {
        self.mul(other)
            .sub(&other.mul(self))
            .scale_complex(Complex64::new(0.0, -0.5))
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        self.blocks
            .iter()
            .all(|b| (b - b.adjoint()).iter().all(|z| z.norm() <= tol))
    }

    /// Hermitian part, used to clean rounding noise before eigensolves.
    pub fn hermitian_part(&self) -> Element {
        Element {
            blocks: self.blocks.iter().map(hermitian).collect(),
        }
    }

    /// Operator norm of a self-adjoint element: the largest `|λ|` over all
    /// blocks.
    pub fn norm(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| block_norm(b).0)
            .fold(0.0, f64::max)
    }

    /// Norm together with the block, eigenvalue and unit eigenvector that
    /// attain it.
    pub fn norm_witness(&self) -> (f64, usize, f64, nalgebra::DVector<Complex64>) {
        let mut best = (f64::NEG_INFINITY, 0, 0.0, nalgebra::DVector::zeros(0));
        for (i, b) in self.blocks.iter().enumerate() {
            let (n, lambda, v) = block_norm(b);
            if n > best.0 {
                best = (n, i, lambda, v);
            }
        }
        best
    }

    /// Frobenius norm, used as a scale for tolerances.
    pub fn frobenius(&self) -> f64 {
        self.blocks
            .iter()
            .map(|b| b.norm_squared())
            .sum::<f64>()
            .sqrt()
    }
}

fn hermitian(b: &CMatrix) -> CMatrix {
    (b + b.adjoint()) * Complex64::new(0.5, 0.0)
}

fn block_norm(b: &CMatrix) -> (f64, f64, nalgebra::DVector<Complex64>) {
    let eig = SymmetricEigen::new(hermitian(b));
    let (k, lambda) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
        .expect("blocks are nonempty");
    (
        lambda.abs(),
        lambda,
        eig.eigenvectors.column(k).into_owned(),
    )
}

/// Smallest eigenvalue of the Hermitian part of `b`.
pub fn min_eigenvalue(b: &CMatrix) -> f64 {
    SymmetricEigen::new(hermitian(b))
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}
