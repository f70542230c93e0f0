//! Rows of the Farey tessellation and the partial multiplicity matrices of
//! the Farey (Boca-Mundici) inductive system.
//!
//! Level `n >= 1` has `2^(n-1) + 1` entries indexed from 0. Each level is
//! obtained from the previous one by keeping the old entries at even
//! indices and inserting mediants at odd indices.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::MultiplicityMatrix;

/// Largest level materialised as explicit arrays.
pub const MAX_EXPLICIT_LEVEL: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FareyLevel {
    pub n: usize,
    #[serde(serialize_with = "crate::format::ser_biguint_vec")]
    pub q: Vec<BigUint>,
    #[serde(serialize_with = "crate::format::ser_biguint_vec")]
    pub p: Vec<BigUint>,
}

impl FareyLevel {
    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// `r(n, k) = p(n, k) / q(n, k)`.
    pub fn r(&self, k: usize) -> BigRational {
        BigRational::new(
            BigInt::from(self.p[k].clone()),
            BigInt::from(self.q[k].clone()),
        )
    }

    fn first() -> Self {
        FareyLevel {
            n: 1,
            q: vec![BigUint::one(), BigUint::one()],
            p: vec![BigUint::zero(), BigUint::one()],
        }
    }

    /// The next level via the mediant recursion.
    pub fn next(&self) -> FareyLevel {
        let len = 2 * self.len() - 1;
        let mut q = Vec::with_capacity(len);
        let mut p = Vec::with_capacity(len);
        for k in 0..self.len() {
            q.push(self.q[k].clone());
            p.push(self.p[k].clone());
            if k + 1 < self.len() {
                q.push(&self.q[k] + &self.q[k + 1]);
                p.push(&self.p[k] + &self.p[k + 1]);
            }
        }
        FareyLevel {
            n: self.n + 1,
            q,
            p,
        }
    }
}

fn check_level(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain(
            "level 0 is the scalar algebra and has no Farey row".into(),
        ));
    }
    if n > MAX_EXPLICIT_LEVEL {
        return Err(Error::SizeGuard(format!(
            "level {n} has 2^{} + 1 entries; limit is level {MAX_EXPLICIT_LEVEL}",
            n - 1
        )));
    }
    Ok(())
}

pub fn farey_level(n: usize) -> Result<FareyLevel> {
    check_level(n)?;
    let mut level = FareyLevel::first();
    while level.n < n {
        level = level.next();
    }
    Ok(level)
}

/// Levels `1..=n`.
pub fn farey_levels(n: usize) -> Result<Vec<FareyLevel>> {
    check_level(n)?;
    let mut out = vec![FareyLevel::first()];
    while out.len() < n {
        let next = out.last().expect("nonempty").next();
        out.push(next);
    }
    Ok(out)
}

/// `F_n`, the `(2^n + 1) x (2^(n-1) + 1)` matrix whose 1-based entry
/// `(h, j)` is 1 iff `h = 2k+1, j = k+1` or `h = 2k, j in {k, k+1}`.
pub fn farey_multiplicity_matrix(n: usize) -> Result<MultiplicityMatrix> {
    check_level(n)?;
    let cols = (1usize << (n - 1)) + 1;
    let rows = (1usize << n) + 1;
    let mut triples = Vec::with_capacity(2 * rows);
    for k in 0..cols {
        // h = 2k + 1 (1-based) -> 0-based row 2k, column k
        triples.push((2 * k, k, 1));
    }
    for k in 1..cols {
        // h = 2k (1-based) -> 0-based row 2k - 1, columns k - 1 and k
        triples.push((2 * k - 1, k - 1, 1));
        triples.push((2 * k - 1, k, 1));
    }
    MultiplicityMatrix::from_triples(rows, cols, triples)
}

/// Whether `F_n · q(n) = q(n+1)` entrywise.
pub fn check_unital_embedding(n: usize) -> Result<bool> {
    check_level(n + 1)?;
    let level = farey_level(n)?;
    let next = level.next();
    Ok(farey_multiplicity_matrix(n)?.apply(&level.q)? == next.q)
}
