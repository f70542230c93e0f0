//! Sparse partial multiplicity matrices.
//!
//! Rows index the vertices of the target level and columns those of the
//! source level, so `M · labels(n) = labels(n+1)` for a unital embedding.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityMatrix {
    rows: usize,
    cols: usize,
    /// Nonzero entries of each row, sorted by column.
    entries: Vec<Vec<(usize, u64)>>,
}

impl MultiplicityMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MultiplicityMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        MultiplicityMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| vec![(i, 1)]).collect(),
        }
    }

    pub fn from_dense(dense: &[Vec<u64>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(
                "matrix must have at least one row and column".into(),
            ));
        }
        let mut m = MultiplicityMatrix::zeros(rows, cols);
        for (r, row) in dense.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            m.entries[r] = row
                .iter()
                .copied()
                .enumerate()
                .filter(|&(_, v)| v != 0)
                .collect();
        }
        Ok(m)
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples(
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self> {
        let mut m = MultiplicityMatrix::zeros(rows, cols);
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::Shape(format!(
                    "entry ({r},{c}) outside {rows}x{cols}"
                )));
            }
            if v == 0 {
                continue;
            }
            let row = &mut m.entries[r];
            match row.binary_search_by_key(&c, |&(col, _)| col) {
                Ok(i) => row[i].1 = row[i].1.checked_add(v).ok_or(Error::Overflow)?,
                Err(i) => row.insert(i, (c, v)),
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r]
            .binary_search_by_key(&c, |&(col, _)| col)
            .map_or(0, |i| self.entries[r][i].1)
    }

    /// Nonzero `(col, multiplicity)` pairs of row `r`.
    pub fn row(&self, r: usize) -> &[(usize, u64)] {
        &self.entries[r]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// Nonzero `(row, multiplicity)` pairs per column.
    pub fn columns(&self) -> Vec<Vec<(usize, u64)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                cols[c].push((r, v));
            }
        }
        cols
    }

    pub fn first_zero_row(&self) -> Option<usize> {
        self.entries.iter().position(Vec::is_empty)
    }

    pub fn first_zero_col(&self) -> Option<usize> {
        let mut seen = vec![false; self.cols];
        for row in &self.entries {
            for &(c, _) in row {
                seen[c] = true;
            }
        }
        seen.iter().position(|s| !s)
    }

    pub fn to_dense(&self) -> Vec<Vec<u64>> {
        self.entries
            .iter()
            .map(|row| {
                let mut d = vec![0; self.cols];
                for &(c, v) in row {
                    d[c] = v;
                }
                d
            })
            .collect()
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &MultiplicityMatrix) -> Result<MultiplicityMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = MultiplicityMatrix::zeros(self.rows, rhs.cols);
        let mut acc: Vec<u64> = vec![0; rhs.cols];
        let mut touched = Vec::new();
        for (r, row) in self.entries.iter().enumerate() {
            for &(k, a) in row {
                for &(c, b) in &rhs.entries[k] {
                    let prod = a.checked_mul(b).ok_or(Error::Overflow)?;
                    if acc[c] == 0 {
                        touched.push(c);
                    }
                    acc[c] = acc[c].checked_add(prod).ok_or(Error::Overflow)?;
                }
            }
            touched.sort_unstable();
            out.entries[r] = touched.iter().map(|&c| (c, acc[c])).collect();
            for &c in &touched {
                acc[c] = 0;
            }
            touched.clear();
        }
        Ok(out)
    }

    /// `self · v` over big integers.
    pub fn apply(&self, v: &[BigUint]) -> Result<Vec<BigUint>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .fold(BigUint::zero(), |acc, &(c, m)| acc + &v[c] * m)
            })
            .collect())
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> MultiplicityMatrix {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (i, &c) in cols.iter().enumerate() {
            col_pos[c] = i;
        }
        let entries = rows
            .iter()
            .map(|&r| {
                let mut row: Vec<(usize, u64)> = self.entries[r]
                    .iter()
                    .filter(|&&(c, _)| col_pos[c] != usize::MAX)
                    .map(|&(c, v)| (col_pos[c], v))
                    .collect();
                row.sort_unstable();
                row
            })
            .collect();
        MultiplicityMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }
}

impl fmt::Display for MultiplicityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
