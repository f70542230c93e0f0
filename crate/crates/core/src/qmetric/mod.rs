//! Finite-dimensional quantum compact metric spaces in floating point.
//!
//! A [`ChainSpace`] is a tower of multi-matrix algebras with a faithful
//! tracial state on the top level. The Lip-norm is
//! `L(a) = max_n ‖a - E_n(a)‖ / β(n)` with `E_n` the trace-preserving
//! conditional expectation onto level `n`.

mod algebra;
mod chain;
mod mk;

pub use algebra::{min_eigenvalue, CMatrix, Element, MultiMatrixAlgebra};
pub use chain::{ChainFile, ChainSpace, Number, Placement};
pub use mk::{mk_distance, MkConfig, MkResult, State};

use serde::Serialize;

use crate::error::Result;

/// Absolute slack allowed by [`quasi_leibniz`].
pub const LEIBNIZ_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LeibnizOutcome {
    /// `max(L(a∘b), L({a,b}))`.
    pub lhs: f64,
    /// `2(‖a‖L(b) + ‖b‖L(a))`.
    pub rhs: f64,
    pub holds: bool,
}

/// The `(2, 0)` quasi-Leibniz inequality for any seminorm `lip`.
pub fn quasi_leibniz<F>(a: &Element, b: &Element, lip: F) -> Result<LeibnizOutcome>
where
    F: Fn(&Element) -> Result<f64>,
{
    let lhs = f64::max(lip(&a.jordan(b))?, lip(&a.lie(b))?);
    let rhs = 2.0 * (a.norm() * lip(b)? + b.norm() * lip(a)?);
    Ok(LeibnizOutcome {
        lhs,
        rhs,
        holds: lhs <= rhs + LEIBNIZ_TOL,
    })
}

impl ChainSpace {
    pub fn quasi_leibniz_check(&self, a: &Element, b: &Element) -> Result<LeibnizOutcome> {
        quasi_leibniz(a, b, |x| self.lip_norm(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::MultiplicityMatrix;

    #[test]
    fn identity_pair_and_fabricated_seminorm() {
        let c = ChainSpace::new(
            vec![
                MultiMatrixAlgebra::new(vec![1]).unwrap(),
                MultiMatrixAlgebra::new(vec![1, 1]).unwrap(),
            ],
            vec![MultiplicityMatrix::from_dense(&[vec![1], vec![1]]).unwrap()],
            vec![0.5, 0.5],
            vec![1.0, 1.0],
        )
        .unwrap();
        let one = c.top().identity();
        let r = c.quasi_leibniz_check(&one, &one).unwrap();
        assert!(r.holds && r.lhs == 0.0);
        let a = Element::diagonal(&[vec![10.0], vec![0.0]]);
        assert!(c.quasi_leibniz_check(&a, &a).unwrap().holds);
        let squared = |x: &Element| -> Result<f64> {
            let d = x.sub(&c.conditional_expectation(x, 0)?).norm();
            Ok(d * d)
        };
        assert!(!quasi_leibniz(&a, &a, squared).unwrap().holds);
    }
}
