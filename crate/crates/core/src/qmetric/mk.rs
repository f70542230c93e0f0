use nalgebra::DVector;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::algebra::{min_eigenvalue, CMatrix, Element, MultiMatrixAlgebra};
use super::chain::ChainSpace;
use crate::error::{Error, Result};

const STATE_TOL: f64 = 1e-9;

/// A state `φ(a) = Σ_i Re Tr(G_i a_i)` given by its block densities
/// `G_i = s_i ρ_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    densities: Vec<CMatrix>,
}

impl State {
    /// `φ = Σ_i s_i Tr(ρ_i ·)` with block weights `s_i` and unit-trace
    /// positive densities `ρ_i`. Missing densities default to `1/d_i`.
    pub fn new(
        alg: &MultiMatrixAlgebra,
        weights: &[f64],
        densities: Option<Vec<CMatrix>>,
    ) -> Result<Self> {
        let sizes = alg.block_sizes();
        if weights.len() != sizes.len() {
            return Err(Error::InvalidState(format!(
                "{} weights for {} blocks",
                weights.len(),
                sizes.len()
            )));
        }
        if let Some(i) = weights.iter().position(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(Error::InvalidState(format!("weight {i} is negative")));
        }
        if (weights.iter().sum::<f64>() - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState("weights must sum to 1".into()));
        }
        let rhos = match densities {
            Some(r) => r,
            None => sizes
                .iter()
                .map(|&d| CMatrix::identity(d, d) / Complex64::new(d as f64, 0.0))
                .collect(),
        };
        if rhos.len() != sizes.len() {
            return Err(Error::InvalidState(format!(
                "{} densities for {} blocks",
                rhos.len(),
                sizes.len()
            )));
        }
        let mut densities = Vec::with_capacity(sizes.len());
        for (i, (rho, &d)) in rhos.into_iter().zip(sizes).enumerate() {
            if rho.nrows() != d || rho.ncols() != d {
                return Err(Error::InvalidState(format!("density {i} is not {d}x{d}")));
            }
            if (&rho - rho.adjoint()).iter().any(|z| z.norm() > STATE_TOL) {
                return Err(Error::InvalidState(format!(
                    "density {i} is not self-adjoint"
                )));
            }
            if (rho.trace().re - 1.0).abs() > STATE_TOL || rho.trace().im.abs() > STATE_TOL {
                return Err(Error::InvalidState(format!(
                    "density {i} does not have trace 1"
                )));
            }
            if min_eigenvalue(&rho) < -STATE_TOL {
                return Err(Error::InvalidState(format!("density {i} is not positive")));
            }
            densities.push(rho * Complex64::new(weights[i], 0.0));
        }
        Ok(State { densities })
    }

    /// Vector state `⟨v, a_i v⟩` on block `i` for a unit vector `v`.
    pub fn vector(alg: &MultiMatrixAlgebra, block: usize, v: &[Complex64]) -> Result<Self> {
        let sizes = alg.block_sizes();
        if block >= sizes.len() || v.len() != sizes[block] {
            return Err(Error::InvalidState("vector does not fit the block".into()));
        }
        let v = DVector::from_column_slice(v);
        let norm = v.norm();
        if (norm - 1.0).abs() > STATE_TOL {
            return Err(Error::InvalidState("vector is not a unit vector".into()));
        }
        let mut weights = vec![0.0; sizes.len()];
        weights[block] = 1.0;
        let densities = sizes
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                if i == block {
                    &v * v.adjoint()
                } else {
                    CMatrix::identity(d, d) / Complex64::new(d as f64, 0.0)
                }
            })
            .collect();
        State::new(alg, &weights, Some(densities))
    }

    /// The trace itself.
    pub fn trace(chain: &ChainSpace) -> Self {
        let top = chain.top();
        State::new(top, chain.trace_weights(), None).expect("chain traces are states")
    }

    pub fn densities(&self) -> &[CMatrix] {
        &self.densities
    }

    pub fn eval(&self, a: &Element) -> f64 {
        self.densities
            .iter()
            .zip(&a.blocks)
            .map(|(g, x)| (g * x).trace().re)
            .sum()
    }

    /// `φ ∘ E_n`, which agrees with `φ` on the level-`n` subalgebra.
    pub fn compose_expectation(&self, chain: &ChainSpace, n: usize) -> Result<Self> {
        let h = self.as_element(chain);
        let eh = chain.conditional_expectation(&h, n)?;
        Ok(State::from_element(chain, &eh))
    }

    /// `h` with `φ(a) = ⟨a, h⟩_μ`.
    fn as_element(&self, chain: &ChainSpace) -> Element {
        Element::new(
            self.densities
                .iter()
                .enumerate()
                .map(|(i, g)| g / Complex64::new(chain.block_weight(i), 0.0))
                .collect(),
        )
    }

    fn from_element(chain: &ChainSpace, h: &Element) -> Self {
        State {
            densities: h
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| b * Complex64::new(chain.block_weight(i), 0.0))
                .collect(),
        }
    }
}

/// Budget and tolerances for [`mk_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MkConfig {
    pub iterations: usize,
    /// Initial step as a fraction of the starting point's size.
    pub step: f64,
    /// Iterations without improvement before a random restart; a final
    /// window without improvement is reported as `stalled`.
    pub window: usize,
    pub seed: u64,
    /// Below this the two states are treated as equal.
    pub tol: f64,
}

impl Default for MkConfig {
    fn default() -> Self {
        MkConfig {
            iterations: 20_000,
            step: 0.5,
            window: 2_000,
            seed: 0,
            tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MkResult {
    /// `(φ - ψ)(w) / L(w)` for the witness `w`: a certified lower bound.
    pub value: f64,
    /// Witness with `μ(w) = 0` and `(φ - ψ)(w) = 1`.
    pub witness: Element,
    pub witness_lip: f64,
    pub iterations: usize,
    pub stalled: bool,
    /// The feasible set is a single point or the states coincide, so the
    /// value is exact up to rounding.
    pub exact: bool,
}

/// Monge-Kantorovich distance `sup { |φ(a) - ψ(a)| : L(a) <= 1 }`.
///
/// Since both sides are invariant under adding scalars and homogeneous, the
/// supremum equals `1 / min { L(a) : μ(a) = 0, (φ - ψ)(a) = 1 }`. That
/// minimum is found by projected subgradient descent on the affine slice;
/// the best iterate is returned as a witness.
pub fn mk_distance(
    chain: &ChainSpace,
    phi: &State,
    psi: &State,
    cfg: &MkConfig,
) -> Result<MkResult> {
    let top = chain.top();
    if phi.densities.len() != top.num_blocks() || psi.densities.len() != top.num_blocks() {
        return Err(Error::InvalidState(
            "states do not match the top algebra".into(),
        ));
    }
    let one = top.identity();
    let g = phi.as_element(chain).sub(&psi.as_element(chain));
    let g = g.sub(&one.scale(chain.inner(&g, &one)));
    let gg = chain.inner(&g, &g);
    if gg.sqrt() <= cfg.tol {
        return Ok(MkResult {
            value: 0.0,
            witness: top.zero(),
            witness_lip: 0.0,
            iterations: 0,
            stalled: false,
            exact: true,
        });
    }
    // Puts a point back on the slice `μ(a) = 0, ⟨a, g⟩ = 1`.
    let snap = |a: Element| -> Element {
        let a = a.sub(&one.scale(chain.inner(&a, &one)));
        let drift = chain.inner(&a, &g) - 1.0;
        a.sub(&g.scale(drift / gg))
    };
    let project = |h: &Element| -> Element {
        let h = h.hermitian_part();
        let h = h.sub(&one.scale(chain.inner(&h, &one)));
        h.sub(&g.scale(chain.inner(&h, &g) / gg))
    };

    let start = g.scale(1.0 / gg);
    let scale = chain.inner(&start, &start).sqrt();
    let mut a = start.clone();
    let mut best = (chain.lip_norm(&a)?, a.clone());
    let tangent_dim = top.dimension().saturating_sub(2);
    if tangent_dim == 0 {
        return finish(phi, psi, best, 0, false, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut since_improvement = 0;
    let mut iterations = 0;
    for k in 0..cfg.iterations {
        iterations = k + 1;
        let raw = subgradient(chain, &a)?;
        let h = project(&raw);
        let hn = chain.inner(&h, &h).sqrt();
        // A subgradient normal to the slice certifies a minimum.
        if hn <= 1e-10 * chain.inner(&raw, &raw).sqrt() {
            break;
        }
        let eta = cfg.step * scale / ((k + 1) as f64).sqrt();
        a = snap(a.sub(&h.scale(eta / hn)));
        let l = chain.lip_norm(&a)?;
        if l < best.0 * (1.0 - 1e-12) {
            best = (l, a.clone());
            since_improvement = 0;
        } else {
            since_improvement += 1;
        }
        if since_improvement >= cfg.window && k + 1 < cfg.iterations {
            let r = project(&top.random_self_adjoint(&mut rng));
            let rn = chain.inner(&r, &r).sqrt().max(1e-300);
            a = snap(best.1.add(&r.scale(eta * rng.gen_range(0.1..1.0) / rn)));
            since_improvement = 0;
        }
    }
    let stalled = since_improvement >= cfg.window;
    finish(phi, psi, best, iterations, stalled, false)
}

fn finish(
    phi: &State,
    psi: &State,
    best: (f64, Element),
    iterations: usize,
    stalled: bool,
    exact: bool,
) -> Result<MkResult> {
    let (lip, witness) = best;
    if lip <= 0.0 {
        return Err(Error::Domain("witness has zero Lip-norm".into()));
    }
    // Measured rather than assumed, so rounding can only lower the bound.
    let gap = (phi.eval(&witness) - psi.eval(&witness)).abs();
    Ok(MkResult {
        value: gap / lip,
        witness,
        witness_lip: lip,
        iterations,
        stalled,
        exact,
    })
}

/// A subgradient of `L` at `a` in the `μ` inner product.
fn subgradient(chain: &ChainSpace, a: &Element) -> Result<Element> {
    let mut active = (f64::NEG_INFINITY, 0, chain.top().zero());
    for n in 0..=chain.depth() {
        let x = a.sub(&chain.conditional_expectation(a, n)?);
        let v = x.norm() / chain.beta()[n];
        if v > active.0 {
            active = (v, n, x);
        }
    }
    let (_, n, x) = active;
    let (_, block, lambda, v) = x.norm_witness();
    let mut s = chain.top().zero();
    let w = chain.block_weight(block);
    s.blocks[block] = (&v * v.adjoint()) * Complex64::new(lambda.signum() / w, 0.0);
    let s = s.sub(&chain.conditional_expectation(&s, n)?);
    Ok(s.scale(1.0 / chain.beta()[n]))
}
