//! Criteria 1 to 9. Each returns a one-line summary on success and the first
//! failure otherwise.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use farey_ideals::qmetric::{
    mk_distance, CMatrix, ChainSpace, MkConfig, MultiMatrixAlgebra, State,
};
use farey_ideals::theta::trace_coefficient;
use farey_ideals::{
    baire_distance, check_unital_embedding, detect_fusing, diagram_from_matrices,
    effros_shen_diagram, effros_shen_identification, enumerate_coherent_ideals, farey_diagram,
    farey_level, farey_multiplicity_matrix, ideal_metric, BratteliDiagram, ContinuedFraction,
    MultiplicityMatrix, SwapRule, ThetaIdeal,
};
use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::{self, Terms};
use crate::sample;

pub type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: farey_ideals::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn dyadic(m: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << m)
}

fn parse(s: &str) -> Result<ContinuedFraction, String> {
    s.parse().map_err(|e: farey_ideals::Error| e.to_string())
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + criterion)
}

pub const REMARK_BUDGET: Duration = Duration::from_secs(10);

/// 1. Explicit ideal metric values at depth 1001.
pub fn remark() -> Check {
    let start = Instant::now();
    let depth = 1001;
    let (tt, t) = sample::build(vec![0, 1000], vec![1]);
    let (mt, m) = sample::build(vec![0], vec![1]);
    let (m2t, m2) = sample::build(vec![0, 999], vec![1]);
    for other in [&m, &m2] {
        let b = lib(baire_distance(&t, other, depth))?;
        ensure(b.to_rational() == Some(rat(1, 2)), || {
            format!("baire distance to {other} is {b:?}, want 1/2")
        })?;
    }
    let ti = lib(ThetaIdeal::new(&t, depth))?;
    let mi = lib(ThetaIdeal::new(&m, depth))?;
    let m2i = lib(ThetaIdeal::new(&m2, depth))?;
    let d1 = lib(ideal_metric(&ti, &mi, depth))?;
    let d2 = lib(ideal_metric(&ti, &m2i, depth))?;
    let o1 = oracle::first_disagreement_level(&tt, &mt, depth);
    let o2 = oracle::first_disagreement_level(&tt, &m2t, depth);
    ensure(o1 == Some(2) && o2 == Some(1000), || {
        format!("oracle levels {o1:?}, {o2:?}")
    })?;
    ensure(d1.to_rational() == Some(rat(1, 4)), || {
        format!("d(θ, μ) = {d1:?}, want 1/4")
    })?;
    ensure(d2.to_rational() == Some(dyadic(1000)), || {
        format!("d(θ, μ') = {d2:?}, want 2^-1000")
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < REMARK_BUDGET, || {
        format!("took {elapsed:?}, budget {REMARK_BUDGET:?}")
    })?;
    Ok(format!(
        "baire 1/2, 1/2; ideal metric 2^-2, 2^-1000 exact; {:.2} s",
        elapsed.as_secs_f64()
    ))
}

/// 2. Unital Farey embeddings and neighbour determinants for `n <= 12`.
pub fn farey_unital() -> Check {
    let max = 12;
    let oracle_levels: Vec<Vec<(u64, u64)>> = (1..=max as u64 + 1)
        .map(oracle::farey_level_by_birth)
        .collect();
    let mut pairs = 0usize;
    for n in 1..=max {
        let level = lib(farey_level(n))?;
        let want = &oracle_levels[n - 1];
        let got: Vec<(BigUint, BigUint)> = level
            .p
            .iter()
            .cloned()
            .zip(level.q.iter().cloned())
            .collect();
        let want_big: Vec<(BigUint, BigUint)> =
            want.iter().map(|&(p, q)| (p.into(), q.into())).collect();
        ensure(got == want_big, || {
            format!("level {n} differs from the brute-force Farey row")
        })?;
        // F_n q(n) computed entry by entry against the next oracle row.
        let f = lib(farey_multiplicity_matrix(n))?;
        let next = &oracle_levels[n];
        ensure(f.rows() == next.len(), || {
            format!("F_{n} has {} rows, want {}", f.rows(), next.len())
        })?;
        for (i, &(_, q)) in next.iter().enumerate() {
            let s: u64 = f.row(i).iter().map(|&(j, m)| m * want[j].1).sum();
            ensure(s == q, || format!("(F_{n} q({n}))[{i}] = {s}, want {q}"))?;
        }
        ensure(lib(check_unital_embedding(n))?, || {
            format!("library rejects the embedding at n = {n}")
        })?;
        for k in 0..level.len() - 1 {
            let det = BigInt::from(level.p[k + 1].clone() * &level.q[k])
                - BigInt::from(level.p[k].clone() * &level.q[k + 1]);
            ensure(det.is_one(), || {
                format!("determinant {det} at n = {n}, k = {k}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!(
        "F_n q(n) = q(n+1) for n = 1..12; {pairs} neighbour determinants equal 1"
    ))
}

/// 3. Doubling law, denominator growth and `β(n) <= 1/n^2`.
pub fn doubling() -> Check {
    let mut r = rng(3);
    let depth = 41;
    for s in 0..50 {
        let (terms, cf) = sample::theta(&mut r, 10);
        let ideal = lib(ThetaIdeal::new(&cf, depth))?;
        let j_oracle = oracle::j_from_path(&terms, depth);
        ensure(ideal.j_sequence() == j_oracle.as_slice(), || {
            format!("sample {s} ({cf}): j differs from the path oracle")
        })?;
        let brackets = oracle::brackets_from_path(&terms, depth);
        for n in 1..=40 {
            let (j, j1) = (&j_oracle[n - 1], &j_oracle[n]);
            let twice = j << 1u32;
            ensure(*j1 == twice || *j1 == &twice + 1u32, || {
                format!("sample {s}: j_{} = {j1} from j_{n} = {j}", n + 1)
            })?;
            let b = lib(ideal.bracket(n))?;
            let [lp, lq, rp, rq] = &brackets[n - 1];
            ensure(
                (&b.left_p, &b.left_q, &b.right_p, &b.right_q) == (lp, lq, rp, rq),
                || format!("sample {s}: bracket at level {n} differs"),
            )?;
            let nn = BigUint::from(n);
            ensure(*lq >= nn || *rq >= nn, || {
                format!("sample {s}: denominators {lq}, {rq} below {n}")
            })?;
            let beta = lib(ideal.beta(n))?;
            let want = oracle::ratio(&BigUint::one(), &(lq * lq + rq * rq));
            ensure(beta == want, || {
                format!("sample {s}: β({n}) = {beta}, want {want}")
            })?;
            ensure(beta <= rat(1, (n * n) as i64), || {
                format!("sample {s}: β({n}) = {beta} > 1/{}", n * n)
            })?;
        }
    }
    Ok("50 sampled θ (terms ≤ 10), n ≤ 40".into())
}

/// 4. Level-1 trace seed and the chain below `a_1`.
pub fn trace_seed() -> Check {
    let mut r = rng(4);
    let mut samples: Vec<(Terms, ContinuedFraction)> =
        (0..40).map(|_| sample::theta(&mut r, 10)).collect();
    for a1 in 2..=11 {
        samples.push(sample::build(
            vec![0, a1, r.gen_range(1..=5)],
            vec![1, r.gen_range(1..=5)],
        ));
    }
    let mut chains = 0;
    for (terms, cf) in &samples {
        let c1 = lib(trace_coefficient(cf, 1))?;
        ensure(c1.a == rat(-1, 1) && c1.b.is_one(), || {
            format!("{cf}: c(1) = {c1}, want -θ + 1")
        })?;
        let a1 = terms.get(1);
        if a1 < 2 {
            continue;
        }
        chains += 1;
        for m in 1..=a1 {
            let c = lib(trace_coefficient(cf, m as usize))?;
            // m(1 - θ) - (m - 1) expanded as coefficient of θ and constant
            let m_r = BigRational::from_integer(m.into());
            let (want_a, want_b) = (-m_r.clone(), m_r.clone() - (m_r - BigRational::one()));
            ensure(c.a == want_a && c.b == want_b, || {
                format!("{cf}: c({m}) = {c}")
            })?;
        }
        let last = lib(trace_coefficient(cf, a1 as usize))?;
        ensure(
            last.a == BigRational::from_integer(-BigInt::from(a1)) && last.b.is_one(),
            || format!("{cf}: c(a_1) = {last}, want 1 - {a1}θ"),
        )?;
    }
    Ok(format!(
        "c(1) = -θ + 1 on {} θ; chain identities on {chains} θ with a_1 ≥ 2",
        samples.len()
    ))
}

/// Changes term `k + 1` and continues with period `(1, 2)`.
fn perturb(t: &Terms, k: usize) -> Terms {
    let mut prefix: Vec<u64> = (0..=k).map(|i| t.get(i)).collect();
    let next = t.get(k + 1);
    prefix.push(if next == 1 { 2 } else { next - 1 });
    Terms {
        prefix,
        period: vec![1, 2],
    }
}

/// 5. Fusing sequences agree with the metric bound.
pub fn fusing() -> Check {
    let mut r = rng(5);
    let depth = 12;
    let family_size = 20;
    let mut limits = vec![sample::build(vec![0], vec![1])];
    limits.extend((0..4).map(|_| sample::theta(&mut r, 3)));
    for (lt, lcf) in &limits {
        let limit = lib(ThetaIdeal::new(lcf, depth))?;
        // the golden family is "0;1,...,1,2,(1)": k ones then a 2
        let golden = lt.prefix == [0] && lt.period == [1];
        let members: Vec<Terms> = (1..=family_size)
            .map(|k| {
                if golden {
                    Terms {
                        prefix: [vec![0], vec![1; k], vec![2]].concat(),
                        period: vec![1],
                    }
                } else {
                    perturb(lt, k)
                }
            })
            .collect();
        let family = members
            .iter()
            .map(|t| {
                lib(ContinuedFraction::periodic(
                    t.prefix.clone(),
                    t.period.clone(),
                ))
                .and_then(|c| lib(ThetaIdeal::new(&c, depth)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let report = lib(detect_fusing(&family, &limit, depth))?;
        ensure(report.is_fused(), || {
            format!("{lcf}: fusing fails at level {:?}", report.failed_at)
        })?;

        let first: Vec<Option<usize>> = members
            .iter()
            .map(|m| oracle::first_disagreement_level(m, lt, depth))
            .collect();
        for n in 0..=depth {
            let agrees = |k: usize| first[k].is_none_or(|m| m > n);
            let c = (0..=family_size)
                .find(|&c| (c..family_size).all(agrees))
                .expect("c = K is vacuous");
            ensure(c < family_size, || {
                format!("{lcf}: oracle finds no member agreeing through level {n}")
            })?;
            ensure(report.sequence[n] == c, || {
                format!("{lcf}: c_{n} = {}, oracle {c}", report.sequence[n])
            })?;
            let bound = dyadic(n + 1);
            for (k, member) in family.iter().enumerate() {
                let d = lib(ideal_metric(member, &limit, depth))?.upper_bound();
                if k >= c {
                    ensure(d <= bound, || {
                        format!("{lcf}: member {k} at distance {d} > 2^-{}", n + 1)
                    })?;
                } else if k + 1 == c {
                    ensure(d > bound, || format!("{lcf}: c_{n} = {c} is not minimal"))?;
                }
            }
        }
    }
    Ok(format!(
        "{} limits, families of {family_size}, N ≤ {depth}",
        limits.len()
    ))
}

/// Effros-Shen labels and matrices built directly from the terms.
fn effros_shen_by_hand(t: &Terms, j: usize) -> (Vec<Vec<u64>>, Vec<Vec<Vec<u64>>>) {
    let mut labels = vec![vec![1], vec![t.get(1), 1]];
    let mut matrices = vec![vec![vec![t.get(1)], vec![1]]];
    for n in 1..j {
        let a = t.get(n + 1);
        let m = vec![vec![a, 1], vec![1, 0]];
        let prev = labels.last().unwrap();
        labels.push(vec![a * prev[0] + prev[1], prev[0]]);
        matrices.push(m);
    }
    (labels, matrices)
}

/// 6. Telescoped quotient equals the Effros-Shen diagram after the swap.
pub fn effros_shen() -> Check {
    let mut r = rng(6);
    let j = 4;
    for s in 0..10 {
        let (terms, cf) = sample::theta(&mut r, 4);
        let (labels, matrices) = effros_shen_by_hand(&terms, j);
        let es = lib(effros_shen_diagram(&cf, j))?;
        for (n, want) in labels.iter().enumerate() {
            let got: Vec<BigUint> = want.iter().map(|&x| x.into()).collect();
            ensure(es.labels(n) == got.as_slice(), || {
                format!("sample {s}: Effros-Shen labels at level {n}")
            })?;
        }
        for (n, want) in matrices.iter().enumerate() {
            ensure(es.matrix(n).to_dense() == *want, || {
                format!("sample {s}: Effros-Shen matrix {n}")
            })?;
        }
        let report = lib(effros_shen_identification(&cf, j, SwapRule::Alternating))?;
        ensure(report.matches, || {
            format!(
                "sample {s} ({cf}): mismatch at telescope level {:?}",
                report.first_mismatch
            )
        })?;
        // The two surviving blocks at level x_t have the bracket denominators.
        let brackets = oracle::brackets_from_path(&terms, *report.levels.last().unwrap());
        for (t, &x) in report.levels.iter().enumerate().skip(1) {
            let [_, lq, _, rq] = &brackets[x - 1];
            let mut got = [lq.clone(), rq.clone()];
            let mut want = [BigUint::from(labels[t][0]), BigUint::from(labels[t][1])];
            got.sort();
            want.sort();
            ensure(got == want, || {
                format!("sample {s}: quotient blocks at level {x} are {got:?}, want {want:?}")
            })?;
        }
    }
    Ok(format!("10 sampled θ (terms ≤ 4), J = {j}"))
}

/// 7. Certified Farey brackets with shrinking gaps.
pub fn r_approach() -> Check {
    let mut r = rng(7);
    let depth = 30;
    let limit = rat(1, 10_000);
    let mut worst = BigRational::zero();
    for s in 0..50 {
        let (terms, cf) = sample::theta(&mut r, 10);
        let brackets = lib(farey_ideals::theta::r_approach(&cf, depth))?;
        ensure(brackets.len() == depth, || {
            format!("sample {s}: {} brackets", brackets.len())
        })?;
        let oracle_brackets = oracle::brackets_from_path(&terms, depth);
        let mut prev_gap: Option<BigRational> = None;
        for (i, (lo, gap)) in brackets.iter().enumerate() {
            let [lp, lq, rp, rq] = &oracle_brackets[i];
            let hi = oracle::ratio(rp, rq);
            ensure(*lo == oracle::ratio(lp, lq) && *gap == &hi - lo, || {
                format!("sample {s}: bracket at level {} differs", i + 1)
            })?;
            ensure(
                oracle::compare_theta(&terms, lp, lq) == Ordering::Greater
                    && oracle::compare_theta(&terms, rp, rq) == Ordering::Less,
                || {
                    format!(
                        "sample {s} ({cf}): θ not strictly inside [{lo}, {hi}] at level {}",
                        i + 1
                    )
                },
            )?;
            let gap = gap.clone();
            if let Some(p) = &prev_gap {
                ensure(gap <= *p, || {
                    format!("sample {s}: gap grows at level {}", i + 1)
                })?;
            }
            prev_gap = Some(gap);
        }
        let last = prev_gap.expect("depth >= 1");
        ensure(last < limit, || {
            format!("sample {s} ({cf}): gap(30) = {last}")
        })?;
        if last > worst {
            worst = last;
        }
    }
    Ok(format!(
        "50 sampled θ (terms ≤ 10), n ≤ {depth}; largest gap(30) = {worst}"
    ))
}

fn sets(v: &[&[usize]]) -> Vec<BTreeSet<usize>> {
    v.iter().map(|s| s.iter().copied().collect()).collect()
}

/// 8. Coherent ideals against hand and brute-force enumerations.
pub fn coherent_ideals() -> Check {
    let toy_m = [vec![vec![1u64], vec![1]]];
    let toy = Arc::new(lib(diagram_from_matrices(
        &[1],
        vec![lib(MultiplicityMatrix::from_dense(&toy_m[0]))?],
    ))?);
    let got: BTreeSet<Vec<BTreeSet<usize>>> = lib(enumerate_coherent_ideals(&toy, 1))?
        .iter()
        .map(|i| i.levels().to_vec())
        .collect();
    let hand: BTreeSet<Vec<BTreeSet<usize>>> = [
        sets(&[&[], &[]]),
        sets(&[&[], &[0]]),
        sets(&[&[], &[1]]),
        sets(&[&[0], &[0, 1]]),
    ]
    .into_iter()
    .collect();
    ensure(got == hand, || format!("toy ideals {got:?}"))?;

    let farey_m = vec![
        vec![vec![1u64], vec![1]],
        vec![vec![1, 0], vec![1, 1], vec![0, 1]],
    ];
    let farey: Arc<BratteliDiagram> = Arc::new(lib(farey_diagram(2))?);
    for (n, m) in farey_m.iter().enumerate() {
        ensure(farey.matrix(n).to_dense() == *m, || {
            format!("Farey matrix {n} differs from F_{n}")
        })?;
    }
    let list = lib(enumerate_coherent_ideals(&farey, 2))?;
    let got: BTreeSet<Vec<BTreeSet<usize>>> = list.iter().map(|i| i.levels().to_vec()).collect();
    ensure(got.len() == list.len(), || "duplicate ideals".into())?;
    let brute = oracle::brute_force_ideals(&[1, 2, 3], &farey_m);
    ensure(got == brute, || {
        format!(
            "Farey depth 2: {} ideals, brute force {}",
            got.len(),
            brute.len()
        )
    })?;
    Ok(format!(
        "toy: 4 ideals as enumerated by hand; Farey depth 2: {} ideals = brute force",
        brute.len()
    ))
}

fn alg(sizes: &[usize]) -> Result<MultiMatrixAlgebra, String> {
    lib(MultiMatrixAlgebra::new(sizes.to_vec()))
}

fn dense(m: &[Vec<u64>]) -> Result<MultiplicityMatrix, String> {
    lib(MultiplicityMatrix::from_dense(m))
}

/// `β(n) = 1 / dim A_n`.
fn inverse_dimensions(levels: &[MultiMatrixAlgebra]) -> Vec<f64> {
    levels.iter().map(|a| 1.0 / a.dimension() as f64).collect()
}

fn chain(
    blocks: &[&[usize]],
    matrices: &[Vec<Vec<u64>>],
    trace: Vec<f64>,
) -> Result<(String, ChainSpace), String> {
    let levels = blocks
        .iter()
        .map(|b| alg(b))
        .collect::<Result<Vec<_>, _>>()?;
    let beta = inverse_dimensions(&levels);
    let ms = matrices
        .iter()
        .map(|m| dense(m))
        .collect::<Result<Vec<_>, _>>()?;
    let name = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|&d| {
                    if d == 1 {
                        "C".to_string()
                    } else {
                        format!("M{d}")
                    }
                })
                .collect::<Vec<_>>()
                .join("⊕")
        })
        .collect::<Vec<_>>()
        .join(" ⊂ ");
    Ok((name, lib(ChainSpace::new(levels, ms, trace, beta))?))
}

/// The five test chains, top dimensions 2, 5, 13, 6 and 5.
pub fn test_chains() -> Result<Vec<(String, ChainSpace)>, String> {
    let golden: ContinuedFraction = parse("0;(1)")?;
    let es = lib(effros_shen_diagram(&golden, 3))?;
    let es_blocks: Vec<Vec<usize>> = es
        .all_labels()
        .iter()
        .map(|l| {
            l.iter()
                .map(|x| usize::try_from(x).expect("small"))
                .collect()
        })
        .collect();
    let es_refs: Vec<&[usize]> = es_blocks.iter().map(Vec::as_slice).collect();
    let es_m: Vec<Vec<Vec<u64>>> = es
        .matrices()
        .iter()
        .map(MultiplicityMatrix::to_dense)
        .collect();
    Ok(vec![
        chain(&[&[1], &[1, 1]], &[vec![vec![1], vec![1]]], vec![0.5, 0.5])?,
        chain(
            &[&[1], &[1, 1], &[2, 1]],
            &[vec![vec![1], vec![1]], vec![vec![1, 1], vec![1, 0]]],
            vec![0.6, 0.4],
        )?,
        chain(&es_refs, &es_m, vec![9.0 / 13.0, 4.0 / 13.0])?,
        chain(
            &[&[1], &[1, 1], &[1, 2, 1]],
            &[
                vec![vec![1], vec![1]],
                vec![vec![1, 0], vec![1, 1], vec![0, 1]],
            ],
            vec![0.25, 0.5, 0.25],
        )?,
        chain(
            &[&[1], &[2, 1]],
            &[vec![vec![2], vec![1]]],
            vec![2.0 / 3.0, 1.0 / 3.0],
        )?,
    ])
}

/// A random faithful state: weights and densities `X X* / Tr`.
fn random_state<R: Rng>(c: &ChainSpace, rng: &mut R) -> Result<State, String> {
    let sizes = c.top().block_sizes();
    let raw: Vec<f64> = sizes.iter().map(|_| rng.gen_range(0.1..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let weights: Vec<f64> = raw.iter().map(|w| w / total).collect();
    let densities = sizes
        .iter()
        .map(|&d| {
            let x = CMatrix::from_fn(d, d, |_, _| {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            });
            let p = &x * x.adjoint();
            let tr = p.trace();
            let p = p / tr;
            (&p + p.adjoint()) * Complex64::new(0.5, 0.0)
        })
        .collect();
    lib(State::new(c.top(), &weights, Some(densities)))
}

pub const MK_TOL: f64 = 1e-6;

/// 9. Closed-form distance, quasi-Leibniz bounds and agreeing states.
pub fn quantum_metric() -> Check {
    let chains = test_chains()?;
    let two = &chains[0].1;
    let phi = lib(State::new(two.top(), &[1.0, 0.0], None))?;
    let psi = lib(State::new(two.top(), &[0.0, 1.0], None))?;
    let d = lib(mk_distance(two, &phi, &psi, &MkConfig::default()))?;
    // closed form β(0) / max(t, 1 - t) with t = 1/2 and β(0) = 1
    ensure((d.value - 2.0).abs() < MK_TOL, || {
        format!("two-point distance {} ≠ 2", d.value)
    })?;

    let mut r = rng(9);
    let mut worst_ratio: f64 = 0.0;
    let cfg = MkConfig {
        iterations: 3_000,
        window: 1_000,
        ..MkConfig::default()
    };
    let mut solves = 0;
    for (name, c) in &chains {
        ensure(c.top().dimension() <= 13, || format!("{name} is too large"))?;
        for p in 0..100 {
            let a = c
                .top()
                .random_self_adjoint(&mut r)
                .scale(r.gen_range(0.1..10.0));
            let b = c
                .top()
                .random_self_adjoint(&mut r)
                .scale(r.gen_range(0.1..10.0));
            let out = lib(c.quasi_leibniz_check(&a, &b))?;
            ensure(out.holds, || {
                format!("{name}, pair {p}: {} > {}", out.lhs, out.rhs)
            })?;
            if out.rhs > 0.0 {
                worst_ratio = worst_ratio.max(out.lhs / out.rhs);
            }
        }
        for n in 0..c.depth() {
            let phi = random_state(c, &mut r)?;
            let psi = lib(phi.compose_expectation(c, n))?;
            let d = lib(mk_distance(c, &phi, &psi, &cfg))?;
            let bound = 2.0 * c.beta()[n] + MK_TOL;
            ensure(d.value <= bound, || {
                format!(
                    "{name}: states agreeing on level {n} at distance {} > {bound}",
                    d.value
                )
            })?;
            solves += 1;
        }
    }
    Ok(format!(
        "two-point distance {:.9}; 500 quasi-Leibniz pairs (max lhs/rhs {worst_ratio:.3}); {solves} agreeing-state solves within 2β(n)",
        d.value
    ))
}
