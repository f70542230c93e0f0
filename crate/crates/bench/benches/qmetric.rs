use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use farey_ideals::qmetric::{mk_distance, ChainSpace, MkConfig, State};
use farey_ideals::{effros_shen_diagram, ContinuedFraction};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Golden Effros-Shen chain with top algebra M_3 ⊕ M_2.
fn golden_chain() -> ChainSpace {
    let golden: ContinuedFraction = "0;(1)".parse().unwrap();
    let d = effros_shen_diagram(&golden, 3).unwrap();
    ChainSpace::from_diagram(
        &d,
        vec![9.0 / 13.0, 4.0 / 13.0],
        vec![1.0, 0.5, 0.2, 1.0 / 13.0],
    )
    .unwrap()
}

fn lip_norm(c: &mut Criterion) {
    let chain = golden_chain();
    let a = chain
        .top()
        .random_self_adjoint(&mut ChaCha8Rng::seed_from_u64(1));
    c.bench_function("lip_norm_golden", |b| {
        b.iter(|| chain.lip_norm(black_box(&a)).unwrap())
    });
}

fn mk(c: &mut Criterion) {
    let chain = golden_chain();
    let e = |i: usize| {
        let mut v = vec![Complex64::new(0.0, 0.0); 3];
        v[i] = Complex64::new(1.0, 0.0);
        State::vector(chain.top(), 0, &v).unwrap()
    };
    let (phi, psi) = (e(0), e(2));
    let cfg = MkConfig {
        iterations: 2_000,
        ..MkConfig::default()
    };
    let mut g = c.benchmark_group("mk_distance");
    g.sample_size(10);
    g.bench_function("golden_2000_iterations", |b| {
        b.iter(|| mk_distance(&chain, &phi, &psi, &cfg).unwrap().value)
    });
    g.finish();
}

criterion_group!(benches, lip_norm, mk);
criterion_main!(benches);
