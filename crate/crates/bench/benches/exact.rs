use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use farey_ideals::theta::{effros_shen_identification, ThetaIdeal};
use farey_ideals::{
    enumerate_coherent_ideals, farey_diagram, farey_level, ideal_metric, ContinuedFraction,
    SwapRule,
};

fn cf(s: &str) -> ContinuedFraction {
    s.parse().unwrap()
}

fn theta_descent(c: &mut Criterion) {
    let mut g = c.benchmark_group("theta_descent");
    for depth in [64usize, 256, 1001] {
        g.bench_with_input(BenchmarkId::from_parameter(depth), &depth, |b, &d| {
            let golden = cf("0;(1)");
            b.iter(|| ThetaIdeal::new(black_box(&golden), d).unwrap());
        });
    }
    g.finish();
}

fn remark_metric(c: &mut Criterion) {
    c.bench_function("ideal_metric_depth_1001", |b| {
        let (t, m) = (cf("0;1000,(1)"), cf("0;999,(1)"));
        b.iter(|| {
            let ti = ThetaIdeal::new(&t, 1001).unwrap();
            let mi = ThetaIdeal::new(&m, 1001).unwrap();
            ideal_metric(&ti, &mi, 1001).unwrap()
        });
    });
}

fn farey_rows(c: &mut Criterion) {
    let mut g = c.benchmark_group("farey_level");
    for n in [8usize, 12, 16] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| farey_level(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn quotients(c: &mut Criterion) {
    c.bench_function("trace_coefficients_40", |b| {
        let t = ThetaIdeal::new(&cf("0;2,(1,3)"), 40).unwrap();
        b.iter(|| {
            (1..=40)
                .map(|n| t.trace_coefficient(n).unwrap())
                .collect::<Vec<_>>()
        });
    });
    c.bench_function("effros_shen_identification_j6", |b| {
        let t = cf("0;2,(1,3)");
        b.iter(|| effros_shen_identification(&t, 6, SwapRule::Alternating).unwrap());
    });
    c.bench_function("enumerate_farey_depth_4", |b| {
        let d = Arc::new(farey_diagram(4).unwrap());
        b.iter(|| enumerate_coherent_ideals(&d, 4).unwrap().len());
    });
}

criterion_group!(benches, theta_descent, remark_metric, farey_rows, quotients);
criterion_main!(benches);
