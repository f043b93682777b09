use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use picchi_core::random::{random_symfunc, rng_from_seed};
use picchi_core::symfunc::transform_via_plethysm;
use picchi_core::TruncatedSymFunc;
use std::hint::black_box;

fn exp_log(c: &mut Criterion) {
    let mut group = c.benchmark_group("exp_plethystic_p1");
    for d in [4u32, 6, 8] {
        let p1 = TruncatedSymFunc::power_sum(d, 1);
        group.bench_with_input(BenchmarkId::from_parameter(d), &p1, |b, p1| {
            b.iter(|| black_box(p1).exp_plethystic().unwrap().log_plethystic().unwrap())
        });
    }
    group.finish();
}

fn plethysm(c: &mut Criterion) {
    let mut rng = rng_from_seed(1);
    let f = random_symfunc(&mut rng, 6, 4);
    let g = random_symfunc(&mut rng, 6, 4);
    c.bench_function("plethysm/d=6", |b| b.iter(|| black_box(&f).plethysm(black_box(&g)).unwrap()));
}

fn transform(c: &mut Criterion) {
    let mut rng = rng_from_seed(2);
    let f = random_symfunc(&mut rng, 6, 3);
    let mut group = c.benchmark_group("transform/d=6");
    group.sample_size(10);
    group.bench_function("direct", |b| b.iter(|| black_box(&f).transform_t(6)));
    group.bench_function("via_plethysm", |b| {
        b.iter(|| transform_via_plethysm(black_box(&f), 6).unwrap())
    });
    group.finish();
}

criterion_group!(benches, exp_log, plethysm, transform);
criterion_main!(benches);
