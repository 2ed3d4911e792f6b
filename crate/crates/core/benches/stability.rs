use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skc_core::{
    build_galois_skc, check_many, check_stability_with, compare_schedules_with, random_schedule,
    Execution, FieldCtx, TeamMap,
};

fn modes() -> Vec<(&'static str, Execution)> {
    #[allow(unused_mut)]
    let mut m = vec![("sequential", Execution::Sequential)];
    #[cfg(feature = "parallel")]
    m.push(("parallel", Execution::Parallel));
    m
}

fn verify_galois(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_stability/galois");
    group.sample_size(10);
    for k in [5u32, 6, 7, 8] {
        let ctx = FieldCtx::with_default_modulus(k).unwrap();
        let schedule = build_galois_skc(&ctx, &TeamMap::identity(k)).unwrap();
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, 1u32 << k), &schedule, |b, s| {
                b.iter(|| check_stability_with(s, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn random_sweep(c: &mut Criterion) {
    let schedules: Vec<_> = (0..1000)
        .map(|seed| random_schedule(3, seed).unwrap())
        .collect();
    let mut group = c.benchmark_group("check_many/random8x1000");
    group.sample_size(20);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| check_many(&schedules, exec)));
    }
    group.finish();
}

fn compare(c: &mut Criterion) {
    let k = 6;
    let ctx = FieldCtx::with_default_modulus(k).unwrap();
    let a = build_galois_skc(&ctx, &TeamMap::identity(k)).unwrap();
    let order: Vec<usize> = (0..a.len()).rev().collect();
    let b = a.reordered(&order);
    let mut group = c.benchmark_group("compare_schedules/64");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |bench| {
            bench.iter(|| compare_schedules_with(&a, &b, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, verify_galois, random_sweep, compare);
criterion_main!(benches);
