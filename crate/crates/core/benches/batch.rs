use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use realruled::batch::{move_trials, round_trip_failures, Execution, MoveConfig};

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn round_trip(c: &mut Criterion) {
    let mut group = c.benchmark_group("round_trip_g6");
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, exec| {
            b.iter(|| round_trip_failures(6, *exec))
        });
    }
    group.finish();
}

fn moves(c: &mut Criterion) {
    let cfg = MoveConfig::default();
    let mut group = c.benchmark_group("move_trials_1000");
    group.sample_size(20);
    for (name, exec) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, exec| {
            b.iter(|| move_trials(&cfg, *exec))
        });
    }
    group.finish();
}

criterion_group!(benches, round_trip, moves);
criterion_main!(benches);
