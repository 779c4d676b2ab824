use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use strange_core::exec::Exec;
use strange_core::fishburn::fishburn_numbers;
use strange_core::report::VerificationReport;
use strange_core::strange::{verify_theorem1, verify_theta_dissection};

fn theorem_grid(exec: Exec) -> usize {
    let cases: Vec<(usize, usize)> = (1..=12).flat_map(|t| (0..=40).map(move |n| (t, n))).collect();
    exec.map(&cases, |&(t, n)| {
        VerificationReport::or_error("thm1", verify_theorem1(n, t))
    })
    .len()
}

fn theta_grid(exec: Exec) -> usize {
    let cases: Vec<(usize, usize, usize)> = (1..=6)
        .flat_map(|t| (0..=30).flat_map(move |n| (0..=3).map(move |nu| (t, n, nu))))
        .collect();
    exec.map(&cases, |&(t, n, nu)| {
        VerificationReport::or_error("theta", verify_theta_dissection(n, t, nu))
    })
    .len()
}

fn bench_grids(c: &mut Criterion) {
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    let modes = [("sequential", Exec::Sequential), ("parallel", Exec::from_workers(workers))];

    let mut group = c.benchmark_group("theorem1_grid");
    group.sample_size(10);
    for (name, exec) in modes {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| theorem_grid(exec)));
    }
    group.finish();

    let mut group = c.benchmark_group("theta_grid");
    group.sample_size(10);
    for (name, exec) in modes {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| theta_grid(exec)));
    }
    group.finish();
}

fn bench_fishburn(c: &mut Criterion) {
    let workers = std::thread::available_parallelism().map_or(4, |n| n.get());
    let modes = [("sequential", Exec::Sequential), ("parallel", Exec::from_workers(workers))];

    let mut group = c.benchmark_group("fishburn_mod_529");
    group.sample_size(10);
    for (name, exec) in modes {
        group.bench_function(BenchmarkId::new(name, 1057), |b| {
            b.iter(|| exec.install(|| fishburn_numbers(1057, Some(529)).unwrap()))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("fishburn_exact");
    group.sample_size(10);
    for (name, exec) in modes {
        group.bench_function(BenchmarkId::new(name, 200), |b| {
            b.iter(|| exec.install(|| fishburn_numbers(200, None).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_grids, bench_fishburn);
criterion_main!(benches);
