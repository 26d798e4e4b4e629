use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use poset_balance::constructions::boolean_lattice;
use poset_balance::extensions::pair_matrix_with;
use poset_balance::repro::shape_sweep_with;
use poset_balance::search::{conjecture_scan_with, MAX_SEARCH_N};
use poset_balance::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn pair_matrix(c: &mut Criterion) {
    let b4 = boolean_lattice(4).unwrap();
    let mut g = c.benchmark_group("pair_matrix_B4");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| pair_matrix_with(&b4, e))
        });
    }
    g.finish();
}

fn scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("conjecture_scan_n6");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| conjecture_scan_with(6, e, MAX_SEARCH_N).unwrap())
        });
    }
    g.finish();
}

fn shapes(c: &mut Criterion) {
    let mut g = c.benchmark_group("shape_sweep_7_cells");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| shape_sweep_with(7, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, pair_matrix, scan, shapes);
criterion_main!(benches);
