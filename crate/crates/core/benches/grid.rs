use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ftri::coxeter::{CoxSum, IrreducibleType};
use ftri::ftriangle::f_of;
use ftri::par::Exec;
use ftri::zerolocus::{default_grid, verify_a3, verify_a5, VerifyOptions};
use std::hint::black_box;

fn grid_sweep(c: &mut Criterion) {
    let f = f_of(&CoxSum::irreducible(IrreducibleType::H4)).unwrap();
    let grid = default_grid(64);
    let mut group = c.benchmark_group("h4_grid_64");
    group.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let opts = VerifyOptions { exec, ..VerifyOptions::default() };
        group.bench_with_input(BenchmarkId::new("a3_a5", name), &opts, |b, opts| {
            b.iter(|| {
                let a3 = verify_a3(black_box(&f), &grid, opts).unwrap();
                let a5 = verify_a5(black_box(&f), &grid, opts).unwrap();
                (a3.len(), a5.len())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, grid_sweep);
criterion_main!(benches);
