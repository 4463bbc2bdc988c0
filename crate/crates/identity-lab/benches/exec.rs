use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use identity_lab::{run_checks, Lab};
use series_core::Exec;
use spt_cranks::{nsb_table_with, SptFamily};

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("nsb_table_60");
    for exec in [Exec::Sequential, Exec::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| nsb_table_with(SptFamily::SBar, 60, e))
        });
    }
    g.finish();
}

fn checks(c: &mut Criterion) {
    let ids = ["T2_1", "T2_6", "T2_10", "T2_15", "mainthm_i", "phi", "sb3"];
    let mut g = c.benchmark_group("catalog_subset");
    g.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &e| {
            b.iter(|| run_checks(&ids, None, &Lab::new(e)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, tables, checks);
criterion_main!(benches);
