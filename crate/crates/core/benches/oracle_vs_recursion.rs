use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hook_immanant::graphs::{build_h, families, AnyGraph, MatrixParams};
use hook_immanant::immanant::{hook_poly_bruteforce_with, HookIndex};
use hook_immanant::recursion::PolyContext;
use hook_immanant::verify::{self, VerifyOptions};
use hook_immanant::Exec;
use std::hint::black_box;

// K_n Laplacian, k = ceil(n/2): the permutation oracle in both execution
// modes against the memoized recursion.
fn complete_graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete_laplacian");
    group.sample_size(10);
    let p = MatrixParams::laplacian();
    for n in [5usize, 6, 7, 8] {
        let g: AnyGraph = families::complete(n).unwrap().into();
        let m = build_h(&g, &p);
        let k = HookIndex(n.div_ceil(2) as i64);
        for (name, exec) in [
            ("oracle_sequential", Exec::Sequential),
            ("oracle_parallel", Exec::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(name, n), &m, |b, m| {
                b.iter(|| hook_poly_bruteforce_with(black_box(m), k, exec).unwrap())
            });
        }
        group.bench_with_input(BenchmarkId::new("recursion", n), &g, |b, g| {
            b.iter(|| PolyContext::new(black_box(g.clone()), p.clone()).general(0, k.0))
        });
    }
    group.finish();
}

// Instance-level fan-out of a verification suite.
fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_suite_n4");
    group.sample_size(10);
    for (name, exec) in [
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel),
    ] {
        let opts = VerifyOptions {
            n: 4,
            exec,
            ..VerifyOptions::default()
        };
        group.bench_function(name, |b| b.iter(|| verify::oracle_suite(&opts).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, complete_graphs, suites);
criterion_main!(benches);
