//! Sequential against rayon-parallel execution for the oracle and the bound
//! sweep. Build with `--no-default-features` to drop rayon entirely; the
//! "parallel" rows then fall back to sequential.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use mpturan::bounds::consistency_sweep;
use mpturan::constructions::prop41;
use mpturan::oracle::{oracle_delta, oracle_f, OracleOptions};
use mpturan::verifier::{find_coloring, max_clique_size};
use mpturan::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(20);
    let cases: [(&str, usize, usize, usize, bool); 4] = [
        ("f(1,7,4)", 1, 7, 4, true),
        ("f(1,10,4)", 1, 10, 4, true),
        ("f(2,5,4)", 2, 5, 4, true),
        ("delta(2,5,4)", 2, 5, 4, false),
    ];
    for (name, n, r, q, is_f) in cases {
        for (label, exec) in MODES {
            let opts = OracleOptions { exec, split_depth: 4, ..OracleOptions::default() };
            group.bench_with_input(BenchmarkId::new(label, name), &opts, |b, opts| {
                b.iter(|| {
                    let res = if is_f { oracle_f(n, r, q, opts) } else { oracle_delta(n, r, q, opts) };
                    black_box(res.unwrap().value)
                })
            });
        }
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("consistency_sweep");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_function(BenchmarkId::new(label, "r<=20,n<=50"), |b| {
            b.iter(|| black_box(consistency_sweep(20, 50, exec).unwrap().len()))
        });
    }
    group.finish();
}

fn verifier(c: &mut Criterion) {
    let g = prop41(10, 13, 3).unwrap().graph;
    c.bench_function("clique/prop41(10,13,3)", |b| b.iter(|| black_box(max_clique_size(&g))));
    c.bench_function("colouring/prop41(10,13,3)", |b| {
        b.iter(|| black_box(find_coloring(&g, 3).is_some()))
    });
}

criterion_group!(benches, oracle, sweep, verifier);
criterion_main!(benches);
