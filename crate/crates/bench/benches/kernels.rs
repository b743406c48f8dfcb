use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use disting_bench::bench_graphs;
use disting_core::audit::{enumerate_connected, Evaluator};
use disting_core::automorphism::{automorphisms, canonical_form};
use disting_core::{distinguishing_index, distinguishing_number};
use std::hint::black_box;

fn group(c: &mut Criterion) {
    let mut g = c.benchmark_group("automorphisms");
    for (name, graph) in bench_graphs() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &graph, |b, x| b.iter(|| automorphisms(black_box(x))));
    }
    g.finish();
}

fn canon(c: &mut Criterion) {
    let mut g = c.benchmark_group("canonical_form");
    for (name, graph) in bench_graphs().into_iter().filter(|(_, x)| x.n() <= 10) {
        g.bench_with_input(BenchmarkId::from_parameter(name), &graph, |b, x| b.iter(|| canonical_form(black_box(x))));
    }
    g.finish();
}

fn solve(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve");
    g.sample_size(10);
    for (name, graph) in bench_graphs() {
        g.bench_with_input(BenchmarkId::new("D", name), &graph, |b, x| b.iter(|| distinguishing_number(black_box(x))));
        g.bench_with_input(BenchmarkId::new("D'", name), &graph, |b, x| b.iter(|| distinguishing_index(black_box(x))));
    }
    g.finish();
}

fn corpus(c: &mut Criterion) {
    let mut g = c.benchmark_group("corpus");
    g.sample_size(10);
    g.bench_function("enumerate n=6", |b| b.iter(|| enumerate_connected(black_box(6))));
    let graphs = enumerate_connected(6).unwrap();
    g.bench_function("check_bounds n=6", |b| {
        b.iter(|| {
            let eval = Evaluator::default();
            graphs.iter().map(|x| eval.check_bounds(x).unwrap().len()).sum::<usize>()
        })
    });
    g.finish();
}

criterion_group!(benches, group, canon, solve, corpus);
criterion_main!(benches);
