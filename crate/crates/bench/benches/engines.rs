use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mce_bench::{fixture, FIXTURES};
use mce_core::{
    counting_sink, par_mce, par_pivot, par_ttt, select_pivot, ttt, ParallelConfig, RankAssignment,
    RankStrategy, Subproblem, VertexSet,
};

fn engines(c: &mut Criterion) {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cfg = ParallelConfig::new(threads);
    let mut group = c.benchmark_group("engines");
    group.sample_size(10);
    for spec in FIXTURES {
        let g = fixture(spec);
        group.bench_with_input(BenchmarkId::new("ttt", spec), &g, |b, g| {
            b.iter(|| {
                let sink = counting_sink();
                ttt(g, Subproblem::root(g), &sink);
                sink.count()
            })
        });
        group.bench_with_input(BenchmarkId::new("parttt", spec), &g, |b, g| {
            b.iter(|| {
                let sink = counting_sink();
                par_ttt(g, Subproblem::root(g), &sink, &cfg);
                sink.count()
            })
        });
        for strategy in RankStrategy::ALL {
            let rank = RankAssignment::compute(&g, strategy);
            let id = BenchmarkId::new(format!("parmce-{strategy}"), spec);
            group.bench_with_input(id, &g, |b, g| {
                b.iter(|| {
                    let sink = counting_sink();
                    par_mce(g, &rank, &sink, &cfg);
                    sink.count()
                })
            });
        }
    }
    group.finish();
}

fn ranking(c: &mut Criterion) {
    let g = fixture("gnp:2000,0.02,42");
    let mut group = c.benchmark_group("ranking");
    for strategy in RankStrategy::ALL {
        group.bench_function(strategy.name(), |b| {
            b.iter(|| RankAssignment::compute(&g, strategy))
        });
    }
    group.finish();
}

fn pivoting(c: &mut Criterion) {
    let g = fixture("gnp:2000,0.05,3");
    let cand = VertexSet::range(g.n());
    let fini = VertexSet::new();
    let mut group = c.benchmark_group("pivot");
    group.bench_function("sequential", |b| b.iter(|| select_pivot(&g, &cand, &fini)));
    group.bench_function("parallel", |b| b.iter(|| par_pivot(&g, &cand, &fini)));
    group.finish();
}

criterion_group!(benches, engines, ranking, pivoting);
criterion_main!(benches);
