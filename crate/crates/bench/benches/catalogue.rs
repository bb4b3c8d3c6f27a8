use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tlink::catalogue::enumerate_catalogue;

fn catalogue(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_catalogue");
    g.sample_size(10);
    for max in [12, 24, 60] {
        g.bench_with_input(BenchmarkId::from_parameter(max), &max, |b, &max| {
            b.iter(|| enumerate_catalogue(max).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, catalogue);
criterion_main!(benches);
