use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use degenscope_core::density::{census, count_family_a, family_b_members};
use degenscope_core::BFamily;

fn counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("density");
    group.sample_size(10);
    for n in [100u64, 200, 400] {
        group.bench_with_input(BenchmarkId::new("count_family_a", n), &n, |b, &n| {
            b.iter(|| count_family_a(n))
        });
        group.bench_with_input(BenchmarkId::new("b1_members", n), &n, |b, &n| {
            b.iter(|| family_b_members(BFamily::B1, n).len())
        });
    }
    group.bench_function("census 200", |b| b.iter(|| census(200).count_s));
    group.finish();
}

criterion_group!(benches, counting);
criterion_main!(benches);
