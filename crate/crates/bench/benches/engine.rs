use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qstirling::groups::{eulerian_b, eulerian_r};
use qstirling::identities::{Params, Verifier};
use qstirling::partitions::{d_subset_weight_dp, pssp_weight_dp};
use qstirling::qpoly::q_binomial;
use qstirling::starred::{bfmaj_enum_all, bfmaj_rec};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [5, 6, 7] {
        g.bench_with_input(BenchmarkId::new("eulerian_b", n), &n, |b, &n| {
            b.iter(|| eulerian_b(black_box(n)).unwrap())
        });
    }
    g.bench_function("eulerian_r/r=3,n=6", |b| {
        b.iter(|| eulerian_r(3, black_box(6)).unwrap())
    });
    g.bench_function("bfmaj_enum_all/n=5", |b| {
        b.iter(|| bfmaj_enum_all(black_box(5)).unwrap())
    });
    g.finish();
}

fn recurrences(c: &mut Criterion) {
    c.bench_function("q_binomial/40,20", |b| b.iter(|| q_binomial(black_box(40), 20)));
    c.bench_function("bfmaj_rec/12,6", |b| b.iter(|| bfmaj_rec(black_box(12), 6)));
    c.bench_function("pssp_weight_dp/20,8", |b| b.iter(|| pssp_weight_dp(black_box(20), 8)));
    c.bench_function("d_subset_weight_dp/20,8", |b| {
        b.iter(|| d_subset_weight_dp(black_box(20), 8))
    });
}

fn verification(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    // A fresh verifier each time so nothing is served from its memo.
    g.bench_function("thm-main-B/n=6", |b| {
        b.iter(|| Verifier::default().verify("thm-main-B", &Params::n(6)).unwrap())
    });
    g.bench_function("basis-D-q/n=12", |b| {
        b.iter(|| Verifier::default().verify("basis-D-q", &Params::n(12)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, enumeration, recurrences, verification);
criterion_main!(benches);
