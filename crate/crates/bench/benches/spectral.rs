use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use golden_pascal::{GoldenNumber, GoldenPoly};
use golden_pascal_bench::{spectral_power, verify_orders};

fn bench_ring(c: &mut Criterion) {
    let x = GoldenNumber::phi().pow(40).unwrap();
    let y = GoldenNumber::from_fractions(3, 7, -2, 5);
    c.bench_function("golden_mul_integral", |b| b.iter(|| &x * &x));
    c.bench_function("golden_mul_rational", |b| b.iter(|| &x * &y));
    c.bench_function("golden_inv", |b| b.iter(|| y.inv().unwrap()));

    let lin = GoldenPoly::linear(GoldenNumber::psi(), GoldenNumber::phi());
    c.bench_function("poly_pow_30", |b| b.iter(|| lin.pow(30)));
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_note");
    group.sample_size(10);
    for n in [5, 10, 20, 30] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| verify_orders([n]))
        });
    }
    group.finish();
}

fn bench_decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_power");
    group.sample_size(10);
    for n in [4, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| spectral_power(n, 12))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_ring, bench_verify, bench_decompose);
criterion_main!(benches);
