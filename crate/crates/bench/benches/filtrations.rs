use criterion::{criterion_group, criterion_main, Criterion};
use ghn_core::schema::parse_sheaf;
use ghn_core::{brute_force_max, ghn_filtration, leading_cochar};

fn bench_filtrations(c: &mut Criterion) {
    let so7 = parse_sheaf(ghn_core::fixtures::SO7_P3_PAPER).unwrap();
    let glxgl = parse_sheaf(ghn_core::fixtures::GLXGL_NONCENTRAL).unwrap();
    c.bench_function("leading_cochar/so7_p3", |b| {
        b.iter(|| leading_cochar(&so7).unwrap())
    });
    c.bench_function("ghn_filtration/so7_p3", |b| {
        b.iter(|| ghn_filtration(&so7).unwrap())
    });
    c.bench_function("brute_force_max/glxgl_bound3", |b| {
        b.iter(|| brute_force_max(&glxgl, 3).unwrap())
    });
}

criterion_group!(benches, bench_filtrations);
criterion_main!(benches);
