use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use diskpoly::duality::dual;
use diskpoly::measures::{minimal_enclosing_circle, minimal_width};
use diskpoly::verification::{random_center_set, GeneratorConfig, SpreadMode};
use diskpoly::{DiskPolygon, MeasureReport, Point, Tolerance};

fn centers(n: usize) -> Vec<Point> {
    random_center_set(&GeneratorConfig {
        d: 1.3,
        n_centers: n,
        seed: 42,
        spread_mode: SpreadMode::Stretched,
    })
    .unwrap()
}

fn build(c: &mut Criterion) {
    let tol = Tolerance::default();
    let mut group = c.benchmark_group("build");
    for n in [3, 10, 50, 200] {
        let pts = centers(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| {
            b.iter(|| DiskPolygon::build(black_box(pts), &tol).unwrap())
        });
    }
    group.finish();
}

fn measures(c: &mut Criterion) {
    let tol = Tolerance::default();
    let poly = DiskPolygon::build(&centers(10), &tol).unwrap();
    c.bench_function("measure_report", |b| {
        b.iter(|| MeasureReport::of(black_box(&poly), &tol).unwrap())
    });
    c.bench_function("minimal_width", |b| {
        b.iter(|| minimal_width(black_box(&poly), &tol).unwrap())
    });
    c.bench_function("dual", |b| b.iter(|| dual(black_box(&poly), &tol).unwrap()));
}

fn enclosing(c: &mut Criterion) {
    let mut group = c.benchmark_group("enclosing_circle");
    for n in [8, 12, 100, 1000] {
        let pts = centers(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| {
            b.iter(|| minimal_enclosing_circle(black_box(pts)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, build, measures, enclosing);
criterion_main!(benches);
