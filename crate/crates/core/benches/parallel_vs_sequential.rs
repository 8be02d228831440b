//! The data-parallel paths against their sequential fallback on the same
//! inputs. Build with `--no-default-features` to bench the sequential-only
//! crate, where both variants run sequentially.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use logforms_core::criteria::{form_projective_dimensions, local_freeness};
use logforms_core::par::Parallelism;
use logforms_core::series::verify_generic_theorem_with;
use logforms_core::{Arrangement, PrimeField};

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn zero_one() -> Arrangement<PrimeField> {
    let rows: Vec<Vec<i64>> = (1..16u32)
        .map(|m| (0..4).map(|i| ((m >> i) & 1) as i64).collect())
        .collect();
    Arrangement::from_int_rows(field(), &rows).unwrap()
}

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn generic_theorem(c: &mut Criterion) {
    let mut g = c.benchmark_group("generic_theorem");
    g.sample_size(10).measurement_time(Duration::from_secs(5));
    for (n, l) in [(6, 4), (7, 5)] {
        for (name, par) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("A({n},{l})")), &(n, l), |b, &(n, l)| {
                b.iter(|| black_box(verify_generic_theorem_with(field(), n, l, par).unwrap()))
            });
        }
    }
    g.finish();
}

fn flats_and_forms(c: &mut Criterion) {
    let a = zero_one();
    let mut g = c.benchmark_group("zero_one_arrangement");
    g.sample_size(10).measurement_time(Duration::from_secs(5));
    for (name, par) in MODES {
        g.bench_function(BenchmarkId::new("local_freeness", name), |b| {
            b.iter(|| black_box(local_freeness(&a, par).unwrap()))
        });
        g.bench_function(BenchmarkId::new("form_pds", name), |b| {
            b.iter(|| black_box(form_projective_dimensions(&a, par).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, generic_theorem, flats_and_forms);
criterion_main!(benches);
