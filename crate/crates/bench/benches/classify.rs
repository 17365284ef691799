use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use regwide::closedsets::{enumerate_closed_subsets_with, EnumerationMode, DEFAULT_ENUMERATION_CAP};
use regwide::fflv::enumerate_fflv_basis;
use regwide::repmod::{adjoint_module, type_a_module, RegularSubalgebra};
use regwide::wideness::{classify_adjoint, classify_with, commutant, default_lambda_test_set, ClassifyOptions};
use regwide::{ClosedSubset, TypeLetter, Weight};
use regwide_bench::{census, sample, system};

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for (letter, rank) in [(TypeLetter::A, 2), (TypeLetter::G, 2), (TypeLetter::A, 3), (TypeLetter::B, 3)] {
        let rs = system(letter, rank);
        let mode = EnumerationMode::default_for(&rs);
        group.bench_with_input(BenchmarkId::from_parameter(rs.name()), &rs, |b, rs| {
            b.iter(|| enumerate_closed_subsets_with(rs, mode, DEFAULT_ENUMERATION_CAP).unwrap().len())
        });
    }
    group.finish();
}

fn modules(c: &mut Criterion) {
    let a3 = system(TypeLetter::A, 3);
    c.bench_function("module/A3 V(1,1,1)", |b| {
        b.iter(|| type_a_module(&a3, black_box(&Weight(vec![1, 1, 1]))).unwrap().dimension())
    });
    let f4 = system(TypeLetter::F, 4);
    c.bench_function("module/F4 adjoint", |b| b.iter(|| adjoint_module(black_box(&f4)).unwrap().dimension()));
}

fn commutants(c: &mut Criterion) {
    let rs = system(TypeLetter::A, 3);
    let v = adjoint_module(&rs).unwrap();
    let mut group = c.benchmark_group("commutant/A3 adjoint");
    for (name, t) in [("empty", ClosedSubset::empty()), ("borel", ClosedSubset::positive(&rs))] {
        let s = RegularSubalgebra::minimal(&rs, t);
        group.bench_function(name, |b| b.iter(|| commutant(&v, &s).unwrap().dim()));
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let options = ClassifyOptions::default();
    let (a2, subsets) = census(TypeLetter::A, 2);
    let lambdas = default_lambda_test_set(2);
    c.bench_function("classify/A2 census verified", |b| {
        b.iter(|| {
            subsets
                .iter()
                .filter(|t| classify_with(&a2, t, &lambdas, &options).unwrap().oracle_agreement == Some(true))
                .count()
        })
    });
    let (g2, subsets) = census(TypeLetter::G, 2);
    let subsets = sample(&subsets, 8);
    c.bench_function("classify/G2 adjoint sample", |b| {
        b.iter(|| subsets.iter().map(|t| classify_adjoint(&g2, t, &options).unwrap().per_lambda.len()).sum::<usize>())
    });
}

fn fflv(c: &mut Criterion) {
    let mut group = c.benchmark_group("fflv");
    for lambda in [vec![1, 1], vec![1, 1, 1], vec![2, 1, 1], vec![1, 1, 1, 1]] {
        let w = Weight(lambda);
        group.bench_with_input(BenchmarkId::from_parameter(&w), &w, |b, w| {
            b.iter(|| enumerate_fflv_basis(w).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, modules, commutants, classification, fflv);
criterion_main!(benches);
