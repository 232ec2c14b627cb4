use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hkr_bench::{abelian_surface, dense_class, kernel_chain};
use hkr_core::spaces::projective_space;
use hkr_core::transforms::{compose, compose_by_pushforward, identity_kernel};
use hkr_core::verify::{run, Options, Suite};
use hkr_core::{HHClass, Pairing};

fn ring_ops(c: &mut Criterion) {
    let x = abelian_surface();
    let a = dense_class(&x);
    c.bench_function("multiply dense classes on ExE", |b| b.iter(|| black_box(&a).mul(black_box(&a)).unwrap()));
    c.bench_function("mukai gram matrix on ExE", |b| b.iter(|| Pairing::Mukai.gram_matrix(black_box(&x))));
}

fn kernels(c: &mut Criterion) {
    let p4 = projective_space(4).unwrap();
    c.bench_function("identity kernel on P4", |b| b.iter(|| identity_kernel(black_box(&p4)).unwrap()));
    let (phi, psi) = kernel_chain(7);
    c.bench_function("compose P1-E-P1 by components", |b| b.iter(|| compose(black_box(&phi), black_box(&psi)).unwrap()));
    c.bench_function("compose P1-E-P1 by pushforward", |b| b.iter(|| compose_by_pushforward(black_box(&phi), black_box(&psi)).unwrap()));
    let id = identity_kernel(&abelian_surface()).unwrap();
    let inputs = HHClass::basis_of(id.source());
    c.bench_function("convolve identity on ExE basis", |b| b.iter(|| inputs.iter().map(|x| id.convolve(x).unwrap()).collect::<Vec<_>>()));
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("verification");
    g.sample_size(10);
    g.bench_function("all suites", |b| b.iter(|| run(&Suite::ALL, Options { seed: 0, timings: false })));
    g.finish();
}

criterion_group!(benches, ring_ops, kernels, suites);
criterion_main!(benches);
