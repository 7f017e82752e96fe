use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qfring::homology::{ext1, free_resolution};
use qfring::{
    classify, is_isomorphic, is_strongly_gorenstein_projective, Module, Presentation, Ring,
};

fn module(r: &Ring, rel: &str) -> Module {
    Module::from_presentation(Presentation::parse(r, rel).unwrap()).unwrap()
}

fn rings(c: &mut Criterion) {
    c.bench_function("build Z/2 x GF(16)", |b| {
        b.iter(|| Ring::parse(black_box("Z/2 x GF(16)")).unwrap())
    });
    c.bench_function("ideal lattice of Z/60", |b| {
        b.iter(|| Ring::parse("Z/60").unwrap().ideals().unwrap().len())
    });
    c.bench_function("classify Z/8 x Z/27", |b| {
        b.iter(|| classify(&Ring::parse("Z/8 x Z/27").unwrap()).unwrap())
    });
}

fn modules(c: &mut Criterion) {
    let z8 = Ring::parse("Z/8").unwrap();
    let sum = module(&z8, "2,0;0,4");
    c.bench_function("sgp Z/2+Z/4 over Z/8", |b| {
        b.iter(|| {
            is_strongly_gorenstein_projective(black_box(&sum))
                .unwrap()
                .decision
        })
    });
    let swapped = module(&z8, "4,0;0,2");
    c.bench_function("isomorphism Z/2+Z/4 over Z/8", |b| {
        b.iter(|| is_isomorphic(&sum, &swapped).unwrap().is_some())
    });
    let r = Ring::parse("GF(2)[x]/(x^3)").unwrap();
    let m = module(&r, "x");
    c.bench_function("resolution of R/(x) over GF(2)[x]/(x^3)", |b| {
        b.iter(|| free_resolution(&m, 4).unwrap().ranks())
    });
    let free = Module::free(&r, 1).unwrap();
    c.bench_function("ext1 of R/(x) over GF(2)[x]/(x^3)", |b| {
        b.iter(|| ext1(&m, &free).unwrap().order)
    });
}

criterion_group!(benches, rings, modules);
criterion_main!(benches);
