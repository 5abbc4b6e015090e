use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use monograd_core::betti::{hochster_table, koszul_table, regularity_with};
use monograd_core::families::{family_overlap_run, family_reg_gap};
use monograd_core::kruskal::{colex_shadow_oracle, shadow_bound};
use monograd_core::random::random_ideal;
use monograd_core::structure::{is_vertex_splittable, linear_quotients_search};
use monograd_core::{gradient, iterated_gradient, Engine, MonomialIdeal};

fn gradients(c: &mut Criterion) {
    let i = random_ideal(6, 3, 5, 12, false, 1).unwrap();
    c.bench_function("gradient/n6_mu12", |b| b.iter(|| gradient(black_box(&i))));
    let m4 = MonomialIdeal::maximal(5).power(4).unwrap();
    c.bench_function("iterated_gradient/m5^4_order3", |b| {
        b.iter(|| iterated_gradient(black_box(&m4), 3))
    });
}

fn resolutions(c: &mut Criterion) {
    let window = gradient(&family_overlap_run(5).unwrap());
    c.bench_function("hochster/window_d5_gradient", |b| {
        b.iter(|| regularity_with(black_box(&window), Engine::Hochster).unwrap())
    });
    let gap = family_reg_gap(-3).unwrap().ideal;
    c.bench_function("koszul/gap_a-3", |b| b.iter(|| koszul_table(black_box(&gap)).unwrap()));
    let sq = random_ideal(5, 2, 3, 5, true, 7).unwrap();
    c.bench_function("hochster_table/n5_squarefree", |b| b.iter(|| hochster_table(black_box(&sq)).unwrap()));
}

fn structure(c: &mut Criterion) {
    let m = MonomialIdeal::maximal(4).power(3).unwrap();
    c.bench_function("lq_search/m4^3", |b| {
        b.iter(|| linear_quotients_search(black_box(&m), None).unwrap())
    });
    c.bench_function("vertex_splittable/m4^3", |b| b.iter(|| is_vertex_splittable(black_box(&m))));
}

fn shadows(c: &mut Criterion) {
    c.bench_function("shadow_bound/1107_17", |b| b.iter(|| shadow_bound(black_box(1107), 17).unwrap()));
    c.bench_function("colex_shadow/1107_17", |b| {
        b.iter(|| colex_shadow_oracle(black_box(1107), 17).unwrap())
    });
}

criterion_group!(benches, gradients, resolutions, structure, shadows);
criterion_main!(benches);
