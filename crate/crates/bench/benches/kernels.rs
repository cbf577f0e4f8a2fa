use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use cherlink_core::cherednik::{hook_components_l, torus_link_homfly, CherednikParams};
use cherlink_core::dmod::{dmod_character_truncated, DmodLabel};
use cherlink_core::knots::{rosso_jones, TorusKnot};
use cherlink_core::koszul::koszul_homology;
use cherlink_core::symfunc::{c_coeffs, kostka_foulkes, lr_product};
use cherlink_core::Partition;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn symfunc(c: &mut Criterion) {
    let (mu, nu) = (part("3,2,1"), part("2,2,1"));
    c.bench_function("lr (3,2,1)x(2,2,1)", |b| b.iter(|| lr_product(black_box(&mu), black_box(&nu))));
    let (lambda, lp) = (part("2,1"), part("1"));
    c.bench_function("c_coeffs (2,1),(1),n0=3", |b| b.iter(|| c_coeffs(black_box(&lambda), black_box(&lp), 3)));
    let (m, w) = (part("4,2"), part("2,2,1,1"));
    c.bench_function("kostka_foulkes (4,2),(2,2,1,1)", |b| b.iter(|| kostka_foulkes(black_box(&m), black_box(&w)).unwrap()));
}

fn knots(c: &mut Criterion) {
    let k = TorusKnot::new(2, 3).unwrap();
    let lambda = part("2,1");
    c.bench_function("rosso_jones T(2,3) (2,1)", |b| b.iter(|| rosso_jones(black_box(&k), black_box(&lambda)).unwrap()));
    let p = CherednikParams::new(3, 6).unwrap();
    let l3 = part("2,1");
    c.bench_function("hook_components_l 3/6 (2,1)", |b| b.iter(|| hook_components_l(black_box(&p), black_box(&l3)).unwrap()));
    c.bench_function("torus_link_homfly (4,6)", |b| b.iter(|| torus_link_homfly(4, 6).unwrap()));
}

fn heavy(c: &mut Criterion) {
    let mut g = c.benchmark_group("heavy");
    g.sample_size(10);
    g.bench_function("koszul_homology (2,4) deg 6", |b| b.iter(|| koszul_homology(2, 4, 6).unwrap()));
    let label = DmodLabel::new(2, 0, part("2")).unwrap();
    g.bench_function("dmod sl2 k=4 trunc 10", |b| b.iter(|| dmod_character_truncated(&label, 4, 10).unwrap()));
    g.finish();
}

criterion_group!(benches, symfunc, knots, heavy);
criterion_main!(benches);
