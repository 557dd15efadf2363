use criterion::{criterion_group, criterion_main, Criterion};
use qgb_core::bounds::transfer_bound;
use qgb_core::covers::{face_cover, vicinity_graph};
use qgb_core::families::platonic;
use qgb_core::linalg::eigenvalues_sym;
use qgb_core::oracle::{fd_spectrum, subdivision_spectrum};
use qgb_core::weighted::{cheeger_constant, normalized_laplacian_sym};
use qgb_core::{EtaStrategy, Length, Platonic};

fn eigensolver(c: &mut Criterion) {
    let g = platonic(Platonic::Dodecahedron, Length::integer(1)).unwrap();
    let gamma = vicinity_graph(&g, &face_cover(&g).unwrap()).unwrap();
    let m = normalized_laplacian_sym(&gamma).unwrap();
    c.bench_function("jacobi_dodecahedron_faces", |b| b.iter(|| eigenvalues_sym(&m, 1e-12).unwrap()));
}

fn cheeger(c: &mut Criterion) {
    let g = platonic(Platonic::Dodecahedron, Length::integer(1)).unwrap();
    let gamma = vicinity_graph(&g, &face_cover(&g).unwrap()).unwrap();
    c.bench_function("cheeger_12_vertices", |b| b.iter(|| cheeger_constant(&gamma).unwrap()));
}

fn transfer(c: &mut Criterion) {
    let g = platonic(Platonic::Icosahedron, Length::integer(1)).unwrap();
    let cover = face_cover(&g).unwrap();
    c.bench_function("transfer_icosahedron_faces", |b| {
        b.iter(|| transfer_bound(&g, &cover, EtaStrategy::Auto).unwrap())
    });
}

fn oracles(c: &mut Criterion) {
    let g = platonic(Platonic::Icosahedron, Length::integer(1)).unwrap();
    let h = Length::ratio(1, 4);
    c.bench_function("subdivision_icosahedron_h4", |b| b.iter(|| subdivision_spectrum(&g, &h, 4).unwrap()));
    let mut group = c.benchmark_group("fd");
    group.sample_size(10);
    group.bench_function("icosahedron_ppu50", |b| b.iter(|| fd_spectrum(&g, 50.0, 4).unwrap()));
    group.finish();
}

criterion_group!(benches, eigensolver, cheeger, transfer, oracles);
criterion_main!(benches);
