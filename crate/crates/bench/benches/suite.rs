use criterion::{black_box, criterion_group, criterion_main, Criterion};

use topo_core::cohomology::{ring_structure, verify_cup_laws};
use topo_core::exactlinalg::{smith_normal_form, PrimeField, Rationals};
use topo_core::homology::{chain_complex, field_homology, integral_homology};
use topo_core::lefschetz::coincidence_number;
use topo_core::pi1::{abelianization, edge_path_group};
use topo_core::{SimplicialComplex, SimplicialMap};

fn builtin(name: &str) -> SimplicialComplex {
    SimplicialComplex::builtin(name).unwrap()
}

fn smith_forms(c: &mut Criterion) {
    let torus2 = builtin("torus:2");
    let cx = chain_complex(&torus2, false);
    let d2 = cx.boundary(2);
    c.bench_function("smith normal form of the torus:2 boundary", |b| {
        b.iter(|| smith_normal_form(black_box(&d2)))
    });
}

fn homology_pipelines(c: &mut Criterion) {
    let torus2 = builtin("torus:2");
    c.bench_function("integral homology of torus:2", |b| {
        b.iter(|| integral_homology(&chain_complex(black_box(&torus2), false)))
    });

    let torus3 = builtin("torus:3");
    c.bench_function("rational homology of torus:3", |b| {
        b.iter(|| field_homology(&Rationals, &chain_complex(black_box(&torus3), false)).unwrap())
    });

    let sphere = builtin("sphere:2");
    c.bench_function("integral homology of the subdivided sphere", |b| {
        b.iter(|| {
            let k = black_box(&sphere).barycentric_subdivision();
            integral_homology(&chain_complex(&k, false))
        })
    });
}

fn ring_and_traces(c: &mut Criterion) {
    let torus = builtin("torus");
    let cx = chain_complex(&torus, false);
    c.bench_function("cohomology ring of the torus", |b| {
        b.iter(|| {
            let fh = field_homology(&Rationals, black_box(&cx)).unwrap();
            ring_structure(&Rationals, &torus, &fh)
        })
    });

    let f2 = PrimeField::new(2).unwrap();
    c.bench_function("cup product laws on the torus over F2", |b| {
        b.iter(|| verify_cup_laws(&f2, black_box(&torus)).unwrap())
    });

    let double = SimplicialMap::from_fn(torus.clone(), torus.clone(), &|t| {
        let v: u32 = t.parse().unwrap();
        ((2 * v) % 7).to_string()
    })
    .unwrap();
    let rotate = SimplicialMap::from_fn(torus.clone(), torus.clone(), &|t| {
        let v: u32 = t.parse().unwrap();
        ((v + 1) % 7).to_string()
    })
    .unwrap();
    c.bench_function("coincidence number of two torus maps", |b| {
        b.iter(|| coincidence_number(black_box(&double), black_box(&rotate)).unwrap())
    });
}

fn group_presentations(c: &mut Criterion) {
    let torus2 = builtin("torus:2");
    c.bench_function("edge path group of torus:2, abelianized", |b| {
        b.iter(|| abelianization(&edge_path_group(black_box(&torus2)).unwrap()))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = smith_forms, homology_pipelines, ring_and_traces, group_presentations
}
criterion_main!(benches);
