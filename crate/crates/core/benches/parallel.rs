use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use replika::algebra::replicated_algebra;
use replika::homology::{hom_dim, ProjectiveResolution};
use replika::linalg::DEFAULT_PRIME;
use replika::par;
use replika::quiver::Quiver;
use replika::tilting::Catalog;

// Hom and Ext tables over all indecomposables, the inner loop of catalog
// construction. Built with `--no-default-features` both rows time the same
// sequential code.
fn ext_rows(c: &mut Criterion) {
    let mut group = c.benchmark_group("ext table rows");
    group.sample_size(10);
    for (name, q, m) in [
        ("A3 m=2", Quiver::linear_a(3), 2),
        ("D4 m=1", Quiver::d4(), 1),
    ] {
        let cat = Catalog::new(&replicated_algebra(&q, m, DEFAULT_PRIME).unwrap()).unwrap();
        let modules: Vec<_> = cat.entries().iter().map(|e| e.module.clone()).collect();
        let top = 2 * m + 1;
        let row = |i: usize| -> Vec<usize> {
            let res = ProjectiveResolution::new(&modules[i], Some(top + 1)).unwrap();
            modules
                .iter()
                .flat_map(|y| {
                    let mut dims = res.ext_dims(y, top).unwrap();
                    dims.push(hom_dim(&modules[i], y).unwrap());
                    dims
                })
                .collect()
        };
        assert_eq!(
            par::map_range(modules.len(), row),
            par::map_range_sequential(modules.len(), row)
        );
        group.bench_with_input(
            BenchmarkId::new(format!("rayon ({} workers)", par::workers()), name),
            &(),
            |b, _| b.iter(|| black_box(par::map_range(modules.len(), row))),
        );
        group.bench_with_input(BenchmarkId::new("sequential", name), &(), |b, _| {
            b.iter(|| black_box(par::map_range_sequential(modules.len(), row)))
        });
    }
    group.finish();
}

criterion_group!(benches, ext_rows);
criterion_main!(benches);
