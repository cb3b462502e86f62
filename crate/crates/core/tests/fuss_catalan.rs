use std::sync::Arc;

use replika::algebra::replicated_algebra;
use replika::cluster::{ClusterCategory, DerivedModel};
use replika::linalg::DEFAULT_PRIME;
use replika::quiver::Quiver;
use replika::tilting::{enumerate_tilting, Catalog};

/// `prod (m h + e + 1) / (e + 1)` over the exponents `e` of the root system.
fn fuss_catalan(coxeter: u64, exponents: &[u64], m: u64) -> u64 {
    let num: u64 = exponents.iter().map(|e| m * coxeter + e + 1).product();
    let den: u64 = exponents.iter().map(|e| e + 1).product();
    assert_eq!(num % den, 0);
    num / den
}

fn cluster_count(q: &Quiver, m: usize) -> usize {
    let a0 = replicated_algebra(q, 0, DEFAULT_PRIME).unwrap();
    let model = Arc::new(DerivedModel::new(&a0).unwrap());
    ClusterCategory::new(model, m)
        .unwrap()
        .cluster_tilting_objects()
        .len()
}

fn tilting_count(q: &Quiver, m: usize) -> usize {
    let cat = Catalog::new(&replicated_algebra(q, m, DEFAULT_PRIME).unwrap()).unwrap();
    enumerate_tilting(&cat, Some(m)).unwrap().len()
}

#[test]
fn cluster_side_matches_closed_form() {
    for m in 1..=3 {
        for n in 2..=5usize {
            let exps: Vec<u64> = (1..=n as u64).collect();
            assert_eq!(
                cluster_count(&Quiver::linear_a(n), m) as u64,
                fuss_catalan(n as u64 + 1, &exps, m as u64),
                "A{n} m={m}"
            );
        }
        assert_eq!(
            cluster_count(&Quiver::d4(), m) as u64,
            fuss_catalan(6, &[1, 3, 3, 5], m as u64),
            "D4 m={m}"
        );
    }
}

#[test]
fn module_side_a3_a4() {
    assert_eq!(tilting_count(&Quiver::linear_a(3), 1), 14);
    assert_eq!(tilting_count(&Quiver::linear_a(3), 2), 55);
    assert_eq!(tilting_count(&Quiver::linear_a(4), 1), 42);
}

#[test]
fn module_side_d4() {
    assert_eq!(tilting_count(&Quiver::d4(), 1), 50);
    assert_eq!(tilting_count(&Quiver::d4(), 2), 336);
}
