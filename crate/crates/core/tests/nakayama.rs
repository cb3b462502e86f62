use replika::algebra::replicated_algebra;
use replika::decompose::is_indecomposable;
use replika::linalg::DEFAULT_PRIME;
use replika::quiver::Quiver;
use replika::tilting::Catalog;

// Linear A_n^(m) is Nakayama with Kupisch series (n+1, …, n+1, n, …, 1),
// n+1 repeated m·n times; the indecomposables are its intervals.
fn kupisch_count(n: usize, m: usize) -> usize {
    m * n * (n + 1) + n * (n + 1) / 2
}

#[test]
fn catalog_sizes_match_kupisch_series() {
    for (n, m) in [(2, 1), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1), (4, 2)] {
        let cat = Catalog::new(&replicated_algebra(&Quiver::linear_a(n), m, DEFAULT_PRIME).unwrap()).unwrap();
        assert_eq!(cat.len(), kupisch_count(n, m), "A{n} m={m}");
        let proj_inj = cat.projective_injectives().len();
        assert_eq!(proj_inj, m * n, "A{n} m={m}");
        for e in cat.entries() {
            assert!(is_indecomposable(&e.module).unwrap());
            // uniserial: each interval is determined by its support
            assert!(e.module.dims().iter().all(|&d| d <= 1));
        }
    }
}
