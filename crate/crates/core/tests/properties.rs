use std::sync::OnceLock;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use replika::algebra::replicated_algebra;
use replika::cluster::{DbStalk, DerivedModel};
use replika::decompose::decompose;
use replika::linalg::{FpMatrix, DEFAULT_PRIME};
use replika::quiver::Quiver;
use replika::tilting::Catalog;

const P: u32 = 101;

fn matrix() -> impl Strategy<Value = FpMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
        // bias towards zeros so low ranks show up
        prop::collection::vec(prop_oneof![3 => Just(0u32), 2 => 0..P], r * c)
            .prop_map(move |d| FpMatrix::from_vec(r, c, P, d).unwrap())
    })
}

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| {
        Catalog::new(&replicated_algebra(&Quiver::linear_a(3), 1, DEFAULT_PRIME).unwrap()).unwrap()
    })
}

fn model() -> &'static DerivedModel {
    static MODEL: OnceLock<DerivedModel> = OnceLock::new();
    MODEL.get_or_init(|| {
        DerivedModel::new(&replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap())
            .unwrap()
    })
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
    loop {
        let data = (0..n * n)
            .map(|_| rng.gen_range(0..DEFAULT_PRIME))
            .collect();
        let m = FpMatrix::from_vec(n, n, DEFAULT_PRIME, data).unwrap();
        if m.is_invertible() {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(a in matrix()) {
        let k = a.kernel_basis();
        prop_assert_eq!(a.rank() + k.rows(), a.rows());
        prop_assert!(k.mul(&a).is_zero());
    }

    #[test]
    fn rref_is_idempotent(a in matrix()) {
        let e = a.row_reduce();
        let again = e.reduced.row_reduce();
        prop_assert_eq!(&again.reduced, &e.reduced);
        prop_assert_eq!(again.pivots, e.pivots);
        prop_assert_eq!(e.rank, a.rank());
    }

    #[test]
    fn solve_is_exact(a in matrix(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x: Vec<u32> = (0..a.rows()).map(|_| rng.gen_range(0..P)).collect();
        let b = a.apply_row(&x);
        let y = a.solve_linear(&b).unwrap().expect("b lies in the row space");
        prop_assert_eq!(a.apply_row(&y), b);
    }

    #[test]
    fn cm_normalize_is_idempotent_and_orbit_invariant(module in 0usize..6, shift in -6i64..=6, z in -3i64..=3, m in 1usize..=2) {
        let model = model();
        let x = DbStalk { module, shift };
        let n = model.cm_normalize(x, m).unwrap();
        prop_assert_eq!(model.cm_normalize(n.0, m).unwrap(), n);
        prop_assert_eq!(model.cm_normalize(model.f_power(x, z, m), m).unwrap(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn decomposition_recovers_summands(idx in prop::collection::vec(0usize..18, 1..4), seed in any::<u64>()) {
        let cat = catalog();
        let sum = cat.direct_sum(&idx).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let change: Vec<FpMatrix> = sum.dims().iter().map(|&d| random_invertible(d, &mut rng)).collect();
        let hidden = sum.conjugate(&change).unwrap();
        let mut want = idx.clone();
        want.sort_unstable();
        for s in [seed, seed.wrapping_add(1)] {
            let parts = decompose(&hidden, s).unwrap();
            let mut got: Vec<usize> = parts.iter().map(|x| cat.require_index(x).unwrap()).collect();
            got.sort_unstable();
            prop_assert_eq!(&got, &want);
        }
    }
}
