use cluster_core::graph::{self, Bounds, CanonicalSeed, Verdict};
use cluster_core::roots::{RootSystem, Sign};
use cluster_core::verify::random_exchange_matrix;
use cluster_core::Seed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix_seed() -> impl Strategy<Value = u64> {
    any::<u64>()
}

fn dirs(n: usize, len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..n, 0..=len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_mutation_is_an_involution(s in matrix_seed(), path in dirs(8, 6)) {
        let b = random_exchange_matrix(&mut ChaCha8Rng::seed_from_u64(s), 5, 2);
        let mut m = b.clone();
        for &k in &path {
            let k = b.ex()[k % b.n()];
            let once = m.mutate(k).unwrap();
            once.check_invariants().unwrap();
            prop_assert_eq!(once.mutate(k).unwrap(), m.clone());
            m = once;
        }
    }

    #[test]
    fn seed_mutation_is_an_involution(s in matrix_seed(), path in dirs(8, 3)) {
        let b = random_exchange_matrix(&mut ChaCha8Rng::seed_from_u64(s), 3, 1);
        let mut seed = Seed::initial(b);
        for &k in &path {
            let k = seed.matrix().ex()[k % seed.n()];
            let next = seed.mutate(k).unwrap();
            prop_assert_eq!(next.mutate(k).unwrap(), seed.clone());
            seed = next;
        }
    }

    #[test]
    fn canonical_key_ignores_relabeling(s in matrix_seed(), path in dirs(8, 3), shuffle in any::<u64>()) {
        use rand::seq::SliceRandom;
        let b = random_exchange_matrix(&mut ChaCha8Rng::seed_from_u64(s), 4, 1);
        let seed = Seed::initial(b);
        let seed = seed
            .mutate_path(&path.iter().map(|&k| seed.matrix().ex()[k % seed.n()]).collect::<Vec<_>>())
            .unwrap();
        let mut perm: Vec<usize> = (0..seed.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle));
        let a = CanonicalSeed::new(&seed);
        let b = CanonicalSeed::new(&seed.permute_exchangeable(&perm));
        prop_assert_eq!(a.key(), b.key());
        prop_assert_eq!(a.seed(), b.seed());
    }

    #[test]
    fn classification_is_mutation_invariant(path in dirs(4, 8)) {
        let mut m = RootSystem::from_label("D4").unwrap().distinguished_seed().matrix().clone();
        for &k in &path {
            m = m.mutate(k).unwrap();
        }
        let r = graph::classify_finite_type(&m.principal_part(), Bounds::default()).unwrap();
        prop_assert_eq!(r.verdict.to_string(), "FiniteType D4");
    }
}

#[test]
fn tau_maps_are_involutions() {
    for label in ["A1", "A4", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let rs = RootSystem::from_label(label).unwrap();
        for i in 0..rs.almost_positive_roots().len() {
            for s in [Sign::Plus, Sign::Minus] {
                assert_eq!(rs.tau(s, rs.tau(s, i)), i, "{label}");
            }
        }
    }
}

#[test]
fn affine_and_wild_types_are_infinite() {
    let kronecker = vec![vec![0, 2], vec![-2, 0]];
    let r = graph::classify_finite_type(&kronecker, Bounds::default()).unwrap();
    assert_eq!(r.verdict, Verdict::InfiniteType);
    // Oriented 3-cycle with double arrows: mutation finite but infinite type.
    let markov = vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]];
    let r = graph::classify_finite_type(&markov, Bounds::default()).unwrap();
    assert_eq!(r.verdict, Verdict::InfiniteType);
}

#[test]
fn rank2_graph_sizes() {
    for ((b, c), seeds) in [((1, 1), 5), ((1, 2), 6), ((2, 1), 6), ((1, 3), 8), ((3, 1), 8)] {
        let g = graph::explore(&Seed::rank2(b, c).unwrap(), Bounds::default()).unwrap();
        assert!(g.is_complete());
        assert_eq!(g.len(), seeds, "b={b} c={c}");
    }
    let g = graph::explore(&Seed::rank2(2, 2).unwrap(), Bounds::seeds(30)).unwrap();
    assert!(!g.is_complete());
}
