use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use ytab::bijections as bij;
use ytab::bk::bk;
use ytab::oracles::{naive_bk, naive_jdt, naive_rsk, naive_switch, rsk_inverse};
use ytab::sample::{random_shape, random_tableau};
use ytab::{IntMatrix, Tableau};

fn tableau(seed: u64, size: usize, rows: usize, k: usize) -> Option<Tableau> {
    let mut rng = StdRng::seed_from_u64(seed);
    let shape = random_shape(size, rows, &mut rng);
    random_tableau(&shape, k, &mut rng).ok()
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..6).prop_flat_map(|k| {
        proptest::collection::vec(0i64..4, k * k)
            .prop_map(move |d| IntMatrix::from_fn(k, |i, j| d[i * k + j]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bk_matches_the_filling_oracle(seed: u64, r in 1usize..8) {
        if let Some(t) = tableau(seed, 18, 6, 8) {
            prop_assert_eq!(bk(&t, r).unwrap(), naive_bk(&t, r).unwrap());
            prop_assert_eq!(bk(&bk(&t, r).unwrap(), r).unwrap(), t);
        }
    }

    #[test]
    fn rectification_matches_sliding(seed: u64) {
        if let Some(t) = tableau(seed, 16, 5, 6) {
            prop_assert_eq!(bij::psi(&t).unwrap(), naive_jdt(&t));
        }
    }

    #[test]
    fn evacuation_is_an_involution(seed: u64) {
        if let Some(t) = tableau(seed, 20, 6, 7) {
            prop_assert_eq!(bij::xi(&bij::xi(&t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn switching_matches_the_oracle_and_inverts(seed: u64, cut in 0usize..=6) {
        if let Some(t) = tableau(seed, 16, 5, 6) {
            let (low, high) = t.split_at_value(cut);
            let high = high.shift_values(-(cut as i64)).unwrap();
            let (a1, b1) = bij::zeta(&low, &high).unwrap();
            prop_assert_eq!((a1.clone(), b1.clone()), naive_switch(&low, &high).unwrap());
            prop_assert_eq!(bij::zeta(&a1, &b1).unwrap(), (low, high));
        }
    }

    #[test]
    fn rsk_matches_insertion_and_inverts(m in matrix()) {
        let (b, a) = bij::rsk(&m).unwrap();
        prop_assert_eq!((b.clone(), a.clone()), naive_rsk(&m));
        prop_assert_eq!(rsk_inverse(&b, &a).unwrap(), m);
    }
}
