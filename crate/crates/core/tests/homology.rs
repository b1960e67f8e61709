mod common;

use braidkh_core::homology::{kh, skh};
use braidkh_core::{AnnularClosureDiagram, BraidWord, Degree, GradedDims};
use common::{fixtures, oracle_homology, random_word, word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn skh_of(w: &BraidWord) -> GradedDims {
    skh(&AnnularClosureDiagram::new(w)).unwrap()
}

fn kh_of(w: &BraidWord) -> GradedDims {
    kh(&AnnularClosureDiagram::new(w)).unwrap()
}

fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
        proptest::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

#[test]
fn fixtures_match_brute_force_oracle() {
    for (name, w) in fixtures() {
        assert_eq!(skh_of(&w), oracle_homology(&w, true), "SKh of {name}");
        assert_eq!(kh_of(&w), oracle_homology(&w, false), "Kh of {name}");
    }
}

#[test]
fn one_crossing_regression() {
    let w = word(2, &[1]);
    let expected: GradedDims = [(0, 3, 2), (0, 1, 0), (1, 3, 0), (0, -1, -2)]
        .into_iter()
        .map(|(i, j, k)| (Degree::triple(i, j, k), 1))
        .collect();
    assert_eq!(oracle_homology(&w, true), expected);
    assert_eq!(skh_of(&w), expected);
    let unknot: GradedDims = [(0, 1), (0, -1)]
        .into_iter()
        .map(|(i, j)| (Degree::pair(i, j), 1))
        .collect();
    assert_eq!(kh_of(&w), unknot);
}

#[test]
fn right_trefoil_f2_table() {
    // Published F2 Khovanov homology of the right-handed trefoil.
    let expected: GradedDims = [(0, 1), (0, 3), (2, 5), (2, 7), (3, 7), (3, 9)]
        .into_iter()
        .map(|(i, j)| (Degree::pair(i, j), 1))
        .collect();
    let w = word(2, &[1, 1, 1]);
    assert_eq!(oracle_homology(&w, false), expected);
    assert_eq!(kh_of(&w), expected);
    // The left trefoil is its mirror.
    assert_eq!(kh_of(&w.mirror()), expected.negated(false));
}

#[test]
fn trivial_braid_totals() {
    for n in 1..=6 {
        let h = skh_of(&BraidWord::trivial(n));
        assert_eq!(h.total(), 1 << n);
        assert_eq!(h.homological_support(), [0]);
    }
}

#[test]
fn mirror_symmetry_negates_all_three_gradings() {
    // Of the two candidate conventions only the one negating k holds.
    let w = word(3, &[1, 1, -2]);
    let (h, m) = (skh_of(&w), skh_of(&w.mirror()));
    assert_eq!(m, h.negated(true));
    assert_ne!(m, h.negated(false));
}

#[test]
fn rank_inequality_and_euler_characteristic_on_fixtures() {
    for (name, w) in fixtures() {
        let (s, k) = (skh_of(&w), kh_of(&w));
        let collapsed = s.forget_k();
        for (d, dim) in k.iter() {
            assert!(dim <= collapsed.get(d), "{name}: rank inequality at {d:?}");
        }
        assert_eq!(s.euler_characteristic(), k.euler_characteristic(), "{name}");
    }
}

#[test]
fn seeded_random_words_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=6);
        let w = random_word(&mut rng, n, len);
        assert_eq!(skh_of(&w), oracle_homology(&w, true), "SKh of {w}");
        assert_eq!(kh_of(&w), oracle_homology(&w, false), "Kh of {w}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reverse_invariance(w in arb_word(4, 7)) {
        prop_assert_eq!(skh_of(&w), skh_of(&w.reverse()));
    }

    #[test]
    fn conjugation_invariance(w in arb_word(4, 5), u in proptest::collection::vec((1i32..4, any::<bool>()), 0..3)) {
        let n = w.strands() as i32;
        let letters: Vec<i32> = u
            .into_iter()
            .map(|(g, neg)| {
                let g = (g - 1) % (n - 1) + 1;
                if neg { -g } else { g }
            })
            .collect();
        let u = BraidWord::new(w.strands(), letters).unwrap();
        let conjugate = u.concat(&w).unwrap().concat(&u.inverse()).unwrap();
        prop_assert_eq!(skh_of(&w), skh_of(&conjugate));
    }

    #[test]
    fn mirror_symmetry(w in arb_word(4, 7)) {
        prop_assert_eq!(skh_of(&w.mirror()), skh_of(&w).negated(true));
    }

    #[test]
    fn rank_inequality_and_euler_characteristic(w in arb_word(4, 7)) {
        let (s, k) = (skh_of(&w), kh_of(&w));
        let collapsed = s.forget_k();
        for (d, dim) in k.iter() {
            prop_assert!(dim <= collapsed.get(d));
        }
        prop_assert_eq!(s.euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn free_reduction_preserves_homology(w in arb_word(3, 8)) {
        prop_assert_eq!(skh_of(&w), skh_of(&w.free_reduce()));
    }
}
