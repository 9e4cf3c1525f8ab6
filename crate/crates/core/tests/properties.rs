mod common;

use common::*;
use ncchains::noncross::{interval_refinement_closed, NcLattice};
use ncchains::partition::interval_chains;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn interval_flats_form_a_boolean_lattice() {
    for label in SMALL_GROUPS.iter().chain(&["A5", "A2xA1"]) {
        let r = rs(label);
        let n_fact: u128 = (1..=r.rank() as u128).product();
        assert_eq!(interval_chains(&r), (1 << r.rank(), n_fact), "{label}");
    }
}

#[test]
fn interval_refinements_stay_noncrossing() {
    for label in SMALL_GROUPS.iter().filter(|l| rs(l).rank() <= 3).chain(&["A2xA1"]) {
        let r = rs(label);
        for c in coxeter_elements(&r) {
            assert!(interval_refinement_closed(&NcLattice::build(&r, &c).unwrap()), "{label}");
        }
    }
}

#[test]
fn fix_dimension_complements_reflection_length() {
    for label in ["A3", "A4", "A5", "B3", "B4", "D4", "H3", "F4", "A2xB2"] {
        let r = rs(label);
        let lengths = r.reflection_lengths(2000).unwrap();
        let mut elements: Vec<_> = lengths.keys().cloned().collect();
        elements.sort_by(|a, b| a.perm().cmp(b.perm()));
        let mut rng = ChaCha8Rng::seed_from_u64(label.len() as u64);
        for _ in 0..10_000 {
            let w = elements.choose(&mut rng).unwrap();
            let fix = r.fix_dim(w).unwrap();
            assert_eq!(fix + lengths[w], r.rank(), "{label}");
            assert_eq!(r.absolute_length(w), lengths[w], "{label}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_words_respect_complementarity(word in proptest::collection::vec(0usize..24, 0..10)) {
        let r = rs("F4");
        let n = r.positive_count();
        let w = r.reflection_product(&word.iter().map(|k| k % n).collect::<Vec<_>>());
        let len = r.absolute_length(&w);
        prop_assert_eq!(r.fix_dim(&w).unwrap() + len, 4);
        prop_assert!(len <= word.len());
        prop_assert_eq!(len % 2, word.len() % 2);
    }

    #[test]
    fn chain_words_multiply_to_c(idx in 0usize..1000) {
        let r = rs("B3");
        let c = &coxeter_elements(&r)[idx % 4];
        let lat = NcLattice::build(&r, c).unwrap();
        let chains: Vec<_> = lat.chains(100).unwrap().collect();
        let ch = &chains[idx % chains.len()];
        prop_assert_eq!(&r.reflection_product(&ch.word), c);
        let found = lat.chain_from_word(&ch.word);
        prop_assert_eq!(found.as_ref(), Some(ch));
    }
}
