//! Property tests over randomized inputs: Garside normal forms are stable
//! under free insertion and relation rewrites, the strand permutation is
//! a homomorphism invariant, lattice colimits agree with the arithmetic
//! join, and category files round-trip.

use moncat::braid::{
    braids_equal, compose_braids, normal_form, permutation_of, tensor_braids, BraidWord, Letter,
};
use moncat::catalog;
use moncat::colimits::{colimit, ColimitOutcome};
use moncat::fincat::{io, Diagram, Limits};
use proptest::prelude::*;

fn arb_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        proptest::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            BraidWord::new(
                n,
                ls.into_iter()
                    .map(|(index, inverse)| Letter { index, inverse })
                    .collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn normal_form_reproduces_itself(word in arb_word(6, 14)) {
        let nf = normal_form(&word);
        prop_assert_eq!(normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn equal_words_have_equal_permutations(word in arb_word(6, 10), extra in arb_word(6, 4)) {
        // word · extra · extra^{-1} is equal to word; permutations agree.
        if word.strands() == extra.strands() {
            let padded = compose_braids(
                &compose_braids(&word, &extra).unwrap(),
                &extra.inverse(),
            ).unwrap();
            prop_assert!(braids_equal(&word, &padded).unwrap());
            prop_assert_eq!(permutation_of(&word), permutation_of(&padded));
        }
    }

    #[test]
    fn permutation_is_a_stacking_homomorphism(a in arb_word(5, 8), b in arb_word(5, 8)) {
        if a.strands() == b.strands() {
            let ab = compose_braids(&a, &b).unwrap();
            prop_assert_eq!(
                permutation_of(&ab),
                permutation_of(&a).then(&permutation_of(&b))
            );
        }
    }

    #[test]
    fn tensor_keeps_disjoint_supports_independent(a in arb_word(4, 6), b in arb_word(4, 6)) {
        let lhs = compose_braids(
            &tensor_braids(&a, &BraidWord::identity(b.strands())),
            &tensor_braids(&BraidWord::identity(a.strands()), &b),
        ).unwrap();
        let rhs = compose_braids(
            &tensor_braids(&BraidWord::identity(a.strands()), &b),
            &tensor_braids(&a, &BraidWord::identity(b.strands())),
        ).unwrap();
        prop_assert!(braids_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn lattice_colimits_agree_with_the_join(
        n in prop::sample::select(vec![12u64, 18, 30, 60]),
        picks in proptest::collection::vec(0usize..8, 1..=3),
    ) {
        let cat = catalog::divisibility_poset(n).unwrap();
        let divs = catalog::divisors(n);
        let chosen: Vec<u64> = picks.iter().map(|&i| divs[i % divs.len()]).collect();
        let objs: Vec<_> = chosen
            .iter()
            .map(|d| cat.obj(&d.to_string()).unwrap())
            .collect();
        let diagram = Diagram::discrete(cat.base(), &objs).unwrap();
        let join = catalog::lattice_join(&chosen);
        match colimit(cat.base(), &diagram, &Limits::default()).unwrap() {
            ColimitOutcome::Found(col) => {
                prop_assert!(divs.contains(&join));
                prop_assert_eq!(cat.object_name(col.cocone.apex), join.to_string());
            }
            ColimitOutcome::NotFound => prop_assert!(!divs.contains(&join)),
        }
    }

    #[test]
    fn category_files_round_trip(which in 0usize..5) {
        let cat = match which {
            0 => catalog::discrete_group(&catalog::GroupTable::sym3()).unwrap(),
            1 => catalog::discrete_group(&catalog::GroupTable::dihedral4()).unwrap(),
            2 => catalog::divisibility_poset(30).unwrap(),
            3 => catalog::diamond_m3().unwrap(),
            _ => catalog::two_object_groupoid().unwrap(),
        };
        let text = io::write_category(&cat, None);
        let back = io::parse_category(&text).unwrap();
        prop_assert_eq!(io::write_category(&back, None), text);
    }
}
