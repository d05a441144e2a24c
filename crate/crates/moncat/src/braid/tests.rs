use super::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w(n: usize, text: &str) -> BraidWord {
    BraidWord::parse(n, text).unwrap()
}

#[test]
fn compose_with_empty_is_noop() {
    let a = w(3, "s1 s2");
    let e = BraidWord::identity(3);
    assert_eq!(compose_braids(&a, &e).unwrap(), a);
    assert_eq!(compose_braids(&e, &a).unwrap(), a);
}

#[test]
fn generator_times_inverse_is_trivial() {
    let lhs = w(3, "s1 S1");
    assert!(braids_equal(&lhs, &BraidWord::identity(3)).unwrap());
    assert!(normal_form(&lhs).is_identity());
}

#[test]
fn s1_s2_has_cyclic_permutation() {
    let p = permutation_of(&w(3, "s1 s2"));
    // Final positions hold strands 1, 2, 0.
    assert_eq!(p.0, vec![1, 2, 0]);
}

#[test]
fn strand_mismatch_is_an_error() {
    let a = w(2, "s1");
    let b = w(3, "s1");
    assert!(compose_braids(&a, &b).is_err());
    assert!(braids_equal(&a, &b).is_err());
}

#[test]
fn tensor_shifts_indices() {
    let a = w(2, "s1");
    let t = tensor_braids(&a, &a);
    assert_eq!(t.strands(), 4);
    assert_eq!(t.to_string(), "s1 s3");
}

#[test]
fn tensor_interchange_for_disjoint_supports() {
    let a = w(2, "s1");
    let b = w(3, "s2 s1");
    let left = compose_braids(
        &tensor_braids(&a, &BraidWord::identity(3)),
        &tensor_braids(&BraidWord::identity(2), &b),
    )
    .unwrap();
    let right = compose_braids(
        &tensor_braids(&BraidWord::identity(2), &b),
        &tensor_braids(&a, &BraidWord::identity(3)),
    )
    .unwrap();
    assert!(braids_equal(&left, &right).unwrap());
}

#[test]
fn braid_relation_holds() {
    assert!(braids_equal(&w(3, "s1 s2 s1"), &w(3, "s2 s1 s2")).unwrap());
}

#[test]
fn distinct_generators_differ() {
    assert!(!braids_equal(&w(3, "s1"), &w(3, "s2")).unwrap());
}

#[test]
fn empty_normal_form() {
    let nf = normal_form(&BraidWord::identity(4));
    assert_eq!(nf.inf, 0);
    assert!(nf.factors.is_empty());
    assert_eq!(nf.to_string(), "D^0");
}

#[test]
fn half_twist_normal_form() {
    let nf = normal_form(&w(3, "s1 s2 s1"));
    assert_eq!(nf.inf, 1);
    assert!(nf.factors.is_empty());
    let nf2 = normal_form(&w(2, "s1 s1"));
    assert_eq!(nf2.inf, 2);
    assert!(nf2.factors.is_empty());
}

#[test]
fn negative_letter_normal_form() {
    let nf = normal_form(&w(3, "S1"));
    assert_eq!(nf.inf, -1);
    assert_eq!(nf.factors.len(), 1);
    // Δ^{-1} · (s1 s2) is s1^{-1}.
    assert_eq!(nf.factors[0], permutation_of(&w(3, "s1 s2")));
}

#[test]
fn normal_form_is_idempotent() {
    for text in ["s1 s2 s1 S2", "S1 S2 s1 s2 s1", "s2 s2 s1 s2", "S2 S2 S2"] {
        let nf = normal_form(&w(3, text));
        let again = normal_form(&nf.to_word());
        assert_eq!(nf, again, "word {text}");
    }
}

#[test]
fn far_commutation_holds() {
    assert!(braids_equal(&w(5, "s1 s3"), &w(5, "s3 s1")).unwrap());
    assert!(braids_equal(&w(6, "s1 s4 s2 s5"), &w(6, "s4 s5 s1 s2")).unwrap());
}

#[test]
fn both_defining_relations_on_all_indices_up_to_six_strands() {
    for n in 2..=6usize {
        for i in 1..n {
            for j in 1..n {
                if j + 1 < i {
                    let lhs = BraidWord::new(n, vec![Letter::gen(i), Letter::gen(j)]).unwrap();
                    let rhs = BraidWord::new(n, vec![Letter::gen(j), Letter::gen(i)]).unwrap();
                    assert!(braids_equal(&lhs, &rhs).unwrap(), "far commutation {i},{j}");
                }
            }
            if i + 1 < n {
                let lhs = BraidWord::new(
                    n,
                    vec![Letter::gen(i + 1), Letter::gen(i), Letter::gen(i + 1)],
                )
                .unwrap();
                let rhs = BraidWord::new(
                    n,
                    vec![Letter::gen(i), Letter::gen(i + 1), Letter::gen(i)],
                )
                .unwrap();
                assert!(braids_equal(&lhs, &rhs).unwrap(), "braid relation {i}");
            }
        }
    }
}

fn random_word(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| Letter {
            index: rng.gen_range(1..n),
            inverse: rng.gen_bool(0.5),
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// Applies one random defining-relation rewrite (or free insertion of an
/// inverse pair) somewhere in the word.
fn random_rewrite(rng: &mut impl Rng, word: &BraidWord) -> BraidWord {
    let n = word.strands();
    let mut letters = word.letters().to_vec();
    for _ in 0..30 {
        match rng.gen_range(0..4u8) {
            // Swap a far-commuting adjacent pair with equal signs allowed.
            0 if letters.len() >= 2 => {
                let at = rng.gen_range(0..letters.len() - 1);
                let (a, b) = (letters[at], letters[at + 1]);
                if a.index.abs_diff(b.index) >= 2 {
                    letters.swap(at, at + 1);
                    return BraidWord::new(n, letters).unwrap();
                }
            }
            // Rewrite s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1} (positive or
            // fully inverted).
            1 if letters.len() >= 3 => {
                let at = rng.gen_range(0..letters.len() - 2);
                let (a, b, c) = (letters[at], letters[at + 1], letters[at + 2]);
                if a.index == c.index
                    && b.index == a.index + 1
                    && a.inverse == b.inverse
                    && b.inverse == c.inverse
                {
                    letters[at] = Letter { index: b.index, inverse: a.inverse };
                    letters[at + 1] = Letter { index: a.index, inverse: a.inverse };
                    letters[at + 2] = Letter { index: b.index, inverse: a.inverse };
                    return BraidWord::new(n, letters).unwrap();
                }
                if a.index == c.index
                    && a.index == b.index + 1
                    && a.inverse == b.inverse
                    && b.inverse == c.inverse
                {
                    letters[at] = Letter { index: b.index, inverse: a.inverse };
                    letters[at + 1] = Letter { index: a.index, inverse: a.inverse };
                    letters[at + 2] = Letter { index: b.index, inverse: a.inverse };
                    return BraidWord::new(n, letters).unwrap();
                }
            }
            // Insert s_i s_i^{-1}.
            2 => {
                let at = rng.gen_range(0..=letters.len());
                let index = rng.gen_range(1..n);
                let flip = rng.gen_bool(0.5);
                letters.insert(at, Letter { index, inverse: flip });
                letters.insert(at + 1, Letter { index, inverse: !flip });
                return BraidWord::new(n, letters).unwrap();
            }
            // Delete an adjacent inverse pair.
            _ if letters.len() >= 2 => {
                let at = rng.gen_range(0..letters.len() - 1);
                if letters[at].index == letters[at + 1].index
                    && letters[at].inverse != letters[at + 1].inverse
                {
                    letters.drain(at..at + 2);
                    return BraidWord::new(n, letters).unwrap();
                }
            }
            _ => {}
        }
    }
    word.clone()
}

#[test]
fn thousand_random_rewrites_preserve_normal_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1A1D);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=12);
        let word = random_word(&mut rng, n, len);
        let nf = normal_form(&word);
        let mut rewritten = word.clone();
        for _ in 0..rng.gen_range(1..=4) {
            rewritten = random_rewrite(&mut rng, &rewritten);
        }
        assert_eq!(normal_form(&rewritten), nf, "word {word}");
        assert_eq!(permutation_of(&rewritten), permutation_of(&word));
    }
}

#[test]
fn permutation_respects_composition() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let la = rng.gen_range(0..=8);
        let a = random_word(&mut rng, n, la);
        let lb = rng.gen_range(0..=8);
        let b = random_word(&mut rng, n, lb);
        let ab = compose_braids(&a, &b).unwrap();
        assert_eq!(
            permutation_of(&ab),
            permutation_of(&a).then(&permutation_of(&b))
        );
    }
}

#[test]
fn braiding_word_bases() {
    assert!(braiding_word(0, 4).is_empty());
    assert!(braiding_word(3, 0).is_empty());
    assert_eq!(braiding_word(1, 1).to_string(), "s1");
}

#[test]
fn braiding_word_permutation_is_the_block_swap() {
    let c = braiding_word(2, 3);
    let p = permutation_of(&c);
    // Strand i (0-based) ends at position i+3 for i < 2 and i-2 otherwise.
    let strand_to_pos = p.invert();
    assert_eq!(strand_to_pos.0, vec![3, 4, 0, 1, 2]);
}

#[test]
fn braiding_word_hexagons_up_to_four() {
    for m in 0..=4usize {
        for n in 0..=4usize {
            for p in 0..=4usize {
                // First-argument hexagon: c_{m+n,p} = (id_m ⊗ c_{n,p}) then (c_{m,p} ⊗ id_n).
                let lhs = braiding_word(m + n, p);
                let inner = tensor_braids(&BraidWord::identity(m), &braiding_word(n, p));
                let outer = tensor_braids(&braiding_word(m, p), &BraidWord::identity(n));
                let rhs = compose_braids(&inner, &outer).unwrap();
                assert!(braids_equal(&lhs, &rhs).unwrap(), "first hexagon {m},{n},{p}");
                // Second-argument hexagon: c_{m,n+p} = (c_{m,n} ⊗ id_p) then (id_n ⊗ c_{m,p}).
                let lhs = braiding_word(m, n + p);
                let inner = tensor_braids(&braiding_word(m, n), &BraidWord::identity(p));
                let outer = tensor_braids(&BraidWord::identity(n), &braiding_word(m, p));
                let rhs = compose_braids(&inner, &outer).unwrap();
                assert!(braids_equal(&lhs, &rhs).unwrap(), "second hexagon {m},{n},{p}");
            }
        }
    }
}

#[test]
fn braiding_word_naturality_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let la = rng.gen_range(0..=6);
        let alpha = random_word(&mut rng, m.max(2), la);
        let alpha = if m == 1 { BraidWord::identity(1) } else { alpha };
        let lb = rng.gen_range(0..=6);
        let beta = random_word(&mut rng, n.max(2), lb);
        let beta = if n == 1 { BraidWord::identity(1) } else { beta };
        let c = braiding_word(alpha.strands(), beta.strands());
        let lhs = compose_braids(&tensor_braids(&alpha, &beta), &c).unwrap();
        let rhs = compose_braids(&c, &tensor_braids(&beta, &alpha)).unwrap();
        assert!(braids_equal(&lhs, &rhs).unwrap());
    }
}

// ── framed braids ───────────────────────────────────────────────────────

#[test]
fn framed_identity_is_neutral() {
    let x = FramedBraid {
        word: w(3, "s1 s2"),
        framings: vec![1, -2, 0],
    };
    let e = FramedBraid::identity(3);
    assert!(framed_equal(&framed_compose(&e, &x).unwrap(), &x).unwrap());
    assert!(framed_equal(&framed_compose(&x, &e).unwrap(), &x).unwrap());
}

#[test]
fn framed_inverse_cancels() {
    let x = FramedBraid {
        word: w(4, "s1 s3 S2"),
        framings: vec![2, 0, -1, 5],
    };
    let inv = framed_inverse(&x);
    assert!(framed_equal(&framed_compose(&x, &inv).unwrap(), &FramedBraid::identity(4)).unwrap());
    assert!(framed_equal(&framed_compose(&inv, &x).unwrap(), &FramedBraid::identity(4)).unwrap());
}

#[test]
fn twist_then_crossing_moves_framing_to_strand_one() {
    let t2 = FramedBraid::twist(2, 2).unwrap();
    let sigma = FramedBraid::from_word(w(2, "s1"));
    let composite = framed_compose(&t2, &sigma).unwrap();
    assert_eq!(composite.framings, vec![1, 0]);
}

#[test]
fn ribbon_extra_relation_at_three_strands() {
    // s_{n-1} s_n s_{n-1} s_n = s_n s_{n-1} s_n s_{n-1} with n = 3.
    let n = 3;
    let lhs = evaluate_ribbon_word(n, &[(2, false), (3, false), (2, false), (3, false)]).unwrap();
    let rhs = evaluate_ribbon_word(n, &[(3, false), (2, false), (3, false), (2, false)]).unwrap();
    assert!(framed_equal(&lhs, &rhs).unwrap());
    // Both sides are t_{n-1} t_n σ².
    assert_eq!(lhs.framings, vec![0, 1, 1]);
    assert_eq!(permutation_of(&lhs.word), Permutation::identity(3));
}

#[test]
fn ribbon_presentation_relations_up_to_five_strands() {
    for n in 2..=5usize {
        // Artin relations among s_1 .. s_{n-1}.
        for i in 1..n.saturating_sub(1) {
            let lhs = evaluate_ribbon_word(
                n,
                &[(i, false), (i + 1, false), (i, false)],
            )
            .unwrap();
            let rhs = evaluate_ribbon_word(
                n,
                &[(i + 1, false), (i, false), (i + 1, false)],
            )
            .unwrap();
            assert!(framed_equal(&lhs, &rhs).unwrap(), "braid relation {i} at {n}");
        }
        for i in 1..n {
            for j in 1..n {
                if i.abs_diff(j) >= 2 {
                    let lhs = evaluate_ribbon_word(n, &[(i, false), (j, false)]).unwrap();
                    let rhs = evaluate_ribbon_word(n, &[(j, false), (i, false)]).unwrap();
                    assert!(framed_equal(&lhs, &rhs).unwrap());
                }
            }
        }
        // Far commutation of the twist with low crossings.
        for i in 1..n.saturating_sub(1) {
            let lhs = evaluate_ribbon_word(n, &[(i, false), (n, false)]).unwrap();
            let rhs = evaluate_ribbon_word(n, &[(n, false), (i, false)]).unwrap();
            assert!(framed_equal(&lhs, &rhs).unwrap(), "twist commutes with s{i} at {n}");
        }
        // Extra relation.
        if n >= 2 {
            let lhs = evaluate_ribbon_word(
                n,
                &[(n - 1, false), (n, false), (n - 1, false), (n, false)],
            )
            .unwrap();
            let rhs = evaluate_ribbon_word(
                n,
                &[(n, false), (n - 1, false), (n, false), (n - 1, false)],
            )
            .unwrap();
            assert!(framed_equal(&lhs, &rhs).unwrap(), "extra relation at {n}");
        }
    }
}

// ── truncated category export ───────────────────────────────────────────

#[test]
fn truncation_has_identities_and_generator_powers() {
    let trunc = braid_as_finmoncat(2, 2).unwrap();
    let cat = &trunc.cat;
    assert_eq!(cat.object_count(), 3);
    // Hom(2,2) within two letters: e, s1, S1, s1s1, S1S1 (s1S1 collapses).
    let two = cat.obj("2").unwrap();
    assert_eq!(cat.hom(two, two).len(), 5);
    let zero = cat.obj("0").unwrap();
    assert_eq!(cat.hom(zero, zero).len(), 1);
}

#[test]
fn truncation_has_no_cross_homs() {
    let trunc = braid_as_finmoncat(6, 1).unwrap();
    let cat = &trunc.cat;
    for a in cat.objects() {
        for b in cat.objects() {
            if a != b {
                assert!(cat.hom(a, b).is_empty());
            }
        }
    }
}

#[test]
fn truncation_records_partial_entries_and_validates() {
    let trunc = braid_as_finmoncat(4, 2).unwrap();
    assert!(!trunc.partiality.tensor_objects.is_empty());
    assert!(!trunc.partiality.composition.is_empty());
    let report = trunc
        .cat
        .validate(&crate::fincat::Limits::default())
        .unwrap();
    assert!(report.is_clean(), "{report}");
    assert!(report.skipped > 0);
}

#[test]
fn truncation_refuses_out_of_window_composites() {
    let trunc = braid_as_finmoncat(2, 1).unwrap();
    let cat = &trunc.cat;
    let s1 = cat.mor("b2:s1").unwrap();
    assert!(matches!(
        cat.compose(s1, s1),
        Err(crate::Error::Truncated { .. })
    ));
}

#[test]
fn truncation_round_trips_through_json() {
    let trunc = braid_as_finmoncat(3, 1).unwrap();
    let text = crate::fincat::io::write_category(&trunc.cat, Some(trunc.provenance()));
    let back = crate::fincat::io::parse_category(&text).unwrap();
    assert!(back.is_partial());
    assert_eq!(
        crate::fincat::io::write_category(&back, Some(trunc.provenance())),
        text
    );
}
