use super::*;
use crate::catalog::{self, GroupTable};
use crate::constructions::{center, centralizer_of_object};
use crate::fincat::{FinMonCat, Limits};

fn limits() -> Limits {
    Limits::default()
}

/// Naive restatement of the comonoid axioms used to re-verify every
/// enumerated comonoid independently.
fn comonoid_oracle(base: &FinMonCat, c: &Comonoid) -> bool {
    let i = |o| base.identity(o);
    let t = |f, g| base.tensor_mor(f, g).unwrap();
    let comp = |g, f| base.compose(g, f).unwrap();
    let coassoc = comp(t(i(c.carrier), c.comult), c.comult)
        == comp(t(c.comult, i(c.carrier)), c.comult);
    let left = comp(t(c.counit, i(c.carrier)), c.comult) == i(c.carrier);
    let right = comp(t(i(c.carrier), c.counit), c.comult) == i(c.carrier);
    coassoc && left && right
}

#[test]
fn unit_comonoid_is_always_present() {
    for cat in [
        catalog::discrete_group(&GroupTable::sym3()).unwrap(),
        catalog::divisibility_poset(30).unwrap(),
        catalog::parallel_pair_braided().unwrap(),
    ] {
        let found = enumerate_comonoids(&cat, &limits()).unwrap();
        let unit = Comonoid {
            carrier: cat.unit(),
            comult: cat.identity(cat.unit()),
            counit: cat.identity(cat.unit()),
        };
        assert!(found.comonoids.contains(&unit));
        assert!(found.skipped_carriers.is_empty());
    }
}

#[test]
fn s3_has_exactly_the_trivial_comonoid() {
    let s3 = catalog::discrete_group(&GroupTable::sym3()).unwrap();
    let found = enumerate_comonoids(&s3, &limits()).unwrap();
    assert_eq!(found.comonoids.len(), 1);
    assert_eq!(s3.object_name(found.comonoids[0].carrier), "e");
}

#[test]
fn every_enumerated_comonoid_passes_the_oracle() {
    for cat in [
        catalog::discrete_group(&GroupTable::cyclic(4)).unwrap(),
        catalog::divisibility_poset(30).unwrap(),
        catalog::diamond_m3().unwrap(),
        catalog::two_object_groupoid().unwrap(),
    ] {
        let found = enumerate_comonoids(&cat, &limits()).unwrap();
        for c in &found.comonoids {
            assert!(comonoid_oracle(&cat, c));
        }
    }
}

#[test]
fn d30_comonoid_category_is_the_base() {
    // Every divisor is a comonoid (Δ: x → gcd(x,x), ε: x → 30) and the
    // comonoid category is isomorphic to D30 itself.
    let d30 = catalog::divisibility_poset(30).unwrap();
    let comon = comonoid_category(&d30, &limits()).unwrap();
    assert_eq!(comon.comonoids.len(), d30.object_count());
    assert_eq!(comon.cat.plain().morphism_count(), d30.morphism_count());
    assert!(matches!(comon.cat, ComonCat::Monoidal(_)));
    if let ComonCat::Monoidal(m) = &comon.cat {
        assert!(m.validate(&limits()).unwrap().is_clean());
    }
}

#[test]
fn s3_comonoid_category_is_trivial_and_plain_without_braiding() {
    let s3 = catalog::discrete_group(&GroupTable::sym3()).unwrap();
    let comon = comonoid_category(&s3, &limits()).unwrap();
    assert_eq!(comon.comonoids.len(), 1);
    assert_eq!(comon.cat.plain().morphism_count(), 1);
    assert!(matches!(comon.cat, ComonCat::Plain(_)));
}

#[test]
fn identity_of_the_unit_is_a_comonoid_morphism() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let comon = comonoid_category(&d30, &limits()).unwrap();
    let unit = Comonoid {
        carrier: d30.unit(),
        comult: d30.identity(d30.unit()),
        counit: d30.identity(d30.unit()),
    };
    let at = comon.find(&unit).unwrap();
    assert_eq!(
        comon.forget.apply_mor(comon.cat.plain().identity(at)),
        d30.identity(d30.unit())
    );
}

// ── cofree search ───────────────────────────────────────────────────────

#[test]
fn d30_cofree_exists_over_every_object_with_identity_arrow() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    for v in d30.objects() {
        let outcome = cofree_comonoid(&d30, v, &limits()).unwrap();
        let witness = outcome.witness().expect("cofree object exists");
        assert_eq!(witness.cofree.carrier, v);
        assert_eq!(witness.arrow, d30.identity(v));
    }
}

#[test]
fn s3_cofree_over_unit_found_and_absent_elsewhere() {
    let s3 = catalog::discrete_group(&GroupTable::sym3()).unwrap();
    let e = s3.obj("e").unwrap();
    let outcome = cofree_comonoid(&s3, e, &limits()).unwrap();
    let witness = outcome.witness().expect("cofree over the unit");
    assert_eq!(witness.cofree.carrier, e);
    assert_eq!(witness.arrow, s3.identity(e));

    for v in s3.objects() {
        if v == e {
            continue;
        }
        let outcome = cofree_comonoid(&s3, v, &limits()).unwrap();
        assert!(outcome.witness().is_none());
        assert_eq!(outcome.trace().comma_objects, 0, "empty comma category");
    }
}

#[test]
fn cofree_uniqueness_up_to_comonoid_iso_on_d12() {
    // All verified couniversal arrows over the same object have uniquely
    // isomorphic comonoids: exhaust the alternatives.
    let d12 = catalog::divisibility_poset(12).unwrap();
    let comon = comonoid_category(&d12, &limits()).unwrap();
    let plain = comon.cat.plain();
    for v in d12.objects() {
        let mut winners = Vec::new();
        for (i, c) in comon.comonoids.iter().enumerate() {
            for &u in d12.hom(c.carrier, v) {
                let mut terminal = true;
                'outer: for (j, c2) in comon.comonoids.iter().enumerate() {
                    for &f in d12.hom(c2.carrier, v) {
                        let from = plain.objects().nth(j).unwrap();
                        let to = plain.objects().nth(i).unwrap();
                        let count = plain
                            .hom(from, to)
                            .iter()
                            .filter(|&&fp| {
                                d12.compose(u, comon.forget.apply_mor(fp)).unwrap() == f
                            })
                            .count();
                        if count != 1 {
                            terminal = false;
                            break 'outer;
                        }
                    }
                }
                if terminal {
                    winners.push(i);
                }
            }
        }
        // Pairwise isomorphic in the comonoid category.
        for &i in &winners {
            for &j in &winners {
                let a = plain.objects().nth(i).unwrap();
                let b = plain.objects().nth(j).unwrap();
                let isos: Vec<_> = plain
                    .hom(a, b)
                    .iter()
                    .filter(|&&f| plain.is_iso(f))
                    .collect();
                assert_eq!(isos.len(), 1);
            }
        }
    }
}

// ── generating sets ─────────────────────────────────────────────────────

#[test]
fn posets_are_generated_vacuously() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let check = is_generating_set(d30.base(), &GeneratingSet::new([])).unwrap();
    assert!(check.generating);
}

#[test]
fn parallel_pair_is_separated_by_its_source() {
    let cat = catalog::parallel_pair_plain().unwrap();
    let y = cat.obj("y").unwrap();
    let check = is_generating_set(&cat, &GeneratingSet::new([y])).unwrap();
    assert!(check.generating);
}

#[test]
fn parallel_pair_is_not_separated_by_its_target() {
    let cat = catalog::parallel_pair_plain().unwrap();
    let z = cat.obj("z").unwrap();
    let check = is_generating_set(&cat, &GeneratingSet::new([z])).unwrap();
    assert!(!check.generating);
    let (f, g) = check.witness.unwrap();
    let mut names = [cat.morphism_name(f), cat.morphism_name(g)];
    names.sort();
    assert_eq!(names, ["u", "v"]);
}

#[test]
fn empty_set_lifts_into_discrete_centers() {
    let z4 = catalog::discrete_group(&GroupTable::cyclic(4)).unwrap();
    let con = center(&z4, &limits()).unwrap();
    let lifted = lift_generating_set(&z4, &GeneratingSet::new([]), &con).unwrap();
    assert!(lifted.check.generating);
}

#[test]
fn braided_parallel_pair_generating_set_lifts_to_the_center() {
    let cat = catalog::parallel_pair_braided().unwrap();
    let x = cat.obj("x").unwrap();
    let set = GeneratingSet::new([x]);
    assert!(is_generating_set(cat.base(), &set).unwrap().generating);
    let con = center(&cat, &limits()).unwrap();
    let lifted = lift_generating_set(&cat, &set, &con).unwrap();
    assert!(lifted.check.generating);
    assert_eq!(lifted.members.len(), 1);
}

// ── quotients and epi transfer ──────────────────────────────────────────

#[test]
fn discrete_object_has_one_quotient_class() {
    let s3 = catalog::discrete_group(&GroupTable::sym3()).unwrap();
    let g = s3.obj("t12").unwrap();
    let classes = quotients_of(s3.base(), g, &limits()).unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].members, vec![s3.identity(g)]);
}

#[test]
fn d12_quotients_of_four_are_its_outgoing_arrows() {
    let d12 = catalog::divisibility_poset(12).unwrap();
    let four = d12.obj("4").unwrap();
    let classes = quotients_of(d12.base(), four, &limits()).unwrap();
    let mut reps: Vec<&str> = classes
        .iter()
        .map(|c| d12.morphism_name(c.representative))
        .collect();
    reps.sort();
    assert_eq!(reps, vec!["4->12", "id_4"]);
}

#[test]
fn incomparable_targets_give_distinct_classes() {
    let v = catalog::v_shape().unwrap();
    let a = v.obj("A").unwrap();
    let classes = quotients_of(&v, a, &limits()).unwrap();
    assert_eq!(classes.len(), 3);
    let non_identity: Vec<_> = classes
        .iter()
        .filter(|c| !v.is_identity(c.representative))
        .collect();
    assert_eq!(non_identity.len(), 2);
    assert_ne!(
        v.cod(non_identity[0].representative),
        v.cod(non_identity[1].representative)
    );
}

#[test]
fn groupoid_quotients_collapse_isomorphic_targets() {
    let g = catalog::two_object_groupoid().unwrap();
    let a = g.obj("A").unwrap();
    let classes = quotients_of(g.base(), a, &limits()).unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].members.len(), 2);
}

#[test]
fn epi_transfer_holds_for_equal_pairs() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let x = d30.obj("6").unwrap();
    let con = centralizer_of_object(&d30, x, &limits()).unwrap();
    for p in con.cat.morphisms().take(10) {
        let outcome = epi_transfer_check(&d30, &con, p, p, &limits()).unwrap();
        assert!(outcome.holds);
    }
}

#[test]
fn epi_transfer_holds_across_d30_centralizers() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    for x in d30.objects().take(4) {
        let con = centralizer_of_object(&d30, x, &limits()).unwrap();
        let ccat = con.cat.base();
        for p in con.cat.morphisms() {
            for q in con.cat.morphisms() {
                if ccat.dom(p) != ccat.dom(q) {
                    continue;
                }
                // Poset: equivalent iff equal codomains.
                if ccat.cod(p) != ccat.cod(q) {
                    continue;
                }
                let outcome = epi_transfer_check(&d30, &con, p, q, &limits()).unwrap();
                assert!(outcome.holds);
            }
        }
    }
}

#[test]
fn epi_transfer_on_the_groupoid_checks_nontrivial_isos() {
    let g = catalog::two_object_groupoid().unwrap();
    let x = g.obj("B").unwrap();
    let con = centralizer_of_object(&g, x, &limits()).unwrap();
    let ccat = con.cat.base();
    let mut nontrivial = 0;
    for p in con.cat.morphisms() {
        for q in con.cat.morphisms() {
            if ccat.dom(p) != ccat.dom(q) {
                continue;
            }
            match epi_transfer_check(&g, &con, p, q, &limits()) {
                Ok(outcome) => {
                    assert!(outcome.holds);
                    if ccat.cod(p) != ccat.cod(q) {
                        nontrivial += 1;
                    }
                }
                Err(crate::Error::Precondition(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    assert!(nontrivial > 0, "the groupoid must exercise non-identity θ");
}
