use super::*;
use crate::catalog::{self, GroupTable};
use crate::constructions::{center, centralizer_of_morphism, centralizer_of_object, weak_center, Construction};
use crate::fincat::{Diagram, FinMonCat, Limits, Obj, TensorFunctor};

fn limits() -> Limits {
    Limits::default()
}

fn obj(cat: &FinMonCat, name: &str) -> Obj {
    cat.obj(name).unwrap()
}

/// Constructed object index with the given carrier (unique in the poset
/// and discrete test cases used here).
fn by_carrier(con: &Construction, base: &FinMonCat, name: &str) -> Obj {
    let want = base.obj(name).unwrap();
    let hits: Vec<Obj> = con
        .cat
        .objects()
        .filter(|&o| con.carrier(o) == want)
        .collect();
    assert_eq!(hits.len(), 1, "carrier {name} not unique");
    hits[0]
}

#[test]
fn identity_diagram_colimit_is_the_object_itself() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let a = obj(&d30, "6");
    let diagram = Diagram::constant(d30.base(), a).unwrap();
    let col = colimit(d30.base(), &diagram, &limits())
        .unwrap()
        .found()
        .unwrap();
    assert_eq!(col.cocone.apex, a);
    assert_eq!(col.cocone.legs, vec![d30.identity(a)]);
}

#[test]
fn d12_discrete_colimit_is_the_join() {
    let d12 = catalog::divisibility_poset(12).unwrap();
    let diagram = Diagram::discrete(d12.base(), &[obj(&d12, "4"), obj(&d12, "6")]).unwrap();
    let col = colimit(d12.base(), &diagram, &limits())
        .unwrap()
        .found()
        .unwrap();
    assert_eq!(d12.object_name(col.cocone.apex), "12");
    assert_eq!(catalog::lattice_join(&[4, 6]), 12);
}

#[test]
fn lattice_colimits_match_the_join_oracle() {
    for n in [12u64, 30, 60] {
        let cat = catalog::divisibility_poset(n).unwrap();
        let divs = catalog::divisors(n);
        for &a in &divs {
            for &b in &divs {
                let diagram = Diagram::discrete(
                    cat.base(),
                    &[obj(&cat, &a.to_string()), obj(&cat, &b.to_string())],
                )
                .unwrap();
                let col = colimit(cat.base(), &diagram, &limits()).unwrap().found();
                let join = catalog::lattice_join(&[a, b]);
                if divs.contains(&join) {
                    let col = col.expect("join exists in the lattice");
                    assert_eq!(cat.object_name(col.cocone.apex), join.to_string());
                } else {
                    assert!(col.is_none());
                }
            }
        }
    }
}

#[test]
fn colimit_uniqueness_up_to_unique_iso() {
    // Every universal cocone of the same diagram factors through every
    // other by a unique isomorphism.
    let cats = vec![
        catalog::divisibility_poset(12).unwrap(),
        catalog::discrete_group(&GroupTable::cyclic(4)).unwrap(),
        catalog::two_object_groupoid().unwrap(),
    ];
    for cat in &cats {
        let objs: Vec<Obj> = cat.objects().collect();
        for &a in objs.iter().take(3) {
            let diagram = Diagram::discrete(cat.base(), &[a]).unwrap();
            let cocones = super::search::all_cocones(cat.base(), &diagram).unwrap();
            let universal: Vec<_> = cocones
                .iter()
                .filter(|c| {
                    universality(cat.base(), &diagram, c)
                        .unwrap()
                        .is_some()
                })
                .collect();
            for u in &universal {
                for v in &universal {
                    let med_uv = universality(cat.base(), &diagram, u)
                        .unwrap()
                        .unwrap()
                        .get(*v)
                        .copied()
                        .unwrap();
                    if u != v || med_uv != cat.identity(u.apex) {
                        assert!(cat.is_iso(med_uv));
                    }
                }
            }
        }
    }
}

#[test]
fn mediator_of_own_cocone_is_identity() {
    let d12 = catalog::divisibility_poset(12).unwrap();
    let diagram = Diagram::discrete(d12.base(), &[obj(&d12, "4"), obj(&d12, "6")]).unwrap();
    let col = colimit(d12.base(), &diagram, &limits())
        .unwrap()
        .found()
        .unwrap();
    let g = mediating_morphism(d12.base(), &diagram, &col, &col.cocone).unwrap();
    assert_eq!(g, d12.identity(col.cocone.apex));
}

#[test]
fn mediator_to_a_larger_multiple_is_the_divisibility_arrow() {
    let d60 = catalog::divisibility_poset(60).unwrap();
    let diagram = Diagram::discrete(d60.base(), &[obj(&d60, "4"), obj(&d60, "6")]).unwrap();
    let col = colimit(d60.base(), &diagram, &limits())
        .unwrap()
        .found()
        .unwrap();
    assert_eq!(d60.object_name(col.cocone.apex), "12");
    let competing = Cocone {
        apex: obj(&d60, "60"),
        legs: vec![d60.mor("4->60").unwrap(), d60.mor("6->60").unwrap()],
    };
    let g = mediating_morphism(d60.base(), &diagram, &col, &competing).unwrap();
    assert_eq!(d60.morphism_name(g), "12->60");
}

#[test]
fn tensoring_with_the_unit_is_cocontinuous() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let p_unit = TensorFunctor::left(d30.unit());
    let diagrams = vec![
        Diagram::discrete(d30.base(), &[obj(&d30, "2"), obj(&d30, "5")]).unwrap(),
        Diagram::single_arrow(d30.base(), d30.mor("2->10").unwrap()).unwrap(),
    ];
    let report = is_cocontinuous(&d30, &p_unit, &diagrams, &limits()).unwrap();
    assert!(report.cocontinuous);
    assert!(report.skipped.is_empty());
}

#[test]
fn gcd_functors_are_cocontinuous_on_d30() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let mut diagrams = Vec::new();
    let objs: Vec<Obj> = d30.objects().collect();
    for &a in &objs {
        for &b in &objs {
            diagrams.push(Diagram::discrete(d30.base(), &[a, b]).unwrap());
        }
    }
    let p6 = TensorFunctor::left(obj(&d30, "6"));
    let report = is_cocontinuous(&d30, &p6, &diagrams, &limits()).unwrap();
    assert!(report.cocontinuous, "gcd distributes over lcm in D30");
}

#[test]
fn diamond_lattice_meet_is_not_cocontinuous() {
    let m3 = catalog::diamond_m3().unwrap();
    let diagram = Diagram::discrete(m3.base(), &[obj(&m3, "b"), obj(&m3, "c")]).unwrap();
    let p_a = TensorFunctor::left(obj(&m3, "a"));
    let report = is_cocontinuous(&m3, &p_a, &[diagram], &limits()).unwrap();
    assert!(!report.cocontinuous);
    assert_eq!(report.witness, Some(0));
}

// ── inheritance ─────────────────────────────────────────────────────────

#[test]
fn constant_diagram_in_zh_returns_the_object() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let h = d30.mor("1->30").unwrap();
    let zh = centralizer_of_morphism(&d30, h, &limits()).unwrap();
    let at = by_carrier(&zh, &d30, "6");
    let diagram = Diagram::constant(zh.cat.base(), at).unwrap();
    let inherited = colimit_in_centralizer_mor(&d30, &zh, &diagram, &limits()).unwrap();
    assert_eq!(inherited.apex, at);
    assert_eq!(inherited.colimit.cocone.legs, vec![zh.cat.identity(at)]);
}

#[test]
fn zh_inherits_the_lcm_colimit_on_d30() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let h = d30.mor("1->30").unwrap();
    let zh = centralizer_of_morphism(&d30, h, &limits()).unwrap();
    let two = by_carrier(&zh, &d30, "2");
    let five = by_carrier(&zh, &d30, "5");
    let diagram = Diagram::discrete(zh.cat.base(), &[two, five]).unwrap();
    let inherited = colimit_in_centralizer_mor(&d30, &zh, &diagram, &limits()).unwrap();
    assert_eq!(d30.object_name(zh.carrier(inherited.apex)), "10");
    let crate::constructions::ConstructedObject::AgainstMorphism(data) = &inherited.apex_data
    else {
        panic!()
    };
    assert!(d30.is_identity(data.alpha));
    assert!(d30.is_identity(data.beta));
    // The underlying cocone is the base colimit: identical apex and legs.
    assert_eq!(
        zh.carrier(inherited.colimit.cocone.apex),
        inherited.base_colimit.cocone.apex
    );
    for (cl, bl) in inherited
        .colimit
        .cocone
        .legs
        .iter()
        .zip(&inherited.base_colimit.cocone.legs)
    {
        assert_eq!(zh.underlying(*cl), *bl);
    }
}

#[test]
fn single_arrow_diagram_in_zh_lands_on_the_codomain() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let h = d30.mor("1->30").unwrap();
    let zh = centralizer_of_morphism(&d30, h, &limits()).unwrap();
    let two = by_carrier(&zh, &d30, "2");
    let ten = by_carrier(&zh, &d30, "10");
    let f = zh
        .find_morphism(two, ten, d30.mor("2->10").unwrap())
        .unwrap();
    let diagram = Diagram::single_arrow(zh.cat.base(), f).unwrap();
    let inherited = colimit_in_centralizer_mor(&d30, &zh, &diagram, &limits()).unwrap();
    assert_eq!(inherited.apex, ten);
}

#[test]
fn constant_diagram_in_zx_keeps_its_own_component() {
    let z4 = catalog::discrete_group(&GroupTable::cyclic(4)).unwrap();
    let x = obj(&z4, "g1");
    let zx = centralizer_of_object(&z4, x, &limits()).unwrap();
    let three = by_carrier(&zx, &z4, "g3");
    let diagram = Diagram::constant(zx.cat.base(), three).unwrap();
    let inherited = colimit_in_centralizer_obj(&z4, &zx, &diagram, &limits()).unwrap();
    assert_eq!(inherited.apex, three);
    let crate::constructions::ConstructedObject::AgainstObject(data) = &inherited.apex_data
    else {
        panic!()
    };
    let crate::constructions::ConstructedObject::AgainstObject(orig) = zx.object_data(three)
    else {
        panic!()
    };
    assert_eq!(data.alpha, orig.alpha);
}

#[test]
fn zx_inherits_the_lcm_colimit_on_d30() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let zx = centralizer_of_object(&d30, obj(&d30, "6"), &limits()).unwrap();
    let two = by_carrier(&zx, &d30, "2");
    let five = by_carrier(&zx, &d30, "5");
    let diagram = Diagram::discrete(zx.cat.base(), &[two, five]).unwrap();
    let inherited = colimit_in_centralizer_obj(&d30, &zx, &diagram, &limits()).unwrap();
    assert_eq!(d30.object_name(zx.carrier(inherited.apex)), "10");
    let crate::constructions::ConstructedObject::AgainstObject(data) = &inherited.apex_data
    else {
        panic!()
    };
    assert!(d30.is_identity(data.alpha));
}

#[test]
fn center_and_weak_center_inherit_colimits_on_d30() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    for make in [center, weak_center] {
        let con = make(&d30, &limits()).unwrap();
        let two = by_carrier(&con, &d30, "2");
        let five = by_carrier(&con, &d30, "5");
        let diagram = Diagram::discrete(con.cat.base(), &[two, five]).unwrap();
        let inherited = colimit_in_construction(&d30, &con, &diagram, &limits()).unwrap();
        assert_eq!(d30.object_name(con.carrier(inherited.apex)), "10");
        let crate::constructions::ConstructedObject::Half(data) = &inherited.apex_data else {
            panic!()
        };
        for &c in &data.components {
            assert!(d30.is_identity(c));
        }
    }
}

#[test]
fn center_constant_diagram_returns_the_same_object() {
    let z4 = catalog::discrete_group(&GroupTable::cyclic(4)).unwrap();
    let con = center(&z4, &limits()).unwrap();
    let at = by_carrier(&con, &z4, "g3");
    let diagram = Diagram::constant(con.cat.base(), at).unwrap();
    let inherited = colimit_in_center(&z4, &con, &diagram, &limits()).unwrap();
    assert_eq!(inherited.apex, at);
}

#[test]
fn inheritance_refuses_on_the_diamond_lattice() {
    let m3 = catalog::diamond_m3().unwrap();
    let con = center(&m3, &limits()).unwrap();
    let b = by_carrier(&con, &m3, "b");
    let c = by_carrier(&con, &m3, "c");
    let diagram = Diagram::discrete(con.cat.base(), &[b, c]).unwrap();
    let err = colimit_in_center(&m3, &con, &diagram, &limits()).unwrap_err();
    assert!(matches!(err, crate::Error::NotCocontinuous { .. }), "{err}");
}

#[test]
fn kind_mismatch_is_refused() {
    let d30 = catalog::divisibility_poset(30).unwrap();
    let con = center(&d30, &limits()).unwrap();
    let two = by_carrier(&con, &d30, "2");
    let diagram = Diagram::constant(con.cat.base(), two).unwrap();
    assert!(colimit_in_centralizer_obj(&d30, &con, &diagram, &limits()).is_err());
}
