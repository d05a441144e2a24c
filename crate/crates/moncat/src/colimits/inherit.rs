use crate::constructions::{
    CentralizerMorObject, CentralizerObjObject, ConstructedObject, Construction,
    ConstructionKind, HalfBraiding, HalfBraidingKind,
};
use crate::error::{Error, Result};
use crate::fincat::{Diagram, FinMonCat, Limits, Mor, Obj, TensorFunctor};

use super::search::{colimit, universality, Cocone, Colimit, ColimitOutcome};

/// A colimit computed in a constructed category by inheriting the base
/// colimit and inducing the components as unique mediators. The
/// underlying cocone is the base colimit itself: same apex, same legs.
#[derive(Debug)]
pub struct InheritedColimit {
    pub base_colimit: Colimit,
    /// The verified colimit in the constructed category.
    pub colimit: Colimit,
    pub apex: Obj,
    pub apex_data: ConstructedObject,
}

/// The unique morphism `from → to` satisfying `pred`; zero or several
/// solutions contradict the colimit property and fail loudly.
fn unique_mediator(
    base: &FinMonCat,
    from: Obj,
    to: Obj,
    label: &str,
    pred: impl Fn(Mor) -> Result<bool>,
) -> Result<Mor> {
    let mut found = None;
    for &m in base.hom(from, to) {
        if pred(m)? {
            if found.is_some() {
                return Err(Error::Inconsistency(format!(
                    "two candidates for the induced morphism {label}"
                )));
            }
            found = Some(m);
        }
    }
    found.ok_or_else(|| {
        Error::Inconsistency(format!("no candidate for the induced morphism {label}"))
    })
}

fn require_cocontinuous(
    base: &FinMonCat,
    tf: TensorFunctor,
    diagram: &Diagram,
    limits: &Limits,
) -> Result<()> {
    let report = super::is_cocontinuous(base, &tf, std::slice::from_ref(diagram), limits)?;
    if !report.cocontinuous {
        return Err(Error::NotCocontinuous {
            functor: tf.describe(base),
        });
    }
    Ok(())
}

/// Induces `m: J⊗C → C⊗J` with m ∘ (id_J ⊗ φ_D) = (φ_D ⊗ id_J) ∘ comp_D
/// (the fixed-first mediator of the Z_h construction).
fn induce_fixed_first(
    base: &FinMonCat,
    fixed: Obj,
    apex: Obj,
    legs: &[Mor],
    components: &[Mor],
    label: &str,
) -> Result<Mor> {
    let from = base.tensor_obj(fixed, apex)?;
    let to = base.tensor_obj(apex, fixed)?;
    unique_mediator(base, from, to, label, |m| {
        for (i, &phi) in legs.iter().enumerate() {
            let lhs = base.compose(m, base.left_whisker(fixed, phi)?)?;
            let rhs = base.compose(base.right_whisker(phi, fixed)?, components[i])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// Its inverse direction: `m: C⊗J → J⊗C` with
/// m ∘ (φ_D ⊗ id_J) = (id_J ⊗ φ_D) ∘ comp_D⁻¹.
fn induce_fixed_first_inverse(
    base: &FinMonCat,
    fixed: Obj,
    apex: Obj,
    legs: &[Mor],
    components: &[Mor],
    label: &str,
) -> Result<Mor> {
    let from = base.tensor_obj(apex, fixed)?;
    let to = base.tensor_obj(fixed, apex)?;
    unique_mediator(base, from, to, label, |m| {
        for (i, &phi) in legs.iter().enumerate() {
            let inv = base.inverse(components[i]).ok_or_else(|| {
                Error::Inconsistency("component is not invertible".into())
            })?;
            let lhs = base.compose(m, base.right_whisker(phi, fixed)?)?;
            let rhs = base.compose(base.left_whisker(fixed, phi)?, inv)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

/// Induces `m: C⊗W → W⊗C` with m ∘ (φ_D ⊗ id_W) = (id_W ⊗ φ_D) ∘ comp_D
/// (the carrier-first mediator of Z_X and the centers).
fn induce_carrier_first(
    base: &FinMonCat,
    index: Obj,
    apex: Obj,
    legs: &[Mor],
    components: &[Mor],
    label: &str,
) -> Result<Mor> {
    let from = base.tensor_obj(apex, index)?;
    let to = base.tensor_obj(index, apex)?;
    unique_mediator(base, from, to, label, |m| {
        for (i, &phi) in legs.iter().enumerate() {
            let lhs = base.compose(m, base.right_whisker(phi, index)?)?;
            let rhs = base.compose(base.left_whisker(index, phi)?, components[i])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn induce_carrier_first_inverse(
    base: &FinMonCat,
    index: Obj,
    apex: Obj,
    legs: &[Mor],
    components: &[Mor],
    label: &str,
) -> Result<Mor> {
    let from = base.tensor_obj(index, apex)?;
    let to = base.tensor_obj(apex, index)?;
    unique_mediator(base, from, to, label, |m| {
        for (i, &phi) in legs.iter().enumerate() {
            let inv = base.inverse(components[i]).ok_or_else(|| {
                Error::Inconsistency("component is not invertible".into())
            })?;
            let lhs = base.compose(m, base.left_whisker(index, phi)?)?;
            let rhs = base.compose(base.right_whisker(phi, index)?, inv)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn assert_mutually_inverse(
    base: &FinMonCat,
    forward: Mor,
    backward: Mor,
    label: &str,
) -> Result<()> {
    let fb = base.compose(forward, backward)?;
    let bf = base.compose(backward, forward)?;
    if !base.is_identity(fb) || !base.is_identity(bf) {
        return Err(Error::Inconsistency(format!(
            "induced morphism {label} is not invertible as the construction asserts"
        )));
    }
    Ok(())
}

/// Computes the colimit of a diagram valued in a constructed category by
/// the inheritance construction: take the base colimit of the underlying
/// diagram, induce the structure components as unique mediators, verify
/// every asserted identity (invertibility, membership squares, naturality
/// and multiplicativity for the centers), and verify the resulting cocone
/// is a colimit in the constructed category.
pub fn colimit_in_construction(
    base: &FinMonCat,
    con: &Construction,
    diagram: &Diagram,
    limits: &Limits,
) -> Result<InheritedColimit> {
    diagram.validate(con.cat.base())?;
    let base_diagram = diagram.map(&con.forget);

    // Cocontinuity preconditions, per construction.
    let fixed_objects: Vec<Obj> = match con.kind {
        ConstructionKind::CentralizerMor(h) => vec![base.dom(h), base.cod(h)],
        ConstructionKind::CentralizerObj(x) => vec![x],
        ConstructionKind::Center | ConstructionKind::WeakCenter => base.objects().collect(),
    };
    for &j in &fixed_objects {
        require_cocontinuous(base, TensorFunctor::left(j), &base_diagram, limits)?;
        require_cocontinuous(base, TensorFunctor::right(j), &base_diagram, limits)?;
    }

    let base_colimit = match colimit(base.base(), &base_diagram, limits)? {
        ColimitOutcome::Found(c) => c,
        ColimitOutcome::NotFound => {
            return Err(Error::Precondition(
                "the underlying diagram has no colimit in the base category".into(),
            ))
        }
    };
    let apex = base_colimit.cocone.apex;
    let legs = &base_colimit.cocone.legs;
    let shape_objects: Vec<Obj> = diagram.shape.objects().collect();

    let apex_data = match con.kind {
        ConstructionKind::CentralizerMor(h) => {
            let a = base.dom(h);
            let b = base.cod(h);
            let alphas: Vec<Mor> = shape_objects
                .iter()
                .map(|&d| match con.object_data(diagram.object_image(d)) {
                    ConstructedObject::AgainstMorphism(o) => Ok(o.alpha),
                    _ => Err(Error::Inconsistency("Z_h diagram expected".into())),
                })
                .collect::<Result<_>>()?;
            let betas: Vec<Mor> = shape_objects
                .iter()
                .map(|&d| match con.object_data(diagram.object_image(d)) {
                    ConstructedObject::AgainstMorphism(o) => Ok(o.beta),
                    _ => Err(Error::Inconsistency("Z_h diagram expected".into())),
                })
                .collect::<Result<_>>()?;
            let alpha = induce_fixed_first(base, a, apex, legs, &alphas, "alpha-bar")?;
            let alpha_inv =
                induce_fixed_first_inverse(base, a, apex, legs, &alphas, "alpha-bar'")?;
            assert_mutually_inverse(base, alpha, alpha_inv, "alpha-bar")?;
            let beta = induce_fixed_first(base, b, apex, legs, &betas, "beta-bar")?;
            let beta_inv = induce_fixed_first_inverse(base, b, apex, legs, &betas, "beta-bar'")?;
            assert_mutually_inverse(base, beta, beta_inv, "beta-bar")?;
            // Membership square: (id_C ⊗ h) ∘ ᾱ = β̄ ∘ (h ⊗ id_C).
            let lhs = base.compose(base.left_whisker(apex, h)?, alpha)?;
            let rhs = base.compose(beta, base.right_whisker(h, apex)?)?;
            if lhs != rhs {
                return Err(Error::Inconsistency(
                    "induced pair violates the centralizer square".into(),
                ));
            }
            ConstructedObject::AgainstMorphism(CentralizerMorObject {
                carrier: apex,
                alpha,
                beta,
            })
        }
        ConstructionKind::CentralizerObj(x) => {
            let alphas: Vec<Mor> = shape_objects
                .iter()
                .map(|&d| match con.object_data(diagram.object_image(d)) {
                    ConstructedObject::AgainstObject(o) => Ok(o.alpha),
                    _ => Err(Error::Inconsistency("Z_X diagram expected".into())),
                })
                .collect::<Result<_>>()?;
            let mu = induce_carrier_first(base, x, apex, legs, &alphas, "mu")?;
            let nu = induce_carrier_first_inverse(base, x, apex, legs, &alphas, "nu")?;
            assert_mutually_inverse(base, mu, nu, "mu")?;
            ConstructedObject::AgainstObject(CentralizerObjObject {
                carrier: apex,
                alpha: mu,
            })
        }
        ConstructionKind::Center | ConstructionKind::WeakCenter => {
            let kind = if con.kind == ConstructionKind::Center {
                HalfBraidingKind::Center
            } else {
                HalfBraidingKind::Weak
            };
            let mut components = Vec::with_capacity(base.object_count());
            for w in base.objects() {
                let sigmas: Vec<Mor> = shape_objects
                    .iter()
                    .map(|&d| match con.object_data(diagram.object_image(d)) {
                        ConstructedObject::Half(o) => Ok(o.components[w.index()]),
                        _ => Err(Error::Inconsistency("center diagram expected".into())),
                    })
                    .collect::<Result<_>>()?;
                let label = format!("mu@{}", base.object_name(w));
                let mu = induce_carrier_first(base, w, apex, legs, &sigmas, &label)?;
                if kind == HalfBraidingKind::Center {
                    let nu = induce_carrier_first_inverse(base, w, apex, legs, &sigmas, &label)?;
                    assert_mutually_inverse(base, mu, nu, &label)?;
                }
                components.push(mu);
            }
            // σ_I = id holds for the induced family.
            if components[base.unit().index()] != base.identity(apex) {
                return Err(Error::Inconsistency(
                    "induced family is not unital at the tensor unit".into(),
                ));
            }
            // Naturality in the index.
            for zeta in base.morphisms() {
                let y = base.dom(zeta);
                let z = base.cod(zeta);
                if !crate::constructions::index_naturality_holds(
                    base,
                    apex,
                    zeta,
                    components[y.index()],
                    components[z.index()],
                )? {
                    return Err(Error::Inconsistency(format!(
                        "induced family is not natural at `{}`",
                        base.morphism_name(zeta)
                    )));
                }
            }
            // Multiplicativity over the tensor.
            for y in base.objects() {
                for z in base.objects() {
                    let yz = base.tensor_obj(y, z)?;
                    if !crate::constructions::multiplicativity_holds(
                        base,
                        y,
                        z,
                        components[y.index()],
                        components[z.index()],
                        components[yz.index()],
                    )? {
                        return Err(Error::Inconsistency(format!(
                            "induced family is not multiplicative at ({}, {})",
                            base.object_name(y),
                            base.object_name(z)
                        )));
                    }
                }
            }
            ConstructedObject::Half(HalfBraiding {
                carrier: apex,
                components,
                kind,
            })
        }
    };

    // The apex with its induced components is an object of the
    // constructed category, the legs are morphisms there, and the cocone
    // is universal there.
    let apex_obj = con
        .find_object_named(&crate::constructions::object_name(base, &apex_data))
        .map_err(|_| {
            Error::Inconsistency(
                "induced apex is not an object of the constructed category".into(),
            )
        })?;
    let mut constructed_legs = Vec::with_capacity(shape_objects.len());
    for (i, &d) in shape_objects.iter().enumerate() {
        let from = diagram.object_image(d);
        let leg = con.require_morphism(from, apex_obj, legs[i])?;
        constructed_legs.push(leg);
    }
    let constructed_cocone = Cocone {
        apex: apex_obj,
        legs: constructed_legs,
    };
    if !constructed_cocone.commutes(con.cat.base(), diagram)? {
        return Err(Error::Inconsistency(
            "inherited cocone does not commute in the constructed category".into(),
        ));
    }
    let mediators = universality(con.cat.base(), diagram, &constructed_cocone)?.ok_or_else(
        || Error::Inconsistency("inherited cocone is not universal in the constructed category".into()),
    )?;

    // Forgetful-cocontinuity: underlying apex and legs are the base ones.
    debug_assert_eq!(con.carrier(apex_obj), apex);
    debug_assert!(constructed_cocone
        .legs
        .iter()
        .zip(legs)
        .all(|(&cl, &bl)| con.underlying(cl) == bl));

    Ok(InheritedColimit {
        base_colimit,
        colimit: Colimit {
            cocone: constructed_cocone,
            mediators,
        },
        apex: apex_obj,
        apex_data,
    })
}

fn expect_kind(want: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "construction is not {want}"
        )))
    }
}

pub fn colimit_in_centralizer_mor(
    base: &FinMonCat,
    con: &Construction,
    diagram: &Diagram,
    limits: &Limits,
) -> Result<InheritedColimit> {
    expect_kind("a centralizer of a morphism", matches!(con.kind, ConstructionKind::CentralizerMor(_)))?;
    colimit_in_construction(base, con, diagram, limits)
}

pub fn colimit_in_centralizer_obj(
    base: &FinMonCat,
    con: &Construction,
    diagram: &Diagram,
    limits: &Limits,
) -> Result<InheritedColimit> {
    expect_kind("a centralizer of an object", matches!(con.kind, ConstructionKind::CentralizerObj(_)))?;
    colimit_in_construction(base, con, diagram, limits)
}

pub fn colimit_in_center(
    base: &FinMonCat,
    con: &Construction,
    diagram: &Diagram,
    limits: &Limits,
) -> Result<InheritedColimit> {
    expect_kind("the center", con.kind == ConstructionKind::Center)?;
    colimit_in_construction(base, con, diagram, limits)
}

pub fn colimit_in_weak_center(
    base: &FinMonCat,
    con: &Construction,
    diagram: &Diagram,
    limits: &Limits,
) -> Result<InheritedColimit> {
    expect_kind("the weak center", con.kind == ConstructionKind::WeakCenter)?;
    colimit_in_construction(base, con, diagram, limits)
}
