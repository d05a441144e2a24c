use crate::error::{Error, Result};
use crate::fincat::{FinMonCat, Functor, Obj};

use super::{
    object_name, CentralizerMorObject, CentralizerObjObject, ConstructedObject, Construction,
    ConstructionKind, HalfBraiding, HalfBraidingKind,
};

/// The evaluation functor Z(C) → Z_X(C): (A, σ) ↦ (A, σ_X), identity on
/// underlying arrows. Functoriality is verified, not assumed.
pub fn evaluation_functor(
    base: &FinMonCat,
    center: &Construction,
    zx: &Construction,
) -> Result<Functor> {
    let ConstructionKind::CentralizerObj(x) = zx.kind else {
        return Err(Error::Precondition(
            "evaluation functor targets a centralizer of an object".into(),
        ));
    };
    if center.kind != ConstructionKind::Center {
        return Err(Error::Precondition(
            "evaluation functor starts at the center".into(),
        ));
    }
    let mut object_map = Vec::with_capacity(center.cat.object_count());
    for o in center.cat.objects() {
        let ConstructedObject::Half(h) = center.object_data(o) else {
            return Err(Error::Inconsistency("center object expected".into()));
        };
        let image = ConstructedObject::AgainstObject(CentralizerObjObject {
            carrier: h.carrier,
            alpha: h.components[x.index()],
        });
        object_map.push(zx.find_object_named(&object_name(base, &image))?);
    }
    let mut morphism_map = Vec::with_capacity(center.cat.morphism_count());
    for m in center.cat.morphisms() {
        let dom = object_map[center.cat.dom(m).index()];
        let cod = object_map[center.cat.cod(m).index()];
        morphism_map.push(zx.require_morphism(dom, cod, center.underlying(m))?);
    }
    let functor = Functor {
        object_map,
        morphism_map,
    };
    functor.verify(center.cat.base(), zx.cat.base())?;
    Ok(functor)
}

/// The mutually inverse functors between Z_A(C) and Z_{id_A}(C):
/// (X, α, α) ↦ (X, α⁻¹) and (X, α) ↦ (X, α⁻¹, α⁻¹). Both directions are
/// verified to compose to identities.
pub fn centralizer_identity_iso(
    base: &FinMonCat,
    za: &Construction,
    zida: &Construction,
) -> Result<(Functor, Functor)> {
    let ConstructionKind::CentralizerObj(a) = za.kind else {
        return Err(Error::Precondition("first argument must be some Z_A(C)".into()));
    };
    let ConstructionKind::CentralizerMor(h) = zida.kind else {
        return Err(Error::Precondition(
            "second argument must be some Z_{id_A}(C)".into(),
        ));
    };
    if h != base.identity(a) {
        return Err(Error::Precondition(
            "second argument must be the centralizer of id of the first's object".into(),
        ));
    }

    // S: Z_{id_A}(C) → Z_A(C), (X, α, α) ↦ (X, α⁻¹).
    let mut s_objects = Vec::with_capacity(zida.cat.object_count());
    for o in zida.cat.objects() {
        let ConstructedObject::AgainstMorphism(t) = zida.object_data(o) else {
            return Err(Error::Inconsistency("Z_h object expected".into()));
        };
        if t.alpha != t.beta {
            return Err(Error::Inconsistency(
                "objects of Z_{id_A}(C) must have equal components".into(),
            ));
        }
        let inverse = base.inverse(t.alpha).ok_or_else(|| {
            Error::Inconsistency("Z_h components are isomorphisms".into())
        })?;
        let image = ConstructedObject::AgainstObject(CentralizerObjObject {
            carrier: t.carrier,
            alpha: inverse,
        });
        s_objects.push(za.find_object_named(&object_name(base, &image))?);
    }
    let mut s_morphisms = Vec::with_capacity(zida.cat.morphism_count());
    for m in zida.cat.morphisms() {
        let dom = s_objects[zida.cat.dom(m).index()];
        let cod = s_objects[zida.cat.cod(m).index()];
        s_morphisms.push(za.require_morphism(dom, cod, zida.underlying(m))?);
    }
    let s = Functor {
        object_map: s_objects,
        morphism_map: s_morphisms,
    };
    s.verify(zida.cat.base(), za.cat.base())?;

    // T: Z_A(C) → Z_{id_A}(C), (X, α) ↦ (X, α⁻¹, α⁻¹).
    let mut t_objects = Vec::with_capacity(za.cat.object_count());
    for o in za.cat.objects() {
        let ConstructedObject::AgainstObject(t) = za.object_data(o) else {
            return Err(Error::Inconsistency("Z_X object expected".into()));
        };
        let inverse = base.inverse(t.alpha).ok_or_else(|| {
            Error::Inconsistency("Z_X components are isomorphisms".into())
        })?;
        let image = ConstructedObject::AgainstMorphism(CentralizerMorObject {
            carrier: t.carrier,
            alpha: inverse,
            beta: inverse,
        });
        t_objects.push(zida.find_object_named(&object_name(base, &image))?);
    }
    let mut t_morphisms = Vec::with_capacity(za.cat.morphism_count());
    for m in za.cat.morphisms() {
        let dom = t_objects[za.cat.dom(m).index()];
        let cod = t_objects[za.cat.cod(m).index()];
        t_morphisms.push(zida.require_morphism(dom, cod, za.underlying(m))?);
    }
    let t = Functor {
        object_map: t_objects,
        morphism_map: t_morphisms,
    };
    t.verify(za.cat.base(), zida.cat.base())?;

    // Round trips are identities on objects and morphisms.
    let st = s.then(&t);
    let ts = t.then(&s);
    if st != Functor::identity(zida.cat.base()) || ts != Functor::identity(za.cat.base()) {
        return Err(Error::Inconsistency(
            "centralizer identity functors do not invert each other".into(),
        ));
    }
    Ok((s, t))
}

/// The braided embedding of the base category into a constructed
/// category: Φ₁(W) = (W, Ψ_{W,−}) into Z(C), Φ₂(W) = (W, Ψ_{W,X}) into
/// Z_X(C), Φ₃(W) = (W, Ψ_{A,W}, Ψ_{B,W}) into Z_h(C), and Φ₄ = Φ₁ into
/// the weak center. Membership of every image is re-verified by lookup in
/// the exhaustively enumerated target, and the result is checked to be an
/// embedding (injective and functorial).
pub fn braided_embedding(base: &FinMonCat, target: &Construction) -> Result<Functor> {
    if !base.has_braiding() {
        return Err(Error::MissingBraiding);
    }
    let image_of = |w: Obj| -> Result<ConstructedObject> {
        Ok(match target.kind {
            ConstructionKind::Center => ConstructedObject::Half(HalfBraiding {
                carrier: w,
                components: base
                    .objects()
                    .map(|y| base.braiding(w, y))
                    .collect::<Result<_>>()?,
                kind: HalfBraidingKind::Center,
            }),
            ConstructionKind::WeakCenter => ConstructedObject::Half(HalfBraiding {
                carrier: w,
                components: base
                    .objects()
                    .map(|y| base.braiding(w, y))
                    .collect::<Result<_>>()?,
                kind: HalfBraidingKind::Weak,
            }),
            ConstructionKind::CentralizerObj(x) => {
                ConstructedObject::AgainstObject(CentralizerObjObject {
                    carrier: w,
                    alpha: base.braiding(w, x)?,
                })
            }
            ConstructionKind::CentralizerMor(h) => {
                ConstructedObject::AgainstMorphism(CentralizerMorObject {
                    carrier: w,
                    alpha: base.braiding(base.dom(h), w)?,
                    beta: base.braiding(base.cod(h), w)?,
                })
            }
        })
    };
    let mut object_map = Vec::with_capacity(base.object_count());
    for w in base.objects() {
        let image = image_of(w)?;
        object_map.push(target.find_object_named(&object_name(base, &image))?);
    }
    let mut morphism_map = Vec::with_capacity(base.morphism_count());
    for f in base.morphisms() {
        let dom = object_map[base.dom(f).index()];
        let cod = object_map[base.cod(f).index()];
        morphism_map.push(target.require_morphism(dom, cod, f)?);
    }
    let functor = Functor {
        object_map,
        morphism_map,
    };
    functor.verify(base.base(), target.cat.base())?;
    if !functor.is_injective_on_objects() || !functor.is_injective_on_morphisms() {
        return Err(Error::Inconsistency(
            "braided embedding is not injective".into(),
        ));
    }
    Ok(functor)
}
