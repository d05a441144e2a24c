use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::{FinMonCat, FinMonCatBuilder, Functor, Limits, Mor, Obj};

use super::{
    object_name, ConstructedObject, Construction, ConstructionKind, HalfBraiding,
    HalfBraidingKind, CentralizerMorObject, CentralizerObjObject,
};

// ── Commuting-square helpers (shared with the colimit inheritance) ──────

/// Index naturality of a half-braiding: (f ⊗ id_A) ∘ σ_Y = σ_Z ∘ (id_A ⊗ f)
/// for f: Y → Z.
pub(crate) fn index_naturality_holds(
    base: &FinMonCat,
    carrier: Obj,
    f: Mor,
    sigma_y: Mor,
    sigma_z: Mor,
) -> Result<bool> {
    let lhs = base.compose(base.right_whisker(f, carrier)?, sigma_y)?;
    let rhs = base.compose(sigma_z, base.left_whisker(carrier, f)?)?;
    Ok(lhs == rhs)
}

/// Multiplicativity: σ_{Y⊗Z} = (id_Y ⊗ σ_Z) ∘ (σ_Y ⊗ id_Z).
pub(crate) fn multiplicativity_holds(
    base: &FinMonCat,
    y: Obj,
    z: Obj,
    sigma_y: Mor,
    sigma_z: Mor,
    sigma_yz: Mor,
) -> Result<bool> {
    let rhs = base.compose(
        base.left_whisker(y, sigma_z)?,
        base.right_whisker(sigma_y, z)?,
    )?;
    Ok(sigma_yz == rhs)
}

/// The morphism square of the center, weak center and Z_X:
/// τ_X ∘ (f ⊗ id_X) = (id_X ⊗ f) ∘ σ_X for f between the carriers.
pub(crate) fn carrier_square_holds(
    base: &FinMonCat,
    f: Mor,
    x: Obj,
    sigma_x: Mor,
    tau_x: Mor,
) -> Result<bool> {
    let lhs = base.compose(tau_x, base.right_whisker(f, x)?)?;
    let rhs = base.compose(base.left_whisker(x, f)?, sigma_x)?;
    Ok(lhs == rhs)
}

/// One of the two Z_h morphism squares: α' ∘ (id_J ⊗ f) = (f ⊗ id_J) ∘ α
/// for f between the carriers and J a fixed endpoint of h.
pub(crate) fn zh_morphism_square_holds(
    base: &FinMonCat,
    f: Mor,
    fixed: Obj,
    alpha: Mor,
    alpha_next: Mor,
) -> Result<bool> {
    let lhs = base.compose(alpha_next, base.left_whisker(fixed, f)?)?;
    let rhs = base.compose(base.right_whisker(f, fixed)?, alpha)?;
    Ok(lhs == rhs)
}

/// The Z_h object condition: β ∘ (h ⊗ id_X) = (id_X ⊗ h) ∘ α.
pub(crate) fn zh_object_square_holds(
    base: &FinMonCat,
    h: Mor,
    carrier: Obj,
    alpha: Mor,
    beta: Mor,
) -> Result<bool> {
    let lhs = base.compose(beta, base.right_whisker(h, carrier)?)?;
    let rhs = base.compose(base.left_whisker(carrier, h)?, alpha)?;
    Ok(lhs == rhs)
}

// ── Object enumeration ──────────────────────────────────────────────────

fn enumerate_half_braidings(
    base: &FinMonCat,
    kind: HalfBraidingKind,
    limits: &Limits,
) -> Result<Vec<HalfBraiding>> {
    let indices: Vec<Obj> = base.objects().collect();
    let mut found = Vec::new();
    for carrier in base.objects() {
        let mut chosen: Vec<Mor> = Vec::with_capacity(indices.len());
        extend_family(base, kind, carrier, &indices, &mut chosen, &mut found, limits)?;
    }
    Ok(found)
}

/// Depth-first choice of σ at each index object in order, pruning on every
/// naturality square and multiplicativity instance whose participants are
/// already chosen.
fn extend_family(
    base: &FinMonCat,
    kind: HalfBraidingKind,
    carrier: Obj,
    indices: &[Obj],
    chosen: &mut Vec<Mor>,
    found: &mut Vec<HalfBraiding>,
    limits: &Limits,
) -> Result<()> {
    let pos = chosen.len();
    if pos == indices.len() {
        found.push(HalfBraiding {
            carrier,
            components: chosen.clone(),
            kind,
        });
        if found.len() > limits.max_objects {
            return Err(Error::LimitExceeded {
                what: "constructed object",
                actual: found.len(),
                max: limits.max_objects,
            });
        }
        return Ok(());
    }
    let y = indices[pos];
    let dom = base.tensor_obj(carrier, y)?;
    let cod = base.tensor_obj(y, carrier)?;
    for &candidate in base.hom(dom, cod) {
        match kind {
            HalfBraidingKind::Center => {
                if !base.is_iso(candidate) {
                    continue;
                }
            }
            HalfBraidingKind::Weak => {
                if y == base.unit() && candidate != base.identity(carrier) {
                    continue;
                }
            }
        }
        chosen.push(candidate);
        if family_consistent(base, carrier, indices, chosen)? {
            extend_family(base, kind, carrier, indices, chosen, found, limits)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// Checks every constraint instance that involves the most recent choice.
fn family_consistent(
    base: &FinMonCat,
    carrier: Obj,
    indices: &[Obj],
    chosen: &[Mor],
) -> Result<bool> {
    let pos = chosen.len() - 1;
    let y_pos = indices[pos];
    for j in 0..=pos {
        let y_j = indices[j];
        for &f in base.hom(y_j, y_pos) {
            if !index_naturality_holds(base, carrier, f, chosen[j], chosen[pos])? {
                return Ok(false);
            }
        }
        if j != pos {
            for &f in base.hom(y_pos, y_j) {
                if !index_naturality_holds(base, carrier, f, chosen[pos], chosen[j])? {
                    return Ok(false);
                }
            }
        }
    }
    for j in 0..=pos {
        for l in 0..=pos {
            let t = base.tensor_obj(indices[j], indices[l])?;
            let t_pos = indices.iter().position(|&o| o == t).expect("object index");
            if t_pos > pos || (j != pos && l != pos && t_pos != pos) {
                continue;
            }
            if !multiplicativity_holds(
                base,
                indices[j],
                indices[l],
                chosen[j],
                chosen[l],
                chosen[t_pos],
            )? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn enumerate_centralizer_obj(
    base: &FinMonCat,
    x: Obj,
    limits: &Limits,
) -> Result<Vec<CentralizerObjObject>> {
    let mut found = Vec::new();
    for carrier in base.objects() {
        let dom = base.tensor_obj(carrier, x)?;
        let cod = base.tensor_obj(x, carrier)?;
        for &alpha in base.hom(dom, cod) {
            if base.is_iso(alpha) {
                found.push(CentralizerObjObject { carrier, alpha });
                if found.len() > limits.max_objects {
                    return Err(Error::LimitExceeded {
                        what: "constructed object",
                        actual: found.len(),
                        max: limits.max_objects,
                    });
                }
            }
        }
    }
    Ok(found)
}

fn enumerate_centralizer_mor(
    base: &FinMonCat,
    h: Mor,
    limits: &Limits,
) -> Result<Vec<CentralizerMorObject>> {
    let (a, b) = (base.dom(h), base.cod(h));
    let mut found = Vec::new();
    for carrier in base.objects() {
        let alpha_dom = base.tensor_obj(a, carrier)?;
        let alpha_cod = base.tensor_obj(carrier, a)?;
        let beta_dom = base.tensor_obj(b, carrier)?;
        let beta_cod = base.tensor_obj(carrier, b)?;
        for &alpha in base.hom(alpha_dom, alpha_cod) {
            if !base.is_iso(alpha) {
                continue;
            }
            for &beta in base.hom(beta_dom, beta_cod) {
                if !base.is_iso(beta) {
                    continue;
                }
                if zh_object_square_holds(base, h, carrier, alpha, beta)? {
                    found.push(CentralizerMorObject {
                        carrier,
                        alpha,
                        beta,
                    });
                    if found.len() > limits.max_objects {
                        return Err(Error::LimitExceeded {
                            what: "constructed object",
                            actual: found.len(),
                            max: limits.max_objects,
                        });
                    }
                }
            }
        }
    }
    Ok(found)
}

// ── Structure on constructed objects ────────────────────────────────────

fn morphism_qualifies(
    base: &FinMonCat,
    kind: &ConstructionKind,
    dom: &ConstructedObject,
    cod: &ConstructedObject,
    f: Mor,
) -> Result<bool> {
    match (dom, cod) {
        (ConstructedObject::Half(s), ConstructedObject::Half(t)) => {
            for x in base.objects() {
                if !carrier_square_holds(
                    base,
                    f,
                    x,
                    s.components[x.index()],
                    t.components[x.index()],
                )? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (ConstructedObject::AgainstObject(s), ConstructedObject::AgainstObject(t)) => {
            let ConstructionKind::CentralizerObj(x) = kind else {
                return Err(Error::Inconsistency("kind mismatch".into()));
            };
            carrier_square_holds(base, f, *x, s.alpha, t.alpha)
        }
        (ConstructedObject::AgainstMorphism(s), ConstructedObject::AgainstMorphism(t)) => {
            let ConstructionKind::CentralizerMor(h) = kind else {
                return Err(Error::Inconsistency("kind mismatch".into()));
            };
            let a = base.dom(*h);
            let b = base.cod(*h);
            Ok(zh_morphism_square_holds(base, f, a, s.alpha, t.alpha)?
                && zh_morphism_square_holds(base, f, b, s.beta, t.beta)?)
        }
        _ => Err(Error::Inconsistency("mixed constructed objects".into())),
    }
}

fn tensor_data(
    base: &FinMonCat,
    a: &ConstructedObject,
    b: &ConstructedObject,
) -> Result<ConstructedObject> {
    match (a, b) {
        (ConstructedObject::Half(s), ConstructedObject::Half(t)) => {
            let carrier = base.tensor_obj(s.carrier, t.carrier)?;
            let mut components = Vec::with_capacity(base.object_count());
            for x in base.objects() {
                // δ_X = (σ_X ⊗ id_B) ∘ (id_A ⊗ τ_X)
                let delta = base.compose(
                    base.right_whisker(s.components[x.index()], t.carrier)?,
                    base.left_whisker(s.carrier, t.components[x.index()])?,
                )?;
                components.push(delta);
            }
            Ok(ConstructedObject::Half(HalfBraiding {
                carrier,
                components,
                kind: s.kind,
            }))
        }
        (ConstructedObject::AgainstObject(s), ConstructedObject::AgainstObject(t)) => {
            let carrier = base.tensor_obj(s.carrier, t.carrier)?;
            // γ = (α ⊗ id_B) ∘ (id_A ⊗ β)
            let gamma = base.compose(
                base.right_whisker(s.alpha, t.carrier)?,
                base.left_whisker(s.carrier, t.alpha)?,
            )?;
            Ok(ConstructedObject::AgainstObject(CentralizerObjObject {
                carrier,
                alpha: gamma,
            }))
        }
        (ConstructedObject::AgainstMorphism(s), ConstructedObject::AgainstMorphism(t)) => {
            let carrier = base.tensor_obj(s.carrier, t.carrier)?;
            // ᾱ = (id_X ⊗ α') ∘ (α ⊗ id_Y),  β̄ = (id_X ⊗ β') ∘ (β ⊗ id_Y)
            let alpha = base.compose(
                base.left_whisker(s.carrier, t.alpha)?,
                base.right_whisker(s.alpha, t.carrier)?,
            )?;
            let beta = base.compose(
                base.left_whisker(s.carrier, t.beta)?,
                base.right_whisker(s.beta, t.carrier)?,
            )?;
            Ok(ConstructedObject::AgainstMorphism(CentralizerMorObject {
                carrier,
                alpha,
                beta,
            }))
        }
        _ => Err(Error::Inconsistency("mixed constructed objects".into())),
    }
}

fn unit_data(base: &FinMonCat, kind: &ConstructionKind) -> ConstructedObject {
    let unit = base.unit();
    match kind {
        ConstructionKind::Center => ConstructedObject::Half(HalfBraiding {
            carrier: unit,
            components: base.objects().map(|y| base.identity(y)).collect(),
            kind: HalfBraidingKind::Center,
        }),
        ConstructionKind::WeakCenter => ConstructedObject::Half(HalfBraiding {
            carrier: unit,
            components: base.objects().map(|y| base.identity(y)).collect(),
            kind: HalfBraidingKind::Weak,
        }),
        ConstructionKind::CentralizerObj(x) => {
            ConstructedObject::AgainstObject(CentralizerObjObject {
                carrier: unit,
                alpha: base.identity(*x),
            })
        }
        ConstructionKind::CentralizerMor(h) => {
            ConstructedObject::AgainstMorphism(CentralizerMorObject {
                carrier: unit,
                alpha: base.identity(base.dom(*h)),
                beta: base.identity(base.cod(*h)),
            })
        }
    }
}

// ── Assembly ────────────────────────────────────────────────────────────

fn assemble(
    base: &FinMonCat,
    kind: ConstructionKind,
    data: Vec<ConstructedObject>,
    limits: &Limits,
) -> Result<Construction> {
    let mut named: Vec<(String, ConstructedObject)> = data
        .into_iter()
        .map(|d| (object_name(base, &d), d))
        .collect();
    named.sort_by(|a, b| a.0.cmp(&b.0));
    let name_to_pos: HashMap<String, usize> = named
        .iter()
        .enumerate()
        .map(|(i, (n, _))| (n.clone(), i))
        .collect();
    let find_pos = |d: &ConstructedObject| -> Result<usize> {
        let name = object_name(base, d);
        name_to_pos.get(&name).copied().ok_or_else(|| {
            Error::Inconsistency(format!(
                "constructed object `{name}` missing from the enumerated set"
            ))
        })
    };

    // Morphisms: (dom position, cod position, qualified base morphism).
    struct Arrow {
        name: String,
        dom: usize,
        cod: usize,
        base: Mor,
    }
    let mut arrows: Vec<Arrow> = Vec::new();
    for (i, (name_i, data_i)) in named.iter().enumerate() {
        for (j, (name_j, data_j)) in named.iter().enumerate() {
            for &f in base.hom(data_i.carrier(), data_j.carrier()) {
                if i == j && f == base.identity(data_i.carrier()) {
                    continue; // auto-generated identity
                }
                if morphism_qualifies(base, &kind, data_i, data_j, f)? {
                    arrows.push(Arrow {
                        name: super::morphism_name(base, f, name_i, name_j),
                        dom: i,
                        cod: j,
                        base: f,
                    });
                }
            }
        }
    }
    if arrows.len() + named.len() > limits.max_morphisms {
        return Err(Error::LimitExceeded {
            what: "constructed morphism",
            actual: arrows.len() + named.len(),
            max: limits.max_morphisms,
        });
    }

    let id_name = |pos: usize| format!("id_{}", named[pos].0);
    let arrow_name = |dom: usize, cod: usize, f: Mor| -> String {
        if dom == cod && f == base.identity(named[dom].1.carrier()) {
            id_name(dom)
        } else {
            super::morphism_name(base, f, &named[dom].0, &named[cod].0)
        }
    };

    let mut b = FinMonCatBuilder::new();
    for (name, _) in &named {
        b.cat().object(name.clone());
    }
    for a in &arrows {
        b.cat()
            .morphism(a.name.clone(), named[a.dom].0.clone(), named[a.cod].0.clone());
    }
    // Composition: closed on qualified morphisms; composite identities
    // resolve to the auto-generated names.
    for g in &arrows {
        for f in &arrows {
            if f.cod != g.dom {
                continue;
            }
            let composite = base.compose(g.base, f.base)?;
            b.cat()
                .compose(&g.name, &f.name, arrow_name(f.dom, g.cod, composite));
        }
    }

    let unit = unit_data(base, &kind);
    b.unit(object_name(base, &unit));
    // find_pos doubles as the membership assertion for units and tensors.
    find_pos(&unit)?;

    let mut tensor_table: Vec<Vec<usize>> = vec![vec![0; named.len()]; named.len()];
    for (i, (name_i, data_i)) in named.iter().enumerate() {
        for (j, (name_j, data_j)) in named.iter().enumerate() {
            let t = tensor_data(base, data_i, data_j)?;
            let pos = find_pos(&t)?;
            tensor_table[i][j] = pos;
            b.tensor_obj(name_i.clone(), name_j.clone(), named[pos].0.clone());
        }
    }

    // Tensor on morphisms over all pairs (identity pairs beyond the
    // builder's auto-fill included).
    let all_arrows: Vec<(String, usize, usize, Mor)> = named
        .iter()
        .enumerate()
        .map(|(i, (_, d))| (id_name(i), i, i, base.identity(d.carrier())))
        .chain(arrows.iter().map(|a| (a.name.clone(), a.dom, a.cod, a.base)))
        .collect();
    let unit_pos = find_pos(&unit)?;
    for (name_f, dom_f, cod_f, base_f) in &all_arrows {
        for (name_g, dom_g, cod_g, base_g) in &all_arrows {
            // Skip entries the builder derives: unit identity on either
            // side, and identity-with-identity.
            let f_is_id = dom_f == cod_f && *base_f == base.identity(named[*dom_f].1.carrier());
            let g_is_id = dom_g == cod_g && *base_g == base.identity(named[*dom_g].1.carrier());
            if (f_is_id && *dom_f == unit_pos) || (g_is_id && *dom_g == unit_pos) {
                continue;
            }
            if f_is_id && g_is_id {
                continue;
            }
            let product = base.tensor_mor(*base_f, *base_g)?;
            let dom = tensor_table[*dom_f][*dom_g];
            let cod = tensor_table[*cod_f][*cod_g];
            b.tensor_mor(name_f, name_g, arrow_name(dom, cod, product));
        }
    }

    // The center is braided via Ψ_{(A,σ),(B,τ)} = σ_B.
    if kind == ConstructionKind::Center {
        for (i, (name_i, data_i)) in named.iter().enumerate() {
            for (j, (name_j, data_j)) in named.iter().enumerate() {
                let ConstructedObject::Half(s) = data_i else {
                    return Err(Error::Inconsistency("center object expected".into()));
                };
                let component = s.components[data_j.carrier().index()];
                let dom = tensor_table[i][j];
                let cod = tensor_table[j][i];
                b.braiding_entry(name_i.clone(), name_j.clone(), arrow_name(dom, cod, component));
            }
        }
    }

    let cat = b.build()?;

    // Forgetful functor: by canonical names.
    let mut base_of: HashMap<String, Mor> = HashMap::new();
    for a in &arrows {
        base_of.insert(a.name.clone(), a.base);
    }
    let mut object_map = Vec::with_capacity(cat.object_count());
    let mut objects = Vec::with_capacity(cat.object_count());
    for o in cat.objects() {
        let pos = name_to_pos[cat.object_name(o)];
        object_map.push(named[pos].1.carrier());
        objects.push(named[pos].1.clone());
    }
    let mut morphism_map = Vec::with_capacity(cat.morphism_count());
    for m in cat.morphisms() {
        let name = cat.morphism_name(m);
        let image = match base_of.get(name) {
            Some(&f) => f,
            None => {
                // auto-generated identity
                let pos = name_to_pos[cat.object_name(cat.dom(m))];
                base.identity(named[pos].1.carrier())
            }
        };
        morphism_map.push(image);
    }
    let forget = Functor {
        object_map,
        morphism_map,
    };
    forget.verify(cat.base(), base.base())?;

    Ok(Construction::new(kind, cat, forget, objects))
}

// ── Public constructors ─────────────────────────────────────────────────

/// The center Z(C): objects are pairs (A, σ) with σ an isomorphism
/// half-braiding; braided via Ψ_{(A,σ),(B,τ)} = σ_B.
pub fn center(base: &FinMonCat, limits: &Limits) -> Result<Construction> {
    limits.check(base.base())?;
    let data = enumerate_half_braidings(base, HalfBraidingKind::Center, limits)?;
    assemble(
        base,
        ConstructionKind::Center,
        data.into_iter().map(ConstructedObject::Half).collect(),
        limits,
    )
}

/// The weak center Z_ω(C): components need not be invertible and σ_I = id
/// is imposed.
pub fn weak_center(base: &FinMonCat, limits: &Limits) -> Result<Construction> {
    limits.check(base.base())?;
    let data = enumerate_half_braidings(base, HalfBraidingKind::Weak, limits)?;
    assemble(
        base,
        ConstructionKind::WeakCenter,
        data.into_iter().map(ConstructedObject::Half).collect(),
        limits,
    )
}

/// The centralizer Z_X(C) of an object: pairs (A, α: A⊗X ≅ X⊗A).
pub fn centralizer_of_object(base: &FinMonCat, x: Obj, limits: &Limits) -> Result<Construction> {
    limits.check(base.base())?;
    let data = enumerate_centralizer_obj(base, x, limits)?;
    assemble(
        base,
        ConstructionKind::CentralizerObj(x),
        data.into_iter()
            .map(ConstructedObject::AgainstObject)
            .collect(),
        limits,
    )
}

/// The centralizer Z_h(C) of an arrow h: A → B: triples (X, α, β) with
/// the defining square commuting.
pub fn centralizer_of_morphism(base: &FinMonCat, h: Mor, limits: &Limits) -> Result<Construction> {
    limits.check(base.base())?;
    let data = enumerate_centralizer_mor(base, h, limits)?;
    assemble(
        base,
        ConstructionKind::CentralizerMor(h),
        data.into_iter()
            .map(ConstructedObject::AgainstMorphism)
            .collect(),
        limits,
    )
}
