use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, FinCatBuilder, FinMonCat, FinMonCatBuilder, Functor, Limits, Mor, Obj};

use super::{comonoid_name, Comonoid};

#[derive(Debug)]
pub struct ComonoidEnumeration {
    pub comonoids: Vec<Comonoid>,
    /// Carriers whose comultiplication target lies outside a truncation
    /// window, with the reason; recorded, never silently dropped.
    pub skipped_carriers: Vec<(Obj, String)>,
}

/// Checks the comonoid axioms by table lookups.
pub(crate) fn comonoid_axioms_hold(base: &FinMonCat, c: &Comonoid) -> Result<bool> {
    let carrier = c.carrier;
    // (id ⊗ Δ) ∘ Δ = (Δ ⊗ id) ∘ Δ
    let left = base.compose(base.left_whisker(carrier, c.comult)?, c.comult)?;
    let right = base.compose(base.right_whisker(c.comult, carrier)?, c.comult)?;
    if left != right {
        return Ok(false);
    }
    // (ε ⊗ id) ∘ Δ = id = (id ⊗ ε) ∘ Δ
    let l = base.compose(base.right_whisker(c.counit, carrier)?, c.comult)?;
    let r = base.compose(base.left_whisker(carrier, c.counit)?, c.comult)?;
    Ok(l == base.identity(carrier) && r == base.identity(carrier))
}

/// All comonoids, carriers in lexicographic order, Δ and ε in index
/// order.
pub fn enumerate_comonoids(base: &FinMonCat, limits: &Limits) -> Result<ComonoidEnumeration> {
    limits.check(base.base())?;
    let mut comonoids = Vec::new();
    let mut skipped_carriers = Vec::new();
    for carrier in base.objects() {
        let Some(square) = base.tensor_obj_opt(carrier, carrier) else {
            skipped_carriers.push((
                carrier,
                "tensor square of the carrier lies outside the truncation window".to_string(),
            ));
            continue;
        };
        for &comult in base.hom(carrier, square) {
            for &counit in base.hom(carrier, base.unit()) {
                let candidate = Comonoid {
                    carrier,
                    comult,
                    counit,
                };
                if comonoid_axioms_hold(base, &candidate)? {
                    comonoids.push(candidate);
                }
            }
        }
    }
    Ok(ComonoidEnumeration {
        comonoids,
        skipped_carriers,
    })
}

/// A morphism of comonoids: Δ' ∘ f = (f ⊗ f) ∘ Δ and ε' ∘ f = ε.
pub(crate) fn comonoid_morphism_holds(
    base: &FinMonCat,
    dom: &Comonoid,
    cod: &Comonoid,
    f: Mor,
) -> Result<bool> {
    let lhs = base.compose(cod.comult, f)?;
    let rhs = base.compose(base.tensor_mor(f, f)?, dom.comult)?;
    if lhs != rhs {
        return Ok(false);
    }
    Ok(base.compose(cod.counit, f)? == dom.counit)
}

/// The category of comonoids. With a validated braiding on the base it is
/// monoidal (the braiding interleaves the comultiplications); otherwise a
/// plain category is produced.
#[derive(Debug)]
pub enum ComonCat {
    Monoidal(FinMonCat),
    Plain(FinCat),
}

impl ComonCat {
    pub fn plain(&self) -> &FinCat {
        match self {
            ComonCat::Monoidal(m) => m.base(),
            ComonCat::Plain(p) => p,
        }
    }
}

#[derive(Debug)]
pub struct ComonoidCategory {
    pub cat: ComonCat,
    /// CoMon(C) → C.
    pub forget: Functor,
    /// Aligned with the comonoid category's object indices.
    pub comonoids: Vec<Comonoid>,
    pub skipped_carriers: Vec<(Obj, String)>,
}

impl ComonoidCategory {
    pub fn find(&self, c: &Comonoid) -> Option<Obj> {
        self.comonoids.iter().position(|d| d == c).map(|i| {
            self.cat
                .plain()
                .objects()
                .nth(i)
                .expect("aligned with objects")
        })
    }
}

pub fn comonoid_category(base: &FinMonCat, limits: &Limits) -> Result<ComonoidCategory> {
    let enumeration = enumerate_comonoids(base, limits)?;
    let mut named: Vec<(String, Comonoid)> = enumeration
        .comonoids
        .iter()
        .map(|c| (comonoid_name(base, c), c.clone()))
        .collect();
    named.sort_by(|a, b| a.0.cmp(&b.0));

    struct Arrow {
        name: String,
        dom: usize,
        cod: usize,
        base: Mor,
    }
    let mut arrows = Vec::new();
    for (i, (name_i, c_i)) in named.iter().enumerate() {
        for (j, (name_j, c_j)) in named.iter().enumerate() {
            for &f in base.hom(c_i.carrier, c_j.carrier) {
                if i == j && f == base.identity(c_i.carrier) {
                    continue;
                }
                if comonoid_morphism_holds(base, c_i, c_j, f)? {
                    arrows.push(Arrow {
                        name: format!("{}:{}=>{}", base.morphism_name(f), name_i, name_j),
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
            what: "comonoid morphism",
            actual: arrows.len() + named.len(),
            max: limits.max_morphisms,
        });
    }

    let id_name = |pos: usize| format!("id_{}", named[pos].0);
    let arrow_name = |dom: usize, cod: usize, f: Mor| -> String {
        if dom == cod && f == base.identity(named[dom].1.carrier) {
            id_name(dom)
        } else {
            format!("{}:{}=>{}", base.morphism_name(f), named[dom].0, named[cod].0)
        }
    };

    let build_plain = |b: &mut FinCatBuilder| -> Result<()> {
        for (name, _) in &named {
            b.object(name.clone());
        }
        for a in &arrows {
            b.morphism(a.name.clone(), named[a.dom].0.clone(), named[a.cod].0.clone());
        }
        for g in &arrows {
            for f in &arrows {
                if f.cod != g.dom {
                    continue;
                }
                let composite = base.compose(g.base, f.base)?;
                b.compose(&g.name, &f.name, arrow_name(f.dom, g.cod, composite));
            }
        }
        Ok(())
    };

    let cat = if base.has_braiding() {
        let mut b = FinMonCatBuilder::new();
        build_plain(b.cat())?;
        // Unit comonoid (I, id, id); it exists whenever the base is valid.
        let unit = Comonoid {
            carrier: base.unit(),
            comult: base.identity(base.unit()),
            counit: base.identity(base.unit()),
        };
        let unit_name = comonoid_name(base, &unit);
        let find_pos = |c: &Comonoid| -> Result<usize> {
            named
                .iter()
                .position(|(_, d)| d == c)
                .ok_or_else(|| Error::Inconsistency(format!(
                    "tensor of comonoids `{}` missing from the enumerated set",
                    comonoid_name(base, c)
                )))
        };
        find_pos(&unit)?;
        b.unit(unit_name);

        // Tensor of comonoids: carrier C⊗C', Δ = (id_C ⊗ Ψ_{C,C'} ⊗ id_C') ∘ (Δ ⊗ Δ'),
        // ε = ε ⊗ ε'.
        let tensor_comonoid = |x: &Comonoid, y: &Comonoid| -> Result<Comonoid> {
            let carrier = base.tensor_obj(x.carrier, y.carrier)?;
            let spread = base.tensor_mor(x.comult, y.comult)?;
            let mid = base.right_whisker(
                base.left_whisker(x.carrier, base.braiding(x.carrier, y.carrier)?)?,
                y.carrier,
            )?;
            Ok(Comonoid {
                carrier,
                comult: base.compose(mid, spread)?,
                counit: base.tensor_mor(x.counit, y.counit)?,
            })
        };
        let mut tensor_table = vec![vec![0usize; named.len()]; named.len()];
        for (i, (name_i, c_i)) in named.iter().enumerate() {
            for (j, (name_j, c_j)) in named.iter().enumerate() {
                let t = tensor_comonoid(c_i, c_j)?;
                let pos = find_pos(&t)?;
                tensor_table[i][j] = pos;
                b.tensor_obj(name_i.clone(), name_j.clone(), named[pos].0.clone());
            }
        }
        let unit_pos = find_pos(&unit)?;
        let all_arrows: Vec<(String, usize, usize, Mor)> = named
            .iter()
            .enumerate()
            .map(|(i, (_, c))| (id_name(i), i, i, base.identity(c.carrier)))
            .chain(arrows.iter().map(|a| (a.name.clone(), a.dom, a.cod, a.base)))
            .collect();
        for (name_f, dom_f, cod_f, base_f) in &all_arrows {
            for (name_g, dom_g, cod_g, base_g) in &all_arrows {
                let f_is_id = dom_f == cod_f && *base_f == base.identity(named[*dom_f].1.carrier);
                let g_is_id = dom_g == cod_g && *base_g == base.identity(named[*dom_g].1.carrier);
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
        ComonCat::Monoidal(b.build()?)
    } else {
        let mut b = FinCatBuilder::new();
        build_plain(&mut b)?;
        ComonCat::Plain(b.build()?)
    };

    // Forgetful functor and index-aligned comonoid data.
    let plain = cat.plain();
    let name_to_pos: HashMap<String, usize> = named
        .iter()
        .enumerate()
        .map(|(i, (n, _))| (n.clone(), i))
        .collect();
    let mut base_of: HashMap<String, Mor> = HashMap::new();
    for a in &arrows {
        base_of.insert(a.name.clone(), a.base);
    }
    let mut object_map = Vec::new();
    let mut comonoids = Vec::new();
    for o in plain.objects() {
        let pos = name_to_pos[plain.object_name(o)];
        object_map.push(named[pos].1.carrier);
        comonoids.push(named[pos].1.clone());
    }
    let mut morphism_map = Vec::new();
    for m in plain.morphisms() {
        let image = match base_of.get(plain.morphism_name(m)) {
            Some(&f) => f,
            None => {
                let pos = name_to_pos[plain.object_name(plain.dom(m))];
                base.identity(named[pos].1.carrier)
            }
        };
        morphism_map.push(image);
    }
    let forget = Functor {
        object_map,
        morphism_map,
    };
    forget.verify(plain, base.base())?;

    Ok(ComonoidCategory {
        cat,
        forget,
        comonoids,
        skipped_carriers: enumeration.skipped_carriers,
    })
}
