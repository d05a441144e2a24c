use crate::constructions::{ConstructedObject, Construction, ConstructionKind};
use crate::error::{Error, Result};
use crate::fincat::{FinCat, FinMonCat, Limits, Mor, Obj};

/// One equivalence class of epimorphisms out of a fixed object: p ~ q iff
/// some isomorphism θ has θ∘p = q. The representative is the member with
/// the lexicographically smallest (codomain, morphism) name pair.
#[derive(Debug, Clone)]
pub struct EpiClass {
    pub representative: Mor,
    pub members: Vec<Mor>,
}

pub fn quotients_of(cat: &FinCat, a: Obj, limits: &Limits) -> Result<Vec<EpiClass>> {
    limits.check(cat)?;
    let mut epis = Vec::new();
    for b in cat.objects() {
        for &f in cat.hom(a, b) {
            if cat.is_epi(f, limits)? {
                epis.push(f);
            }
        }
    }
    let equivalent = |p: Mor, q: Mor| -> Result<bool> {
        for &theta in cat.hom(cat.cod(p), cat.cod(q)) {
            if cat.is_iso(theta) && cat.compose(theta, p)? == q {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let mut classes: Vec<Vec<Mor>> = Vec::new();
    'outer: for &p in &epis {
        for class in &mut classes {
            if equivalent(class[0], p)? {
                class.push(p);
                continue 'outer;
            }
        }
        classes.push(vec![p]);
    }
    let sort_key = |m: Mor| {
        (
            cat.object_name(cat.cod(m)).to_string(),
            cat.morphism_name(m).to_string(),
        )
    };
    let mut out: Vec<EpiClass> = classes
        .into_iter()
        .map(|mut members| {
            members.sort_by_key(|&m| sort_key(m));
            EpiClass {
                representative: members[0],
                members,
            }
        })
        .collect();
    out.sort_by_key(|c| sort_key(c.representative));
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct EpiTransferOutcome {
    /// True when every base isomorphism θ with θ∘p = q is a morphism of
    /// the constructed category; a false here is a theorem violation.
    pub holds: bool,
    /// A violating θ, when one exists.
    pub witness: Option<Mor>,
    /// Number of base isomorphisms checked.
    pub checked: usize,
}

/// The executable content of the epi-equivalence transfer: given two
/// epimorphisms of the constructed category out of the same object that
/// are equivalent in the base, every base iso θ witnessing the
/// equivalence must satisfy the constructed category's morphism squares.
/// Preconditions mirror the hypotheses: the whiskered images of p must be
/// epimorphisms (the consequence of the tensor functors' cocontinuity the
/// proofs rely on).
pub fn epi_transfer_check(
    base: &FinMonCat,
    con: &Construction,
    p: Mor,
    q: Mor,
    limits: &Limits,
) -> Result<EpiTransferOutcome> {
    let ccat = con.cat.base();
    if ccat.dom(p) != ccat.dom(q) {
        return Err(Error::Precondition(
            "the two epimorphisms must share their domain".into(),
        ));
    }
    if !ccat.is_epi(p, limits)? || !ccat.is_epi(q, limits)? {
        return Err(Error::Precondition(
            "inputs must be epimorphisms of the constructed category".into(),
        ));
    }
    let base_p = con.underlying(p);
    let base_q = con.underlying(q);

    // Hypotheses: the relevant whiskered images of the base epi stay epi.
    let required: Vec<Mor> = match con.kind {
        ConstructionKind::CentralizerMor(h) => vec![
            base.left_whisker(base.dom(h), base_p)?,
            base.left_whisker(base.cod(h), base_p)?,
        ],
        ConstructionKind::CentralizerObj(x) => vec![base.right_whisker(base_p, x)?],
        ConstructionKind::Center | ConstructionKind::WeakCenter => base
            .objects()
            .map(|w| base.right_whisker(base_p, w))
            .collect::<Result<_>>()?,
    };
    for img in required {
        if !base.is_epi(img, limits)? {
            return Err(Error::Precondition(
                "a whiskered image of the epimorphism fails to be epi; the hypotheses do not hold"
                    .into(),
            ));
        }
    }

    // Base equivalence and the transfer itself.
    let cod_p = con.cat.cod(p);
    let cod_q = con.cat.cod(q);
    let mut checked = 0usize;
    for &theta in base.hom(con.carrier(cod_p), con.carrier(cod_q)) {
        if !base.is_iso(theta) || base.compose(theta, base_p)? != base_q {
            continue;
        }
        checked += 1;
        let is_constructed_morphism = theta_is_morphism(base, con, cod_p, cod_q, theta)?;
        if !is_constructed_morphism {
            return Ok(EpiTransferOutcome {
                holds: false,
                witness: Some(theta),
                checked,
            });
        }
    }
    if checked == 0 {
        return Err(Error::Precondition(
            "the epimorphisms are not equivalent in the base category".into(),
        ));
    }
    Ok(EpiTransferOutcome {
        holds: true,
        witness: None,
        checked,
    })
}

fn theta_is_morphism(
    base: &FinMonCat,
    con: &Construction,
    dom: Obj,
    cod: Obj,
    theta: Mor,
) -> Result<bool> {
    use crate::constructions::{carrier_square_check, zh_square_check};
    match (con.object_data(dom), con.object_data(cod)) {
        (ConstructedObject::Half(s), ConstructedObject::Half(t)) => {
            for x in base.objects() {
                if !carrier_square_check(
                    base,
                    theta,
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
            let ConstructionKind::CentralizerObj(x) = con.kind else {
                return Err(Error::Inconsistency("kind mismatch".into()));
            };
            carrier_square_check(base, theta, x, s.alpha, t.alpha)
        }
        (ConstructedObject::AgainstMorphism(s), ConstructedObject::AgainstMorphism(t)) => {
            let ConstructionKind::CentralizerMor(h) = con.kind else {
                return Err(Error::Inconsistency("kind mismatch".into()));
            };
            Ok(zh_square_check(base, theta, base.dom(h), s.alpha, t.alpha)?
                && zh_square_check(base, theta, base.cod(h), s.beta, t.beta)?)
        }
        _ => Err(Error::Inconsistency("mixed constructed objects".into())),
    }
}
