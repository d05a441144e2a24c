use crate::error::Result;
use crate::fincat::{FinMonCat, Limits, Mor, Obj};

use super::enumerate::{comonoid_category, ComonoidCategory};
use super::Comonoid;

/// A cofree comonoid over V: the comonoid together with the co-universal
/// arrow u: U(cofree) → V through which every (comonoid, arrow-to-V) pair
/// factors by exactly one comonoid morphism.
#[derive(Debug, Clone)]
pub struct CouniversalArrow {
    pub cofree: Comonoid,
    pub arrow: Mor,
}

/// Why a comma-category candidate failed the couniversal property.
#[derive(Debug, Clone)]
pub struct CofreeRejection {
    pub candidate: Comonoid,
    pub arrow: Mor,
    pub competing: Comonoid,
    pub competing_arrow: Mor,
    pub factorizations: usize,
}

#[derive(Debug)]
pub struct CofreeTrace {
    /// Size of the comma category (comonoid, arrow-to-V) searched.
    pub comma_objects: usize,
    pub rejections: Vec<CofreeRejection>,
    pub skipped_carriers: Vec<(Obj, String)>,
}

#[derive(Debug)]
pub enum CofreeOutcome {
    Found {
        witness: CouniversalArrow,
        trace: CofreeTrace,
    },
    NotFound {
        trace: CofreeTrace,
    },
}

impl CofreeOutcome {
    pub fn trace(&self) -> &CofreeTrace {
        match self {
            CofreeOutcome::Found { trace, .. } => trace,
            CofreeOutcome::NotFound { trace } => trace,
        }
    }

    pub fn witness(&self) -> Option<&CouniversalArrow> {
        match self {
            CofreeOutcome::Found { witness, .. } => Some(witness),
            CofreeOutcome::NotFound { .. } => None,
        }
    }
}

/// Searches the comma category (forgetful ↓ V) for a terminal object by
/// full enumeration: every candidate pair is verified against every
/// competing pair, and each rejection is recorded with its failing
/// competitor.
pub fn cofree_comonoid(base: &FinMonCat, v: Obj, limits: &Limits) -> Result<CofreeOutcome> {
    let comon = comonoid_category(base, limits)?;
    cofree_in(base, &comon, v)
}

/// Same search against an already-built comonoid category.
pub fn cofree_in(
    base: &FinMonCat,
    comon: &ComonoidCategory,
    v: Obj,
) -> Result<CofreeOutcome> {
    let plain = comon.cat.plain();

    // Comma category objects in deterministic order.
    let mut comma: Vec<(usize, Mor)> = Vec::new();
    for (i, c) in comon.comonoids.iter().enumerate() {
        for &u in base.hom(c.carrier, v) {
            comma.push((i, u));
        }
    }

    let mut rejections = Vec::new();
    let mut found = None;
    'candidates: for &(di, u) in &comma {
        let d_obj = plain.objects().nth(di).expect("object index");
        for &(ei, f) in &comma {
            let e_obj = plain.objects().nth(ei).expect("object index");
            // Comonoid morphisms f': E → D with u ∘ U(f') = f.
            let mut count = 0usize;
            for &fp in plain.hom(e_obj, d_obj) {
                if base.compose(u, comon.forget.apply_mor(fp))? == f {
                    count += 1;
                }
            }
            if count != 1 {
                rejections.push(CofreeRejection {
                    candidate: comon.comonoids[di].clone(),
                    arrow: u,
                    competing: comon.comonoids[ei].clone(),
                    competing_arrow: f,
                    factorizations: count,
                });
                continue 'candidates;
            }
        }
        found = Some(CouniversalArrow {
            cofree: comon.comonoids[di].clone(),
            arrow: u,
        });
        break;
    }

    let trace = CofreeTrace {
        comma_objects: comma.len(),
        rejections,
        skipped_carriers: comon.skipped_carriers.clone(),
    };
    Ok(match found {
        Some(witness) => CofreeOutcome::Found { witness, trace },
        None => CofreeOutcome::NotFound { trace },
    })
}
