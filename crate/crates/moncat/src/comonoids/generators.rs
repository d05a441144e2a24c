use std::collections::BTreeSet;

use crate::constructions::{braided_embedding, Construction};
use crate::error::Result;
use crate::fincat::{FinCat, FinMonCat, Mor, Obj};

use super::GeneratingSet;

#[derive(Debug, Clone)]
pub struct GenCheck {
    pub generating: bool,
    /// The first unseparated distinct parallel pair, when not generating.
    pub witness: Option<(Mor, Mor)>,
}

/// A set G generates when every distinct parallel pair f ≠ g: X → Y is
/// separated by some a: G → X with f∘a ≠ g∘a. Decided by enumeration.
pub fn is_generating_set(cat: &FinCat, set: &GeneratingSet) -> Result<GenCheck> {
    for x in cat.objects() {
        for y in cat.objects() {
            let hom = cat.hom(x, y);
            for (i, &f) in hom.iter().enumerate() {
                for &g in &hom[i + 1..] {
                    let mut separated = false;
                    'search: for &gen in &set.members {
                        for &a in cat.hom(gen, x) {
                            if cat.compose(f, a)? != cat.compose(g, a)? {
                                separated = true;
                                break 'search;
                            }
                        }
                    }
                    if !separated {
                        return Ok(GenCheck {
                            generating: false,
                            witness: Some((f, g)),
                        });
                    }
                }
            }
        }
    }
    Ok(GenCheck {
        generating: true,
        witness: None,
    })
}

#[derive(Debug)]
pub struct LiftedGeneratingSet {
    /// Images of the members inside the constructed category.
    pub members: BTreeSet<Obj>,
    /// Separation re-verified inside the target by enumeration; a failed
    /// check is a theorem violation, not an error.
    pub check: GenCheck,
}

/// Lifts a generating set along the braided embedding into a constructed
/// category and re-verifies the separation property there.
pub fn lift_generating_set(
    base: &FinMonCat,
    set: &GeneratingSet,
    target: &Construction,
) -> Result<LiftedGeneratingSet> {
    let phi = braided_embedding(base, target)?;
    let members: BTreeSet<Obj> = set.members.iter().map(|&g| phi.apply_obj(g)).collect();
    let check = is_generating_set(
        target.cat.base(),
        &GeneratingSet {
            members: members.clone(),
        },
    )?;
    Ok(LiftedGeneratingSet { members, check })
}
