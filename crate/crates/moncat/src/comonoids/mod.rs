//! Comonoids in a finite strict monoidal category: enumeration, the
//! comonoid category with its forgetful functor, cofree comonoids found
//! as terminal objects of comma categories (by direct search, never by
//! adjoint-functor machinery), generating sets with the braided lifting,
//! quotient enumeration and the epi-equivalence transfer check.

mod cofree;
mod enumerate;
mod generators;
mod quotients;
#[cfg(test)]
mod tests;

pub use cofree::{cofree_comonoid, CofreeOutcome, CofreeRejection, CofreeTrace, CouniversalArrow};
pub use enumerate::{
    comonoid_category, enumerate_comonoids, ComonCat, ComonoidCategory, ComonoidEnumeration,
};
pub use generators::{is_generating_set, lift_generating_set, GenCheck, LiftedGeneratingSet};
pub use quotients::{epi_transfer_check, quotients_of, EpiClass, EpiTransferOutcome};

use crate::fincat::{FinMonCat, Mor, Obj};

/// A carrier with comultiplication Δ: C → C⊗C and counit ε: C → I
/// satisfying coassociativity and both counit laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comonoid {
    pub carrier: Obj,
    pub comult: Mor,
    pub counit: Mor,
}

/// A set of objects separating distinct parallel pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub members: std::collections::BTreeSet<Obj>,
}

impl GeneratingSet {
    pub fn new(members: impl IntoIterator<Item = Obj>) -> Self {
        GeneratingSet {
            members: members.into_iter().collect(),
        }
    }
}

pub(crate) fn comonoid_name(base: &FinMonCat, c: &Comonoid) -> String {
    format!(
        "({};d={},e={})",
        base.object_name(c.carrier),
        base.morphism_name(c.comult),
        base.morphism_name(c.counit)
    )
}
