//! Finite colimits by universal-property search, cocontinuity of tensor
//! functors decided per diagram, and the inheritance constructions that
//! produce colimits in Z_h(C), Z_X(C), Z(C) and Z_ω(C) from base colimits
//! by inducing the components as unique mediating morphisms.

mod inherit;
mod search;
#[cfg(test)]
mod tests;

pub use inherit::{
    colimit_in_center, colimit_in_centralizer_mor, colimit_in_centralizer_obj,
    colimit_in_construction, colimit_in_weak_center, InheritedColimit,
};
pub use search::{
    colimit, is_cocontinuous, mediating_morphism, universality, Cocone, CocontinuityReport,
    Colimit, ColimitOutcome,
};
