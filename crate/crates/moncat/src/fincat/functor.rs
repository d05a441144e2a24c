use crate::error::{Error, Result};
use crate::fincat::{FinCat, Mor, Obj};

/// A functor between two finite categories, stored as positional object
/// and morphism maps over the source category's indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub object_map: Vec<Obj>,
    pub morphism_map: Vec<Mor>,
}

impl Functor {
    pub fn identity(cat: &FinCat) -> Self {
        Functor {
            object_map: cat.objects().collect(),
            morphism_map: cat.morphisms().collect(),
        }
    }

    pub fn apply_obj(&self, o: Obj) -> Obj {
        self.object_map[o.index()]
    }

    pub fn apply_mor(&self, m: Mor) -> Mor {
        self.morphism_map[m.index()]
    }

    /// `self` then `next`.
    pub fn then(&self, next: &Functor) -> Functor {
        Functor {
            object_map: self.object_map.iter().map(|&o| next.apply_obj(o)).collect(),
            morphism_map: self
                .morphism_map
                .iter()
                .map(|&m| next.apply_mor(m))
                .collect(),
        }
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.object_map.iter().all(|o| seen.insert(*o))
    }

    pub fn is_injective_on_morphisms(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.morphism_map.iter().all(|m| seen.insert(*m))
    }

    /// Distinct morphisms have distinct images.
    pub fn is_faithful(&self) -> bool {
        self.is_injective_on_morphisms()
    }

    /// Checks dom/cod preservation, identities and composition by full
    /// enumeration.
    pub fn verify(&self, source: &FinCat, target: &FinCat) -> Result<()> {
        if self.object_map.len() != source.object_count()
            || self.morphism_map.len() != source.morphism_count()
        {
            return Err(Error::Malformed(
                "functor maps do not cover the source category".into(),
            ));
        }
        for m in source.morphisms() {
            let fm = self.apply_mor(m);
            if target.dom(fm) != self.apply_obj(source.dom(m))
                || target.cod(fm) != self.apply_obj(source.cod(m))
            {
                return Err(Error::Inconsistency(format!(
                    "functor breaks dom/cod at `{}`",
                    source.morphism_name(m)
                )));
            }
        }
        for o in source.objects() {
            if self.apply_mor(source.identity(o)) != target.identity(self.apply_obj(o)) {
                return Err(Error::Inconsistency(format!(
                    "functor breaks the identity of `{}`",
                    source.object_name(o)
                )));
            }
        }
        for f in source.morphisms() {
            for g in source.morphisms() {
                if source.cod(f) != source.dom(g) {
                    continue;
                }
                let gf = source.compose(g, f)?;
                let image = target.compose(self.apply_mor(g), self.apply_mor(f))?;
                if image != self.apply_mor(gf) {
                    return Err(Error::Inconsistency(format!(
                        "functor breaks composition at ({}, {})",
                        source.morphism_name(g),
                        source.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }
}
