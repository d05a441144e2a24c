use crate::error::{Error, Result};
use crate::fincat::{FinCat, Functor, Mor, Obj};

/// A finite diagram: a shape category together with a functor into a
/// target category. Assignments are positional over the shape's indices.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub shape: FinCat,
    pub assignment: Functor,
}

impl Diagram {
    /// One object, identity only, mapped to `at`.
    pub fn constant(target: &FinCat, at: Obj) -> Result<Diagram> {
        let mut b = crate::fincat::FinCatBuilder::new();
        b.object("d0");
        let shape = b.build()?;
        let assignment = Functor {
            object_map: vec![at],
            morphism_map: vec![target.identity(at)],
        };
        let d = Diagram { shape, assignment };
        d.validate(target)?;
        Ok(d)
    }

    /// Discrete diagram on the given target objects, shape objects named
    /// `d0, d1, ...` in the order given.
    pub fn discrete(target: &FinCat, at: &[Obj]) -> Result<Diagram> {
        let mut b = crate::fincat::FinCatBuilder::new();
        for i in 0..at.len() {
            b.object(format!("d{i}"));
        }
        let shape = b.build()?;
        // Shape objects sort lexicographically; d0..d9 keeps given order.
        if at.len() > 10 {
            return Err(Error::Malformed(
                "discrete diagram helper supports at most 10 objects".into(),
            ));
        }
        let assignment = Functor {
            object_map: at.to_vec(),
            morphism_map: at.iter().map(|&o| target.identity(o)).collect(),
        };
        let d = Diagram { shape, assignment };
        d.validate(target)?;
        Ok(d)
    }

    /// Single-arrow shape `d0 → d1` mapped to `f`.
    pub fn single_arrow(target: &FinCat, f: Mor) -> Result<Diagram> {
        let mut b = crate::fincat::FinCatBuilder::new();
        b.object("d0").object("d1");
        b.morphism("a", "d0", "d1");
        let shape = b.build()?;
        let dom = target.dom(f);
        let cod = target.cod(f);
        let a = shape.mor("a")?;
        let mut morphism_map = vec![Mor(0); shape.morphism_count()];
        morphism_map[a.index()] = f;
        morphism_map[shape.mor("id_d0")?.index()] = target.identity(dom);
        morphism_map[shape.mor("id_d1")?.index()] = target.identity(cod);
        let assignment = Functor {
            object_map: vec![dom, cod],
            morphism_map,
        };
        let d = Diagram { shape, assignment };
        d.validate(target)?;
        Ok(d)
    }

    pub fn validate(&self, target: &FinCat) -> Result<()> {
        self.assignment.verify(&self.shape, target)
    }

    /// Post-composes the assignment with a functor into another category.
    pub fn map(&self, next: &Functor) -> Diagram {
        Diagram {
            shape: self.shape.clone(),
            assignment: self.assignment.then(next),
        }
    }

    pub fn object_image(&self, d: Obj) -> Obj {
        self.assignment.apply_obj(d)
    }

    pub fn morphism_image(&self, f: Mor) -> Mor {
        self.assignment.apply_mor(f)
    }
}
