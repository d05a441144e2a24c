use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fincat::{Diagram, FinCat, FinMonCat, Functor, Limits, Mor, Obj, TensorFunctor};

/// An apex with one leg per shape object (positional over the shape).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cocone {
    pub apex: Obj,
    pub legs: Vec<Mor>,
}

impl Cocone {
    /// Every shape arrow f: D → D' must satisfy legs[D'] ∘ ℱf = legs[D].
    pub fn commutes(&self, cat: &FinCat, diagram: &Diagram) -> Result<bool> {
        for f in diagram.shape.morphisms() {
            let d = diagram.shape.dom(f);
            let d_next = diagram.shape.cod(f);
            let lhs = cat.compose(self.legs[d_next.index()], diagram.morphism_image(f))?;
            if lhs != self.legs[d.index()] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A verified universal cocone together with the factorization of every
/// competing cocone through it.
#[derive(Debug, Clone)]
pub struct Colimit {
    pub cocone: Cocone,
    pub mediators: BTreeMap<Cocone, Mor>,
}

#[derive(Debug, Clone)]
pub enum ColimitOutcome {
    Found(Colimit),
    /// Absence of a colimit is a value, not an error.
    NotFound,
}

impl ColimitOutcome {
    pub fn found(self) -> Option<Colimit> {
        match self {
            ColimitOutcome::Found(c) => Some(c),
            ColimitOutcome::NotFound => None,
        }
    }
}

/// All commuting cocones of a diagram, apexes in lexicographic order,
/// legs enumerated in index order.
pub(crate) fn all_cocones(cat: &FinCat, diagram: &Diagram) -> Result<Vec<Cocone>> {
    let shape_objects: Vec<Obj> = diagram.shape.objects().collect();
    let mut out = Vec::new();
    for apex in cat.objects() {
        let per_object: Vec<&[Mor]> = shape_objects
            .iter()
            .map(|&d| cat.hom(diagram.object_image(d), apex))
            .collect();
        if per_object.iter().any(|h| h.is_empty()) {
            continue;
        }
        let mut counters = vec![0usize; per_object.len()];
        loop {
            let legs: Vec<Mor> = counters
                .iter()
                .enumerate()
                .map(|(i, &c)| per_object[i][c])
                .collect();
            let cocone = Cocone { apex, legs };
            if cocone.commutes(cat, diagram)? {
                out.push(cocone);
            }
            // odometer
            let mut pos = counters.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                counters[pos] += 1;
                if counters[pos] < per_object[pos].len() {
                    break;
                }
                counters[pos] = 0;
                if pos == 0 {
                    break;
                }
            }
            if counters.iter().all(|&c| c == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// Checks the universal property of `candidate` against every commuting
/// cocone: returns the mediator map when each factors uniquely.
pub fn universality(
    cat: &FinCat,
    diagram: &Diagram,
    candidate: &Cocone,
) -> Result<Option<BTreeMap<Cocone, Mor>>> {
    let competing = all_cocones(cat, diagram)?;
    universality_against(cat, candidate, &competing)
}

fn universality_against(
    cat: &FinCat,
    candidate: &Cocone,
    competing: &[Cocone],
) -> Result<Option<BTreeMap<Cocone, Mor>>> {
    let mut mediators = BTreeMap::new();
    for other in competing {
        let mut found: Option<Mor> = None;
        for &g in cat.hom(candidate.apex, other.apex) {
            let factors = candidate
                .legs
                .iter()
                .zip(&other.legs)
                .map(|(&phi, &psi)| Ok(cat.compose(g, phi)? == psi))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .all(|ok| ok);
            if factors {
                if found.is_some() {
                    return Ok(None); // two factorizations
                }
                found = Some(g);
            }
        }
        match found {
            None => return Ok(None),
            Some(g) => {
                mediators.insert(other.clone(), g);
            }
        }
    }
    Ok(Some(mediators))
}

/// Exhaustive universal-property search. Apexes are scanned in
/// lexicographic order, so when several isomorphic colimits exist the
/// lexicographically smallest apex wins.
pub fn colimit(cat: &FinCat, diagram: &Diagram, limits: &Limits) -> Result<ColimitOutcome> {
    limits.check(cat)?;
    diagram.validate(cat)?;
    let cocones = all_cocones(cat, diagram)?;
    for candidate in &cocones {
        if let Some(mediators) = universality_against(cat, candidate, &cocones)? {
            return Ok(ColimitOutcome::Found(Colimit {
                cocone: candidate.clone(),
                mediators,
            }));
        }
    }
    Ok(ColimitOutcome::NotFound)
}

/// The unique factorization of a competing cocone through a verified
/// colimit. Zero or several factorizations invalidate the stored colimit
/// and surface as hard inconsistencies.
pub fn mediating_morphism(
    cat: &FinCat,
    diagram: &Diagram,
    colimit: &Colimit,
    competing: &Cocone,
) -> Result<Mor> {
    if let Some(&g) = colimit.mediators.get(competing) {
        return Ok(g);
    }
    if !competing.commutes(cat, diagram)? {
        return Err(Error::Precondition(
            "competing cocone does not commute with the diagram".into(),
        ));
    }
    let mut found: Option<Mor> = None;
    for &g in cat.hom(colimit.cocone.apex, competing.apex) {
        let ok = colimit
            .cocone
            .legs
            .iter()
            .zip(&competing.legs)
            .try_fold(true, |acc, (&phi, &psi)| {
                Ok::<_, Error>(acc && cat.compose(g, phi)? == psi)
            })?;
        if ok {
            if found.is_some() {
                return Err(Error::Inconsistency(
                    "two mediating morphisms for a verified colimit".into(),
                ));
            }
            found = Some(g);
        }
    }
    found.ok_or_else(|| Error::Inconsistency("no mediating morphism for a verified colimit".into()))
}

#[derive(Debug, Clone)]
pub struct CocontinuityReport {
    pub cocontinuous: bool,
    /// Index of the first violating diagram, when not cocontinuous.
    pub witness: Option<usize>,
    /// Indices of diagrams skipped because they have no colimit.
    pub skipped: Vec<usize>,
}

/// Decides whether a tensor functor preserves the colimits of the
/// supplied diagrams: the image cocone must be a colimit of the image
/// diagram for each of them.
pub fn is_cocontinuous(
    cat: &FinMonCat,
    tf: &TensorFunctor,
    diagrams: &[Diagram],
    limits: &Limits,
) -> Result<CocontinuityReport> {
    let mut skipped = Vec::new();
    for (i, diagram) in diagrams.iter().enumerate() {
        let col = match colimit(cat.base(), diagram, limits)? {
            ColimitOutcome::Found(c) => c,
            ColimitOutcome::NotFound => {
                skipped.push(i);
                continue;
            }
        };
        let image_assignment = Functor {
            object_map: diagram
                .assignment
                .object_map
                .iter()
                .map(|&o| tf.apply_obj(cat, o))
                .collect::<Result<_>>()?,
            morphism_map: diagram
                .assignment
                .morphism_map
                .iter()
                .map(|&m| tf.apply_mor(cat, m))
                .collect::<Result<_>>()?,
        };
        let image_diagram = Diagram {
            shape: diagram.shape.clone(),
            assignment: image_assignment,
        };
        let image_cocone = Cocone {
            apex: tf.apply_obj(cat, col.cocone.apex)?,
            legs: col
                .cocone
                .legs
                .iter()
                .map(|&m| tf.apply_mor(cat, m))
                .collect::<Result<_>>()?,
        };
        if !image_cocone.commutes(cat.base(), &image_diagram)?
            || universality(cat.base(), &image_diagram, &image_cocone)?.is_none()
        {
            return Ok(CocontinuityReport {
                cocontinuous: false,
                witness: Some(i),
                skipped,
            });
        }
    }
    Ok(CocontinuityReport {
        cocontinuous: true,
        witness: None,
        skipped,
    })
}
