//! UTF-8 JSON file formats for categories and diagrams.
//!
//! Category files carry explicit tables. Identities may be omitted and are
//! auto-generated as `id_<obj>`; compositions with an identity, tensors
//! with the unit and identity-with-identity tensors are auto-filled on
//! load, so writers omit them. Unknown keys are rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{Diagram, FinCat, FinCatBuilder, FinMonCat, FinMonCatBuilder, Functor, Mor};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialityFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub composition: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensor_objects: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensor_morphisms: Vec<[String; 2]>,
}

impl PartialityFile {
    fn is_empty(&self) -> bool {
        self.composition.is_empty()
            && self.tensor_objects.is_empty()
            && self.tensor_morphisms.is_empty()
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismFile>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub identities: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub composition: Vec<[String; 3]>,
    pub unit: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensor_objects: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensor_morphisms: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "PartialityFile::is_empty")]
    pub partial: PartialityFile,
}

pub fn parse_category(text: &str) -> Result<FinMonCat> {
    let file: CategoryFile =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    category_from_file(&file)
}

pub fn category_from_file(file: &CategoryFile) -> Result<FinMonCat> {
    let mut b = FinMonCatBuilder::new();
    b.cat().objects(file.objects.iter().cloned());
    for m in &file.morphisms {
        b.cat().morphism(&m.name, &m.dom, &m.cod);
    }
    for (o, m) in &file.identities {
        b.cat().identity(o, m);
    }
    for [g, f, r] in &file.composition {
        b.cat().compose(g, f, r);
    }
    for [g, f] in &file.partial.composition {
        b.cat().truncated_compose(g, f);
    }
    b.unit(&file.unit);
    for [a, x, r] in &file.tensor_objects {
        b.tensor_obj(a, x, r);
    }
    for [a, x] in &file.partial.tensor_objects {
        b.truncated_tensor_obj(a, x);
    }
    for [f, g, r] in &file.tensor_morphisms {
        b.tensor_mor(f, g, r);
    }
    for [f, g] in &file.partial.tensor_morphisms {
        b.truncated_tensor_mor(f, g);
    }
    if let Some(entries) = &file.braiding {
        for [a, x, m] in entries {
            b.braiding_entry(a, x, m);
        }
    }
    b.build()
}

pub fn category_to_file(cat: &FinMonCat, provenance: Option<serde_json::Value>) -> CategoryFile {
    let unit = cat.unit();
    let unit_id = cat.identity(unit);

    let mut identities = BTreeMap::new();
    for o in cat.objects() {
        let id = cat.identity(o);
        if cat.morphism_name(id) != format!("id_{}", cat.object_name(o)) {
            identities.insert(
                cat.object_name(o).to_string(),
                cat.morphism_name(id).to_string(),
            );
        }
    }

    let mut composition = Vec::new();
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            if cat.cod(f) != cat.dom(g) || cat.is_identity(g) || cat.is_identity(f) {
                continue;
            }
            if let Some(r) = cat.compose_opt(g, f) {
                composition.push([
                    cat.morphism_name(g).to_string(),
                    cat.morphism_name(f).to_string(),
                    cat.morphism_name(r).to_string(),
                ]);
            }
        }
    }

    let mut tensor_objects = Vec::new();
    for a in cat.objects() {
        for b in cat.objects() {
            if a == unit || b == unit {
                continue;
            }
            if let Some(r) = cat.tensor_obj_opt(a, b) {
                tensor_objects.push([
                    cat.object_name(a).to_string(),
                    cat.object_name(b).to_string(),
                    cat.object_name(r).to_string(),
                ]);
            }
        }
    }

    let mut tensor_morphisms = Vec::new();
    for f in cat.morphisms() {
        for g in cat.morphisms() {
            if f == unit_id || g == unit_id {
                continue;
            }
            if cat.is_identity(f) && cat.is_identity(g) {
                continue;
            }
            if let Some(r) = cat.tensor_mor_opt(f, g) {
                tensor_morphisms.push([
                    cat.morphism_name(f).to_string(),
                    cat.morphism_name(g).to_string(),
                    cat.morphism_name(r).to_string(),
                ]);
            }
        }
    }

    let braiding = if cat.has_braiding() {
        let mut rows = Vec::new();
        for a in cat.objects() {
            for b in cat.objects() {
                if let Ok(m) = cat.braiding(a, b) {
                    rows.push([
                        cat.object_name(a).to_string(),
                        cat.object_name(b).to_string(),
                        cat.morphism_name(m).to_string(),
                    ]);
                }
            }
        }
        Some(rows)
    } else {
        None
    };

    let partiality = cat.partiality();
    let partial = PartialityFile {
        composition: partiality
            .composition
            .iter()
            .map(|&(g, f)| {
                [
                    cat.morphism_name(g).to_string(),
                    cat.morphism_name(f).to_string(),
                ]
            })
            .collect(),
        tensor_objects: partiality
            .tensor_objects
            .iter()
            .map(|&(a, b)| {
                [
                    cat.object_name(a).to_string(),
                    cat.object_name(b).to_string(),
                ]
            })
            .collect(),
        tensor_morphisms: partiality
            .tensor_morphisms
            .iter()
            .map(|&(f, g)| {
                [
                    cat.morphism_name(f).to_string(),
                    cat.morphism_name(g).to_string(),
                ]
            })
            .collect(),
    };

    CategoryFile {
        objects: cat.objects().map(|o| cat.object_name(o).to_string()).collect(),
        morphisms: cat
            .morphisms()
            .map(|m| MorphismFile {
                name: cat.morphism_name(m).to_string(),
                dom: cat.object_name(cat.dom(m)).to_string(),
                cod: cat.object_name(cat.cod(m)).to_string(),
            })
            .collect(),
        identities,
        composition,
        unit: cat.object_name(unit).to_string(),
        tensor_objects,
        tensor_morphisms,
        braiding,
        provenance,
        partial,
    }
}

pub fn write_category(cat: &FinMonCat, provenance: Option<serde_json::Value>) -> String {
    let file = category_to_file(cat, provenance);
    serde_json::to_string_pretty(&file).expect("category files always serialize")
}

// ── Diagram files ───────────────────────────────────────────────────────

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeFile {
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub arrows: Vec<MorphismFile>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub identities: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub composition: Vec<[String; 3]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssignmentFile {
    pub objects: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub arrows: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub shape: ShapeFile,
    pub assignment: AssignmentFile,
}

/// Parses a diagram against `target`. Identity arrows of the shape may be
/// omitted from the assignment; they map to identities of the assigned
/// objects.
pub fn parse_diagram(text: &str, target: &FinCat) -> Result<Diagram> {
    let file: DiagramFile =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    diagram_from_file(&file, target)
}

pub fn diagram_from_file(file: &DiagramFile, target: &FinCat) -> Result<Diagram> {
    let mut b = FinCatBuilder::new();
    b.objects(file.shape.objects.iter().cloned());
    for a in &file.shape.arrows {
        b.morphism(&a.name, &a.dom, &a.cod);
    }
    for (o, m) in &file.shape.identities {
        b.identity(o, m);
    }
    for [g, f, r] in &file.shape.composition {
        b.compose(g, f, r);
    }
    let shape = b.build()?;

    let mut object_map = Vec::with_capacity(shape.object_count());
    for o in shape.objects() {
        let name = shape.object_name(o);
        let image = file.assignment.objects.get(name).ok_or_else(|| {
            Error::Malformed(format!("assignment is missing shape object `{name}`"))
        })?;
        object_map.push(target.obj(image)?);
    }
    let mut morphism_map = vec![Mor(u32::MAX); shape.morphism_count()];
    for m in shape.morphisms() {
        let name = shape.morphism_name(m);
        let image = match file.assignment.arrows.get(name) {
            Some(image) => target.mor(image)?,
            None if shape.is_identity(m) => {
                target.identity(object_map[shape.dom(m).index()])
            }
            None => {
                return Err(Error::Malformed(format!(
                    "assignment is missing shape arrow `{name}`"
                )))
            }
        };
        morphism_map[m.index()] = image;
    }

    let diagram = Diagram {
        shape,
        assignment: Functor {
            object_map,
            morphism_map,
        },
    };
    diagram.validate(target)?;
    Ok(diagram)
}
