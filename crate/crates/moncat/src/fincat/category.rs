use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of an object inside one category. Indices follow lexicographic
/// order of the object names, so iterating `0..cat.object_count()` is the
/// canonical deterministic enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obj(pub(crate) u32);

/// Index of a morphism inside one category, lexicographic by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mor(pub(crate) u32);

impl Obj {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Mor {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Size guardrails for operations that enumerate. Everything downstream of
/// the kernel is exponential, so enumerating operations refuse categories
/// above these bounds with a clear error instead of hanging.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 64,
            max_morphisms: 4096,
        }
    }
}

impl Limits {
    pub fn check(&self, cat: &FinCat) -> Result<()> {
        if cat.object_count() > self.max_objects {
            return Err(Error::LimitExceeded {
                what: "object",
                actual: cat.object_count(),
                max: self.max_objects,
            });
        }
        if cat.morphism_count() > self.max_morphisms {
            return Err(Error::LimitExceeded {
                what: "morphism",
                actual: cat.morphism_count(),
                max: self.max_morphisms,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub(crate) struct MorData {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// Table entries that are composable/definable but fall outside a
/// truncation window (braid-category exports). Empty for ordinary
/// categories; lookups hitting a recorded pair fail loudly instead of
/// silently inventing data.
#[derive(Debug, Clone, Default)]
pub struct PartialityReport {
    pub composition: BTreeSet<(Mor, Mor)>,
    pub tensor_objects: BTreeSet<(Obj, Obj)>,
    pub tensor_morphisms: BTreeSet<(Mor, Mor)>,
}

impl PartialityReport {
    pub fn is_empty(&self) -> bool {
        self.composition.is_empty()
            && self.tensor_objects.is_empty()
            && self.tensor_morphisms.is_empty()
    }
}

/// A finite category: objects, morphisms, identities and a composition
/// table. Morphism equality is identifier equality; no quotienting happens
/// here.
#[derive(Debug, Clone)]
pub struct FinCat {
    objects: Vec<String>,
    obj_index: BTreeMap<String, Obj>,
    morphisms: Vec<MorData>,
    mor_index: BTreeMap<String, Mor>,
    identities: Vec<Mor>,
    composition: HashMap<(u32, u32), Mor>,
    truncated_composition: BTreeSet<(Mor, Mor)>,
    /// `homs[dom][cod]`, each sorted by index.
    homs: Vec<Vec<Vec<Mor>>>,
}

impl FinCat {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.objects.len() as u32).map(Obj)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = Mor> + '_ {
        (0..self.morphisms.len() as u32).map(Mor)
    }

    pub fn object_name(&self, o: Obj) -> &str {
        &self.objects[o.index()]
    }

    pub fn morphism_name(&self, m: Mor) -> &str {
        &self.morphisms[m.index()].name
    }

    pub fn obj(&self, name: &str) -> Result<Obj> {
        self.obj_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn mor(&self, name: &str) -> Result<Mor> {
        self.mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn dom(&self, m: Mor) -> Obj {
        self.morphisms[m.index()].dom
    }

    pub fn cod(&self, m: Mor) -> Obj {
        self.morphisms[m.index()].cod
    }

    pub fn identity(&self, o: Obj) -> Mor {
        self.identities[o.index()]
    }

    pub fn is_identity(&self, m: Mor) -> bool {
        self.identities[self.dom(m).index()] == m && self.dom(m) == self.cod(m)
    }

    /// Composite `g ∘ f` (f first). Errors on non-composable pairs and on
    /// pairs recorded as lying outside a truncation window.
    pub fn compose(&self, g: Mor, f: Mor) -> Result<Mor> {
        if self.cod(f) != self.dom(g) {
            return Err(Error::NotComposable {
                g: self.morphism_name(g).to_string(),
                f: self.morphism_name(f).to_string(),
            });
        }
        if self.truncated_composition.contains(&(g, f)) {
            return Err(Error::Truncated {
                left: self.morphism_name(g).to_string(),
                right: self.morphism_name(f).to_string(),
            });
        }
        self.composition
            .get(&(g.0, f.0))
            .copied()
            .ok_or_else(|| Error::Inconsistency(format!(
                "composition table has no entry for ({}, {})",
                self.morphism_name(g),
                self.morphism_name(f)
            )))
    }

    /// Raw table lookup, `None` when not composable or outside the window.
    pub fn compose_opt(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.composition.get(&(g.0, f.0)).copied()
    }

    pub fn hom(&self, a: Obj, b: Obj) -> &[Mor] {
        &self.homs[a.index()][b.index()]
    }

    pub fn is_truncated(&self) -> bool {
        !self.truncated_composition.is_empty()
    }

    pub fn truncated_composition(&self) -> &BTreeSet<(Mor, Mor)> {
        &self.truncated_composition
    }

    /// Two-sided inverse of `f` when one exists in the table.
    pub fn inverse(&self, f: Mor) -> Option<Mor> {
        let (a, b) = (self.dom(f), self.cod(f));
        for &g in self.hom(b, a) {
            if self.compose_opt(g, f) == Some(self.identity(a))
                && self.compose_opt(f, g) == Some(self.identity(b))
            {
                return Some(g);
            }
        }
        None
    }

    pub fn is_iso(&self, f: Mor) -> bool {
        self.inverse(f).is_some()
    }

    /// `f` is epi iff every parallel pair `u, v` with `u∘f = v∘f` has
    /// `u = v`, decided by full enumeration.
    pub fn is_epi(&self, f: Mor, limits: &Limits) -> Result<bool> {
        limits.check(self)?;
        let b = self.cod(f);
        for c in self.objects() {
            let out = self.hom(b, c);
            for (i, &u) in out.iter().enumerate() {
                for &v in &out[i + 1..] {
                    if self.compose(u, f)? == self.compose(v, f)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// A finite strict monoidal category: a [`FinCat`] plus a strictly
/// associative and unital tensor table on objects and morphisms, and an
/// optional braiding table.
#[derive(Debug, Clone)]
pub struct FinMonCat {
    base: FinCat,
    unit: Obj,
    tensor_obj: HashMap<(u32, u32), Obj>,
    tensor_mor: HashMap<(u32, u32), Mor>,
    truncated_tensor_obj: BTreeSet<(Obj, Obj)>,
    truncated_tensor_mor: BTreeSet<(Mor, Mor)>,
    braiding: Option<HashMap<(u32, u32), Mor>>,
}

impl Deref for FinMonCat {
    type Target = FinCat;
    fn deref(&self) -> &FinCat {
        &self.base
    }
}

impl FinMonCat {
    pub fn base(&self) -> &FinCat {
        &self.base
    }

    pub fn unit(&self) -> Obj {
        self.unit
    }

    pub fn tensor_obj(&self, a: Obj, b: Obj) -> Result<Obj> {
        if self.truncated_tensor_obj.contains(&(a, b)) {
            return Err(Error::Truncated {
                left: self.object_name(a).to_string(),
                right: self.object_name(b).to_string(),
            });
        }
        self.tensor_obj.get(&(a.0, b.0)).copied().ok_or_else(|| {
            Error::Inconsistency(format!(
                "tensor table has no entry for objects ({}, {})",
                self.object_name(a),
                self.object_name(b)
            ))
        })
    }

    pub fn tensor_obj_opt(&self, a: Obj, b: Obj) -> Option<Obj> {
        self.tensor_obj.get(&(a.0, b.0)).copied()
    }

    pub fn tensor_mor(&self, f: Mor, g: Mor) -> Result<Mor> {
        if self.truncated_tensor_mor.contains(&(f, g)) {
            return Err(Error::Truncated {
                left: self.morphism_name(f).to_string(),
                right: self.morphism_name(g).to_string(),
            });
        }
        self.tensor_mor.get(&(f.0, g.0)).copied().ok_or_else(|| {
            Error::Inconsistency(format!(
                "tensor table has no entry for morphisms ({}, {})",
                self.morphism_name(f),
                self.morphism_name(g)
            ))
        })
    }

    pub fn tensor_mor_opt(&self, f: Mor, g: Mor) -> Option<Mor> {
        self.tensor_mor.get(&(f.0, g.0)).copied()
    }

    pub fn has_braiding(&self) -> bool {
        self.braiding.is_some()
    }

    /// Braiding component `Ψ_{A,B}: A⊗B → B⊗A`.
    pub fn braiding(&self, a: Obj, b: Obj) -> Result<Mor> {
        let table = self.braiding.as_ref().ok_or(Error::MissingBraiding)?;
        table.get(&(a.0, b.0)).copied().ok_or_else(|| {
            Error::Inconsistency(format!(
                "braiding table has no entry for ({}, {})",
                self.object_name(a),
                self.object_name(b)
            ))
        })
    }

    pub fn is_partial(&self) -> bool {
        self.base.is_truncated()
            || !self.truncated_tensor_obj.is_empty()
            || !self.truncated_tensor_mor.is_empty()
    }

    pub fn partiality(&self) -> PartialityReport {
        PartialityReport {
            composition: self.base.truncated_composition.clone(),
            tensor_objects: self.truncated_tensor_obj.clone(),
            tensor_morphisms: self.truncated_tensor_mor.clone(),
        }
    }

    /// `id_A ⊗ f` (left tensoring by the identity of `x`).
    pub fn left_whisker(&self, x: Obj, f: Mor) -> Result<Mor> {
        self.tensor_mor(self.identity(x), f)
    }

    /// `f ⊗ id_A` (right tensoring by the identity of `x`).
    pub fn right_whisker(&self, f: Mor, x: Obj) -> Result<Mor> {
        self.tensor_mor(f, self.identity(x))
    }
}

/// Which side a tensor functor fixes: `Left` is `P_X = X ⊗ −`, `Right` is
/// `Q_X = − ⊗ X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorSide {
    Left,
    Right,
}

/// The endofunctor `X ⊗ −` or `− ⊗ X`; application is a table lookup.
#[derive(Debug, Clone, Copy)]
pub struct TensorFunctor {
    pub side: TensorSide,
    pub fixed: Obj,
}

impl TensorFunctor {
    pub fn left(fixed: Obj) -> Self {
        TensorFunctor {
            side: TensorSide::Left,
            fixed,
        }
    }

    pub fn right(fixed: Obj) -> Self {
        TensorFunctor {
            side: TensorSide::Right,
            fixed,
        }
    }

    pub fn apply_obj(&self, cat: &FinMonCat, x: Obj) -> Result<Obj> {
        match self.side {
            TensorSide::Left => cat.tensor_obj(self.fixed, x),
            TensorSide::Right => cat.tensor_obj(x, self.fixed),
        }
    }

    pub fn apply_mor(&self, cat: &FinMonCat, f: Mor) -> Result<Mor> {
        match self.side {
            TensorSide::Left => cat.left_whisker(self.fixed, f),
            TensorSide::Right => cat.right_whisker(f, self.fixed),
        }
    }

    pub fn describe(&self, cat: &FinMonCat) -> String {
        match self.side {
            TensorSide::Left => format!("P_{}", cat.object_name(self.fixed)),
            TensorSide::Right => format!("Q_{}", cat.object_name(self.fixed)),
        }
    }
}

// ── Builders ────────────────────────────────────────────────────────────

/// Assembles a [`FinCat`] from raw name-based tables, sorting objects and
/// morphisms lexicographically and auto-filling identity compositions.
#[derive(Debug, Default)]
pub struct FinCatBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: BTreeMap<String, String>,
    composition: Vec<(String, String, String)>,
    truncated_composition: Vec<(String, String)>,
    auto_identities: bool,
}

impl FinCatBuilder {
    pub fn new() -> Self {
        FinCatBuilder {
            auto_identities: true,
            ..Default::default()
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> &mut Self {
        self.objects.push(name.into());
        self
    }

    pub fn objects<I: IntoIterator<Item = S>, S: Into<String>>(&mut self, it: I) -> &mut Self {
        self.objects.extend(it.into_iter().map(Into::into));
        self
    }

    pub fn morphism(
        &mut self,
        name: impl Into<String>,
        dom: impl Into<String>,
        cod: impl Into<String>,
    ) -> &mut Self {
        self.morphisms.push((name.into(), dom.into(), cod.into()));
        self
    }

    /// Explicit identity assignment; disables auto-generation for `obj`.
    pub fn identity(&mut self, obj: impl Into<String>, mor: impl Into<String>) -> &mut Self {
        self.identities.insert(obj.into(), mor.into());
        self
    }

    /// `g ∘ f = result`.
    pub fn compose(
        &mut self,
        g: impl Into<String>,
        f: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.composition.push((g.into(), f.into(), result.into()));
        self
    }

    /// Marks a composable pair as lying outside a truncation window.
    pub fn truncated_compose(&mut self, g: impl Into<String>, f: impl Into<String>) -> &mut Self {
        self.truncated_composition.push((g.into(), f.into()));
        self
    }

    pub fn build(&self) -> Result<FinCat> {
        let mut objects: Vec<String> = self.objects.clone();
        objects.sort();
        for w in objects.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Malformed(format!("duplicate object `{}`", w[0])));
            }
        }
        if objects.iter().any(|o| o.is_empty()) {
            return Err(Error::Malformed("empty object name".into()));
        }

        let mut morphism_rows = self.morphisms.clone();
        // Auto-generate missing identities as id_<obj>, reusing an explicit
        // morphism of that name when it already denotes an endomorphism.
        if self.auto_identities {
            for o in &objects {
                if !self.identities.contains_key(o) {
                    let name = format!("id_{o}");
                    if let Some((_, dom, cod)) =
                        morphism_rows.iter().find(|(n, _, _)| n == &name)
                    {
                        if dom != o || cod != o {
                            return Err(Error::Malformed(format!(
                                "auto-generated identity name `{name}` collides with a non-endomorphism"
                            )));
                        }
                        continue;
                    }
                    morphism_rows.push((name, o.clone(), o.clone()));
                }
            }
        }
        morphism_rows.sort_by(|a, b| a.0.cmp(&b.0));
        for w in morphism_rows.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::Malformed(format!("duplicate morphism `{}`", w[0].0)));
            }
        }
        if morphism_rows.iter().any(|(n, _, _)| n.is_empty()) {
            return Err(Error::Malformed("empty morphism name".into()));
        }

        let obj_index: BTreeMap<String, Obj> = objects
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Obj(i as u32)))
            .collect();
        let lookup_obj = |name: &str| -> Result<Obj> {
            obj_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownObject(name.to_string()))
        };

        let mut morphisms = Vec::with_capacity(morphism_rows.len());
        for (name, dom, cod) in &morphism_rows {
            morphisms.push(MorData {
                name: name.clone(),
                dom: lookup_obj(dom)?,
                cod: lookup_obj(cod)?,
            });
        }
        let mor_index: BTreeMap<String, Mor> = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.name.clone(), Mor(i as u32)))
            .collect();
        let lookup_mor = |name: &str| -> Result<Mor> {
            mor_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
        };

        let mut identities = vec![Mor(u32::MAX); objects.len()];
        for (o, name) in objects.iter().enumerate() {
            let id_name = self
                .identities
                .get(name)
                .cloned()
                .unwrap_or_else(|| format!("id_{name}"));
            let m = lookup_mor(&id_name)?;
            let data = &morphisms[m.index()];
            if data.dom != Obj(o as u32) || data.cod != Obj(o as u32) {
                return Err(Error::Malformed(format!(
                    "identity `{id_name}` of `{name}` is not an endomorphism of `{name}`"
                )));
            }
            identities[o] = m;
        }

        let mut composition: HashMap<(u32, u32), Mor> = HashMap::new();
        for (g, f, r) in &self.composition {
            let g = lookup_mor(g)?;
            let f = lookup_mor(f)?;
            let r = lookup_mor(r)?;
            if morphisms[f.index()].cod != morphisms[g.index()].dom {
                return Err(Error::Malformed(format!(
                    "composition entry ({}, {}) is not a composable pair",
                    morphisms[g.index()].name,
                    morphisms[f.index()].name
                )));
            }
            if composition.insert((g.0, f.0), r).is_some() {
                return Err(Error::Malformed(format!(
                    "duplicate composition entry ({}, {})",
                    morphisms[g.index()].name,
                    morphisms[f.index()].name
                )));
            }
        }

        let mut truncated_composition = BTreeSet::new();
        for (g, f) in &self.truncated_composition {
            truncated_composition.insert((lookup_mor(g)?, lookup_mor(f)?));
        }

        // Auto-fill identity compositions where absent; demand totality on
        // the rest unless recorded as truncated.
        for g in 0..morphisms.len() {
            for f in 0..morphisms.len() {
                if morphisms[f].cod != morphisms[g].dom {
                    continue;
                }
                let key = (g as u32, f as u32);
                if composition.contains_key(&key)
                    || truncated_composition.contains(&(Mor(g as u32), Mor(f as u32)))
                {
                    continue;
                }
                if identities[morphisms[g].dom.index()] == Mor(g as u32) {
                    composition.insert(key, Mor(f as u32));
                } else if identities[morphisms[f].dom.index()] == Mor(f as u32) {
                    composition.insert(key, Mor(g as u32));
                } else {
                    return Err(Error::Malformed(format!(
                        "composition table is missing the composable pair ({}, {})",
                        morphisms[g].name, morphisms[f].name
                    )));
                }
            }
        }

        let n_obj = objects.len();
        let mut homs = vec![vec![Vec::new(); n_obj]; n_obj];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.dom.index()][m.cod.index()].push(Mor(i as u32));
        }

        Ok(FinCat {
            objects,
            obj_index,
            morphisms,
            mor_index,
            identities,
            composition,
            truncated_composition,
            homs,
        })
    }
}

/// Assembles a [`FinMonCat`]: a built [`FinCat`] plus tensor tables, unit
/// and optional braiding. Unit-strictness entries (`I ⊗ A = A`,
/// `id_I ⊗ f = f`, identity tensors) are auto-filled when absent.
#[derive(Debug)]
pub struct FinMonCatBuilder {
    pub(crate) cat: FinCatBuilder,
    unit: Option<String>,
    tensor_obj: Vec<(String, String, String)>,
    tensor_mor: Vec<(String, String, String)>,
    truncated_tensor_obj: Vec<(String, String)>,
    truncated_tensor_mor: Vec<(String, String)>,
    braiding: Option<Vec<(String, String, String)>>,
}

impl FinMonCatBuilder {
    pub fn new() -> Self {
        FinMonCatBuilder {
            cat: FinCatBuilder::new(),
            unit: None,
            tensor_obj: Vec::new(),
            tensor_mor: Vec::new(),
            truncated_tensor_obj: Vec::new(),
            truncated_tensor_mor: Vec::new(),
            braiding: None,
        }
    }

    pub fn cat(&mut self) -> &mut FinCatBuilder {
        &mut self.cat
    }

    pub fn unit(&mut self, name: impl Into<String>) -> &mut Self {
        self.unit = Some(name.into());
        self
    }

    pub fn tensor_obj(
        &mut self,
        a: impl Into<String>,
        b: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.tensor_obj.push((a.into(), b.into(), result.into()));
        self
    }

    pub fn tensor_mor(
        &mut self,
        f: impl Into<String>,
        g: impl Into<String>,
        result: impl Into<String>,
    ) -> &mut Self {
        self.tensor_mor.push((f.into(), g.into(), result.into()));
        self
    }

    pub fn truncated_tensor_obj(
        &mut self,
        a: impl Into<String>,
        b: impl Into<String>,
    ) -> &mut Self {
        self.truncated_tensor_obj.push((a.into(), b.into()));
        self
    }

    pub fn truncated_tensor_mor(
        &mut self,
        f: impl Into<String>,
        g: impl Into<String>,
    ) -> &mut Self {
        self.truncated_tensor_mor.push((f.into(), g.into()));
        self
    }

    pub fn braiding_entry(
        &mut self,
        a: impl Into<String>,
        b: impl Into<String>,
        mor: impl Into<String>,
    ) -> &mut Self {
        self.braiding
            .get_or_insert_with(Vec::new)
            .push((a.into(), b.into(), mor.into()));
        self
    }

    pub fn build(&self) -> Result<FinMonCat> {
        let base = self.cat.build()?;
        let unit_name = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::Malformed("monoidal category needs a unit object".into()))?;
        let unit = base.obj(unit_name)?;

        let mut tensor_obj: HashMap<(u32, u32), Obj> = HashMap::new();
        for (a, b, r) in &self.tensor_obj {
            let a = base.obj(a)?;
            let b = base.obj(b)?;
            let r = base.obj(r)?;
            if tensor_obj.insert((a.0, b.0), r).is_some() {
                return Err(Error::Malformed(format!(
                    "duplicate tensor_objects entry ({}, {})",
                    base.object_name(a),
                    base.object_name(b)
                )));
            }
        }
        let mut truncated_tensor_obj = BTreeSet::new();
        for (a, b) in &self.truncated_tensor_obj {
            truncated_tensor_obj.insert((base.obj(a)?, base.obj(b)?));
        }
        // Unit strictness auto-fill on objects.
        for o in base.objects() {
            tensor_obj.entry((unit.0, o.0)).or_insert(o);
            tensor_obj.entry((o.0, unit.0)).or_insert(o);
        }
        for a in base.objects() {
            for b in base.objects() {
                if !tensor_obj.contains_key(&(a.0, b.0))
                    && !truncated_tensor_obj.contains(&(a, b))
                {
                    return Err(Error::Malformed(format!(
                        "tensor_objects table is missing the pair ({}, {})",
                        base.object_name(a),
                        base.object_name(b)
                    )));
                }
            }
        }

        let mut tensor_mor: HashMap<(u32, u32), Mor> = HashMap::new();
        for (f, g, r) in &self.tensor_mor {
            let f = base.mor(f)?;
            let g = base.mor(g)?;
            let r = base.mor(r)?;
            if tensor_mor.insert((f.0, g.0), r).is_some() {
                return Err(Error::Malformed(format!(
                    "duplicate tensor_morphisms entry ({}, {})",
                    base.morphism_name(f),
                    base.morphism_name(g)
                )));
            }
        }
        let mut truncated_tensor_mor = BTreeSet::new();
        for (f, g) in &self.truncated_tensor_mor {
            truncated_tensor_mor.insert((base.mor(f)?, base.mor(g)?));
        }
        let unit_id = base.identity(unit);
        for f in base.morphisms() {
            tensor_mor.entry((unit_id.0, f.0)).or_insert(f);
            tensor_mor.entry((f.0, unit_id.0)).or_insert(f);
        }
        // id_A ⊗ id_B = id_{A⊗B} auto-fill.
        for a in base.objects() {
            for b in base.objects() {
                if let Some(&ab) = tensor_obj.get(&(a.0, b.0)) {
                    tensor_mor
                        .entry((base.identity(a).0, base.identity(b).0))
                        .or_insert_with(|| base.identity(ab));
                }
            }
        }
        for f in base.morphisms() {
            for g in base.morphisms() {
                if tensor_mor.contains_key(&(f.0, g.0))
                    || truncated_tensor_mor.contains(&(f, g))
                {
                    continue;
                }
                let dom_missing =
                    truncated_tensor_obj.contains(&(base.dom(f), base.dom(g)));
                let cod_missing =
                    truncated_tensor_obj.contains(&(base.cod(f), base.cod(g)));
                if dom_missing || cod_missing {
                    truncated_tensor_mor.insert((f, g));
                    continue;
                }
                return Err(Error::Malformed(format!(
                    "tensor_morphisms table is missing the pair ({}, {})",
                    base.morphism_name(f),
                    base.morphism_name(g)
                )));
            }
        }

        let braiding = match &self.braiding {
            None => None,
            Some(entries) => {
                let mut table: HashMap<(u32, u32), Mor> = HashMap::new();
                for (a, b, m) in entries {
                    let a = base.obj(a)?;
                    let b = base.obj(b)?;
                    let m = base.mor(m)?;
                    if table.insert((a.0, b.0), m).is_some() {
                        return Err(Error::Malformed(format!(
                            "duplicate braiding entry ({}, {})",
                            base.object_name(a),
                            base.object_name(b)
                        )));
                    }
                }
                for a in base.objects() {
                    for b in base.objects() {
                        if !table.contains_key(&(a.0, b.0)) {
                            return Err(Error::Malformed(format!(
                                "braiding table is missing the pair ({}, {})",
                                base.object_name(a),
                                base.object_name(b)
                            )));
                        }
                    }
                }
                Some(table)
            }
        };

        Ok(FinMonCat {
            base,
            unit,
            tensor_obj,
            tensor_mor,
            truncated_tensor_obj,
            truncated_tensor_mor,
            braiding,
        })
    }
}

impl Default for FinMonCatBuilder {
    fn default() -> Self {
        Self::new()
    }
}
