use std::fmt;

use crate::error::Result;
use crate::fincat::{FinCat, FinMonCat, Limits, Mor, Obj};

/// One violated axiom, naming the offending tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CompositionCodomain { g: String, f: String, result: String },
    Associativity { h: String, g: String, f: String },
    IdentityLaw { id: String, f: String },
    TensorObjAssociativity { a: String, b: String, c: String },
    TensorObjUnit { a: String },
    TensorMorBoundary { f: String, g: String, result: String },
    TensorIdentity { a: String, b: String },
    TensorMorAssociativity { f: String, g: String, h: String },
    Interchange { g: String, gp: String, f: String, fp: String },
    BraidingBoundary { a: String, b: String },
    BraidingNotIso { a: String, b: String },
    BraidingUnit { a: String },
    BraidingNaturality { f: String, g: String },
    BraidingHexagon { first_argument: bool, a: String, b: String, c: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CompositionCodomain { g, f, result } => write!(
                w,
                "composition({g}, {f}) = {result} has the wrong domain or codomain"
            ),
            Violation::Associativity { h, g, f } => {
                write!(w, "associativity fails on the triple ({h}, {g}, {f})")
            }
            Violation::IdentityLaw { id, f } => {
                write!(w, "identity law fails for ({id}, {f})")
            }
            Violation::TensorObjAssociativity { a, b, c } => {
                write!(w, "object tensor is not associative on ({a}, {b}, {c})")
            }
            Violation::TensorObjUnit { a } => {
                write!(w, "unit is not strict on object {a}")
            }
            Violation::TensorMorBoundary { f, g, result } => write!(
                w,
                "tensor({f}, {g}) = {result} has the wrong domain or codomain"
            ),
            Violation::TensorIdentity { a, b } => {
                write!(w, "id_{a} ⊗ id_{b} is not the identity of the tensor object")
            }
            Violation::TensorMorAssociativity { f, g, h } => {
                write!(w, "morphism tensor is not associative on ({f}, {g}, {h})")
            }
            Violation::Interchange { g, gp, f, fp } => write!(
                w,
                "interchange fails: ({g} ⊗ {gp}) ∘ ({f} ⊗ {fp}) ≠ ({g} ∘ {f}) ⊗ ({gp} ∘ {fp})"
            ),
            Violation::BraidingBoundary { a, b } => {
                write!(w, "braiding at ({a}, {b}) has the wrong domain or codomain")
            }
            Violation::BraidingNotIso { a, b } => {
                write!(w, "braiding at ({a}, {b}) is not invertible")
            }
            Violation::BraidingUnit { a } => {
                write!(w, "braiding at the unit is not the identity on {a}")
            }
            Violation::BraidingNaturality { f, g } => {
                write!(w, "braiding is not natural at ({f}, {g})")
            }
            Violation::BraidingHexagon { first_argument, a, b, c } => write!(
                w,
                "{} hexagon fails on ({a}, {b}, {c})",
                if *first_argument { "first-argument" } else { "second-argument" }
            ),
        }
    }
}

/// Outcome of a full axiom sweep. Violations are report entries, never
/// errors; `skipped` counts law instances that could not be checked because
/// a table entry lies outside a truncation window.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub skipped: usize,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            write!(w, "ok")?;
        } else {
            for v in &self.violations {
                writeln!(w, "{v}")?;
            }
        }
        if self.skipped > 0 {
            write!(w, " ({} law instances outside the truncation window)", self.skipped)?;
        }
        Ok(())
    }
}

pub(crate) fn validate_plain(cat: &FinCat, report: &mut ValidationReport) {
    // Composition boundary bookkeeping.
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            if cat.cod(f) != cat.dom(g) {
                continue;
            }
            match cat.compose_opt(g, f) {
                None => {
                    report.skipped += 1;
                }
                Some(r) => {
                    if cat.dom(r) != cat.dom(f) || cat.cod(r) != cat.cod(g) {
                        report.violations.push(Violation::CompositionCodomain {
                            g: cat.morphism_name(g).into(),
                            f: cat.morphism_name(f).into(),
                            result: cat.morphism_name(r).into(),
                        });
                    }
                }
            }
        }
    }

    // Identity laws.
    for f in cat.morphisms() {
        let id_cod = cat.identity(cat.cod(f));
        if let Some(r) = cat.compose_opt(id_cod, f) {
            if r != f {
                report.violations.push(Violation::IdentityLaw {
                    id: cat.morphism_name(id_cod).into(),
                    f: cat.morphism_name(f).into(),
                });
            }
        }
        let id_dom = cat.identity(cat.dom(f));
        if let Some(r) = cat.compose_opt(f, id_dom) {
            if r != f {
                report.violations.push(Violation::IdentityLaw {
                    id: cat.morphism_name(id_dom).into(),
                    f: cat.morphism_name(f).into(),
                });
            }
        }
    }

    // Associativity by full enumeration of composable triples.
    for f in cat.morphisms() {
        for g in cat.hom_out(cat.cod(f)) {
            for h in cat.hom_out(cat.cod(g)) {
                let left = cat
                    .compose_opt(h, g)
                    .and_then(|hg| cat.compose_opt(hg, f));
                let right = cat
                    .compose_opt(g, f)
                    .and_then(|gf| cat.compose_opt(h, gf));
                match (left, right) {
                    (Some(l), Some(r)) => {
                        if l != r {
                            report.violations.push(Violation::Associativity {
                                h: cat.morphism_name(h).into(),
                                g: cat.morphism_name(g).into(),
                                f: cat.morphism_name(f).into(),
                            });
                        }
                    }
                    _ => report.skipped += 1,
                }
            }
        }
    }
}

impl FinCat {
    /// All morphisms whose domain is `a`, in index order.
    pub(crate) fn hom_out(&self, a: Obj) -> Vec<Mor> {
        let mut out = Vec::new();
        for b in self.objects() {
            out.extend_from_slice(self.hom(a, b));
        }
        out.sort();
        out
    }

    /// Category axioms only (no tensor). Violations land in the report.
    pub fn validate(&self, limits: &Limits) -> Result<ValidationReport> {
        limits.check(self)?;
        let mut report = ValidationReport::default();
        validate_plain(self, &mut report);
        Ok(report)
    }
}

impl FinMonCat {
    /// Full axiom sweep: category axioms, strict monoidal structure,
    /// bifunctoriality and (when present) braiding invertibility,
    /// naturality and both hexagons. Every violated instance is a report
    /// entry; the sweep never stops early.
    pub fn validate(&self, limits: &Limits) -> Result<ValidationReport> {
        limits.check(self.base())?;
        let mut report = ValidationReport::default();
        validate_plain(self.base(), &mut report);
        self.validate_tensor(&mut report);
        if self.has_braiding() {
            self.validate_braiding(&mut report);
        }
        Ok(report)
    }

    fn validate_tensor(&self, report: &mut ValidationReport) {
        let unit = self.unit();
        // Strict unit and associativity on objects.
        for a in self.objects() {
            let left = self.tensor_obj_opt(unit, a);
            let right = self.tensor_obj_opt(a, unit);
            if left != Some(a) || right != Some(a) {
                report.violations.push(Violation::TensorObjUnit {
                    a: self.object_name(a).into(),
                });
            }
        }
        for a in self.objects() {
            for b in self.objects() {
                for c in self.objects() {
                    let left = self
                        .tensor_obj_opt(a, b)
                        .and_then(|ab| self.tensor_obj_opt(ab, c));
                    let right = self
                        .tensor_obj_opt(b, c)
                        .and_then(|bc| self.tensor_obj_opt(a, bc));
                    match (left, right) {
                        (Some(l), Some(r)) => {
                            if l != r {
                                report.violations.push(Violation::TensorObjAssociativity {
                                    a: self.object_name(a).into(),
                                    b: self.object_name(b).into(),
                                    c: self.object_name(c).into(),
                                });
                            }
                        }
                        _ => report.skipped += 1,
                    }
                }
            }
        }

        // Bifunctor: boundaries and identities.
        for f in self.morphisms() {
            for g in self.morphisms() {
                let Some(r) = self.tensor_mor_opt(f, g) else {
                    report.skipped += 1;
                    continue;
                };
                let dom = self.tensor_obj_opt(self.dom(f), self.dom(g));
                let cod = self.tensor_obj_opt(self.cod(f), self.cod(g));
                if dom != Some(self.dom(r)) || cod != Some(self.cod(r)) {
                    report.violations.push(Violation::TensorMorBoundary {
                        f: self.morphism_name(f).into(),
                        g: self.morphism_name(g).into(),
                        result: self.morphism_name(r).into(),
                    });
                }
            }
        }
        for a in self.objects() {
            for b in self.objects() {
                let Some(ab) = self.tensor_obj_opt(a, b) else { continue };
                let got = self.tensor_mor_opt(self.identity(a), self.identity(b));
                if got != Some(self.identity(ab)) {
                    report.violations.push(Violation::TensorIdentity {
                        a: self.object_name(a).into(),
                        b: self.object_name(b).into(),
                    });
                }
            }
        }

        // Morphism tensor associativity.
        for f in self.morphisms() {
            for g in self.morphisms() {
                for h in self.morphisms() {
                    let left = self
                        .tensor_mor_opt(f, g)
                        .and_then(|fg| self.tensor_mor_opt(fg, h));
                    let right = self
                        .tensor_mor_opt(g, h)
                        .and_then(|gh| self.tensor_mor_opt(f, gh));
                    match (left, right) {
                        (Some(l), Some(r)) => {
                            if l != r {
                                report.violations.push(Violation::TensorMorAssociativity {
                                    f: self.morphism_name(f).into(),
                                    g: self.morphism_name(g).into(),
                                    h: self.morphism_name(h).into(),
                                });
                            }
                        }
                        _ => report.skipped += 1,
                    }
                }
            }
        }

        // Interchange over all pairs of composable pairs.
        let mut composable = Vec::new();
        for f in self.morphisms() {
            for g in self.hom_out(self.cod(f)) {
                composable.push((g, f));
            }
        }
        for &(g, f) in &composable {
            for &(gp, fp) in &composable {
                let lhs = match (self.tensor_mor_opt(g, gp), self.tensor_mor_opt(f, fp)) {
                    (Some(gg), Some(ff)) => self.compose_opt(gg, ff),
                    _ => None,
                };
                let rhs = match (self.compose_opt(g, f), self.compose_opt(gp, fp)) {
                    (Some(gf), Some(gpfp)) => self.tensor_mor_opt(gf, gpfp),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(l), Some(r)) => {
                        if l != r {
                            report.violations.push(Violation::Interchange {
                                g: self.morphism_name(g).into(),
                                gp: self.morphism_name(gp).into(),
                                f: self.morphism_name(f).into(),
                                fp: self.morphism_name(fp).into(),
                            });
                        }
                    }
                    _ => report.skipped += 1,
                }
            }
        }
    }

    fn validate_braiding(&self, report: &mut ValidationReport) {
        let unit = self.unit();
        for a in self.objects() {
            for b in self.objects() {
                let Ok(psi) = self.braiding(a, b) else { continue };
                let ab = self.tensor_obj_opt(a, b);
                let ba = self.tensor_obj_opt(b, a);
                if ab != Some(self.dom(psi)) || ba != Some(self.cod(psi)) {
                    report.violations.push(Violation::BraidingBoundary {
                        a: self.object_name(a).into(),
                        b: self.object_name(b).into(),
                    });
                    continue;
                }
                if !self.is_iso(psi) {
                    report.violations.push(Violation::BraidingNotIso {
                        a: self.object_name(a).into(),
                        b: self.object_name(b).into(),
                    });
                }
            }
        }
        // Strict unit: Ψ_{A,I} = Ψ_{I,A} = id_A.
        for a in self.objects() {
            let ok = matches!(self.braiding(a, unit), Ok(m) if m == self.identity(a))
                && matches!(self.braiding(unit, a), Ok(m) if m == self.identity(a));
            if !ok {
                report.violations.push(Violation::BraidingUnit {
                    a: self.object_name(a).into(),
                });
            }
        }
        // Naturality: Ψ_{A',B'} ∘ (f ⊗ g) = (g ⊗ f) ∘ Ψ_{A,B}.
        for f in self.morphisms() {
            for g in self.morphisms() {
                let lhs = match (
                    self.braiding(self.cod(f), self.cod(g)).ok(),
                    self.tensor_mor_opt(f, g),
                ) {
                    (Some(psi), Some(fg)) => self.compose_opt(psi, fg),
                    _ => None,
                };
                let rhs = match (
                    self.tensor_mor_opt(g, f),
                    self.braiding(self.dom(f), self.dom(g)).ok(),
                ) {
                    (Some(gf), Some(psi)) => self.compose_opt(gf, psi),
                    _ => None,
                };
                match (lhs, rhs) {
                    (Some(l), Some(r)) => {
                        if l != r {
                            report.violations.push(Violation::BraidingNaturality {
                                f: self.morphism_name(f).into(),
                                g: self.morphism_name(g).into(),
                            });
                        }
                    }
                    _ => report.skipped += 1,
                }
            }
        }
        // Hexagons in strict form:
        //   Ψ_{A⊗B,C} = (Ψ_{A,C} ⊗ id_B) ∘ (id_A ⊗ Ψ_{B,C})
        //   Ψ_{A,B⊗C} = (id_B ⊗ Ψ_{A,C}) ∘ (Ψ_{A,B} ⊗ id_C)
        for a in self.objects() {
            for b in self.objects() {
                for c in self.objects() {
                    let first = (|| {
                        let ab = self.tensor_obj_opt(a, b)?;
                        let lhs = self.braiding(ab, c).ok()?;
                        let inner = self.left_whisker(a, self.braiding(b, c).ok()?).ok()?;
                        let outer = self.right_whisker(self.braiding(a, c).ok()?, b).ok()?;
                        let rhs = self.compose_opt(outer, inner)?;
                        Some(lhs == rhs)
                    })();
                    match first {
                        Some(false) => report.violations.push(Violation::BraidingHexagon {
                            first_argument: true,
                            a: self.object_name(a).into(),
                            b: self.object_name(b).into(),
                            c: self.object_name(c).into(),
                        }),
                        Some(true) => {}
                        None => report.skipped += 1,
                    }
                    let second = (|| {
                        let bc = self.tensor_obj_opt(b, c)?;
                        let lhs = self.braiding(a, bc).ok()?;
                        let inner = self.right_whisker(self.braiding(a, b).ok()?, c).ok()?;
                        let outer = self.left_whisker(b, self.braiding(a, c).ok()?).ok()?;
                        let rhs = self.compose_opt(outer, inner)?;
                        Some(lhs == rhs)
                    })();
                    match second {
                        Some(false) => report.violations.push(Violation::BraidingHexagon {
                            first_argument: false,
                            a: self.object_name(a).into(),
                            b: self.object_name(b).into(),
                            c: self.object_name(c).into(),
                        }),
                        Some(true) => {}
                        None => report.skipped += 1,
                    }
                }
            }
        }
    }
}
