//! Ready-made categories used across tests, documentation and the CLI
//! fixtures: discrete group categories, divisor lattices, the diamond
//! lattice, small hand-built categories with parallel pairs, and a
//! two-object groupoid.

use crate::error::Result;
use crate::fincat::{FinCat, FinCatBuilder, FinMonCat, FinMonCatBuilder};

/// A finite group as a plain multiplication table; the raw material for
/// discrete group categories and for the independent center-size oracle.
#[derive(Debug, Clone)]
pub struct GroupTable {
    pub elements: Vec<String>,
    /// `mult[i][j]` = index of `elements[i] * elements[j]`.
    pub mult: Vec<Vec<usize>>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Cyclic group of order `n`, elements `g0..g(n-1)`, `g0` the unit.
    pub fn cyclic(n: usize) -> GroupTable {
        GroupTable {
            elements: (0..n).map(|i| format!("g{i}")).collect(),
            mult: (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect(),
        }
    }

    /// Symmetric group on three letters; transpositions `t12, t13, t23`,
    /// three-cycles `c123, c132`, unit `e`.
    pub fn sym3() -> GroupTable {
        let perms: Vec<(&str, [usize; 3])> = vec![
            ("e", [0, 1, 2]),
            ("t12", [1, 0, 2]),
            ("t13", [2, 1, 0]),
            ("t23", [0, 2, 1]),
            ("c123", [1, 2, 0]),
            ("c132", [2, 0, 1]),
        ];
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // p then q acting on points: (q ∘ p)(x) = q(p(x)).
            [q[p[0]], q[p[1]], q[p[2]]]
        };
        let index_of = |target: &[usize; 3]| {
            perms
                .iter()
                .position(|(_, p)| p == target)
                .expect("closed under composition")
        };
        GroupTable {
            elements: perms.iter().map(|(n, _)| n.to_string()).collect(),
            mult: perms
                .iter()
                .map(|(_, p)| perms.iter().map(|(_, q)| index_of(&compose(q, p))).collect())
                .collect(),
        }
    }

    /// Dihedral group of order 8: elements `r{a}s{b}` with r^4 = s^2 = e
    /// and s r = r^-1 s.
    pub fn dihedral4() -> GroupTable {
        let elems: Vec<(usize, usize)> = (0..2).flat_map(|b| (0..4).map(move |a| (a, b))).collect();
        let mut order = elems.clone();
        order.sort();
        let name = |&(a, b): &(usize, usize)| format!("r{a}s{b}");
        let index_of = |t: (usize, usize)| order.iter().position(|&e| e == t).unwrap();
        // (r^a s^b)(r^c s^d) = r^{a + c*(-1)^b} s^{b+d}.
        let mult = order
            .iter()
            .map(|&(a, b)| {
                order
                    .iter()
                    .map(|&(c, d)| {
                        let exp = if b == 0 { (a + c) % 4 } else { (a + 4 - c % 4) % 4 };
                        index_of((exp, (b + d) % 2))
                    })
                    .collect()
            })
            .collect();
        GroupTable {
            elements: order.iter().map(name).collect(),
            mult,
        }
    }
}

/// Discrete category on a group: objects are the elements, only identity
/// morphisms, tensor is the group product. Abelian groups get the identity
/// braiding; non-abelian groups get none (no candidate morphisms exist).
pub fn discrete_group(group: &GroupTable) -> Result<FinMonCat> {
    let n = group.order();
    let mut b = FinMonCatBuilder::new();
    for e in &group.elements {
        b.cat().object(e.clone());
    }
    b.unit(group.elements[0].clone());
    for i in 0..n {
        for j in 0..n {
            b.tensor_obj(
                group.elements[i].clone(),
                group.elements[j].clone(),
                group.elements[group.mult[i][j]].clone(),
            );
        }
    }
    if group.is_abelian() {
        for i in 0..n {
            for j in 0..n {
                b.braiding_entry(
                    group.elements[i].clone(),
                    group.elements[j].clone(),
                    format!("id_{}", group.elements[group.mult[i][j]]),
                );
            }
        }
    }
    b.build()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Divisor lattice of `n` as a monoidal poset: objects are divisors,
/// arrows `a->b` whenever `a | b`, tensor is gcd, unit is `n` itself,
/// braiding is the identity (gcd is symmetric).
pub fn divisibility_poset(n: u64) -> Result<FinMonCat> {
    let divs = divisors(n);
    let name = |d: u64| d.to_string();
    let arrow = |a: u64, b: u64| format!("{a}->{b}");
    let mut b = FinMonCatBuilder::new();
    for &d in &divs {
        b.cat().object(name(d));
    }
    for &x in &divs {
        for &y in &divs {
            if x != y && y % x == 0 {
                b.cat().morphism(arrow(x, y), name(x), name(y));
            }
        }
    }
    // Composition: unique arrows, so every composite is forced.
    for &x in &divs {
        for &y in &divs {
            for &z in &divs {
                if x != y && y != z && x != z && y % x == 0 && z % y == 0 {
                    b.cat().compose(arrow(y, z), arrow(x, y), arrow(x, z));
                }
            }
        }
    }
    b.unit(name(n));
    for &x in &divs {
        for &y in &divs {
            b.tensor_obj(name(x), name(y), name(gcd(x, y)));
        }
    }
    // Morphism tensor: the unique arrow between the gcds.
    let mor_name = |a: u64, c: u64| {
        if a == c {
            format!("id_{a}")
        } else {
            arrow(a, c)
        }
    };
    for &(a, c) in &pairs_with_arrow(&divs) {
        for &(x, z) in &pairs_with_arrow(&divs) {
            if (a, c) == (x, z) && a == c {
                continue;
            }
            let dom = gcd(a, x);
            let cod = gcd(c, z);
            if mor_name(a, c) == format!("id_{n}") || mor_name(x, z) == format!("id_{n}") {
                continue;
            }
            if a == c && x == z {
                continue;
            }
            b.tensor_mor(mor_name(a, c), mor_name(x, z), mor_name(dom, cod));
        }
    }
    for &x in &divs {
        for &y in &divs {
            b.braiding_entry(name(x), name(y), format!("id_{}", gcd(x, y)));
        }
    }
    b.build()
}

fn pairs_with_arrow(divs: &[u64]) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for &a in divs {
        for &c in divs {
            if c % a == 0 {
                out.push((a, c));
            }
        }
    }
    out
}

/// The diamond lattice M3 (bottom `0`, incomparable middles `a, b, c`,
/// top `1`) with meet as tensor and `1` as unit. The standard
/// non-distributive lattice: `a ∧ (b ∨ c) = a` but
/// `(a ∧ b) ∨ (a ∧ c) = 0`.
pub fn diamond_m3() -> Result<FinMonCat> {
    let elems = ["0", "1", "a", "b", "c"];
    let leq = |x: &str, y: &str| x == y || x == "0" || y == "1";
    let meet = |x: &'static str, y: &'static str| -> &'static str {
        if leq(x, y) {
            x
        } else if leq(y, x) {
            y
        } else {
            "0"
        }
    };
    let arrow = |x: &str, y: &str| format!("{x}->{y}");
    let mor_name = |x: &str, y: &str| {
        if x == y {
            format!("id_{x}")
        } else {
            arrow(x, y)
        }
    };
    let mut b = FinMonCatBuilder::new();
    for e in elems {
        b.cat().object(e);
    }
    for x in elems {
        for y in elems {
            if x != y && leq(x, y) {
                b.cat().morphism(arrow(x, y), x, y);
            }
        }
    }
    for x in elems {
        for y in elems {
            for z in elems {
                if x != y && y != z && x != z && leq(x, y) && leq(y, z) {
                    b.cat().compose(arrow(y, z), arrow(x, y), arrow(x, z));
                }
            }
        }
    }
    b.unit("1");
    for x in elems {
        for y in elems {
            b.tensor_obj(x, y, meet(x, y));
        }
    }
    let ordered: Vec<(&str, &str)> = elems
        .iter()
        .flat_map(|&x| elems.iter().filter(move |&&y| leq(x, y)).map(move |&y| (x, y)))
        .collect();
    for &(a, c) in &ordered {
        for &(x, z) in &ordered {
            if (a == c && x == z) || mor_name(a, c) == "id_1" || mor_name(x, z) == "id_1" {
                continue;
            }
            b.tensor_mor(mor_name(a, c), mor_name(x, z), mor_name(meet(a, x), meet(c, z)));
        }
    }
    for x in elems {
        for y in elems {
            b.braiding_entry(x, y, format!("id_{}", meet(x, y)));
        }
    }
    b.build()
}

/// Plain category with one distinct parallel pair `u, v: y → z` and
/// identities; not monoidal.
pub fn parallel_pair_plain() -> Result<FinCat> {
    let mut b = FinCatBuilder::new();
    b.object("y").object("z");
    b.morphism("u", "y", "z").morphism("v", "y", "z");
    b.build()
}

/// Braided monoidal category with a distinct parallel pair `u, v: x → z`.
/// Tensor follows the commutative monoid i < x < z with x⊗x = z and z
/// absorbing; every tensor of non-identity arrows collapses into the
/// singleton hom-set of z.
pub fn parallel_pair_braided() -> Result<FinMonCat> {
    let mut b = FinMonCatBuilder::new();
    b.cat().object("i").object("x").object("z");
    b.cat().morphism("u", "x", "z").morphism("v", "x", "z");
    b.unit("i");
    for (l, r, out) in [
        ("x", "x", "z"),
        ("x", "z", "z"),
        ("z", "x", "z"),
        ("z", "z", "z"),
    ] {
        b.tensor_obj(l, r, out);
    }
    let mors = ["u", "v", "id_x", "id_z"];
    for f in mors {
        for g in mors {
            if f.starts_with("id_") && g.starts_with("id_") {
                continue;
            }
            b.tensor_mor(f, g, "id_z");
        }
    }
    for l in ["i", "x", "z"] {
        for r in ["i", "x", "z"] {
            let out = match (l, r) {
                ("i", o) | (o, "i") => o,
                _ => "z",
            };
            b.braiding_entry(l, r, format!("id_{out}"));
        }
    }
    b.build()
}

/// Groupoid with two objects `A ↔ B`, tensor graded by Z_2 (B⊗B = A),
/// braided by identities. Every hom-set is a singleton, so the tensor of
/// morphisms is forced by its boundaries.
pub fn two_object_groupoid() -> Result<FinMonCat> {
    let mut b = FinMonCatBuilder::new();
    b.cat().object("A").object("B");
    b.cat().morphism("f", "A", "B").morphism("g", "B", "A");
    b.cat().compose("g", "f", "id_A").compose("f", "g", "id_B");
    b.unit("A");
    b.tensor_obj("B", "B", "A");
    let the_mor = |dom: &str, cod: &str| -> String {
        match (dom, cod) {
            ("A", "B") => "f".into(),
            ("B", "A") => "g".into(),
            (a, _) => format!("id_{a}"),
        }
    };
    let tensor = |x: &str, y: &str| if x == y { "A" } else { "B" };
    let all: [(&str, &str); 4] = [("A", "A"), ("A", "B"), ("B", "A"), ("B", "B")];
    for (d1, c1) in all {
        for (d2, c2) in all {
            if d1 == c1 && d2 == c2 {
                continue;
            }
            if (d1, c1) == ("A", "A") || (d2, c2) == ("A", "A") {
                continue;
            }
            b.tensor_mor(
                the_mor(d1, c1),
                the_mor(d2, c2),
                the_mor(tensor(d1, d2), tensor(c1, c2)),
            );
        }
    }
    for (x, y) in all {
        b.braiding_entry(x, y, format!("id_{}", tensor(x, y)));
    }
    b.build()
}

/// Plain category witnessing a non-epi: `p: X → Y`, a distinct parallel
/// pair `u, v: Y → Z`, and `u∘p = v∘p = w`.
pub fn non_epi_example() -> Result<FinCat> {
    let mut b = FinCatBuilder::new();
    b.object("X").object("Y").object("Z");
    b.morphism("p", "X", "Y")
        .morphism("u", "Y", "Z")
        .morphism("v", "Y", "Z")
        .morphism("w", "X", "Z");
    b.compose("u", "p", "w").compose("v", "p", "w");
    b.build()
}

/// Poset shaped like a V: one source `A` with two incomparable targets.
pub fn v_shape() -> Result<FinCat> {
    let mut b = FinCatBuilder::new();
    b.object("A").object("B").object("C");
    b.morphism("A->B", "A", "B").morphism("A->C", "A", "C");
    b.build()
}

// ── Independent oracles ─────────────────────────────────────────────────

/// Order of the group center by brute-force commutation over the
/// multiplication table; never touches the category machinery.
pub fn group_center_order(group: &GroupTable) -> usize {
    let n = group.order();
    (0..n)
        .filter(|&g| (0..n).all(|h| group.mult[g][h] == group.mult[h][g]))
        .count()
}

/// Least common multiple of a set of divisors of `n`, the lattice join in
/// the divisibility poset; computed arithmetically.
pub fn lattice_join(values: &[u64]) -> u64 {
    values.iter().fold(1, |a, &b| a / gcd(a, b) * b)
}
