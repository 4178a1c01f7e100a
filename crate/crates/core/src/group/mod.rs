//! Finite groups as explicit multiplication tables.
//!
//! Every group in the catalog is realized as an immutable [`GroupTable`]:
//! a validated Cayley table with labeled elements. Construction always runs
//! the full battery of checks (unique labels, two-sided identity, two-sided
//! inverses, associativity via Light's test over a generating set), so any
//! table that exists is a group.

mod build;
mod iso;
mod todd_coxeter;

pub use build::{build, sg16_3_presentation};
pub use iso::iso_check_small;
pub use todd_coxeter::todd_coxeter;

use std::collections::BTreeSet;

use crate::error::Error;
use crate::rat::Rat;
use crate::Result;
use num_bigint::BigInt;

/// Largest group order the workbench will materialize.
pub const MAX_GROUP_ORDER: usize = 5000;

/// Which non-abelian group of order p^3 to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtraspecialKind {
    /// Exponent p (Heisenberg group over GF(p), p odd).
    ExponentP,
    /// Exponent p^2 (cyclic-by-cyclic).
    ExponentPSquared,
}

/// A finitely presented group: relators are words of signed 1-based
/// generator indices (`2` means the second generator, `-2` its inverse).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Presentation {
    pub generator_count: usize,
    pub relators: Vec<Vec<i32>>,
    pub coset_bound: usize,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Vec<i32>>, coset_bound: usize) -> Self {
        Presentation {
            generator_count,
            relators,
            coset_bound,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.generator_count == 0 {
            return Err(Error::InvalidParameter(
                "presentation needs at least one generator".into(),
            ));
        }
        if self.relators.is_empty() {
            return Err(Error::InvalidParameter("relator list is empty".into()));
        }
        if self.coset_bound == 0 {
            return Err(Error::InvalidParameter("coset bound must be >= 1".into()));
        }
        for rel in &self.relators {
            if rel.is_empty() {
                return Err(Error::InvalidParameter("empty relator word".into()));
            }
            for &letter in rel {
                if letter == 0 || letter.unsigned_abs() as usize > self.generator_count {
                    return Err(Error::InvalidParameter(format!(
                        "relator letter {letter} out of range"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Construction recipe for every group family in the catalog.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GroupSpec {
    /// D_{2m}, m >= 3.
    Dihedral { m: u32 },
    /// Q_{4m}, m >= 2.
    GeneralizedQuaternion { m: u32 },
    /// QD_{2^n}, n >= 4.
    Quasidihedral { n: u32 },
    /// M_{2mn} = <a,b : a^m = b^{2n} = 1, bab^{-1} = a^{-1}>, m > 2.
    Metacyclic { m: u32, n: u32 },
    /// Sz(2), the Frobenius group of order 20.
    SuzukiSz2,
    /// Non-abelian group of order pq with p | q-1.
    FrobeniusPQ { p: u32, q: u32 },
    /// PSL(2, 2^k) = SL(2, 2^k), k >= 2.
    Psl2 { k: u32 },
    /// GL(2, q), q = p^n > 2.
    Gl2 { q: u32 },
    /// Upper unitriangular 3x3 pairs U(a, b) over GF(2^n), n >= 2.
    HanakiU { n: u32 },
    /// Unitriangular 3x3 triples V(a, b, c) over GF(p^n).
    HanakiV { p: u32, n: u32 },
    /// Modular group of order 16.
    M16,
    /// Z4 semidirect Z4 with inverting action.
    Z4SemidirectZ4,
    /// Central product (D8 x Z4) / <(a^2, c^2)>.
    D8StarZ4,
    /// SG(16, 3) from its printed relators.
    Sg16_3,
    /// Non-abelian group of order p^3, p odd.
    ExtraspecialP3 { p: u32, kind: ExtraspecialKind },
    /// Cyclic group of order k.
    Cyclic { k: u32 },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    Presentation(Presentation),
    /// Echo for tables produced by `quotient_by_normal`.
    Quotient { parent: Box<GroupSpec> },
}

impl GroupSpec {
    /// Short family key, used for sorting and report columns.
    pub fn family_name(&self) -> &'static str {
        match self {
            GroupSpec::Dihedral { .. } => "dihedral",
            GroupSpec::GeneralizedQuaternion { .. } => "quaternion",
            GroupSpec::Quasidihedral { .. } => "quasidihedral",
            GroupSpec::Metacyclic { .. } => "metacyclic",
            GroupSpec::SuzukiSz2 => "suzuki",
            GroupSpec::FrobeniusPQ { .. } => "frobenius",
            GroupSpec::Psl2 { .. } => "psl2",
            GroupSpec::Gl2 { .. } => "gl2",
            GroupSpec::HanakiU { .. } => "hanaki-u",
            GroupSpec::HanakiV { .. } => "hanaki-v",
            GroupSpec::M16 => "m16",
            GroupSpec::Z4SemidirectZ4 => "z4rz4",
            GroupSpec::D8StarZ4 => "d8*z4",
            GroupSpec::Sg16_3 => "sg16-3",
            GroupSpec::ExtraspecialP3 { .. } => "extraspecial",
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::DirectProduct(..) => "product",
            GroupSpec::Presentation(_) => "presentation",
            GroupSpec::Quotient { .. } => "quotient",
        }
    }

    /// Canonical identifier, e.g. `dihedral(m=3)` or
    /// `product(dihedral(m=4),cyclic(k=3))`.
    pub fn id_string(&self) -> String {
        match self {
            GroupSpec::Dihedral { m } => format!("dihedral(m={m})"),
            GroupSpec::GeneralizedQuaternion { m } => format!("quaternion(m={m})"),
            GroupSpec::Quasidihedral { n } => format!("quasidihedral(n={n})"),
            GroupSpec::Metacyclic { m, n } => format!("metacyclic(m={m},n={n})"),
            GroupSpec::SuzukiSz2 => "suzuki".into(),
            GroupSpec::FrobeniusPQ { p, q } => format!("frobenius(p={p},q={q})"),
            GroupSpec::Psl2 { k } => format!("psl2(k={k})"),
            GroupSpec::Gl2 { q } => format!("gl2(q={q})"),
            GroupSpec::HanakiU { n } => format!("hanaki-u(n={n})"),
            GroupSpec::HanakiV { p, n } => format!("hanaki-v(p={p},n={n})"),
            GroupSpec::M16 => "m16".into(),
            GroupSpec::Z4SemidirectZ4 => "z4rz4".into(),
            GroupSpec::D8StarZ4 => "d8*z4".into(),
            GroupSpec::Sg16_3 => "sg16-3".into(),
            GroupSpec::ExtraspecialP3 { p, kind } => {
                let e = match kind {
                    ExtraspecialKind::ExponentP => "p",
                    ExtraspecialKind::ExponentPSquared => "p2",
                };
                format!("extraspecial(p={p},exp={e})")
            }
            GroupSpec::Cyclic { k } => format!("cyclic(k={k})"),
            GroupSpec::DirectProduct(a, b) => {
                format!("product({},{})", a.id_string(), b.id_string())
            }
            GroupSpec::Presentation(p) => format!(
                "presentation(gens={},relators={})",
                p.generator_count,
                p.relators.len()
            ),
            GroupSpec::Quotient { parent } => format!("quotient({})", parent.id_string()),
        }
    }

    /// Order the built table will have, when it is known without running the
    /// construction (presentations are only known after enumeration).
    pub fn predicted_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Dihedral { m } => Some(2 * *m as usize),
            GroupSpec::GeneralizedQuaternion { m } => Some(4 * *m as usize),
            GroupSpec::Quasidihedral { n } => Some(1usize << *n),
            GroupSpec::Metacyclic { m, n } => Some(2 * *m as usize * *n as usize),
            GroupSpec::SuzukiSz2 => Some(20),
            GroupSpec::FrobeniusPQ { p, q } => Some(*p as usize * *q as usize),
            GroupSpec::Psl2 { k } => {
                let q = 1usize << *k;
                Some(q * (q * q - 1))
            }
            GroupSpec::Gl2 { q } => {
                let q = *q as usize;
                Some((q * q - 1) * (q * q - q))
            }
            GroupSpec::HanakiU { n } => Some(1usize << (2 * *n)),
            GroupSpec::HanakiV { p, n } => Some((*p as usize).pow(3 * *n)),
            GroupSpec::M16 | GroupSpec::Z4SemidirectZ4 | GroupSpec::D8StarZ4 | GroupSpec::Sg16_3 => {
                Some(16)
            }
            GroupSpec::ExtraspecialP3 { p, .. } => Some((*p as usize).pow(3)),
            GroupSpec::Cyclic { k } => Some(*k as usize),
            GroupSpec::DirectProduct(a, b) => Some(a.predicted_order()? * b.predicted_order()?),
            GroupSpec::Presentation(_) => None,
            GroupSpec::Quotient { .. } => None,
        }
    }
}

/// A finite group as an immutable multiplication table.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    identity: usize,
    inv: Vec<u16>,
    labels: Vec<String>,
    spec: GroupSpec,
}

impl GroupTable {
    /// Assemble and validate a table from a multiplication closure.
    pub fn from_mul_fn<F>(order: usize, labels: Vec<String>, spec: GroupSpec, f: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        if order == 0 {
            return Err(Error::BadTable("empty carrier set".into()));
        }
        if order > MAX_GROUP_ORDER {
            return Err(Error::SizeBound {
                what: "group order",
                got: order,
                bound: MAX_GROUP_ORDER,
            });
        }
        if labels.len() != order {
            return Err(Error::BadTable("label count != order".into()));
        }
        let mut mul = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                let k = f(i, j);
                if k >= order {
                    return Err(Error::BadTable(format!(
                        "product of {i} and {j} out of range"
                    )));
                }
                mul[i * order + j] = k as u16;
            }
        }
        Self::from_raw(order, mul, labels, spec)
    }

    /// Assemble and validate a table from a flat `order x order` array.
    pub fn from_raw(
        order: usize,
        mul: Vec<u16>,
        labels: Vec<String>,
        spec: GroupSpec,
    ) -> Result<Self> {
        if mul.len() != order * order {
            return Err(Error::BadTable("table size != order^2".into()));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] == x as u16 && mul[x * order + e] == x as u16))
            .ok_or_else(|| Error::BadTable("no two-sided identity".into()))?;
        let mut inv = vec![0u16; order];
        for x in 0..order {
            let found = (0..order).find(|&y| {
                mul[x * order + y] == identity as u16 && mul[y * order + x] == identity as u16
            });
            match found {
                Some(y) => inv[x] = y as u16,
                None => {
                    return Err(Error::BadTable(format!(
                        "element {x} has no two-sided inverse"
                    )))
                }
            }
        }
        let table = GroupTable {
            order,
            mul,
            identity,
            inv,
            labels,
            spec,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for l in &self.labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::BadTable(format!("duplicate label {l:?}")));
            }
        }
        // Associativity via Light's test: (xg)y = x(gy) for every generator g
        // of a set whose left-associated products reach the whole table.
        for g in self.greedy_generators() {
            for x in 0..self.order {
                let xg = self.mul(x, g);
                for y in 0..self.order {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::BadTable(format!(
                            "associativity fails at ({x}, {g}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Deterministic generating set: repeatedly adjoin the smallest element
    /// not yet reachable by left-associated products of the chosen ones.
    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order];
        reached[self.identity] = true;
        let mut reached_count = 1;
        while reached_count < self.order {
            let next = (0..self.order).find(|&x| !reached[x]).unwrap();
            gens.push(next);
            // BFS over right-multiplication by the generators found so far.
            let mut queue: Vec<usize> = (0..self.order).filter(|&x| reached[x]).collect();
            if !reached[next] {
                reached[next] = true;
                reached_count += 1;
                queue.push(next);
            }
            while let Some(x) = queue.pop() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !reached[y] {
                        reached[y] = true;
                        reached_count += 1;
                        queue.push(y);
                    }
                }
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.order + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut ord = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            ord += 1;
        }
        ord
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile: Vec<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        profile.sort_unstable();
        profile
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Z(G): indices of elements commuting with everything, ascending.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// C_G(x), ascending; always contains the center and <x>.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&y| self.mul(x, y) == self.mul(y, x))
            .collect()
    }

    /// Number of distinct centralizers {C_G(x) : x in G}, G itself included.
    pub fn centralizer_count(&self) -> usize {
        let mut distinct: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..self.order {
            distinct.insert(self.centralizer(x));
        }
        distinct.len()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class = BTreeSet::new();
            for g in 0..self.order {
                class.insert(self.mul(self.mul(g, x), self.inv(g)));
            }
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn conjugacy_class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// Pr(G) as an exact rational, computed two independent ways (commuting
    /// pair count and class count over order) with equality asserted.
    pub fn commutativity_degree(&self) -> Result<Rat> {
        let mut pairs: u64 = 0;
        for x in 0..self.order {
            for y in 0..self.order {
                if self.mul(x, y) == self.mul(y, x) {
                    pairs += 1;
                }
            }
        }
        let n = self.order as u64;
        let by_pairs = Rat::new(BigInt::from(pairs), BigInt::from(n * n));
        let by_classes = Rat::new(
            BigInt::from(self.conjugacy_class_count()),
            BigInt::from(n),
        );
        if by_pairs != by_classes {
            return Err(Error::BadTable(
                "commutativity degree routes disagree".into(),
            ));
        }
        Ok(by_pairs)
    }

    /// Coset table of G/N; `n_set` must be a normal subgroup (both checked).
    /// Coset labels are the labels of their smallest-index representatives.
    pub fn quotient_by_normal(&self, n_set: &[usize]) -> Result<GroupTable> {
        let members: BTreeSet<usize> = n_set.iter().copied().collect();
        if members.len() != n_set.len() || n_set.iter().any(|&x| x >= self.order) {
            return Err(Error::NotASubgroup("duplicate or out-of-range indices".into()));
        }
        if !members.contains(&self.identity) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &members {
            if !members.contains(&self.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &members {
                if !members.contains(&self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("not closed at ({a}, {b})")));
                }
            }
        }
        for g in 0..self.order {
            for &x in &members {
                if !members.contains(&self.mul(self.mul(g, x), self.inv(g))) {
                    return Err(Error::NotNormal { g, n: x });
                }
            }
        }
        // Assign cosets by ascending scan; the first unassigned index is the
        // smallest element of its coset, hence the representative.
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for i in 0..self.order {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(i);
            for &x in &members {
                coset_of[self.mul(i, x)] = id;
            }
        }
        let k = reps.len();
        let labels = reps.iter().map(|&r| self.labels[r].clone()).collect();
        let spec = GroupSpec::Quotient {
            parent: Box::new(self.spec.clone()),
        };
        GroupTable::from_mul_fn(k, labels, spec, |c1, c2| {
            coset_of[self.mul(reps[c1], reps[c2])]
        })
    }
}

/// Componentwise product of two tables; labels are `(x,y)` pairs.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> Result<GroupTable> {
    let order = g.order() * h.order();
    let mut labels = Vec::with_capacity(order);
    for i in 0..g.order() {
        for j in 0..h.order() {
            labels.push(format!("({},{})", g.label(i), h.label(j)));
        }
    }
    let spec = GroupSpec::DirectProduct(Box::new(g.spec().clone()), Box::new(h.spec().clone()));
    let hn = h.order();
    GroupTable::from_mul_fn(order, labels, spec, |x, y| {
        let (x1, x2) = (x / hn, x % hn);
        let (y1, y2) = (y / hn, y % hn);
        g.mul(x1, y1) * hn + h.mul(x2, y2)
    })
}
