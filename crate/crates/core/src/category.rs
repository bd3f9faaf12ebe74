//! Finite categories, strict monoidal structures and monoidal posets, all
//! given by explicit tables.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("{what} refers to missing {kind} {index}")]
    Dangling { what: String, kind: &'static str, index: usize },
    #[error("duplicate {kind} label {label:?}")]
    DuplicateLabel { kind: &'static str, label: String },
    #[error("table {what} has {got} entries, want {want}")]
    TableSize { what: String, got: usize, want: usize },
    #[error("not a monoidal poset: {0}")]
    Poset(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Morphism {
    pub label: String,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A failed law, named, with the labels of the items witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.witness.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    // compose[g * m + f] = g ∘ f
    compose: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
}

fn check_unique<'a>(labels: impl Iterator<Item = &'a String>, kind: &'static str) -> Result<(), CategoryError> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(CategoryError::DuplicateLabel { kind, label: l.clone() });
        }
    }
    Ok(())
}

impl FinCategory {
    /// `composites` lists `((g, f), g ∘ f)`. Only references are checked
    /// here; the category laws are checked by [`validate_category`].
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<MorId>,
        composites: Vec<((MorId, MorId), MorId)>,
    ) -> Result<Self, CategoryError> {
        check_unique(objects.iter(), "object")?;
        check_unique(morphisms.iter().map(|m| &m.label), "morphism")?;
        let (n, m) = (objects.len(), morphisms.len());
        for mor in &morphisms {
            for end in [mor.src, mor.tgt] {
                if end >= n {
                    return Err(CategoryError::Dangling { what: format!("morphism {}", mor.label), kind: "object", index: end });
                }
            }
        }
        if identities.len() != n {
            return Err(CategoryError::TableSize { what: "identities".into(), got: identities.len(), want: n });
        }
        if let Some(&bad) = identities.iter().find(|&&i| i >= m) {
            return Err(CategoryError::Dangling { what: "identities".into(), kind: "morphism", index: bad });
        }
        let mut compose = vec![None; m * m];
        for ((g, f), h) in composites {
            for x in [g, f, h] {
                if x >= m {
                    return Err(CategoryError::Dangling { what: "compose".into(), kind: "morphism", index: x });
                }
            }
            compose[g * m + f] = Some(h);
        }
        let mut homs = vec![Vec::new(); n * n];
        for (id, mor) in morphisms.iter().enumerate() {
            homs[mor.src * n + mor.tgt].push(id);
        }
        Ok(Self { objects, morphisms, identities, compose, homs })
    }

    /// The thin category of a preorder; `leq[a * n + b]` means `a <= b`.
    /// Morphisms are labelled `a<=b`.
    pub fn from_order(labels: &[String], leq: &[bool]) -> Result<Self, CategoryError> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(CategoryError::TableSize { what: "order".into(), got: leq.len(), want: n * n });
        }
        let mut morphisms = Vec::new();
        let mut ids = vec![usize::MAX; n * n];
        for a in 0..n {
            for b in 0..n {
                if leq[a * n + b] {
                    ids[a * n + b] = morphisms.len();
                    morphisms.push(Morphism { label: format!("{}<={}", labels[a], labels[b]), src: a, tgt: b });
                }
            }
        }
        let identities = (0..n).map(|a| ids[a * n + a]).collect::<Vec<_>>();
        if identities.contains(&usize::MAX) {
            return Err(CategoryError::Poset("order is not reflexive".into()));
        }
        let mut composites = Vec::new();
        for f in &morphisms {
            for g in morphisms.iter().filter(|g| g.src == f.tgt) {
                let h = ids[f.src * n + g.tgt];
                if h == usize::MAX {
                    return Err(CategoryError::Poset("order is not transitive".into()));
                }
                composites.push(((ids[g.src * n + g.tgt], ids[f.src * n + f.tgt]), h));
            }
        }
        Self::new(labels.to_vec(), morphisms, identities, composites)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_label(&self, a: ObjId) -> &str {
        &self.objects[a]
    }

    pub fn morphism_label(&self, f: MorId) -> &str {
        &self.morphisms[f].label
    }

    pub fn find_object(&self, label: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn find_morphism(&self, label: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.label == label)
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.morphisms[f].src
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.morphisms[f].tgt
    }

    pub fn id(&self, a: ObjId) -> MorId {
        self.identities[a]
    }

    /// `g ∘ f`, when the table defines it.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.compose[g * self.morphisms.len() + f]
    }

    /// Composite of a path, first step first.
    pub fn compose_path(&self, path: &[MorId]) -> Option<MorId> {
        let (&first, rest) = path.split_first()?;
        rest.iter().try_fold(first, |acc, &g| self.compose(g, acc))
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.homs[a * self.objects.len() + b]
    }

    pub fn is_invertible(&self, f: MorId) -> bool {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a)
            .iter()
            .any(|&g| self.compose(g, f) == Some(self.id(a)) && self.compose(f, g) == Some(self.id(b)))
    }
}

/// Identity laws, associativity, and that composites are defined exactly on
/// composable pairs with the right endpoints.
pub fn validate_category(c: &FinCategory) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = c.morphism_count();
    let lbl = |f: MorId| c.morphism_label(f).to_string();
    for (a, &i) in c.identities.iter().enumerate() {
        if c.src(i) != a || c.tgt(i) != a {
            out.push(Violation { law: "identity typing".into(), witness: vec![c.object_label(a).into(), lbl(i)] });
        }
    }
    for g in 0..m {
        for f in 0..m {
            let composable = c.tgt(f) == c.src(g);
            match (composable, c.compose(g, f)) {
                (true, None) => out.push(Violation { law: "missing composite".into(), witness: vec![lbl(g), lbl(f)] }),
                (false, Some(_)) => {
                    out.push(Violation { law: "composite of non-composable pair".into(), witness: vec![lbl(g), lbl(f)] })
                }
                (true, Some(h)) if c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g) => {
                    out.push(Violation { law: "composite typing".into(), witness: vec![lbl(g), lbl(f), lbl(h)] })
                }
                _ => {}
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in 0..m {
        if c.compose(c.id(c.tgt(f)), f) != Some(f) {
            out.push(Violation { law: "left identity".into(), witness: vec![lbl(f)] });
        }
        if c.compose(f, c.id(c.src(f))) != Some(f) {
            out.push(Violation { law: "right identity".into(), witness: vec![lbl(f)] });
        }
    }
    for f in 0..m {
        for g in (0..m).filter(|&g| c.src(g) == c.tgt(f)) {
            for h in (0..m).filter(|&h| c.src(h) == c.tgt(g)) {
                let left = c.compose(g, f).and_then(|gf| c.compose(h, gf));
                let right = c.compose(h, g).and_then(|hg| c.compose(hg, f));
                if left != right {
                    out.push(Violation { law: "associativity".into(), witness: vec![lbl(h), lbl(g), lbl(f)] });
                }
            }
        }
    }
    out
}

/// A finite category with a strict tensor product and unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonoidalStructure {
    base: FinCategory,
    obj_tensor: Vec<ObjId>,
    mor_tensor: Vec<MorId>,
    unit: ObjId,
}

impl FinMonoidalStructure {
    pub fn new(
        base: FinCategory,
        obj_tensor: Vec<ObjId>,
        mor_tensor: Vec<MorId>,
        unit: ObjId,
    ) -> Result<Self, CategoryError> {
        let (n, m) = (base.object_count(), base.morphism_count());
        if obj_tensor.len() != n * n {
            return Err(CategoryError::TableSize { what: "object tensor".into(), got: obj_tensor.len(), want: n * n });
        }
        if mor_tensor.len() != m * m {
            return Err(CategoryError::TableSize { what: "morphism tensor".into(), got: mor_tensor.len(), want: m * m });
        }
        if let Some(&bad) = obj_tensor.iter().find(|&&x| x >= n) {
            return Err(CategoryError::Dangling { what: "object tensor".into(), kind: "object", index: bad });
        }
        if let Some(&bad) = mor_tensor.iter().find(|&&x| x >= m) {
            return Err(CategoryError::Dangling { what: "morphism tensor".into(), kind: "morphism", index: bad });
        }
        if unit >= n {
            return Err(CategoryError::Dangling { what: "unit".into(), kind: "object", index: unit });
        }
        Ok(Self { base, obj_tensor, mor_tensor, unit })
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn tensor_obj(&self, a: ObjId, b: ObjId) -> ObjId {
        self.obj_tensor[a * self.base.object_count() + b]
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.mor_tensor[f * self.base.morphism_count() + g]
    }
}

/// Strict associativity and unitality on objects and morphisms, typing of
/// the morphism tensor, and bifunctoriality.
pub fn validate_strict_monoidal(s: &FinMonoidalStructure) -> Vec<Violation> {
    let c = &s.base;
    let mut out = validate_category(c);
    if !out.is_empty() {
        return out;
    }
    let (n, m) = (c.object_count(), c.morphism_count());
    let ol = |a: ObjId| c.object_label(a).to_string();
    let ml = |f: MorId| c.morphism_label(f).to_string();
    let mut push = |law: &str, witness: Vec<String>| out.push(Violation { law: law.into(), witness });

    for f in 0..m {
        for g in 0..m {
            let h = s.tensor_mor(f, g);
            if c.src(h) != s.tensor_obj(c.src(f), c.src(g)) || c.tgt(h) != s.tensor_obj(c.tgt(f), c.tgt(g)) {
                push("tensor typing", vec![ml(f), ml(g)]);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if s.tensor_mor(c.id(a), c.id(b)) != c.id(s.tensor_obj(a, b)) {
                push("tensor of identities", vec![ol(a), ol(b)]);
            }
        }
        if s.tensor_obj(s.unit, a) != a || s.tensor_obj(a, s.unit) != a {
            push("strict unit on objects", vec![ol(a)]);
        }
        for b in 0..n {
            for d in 0..n {
                if s.tensor_obj(s.tensor_obj(a, b), d) != s.tensor_obj(a, s.tensor_obj(b, d)) {
                    push("strict associativity on objects", vec![ol(a), ol(b), ol(d)]);
                }
            }
        }
    }
    let unit_id = c.id(s.unit);
    for f in 0..m {
        if s.tensor_mor(unit_id, f) != f || s.tensor_mor(f, unit_id) != f {
            push("strict unit on morphisms", vec![ml(f)]);
        }
        for g in 0..m {
            for h in 0..m {
                if s.tensor_mor(s.tensor_mor(f, g), h) != s.tensor_mor(f, s.tensor_mor(g, h)) {
                    push("strict associativity on morphisms", vec![ml(f), ml(g), ml(h)]);
                }
            }
        }
    }
    // (g ∘ f) ⊗ (g' ∘ f') = (g ⊗ g') ∘ (f ⊗ f')
    for f in 0..m {
        for g in (0..m).filter(|&g| c.src(g) == c.tgt(f)) {
            for f2 in 0..m {
                for g2 in (0..m).filter(|&g2| c.src(g2) == c.tgt(f2)) {
                    let lhs = s.tensor_mor(c.compose(g, f).unwrap(), c.compose(g2, f2).unwrap());
                    let rhs = c.compose(s.tensor_mor(g, g2), s.tensor_mor(f, f2));
                    if rhs != Some(lhs) {
                        push("interchange", vec![ml(g), ml(f), ml(g2), ml(f2)]);
                    }
                }
            }
        }
    }
    out
}

/// A poset with a monotone, associative, strictly unital tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalPoset {
    elements: Vec<String>,
    leq: Vec<bool>,
    tensor: Vec<usize>,
    unit: usize,
}

impl MonoidalPoset {
    pub fn new(elements: Vec<String>, leq: Vec<bool>, tensor: Vec<usize>, unit: usize) -> Result<Self, CategoryError> {
        let n = elements.len();
        let bad = |msg: String| Err(CategoryError::Poset(msg));
        if leq.len() != n * n || tensor.len() != n * n {
            return bad("table sizes do not match the carrier".into());
        }
        if unit >= n || tensor.iter().any(|&x| x >= n) {
            return bad("tensor or unit outside the carrier".into());
        }
        let le = |a: usize, b: usize| leq[a * n + b];
        let t = |a: usize, b: usize| tensor[a * n + b];
        for a in 0..n {
            if !le(a, a) {
                return bad(format!("{} is not <= itself", elements[a]));
            }
            if t(unit, a) != a || t(a, unit) != a {
                return bad(format!("unit is not strict at {}", elements[a]));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return bad(format!("{} and {} violate antisymmetry", elements[a], elements[b]));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return bad("order is not transitive".into());
                    }
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return bad("tensor is not associative".into());
                    }
                    if le(a, b) && (!le(t(a, c), t(b, c)) || !le(t(c, a), t(c, b))) {
                        return bad("tensor is not monotone".into());
                    }
                }
            }
        }
        Ok(Self { elements, leq, tensor, unit })
    }

    /// A total order `0 < 1 < ... < n-1` with the given tensor and unit.
    pub fn chain(labels: &[&str], tensor: impl Fn(usize, usize) -> usize, unit: usize) -> Result<Self, CategoryError> {
        let n = labels.len();
        let leq = (0..n * n).map(|k| k / n <= k % n).collect();
        let table = (0..n * n).map(|k| tensor(k / n, k % n)).collect();
        Self::new(labels.iter().map(|s| s.to_string()).collect(), leq, table, unit)
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn leq(&self) -> &[bool] {
        &self.leq
    }

    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.tensor[a * self.elements.len() + b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }
}

/// One morphism `a -> b` exactly when `a <= b`; the tensor of morphisms is
/// forced by monotonicity.
pub fn poset_as_category(p: &MonoidalPoset) -> FinMonoidalStructure {
    let base = FinCategory::from_order(&p.elements, &p.leq).expect("validated poset");
    let n = p.elements.len();
    let arrow = |a: usize, b: usize| base.hom(a, b)[0];
    let obj_tensor = (0..n * n).map(|k| p.tensor(k / n, k % n)).collect();
    let m = base.morphism_count();
    let mut mor_tensor = Vec::with_capacity(m * m);
    for f in 0..m {
        for g in 0..m {
            let src = p.tensor(base.src(f), base.src(g));
            let tgt = p.tensor(base.tgt(f), base.tgt(g));
            mor_tensor.push(arrow(src, tgt));
        }
    }
    FinMonoidalStructure::new(base, obj_tensor, mor_tensor, p.unit).expect("tables sized from the poset")
}

/// A monoid `(A, μ : A ⊗ A → A, η : I → A)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MonoidObject {
    pub carrier: ObjId,
    pub mu: MorId,
    pub eta: MorId,
}

/// Associativity and the two unit laws, with identity constraints.
pub fn is_monoid(s: &FinMonoidalStructure, carrier: ObjId, mu: MorId, eta: MorId) -> bool {
    let c = &s.base;
    let a = carrier;
    let aa = s.tensor_obj(a, a);
    if c.src(mu) != aa || c.tgt(mu) != a || c.src(eta) != s.unit || c.tgt(eta) != a {
        return false;
    }
    let id_a = c.id(a);
    let assoc = c.compose(mu, s.tensor_mor(mu, id_a)) == c.compose(mu, s.tensor_mor(id_a, mu));
    let right_unit = c.compose(mu, s.tensor_mor(id_a, eta)) == Some(id_a);
    let left_unit = c.compose(mu, s.tensor_mor(eta, id_a)) == Some(id_a);
    assoc && right_unit && left_unit
}

/// All monoids, ordered by carrier, then `μ`, then `η`.
pub fn enumerate_monoids(s: &FinMonoidalStructure) -> Vec<MonoidObject> {
    let c = &s.base;
    let mut out = Vec::new();
    for a in 0..c.object_count() {
        for &mu in c.hom(s.tensor_obj(a, a), a) {
            for &eta in c.hom(s.unit, a) {
                if is_monoid(s, a, mu, eta) {
                    out.push(MonoidObject { carrier: a, mu, eta });
                }
            }
        }
    }
    out
}

/// Small structures used throughout the tests and the CLI.
pub mod library {
    use super::*;

    /// `2 = {⊥ ≤ ⊤}` under disjunction, unit `⊥`.
    pub fn two_or() -> FinMonoidalStructure {
        poset_as_category(&MonoidalPoset::chain(&["bot", "top"], |a, b| a.max(b), 0).unwrap())
    }

    /// `0 < 1 < 2` under `max`, unit `0`.
    pub fn chain3_max() -> FinMonoidalStructure {
        poset_as_category(&MonoidalPoset::chain(&["0", "1", "2"], |a, b| a.max(b), 0).unwrap())
    }

    /// `0 < 1 < 2` under truncated addition `min(a + b, 2)`, unit `0`.
    pub fn chain3_truncated_add() -> FinMonoidalStructure {
        poset_as_category(&MonoidalPoset::chain(&["0", "1", "2"], |a, b| (a + b).min(2), 0).unwrap())
    }

    /// Discrete `{e, x}` with `x ⊗ x = x`, unit `e`.
    pub fn antichain2() -> FinMonoidalStructure {
        let p = MonoidalPoset::new(
            vec!["e".into(), "x".into()],
            vec![true, false, false, true],
            vec![0, 1, 1, 1],
            0,
        )
        .unwrap();
        poset_as_category(&p)
    }

    /// One object `*` with endomorphisms `{1, z}`, `z ∘ z = z`, tensor given
    /// by the (commutative) composition.
    pub fn one_z() -> FinMonoidalStructure {
        let base = one_z_category();
        FinMonoidalStructure::new(base, vec![0], vec![0, 1, 1, 1], 0).unwrap()
    }

    pub fn one_z_category() -> FinCategory {
        FinCategory::new(
            vec!["*".into()],
            vec![
                Morphism { label: "1".into(), src: 0, tgt: 0 },
                Morphism { label: "z".into(), src: 0, tgt: 0 },
            ],
            vec![0],
            vec![((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 1)],
        )
        .unwrap()
    }

    /// The five structures with their names.
    pub fn all() -> Vec<(&'static str, FinMonoidalStructure)> {
        vec![
            ("two-or", two_or()),
            ("chain3-max", chain3_max()),
            ("chain3-trunc-add", chain3_truncated_add()),
            ("antichain2", antichain2()),
            ("one-z", one_z()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;

    #[test]
    fn library_categories_validate() {
        assert!(validate_category(&one_z_category()).is_empty());
        let two = two_or();
        assert!(validate_category(two.base()).is_empty());
        assert_eq!(two.base().morphism_count(), 3);
    }

    #[test]
    fn broken_associativity_is_reported() {
        // one object, {1, a, b} with a∘a = b, a∘b = a, b∘a = b, b∘b = b
        let mors = ["1", "a", "b"]
            .iter()
            .map(|l| Morphism { label: l.to_string(), src: 0, tgt: 0 })
            .collect();
        let mut comps = vec![];
        for f in 0..3 {
            comps.push(((0, f), f));
            comps.push(((f, 0), f));
        }
        comps.extend([((1, 1), 2), ((1, 2), 1), ((2, 1), 2), ((2, 2), 2)]);
        let c = FinCategory::new(vec!["*".into()], mors, vec![0], comps).unwrap();
        let v = validate_category(&c);
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.law == "associativity"));
        // a∘(b∘a) = a∘b = a, (a∘b)∘a = a∘a = b
        assert!(v.iter().any(|x| x.witness == vec!["a", "b", "a"]));
    }

    #[test]
    fn dangling_references_are_structural_errors() {
        let r = FinCategory::new(
            vec!["*".into()],
            vec![Morphism { label: "1".into(), src: 0, tgt: 1 }],
            vec![0],
            vec![],
        );
        assert!(matches!(r, Err(CategoryError::Dangling { .. })));
        let r = FinCategory::new(vec!["*".into()], vec![Morphism { label: "1".into(), src: 0, tgt: 0 }], vec![0], vec![((0, 0), 3)]);
        assert!(matches!(r, Err(CategoryError::Dangling { .. })));
    }

    #[test]
    fn missing_and_spurious_composites() {
        let c = FinCategory::new(
            vec!["a".into(), "b".into()],
            vec![
                Morphism { label: "1a".into(), src: 0, tgt: 0 },
                Morphism { label: "1b".into(), src: 1, tgt: 1 },
            ],
            vec![0, 1],
            vec![((0, 0), 0), ((0, 1), 0)],
        )
        .unwrap();
        let laws: Vec<String> = validate_category(&c).into_iter().map(|v| v.law).collect();
        assert!(laws.contains(&"missing composite".to_string()));
        assert!(laws.contains(&"composite of non-composable pair".to_string()));
    }

    #[test]
    fn library_is_strict_monoidal() {
        for (name, s) in all() {
            assert!(validate_strict_monoidal(&s).is_empty(), "{name}");
        }
    }

    #[test]
    fn broken_tensor_is_reported() {
        let good = one_z();
        // z ⊗ 1 = 1 but 1 ⊗ z = z breaks strict unitality (1 is id of the unit)
        let bad = FinMonoidalStructure::new(good.base().clone(), vec![0], vec![0, 1, 0, 1], 0).unwrap();
        assert!(!validate_strict_monoidal(&bad).is_empty());
    }

    #[test]
    fn poset_conversion_sizes() {
        assert_eq!(two_or().base().morphism_count(), 3);
        assert_eq!(chain3_max().base().morphism_count(), 6);
        assert_eq!(antichain2().base().morphism_count(), 2);
    }

    #[test]
    fn poset_validation() {
        assert!(MonoidalPoset::chain(&["0", "1"], |a, b| a.min(b), 0).is_err());
        // 1 - a is antitone
        assert!(MonoidalPoset::new(
            vec!["a".into(), "b".into()],
            vec![true, true, false, true],
            vec![0, 1, 1, 0],
            0
        )
        .is_err());
    }

    #[test]
    fn monoid_counts() {
        let count = |s: &FinMonoidalStructure| enumerate_monoids(s).len();
        assert_eq!(count(&two_or()), 2);
        assert_eq!(count(&chain3_max()), 3);
        let trunc = chain3_truncated_add();
        let carriers: Vec<&str> =
            enumerate_monoids(&trunc).iter().map(|m| trunc.base().object_label(m.carrier)).collect();
        assert_eq!(carriers, vec!["0", "2"]);
        assert_eq!(count(&antichain2()), 1);
        assert_eq!(count(&one_z()), 1);
    }

    #[test]
    fn monoid_enumeration_matches_complement() {
        for (name, s) in all() {
            let c = s.base();
            let found = enumerate_monoids(&s);
            for a in 0..c.object_count() {
                for mu in 0..c.morphism_count() {
                    for eta in 0..c.morphism_count() {
                        let m = MonoidObject { carrier: a, mu, eta };
                        assert_eq!(found.contains(&m), is_monoid(&s, a, mu, eta), "{name} {m:?}");
                    }
                }
            }
        }
    }
}
