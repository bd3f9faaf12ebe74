//! Skew-monoidal structures on finite categories: naturality, the five
//! axioms, and the nine pentagons read off the non-degenerate 4-simplices
//! of the Catalan simplicial set.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::category::{validate_category, CategoryError, FinCategory, MorId, ObjId, Violation};
use crate::dyck::DyckWord;
use crate::sset::{catalan_sset, FaceIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("structurally invalid: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Structural(Vec<Violation>),
    #[error("no {family} component at ({})", .objects.join(", "))]
    MissingComponent { family: &'static str, objects: Vec<String> },
    #[error("tensor is not monotone at ({0}, {1})")]
    NotMonotone(String, String),
    #[error("carrier too large: {0}")]
    CarrierTooLarge(String),
    #[error("sweep budget of {limit} candidates exceeded")]
    Budget { limit: usize },
}

/// Tables of a skew-monoidal structure. Object tuples are flattened
/// row-major: `obj_tensor[a * n + b]`, `alpha[(a * n + b) * n + c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTables {
    pub obj_tensor: Vec<ObjId>,
    pub mor_tensor: Vec<MorId>,
    pub unit: ObjId,
    pub alpha: Vec<MorId>,
    pub lambda: Vec<MorId>,
    pub rho: Vec<MorId>,
    pub kappa: Option<MorId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewData {
    base: FinCategory,
    t: SkewTables,
}

fn size_check(what: &str, got: usize, want: usize) -> Result<(), CategoryError> {
    if got == want {
        Ok(())
    } else {
        Err(CategoryError::TableSize { what: what.into(), got, want })
    }
}

fn range_check(what: &str, values: &[usize], bound: usize, kind: &'static str) -> Result<(), CategoryError> {
    match values.iter().find(|&&x| x >= bound) {
        Some(&index) => Err(CategoryError::Dangling { what: what.into(), kind, index }),
        None => Ok(()),
    }
}

fn violation(law: &str, witness: Vec<String>) -> Violation {
    Violation { law: law.into(), witness }
}

impl SkewData {
    /// Checks table sizes and references only; the remaining structure is
    /// checked by [`SkewData::structural_violations`].
    pub fn new(base: FinCategory, t: SkewTables) -> Result<Self, SkewError> {
        let (n, m) = (base.object_count(), base.morphism_count());
        size_check("object tensor", t.obj_tensor.len(), n * n)?;
        size_check("morphism tensor", t.mor_tensor.len(), m * m)?;
        size_check("alpha", t.alpha.len(), n * n * n)?;
        size_check("lambda", t.lambda.len(), n)?;
        size_check("rho", t.rho.len(), n)?;
        range_check("object tensor", &t.obj_tensor, n, "object")?;
        range_check("unit", &[t.unit], n, "object")?;
        range_check("morphism tensor", &t.mor_tensor, m, "morphism")?;
        range_check("alpha", &t.alpha, m, "morphism")?;
        range_check("lambda", &t.lambda, m, "morphism")?;
        range_check("rho", &t.rho, m, "morphism")?;
        if let Some(k) = t.kappa {
            range_check("kappa", &[k], m, "morphism")?;
        }
        Ok(Self { base, t })
    }

    /// A poset with a monotone tensor; every constraint component is the
    /// unique arrow between its endpoints, which must exist.
    pub fn from_order(labels: &[String], leq: &[bool], obj_tensor: Vec<ObjId>, unit: ObjId) -> Result<Self, SkewError> {
        let base = FinCategory::from_order(labels, leq)?;
        let n = base.object_count();
        size_check("object tensor", obj_tensor.len(), n * n)?;
        range_check("object tensor", &obj_tensor, n, "object")?;
        range_check("unit", &[unit], n, "object")?;
        let ten = |a: ObjId, b: ObjId| obj_tensor[a * n + b];
        let arrow = |a: ObjId, b: ObjId| base.hom(a, b).first().copied();
        let m = base.morphism_count();
        let mut mor_tensor = Vec::with_capacity(m * m);
        for f in 0..m {
            for g in 0..m {
                let (s, t) = (ten(base.src(f), base.src(g)), ten(base.tgt(f), base.tgt(g)));
                match arrow(s, t) {
                    Some(h) => mor_tensor.push(h),
                    None => {
                        return Err(SkewError::NotMonotone(base.morphism_label(f).into(), base.morphism_label(g).into()))
                    }
                }
            }
        }
        let missing = |family: &'static str, objs: &[ObjId]| SkewError::MissingComponent {
            family,
            objects: objs.iter().map(|&x| labels[x].clone()).collect(),
        };
        let mut alpha = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    alpha.push(arrow(ten(ten(a, b), c), ten(a, ten(b, c))).ok_or_else(|| missing("alpha", &[a, b, c]))?);
                }
            }
        }
        let lambda = (0..n)
            .map(|a| arrow(ten(unit, a), a).ok_or_else(|| missing("lambda", &[a])))
            .collect::<Result<Vec<_>, _>>()?;
        let rho = (0..n)
            .map(|a| arrow(a, ten(a, unit)).ok_or_else(|| missing("rho", &[a])))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(base, SkewTables { obj_tensor, mor_tensor, unit, alpha, lambda, rho, kappa: None })
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn tables(&self) -> &SkewTables {
        &self.t
    }

    pub fn unit(&self) -> ObjId {
        self.t.unit
    }

    pub fn tensor_obj(&self, a: ObjId, b: ObjId) -> ObjId {
        self.t.obj_tensor[a * self.base.object_count() + b]
    }

    pub fn tensor_mor(&self, f: MorId, g: MorId) -> MorId {
        self.t.mor_tensor[f * self.base.morphism_count() + g]
    }

    pub fn alpha(&self, a: ObjId, b: ObjId, c: ObjId) -> MorId {
        let n = self.base.object_count();
        self.t.alpha[(a * n + b) * n + c]
    }

    pub fn lambda(&self, a: ObjId) -> MorId {
        self.t.lambda[a]
    }

    pub fn rho(&self, a: ObjId) -> MorId {
        self.t.rho[a]
    }

    /// `κ`, the identity of the unit when absent.
    pub fn kappa(&self) -> MorId {
        self.t.kappa.unwrap_or_else(|| self.base.id(self.t.unit))
    }

    pub fn kappa_is_identity(&self) -> bool {
        self.kappa() == self.base.id(self.t.unit)
    }

    pub fn with_kappa(&self, kappa: Option<MorId>) -> Self {
        let mut out = self.clone();
        out.t.kappa = kappa;
        out
    }

    /// Category laws, bifunctoriality of the tensor, and the sources and
    /// targets of every constraint component.
    pub fn structural_violations(&self) -> Vec<Violation> {
        let c = &self.base;
        let mut out = validate_category(c);
        if !out.is_empty() {
            return out;
        }
        let (n, m) = (c.object_count(), c.morphism_count());
        let ol = |a: ObjId| c.object_label(a).to_string();
        let ml = |f: MorId| c.morphism_label(f).to_string();
        for f in 0..m {
            for g in 0..m {
                let h = self.tensor_mor(f, g);
                if c.src(h) != self.tensor_obj(c.src(f), c.src(g)) || c.tgt(h) != self.tensor_obj(c.tgt(f), c.tgt(g)) {
                    out.push(violation("tensor typing", vec![ml(f), ml(g)]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.tensor_mor(c.id(a), c.id(b)) != c.id(self.tensor_obj(a, b)) {
                    out.push(violation("tensor of identities", vec![ol(a), ol(b)]));
                }
            }
        }
        for f in 0..m {
            for g in (0..m).filter(|&g| c.src(g) == c.tgt(f)) {
                for f2 in 0..m {
                    for g2 in (0..m).filter(|&g2| c.src(g2) == c.tgt(f2)) {
                        let (gf, gf2) = (c.compose(g, f).unwrap(), c.compose(g2, f2).unwrap());
                        if c.compose(self.tensor_mor(g, g2), self.tensor_mor(f, f2)) != Some(self.tensor_mor(gf, gf2)) {
                            out.push(violation("interchange", vec![ml(g), ml(f), ml(g2), ml(f2)]));
                        }
                    }
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        let typed = |f: MorId, s: ObjId, t: ObjId| c.src(f) == s && c.tgt(f) == t;
        let i = self.t.unit;
        for a in 0..n {
            for b in 0..n {
                for d in 0..n {
                    let (s, t) = (self.tensor_obj(self.tensor_obj(a, b), d), self.tensor_obj(a, self.tensor_obj(b, d)));
                    if !typed(self.alpha(a, b, d), s, t) {
                        out.push(violation("alpha typing", vec![ol(a), ol(b), ol(d)]));
                    }
                }
            }
            if !typed(self.lambda(a), self.tensor_obj(i, a), a) {
                out.push(violation("lambda typing", vec![ol(a)]));
            }
            if !typed(self.rho(a), a, self.tensor_obj(a, i)) {
                out.push(violation("rho typing", vec![ol(a)]));
            }
        }
        if !typed(self.kappa(), i, i) {
            out.push(violation("kappa typing", vec![ml(self.kappa())]));
        }
        out
    }
}

/// Naturality of `α` in all three arguments and of `λ`, `ρ`; an empty list
/// means natural.
pub fn check_naturality(d: &SkewData) -> Result<Vec<Violation>, SkewError> {
    let structural = d.structural_violations();
    if !structural.is_empty() {
        return Err(SkewError::Structural(structural));
    }
    let c = d.base();
    let m = c.morphism_count();
    let ml = |f: MorId| c.morphism_label(f).to_string();
    let i = d.unit();
    let mut out = Vec::new();
    for f in 0..m {
        for g in 0..m {
            for h in 0..m {
                let (a, b, e) = (c.src(f), c.src(g), c.src(h));
                let (a2, b2, e2) = (c.tgt(f), c.tgt(g), c.tgt(h));
                let lhs = c.compose(d.alpha(a2, b2, e2), d.tensor_mor(d.tensor_mor(f, g), h));
                let rhs = c.compose(d.tensor_mor(f, d.tensor_mor(g, h)), d.alpha(a, b, e));
                if lhs != rhs {
                    out.push(Violation { law: "alpha naturality".into(), witness: vec![ml(f), ml(g), ml(h)] });
                }
            }
        }
        let (a, a2) = (c.src(f), c.tgt(f));
        if c.compose(d.lambda(a2), d.tensor_mor(c.id(i), f)) != c.compose(f, d.lambda(a)) {
            out.push(Violation { law: "lambda naturality".into(), witness: vec![ml(f)] });
        }
        if c.compose(d.rho(a2), f) != c.compose(d.tensor_mor(f, c.id(i)), d.rho(a)) {
            out.push(Violation { law: "rho naturality".into(), witness: vec![ml(f)] });
        }
    }
    Ok(out)
}

/// The five skew-monoidal axioms followed by the nine pentagons. Each
/// pentagon is named after the non-degenerate 4-simplex asserting it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    Associativity,
    MiddleUnit,
    LeftUnit,
    RightUnit,
    UnitUnit,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
}

impl Condition {
    pub const AXIOMS: [Condition; 5] =
        [Condition::Associativity, Condition::MiddleUnit, Condition::LeftUnit, Condition::RightUnit, Condition::UnitUnit];
    pub const PENTAGONS: [Condition; 9] = [
        Condition::A1,
        Condition::A2,
        Condition::A3,
        Condition::A4,
        Condition::A5,
        Condition::A6,
        Condition::A7,
        Condition::A8,
        Condition::A9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Associativity => "associativity",
            Condition::MiddleUnit => "middle-unit",
            Condition::LeftUnit => "left-unit",
            Condition::RightUnit => "right-unit",
            Condition::UnitUnit => "unit-unit",
            Condition::A1 => "A1",
            Condition::A2 => "A2",
            Condition::A3 => "A3",
            Condition::A4 => "A4",
            Condition::A5 => "A5",
            Condition::A6 => "A6",
            Condition::A7 => "A7",
            Condition::A8 => "A8",
            Condition::A9 => "A9",
        }
    }

    /// Number of objects the condition quantifies over.
    pub fn arity(self) -> usize {
        match self {
            Condition::Associativity | Condition::A1 => 4,
            Condition::MiddleUnit
            | Condition::LeftUnit
            | Condition::RightUnit
            | Condition::A2
            | Condition::A3
            | Condition::A4 => 2,
            Condition::A8 | Condition::A9 => 1,
            Condition::UnitUnit | Condition::A5 | Condition::A6 | Condition::A7 => 0,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Condition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Outcome of one condition; the witness is the first failing object tuple
/// (empty for conditions about the unit alone), and `composites` holds the
/// two sides there, `None` for a path that does not compose.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionOutcome {
    pub condition: Condition,
    pub holds: bool,
    pub witness: Option<Vec<String>>,
    pub composites: Option<[Option<String>; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PentagonReport {
    pub outcomes: Vec<ConditionOutcome>,
}

impl PentagonReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.holds)
    }

    pub fn holds(&self, c: Condition) -> Option<bool> {
        self.outcomes.iter().find(|o| o.condition == c).map(|o| o.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionOutcome> {
        self.outcomes.iter().filter(|o| !o.holds)
    }
}

/// The two edge paths of a condition at an object tuple, each listed first
/// step first.
fn paths(d: &SkewData, cond: Condition, x: &[ObjId]) -> (Vec<MorId>, Vec<MorId>) {
    let c = d.base();
    let i = d.unit();
    let t = |a, b| d.tensor_obj(a, b);
    let tm = |f, g| d.tensor_mor(f, g);
    let id = |a| c.id(a);
    let k = d.kappa();
    match cond {
        Condition::Associativity | Condition::A1 => {
            let (a, b, e, f) = (x[0], x[1], x[2], x[3]);
            let long = vec![tm(d.alpha(a, b, e), id(f)), d.alpha(a, t(b, e), f), tm(id(a), d.alpha(b, e, f))];
            let short = vec![d.alpha(t(a, b), e, f), d.alpha(a, b, t(e, f))];
            (long, short)
        }
        Condition::MiddleUnit => {
            let (a, b) = (x[0], x[1]);
            (vec![tm(d.rho(a), id(b)), d.alpha(a, i, b), tm(id(a), d.lambda(b))], vec![id(t(a, b))])
        }
        Condition::A2 => {
            let (a, b) = (x[0], x[1]);
            let ab = id(t(a, b));
            (vec![tm(d.rho(a), id(b)), d.alpha(a, i, b), tm(id(a), d.lambda(b))], vec![ab, ab])
        }
        Condition::LeftUnit => {
            let (a, b) = (x[0], x[1]);
            (vec![d.alpha(i, a, b), d.lambda(t(a, b))], vec![tm(d.lambda(a), id(b))])
        }
        Condition::A3 => {
            let (a, b) = (x[0], x[1]);
            let ab = id(t(a, b));
            (vec![tm(d.lambda(a), id(b)), ab, ab], vec![d.alpha(i, a, b), d.lambda(t(a, b))])
        }
        Condition::RightUnit => {
            let (a, b) = (x[0], x[1]);
            (vec![d.rho(t(a, b)), d.alpha(a, b, i)], vec![tm(id(a), d.rho(b))])
        }
        Condition::A4 => {
            let (a, b) = (x[0], x[1]);
            let ab = id(t(a, b));
            (vec![ab, ab, tm(id(a), d.rho(b))], vec![d.rho(t(a, b)), d.alpha(a, b, i)])
        }
        Condition::UnitUnit => (vec![d.rho(i), d.lambda(i)], vec![id(i)]),
        Condition::A5 => (vec![id(i), k, id(i)], vec![id(i), id(i)]),
        Condition::A6 => (vec![id(i), k, id(i)], vec![d.rho(i), d.lambda(i)]),
        Condition::A7 => (vec![k, id(i), k], vec![d.rho(i), d.lambda(i)]),
        Condition::A8 => {
            let a = x[0];
            let ai = id(t(a, i));
            (vec![d.rho(a), ai, tm(id(a), k)], vec![d.rho(a), ai])
        }
        Condition::A9 => {
            let a = x[0];
            let ia = id(t(i, a));
            (vec![tm(k, id(a)), ia, d.lambda(a)], vec![ia, d.lambda(a)])
        }
    }
}

fn evaluate(d: &SkewData, cond: Condition) -> ConditionOutcome {
    let c = d.base();
    let n = c.object_count();
    let arity = cond.arity();
    for code in 0..n.pow(arity as u32) {
        // first object varies slowest
        let x: Vec<ObjId> = (0..arity).map(|p| code / n.pow((arity - 1 - p) as u32) % n).collect();
        let (upper, lower) = paths(d, cond, &x);
        let (u, l) = (c.compose_path(&upper), c.compose_path(&lower));
        if u.is_none() || u != l {
            let witness = x.iter().map(|&a| c.object_label(a).to_string()).collect();
            let label = |f: Option<MorId>| f.map(|f| c.morphism_label(f).to_string());
            return ConditionOutcome {
                condition: cond,
                holds: false,
                witness: Some(witness),
                composites: Some([label(u), label(l)]),
            };
        }
    }
    ConditionOutcome { condition: cond, holds: true, witness: None, composites: None }
}

fn report(d: &SkewData, conds: &[Condition]) -> PentagonReport {
    PentagonReport { outcomes: conds.iter().map(|&c| evaluate(d, c)).collect() }
}

/// The five axioms, pointwise over all object tuples.
pub fn check_axioms(d: &SkewData) -> PentagonReport {
    report(d, &Condition::AXIOMS)
}

/// The nine pentagons, pointwise over all object tuples.
pub fn check_pentagons(d: &SkewData) -> PentagonReport {
    report(d, &Condition::PENTAGONS)
}

/// All nine pentagons hold exactly when the five axioms hold and `κ` is
/// the identity.
pub fn verify_equivalence(d: &SkewData) -> bool {
    check_pentagons(d).all_hold() == (check_axioms(d).all_hold() && d.kappa_is_identity())
}

/// Every `α`, `λ`, `ρ` component is invertible.
pub fn is_monoidal(d: &SkewData) -> bool {
    let c = d.base();
    d.t.alpha.iter().chain(&d.t.lambda).chain(&d.t.rho).all(|&f| c.is_invertible(f))
}

/// The 4-simplex of the Catalan set whose faces are listed for a pentagon,
/// or `None` for the axioms.
pub fn pentagon_simplex(cond: Condition) -> Option<DyckWord> {
    let s = catalan_sset(4);
    let x = |n: usize, w: &str| s.find(n, w).expect("Catalan simplex");
    let (c, t, i) = (x(1, "UDUD"), x(2, "UDUDUD"), x(2, "UUDUDD"));
    let s0 = |n: usize, y| s.degeneracy(n, 0, y);
    let s1 = |n: usize, y| s.degeneracy(n, 1, y);
    let s2 = |n: usize, y| s.degeneracy(n, 2, y);
    let three = FaceIndex::new(&s, 3);
    let tet = |f: [usize; 4]| three.get(&f)[0];
    let a = tet([t, t, t, t]);
    let l = tet([i, s1(1, c), t, s1(1, c)]);
    let r = tet([s0(1, c), t, s0(1, c), i]);
    let k = tet([i, s1(1, c), s0(1, c), i]);
    let faces = match cond {
        Condition::A1 => [a, a, a, a, a],
        Condition::A2 => [r, s1(2, t), a, s1(2, t), l],
        Condition::A3 => [l, l, s2(2, t), a, s2(2, t)],
        Condition::A4 => [s0(2, t), a, s0(2, t), r, r],
        Condition::A5 => [s1(2, i), s2(2, i), k, s0(2, i), s1(2, i)],
        Condition::A6 => [s0(2, i), l, k, r, s2(2, i)],
        Condition::A7 => [k, l, s0(2, s1(1, c)), r, k],
        Condition::A8 => [r, s1(2, t), s0(2, t), r, k],
        Condition::A9 => [k, l, s2(2, t), s1(2, t), l],
        _ => return None,
    };
    let four = FaceIndex::new(&s, 4);
    match four.get(&faces) {
        [y] => Some(s.label(4, *y).parse().unwrap()),
        _ => None,
    }
}

/// Carriers a sweep can run over.
#[derive(Debug, Clone)]
pub enum SkewCarrier {
    /// A poset; constraint components are the unique order witnesses.
    Poset { labels: Vec<String>, leq: Vec<bool> },
    Category(FinCategory),
}

impl SkewCarrier {
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n * n).map(|k| k / n <= k % n).collect();
        SkewCarrier::Poset { labels, leq }
    }

    fn category(&self) -> Result<FinCategory, SkewError> {
        match self {
            SkewCarrier::Poset { labels, leq } => {
                if labels.len() > MAX_POSET_CARRIER {
                    return Err(SkewError::CarrierTooLarge(format!(
                        "{} elements, at most {MAX_POSET_CARRIER} allowed",
                        labels.len()
                    )));
                }
                Ok(FinCategory::from_order(labels, leq)?)
            }
            SkewCarrier::Category(c) => {
                if c.object_count() > MAX_CATEGORY_OBJECTS || c.morphism_count() > MAX_CATEGORY_MORPHISMS {
                    return Err(SkewError::CarrierTooLarge(format!(
                        "{} objects and {} morphisms, at most {MAX_CATEGORY_OBJECTS} and {MAX_CATEGORY_MORPHISMS} allowed",
                        c.object_count(),
                        c.morphism_count()
                    )));
                }
                Ok(c.clone())
            }
        }
    }
}

pub const MAX_POSET_CARRIER: usize = 3;
pub const MAX_CATEGORY_OBJECTS: usize = 2;
pub const MAX_CATEGORY_MORPHISMS: usize = 6;
pub const DEFAULT_SWEEP_BUDGET: usize = 1_000_000;

struct Budget {
    used: usize,
    limit: usize,
}

impl Budget {
    fn spend(&mut self, k: usize) -> Result<(), SkewError> {
        self.used = self.used.saturating_add(k);
        if self.used > self.limit {
            Err(SkewError::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Cartesian product of choice lists, in lexicographic order.
fn product(choices: &[Vec<usize>], budget: &mut Budget) -> Result<Vec<Vec<usize>>, SkewError> {
    let total = choices.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()));
    budget.spend(total.unwrap_or(usize::MAX))?;
    let mut out = vec![Vec::with_capacity(choices.len())];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    Ok(out)
}

/// All bifunctors on `c` extending an object table, built from the partial
/// functors `f ⊗ 1` and `1 ⊗ g`.
fn bifunctors(c: &FinCategory, obj_tensor: &[ObjId], budget: &mut Budget) -> Result<Vec<Vec<MorId>>, SkewError> {
    let (n, m) = (c.object_count(), c.morphism_count());
    let ten = |a: ObjId, b: ObjId| obj_tensor[a * n + b];
    // left[f * n + b] = f ⊗ 1_b, right[a * m + g] = 1_a ⊗ g
    let left_choices: Vec<Vec<MorId>> = (0..m * n)
        .map(|k| {
            let (f, b) = (k / n, k % n);
            c.hom(ten(c.src(f), b), ten(c.tgt(f), b)).to_vec()
        })
        .collect();
    let right_choices: Vec<Vec<MorId>> = (0..n * m)
        .map(|k| {
            let (a, g) = (k / m, k % m);
            c.hom(ten(a, c.src(g)), ten(a, c.tgt(g))).to_vec()
        })
        .collect();
    let is_id = |f: MorId| c.id(c.src(f)) == f;
    let pin = |choices: Vec<Vec<MorId>>, forced: &dyn Fn(usize) -> Option<MorId>| -> Vec<Vec<MorId>> {
        choices
            .into_iter()
            .enumerate()
            .map(|(k, v)| match forced(k) {
                Some(id) => v.into_iter().filter(|&x| x == id).collect(),
                None => v,
            })
            .collect()
    };
    let left_choices = pin(left_choices, &|k| {
        let (f, b) = (k / n, k % n);
        is_id(f).then(|| c.id(ten(c.src(f), b)))
    });
    let right_choices = pin(right_choices, &|k| {
        let (a, g) = (k / m, k % m);
        is_id(g).then(|| c.id(ten(a, c.src(g))))
    });
    let functorial_left = |l: &[MorId]| {
        (0..n).all(|b| {
            (0..m).all(|f| {
                (0..m).filter(|&g| c.src(g) == c.tgt(f)).all(|g| {
                    let gf = c.compose(g, f).unwrap();
                    c.compose(l[g * n + b], l[f * n + b]) == Some(l[gf * n + b])
                })
            })
        })
    };
    let functorial_right = |r: &[MorId]| {
        (0..n).all(|a| {
            (0..m).all(|f| {
                (0..m).filter(|&g| c.src(g) == c.tgt(f)).all(|g| {
                    let gf = c.compose(g, f).unwrap();
                    c.compose(r[a * m + g], r[a * m + f]) == Some(r[a * m + gf])
                })
            })
        })
    };
    let lefts: Vec<Vec<MorId>> = product(&left_choices, budget)?.into_iter().filter(|l| functorial_left(l)).collect();
    let rights: Vec<Vec<MorId>> = product(&right_choices, budget)?.into_iter().filter(|r| functorial_right(r)).collect();
    budget.spend(lefts.len().saturating_mul(rights.len()))?;
    let mut out = Vec::new();
    for l in &lefts {
        for r in &rights {
            // (1 ⊗ g) ∘ (f ⊗ 1) = (f ⊗ 1) ∘ (1 ⊗ g) for f : a → a', g : b → b'
            let mut table = Vec::with_capacity(m * m);
            let mut ok = true;
            'pairs: for f in 0..m {
                for g in 0..m {
                    let (a, a2, b, b2) = (c.src(f), c.tgt(f), c.src(g), c.tgt(g));
                    let one = c.compose(r[a2 * m + g], l[f * n + b]);
                    let two = c.compose(l[f * n + b2], r[a * m + g]);
                    if one.is_none() || one != two {
                        ok = false;
                        break 'pairs;
                    }
                    table.push(one.unwrap());
                }
            }
            if ok {
                out.push(table);
            }
        }
    }
    Ok(out)
}

/// Every natural skew datum on the carrier, for every choice of `κ`.
/// Candidates are ordered by object tensor, unit, morphism tensor, then
/// components.
pub fn skew_candidates(carrier: &SkewCarrier, budget: usize) -> Result<Vec<SkewData>, SkewError> {
    let c = carrier.category()?;
    let structural = validate_category(&c);
    if !structural.is_empty() {
        return Err(SkewError::Structural(structural));
    }
    let mut budget = Budget { used: 0, limit: budget };
    let n = c.object_count();
    let mut out = Vec::new();
    let tensor_choices = vec![(0..n).collect::<Vec<_>>(); n * n];
    for obj_tensor in product(&tensor_choices, &mut budget)? {
        let ten = |a: ObjId, b: ObjId| obj_tensor[a * n + b];
        for mor_tensor in bifunctors(&c, &obj_tensor, &mut budget)? {
            for unit in 0..n {
                let mut choices = Vec::with_capacity(n * n * n + 2 * n);
                for a in 0..n {
                    for b in 0..n {
                        for e in 0..n {
                            choices.push(c.hom(ten(ten(a, b), e), ten(a, ten(b, e))).to_vec());
                        }
                    }
                }
                for a in 0..n {
                    choices.push(c.hom(ten(unit, a), a).to_vec());
                }
                for a in 0..n {
                    choices.push(c.hom(a, ten(a, unit)).to_vec());
                }
                for comps in product(&choices, &mut budget)? {
                    let (alpha, rest) = comps.split_at(n * n * n);
                    let (lambda, rho) = rest.split_at(n);
                    let tables = SkewTables {
                        obj_tensor: obj_tensor.clone(),
                        mor_tensor: mor_tensor.clone(),
                        unit,
                        alpha: alpha.to_vec(),
                        lambda: lambda.to_vec(),
                        rho: rho.to_vec(),
                        kappa: None,
                    };
                    let d = SkewData::new(c.clone(), tables)?;
                    if !check_naturality(&d)?.is_empty() {
                        continue;
                    }
                    budget.spend(c.hom(unit, unit).len())?;
                    for &k in c.hom(unit, unit) {
                        out.push(d.with_kappa(Some(k)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Every skew-monoidal structure on the carrier (natural, satisfying the
/// five axioms, with the default `κ`).
pub fn enumerate_skew_structures(carrier: &SkewCarrier, budget: usize) -> Result<Vec<SkewData>, SkewError> {
    Ok(skew_candidates(carrier, budget)?
        .into_iter()
        .filter(|d| d.kappa_is_identity())
        .map(|d| d.with_kappa(None))
        .filter(|d| check_axioms(d).all_hold())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub candidates: usize,
    pub skew_monoidal: usize,
    pub monoidal: usize,
    pub equivalence_holds: bool,
    pub a5_forces_identity_kappa: bool,
    pub a8_a9_hold_for_identity_kappa: bool,
    pub monoidal_are_skew_monoidal: bool,
}

impl SweepSummary {
    pub fn all_hold(&self) -> bool {
        self.equivalence_holds
            && self.a5_forces_identity_kappa
            && self.a8_a9_hold_for_identity_kappa
            && self.monoidal_are_skew_monoidal
    }
}

/// Runs both checkers over every candidate and tallies the results.
pub fn sweep(carrier: &SkewCarrier, budget: usize) -> Result<SweepSummary, SkewError> {
    let candidates = skew_candidates(carrier, budget)?;
    let mut s = SweepSummary {
        candidates: candidates.len(),
        skew_monoidal: 0,
        monoidal: 0,
        equivalence_holds: true,
        a5_forces_identity_kappa: true,
        a8_a9_hold_for_identity_kappa: true,
        monoidal_are_skew_monoidal: true,
    };
    for d in &candidates {
        let axioms = check_axioms(d).all_hold();
        let pentagons = check_pentagons(d);
        let identity = d.kappa_is_identity();
        if identity && axioms {
            s.skew_monoidal += 1;
        }
        s.equivalence_holds &= pentagons.all_hold() == (axioms && identity);
        if pentagons.holds(Condition::A5) == Some(true) {
            s.a5_forces_identity_kappa &= identity;
        }
        if identity {
            s.a8_a9_hold_for_identity_kappa &=
                pentagons.holds(Condition::A8) == Some(true) && pentagons.holds(Condition::A9) == Some(true);
            if is_monoidal(d) {
                s.monoidal += 1;
                s.monoidal_are_skew_monoidal &= axioms;
            }
        }
    }
    Ok(s)
}

/// Named examples used by the tests and the CLI.
pub mod examples {
    use super::*;
    use crate::category::library::one_z_category;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn chain_leq(n: usize) -> Vec<bool> {
        (0..n * n).map(|k| k / n <= k % n).collect()
    }

    /// `{⊥ ≤ ⊤}` with `∨` and unit `⊥`.
    pub fn two_or() -> SkewData {
        SkewData::from_order(&labels(&["bot", "top"]), &chain_leq(2), vec![0, 1, 1, 1], 0).unwrap()
    }

    /// `0 < 1 < 2` with `min` and unit `2`.
    pub fn chain3_min() -> SkewData {
        let t = (0..9).map(|k| (k / 3).min(k % 3)).collect();
        SkewData::from_order(&labels(&["0", "1", "2"]), &chain_leq(3), t, 2).unwrap()
    }

    /// `{1, z}` with all constraints `1` and the given `κ`.
    pub fn one_z(kappa: &str) -> SkewData {
        let c = one_z_category();
        let k = c.find_morphism(kappa).expect("1 or z");
        let tables = SkewTables {
            obj_tensor: vec![0],
            mor_tensor: vec![0, 1, 1, 1],
            unit: 0,
            alpha: vec![0],
            lambda: vec![0],
            rho: vec![0],
            kappa: Some(k),
        };
        SkewData::new(c, tables).unwrap()
    }
}
