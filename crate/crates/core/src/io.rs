//! JSON files describing finite monoidal structures and skew data.
//!
//! Every file carries `schema_version` and `kind` (`"category"` or
//! `"poset"`). Tables are keyed by labels; unknown labels, missing entries
//! and duplicate entries are errors naming the offending field.

use std::collections::{BTreeMap, HashMap};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{CategoryError, FinCategory, FinMonoidalStructure, Morphism, MonoidalPoset, poset_as_category};
use crate::skew::{SkewData, SkewError, SkewTables};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Skew(#[from] SkewError),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Schema { path: path.into(), message: message.into() }
}

fn syntax(e: serde_json::Error) -> InputError {
    InputError::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub label: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityEntry {
    pub object: String,
    pub morphism: String,
}

/// `after ∘ before = result`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeEntry {
    pub after: String,
    pub before: String,
    pub result: String,
}

/// `left ⊗ right = result`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorEntry {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaEntry {
    pub objects: [String; 3],
    pub morphism: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitorEntry {
    pub object: String,
    pub morphism: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub schema_version: u32,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: Vec<IdentityEntry>,
    pub compose: Vec<ComposeEntry>,
    pub object_tensor: Vec<TensorEntry>,
    pub morphism_tensor: Vec<TensorEntry>,
    pub unit: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<AlphaEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<UnitorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<UnitorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub schema_version: u32,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub elements: Vec<String>,
    /// Pairs `[a, b]` with `a <= b`; reflexive pairs may be omitted.
    pub order: Vec<[String; 2]>,
    pub tensor: Vec<TensorEntry>,
    pub unit: String,
}

#[derive(Debug, Clone)]
pub struct LoadedStructure {
    pub name: Option<String>,
    pub structure: FinMonoidalStructure,
}

#[derive(Debug, Clone)]
pub struct LoadedSkew {
    pub name: Option<String>,
    pub data: SkewData,
}

fn header(text: &str) -> Result<String, InputError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(syntax)?;
    let obj = value.as_object().ok_or_else(|| schema("$", "expected a JSON object"))?;
    match obj.get("schema_version") {
        None => return Err(schema("schema_version", "missing")),
        Some(v) if v.as_u64() != Some(SCHEMA_VERSION as u64) => {
            return Err(schema("schema_version", format!("unsupported version {v}, expected {SCHEMA_VERSION}")))
        }
        _ => {}
    }
    let kind = match obj.get("kind").and_then(|k| k.as_str()) {
        Some(k @ ("category" | "poset")) => k.to_string(),
        Some(k) => return Err(schema("kind", format!("unknown kind {k:?}, expected \"category\" or \"poset\""))),
        None => return Err(schema("kind", "missing")),
    };
    Ok(kind)
}

fn body<T: DeserializeOwned>(text: &str) -> Result<T, InputError> {
    serde_json::from_str(text)
        .map_err(|e| InputError::Schema { path: format!("line {} column {}", e.line(), e.column()), message: e.to_string() })
}

struct Labels<'a> {
    kind: &'static str,
    index: HashMap<&'a str, usize>,
}

impl<'a> Labels<'a> {
    fn new(kind: &'static str, labels: impl Iterator<Item = &'a str>, path: &str) -> Result<Self, InputError> {
        let mut index = HashMap::new();
        for (i, l) in labels.enumerate() {
            if index.insert(l, i).is_some() {
                return Err(schema(format!("{path}[{i}]"), format!("duplicate {kind} label {l:?}")));
            }
        }
        Ok(Self { kind, index })
    }

    fn get(&self, label: &str, path: impl Into<String>) -> Result<usize, InputError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| schema(path, format!("unknown {} {label:?}", self.kind)))
    }

    fn len(&self) -> usize {
        self.index.len()
    }
}

/// Fills a total table of pairs, rejecting duplicates and gaps.
fn pair_table(
    entries: &[TensorEntry],
    keys: &Labels,
    values: &Labels,
    field: &str,
    names: &[String],
) -> Result<Vec<usize>, InputError> {
    let n = keys.len();
    let mut table = vec![None; n * n];
    for (k, e) in entries.iter().enumerate() {
        let path = |f: &str| format!("{field}[{k}].{f}");
        let a = keys.get(&e.left, path("left"))?;
        let b = keys.get(&e.right, path("right"))?;
        let r = values.get(&e.result, path("result"))?;
        if table[a * n + b].replace(r).is_some() {
            return Err(schema(format!("{field}[{k}]"), format!("duplicate entry for ({}, {})", e.left, e.right)));
        }
    }
    table
        .into_iter()
        .enumerate()
        .map(|(k, v)| v.ok_or_else(|| schema(field, format!("missing entry for ({}, {})", names[k / n], names[k % n]))))
        .collect()
}

fn build_category(f: &CategoryFile) -> Result<(FinCategory, Labels<'_>, Labels<'_>), InputError> {
    let objs = Labels::new("object", f.objects.iter().map(String::as_str), "objects")?;
    let mors = Labels::new("morphism", f.morphisms.iter().map(|m| m.label.as_str()), "morphisms")?;
    let mut morphisms = Vec::with_capacity(f.morphisms.len());
    for (k, m) in f.morphisms.iter().enumerate() {
        let src = objs.get(&m.src, format!("morphisms[{k}].src"))?;
        let tgt = objs.get(&m.tgt, format!("morphisms[{k}].tgt"))?;
        morphisms.push(Morphism { label: m.label.clone(), src, tgt });
    }
    let mut identities = vec![None; f.objects.len()];
    for (k, e) in f.identities.iter().enumerate() {
        let a = objs.get(&e.object, format!("identities[{k}].object"))?;
        let m = mors.get(&e.morphism, format!("identities[{k}].morphism"))?;
        if identities[a].replace(m).is_some() {
            return Err(schema(format!("identities[{k}]"), format!("second identity for {}", e.object)));
        }
    }
    let identities = identities
        .into_iter()
        .enumerate()
        .map(|(a, v)| v.ok_or_else(|| schema("identities", format!("no identity for {}", f.objects[a]))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut seen = BTreeMap::new();
    let mut composites = Vec::with_capacity(f.compose.len());
    for (k, e) in f.compose.iter().enumerate() {
        let g = mors.get(&e.after, format!("compose[{k}].after"))?;
        let h = mors.get(&e.before, format!("compose[{k}].before"))?;
        let r = mors.get(&e.result, format!("compose[{k}].result"))?;
        if seen.insert((g, h), r).is_some() {
            return Err(schema(format!("compose[{k}]"), format!("duplicate entry for {} after {}", e.after, e.before)));
        }
        composites.push(((g, h), r));
    }
    let base = FinCategory::new(f.objects.clone(), morphisms, identities, composites)?;
    Ok((base, objs, mors))
}

fn parse_category_file(text: &str) -> Result<(CategoryFile, FinMonoidalStructure), InputError> {
    let f: CategoryFile = body(text)?;
    let (base, objs, mors) = build_category(&f)?;
    let mor_names: Vec<String> = f.morphisms.iter().map(|m| m.label.clone()).collect();
    let obj_tensor = pair_table(&f.object_tensor, &objs, &objs, "object_tensor", &f.objects)?;
    let mor_tensor = pair_table(&f.morphism_tensor, &mors, &mors, "morphism_tensor", &mor_names)?;
    let unit = objs.get(&f.unit, "unit")?;
    let s = FinMonoidalStructure::new(base, obj_tensor, mor_tensor, unit)?;
    Ok((f, s))
}

fn order_table(f: &PosetFile, elems: &Labels) -> Result<Vec<bool>, InputError> {
    let n = f.elements.len();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
    }
    for (k, [a, b]) in f.order.iter().enumerate() {
        let a = elems.get(a, format!("order[{k}][0]"))?;
        let b = elems.get(b, format!("order[{k}][1]"))?;
        leq[a * n + b] = true;
    }
    Ok(leq)
}

fn parse_poset_file(text: &str) -> Result<(PosetFile, MonoidalPoset), InputError> {
    let f: PosetFile = body(text)?;
    let elems = Labels::new("element", f.elements.iter().map(String::as_str), "elements")?;
    let leq = order_table(&f, &elems)?;
    let tensor = pair_table(&f.tensor, &elems, &elems, "tensor", &f.elements)?;
    let unit = elems.get(&f.unit, "unit")?;
    let p = MonoidalPoset::new(f.elements.clone(), leq, tensor, unit)?;
    Ok((f, p))
}

/// Reads a strict monoidal structure (`kind` `category`) or monoidal poset
/// (`kind` `poset`).
pub fn parse_structure(text: &str) -> Result<LoadedStructure, InputError> {
    let kind = header(text)?;
    if kind == "category" {
        let (f, structure) = parse_category_file(text)?;
        for (field, present) in [("alpha", f.alpha.is_some()), ("lambda", f.lambda.is_some()), ("rho", f.rho.is_some()), ("kappa", f.kappa.is_some())] {
            if present {
                return Err(schema(field, "constraint data belongs in a skew file"));
            }
        }
        Ok(LoadedStructure { name: f.name, structure })
    } else {
        let (f, p) = parse_poset_file(text)?;
        Ok(LoadedStructure { name: f.name, structure: poset_as_category(&p) })
    }
}

/// Reads skew data. Category files list every component of `alpha`,
/// `lambda` and `rho` and optionally `kappa`; poset files give only the
/// tensor and unit, and the components are the order witnesses.
pub fn parse_skew(text: &str) -> Result<LoadedSkew, InputError> {
    let kind = header(text)?;
    if kind == "poset" {
        let f: PosetFile = body(text)?;
        let elems = Labels::new("element", f.elements.iter().map(String::as_str), "elements")?;
        let leq = order_table(&f, &elems)?;
        let tensor = pair_table(&f.tensor, &elems, &elems, "tensor", &f.elements)?;
        let unit = elems.get(&f.unit, "unit")?;
        let data = SkewData::from_order(&f.elements, &leq, tensor, unit)?;
        return Ok(LoadedSkew { name: f.name, data });
    }
    let f: CategoryFile = body(text)?;
    let (base, objs, mors) = build_category(&f)?;
    let n = f.objects.len();
    let mor_names: Vec<String> = f.morphisms.iter().map(|m| m.label.clone()).collect();
    let obj_tensor = pair_table(&f.object_tensor, &objs, &objs, "object_tensor", &f.objects)?;
    let mor_tensor = pair_table(&f.morphism_tensor, &mors, &mors, "morphism_tensor", &mor_names)?;
    let unit = objs.get(&f.unit, "unit")?;

    let alpha_entries = f.alpha.as_ref().ok_or_else(|| schema("alpha", "missing"))?;
    let mut alpha = vec![None; n * n * n];
    for (k, e) in alpha_entries.iter().enumerate() {
        let mut idx = 0;
        for (p, o) in e.objects.iter().enumerate() {
            idx = idx * n + objs.get(o, format!("alpha[{k}].objects[{p}]"))?;
        }
        let m = mors.get(&e.morphism, format!("alpha[{k}].morphism"))?;
        if alpha[idx].replace(m).is_some() {
            return Err(schema(format!("alpha[{k}]"), "duplicate component"));
        }
    }
    let alpha = alpha
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or_else(|| {
                let (a, b, c) = (k / (n * n), k / n % n, k % n);
                schema("alpha", format!("missing component at ({}, {}, {})", f.objects[a], f.objects[b], f.objects[c]))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let unitors = |field: &'static str, entries: &Option<Vec<UnitorEntry>>| -> Result<Vec<usize>, InputError> {
        let entries = entries.as_ref().ok_or_else(|| schema(field, "missing"))?;
        let mut table = vec![None; n];
        for (k, e) in entries.iter().enumerate() {
            let a = objs.get(&e.object, format!("{field}[{k}].object"))?;
            let m = mors.get(&e.morphism, format!("{field}[{k}].morphism"))?;
            if table[a].replace(m).is_some() {
                return Err(schema(format!("{field}[{k}]"), "duplicate component"));
            }
        }
        table
            .into_iter()
            .enumerate()
            .map(|(a, v)| v.ok_or_else(|| schema(field, format!("missing component at {}", f.objects[a]))))
            .collect()
    };
    let lambda = unitors("lambda", &f.lambda)?;
    let rho = unitors("rho", &f.rho)?;
    let kappa = f.kappa.as_ref().map(|k| mors.get(k, "kappa")).transpose()?;
    let data = SkewData::new(base, SkewTables { obj_tensor, mor_tensor, unit, alpha, lambda, rho, kappa })?;
    Ok(LoadedSkew { name: f.name, data })
}

fn category_file(name: Option<&str>, c: &FinCategory, obj_tensor: &dyn Fn(usize, usize) -> usize, mor_tensor: &dyn Fn(usize, usize) -> usize, unit: usize) -> CategoryFile {
    let (n, m) = (c.object_count(), c.morphism_count());
    let ol = |a: usize| c.object_label(a).to_string();
    let ml = |f: usize| c.morphism_label(f).to_string();
    let mut compose = Vec::new();
    for g in 0..m {
        for f in 0..m {
            if let Some(h) = c.compose(g, f) {
                compose.push(ComposeEntry { after: ml(g), before: ml(f), result: ml(h) });
            }
        }
    }
    CategoryFile {
        schema_version: SCHEMA_VERSION,
        kind: "category".into(),
        name: name.map(str::to_string),
        objects: c.objects().to_vec(),
        morphisms: c.morphisms().iter().map(|x| MorphismEntry { label: x.label.clone(), src: ol(x.src), tgt: ol(x.tgt) }).collect(),
        identities: (0..n).map(|a| IdentityEntry { object: ol(a), morphism: ml(c.id(a)) }).collect(),
        compose,
        object_tensor: (0..n * n)
            .map(|k| TensorEntry { left: ol(k / n), right: ol(k % n), result: ol(obj_tensor(k / n, k % n)) })
            .collect(),
        morphism_tensor: (0..m * m)
            .map(|k| TensorEntry { left: ml(k / m), right: ml(k % m), result: ml(mor_tensor(k / m, k % m)) })
            .collect(),
        unit: ol(unit),
        alpha: None,
        lambda: None,
        rho: None,
        kappa: None,
    }
}

/// A structure as a `category` file.
pub fn structure_to_json(name: Option<&str>, s: &FinMonoidalStructure) -> String {
    let f = category_file(name, s.base(), &|a, b| s.tensor_obj(a, b), &|f, g| s.tensor_mor(f, g), s.unit());
    serde_json::to_string_pretty(&f).expect("serializable")
}

/// Skew data as a `category` file with every component listed.
pub fn skew_to_json(name: Option<&str>, d: &SkewData) -> String {
    let c = d.base();
    let n = c.object_count();
    let ol = |a: usize| c.object_label(a).to_string();
    let ml = |f: usize| c.morphism_label(f).to_string();
    let mut f = category_file(name, c, &|a, b| d.tensor_obj(a, b), &|f, g| d.tensor_mor(f, g), d.unit());
    f.alpha = Some(
        (0..n * n * n)
            .map(|k| {
                let (a, b, e) = (k / (n * n), k / n % n, k % n);
                AlphaEntry { objects: [ol(a), ol(b), ol(e)], morphism: ml(d.alpha(a, b, e)) }
            })
            .collect(),
    );
    f.lambda = Some((0..n).map(|a| UnitorEntry { object: ol(a), morphism: ml(d.lambda(a)) }).collect());
    f.rho = Some((0..n).map(|a| UnitorEntry { object: ol(a), morphism: ml(d.rho(a)) }).collect());
    f.kappa = d.tables().kappa.map(ml);
    serde_json::to_string_pretty(&f).expect("serializable")
}
