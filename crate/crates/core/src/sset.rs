//! Finite truncated simplicial sets with table-driven faces and degeneracies.
//!
//! Simplices are referred to by their index within a level; labels are
//! opaque strings, unique per level. The engine knows nothing about the
//! presentation a simplicial set came from.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyck::enumerate_dyck;

pub type SimplexId = usize;

pub const SSET_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SsetError {
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("duplicate label {label:?} in level {dim}")]
    DuplicateLabel { dim: usize, label: String },
    #[error("dimension {dim} exceeds the truncation {max_dim}")]
    BeyondTruncation { dim: usize, max_dim: usize },
    #[error("target is not {r}-coskeletal within its truncation")]
    NotCoskeletal { r: usize },
    #[error("source must be truncated at dimension >= {needed}, got {got}")]
    TruncationTooLow { needed: usize, got: usize },
    #[error("degenerate boundary in dimension {dim} was rejected by the level filter")]
    DegeneracyRejected { dim: usize },
    #[error("simplex budget of {limit} exceeded")]
    Budget { limit: usize },
    #[error("json: {0}")]
    Json(String),
}

/// A compatible tuple `(x_0, ..., x_n)` of `(n-1)`-simplices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryTuple<T> {
    facets: Vec<T>,
}

impl<T> BoundaryTuple<T> {
    pub fn new(facets: Vec<T>) -> Self {
        Self { facets }
    }

    /// Dimension of the simplex this would bound.
    pub fn dim(&self) -> usize {
        self.facets.len().saturating_sub(1)
    }

    pub fn facets(&self) -> &[T] {
        &self.facets
    }

    pub fn into_facets(self) -> Vec<T> {
        self.facets
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`
    FaceFace,
    /// `s_i s_j = s_{j+1} s_i` for `i <= j`
    DegeneracyDegeneracy,
    /// the three-case law for `d_i s_j`
    FaceDegeneracy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityViolation {
    pub identity: Identity,
    pub dim: usize,
    pub i: usize,
    pub j: usize,
    pub simplex: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSSet {
    levels: Vec<Vec<String>>,
    // faces[n][i][x] = d_i(x) for x in level n >= 1; faces[0] is empty
    faces: Vec<Vec<Vec<SimplexId>>>,
    // degeneracies[n][i][x] = s_i(x) for x in level n < max_dim
    degeneracies: Vec<Vec<Vec<SimplexId>>>,
    index: Vec<HashMap<String, SimplexId>>,
}

/// JSON form of a [`TruncatedSSet`]. `faces[n - 1][i]` is the table of
/// `d_i` on level `n`; `degeneracies[n][i]` the table of `s_i` on level `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSetDocument {
    pub schema_version: u32,
    pub max_dim: usize,
    pub levels: Vec<Vec<String>>,
    pub faces: Vec<Vec<Vec<SimplexId>>>,
    pub degeneracies: Vec<Vec<Vec<SimplexId>>>,
}

impl TruncatedSSet {
    /// Builds from explicit tables, validating shapes and ranges (not the
    /// simplicial identities; see [`check_simplicial_identities`]).
    pub fn from_parts(
        levels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<SimplexId>>>,
        degeneracies: Vec<Vec<Vec<SimplexId>>>,
    ) -> Result<Self, SsetError> {
        if levels.is_empty() {
            return Err(SsetError::Shape("no levels".into()));
        }
        let top = levels.len() - 1;
        if faces.len() != top + 1 || !faces[0].is_empty() {
            return Err(SsetError::Shape("face tables must cover levels 1..=max_dim".into()));
        }
        if degeneracies.len() != top {
            return Err(SsetError::Shape("degeneracy tables must cover levels 0..max_dim".into()));
        }
        for n in 1..=top {
            check_tables(&faces[n], n + 1, levels[n].len(), levels[n - 1].len(), "face", n)?;
        }
        for n in 0..top {
            check_tables(&degeneracies[n], n + 1, levels[n].len(), levels[n + 1].len(), "degeneracy", n)?;
        }
        let mut index = Vec::with_capacity(levels.len());
        for (dim, level) in levels.iter().enumerate() {
            let mut map = HashMap::with_capacity(level.len());
            for (x, label) in level.iter().enumerate() {
                if map.insert(label.clone(), x).is_some() {
                    return Err(SsetError::DuplicateLabel { dim, label: label.clone() });
                }
            }
            index.push(map);
        }
        Ok(Self { levels, faces, degeneracies, index })
    }

    /// One simplex in every dimension up to `max_dim`.
    pub fn point(max_dim: usize) -> Self {
        let levels = (0..=max_dim).map(|n| vec![format!("pt{n}")]).collect();
        let faces = (0..=max_dim).map(|n| if n == 0 { vec![] } else { vec![vec![0]; n + 1] }).collect();
        let degeneracies = (0..max_dim).map(|n| vec![vec![0]; n + 1]).collect();
        Self::from_parts(levels, faces, degeneracies).expect("point tables are well formed")
    }

    pub fn max_dim(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &[String] {
        &self.levels[n]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: SimplexId) -> &str {
        &self.levels[n][x]
    }

    pub fn find(&self, n: usize, label: &str) -> Option<SimplexId> {
        self.index.get(n)?.get(label).copied()
    }

    pub fn face(&self, n: usize, i: usize, x: SimplexId) -> SimplexId {
        self.faces[n][i][x]
    }

    pub fn degeneracy(&self, n: usize, i: usize, x: SimplexId) -> SimplexId {
        self.degeneracies[n][i][x]
    }

    /// All faces `(d_0 x, ..., d_n x)`.
    pub fn face_tuple(&self, n: usize, x: SimplexId) -> Vec<SimplexId> {
        (0..=n).map(|i| self.faces[n][i][x]).collect()
    }

    /// `x = s_j(d_j x)` for some `j`; the smallest such `j`.
    pub fn degeneracy_witness(&self, n: usize, x: SimplexId) -> Option<usize> {
        if n == 0 {
            return None;
        }
        (0..n).find(|&j| self.degeneracies[n - 1][j][self.faces[n][j][x]] == x)
    }

    pub fn is_degenerate(&self, n: usize, x: SimplexId) -> bool {
        self.degeneracy_witness(n, x).is_some()
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<SimplexId> {
        (0..self.levels[n].len()).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    pub fn truncate(&self, max_dim: usize) -> TruncatedSSet {
        let top = max_dim.min(self.max_dim());
        Self {
            levels: self.levels[..=top].to_vec(),
            faces: self.faces[..=top].to_vec(),
            degeneracies: self.degeneracies[..top].to_vec(),
            index: self.index[..=top].to_vec(),
        }
    }

    /// The face of `x` spanned by the sorted vertex set `vertices ⊆ [n]`.
    pub fn subface(&self, n: usize, x: SimplexId, vertices: &[usize]) -> SimplexId {
        let mut cur = x;
        let mut dim = n;
        // drop missing vertices from the top so lower indices stay valid
        for v in (0..=n).rev() {
            if vertices.binary_search(&v).is_err() {
                cur = self.faces[dim][v][cur];
                dim -= 1;
            }
        }
        cur
    }

    pub fn to_document(&self) -> SSetDocument {
        SSetDocument {
            schema_version: SSET_SCHEMA_VERSION,
            max_dim: self.max_dim(),
            levels: self.levels.clone(),
            faces: self.faces[1..].to_vec(),
            degeneracies: self.degeneracies.clone(),
        }
    }

    pub fn from_document(doc: SSetDocument) -> Result<Self, SsetError> {
        if doc.schema_version != SSET_SCHEMA_VERSION {
            return Err(SsetError::Shape(format!("unsupported schema_version {}", doc.schema_version)));
        }
        if doc.levels.len() != doc.max_dim + 1 {
            return Err(SsetError::Shape("max_dim does not match the number of levels".into()));
        }
        let mut faces = Vec::with_capacity(doc.faces.len() + 1);
        faces.push(Vec::new());
        faces.extend(doc.faces);
        Self::from_parts(doc.levels, faces, doc.degeneracies)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SsetError> {
        let doc: SSetDocument = serde_json::from_str(text).map_err(|e| SsetError::Json(e.to_string()))?;
        Self::from_document(doc)
    }
}

fn check_tables(
    tables: &[Vec<SimplexId>],
    count: usize,
    domain: usize,
    codomain: usize,
    what: &str,
    n: usize,
) -> Result<(), SsetError> {
    if tables.len() != count {
        return Err(SsetError::Shape(format!("level {n} needs {count} {what} tables, got {}", tables.len())));
    }
    for (i, t) in tables.iter().enumerate() {
        if t.len() != domain {
            return Err(SsetError::Shape(format!("{what} {i} on level {n} has {} entries, want {domain}", t.len())));
        }
        if let Some(&bad) = t.iter().find(|&&y| y >= codomain) {
            return Err(SsetError::Shape(format!("{what} {i} on level {n} points at missing simplex {bad}")));
        }
    }
    Ok(())
}

/// The Catalan simplicial set truncated at `max_dim`, labelled by Dyck words.
pub fn catalan_sset(max_dim: usize) -> TruncatedSSet {
    let words: Vec<_> = (0..=max_dim).map(enumerate_dyck).collect();
    let levels: Vec<Vec<String>> = words.iter().map(|l| l.iter().map(|w| w.to_string()).collect()).collect();
    let lookup: Vec<HashMap<&str, usize>> = levels
        .iter()
        .map(|l| l.iter().enumerate().map(|(x, s)| (s.as_str(), x)).collect())
        .collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=max_dim {
        let tables = (0..=n)
            .map(|i| words[n].iter().map(|w| lookup[n - 1][w.face(i).unwrap().to_string().as_str()]).collect())
            .collect();
        faces.push(tables);
    }
    let degeneracies = (0..max_dim)
        .map(|n| {
            (0..=n)
                .map(|i| words[n].iter().map(|w| lookup[n + 1][w.degeneracy(i).unwrap().to_string().as_str()]).collect())
                .collect()
        })
        .collect();
    TruncatedSSet::from_parts(levels, faces, degeneracies).expect("Dyck tables are well formed")
}

/// Every instance of a simplicial identity that fails within the truncation.
pub fn check_simplicial_identities(s: &TruncatedSSet) -> Vec<IdentityViolation> {
    let mut out = Vec::new();
    let top = s.max_dim();
    let mut report = |identity, dim, i, j, x: SimplexId| {
        out.push(IdentityViolation { identity, dim, i, j, simplex: s.label(dim, x).to_string() });
    };
    for n in 0..=top {
        for x in 0..s.level(n).len() {
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        let lhs = s.face(n - 1, i, s.face(n, j, x));
                        let rhs = s.face(n - 1, j - 1, s.face(n, i, x));
                        if lhs != rhs {
                            report(Identity::FaceFace, n, i, j, x);
                        }
                    }
                }
            }
            if n + 2 <= top {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = s.degeneracy(n + 1, i, s.degeneracy(n, j, x));
                        let rhs = s.degeneracy(n + 1, j + 1, s.degeneracy(n, i, x));
                        if lhs != rhs {
                            report(Identity::DegeneracyDegeneracy, n, i, j, x);
                        }
                    }
                }
            }
            if n < top {
                for j in 0..=n {
                    let sx = s.degeneracy(n, j, x);
                    for i in 0..=n + 1 {
                        let lhs = s.face(n + 1, i, sx);
                        let rhs = if i < j {
                            s.degeneracy(n - 1, j - 1, s.face(n, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            s.degeneracy(n - 1, j, s.face(n, i - 1, x))
                        };
                        if lhs != rhs {
                            report(Identity::FaceDegeneracy, n, i, j, x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Lookup from face tuples to the simplices of one level having them.
#[derive(Debug, Clone)]
pub struct FaceIndex {
    map: HashMap<Vec<SimplexId>, Vec<SimplexId>>,
}

impl FaceIndex {
    pub fn new(s: &TruncatedSSet, n: usize) -> Self {
        let mut map: HashMap<Vec<SimplexId>, Vec<SimplexId>> = HashMap::new();
        if n >= 1 {
            for x in 0..s.level(n).len() {
                map.entry(s.face_tuple(n, x)).or_default().push(x);
            }
        }
        Self { map }
    }

    pub fn get(&self, faces: &[SimplexId]) -> &[SimplexId] {
        self.map.get(faces).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Whether `(x_0, ..., x_n)` satisfies `d_j(x_i) = d_i(x_{j+1})`.
pub fn is_compatible(s: &TruncatedSSet, facets: &[SimplexId]) -> bool {
    let n = facets.len() - 1;
    if n < 2 {
        return true;
    }
    (0..n).all(|i| (i..n).all(|j| s.face(n - 1, j, facets[i]) == s.face(n - 1, i, facets[j + 1])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMethod {
    /// Facet-by-facet product with pruning on the compatibility equations.
    Naive,
    /// Search over labellings of the `r`-skeleton of `Δ[n]`, then look up
    /// facets by their `r`-skeleta.
    Skeleton(usize),
}

fn boundary_level_check(s: &TruncatedSSet, n: usize) -> Result<(), SsetError> {
    if n == 0 {
        return Err(SsetError::Shape("boundaries start in dimension 1".into()));
    }
    if n - 1 > s.max_dim() {
        return Err(SsetError::BeyondTruncation { dim: n - 1, max_dim: s.max_dim() });
    }
    Ok(())
}

/// All `n`-boundaries: naive product up to dimension 4, skeleton search
/// (triangles) above.
pub fn boundaries(s: &TruncatedSSet, n: usize) -> Result<Vec<BoundaryTuple<SimplexId>>, SsetError> {
    let method = if n <= 4 { BoundaryMethod::Naive } else { BoundaryMethod::Skeleton(2) };
    boundaries_with(s, n, method)
}

pub fn boundaries_with(
    s: &TruncatedSSet,
    n: usize,
    method: BoundaryMethod,
) -> Result<Vec<BoundaryTuple<SimplexId>>, SsetError> {
    boundary_level_check(s, n)?;
    let mut out = match method {
        BoundaryMethod::Naive => naive_boundaries(s, n),
        BoundaryMethod::Skeleton(r) => skeleton_boundaries(s, n, r.min(n - 1)),
    };
    out.sort();
    Ok(out)
}

fn naive_boundaries(s: &TruncatedSSet, n: usize) -> Vec<BoundaryTuple<SimplexId>> {
    fn go(s: &TruncatedSSet, n: usize, cur: &mut Vec<SimplexId>, out: &mut Vec<BoundaryTuple<SimplexId>>) {
        let k = cur.len();
        if k == n + 1 {
            out.push(BoundaryTuple::new(cur.clone()));
            return;
        }
        for y in 0..s.level(n - 1).len() {
            // constraints with j + 1 = k: d_{k-1}(x_i) = d_i(x_k) for i < k
            let ok = n < 2 || (0..k).all(|i| s.face(n - 1, k - 1, cur[i]) == s.face(n - 1, i, y));
            if ok {
                cur.push(y);
                go(s, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(s, n, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// Faces of `Δ[n]` of dimension `<= r`, as sorted vertex lists, ordered so
/// that every face comes after all of its own faces (reverse-lexicographic
/// on the reversed tuples).
fn skeleton_faces(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    for size in 1..=r + 1 {
        combinations(n + 1, size, &mut Vec::new(), 0, &mut faces);
    }
    faces.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    faces
}

fn combinations(n: usize, size: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for v in start..n {
        cur.push(v);
        combinations(n, size, cur, v + 1, out);
        cur.pop();
    }
}

/// The `r`-faces of `Δ[m]` in a fixed order; their labels form the
/// signature of an `m`-simplex.
fn signature_faces(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut faces = Vec::new();
    combinations(m + 1, r.min(m) + 1, &mut Vec::new(), 0, &mut faces);
    faces
}

pub(crate) fn signature(s: &TruncatedSSet, m: usize, x: SimplexId, r: usize) -> Vec<SimplexId> {
    signature_faces(m, r).iter().map(|f| s.subface(m, x, f)).collect()
}

fn skeleton_boundaries(s: &TruncatedSSet, n: usize, r: usize) -> Vec<BoundaryTuple<SimplexId>> {
    let faces = skeleton_faces(n, r);
    let position: HashMap<Vec<usize>, usize> = faces.iter().cloned().enumerate().map(|(p, f)| (f, p)).collect();
    // for each face, the positions of its codimension-one faces
    let sub: Vec<Vec<usize>> = faces
        .iter()
        .map(|f| {
            if f.len() == 1 {
                return Vec::new();
            }
            (0..f.len())
                .map(|i| {
                    let mut g = f.clone();
                    g.remove(i);
                    position[&g]
                })
                .collect()
        })
        .collect();
    let indices: Vec<FaceIndex> = (0..=r).map(|d| FaceIndex::new(s, d)).collect();

    let m = n - 1;
    let sig_faces = signature_faces(m, r);
    let mut by_signature: HashMap<Vec<SimplexId>, Vec<SimplexId>> = HashMap::new();
    for x in 0..s.level(m).len() {
        by_signature.entry(signature(s, m, x, r)).or_default().push(x);
    }
    // for facet l, the positions (in `faces`) of its signature faces
    let facet_positions: Vec<Vec<usize>> = (0..=n)
        .map(|l| {
            sig_faces
                .iter()
                .map(|g| {
                    let lifted: Vec<usize> = g.iter().map(|&v| if v >= l { v + 1 } else { v }).collect();
                    position[&lifted]
                })
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut labels = vec![0; faces.len()];
    label_search(s, &faces, &sub, &indices, 0, &mut labels, &mut |labels| {
        let mut choices: Vec<&[SimplexId]> = Vec::with_capacity(n + 1);
        for pos in &facet_positions {
            let sig: Vec<SimplexId> = pos.iter().map(|&p| labels[p]).collect();
            match by_signature.get(&sig) {
                Some(xs) => choices.push(xs),
                None => return,
            }
        }
        product(&choices, &mut Vec::with_capacity(n + 1), &mut |facets| {
            if is_compatible(s, facets) {
                out.push(BoundaryTuple::new(facets.to_vec()));
            }
        });
    });
    out
}

fn label_search(
    s: &TruncatedSSet,
    faces: &[Vec<usize>],
    sub: &[Vec<usize>],
    indices: &[FaceIndex],
    pos: usize,
    labels: &mut Vec<SimplexId>,
    emit: &mut dyn FnMut(&[SimplexId]),
) {
    if pos == faces.len() {
        emit(labels);
        return;
    }
    let d = faces[pos].len() - 1;
    if d == 0 {
        for x in 0..s.level(0).len() {
            labels[pos] = x;
            label_search(s, faces, sub, indices, pos + 1, labels, emit);
        }
    } else {
        let key: Vec<SimplexId> = sub[pos].iter().map(|&p| labels[p]).collect();
        for &x in indices[d].get(&key) {
            labels[pos] = x;
            label_search(s, faces, sub, indices, pos + 1, labels, emit);
        }
    }
}

fn product(choices: &[&[SimplexId]], cur: &mut Vec<SimplexId>, emit: &mut dyn FnMut(&[SimplexId])) {
    if cur.len() == choices.len() {
        emit(cur);
        return;
    }
    for &x in choices[cur.len()] {
        cur.push(x);
        product(choices, cur, emit);
        cur.pop();
    }
}

/// All `n`-simplices with the given faces.
pub fn fillers(s: &TruncatedSSet, boundary: &BoundaryTuple<SimplexId>) -> Result<Vec<SimplexId>, SsetError> {
    let n = boundary.dim();
    if n > s.max_dim() {
        return Err(SsetError::BeyondTruncation { dim: n, max_dim: s.max_dim() });
    }
    Ok(FaceIndex::new(s, n).get(boundary.facets()).to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoskeletalReport {
    pub holds: bool,
    /// boundaries examined per dimension `r+1..=max_dim`
    pub checked: Vec<(usize, usize)>,
    /// first boundary without exactly one filler, with its filler count
    pub counterexample: Option<(BoundaryTuple<SimplexId>, usize)>,
}

pub fn coskeletal_report(
    s: &TruncatedSSet,
    r: usize,
    max_dim: usize,
    method: Option<BoundaryMethod>,
) -> Result<CoskeletalReport, SsetError> {
    if max_dim > s.max_dim() {
        return Err(SsetError::BeyondTruncation { dim: max_dim, max_dim: s.max_dim() });
    }
    let mut checked = Vec::new();
    for n in r + 1..=max_dim {
        let bs = match method {
            Some(m) => boundaries_with(s, n, m)?,
            None => boundaries(s, n)?,
        };
        let index = FaceIndex::new(s, n);
        checked.push((n, bs.len()));
        for b in bs {
            let count = index.get(b.facets()).len();
            if count != 1 {
                return Ok(CoskeletalReport { holds: false, checked, counterexample: Some((b, count)) });
            }
        }
    }
    Ok(CoskeletalReport { holds: true, checked, counterexample: None })
}

/// Every boundary in dimensions `r < n <= max_dim` has exactly one filler.
pub fn is_r_coskeletal_up_to(s: &TruncatedSSet, r: usize, max_dim: usize) -> Result<bool, SsetError> {
    Ok(coskeletal_report(s, r, max_dim, None)?.holds)
}

/// Label of a simplex built from a boundary: the labels of its
/// `skeleton`-dimensional faces, in lexicographic order of vertex sets.
fn skeleton_label(s: &TruncatedSSet, facets: &[SimplexId], skeleton: usize) -> String {
    let n = facets.len() - 1;
    let parts: Vec<&str> = signature_faces(n, skeleton)
        .iter()
        .map(|f| {
            // some vertex is missing from f since skeleton < n
            let l = (0..=n).find(|v| f.binary_search(v).is_err()).unwrap();
            let g: Vec<usize> = f.iter().map(|&v| if v > l { v - 1 } else { v }).collect();
            let x = s.subface(n - 1, facets[l], &g);
            s.label(skeleton.min(n - 1), x)
        })
        .collect();
    format!("[{}]", parts.join("|"))
}

/// Adds level `max_dim + 1` consisting of the boundaries accepted by
/// `accept`; faces are the facets and degeneracies follow the simplicial
/// identities. Labels record the `skeleton`-faces of each new simplex.
pub fn extend_by_boundaries(
    s: &TruncatedSSet,
    skeleton: usize,
    budget: usize,
    accept: &mut dyn FnMut(&TruncatedSSet, &[SimplexId]) -> bool,
) -> Result<TruncatedSSet, SsetError> {
    let top = s.max_dim();
    let n = top + 1;
    let candidates = boundaries(s, n)?;
    let accepted: Vec<Vec<SimplexId>> = candidates
        .into_iter()
        .map(BoundaryTuple::into_facets)
        .filter(|f| accept(s, f))
        .collect();
    let total: usize = s.level_sizes().iter().sum::<usize>() + accepted.len();
    if total > budget {
        return Err(SsetError::Budget { limit: budget });
    }
    let lookup: HashMap<&[SimplexId], SimplexId> =
        accepted.iter().enumerate().map(|(x, f)| (f.as_slice(), x)).collect();

    let mut new_degeneracies = Vec::with_capacity(n);
    for j in 0..=top {
        let mut table = Vec::with_capacity(s.level(top).len());
        for y in 0..s.level(top).len() {
            let facets: Vec<SimplexId> = (0..=n)
                .map(|i| {
                    if i < j {
                        s.degeneracy(top - 1, j - 1, s.face(top, i, y))
                    } else if i == j || i == j + 1 {
                        y
                    } else {
                        s.degeneracy(top - 1, j, s.face(top, i - 1, y))
                    }
                })
                .collect();
            match lookup.get(facets.as_slice()) {
                Some(&x) => table.push(x),
                None => return Err(SsetError::DegeneracyRejected { dim: n }),
            }
        }
        new_degeneracies.push(table);
    }
    let face_tables: Vec<Vec<SimplexId>> =
        (0..=n).map(|i| accepted.iter().map(|f| f[i]).collect()).collect();
    let labels: Vec<String> = accepted.iter().map(|f| skeleton_label(s, f, skeleton)).collect();

    let mut levels = s.levels.clone();
    levels.push(labels);
    let mut faces = s.faces.clone();
    faces.push(face_tables);
    let mut degeneracies = s.degeneracies.clone();
    degeneracies.push(new_degeneracies);
    TruncatedSSet::from_parts(levels, faces, degeneracies)
}

pub const DEFAULT_SIMPLEX_BUDGET: usize = 1_000_000;

/// Extends `s` (viewed as an `r`-truncation, `r = s.max_dim()`) to its
/// `r`-coskeleton truncated at `max_dim`.
pub fn coskeletal_extension(s: &TruncatedSSet, max_dim: usize) -> Result<TruncatedSSet, SsetError> {
    coskeletal_extension_with_budget(s, max_dim, DEFAULT_SIMPLEX_BUDGET)
}

pub fn coskeletal_extension_with_budget(
    s: &TruncatedSSet,
    max_dim: usize,
    budget: usize,
) -> Result<TruncatedSSet, SsetError> {
    let skeleton = s.max_dim();
    let mut cur = s.clone();
    while cur.max_dim() < max_dim {
        cur = extend_by_boundaries(&cur, skeleton, budget, &mut |_, _| true)?;
    }
    Ok(cur)
}

/// A simplicial map given levelwise; `components[n][x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimplicialMap {
    pub components: Vec<Vec<SimplexId>>,
}

impl SimplicialMap {
    pub fn max_dim(&self) -> usize {
        self.components.len() - 1
    }

    pub fn image(&self, n: usize, x: SimplexId) -> SimplexId {
        self.components[n][x]
    }

    /// Commutes with every face and degeneracy of the common truncation.
    pub fn is_simplicial(&self, source: &TruncatedSSet, target: &TruncatedSSet) -> bool {
        let top = self.max_dim();
        if top > source.max_dim() || top > target.max_dim() {
            return false;
        }
        for n in 0..=top {
            if self.components[n].len() != source.level(n).len() {
                return false;
            }
            for x in 0..source.level(n).len() {
                let fx = self.components[n][x];
                if fx >= target.level(n).len() {
                    return false;
                }
                if n >= 1 && (0..=n).any(|i| target.face(n, i, fx) != self.components[n - 1][source.face(n, i, x)]) {
                    return false;
                }
                if n < top
                    && (0..=n).any(|j| target.degeneracy(n, j, fx) != self.components[n + 1][source.degeneracy(n, j, x)])
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Constraints on a map search.
#[derive(Debug, Clone, Default)]
pub struct MapSearch {
    /// `(dim, source simplex, target simplex)` images fixed in advance
    pub pinned: Vec<(usize, SimplexId, SimplexId)>,
    /// require every component to be injective
    pub injective: bool,
}

/// Backtracking search over simplicial maps `source -> target` truncated at
/// the smaller of the two truncations. Degenerate simplices have forced
/// images; non-degenerate ones range over target simplices with the right
/// faces.
pub fn search_maps(source: &TruncatedSSet, target: &TruncatedSSet, constraints: &MapSearch) -> Vec<SimplicialMap> {
    let top = source.max_dim().min(target.max_dim());
    let indices: Vec<FaceIndex> = (0..=top).map(|n| FaceIndex::new(target, n)).collect();
    let mut pinned: HashMap<(usize, SimplexId), SimplexId> = HashMap::new();
    for &(n, x, y) in &constraints.pinned {
        pinned.insert((n, x), y);
    }
    let steps: Vec<(usize, SimplexId)> =
        (0..=top).flat_map(|n| (0..source.level(n).len()).map(move |x| (n, x))).collect();
    let mut state = SearchState {
        source,
        target,
        indices,
        pinned,
        injective: constraints.injective,
        components: (0..=top).map(|n| vec![usize::MAX; source.level(n).len()]).collect(),
        used: (0..=top).map(|n| vec![false; target.level(n).len()]).collect(),
        out: Vec::new(),
    };
    state.go(&steps, 0);
    state.out.sort();
    state.out
}

struct SearchState<'a> {
    source: &'a TruncatedSSet,
    target: &'a TruncatedSSet,
    indices: Vec<FaceIndex>,
    pinned: HashMap<(usize, SimplexId), SimplexId>,
    injective: bool,
    components: Vec<Vec<SimplexId>>,
    used: Vec<Vec<bool>>,
    out: Vec<SimplicialMap>,
}

impl SearchState<'_> {
    fn candidates(&self, n: usize, x: SimplexId) -> Vec<SimplexId> {
        let (s, t) = (self.source, self.target);
        let mut cands: Vec<SimplexId> = if let Some(j) = s.degeneracy_witness(n, x) {
            let below = self.components[n - 1][s.face(n, j, x)];
            vec![t.degeneracy(n - 1, j, below)]
        } else if n == 0 {
            (0..t.level(0).len()).collect()
        } else {
            let key: Vec<SimplexId> = (0..=n).map(|i| self.components[n - 1][s.face(n, i, x)]).collect();
            self.indices[n].get(&key).to_vec()
        };
        if let Some(&y) = self.pinned.get(&(n, x)) {
            cands.retain(|&c| c == y);
        }
        cands.retain(|&y| {
            // faces (forced images still need checking) and every degeneracy
            // relation landing on x
            (n == 0 || (0..=n).all(|i| t.face(n, i, y) == self.components[n - 1][s.face(n, i, x)]))
                && (n == 0
                    || (0..n).all(|j| {
                        let d = s.face(n, j, x);
                        s.degeneracy(n - 1, j, d) != x || t.degeneracy(n - 1, j, self.components[n - 1][d]) == y
                    }))
        });
        cands
    }

    fn go(&mut self, steps: &[(usize, SimplexId)], k: usize) {
        if k == steps.len() {
            self.out.push(SimplicialMap { components: self.components.clone() });
            return;
        }
        let (n, x) = steps[k];
        for y in self.candidates(n, x) {
            if self.injective && self.used[n][y] {
                continue;
            }
            self.components[n][x] = y;
            self.used[n][y] = true;
            self.go(steps, k + 1);
            self.used[n][y] = false;
        }
        self.components[n][x] = usize::MAX;
    }
}

/// All levelwise-bijective simplicial maps.
pub fn isomorphisms(s: &TruncatedSSet, t: &TruncatedSSet) -> Vec<SimplicialMap> {
    if s.level_sizes() != t.level_sizes() {
        return Vec::new();
    }
    search_maps(s, t, &MapSearch { pinned: Vec::new(), injective: true })
}

/// All simplicial maps into a target that is `k`-coskeletal within its
/// truncation.
pub fn simplicial_maps(s: &TruncatedSSet, t: &TruncatedSSet, k: usize) -> Result<Vec<SimplicialMap>, SsetError> {
    if s.max_dim() < k + 1 {
        return Err(SsetError::TruncationTooLow { needed: k + 1, got: s.max_dim() });
    }
    if k < t.max_dim() && !is_r_coskeletal_up_to(t, k, t.max_dim())? {
        return Err(SsetError::NotCoskeletal { r: k });
    }
    Ok(search_maps(s, t, &MapSearch::default()))
}
