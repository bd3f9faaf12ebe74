//! The presentation of the Catalan simplicial set by binary relations.
//!
//! `K_n` is the set of relations `R` on `{0..n}` with
//! (i) `i R j` implies `i < j`, and
//! (ii) `i < j < k` and `i R k` imply `i R j` and `j R k`.
//! Faces restrict, degeneracies pull back along `σ_i`; a boundary of
//! dimension `n > 2` glues to a unique relation.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyck::{DyckWord, Letter};
use crate::sset::BoundaryTuple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("pair ({0}, {1}) violates i < j")]
    NotIncreasing(usize, usize),
    #[error("pair ({i}, {k}) present without ({i}, {j}) and ({j}, {k})")]
    NotConvex { i: usize, j: usize, k: usize },
    #[error("pair ({0}, {1}) lies outside the carrier {{0..{2}}}")]
    OutOfCarrier(usize, usize, usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("facets {i} and {j} disagree on their common face")]
    IncompatibleBoundary { i: usize, j: usize },
    #[error("boundary facets have mismatched dimensions")]
    MalformedBoundary,
    #[error("unique fillers are only guaranteed above dimension 2, got {0}")]
    DimensionTooLow(usize),
}

/// A simplex of `K_n`: a relation on `{0..n}` satisfying (i) and (ii).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeRelation {
    n: usize,
    pairs: BTreeSet<(usize, usize)>,
}

fn k_violation(pairs: &BTreeSet<(usize, usize)>, n: usize) -> Option<RelationError> {
    for &(i, j) in pairs {
        if i > n || j > n {
            return Some(RelationError::OutOfCarrier(i, j, n));
        }
        if i >= j {
            return Some(RelationError::NotIncreasing(i, j));
        }
    }
    for &(i, k) in pairs {
        for j in i + 1..k {
            if !pairs.contains(&(i, j)) || !pairs.contains(&(j, k)) {
                return Some(RelationError::NotConvex { i, j, k });
            }
        }
    }
    None
}

/// Whether `pairs` satisfies conditions (i) and (ii) on `{0..n}`.
pub fn is_k_relation(pairs: &BTreeSet<(usize, usize)>, n: usize) -> bool {
    k_violation(pairs, n).is_none()
}

impl EdgeRelation {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, RelationError> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        match k_violation(&pairs, n) {
            Some(e) => Err(e),
            None => Ok(Self { n, pairs }),
        }
    }

    pub fn empty(n: usize) -> Self {
        Self { n, pairs: BTreeSet::new() }
    }

    pub fn full(n: usize) -> Self {
        let pairs = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self { n, pairs }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    /// Restriction to `{0..n} \ {k}`, renumbered order-preservingly.
    pub fn face(&self, k: usize) -> Result<EdgeRelation, RelationError> {
        if self.n == 0 || k > self.n {
            return Err(RelationError::IndexOutOfRange { index: k, dim: self.n });
        }
        let squash = |v: usize| if v > k { v - 1 } else { v };
        let pairs = self
            .pairs
            .iter()
            .filter(|&&(i, j)| i != k && j != k)
            .map(|&(i, j)| (squash(i), squash(j)))
            .collect();
        Ok(EdgeRelation { n: self.n - 1, pairs })
    }

    /// Pullback along `σ_k : [n+1] → [n]`; the two vertices over `k` become related.
    pub fn degeneracy(&self, k: usize) -> Result<EdgeRelation, RelationError> {
        if k > self.n {
            return Err(RelationError::IndexOutOfRange { index: k, dim: self.n });
        }
        let sigma = |v: usize| if v <= k { v } else { v - 1 };
        let mut pairs = BTreeSet::new();
        for a in 0..=self.n + 1 {
            for b in a + 1..=self.n + 1 {
                let (x, y) = (sigma(a), sigma(b));
                if x == y || self.pairs.contains(&(x, y)) {
                    pairs.insert((a, b));
                }
            }
        }
        Ok(EdgeRelation { n: self.n + 1, pairs })
    }

    /// `(i, j)` with `i < j` is related iff the (j+1)-st `U` precedes the
    /// (i+1)-st `D`.
    pub fn from_dyck(word: &DyckWord) -> EdgeRelation {
        let n = word.dim();
        let (ups, downs) = word.positions();
        let pairs = (0..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| ups[j] < downs[i])
            .collect();
        EdgeRelation { n, pairs }
    }

    /// Inverse of [`EdgeRelation::from_dyck`]: with `r(i)` the largest `j`
    /// related to `i` (or `i` itself), emit for each `m` a `U` followed by
    /// the `D`s of every `i` with `r(i) = m`.
    pub fn to_dyck(&self) -> DyckWord {
        let reach: Vec<usize> = (0..=self.n)
            .map(|i| {
                self.pairs
                    .range((i, 0)..(i + 1, 0))
                    .map(|&(_, j)| j)
                    .max()
                    .unwrap_or(i)
                    .max(i)
            })
            .collect();
        let mut letters = Vec::with_capacity(2 * self.n + 2);
        for m in 0..=self.n {
            letters.push(Letter::U);
            letters.extend(reach.iter().filter(|&&r| r == m).map(|_| Letter::D));
        }
        DyckWord::new(letters).expect("K-relation encodes a Dyck word")
    }
}

impl fmt::Display for EdgeRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, (i, j)) in self.pairs.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "({i},{j})")?;
        }
        write!(f, "]")
    }
}

pub fn to_relation(word: &DyckWord) -> EdgeRelation {
    EdgeRelation::from_dyck(word)
}

pub fn from_relation(rel: &EdgeRelation) -> DyckWord {
    rel.to_dyck()
}

pub fn relation_face(rel: &EdgeRelation, k: usize) -> Result<EdgeRelation, RelationError> {
    rel.face(k)
}

/// All of `K_n`, built independently of Dyck words by deciding pairs in
/// order of increasing length: `(i, k)` may only join once every shorter
/// pair inside it has.
pub fn enumerate_k_relations(n: usize) -> Vec<EdgeRelation> {
    let mut order: Vec<(usize, usize)> = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    order.sort_by_key(|&(i, j)| (j - i, i));
    fn go(order: &[(usize, usize)], idx: usize, n: usize, cur: &mut BTreeSet<(usize, usize)>, out: &mut Vec<EdgeRelation>) {
        if idx == order.len() {
            out.push(EdgeRelation { n, pairs: cur.clone() });
            return;
        }
        go(order, idx + 1, n, cur, out);
        let (i, k) = order[idx];
        if (i + 1..k).all(|j| cur.contains(&(i, j)) && cur.contains(&(j, k))) {
            cur.insert((i, k));
            go(order, idx + 1, n, cur, out);
            cur.remove(&(i, k));
        }
    }
    let mut out = Vec::new();
    go(&order, 0, n, &mut BTreeSet::new(), &mut out);
    out.sort();
    out
}

/// Checks `d_j(x_i) = d_i(x_{j+1})` for all `0 <= i <= j < n`.
pub fn check_boundary(boundary: &BoundaryTuple<EdgeRelation>) -> Result<(), RelationError> {
    let n = boundary.dim();
    let facets = boundary.facets();
    if n == 0 || facets.iter().any(|x| x.dim() + 1 != n) {
        return Err(RelationError::MalformedBoundary);
    }
    // 0-simplices have no faces, so 1-boundaries carry no condition
    let upper = if n >= 2 { n } else { 0 };
    for i in 0..upper {
        for j in i..n {
            if facets[i].face(j)? != facets[j + 1].face(i)? {
                return Err(RelationError::IncompatibleBoundary { i, j: j + 1 });
            }
        }
    }
    Ok(())
}

/// Glues a compatible boundary of dimension `n >= 2` into the unique
/// relation on `{0..n}` that restricts to it, returning `None` when that
/// relation violates (ii) (possible only for `n = 2`).
pub fn glue(boundary: &BoundaryTuple<EdgeRelation>) -> Result<Option<EdgeRelation>, RelationError> {
    check_boundary(boundary)?;
    let n = boundary.dim();
    if n < 2 {
        // a 1-boundary says nothing about the pair (0, 1)
        return Err(RelationError::DimensionTooLow(n));
    }
    let mut pairs = BTreeSet::new();
    for a in 0..=n {
        for b in a + 1..=n {
            // any facet missing a vertex other than a, b sees the pair
            let l = (0..=n).find(|&l| l != a && l != b).expect("n >= 1 leaves a third vertex");
            let squash = |v: usize| if v > l { v - 1 } else { v };
            if boundary.facets()[l].contains(squash(a), squash(b)) {
                pairs.insert((a, b));
            }
        }
    }
    let rel = EdgeRelation { n, pairs };
    if k_violation(&rel.pairs, n).is_some() {
        return Ok(None);
    }
    Ok(Some(rel))
}

/// The unique filler of a compatible boundary of dimension `n > 2`.
pub fn filler(boundary: &BoundaryTuple<EdgeRelation>) -> Result<EdgeRelation, RelationError> {
    if boundary.dim() <= 2 {
        return Err(RelationError::DimensionTooLow(boundary.dim()));
    }
    let rel = glue(boundary)?.expect("every triple lies in some facet when n > 2");
    Ok(rel)
}
