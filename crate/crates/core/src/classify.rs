//! Simplicial maps from the Catalan simplicial set into a monoidal nerve,
//! and their correspondence with monoids.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{enumerate_monoids, FinMonoidalStructure, MonoidObject, MorId, ObjId};
use crate::dyck::DyckWord;
use crate::nerve::{monoidal_nerve, tetrahedron_commutes, MonoidalNerve, NerveError, TwoCell};
use crate::sset::{catalan_sset, search_maps, simplicial_maps, FaceIndex, MapSearch, SimplexId, SimplicialMap, SsetError, TruncatedSSet};

/// Truncation at which maps are enumerated; one above the 3-coskeletal
/// range of the nerve.
pub const CLASSIFY_DIM: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    Sset(#[from] SsetError),
    #[error("candidate ({carrier}, {mu}, {eta_prime}) satisfies the 3-simplex conditions but has {found} extensions")]
    Extension { carrier: String, mu: String, eta_prime: String, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub map: SimplicialMap,
    pub monoid: MonoidObject,
    pub eta_prime: MorId,
}

/// Whether each of the conditions `f(a), f(ℓ), f(r), f(k)` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeSimplexConditions {
    pub a: bool,
    pub l: bool,
    pub r: bool,
    pub k: bool,
}

impl ThreeSimplexConditions {
    pub fn all(&self) -> bool {
        self.a && self.l && self.r && self.k
    }
}

/// The simplices of the Catalan set that a map is determined by, and the
/// four non-degenerate 3-simplices.
struct Frame {
    sset: TruncatedSSet,
    c: SimplexId,
    t: SimplexId,
    i: SimplexId,
    s0c: SimplexId,
    s1c: SimplexId,
    // a, ℓ, r, k
    tetrahedra: [SimplexId; 4],
}

fn lookup(s: &TruncatedSSet, n: usize, word: &str) -> SimplexId {
    s.find(n, word).expect("word is a simplex of the Catalan set")
}

impl Frame {
    fn new() -> Self {
        let sset = catalan_sset(CLASSIFY_DIM);
        let c = lookup(&sset, 1, "UDUD");
        let t = lookup(&sset, 2, "UDUDUD");
        let i = lookup(&sset, 2, "UUDUDD");
        let s0c = sset.degeneracy(1, 0, c);
        let s1c = sset.degeneracy(1, 1, c);
        let index = FaceIndex::new(&sset, 3);
        let unique = |faces: [SimplexId; 4]| match index.get(&faces) {
            [x] => *x,
            other => panic!("expected one 3-simplex with faces {faces:?}, found {}", other.len()),
        };
        let tetrahedra = [
            unique([t, t, t, t]),
            unique([i, s1c, t, s1c]),
            unique([s0c, t, s0c, i]),
            unique([i, s1c, s0c, i]),
        ];
        Self { sset, c, t, i, s0c, s1c, tetrahedra }
    }

    /// Images in the nerve of the 2-simplices `t, i, s₀(c), s₁(c)` under the
    /// candidate `c ↦ A, t ↦ μ, i ↦ η′`.
    fn images(&self, m: &FinMonoidalStructure, a: ObjId, mu: MorId, eta_prime: MorId) -> Vec<(SimplexId, TwoCell)> {
        let unit = m.unit();
        let id_a = m.base().id(a);
        vec![
            (self.t, TwoCell { a12: a, a02: a, a01: a, mor: mu }),
            (self.i, TwoCell { a12: unit, a02: a, a01: unit, mor: eta_prime }),
            (self.s0c, TwoCell { a12: a, a02: a, a01: unit, mor: id_a }),
            (self.s1c, TwoCell { a12: unit, a02: a, a01: a, mor: id_a }),
        ]
    }

    fn conditions(&self, m: &FinMonoidalStructure, a: ObjId, mu: MorId, eta_prime: MorId) -> ThreeSimplexConditions {
        let images = self.images(m, a, mu, eta_prime);
        let image = |x: SimplexId| images.iter().find(|(y, _)| *y == x).map(|(_, cell)| *cell).unwrap();
        let holds = |tet: SimplexId| {
            let f = self.sset.face_tuple(3, tet);
            tetrahedron_commutes(m, [&image(f[0]), &image(f[1]), &image(f[2]), &image(f[3])])
        };
        let [ta, tl, tr, tk] = self.tetrahedra;
        ThreeSimplexConditions { a: holds(ta), l: holds(tl), r: holds(tr), k: holds(tk) }
    }
}

/// The named 3-simplices `a, ℓ, r, k` as Dyck words.
pub fn named_tetrahedra() -> Vec<(&'static str, DyckWord)> {
    let frame = Frame::new();
    ["a", "l", "r", "k"]
        .into_iter()
        .zip(frame.tetrahedra)
        .map(|(name, x)| (name, frame.sset.label(3, x).parse().unwrap()))
        .collect()
}

/// Candidate triples `(A, μ, η′)` ordered by labels of `A`, then `μ`, then
/// `η′`.
fn candidates(m: &FinMonoidalStructure) -> Vec<(ObjId, MorId, MorId)> {
    let c = m.base();
    let by_label = |ids: &[usize], label: &dyn Fn(usize) -> String| {
        let mut v = ids.to_vec();
        v.sort_by_key(|&x| label(x));
        v
    };
    let objects: Vec<ObjId> = (0..c.object_count()).collect();
    let mut out = Vec::new();
    for a in by_label(&objects, &|x| c.object_label(x).to_string()) {
        let unit_sq = m.tensor_obj(m.unit(), m.unit());
        for mu in by_label(c.hom(m.tensor_obj(a, a), a), &|f| c.morphism_label(f).to_string()) {
            for eta in by_label(c.hom(unit_sq, a), &|f| c.morphism_label(f).to_string()) {
                out.push((a, mu, eta));
            }
        }
    }
    out
}

/// The 3-simplex conditions for one candidate triple.
pub fn candidate_conditions(m: &FinMonoidalStructure, a: ObjId, mu: MorId, eta_prime: MorId) -> ThreeSimplexConditions {
    Frame::new().conditions(m, a, mu, eta_prime)
}

fn build(m: &FinMonoidalStructure) -> Result<(Frame, MonoidalNerve), ClassifyError> {
    Ok((Frame::new(), monoidal_nerve(m, CLASSIFY_DIM)?))
}

fn classify_with(frame: &Frame, nerve: &MonoidalNerve) -> Result<Vec<ClassificationRecord>, ClassifyError> {
    let m = nerve.structure();
    let c = m.base();
    let mut out = Vec::new();
    for (a, mu, eta_prime) in candidates(m) {
        if !frame.conditions(m, a, mu, eta_prime).all() {
            continue;
        }
        let cell = |t: &TwoCell| nerve.find_two_cell(t).expect("cell in nerve");
        let images = frame.images(m, a, mu, eta_prime);
        let pinned = vec![
            (1, frame.c, nerve.edge(a)),
            (2, frame.t, cell(&images[0].1)),
            (2, frame.i, cell(&images[1].1)),
        ];
        let mut maps = search_maps(&frame.sset, nerve.sset(), &MapSearch { pinned, injective: false });
        if maps.len() != 1 {
            return Err(ClassifyError::Extension {
                carrier: c.object_label(a).into(),
                mu: c.morphism_label(mu).into(),
                eta_prime: c.morphism_label(eta_prime).into(),
                found: maps.len(),
            });
        }
        let map = maps.pop().unwrap();
        out.push(ClassificationRecord { map, monoid: MonoidObject { carrier: a, mu, eta: eta_prime }, eta_prime });
    }
    Ok(out)
}

/// One record per candidate `(A, μ, η′)` passing the four 3-simplex
/// conditions, with its extension to a map on the 4-truncation.
pub fn classify_maps(m: &FinMonoidalStructure) -> Result<Vec<ClassificationRecord>, ClassifyError> {
    let (frame, nerve) = build(m)?;
    classify_with(&frame, &nerve)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSummary {
    pub records: usize,
    pub maps: usize,
    pub monoids: usize,
    pub agree: bool,
}

/// Compares the records with a direct enumeration of simplicial maps and
/// with the monoids of `m`.
pub fn classification_summary(m: &FinMonoidalStructure) -> Result<ClassificationSummary, ClassifyError> {
    let (frame, nerve) = build(m)?;
    let records = classify_with(&frame, &nerve)?;
    let maps = simplicial_maps(&frame.sset, nerve.sset(), 3)?;
    let monoids = enumerate_monoids(m);

    let record_maps: BTreeSet<&SimplicialMap> = records.iter().map(|r| &r.map).collect();
    let all_maps: BTreeSet<&SimplicialMap> = maps.iter().collect();
    let record_monoids: BTreeSet<MonoidObject> = records.iter().map(|r| r.monoid).collect();
    let all_monoids: BTreeSet<MonoidObject> = monoids.iter().copied().collect();
    let decoded: BTreeSet<MonoidObject> = maps
        .iter()
        .map(|f| {
            let t = nerve.two_cell(f.image(2, frame.t));
            let i = nerve.two_cell(f.image(2, frame.i));
            MonoidObject { carrier: f.image(1, frame.c), mu: t.mor, eta: i.mor }
        })
        .collect();
    let agree = records.len() == record_maps.len()
        && record_maps == all_maps
        && record_monoids == all_monoids
        && decoded == all_monoids
        && records.iter().all(|r| r.monoid.eta == r.eta_prime);
    Ok(ClassificationSummary { records: records.len(), maps: maps.len(), monoids: monoids.len(), agree })
}

pub fn verify_classification(m: &FinMonoidalStructure) -> Result<bool, ClassifyError> {
    Ok(classification_summary(m)?.agree)
}

/// Whether the `f(k)` condition holds for every candidate triple, monoid
/// or not.
pub fn check_fk_automatic(m: &FinMonoidalStructure) -> bool {
    let frame = Frame::new();
    candidates(m).into_iter().all(|(a, mu, eta)| frame.conditions(m, a, mu, eta).k)
}

/// Whether maps into the nerve are determined by the images of `c, t, i`.
pub fn maps_determined_by_generators(m: &FinMonoidalStructure) -> Result<bool, ClassifyError> {
    let (frame, nerve) = build(m)?;
    let maps = simplicial_maps(&frame.sset, nerve.sset(), 3)?;
    let keys: BTreeSet<(SimplexId, SimplexId, SimplexId)> =
        maps.iter().map(|f| (f.image(1, frame.c), f.image(2, frame.t), f.image(2, frame.i))).collect();
    Ok(keys.len() == maps.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{is_monoid, library};
    use crate::dyck::enumerate_nondegenerate;

    #[test]
    fn named_tetrahedra_are_the_nondegenerate_ones() {
        let named: BTreeSet<DyckWord> = named_tetrahedra().into_iter().map(|(_, w)| w).collect();
        let nd: BTreeSet<DyckWord> = enumerate_nondegenerate(3).into_iter().collect();
        assert_eq!(named, nd);
        assert_eq!(named.len(), 4);
    }

    #[test]
    fn record_counts() {
        let count = |m: &FinMonoidalStructure| classify_maps(m).unwrap().len();
        assert_eq!(count(&library::two_or()), 2);
        assert_eq!(count(&library::chain3_max()), 3);
        assert_eq!(count(&library::chain3_truncated_add()), 2);
        assert_eq!(count(&library::antichain2()), 1);
        assert_eq!(count(&library::one_z()), 1);
    }

    #[test]
    fn conditions_match_monoid_laws() {
        // f(a) is associativity, f(ℓ) and f(r) the unit laws
        for (name, m) in library::all() {
            for (a, mu, eta) in candidates(&m) {
                let cond = candidate_conditions(&m, a, mu, eta);
                assert_eq!(cond.all(), is_monoid(&m, a, mu, eta), "{name}");
            }
        }
    }

    #[test]
    fn three_way_agreement_on_library() {
        for (name, m) in library::all() {
            let summary = classification_summary(&m).unwrap();
            assert!(summary.agree, "{name}: {summary:?}");
            assert_eq!(summary.records, summary.maps);
            assert_eq!(summary.maps, summary.monoids);
        }
    }

    #[test]
    fn fk_is_automatic() {
        for (name, m) in library::all() {
            assert!(check_fk_automatic(&m), "{name}");
        }
    }

    #[test]
    fn generators_determine_maps() {
        for (name, m) in library::all() {
            assert!(maps_determined_by_generators(&m).unwrap(), "{name}");
        }
    }

    #[test]
    fn records_are_ordered_by_label() {
        let m = library::chain3_max();
        let carriers: Vec<&str> =
            classify_maps(&m).unwrap().iter().map(|r| m.base().object_label(r.monoid.carrier)).collect();
        assert_eq!(carriers, vec!["0", "1", "2"]);
    }
}
