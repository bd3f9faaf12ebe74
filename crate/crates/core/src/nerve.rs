//! The nerve of a strict monoidal category as a truncated simplicial set.
//!
//! One vertex; edges are objects; a 2-simplex is a morphism
//! `f : A12 ⊗ A01 → A02` together with its three edges; 3-simplices are the
//! commuting tetrahedra; higher levels are forced by 3-coskeletality.

use std::collections::HashMap;

use thiserror::Error;

use crate::category::{validate_strict_monoidal, FinMonoidalStructure, MorId, ObjId, Violation};
use crate::sset::{extend_by_boundaries, SimplexId, SsetError, TruncatedSSet, DEFAULT_SIMPLEX_BUDGET};

/// Largest truncation [`monoidal_nerve`] builds.
pub const MAX_NERVE_DIM: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("not a strict monoidal category: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    NotStrictMonoidal(Vec<Violation>),
    #[error("nerve truncation {0} exceeds the limit of {MAX_NERVE_DIM}")]
    TooDeep(usize),
    #[error(transparent)]
    Sset(#[from] SsetError),
}

/// A 2-simplex: `mor : a12 ⊗ a01 → a02`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoCell {
    pub a12: ObjId,
    pub a02: ObjId,
    pub a01: ObjId,
    pub mor: MorId,
}

#[derive(Debug, Clone)]
pub struct MonoidalNerve {
    structure: FinMonoidalStructure,
    sset: TruncatedSSet,
    cells: Vec<TwoCell>,
    cell_index: HashMap<TwoCell, SimplexId>,
}

impl MonoidalNerve {
    pub fn sset(&self) -> &TruncatedSSet {
        &self.sset
    }

    pub fn structure(&self) -> &FinMonoidalStructure {
        &self.structure
    }

    pub fn two_cell(&self, x: SimplexId) -> TwoCell {
        self.cells[x]
    }

    pub fn two_cells(&self) -> &[TwoCell] {
        &self.cells
    }

    pub fn find_two_cell(&self, cell: &TwoCell) -> Option<SimplexId> {
        self.cell_index.get(cell).copied()
    }

    /// Edges are indexed by object id.
    pub fn edge(&self, a: ObjId) -> SimplexId {
        a
    }
}

/// Whether the tetrahedron with faces `(A123, A023, A013, A012)` commutes:
/// `A013 ∘ (A123 ⊗ 1) = A023 ∘ (1 ⊗ A012)`.
pub fn tetrahedron_commutes(m: &FinMonoidalStructure, faces: [&TwoCell; 4]) -> bool {
    let c = m.base();
    let [x0, x1, x2, x3] = faces;
    let glued = x0.a12 == x1.a12 && x0.a02 == x2.a12 && x0.a01 == x3.a12 && x1.a02 == x2.a02 && x1.a01 == x3.a02
        && x2.a01 == x3.a01;
    if !glued {
        return false;
    }
    let left = c.compose(x2.mor, m.tensor_mor(x0.mor, c.id(x3.a01)));
    let right = c.compose(x1.mor, m.tensor_mor(c.id(x0.a12), x3.mor));
    left.is_some() && left == right
}

fn cell_label(m: &FinMonoidalStructure, cell: &TwoCell) -> String {
    let c = m.base();
    format!(
        "{}:{}*{}->{}",
        c.morphism_label(cell.mor),
        c.object_label(cell.a12),
        c.object_label(cell.a01),
        c.object_label(cell.a02)
    )
}

pub fn monoidal_nerve(m: &FinMonoidalStructure, max_dim: usize) -> Result<MonoidalNerve, NerveError> {
    monoidal_nerve_with_budget(m, max_dim, DEFAULT_SIMPLEX_BUDGET)
}

pub fn monoidal_nerve_with_budget(
    m: &FinMonoidalStructure,
    max_dim: usize,
    budget: usize,
) -> Result<MonoidalNerve, NerveError> {
    if max_dim > MAX_NERVE_DIM {
        return Err(NerveError::TooDeep(max_dim));
    }
    let violations = validate_strict_monoidal(m);
    if !violations.is_empty() {
        return Err(NerveError::NotStrictMonoidal(violations));
    }
    let c = m.base();
    let n = c.object_count();
    let unit = m.unit();

    let mut cells = Vec::new();
    for a12 in 0..n {
        for a01 in 0..n {
            for a02 in 0..n {
                for &mor in c.hom(m.tensor_obj(a12, a01), a02) {
                    cells.push(TwoCell { a12, a02, a01, mor });
                }
            }
        }
    }
    let cell_index: HashMap<TwoCell, SimplexId> = cells.iter().enumerate().map(|(x, &t)| (t, x)).collect();

    let top = max_dim.min(2);
    let mut levels = vec![vec!["*".to_string()]];
    let mut faces: Vec<Vec<Vec<SimplexId>>> = vec![vec![]];
    let mut degeneracies = vec![];
    if top >= 1 {
        levels.push(c.objects().to_vec());
        faces.push(vec![vec![0; n], vec![0; n]]);
        degeneracies.push(vec![vec![unit]]);
    }
    if top >= 2 {
        levels.push(cells.iter().map(|t| cell_label(m, t)).collect());
        faces.push(vec![
            cells.iter().map(|t| t.a12).collect(),
            cells.iter().map(|t| t.a02).collect(),
            cells.iter().map(|t| t.a01).collect(),
        ]);
        let s0 = (0..n).map(|a| cell_index[&TwoCell { a12: a, a02: a, a01: unit, mor: c.id(a) }]).collect();
        let s1 = (0..n).map(|a| cell_index[&TwoCell { a12: unit, a02: a, a01: a, mor: c.id(a) }]).collect();
        degeneracies.push(vec![s0, s1]);
    }
    let mut sset = TruncatedSSet::from_parts(levels, faces, degeneracies)?;
    if max_dim >= 3 {
        sset = extend_by_boundaries(&sset, 2, budget, &mut |_, f| {
            tetrahedron_commutes(m, [&cells[f[0]], &cells[f[1]], &cells[f[2]], &cells[f[3]]])
        })?;
    }
    while sset.max_dim() < max_dim {
        sset = extend_by_boundaries(&sset, 3, budget, &mut |_, _| true)?;
    }
    Ok(MonoidalNerve { structure: m.clone(), sset, cells, cell_index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::library;
    use crate::category::FinMonoidalStructure;
    use crate::sset::{check_simplicial_identities, coskeletal_report};

    /// Counts commuting tetrahedra straight from the tables, over all six
    /// edges and four morphisms.
    fn tetrahedra_oracle(m: &FinMonoidalStructure) -> usize {
        let c = m.base();
        let n = c.object_count();
        let mut count = 0;
        for code in 0..n.pow(6) {
            let e: Vec<usize> = (0..6).map(|k| code / n.pow(k) % n).collect();
            let (a01, a02, a03, a12, a13, a23) = (e[0], e[1], e[2], e[3], e[4], e[5]);
            for &f in c.hom(m.tensor_obj(a23, a12), a13) {
                for &g in c.hom(m.tensor_obj(a23, a02), a03) {
                    for &h in c.hom(m.tensor_obj(a13, a01), a03) {
                        for &k in c.hom(m.tensor_obj(a12, a01), a02) {
                            let lhs = c.compose(h, m.tensor_mor(f, c.id(a01)));
                            let rhs = c.compose(g, m.tensor_mor(c.id(a23), k));
                            if lhs == rhs {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
        count
    }

    #[test]
    fn level_sizes_match_table_counts() {
        for (name, m) in library::all() {
            let nerve = monoidal_nerve(&m, 3).unwrap();
            let c = m.base();
            let n = c.object_count();
            let mut two = 0;
            for a in 0..n {
                for b in 0..n {
                    for d in 0..n {
                        two += c.hom(m.tensor_obj(a, b), d).len();
                    }
                }
            }
            assert_eq!(nerve.sset().level_sizes(), vec![1, n, two, tetrahedra_oracle(&m)], "{name}");
        }
    }

    #[test]
    fn one_z_counts() {
        let nerve = monoidal_nerve(&library::one_z(), 3).unwrap();
        // h·f = g·k in {1, z}: 1 + 3 * 3
        assert_eq!(nerve.sset().level_sizes(), vec![1, 1, 2, 10]);
    }

    #[test]
    fn nerves_are_simplicial_and_3_coskeletal() {
        for (name, m) in library::all() {
            let nerve = monoidal_nerve(&m, 5).unwrap();
            assert!(check_simplicial_identities(nerve.sset()).is_empty(), "{name}");
            let report = coskeletal_report(nerve.sset(), 3, 5, None).unwrap();
            assert!(report.holds, "{name}");
        }
    }

    #[test]
    fn degenerate_edges_are_identities() {
        let m = library::two_or();
        let nerve = monoidal_nerve(&m, 2).unwrap();
        let s = nerve.sset();
        assert_eq!(s.degeneracy(0, 0, 0), m.unit());
        for a in 0..2 {
            let s0 = nerve.two_cell(s.degeneracy(1, 0, a));
            assert_eq!((s0.a12, s0.a02, s0.a01, s0.mor), (a, a, m.unit(), m.base().id(a)));
            let s1 = nerve.two_cell(s.degeneracy(1, 1, a));
            assert_eq!((s1.a12, s1.a02, s1.a01, s1.mor), (m.unit(), a, a, m.base().id(a)));
        }
    }

    #[test]
    fn limits_and_validation() {
        assert!(matches!(monoidal_nerve(&library::one_z(), 7), Err(NerveError::TooDeep(7))));
        let good = library::one_z();
        let bad = FinMonoidalStructure::new(good.base().clone(), vec![0], vec![0, 1, 0, 1], 0).unwrap();
        assert!(matches!(monoidal_nerve(&bad, 3), Err(NerveError::NotStrictMonoidal(_))));
        assert!(matches!(
            monoidal_nerve_with_budget(&library::chain3_max(), 4, 10),
            Err(NerveError::Sset(SsetError::Budget { .. }))
        ));
    }

    #[test]
    fn low_truncations() {
        let m = library::one_z();
        assert_eq!(monoidal_nerve(&m, 0).unwrap().sset().level_sizes(), vec![1]);
        assert_eq!(monoidal_nerve(&m, 1).unwrap().sset().level_sizes(), vec![1, 1]);
    }
}
