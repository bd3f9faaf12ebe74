//! Dyck-word presentation of the Catalan simplicial set.
//!
//! An `n`-simplex is a Dyck word with `n + 1` letters `U` and `n + 1` letters
//! `D` in which the k-th `U` precedes the k-th `D`. Face `d_i` deletes the
//! (i+1)-st `U` and (i+1)-st `D`; degeneracy `s_i` repeats them in place.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("invalid letter {letter:?} at position {position}")]
    InvalidAlphabet { letter: char, position: usize },
    #[error("{0:?} is not a Dyck word")]
    NotDyck(String),
    #[error("index {index} out of range for a simplex of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("a 0-simplex has no faces")]
    NoFace,
    #[error("invalid surjection: {0}")]
    InvalidSurjection(String),
}

// Variant order gives `D < U`, the ASCII order of the serialized words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Letter {
    D,
    U,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::U => 'U',
            Letter::D => 'D',
        }
    }
}

fn parse_letters(s: &str) -> Result<Vec<Letter>, DyckError> {
    s.chars()
        .enumerate()
        .map(|(position, letter)| match letter {
            'U' => Ok(Letter::U),
            'D' => Ok(Letter::D),
            _ => Err(DyckError::InvalidAlphabet { letter, position }),
        })
        .collect()
}

fn letters_are_dyck(letters: &[Letter]) -> bool {
    if letters.is_empty() || !letters.len().is_multiple_of(2) {
        return false;
    }
    // "k-th U precedes k-th D" for all k is the prefix condition on heights.
    let mut height: i64 = 0;
    for &l in letters {
        height += if l == Letter::U { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

/// Checks whether `word` is a (non-empty) Dyck word.
pub fn is_dyck(word: &str) -> Result<bool, DyckError> {
    Ok(letters_are_dyck(&parse_letters(word)?))
}

/// A simplex of the Catalan simplicial set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    letters: Vec<Letter>,
}

impl DyckWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, DyckError> {
        if letters_are_dyck(&letters) {
            Ok(Self { letters })
        } else {
            Err(DyckError::NotDyck(letters.iter().map(|l| l.to_char()).collect()))
        }
    }

    /// The unique 0-simplex `UD`.
    pub fn point() -> Self {
        Self { letters: vec![Letter::U, Letter::D] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn dim(&self) -> usize {
        self.letters.len() / 2 - 1
    }

    /// Positions of the `U`s and of the `D`s, in left-to-right order.
    pub fn positions(&self) -> (Vec<usize>, Vec<usize>) {
        let mut ups = Vec::with_capacity(self.dim() + 1);
        let mut downs = Vec::with_capacity(self.dim() + 1);
        for (p, &l) in self.letters.iter().enumerate() {
            match l {
                Letter::U => ups.push(p),
                Letter::D => downs.push(p),
            }
        }
        (ups, downs)
    }

    pub fn face(&self, i: usize) -> Result<DyckWord, DyckError> {
        let n = self.dim();
        if n == 0 {
            return Err(DyckError::NoFace);
        }
        if i > n {
            return Err(DyckError::IndexOutOfRange { index: i, dim: n });
        }
        let (ups, downs) = self.positions();
        let (u, d) = (ups[i], downs[i]);
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != u && p != d)
            .map(|(_, &l)| l)
            .collect();
        Ok(DyckWord { letters })
    }

    pub fn degeneracy(&self, i: usize) -> Result<DyckWord, DyckError> {
        let n = self.dim();
        if i > n {
            return Err(DyckError::IndexOutOfRange { index: i, dim: n });
        }
        let (ups, downs) = self.positions();
        let (u, d) = (ups[i], downs[i]);
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        for (p, &l) in self.letters.iter().enumerate() {
            letters.push(l);
            if p == u || p == d {
                letters.push(l);
            }
        }
        Ok(DyckWord { letters })
    }

    /// Smallest `i` with `self = s_i(y)` for some `y`, if any.
    pub fn degeneracy_witness(&self) -> Option<usize> {
        let (ups, downs) = self.positions();
        (0..self.dim()).find(|&i| ups[i] + 1 == ups[i + 1] && downs[i] + 1 == downs[i + 1])
    }

    pub fn is_degenerate(&self) -> bool {
        self.degeneracy_witness().is_some()
    }

    /// Eilenberg–Zilber decomposition: the unique surjection `φ` and
    /// non-degenerate `y` with `self = φ^*(y)`.
    pub fn ez_decompose(&self) -> (SurjectionPath, DyckWord) {
        let n = self.dim();
        let mut current = self.clone();
        // vertex p of the original simplex sits at image[p] of `current`
        let mut image: Vec<usize> = (0..=n).collect();
        while let Some(j) = current.degeneracy_witness() {
            current = current.face(j).expect("degenerate words have positive dimension");
            for v in image.iter_mut() {
                if *v > j {
                    *v -= 1;
                }
            }
        }
        let phi = SurjectionPath { source_dim: n, target_dim: current.dim(), image };
        (phi, current)
    }

    /// The action of a surjection on a simplex: letter `k` of `y` is repeated
    /// once per vertex in the fibre over `k`.
    pub fn degenerate_along(&self, phi: &SurjectionPath) -> Result<DyckWord, DyckError> {
        if phi.target_dim != self.dim() {
            return Err(DyckError::InvalidSurjection(format!(
                "target dimension {} does not match simplex dimension {}",
                phi.target_dim,
                self.dim()
            )));
        }
        let fibres = phi.fibre_sizes();
        let mut letters = Vec::with_capacity(2 * (phi.source_dim + 1));
        let (mut nu, mut nd) = (0, 0);
        for &l in &self.letters {
            let k = match l {
                Letter::U => {
                    nu += 1;
                    nu - 1
                }
                Letter::D => {
                    nd += 1;
                    nd - 1
                }
            };
            letters.extend(std::iter::repeat_n(l, fibres[k]));
        }
        Ok(DyckWord { letters })
    }

    pub fn as_string(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_string())
    }
}

impl FromStr for DyckWord {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckWord::new(parse_letters(s)?)
    }
}

impl Serialize for DyckWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.as_string())
    }
}

impl<'de> Deserialize<'de> for DyckWord {
    fn deserialize<De: serde::Deserializer<'de>>(deserializer: De) -> Result<Self, De::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An order-preserving surjection `[n] ↠ [k]`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurjectionPath {
    source_dim: usize,
    target_dim: usize,
    image: Vec<usize>,
}

impl SurjectionPath {
    pub fn new(image: Vec<usize>) -> Result<Self, DyckError> {
        if image.is_empty() || image[0] != 0 {
            return Err(DyckError::InvalidSurjection("image must start at 0".into()));
        }
        for w in image.windows(2) {
            if w[1] != w[0] && w[1] != w[0] + 1 {
                return Err(DyckError::InvalidSurjection(format!(
                    "consecutive values {} and {} are not monotone and gap-free",
                    w[0], w[1]
                )));
            }
        }
        let target_dim = *image.last().unwrap();
        Ok(Self { source_dim: image.len() - 1, target_dim, image })
    }

    pub fn identity(n: usize) -> Self {
        Self { source_dim: n, target_dim: n, image: (0..=n).collect() }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim
    }

    fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target_dim + 1];
        for &v in &self.image {
            sizes[v] += 1;
        }
        sizes
    }

    /// All order-preserving surjections `[n] ↠ [k]`.
    pub fn enumerate(n: usize, k: usize) -> Vec<SurjectionPath> {
        fn go(n: usize, k: usize, image: &mut Vec<usize>, out: &mut Vec<SurjectionPath>) {
            let last = *image.last().unwrap();
            if image.len() == n + 1 {
                if last == k {
                    out.push(SurjectionPath { source_dim: n, target_dim: k, image: image.clone() });
                }
                return;
            }
            let remaining = n + 1 - image.len();
            for next in [last, last + 1] {
                if next <= k && k - next < remaining {
                    image.push(next);
                    go(n, k, image, out);
                    image.pop();
                }
            }
        }
        let mut out = Vec::new();
        if k <= n {
            go(n, k, &mut vec![0], &mut out);
        }
        out
    }
}

/// All Dyck words of dimension `n` (length `2n + 2`), in lexicographic order
/// with `D < U`.
pub fn enumerate_dyck(n: usize) -> Vec<DyckWord> {
    fn go(len: usize, ups: usize, downs: usize, cur: &mut Vec<Letter>, out: &mut Vec<DyckWord>) {
        if cur.len() == len {
            out.push(DyckWord { letters: cur.clone() });
            return;
        }
        if downs < ups {
            cur.push(Letter::D);
            go(len, ups, downs + 1, cur, out);
            cur.pop();
        }
        if ups < len / 2 {
            cur.push(Letter::U);
            go(len, ups + 1, downs, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * n + 2, 0, 0, &mut Vec::with_capacity(2 * n + 2), &mut out);
    out
}

pub fn enumerate_nondegenerate(n: usize) -> Vec<DyckWord> {
    enumerate_dyck(n).into_iter().filter(|w| !w.is_degenerate()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn recognises_dyck_words() {
        assert_eq!(is_dyck("UUDD"), Ok(true));
        assert_eq!(is_dyck("UDDU"), Ok(false));
        assert_eq!(is_dyck("UUDDUD"), Ok(true));
        assert_eq!(is_dyck(""), Ok(false));
        assert_eq!(
            is_dyck("UXD"),
            Err(DyckError::InvalidAlphabet { letter: 'X', position: 1 })
        );
    }

    #[test]
    fn low_dimensional_census() {
        let show = |n| enumerate_dyck(n).iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(show(0), vec!["UD"]);
        assert_eq!(show(1), vec!["UDUD", "UUDD"]);
        let mut two = show(2);
        two.sort();
        let mut expected = vec!["UUUDDD", "UUDDUD", "UDUUDD", "UUDUDD", "UDUDUD"];
        expected.sort();
        assert_eq!(two, expected);
    }

    #[test]
    fn faces_match_labelled_diagrams() {
        assert_eq!(w("UDUDUD").face(0).unwrap(), w("UDUD"));
        assert_eq!(w("UUDUDD").face(1).unwrap(), w("UDUD"));
        assert_eq!(w("UUDDUD").face(2).unwrap(), w("UUDD"));
        assert_eq!(w("UD").face(0), Err(DyckError::NoFace));
        assert_eq!(
            w("UUDD").face(2),
            Err(DyckError::IndexOutOfRange { index: 2, dim: 1 })
        );
    }

    #[test]
    fn degeneracies_match_labelled_diagrams() {
        assert_eq!(w("UD").degeneracy(0).unwrap(), w("UUDD"));
        assert_eq!(w("UDUD").degeneracy(0).unwrap(), w("UUDDUD"));
        assert_eq!(w("UDUD").degeneracy(1).unwrap(), w("UDUUDD"));
        assert!(w("UDUD").degeneracy(2).is_err());
    }

    #[test]
    fn degeneracy_witnesses() {
        assert_eq!(w("UUDDUD").degeneracy_witness(), Some(0));
        assert_eq!(w("UDUDUD").degeneracy_witness(), None);
        assert_eq!(w("UUUDDD").degeneracy_witness(), Some(0));
        assert_eq!(w("UDUUDD").degeneracy_witness(), Some(1));
    }

    #[test]
    fn ez_examples() {
        let (phi, y) = w("UUDUDD").ez_decompose();
        assert!(phi.is_identity());
        assert_eq!(y, w("UUDUDD"));

        let (phi, y) = w("UUUDDD").ez_decompose();
        assert_eq!(phi.image(), &[0, 0, 0]);
        assert_eq!(y, w("UD"));

        let (phi, y) = w("UUDDUD").ez_decompose();
        assert_eq!(phi.image(), &[0, 0, 1]);
        assert_eq!(y, w("UDUD"));
    }

    #[test]
    fn surjection_validation() {
        assert!(SurjectionPath::new(vec![0, 0, 1]).is_ok());
        assert!(SurjectionPath::new(vec![0, 2]).is_err());
        assert!(SurjectionPath::new(vec![1, 1]).is_err());
        assert!(SurjectionPath::new(vec![0, 1, 0]).is_err());
        assert_eq!(SurjectionPath::enumerate(3, 1).len(), 3);
        assert_eq!(SurjectionPath::enumerate(2, 3).len(), 0);
    }

    #[test]
    fn ez_against_brute_force_oracle() {
        // Oracle: apply the degeneracy chain of every surjection to every
        // non-degenerate lower word, and require a unique match.
        for n in 0..=6 {
            for word in enumerate_dyck(n) {
                let mut matches = Vec::new();
                for k in 0..=n {
                    for y in enumerate_nondegenerate(k) {
                        for phi in SurjectionPath::enumerate(n, k) {
                            let mut cur = y.clone();
                            // s_p for each collapsed adjacent pair, increasing p
                            for p in 0..n {
                                if phi.image()[p] == phi.image()[p + 1] {
                                    cur = cur.degeneracy(p).unwrap();
                                }
                            }
                            if cur == word {
                                matches.push((phi.clone(), y.clone()));
                            }
                        }
                    }
                }
                assert_eq!(matches.len(), 1, "{word}");
                assert_eq!(word.ez_decompose(), matches.pop().unwrap(), "{word}");
            }
        }
    }
}
