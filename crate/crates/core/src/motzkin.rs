//! Motzkin words and their bijection with non-degenerate simplices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dyck::{DyckWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotzkinError {
    #[error("invalid letter {letter:?} at position {position}")]
    InvalidAlphabet { letter: char, position: usize },
    #[error("{0:?} does not reduce to a Dyck word")]
    Unbalanced(String),
    #[error("{0} is degenerate")]
    Degenerate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinLetter {
    C,
    D,
    U,
}

impl MotzkinLetter {
    pub fn to_char(self) -> char {
        match self {
            MotzkinLetter::U => 'U',
            MotzkinLetter::C => 'C',
            MotzkinLetter::D => 'D',
        }
    }
}

/// A word over `{U, C, D}` that becomes a (possibly empty) balanced word
/// once every `C` is struck out.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinWord {
    letters: Vec<MotzkinLetter>,
}

fn balanced(letters: &[MotzkinLetter]) -> bool {
    let mut height: i64 = 0;
    for &l in letters {
        match l {
            MotzkinLetter::U => height += 1,
            MotzkinLetter::D => height -= 1,
            MotzkinLetter::C => {}
        }
        if height < 0 {
            return false;
        }
    }
    height == 0
}

impl MotzkinWord {
    pub fn new(letters: Vec<MotzkinLetter>) -> Result<Self, MotzkinError> {
        if balanced(&letters) {
            Ok(Self { letters })
        } else {
            Err(MotzkinError::Unbalanced(letters.iter().map(|l| l.to_char()).collect()))
        }
    }

    pub fn letters(&self) -> &[MotzkinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn as_string(&self) -> String {
        self.letters.iter().map(|l| l.to_char()).collect()
    }

    /// The non-degenerate Dyck word
    /// `U^{a_1} D^{b_1} U^{a_2 - a_1} D^{b_2 - b_1} ... U^{n+1-a_k} D^{n+1-b_k}`,
    /// where the `a`s index the letters in `{D, C}` and the `b`s those in
    /// `{U, C}` (1-based).
    pub fn to_dyck(&self) -> DyckWord {
        let n = self.len();
        let pick = |keep: fn(MotzkinLetter) -> bool| -> Vec<usize> {
            self.letters
                .iter()
                .enumerate()
                .filter(|(_, &l)| keep(l))
                .map(|(i, _)| i + 1)
                .chain(std::iter::once(n + 1))
                .collect()
        };
        let a = pick(|l| l != MotzkinLetter::U);
        let b = pick(|l| l != MotzkinLetter::D);
        debug_assert_eq!(a.len(), b.len());
        let mut letters = Vec::with_capacity(2 * n + 2);
        let (mut prev_a, mut prev_b) = (0, 0);
        for (&ai, &bi) in a.iter().zip(&b) {
            letters.extend(std::iter::repeat_n(Letter::U, ai - prev_a));
            letters.extend(std::iter::repeat_n(Letter::D, bi - prev_b));
            prev_a = ai;
            prev_b = bi;
        }
        DyckWord::new(letters).expect("Motzkin image is a Dyck word")
    }

    /// Inverse of [`MotzkinWord::to_dyck`] on non-degenerate words.
    pub fn from_dyck(word: &DyckWord) -> Result<MotzkinWord, MotzkinError> {
        if word.is_degenerate() {
            return Err(MotzkinError::Degenerate(word.to_string()));
        }
        let (ups, downs) = word.positions();
        let letters = (0..word.dim())
            .map(|i| {
                if ups[i] + 1 == ups[i + 1] {
                    MotzkinLetter::U
                } else if downs[i] + 1 == downs[i + 1] {
                    MotzkinLetter::D
                } else {
                    MotzkinLetter::C
                }
            })
            .collect();
        Ok(MotzkinWord { letters })
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_string())
    }
}

impl FromStr for MotzkinWord {
    type Err = MotzkinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .enumerate()
            .map(|(position, letter)| match letter {
                'U' => Ok(MotzkinLetter::U),
                'C' => Ok(MotzkinLetter::C),
                'D' => Ok(MotzkinLetter::D),
                _ => Err(MotzkinError::InvalidAlphabet { letter, position }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        MotzkinWord::new(letters)
    }
}

impl Serialize for MotzkinWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.as_string())
    }
}

impl<'de> Deserialize<'de> for MotzkinWord {
    fn deserialize<De: serde::Deserializer<'de>>(deserializer: De) -> Result<Self, De::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn dyck_to_motzkin(word: &DyckWord) -> Result<MotzkinWord, MotzkinError> {
    MotzkinWord::from_dyck(word)
}

pub fn motzkin_to_dyck(word: &MotzkinWord) -> DyckWord {
    word.to_dyck()
}

/// All Motzkin words of length `n`, sorted (`C < D < U`).
pub fn enumerate_motzkin(n: usize) -> Vec<MotzkinWord> {
    fn go(n: usize, height: usize, cur: &mut Vec<MotzkinLetter>, out: &mut Vec<MotzkinWord>) {
        let left = n - cur.len();
        if left == 0 {
            if height == 0 {
                out.push(MotzkinWord { letters: cur.clone() });
            }
            return;
        }
        if height > left {
            return;
        }
        cur.push(MotzkinLetter::C);
        go(n, height, cur, out);
        cur.pop();
        if height > 0 {
            cur.push(MotzkinLetter::D);
            go(n, height - 1, cur, out);
            cur.pop();
        }
        cur.push(MotzkinLetter::U);
        go(n, height + 1, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyck::{enumerate_dyck, enumerate_nondegenerate};
    use crate::numbers::motzkin_number;

    fn m(s: &str) -> MotzkinWord {
        s.parse().unwrap()
    }

    fn d(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    /// Brute-force filter over all `3^n` strings.
    fn motzkin_oracle(n: usize) -> Vec<String> {
        let alphabet = ['C', 'D', 'U'];
        let mut out = Vec::new();
        for code in 0..3usize.pow(n as u32) {
            let mut c = code;
            let mut s = String::new();
            for _ in 0..n {
                s.push(alphabet[c % 3]);
                c /= 3;
            }
            let stripped: String = s.chars().filter(|&ch| ch != 'C').collect();
            let mut h = 0i32;
            let ok = stripped.chars().all(|ch| {
                h += if ch == 'U' { 1 } else { -1 };
                h >= 0
            }) && h == 0;
            if ok {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 0..=8 {
            let got: Vec<String> = enumerate_motzkin(n).iter().map(|w| w.to_string()).collect();
            assert_eq!(got, motzkin_oracle(n));
            assert_eq!(got.len() as u64, motzkin_number::<u64>(n));
        }
        let three: Vec<String> = enumerate_motzkin(3).iter().map(|w| w.to_string()).collect();
        assert_eq!(three, vec!["CCC", "CUD", "UCD", "UDC"]);
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(dyck_to_motzkin(&d("UD")).unwrap(), m(""));
        assert_eq!(dyck_to_motzkin(&d("UUDUDD")).unwrap(), m("UD"));
        assert_eq!(dyck_to_motzkin(&d("UDUDUD")).unwrap(), m("CC"));
        assert_eq!(motzkin_to_dyck(&m("UD")), d("UUDUDD"));
        assert_eq!(motzkin_to_dyck(&m("CC")), d("UDUDUD"));
        assert_eq!(motzkin_to_dyck(&m("")), d("UD"));
        assert!(matches!(dyck_to_motzkin(&d("UUDD")), Err(MotzkinError::Degenerate(_))));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("DU".parse::<MotzkinWord>(), Err(MotzkinError::Unbalanced(_))));
        assert!(matches!(
            "UXD".parse::<MotzkinWord>(),
            Err(MotzkinError::InvalidAlphabet { letter: 'X', position: 1 })
        ));
    }

    #[test]
    fn bijection_is_exhaustive() {
        for n in 0..=7 {
            let nd = enumerate_nondegenerate(n);
            assert_eq!(nd.len() as u64, motzkin_number::<u64>(n));
            for w in &nd {
                assert_eq!(&motzkin_to_dyck(&dyck_to_motzkin(w).unwrap()), w);
            }
            for mw in enumerate_motzkin(n) {
                let w = motzkin_to_dyck(&mw);
                assert!(!w.is_degenerate());
                assert_eq!(w.dim(), n);
                assert_eq!(dyck_to_motzkin(&w).unwrap(), mw);
            }
            // sanity: degenerate + non-degenerate partition the level
            let degenerate = enumerate_dyck(n).iter().filter(|w| w.is_degenerate()).count();
            assert_eq!(degenerate + nd.len(), enumerate_dyck(n).len());
        }
    }
}
