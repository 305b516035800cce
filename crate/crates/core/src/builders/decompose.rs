use serde::Serialize;

use super::BuildError;
use crate::dimensions::hom;
use crate::language::Language;
use crate::word::Word;

/// A word written as `w1 · a^i · w2 · ā^j · w3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub w1: Word,
    pub a: u8,
    pub i: usize,
    pub w2: Word,
    pub j: usize,
    pub w3: Word,
}

impl Decomposition {
    pub fn word(&self) -> Word {
        let run_a = Word::repeat(self.a, self.i);
        let run_b = Word::repeat(1 - self.a, self.j);
        Word::concat(&[&self.w1, &run_a, &self.w2, &run_b, &self.w3])
    }

    /// Longest of the three free parts.
    pub fn width(&self) -> usize {
        self.w1.len().max(self.w2.len()).max(self.w3.len())
    }
}

/// Splits a member of `language` into two long runs of opposite letters
/// separated by short words, each free part at most `2·hom` letters long.
///
/// Among valid splits the one with the smallest total free length wins; ties
/// go to letter 0 first, then to shorter `w1`, then to shorter `w3`.
pub fn decompose(language: &Language, w: &Word) -> Result<Decomposition, BuildError> {
    let h = hom(language).finite().ok_or(BuildError::HomInfinite)? as usize;
    if !language.contains(w) {
        return Err(BuildError::NotInLanguage(w.clone()));
    }
    let limit = 2 * h;
    let bits = w.bits();
    let n = bits.len();
    let mut best: Option<(usize, Decomposition)> = None;
    for a in 0..2u8 {
        for p1 in 0..=limit.min(n) {
            for p3 in 0..=limit.min(n - p1) {
                let middle = &bits[p1..n - p3];
                let i = middle.iter().take_while(|&&b| b == a).count();
                let j = middle[i..].iter().rev().take_while(|&&b| b == 1 - a).count();
                let w2_len = middle.len() - i - j;
                if w2_len > limit {
                    continue;
                }
                let total = p1 + w2_len + p3;
                if best.as_ref().is_some_and(|(t, _)| *t <= total) {
                    continue;
                }
                let d = Decomposition {
                    w1: Word::from(bits[..p1].to_vec()),
                    a,
                    i,
                    w2: Word::from(middle[i..i + w2_len].to_vec()),
                    j,
                    w3: Word::from(bits[n - p3..].to_vec()),
                };
                best = Some((total, d));
            }
        }
    }
    // Unreachable for members when the homogeneity dimension is finite.
    best.map(|(_, d)| d).ok_or(BuildError::NotInLanguage(w.clone()))
}
