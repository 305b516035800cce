//! Binary words and the subword (subsequence) order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {letter:?} at offset {offset}: words use only '0' and '1'")]
    InvalidLetter { letter: char, offset: usize },
    #[error("letter value {0} is not a bit")]
    InvalidBit(u8),
}

/// A finite word over `{0,1}`. The empty word is `λ`.
///
/// Letters are addressed with 1-based positions in every public accessor that
/// takes a position, so `letter(1)` is the first letter.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bits(bits: Vec<u8>) -> Result<Self, WordError> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(WordError::InvalidBit(b));
        }
        Ok(Word(bits))
    }

    /// `a^len`
    pub fn repeat(bit: u8, len: usize) -> Self {
        debug_assert!(bit <= 1);
        Word(vec![bit; len])
    }

    /// Decodes the low `len` bits of `code`; the most significant of them is
    /// the first letter, so numeric order on codes is lexicographic order.
    pub fn from_code(code: u64, len: usize) -> Self {
        Word((0..len).map(|i| ((code >> (len - 1 - i)) & 1) as u8).collect())
    }

    /// Inverse of [`Word::from_code`]. Only meaningful for words of length ≤ 64.
    pub fn code(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    /// The letter at 1-based `position`.
    pub fn letter(&self, position: usize) -> u8 {
        self.0[position - 1]
    }

    pub fn count(&self, bit: u8) -> usize {
        self.0.iter().filter(|&&b| b == bit).count()
    }

    /// True when the word is `a^k` for a single letter `a` (including `λ`).
    pub fn is_uniform(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn concat(parts: &[&Word]) -> Word {
        Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn push(&mut self, bit: u8) {
        debug_assert!(bit <= 1);
        self.0.push(bit);
    }

    /// All `2^len` words of length `len` in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64, "word universe too large");
        (0..1u64 << len).map(move |c| Word::from_code(c, len))
    }
}

impl From<Vec<u8>> for Word {
    fn from(bits: Vec<u8>) -> Self {
        Word::from_bits(bits).expect("bits must be 0 or 1")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(offset, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                letter => Err(WordError::InvalidLetter { letter, offset }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("λ")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

/// Shortlex: shorter words first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `u ⊑ w`: `u` is obtained from `w` by deleting letters. Greedy leftmost
/// matching is exact for subsequence embedding.
pub fn is_subsequence(u: &Word, w: &Word) -> bool {
    if u.len() > w.len() {
        return false;
    }
    let mut needle = u.0.iter().peekable();
    for b in &w.0 {
        match needle.peek() {
            None => return true,
            Some(&&x) if x == *b => {
                needle.next();
            }
            _ => {}
        }
    }
    needle.peek().is_none()
}
