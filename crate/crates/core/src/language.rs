//! Subword-closed languages represented by their antichain of minimal
//! forbidden subwords.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{is_subsequence, Word, WordError};

#[derive(Debug, Error)]
pub enum LanguageError {
    #[error("malformed language document: {0}")]
    Malformed(String),
    #[error("invalid word {word:?} in field \"{field}\": {source}")]
    InvalidWord {
        field: &'static str,
        word: String,
        #[source]
        source: WordError,
    },
    #[error("language document has both \"forbidden\" and \"closure_of\"; give exactly one")]
    BothSources,
    #[error("language document has neither \"forbidden\" nor \"closure_of\"")]
    NoSource,
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Finite antichain under the subword order, kept in shortlex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ForbiddenAntichain(Vec<Word>);

impl ForbiddenAntichain {
    pub fn members(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the longest member, 0 when there are none.
    pub fn max_len(&self) -> usize {
        self.0.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn avoided_by(&self, w: &Word) -> bool {
        !self.0.iter().any(|f| is_subsequence(f, w))
    }
}

/// Minimal elements of `words` under `⊑`, deduplicated and shortlex-sorted.
pub fn canonicalize_antichain<I>(words: I) -> ForbiddenAntichain
where
    I: IntoIterator<Item = Word>,
{
    let sorted: BTreeSet<Word> = words.into_iter().collect();
    let mut kept: Vec<Word> = Vec::with_capacity(sorted.len());
    // Shortlex order visits every proper subword of `w` before `w` itself.
    for w in sorted {
        if !kept.iter().any(|k| is_subsequence(k, &w)) {
            kept.push(w);
        }
    }
    ForbiddenAntichain(kept)
}

/// Obstruction antichain of the downward closure of `generators`.
///
/// Every minimal obstruction `f` has all of its one-letter deletions inside the
/// closure, so `|f| - 1` is at most the longest generator length `M`. Searching
/// words of length `≤ M + 1` therefore finds all of them.
pub fn closure_to_antichain<'a, I>(generators: I) -> ForbiddenAntichain
where
    I: IntoIterator<Item = &'a Word>,
{
    let gens: Vec<&Word> = generators.into_iter().collect();
    let bound = gens.iter().map(|g| g.len()).max().unwrap_or(0) + 1;
    let in_closure = |w: &Word| gens.iter().any(|g| is_subsequence(w, g));
    let mut found = Vec::new();
    for len in 0..=bound {
        for w in Word::all_of_length(len) {
            if in_closure(&w) {
                continue;
            }
            let minimal = (1..=len).all(|drop| {
                let bits: Vec<u8> = w
                    .bits()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i + 1 != drop)
                    .map(|(_, &b)| b)
                    .collect();
                in_closure(&Word::from(bits))
            });
            if minimal {
                found.push(w);
            }
        }
    }
    canonicalize_antichain(found)
}

/// A subword-closed binary language `L = { w : no obstruction ⊑ w }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Language {
    name: String,
    obstructions: ForbiddenAntichain,
}

impl Language {
    pub fn new(name: impl Into<String>, obstructions: ForbiddenAntichain) -> Self {
        Language { name: name.into(), obstructions }
    }

    /// Convenience constructor; the words are canonicalized.
    pub fn avoiding(name: impl Into<String>, forbidden: &[&str]) -> Result<Self, WordError> {
        let words = forbidden.iter().map(|s| s.parse()).collect::<Result<Vec<Word>, _>>()?;
        Ok(Language::new(name, canonicalize_antichain(words)))
    }

    pub fn closure_of(name: impl Into<String>, generators: &[&str]) -> Result<Self, WordError> {
        let words = generators.iter().map(|s| s.parse()).collect::<Result<Vec<Word>, _>>()?;
        Ok(Language::new(name, closure_to_antichain(&words)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn obstructions(&self) -> &ForbiddenAntichain {
        &self.obstructions
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.obstructions.avoided_by(w)
    }

    /// `L = ∅`, i.e. the obstruction set is `{λ}`.
    pub fn is_empty_language(&self) -> bool {
        self.obstructions.members().first().is_some_and(Word::is_empty)
    }

    /// `L = E*`.
    pub fn is_full(&self) -> bool {
        self.obstructions.is_empty()
    }

    pub fn to_spec(&self) -> LanguageSpec {
        LanguageSpec {
            name: self.name.clone(),
            forbidden: Some(self.obstructions.members().iter().map(Word::to_string).collect()),
            closure_of: None,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = Avoid{{", self.name)?;
        for (i, w) in self.obstructions.members().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w:?}")?;
        }
        f.write_str("}")
    }
}

/// On-disk language document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanguageSpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_of: Option<Vec<String>>,
}

fn parse_words(field: &'static str, raw: &[String]) -> Result<Vec<Word>, LanguageError> {
    raw.iter()
        .map(|s| {
            s.parse().map_err(|source| LanguageError::InvalidWord {
                field,
                word: s.clone(),
                source,
            })
        })
        .collect()
}

pub fn parse_language_spec(text: &str) -> Result<Language, LanguageError> {
    let spec: LanguageSpec =
        serde_json::from_str(text).map_err(|e| LanguageError::Malformed(e.to_string()))?;
    match (&spec.forbidden, &spec.closure_of) {
        (Some(_), Some(_)) => Err(LanguageError::BothSources),
        (None, None) => Err(LanguageError::NoSource),
        (Some(f), None) => {
            let words = parse_words("forbidden", f)?;
            Ok(Language::new(spec.name, canonicalize_antichain(words)))
        }
        (None, Some(g)) => {
            let words = parse_words("closure_of", g)?;
            Ok(Language::new(spec.name, closure_to_antichain(&words)))
        }
    }
}

pub fn load_language(path: impl AsRef<Path>) -> Result<Language, LanguageError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LanguageError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_language_spec(&text)
}
