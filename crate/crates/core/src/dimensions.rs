//! Homogeneity and heterogeneity dimensions and the five-way classification
//! of binary subword-closed languages.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::language::Language;
use crate::word::Word;

/// A natural number or `∞`. Variant order makes `Infinity` the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedNat {
    Finite(u64),
    Infinity,
}

impl ExtendedNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedNat::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedNat::Finite(v) => Some(v),
            ExtendedNat::Infinity => None,
        }
    }
}

impl fmt::Display for ExtendedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedNat::Finite(v) => write!(f, "{v}"),
            ExtendedNat::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedNat::Finite(v) => s.serialize_u64(*v),
            ExtendedNat::Infinity => s.serialize_str("inf"),
        }
    }
}

fn sandwich(a: u8, m: usize) -> Word {
    let mut bits = vec![a; m];
    bits.push(1 - a);
    bits.extend(std::iter::repeat_n(a, m));
    Word::from(bits)
}

fn step_word(a: u8, m: usize) -> Word {
    let mut bits = vec![a; m];
    bits.extend(std::iter::repeat_n(1 - a, m));
    Word::from(bits)
}

/// Largest `m` with `family(a, m) ∈ L` for some letter `a`, or `∞`.
///
/// An obstruction that embeds into `family(a, m)` for some `m` already embeds
/// at `m = M`, the longest obstruction length, so membership at `M` decides
/// unboundedness. Languages where no `m` qualifies get 0.
fn dimension(language: &Language, family: fn(u8, usize) -> Word) -> ExtendedNat {
    let bound = language.obstructions().max_len();
    if (0..2).any(|a| language.contains(&family(a, bound))) {
        return ExtendedNat::Infinity;
    }
    (0..bound)
        .rev()
        .find(|&m| (0..2).any(|a| language.contains(&family(a, m))))
        .map_or(ExtendedNat::Finite(0), |m| ExtendedNat::Finite(m as u64))
}

/// `Hom(L)`: largest `m` with `a^m ā a^m ∈ L`.
pub fn hom(language: &Language) -> ExtendedNat {
    dimension(language, sandwich)
}

/// `Het(L)`: largest `m` with `a^m ā^m ∈ L`.
pub fn het(language: &Language) -> ExtendedNat {
    dimension(language, step_word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FinitenessFlags {
    pub is_finite_language: bool,
    pub complement_empty: bool,
    /// Length of a shortest word outside `L`; always the length of a shortest
    /// obstruction.
    pub shortest_complement_word_length: Option<usize>,
}

pub fn finiteness_flags(language: &Language) -> FinitenessFlags {
    let members = language.obstructions().members();
    // L is infinite iff some a^* avoids every obstruction.
    let infinite = (0..2u8).any(|a| !members.iter().any(|f| f.count(1 - a) == 0));
    FinitenessFlags {
        is_finite_language: !infinite,
        complement_empty: members.is_empty(),
        shortest_complement_word_length: members.iter().map(Word::len).min(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Growth {
    Constant,
    Log,
    Linear,
}

impl fmt::Display for Growth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Growth::Constant => "CONSTANT",
            Growth::Log => "LOG",
            Growth::Linear => "LINEAR",
        })
    }
}

/// Predicted growth of the four minimum-depth functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predictions {
    pub rd: Growth,
    pub ra: Growth,
    pub md: Growth,
    pub ma: Growth,
}

impl Predictions {
    pub fn for_class(class: LanguageClass) -> Self {
        use Growth::*;
        let (rd, ra, md, ma) = match class {
            LanguageClass::C1 => (Linear, Linear, Linear, Linear),
            LanguageClass::C2 => (Linear, Linear, Constant, Constant),
            LanguageClass::C3 => (Log, Constant, Linear, Linear),
            LanguageClass::C4 => (Constant, Constant, Linear, Linear),
            LanguageClass::C5 => (Constant, Constant, Constant, Constant),
        };
        Predictions { rd, ra, md, ma }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LanguageClass {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl LanguageClass {
    pub const ALL: [LanguageClass; 5] =
        [LanguageClass::C1, LanguageClass::C2, LanguageClass::C3, LanguageClass::C4, LanguageClass::C5];

    pub fn index(self) -> u8 {
        self as u8 + 1
    }

    /// Row condition of the joint-behaviour table.
    pub fn matches(self, hom: ExtendedNat, het: ExtendedNat, flags: &FinitenessFlags) -> bool {
        let hom_inf = !hom.is_finite();
        let het_inf = !het.is_finite();
        match self {
            LanguageClass::C1 => hom_inf && !flags.complement_empty,
            LanguageClass::C2 => hom_inf && flags.complement_empty,
            LanguageClass::C3 => !hom_inf && het_inf,
            LanguageClass::C4 => !hom_inf && !het_inf && !flags.is_finite_language,
            LanguageClass::C5 => !hom_inf && !het_inf && flags.is_finite_language,
        }
    }
}

impl Serialize for LanguageClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.index())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub hom: ExtendedNat,
    pub het: ExtendedNat,
    pub is_finite_language: bool,
    pub complement_empty: bool,
    pub shortest_complement_word_length: Option<usize>,
    #[serde(rename = "class")]
    pub class_index: LanguageClass,
    pub predictions: Predictions,
}

impl DimensionReport {
    pub fn flags(&self) -> FinitenessFlags {
        FinitenessFlags {
            is_finite_language: self.is_finite_language,
            complement_empty: self.complement_empty,
            shortest_complement_word_length: self.shortest_complement_word_length,
        }
    }

    /// Table rows whose conditions hold; a well-formed report has exactly one.
    pub fn matching_rows(&self) -> Vec<LanguageClass> {
        let flags = self.flags();
        LanguageClass::ALL.into_iter().filter(|c| c.matches(self.hom, self.het, &flags)).collect()
    }

    /// Upper bound `2^{3t+3}(2t+4)` on `|L(n)|` with `t = 2·max(Hom, Het)`,
    /// available when both dimensions are finite. `None` on overflow.
    pub fn slice_size_bound(&self) -> Option<u128> {
        let m = self.hom.finite()?.max(self.het.finite()?);
        slice_size_bound(m)
    }
}

pub fn slice_size_bound(max_dimension: u64) -> Option<u128> {
    let t = max_dimension.checked_mul(2)?;
    let exp = u32::try_from(t.checked_mul(3)?.checked_add(3)?).ok()?;
    let factor = u128::from(t).checked_mul(2)?.checked_add(4)?;
    2u128.checked_pow(exp)?.checked_mul(factor)
}

pub fn classify(language: &Language) -> DimensionReport {
    let hom = hom(language);
    let het = het(language);
    let flags = finiteness_flags(language);
    let class = LanguageClass::ALL
        .into_iter()
        .find(|c| c.matches(hom, het, &flags))
        .expect("table rows cover every combination of flags");
    DimensionReport {
        hom,
        het,
        is_finite_language: flags.is_finite_language,
        complement_empty: flags.complement_empty,
        shortest_complement_word_length: flags.shortest_complement_word_length,
        class_index: class,
        predictions: Predictions::for_class(class),
    }
}
