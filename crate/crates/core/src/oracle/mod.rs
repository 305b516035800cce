//! Exact minimum depths by exhaustive search, for small word lengths.
//!
//! Recognition depths search over subsets of the enumerated slice `L(n)`;
//! membership depths search over the `3^n` subcubes of `E*(n)`. Both are
//! exponential and guarded by [`OracleCaps`].

mod membership;
mod recognition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::automaton::SliceAutomaton;
use crate::builders::BlockHalvingStrategy;
use crate::dimensions::{classify, LanguageClass};
use crate::language::Language;
use crate::strategy::trace_strategy;
use crate::tree::{Certificate, DecisionTree, Mode};
use crate::word::Word;

use membership::SubcubeTable;
use recognition::{all_min_certificates, certificate_tree, IndexedSlice, RecognitionMinimax};

/// Largest `n` accepted by [`brute_slice`].
pub const BRUTE_SLICE_MAX_N: usize = 22;

/// Slices simulated in full when a constructed depth is requested.
const CONSTRUCTED_MAX_SLICE: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest `n` for the recognition depths.
    pub recognition_max_n: usize,
    /// Largest `n` for the membership depths.
    pub membership_max_n: usize,
    /// Largest slice the recognition depths will search.
    pub max_slice: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { recognition_max_n: 16, membership_max_n: 14, max_slice: 4096 }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the cap {cap}")]
    LengthOverCap { n: usize, cap: usize },
    #[error("|L({n})| = {size} exceeds the cap {cap}")]
    SliceOverCap { n: usize, size: String, cap: usize },
}

/// All words of length `n` in `language`, by filtering `E*(n)`.
pub fn brute_slice(language: &Language, n: usize) -> Result<Vec<Word>, OracleError> {
    if n > BRUTE_SLICE_MAX_N {
        return Err(OracleError::LengthOverCap { n, cap: BRUTE_SLICE_MAX_N });
    }
    Ok(Word::all_of_length(n).filter(|w| language.contains(w)).collect())
}

fn indexed_slice(
    language: &Language,
    n: usize,
    caps: &OracleCaps,
) -> Result<IndexedSlice, OracleError> {
    if n > caps.recognition_max_n {
        return Err(OracleError::LengthOverCap { n, cap: caps.recognition_max_n });
    }
    let automaton = SliceAutomaton::new(language);
    let size = automaton.count(n);
    if size > caps.max_slice.into() {
        return Err(OracleError::SliceOverCap { n, size: size.to_string(), cap: caps.max_slice });
    }
    Ok(IndexedSlice::new(n, automaton.words(n).collect()))
}

fn subcubes(language: &Language, n: usize, caps: &OracleCaps) -> Result<SubcubeTable, OracleError> {
    if n > caps.membership_max_n {
        return Err(OracleError::LengthOverCap { n, cap: caps.membership_max_n });
    }
    Ok(SubcubeTable::new(language, n))
}

/// Minimum depth of a deterministic tree recognizing `L(n)`.
pub fn exact_h_rd(language: &Language, n: usize, caps: &OracleCaps) -> Result<usize, OracleError> {
    let slice = indexed_slice(language, n, caps)?;
    Ok(RecognitionMinimax::new(&slice).depth() as usize)
}

/// Minimum depth of a nondeterministic tree recognizing `L(n)`: the largest
/// minimum certificate over the slice.
pub fn exact_h_ra(language: &Language, n: usize, caps: &OracleCaps) -> Result<usize, OracleError> {
    let slice = indexed_slice(language, n, caps)?;
    Ok(all_min_certificates(&slice).iter().map(|(_, c)| c.len()).max().unwrap_or(0))
}

/// Minimum depth of a deterministic tree deciding membership in `L(n)`.
pub fn exact_h_md(language: &Language, n: usize, caps: &OracleCaps) -> Result<usize, OracleError> {
    Ok(subcubes(language, n, caps)?.deterministic_depth() as usize)
}

/// Minimum depth of a nondeterministic tree deciding membership in `L(n)`.
pub fn exact_h_ma(language: &Language, n: usize, caps: &OracleCaps) -> Result<usize, OracleError> {
    Ok(subcubes(language, n, caps)?.nondeterministic_depth() as usize)
}

/// An optimal recognition tree: the minimax tree, or the union of minimum
/// certificate paths.
pub fn exact_recognition_tree(
    language: &Language,
    n: usize,
    mode: Mode,
    caps: &OracleCaps,
) -> Result<DecisionTree, OracleError> {
    let slice = indexed_slice(language, n, caps)?;
    Ok(match mode {
        Mode::Det => RecognitionMinimax::new(&slice).tree(),
        Mode::Nondet => certificate_tree(&all_min_certificates(&slice)),
    })
}

/// An optimal membership tree in the given mode.
pub fn exact_membership_tree(
    language: &Language,
    n: usize,
    mode: Mode,
    caps: &OracleCaps,
) -> Result<DecisionTree, OracleError> {
    let table = subcubes(language, n, caps)?;
    Ok(match mode {
        Mode::Det => table.deterministic_tree(),
        Mode::Nondet => table.nondeterministic_tree(),
    })
}

/// Minimum recognition certificates of every slice word.
pub fn exact_certificates(
    language: &Language,
    n: usize,
    caps: &OracleCaps,
) -> Result<BTreeMap<Word, Certificate>, OracleError> {
    let slice = indexed_slice(language, n, caps)?;
    Ok(all_min_certificates(&slice).into_iter().collect())
}

/// One of the four depth functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Rd,
    Ra,
    Md,
    Ma,
}

impl Measure {
    pub const ALL: [Measure; 4] = [Measure::Rd, Measure::Ra, Measure::Md, Measure::Ma];
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Rd => "rd",
            Measure::Ra => "ra",
            Measure::Md => "md",
            Measure::Ma => "ma",
        })
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "rd" => Ok(Measure::Rd),
            "ra" => Ok(Measure::Ra),
            "md" => Ok(Measure::Md),
            "ma" => Ok(Measure::Ma),
            other => Err(format!("unknown measure {other:?} (expected rd, ra, md or ma)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Source {
    Exact,
    Constructed,
    Skipped,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Exact => "EXACT",
            Source::Constructed => "CONSTRUCTED",
            Source::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub value: Option<usize>,
    pub source: Source,
}

impl Cell {
    const SKIPPED: Cell = Cell { value: None, source: Source::Skipped };

    fn exact(value: usize) -> Self {
        Cell { value: Some(value), source: Source::Exact }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub rd: Cell,
    pub ra: Cell,
    pub md: Cell,
    pub ma: Cell,
}

impl ProfileRow {
    pub fn cell(&self, m: Measure) -> Cell {
        match m {
            Measure::Rd => self.rd,
            Measure::Ra => self.ra,
            Measure::Md => self.md,
            Measure::Ma => self.ma,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthProfile {
    pub language: String,
    pub class: LanguageClass,
    pub rows: Vec<ProfileRow>,
}

/// Worst-case query count of the block-halving recognizer over all of
/// `L(n)`, when it applies and the slice is small enough to simulate.
pub fn constructed_h_rd(language: &Language, n: usize) -> Option<usize> {
    let strategy = BlockHalvingStrategy::new(language, n).ok()?;
    let automaton = SliceAutomaton::new(language);
    if automaton.count(n) > CONSTRUCTED_MAX_SLICE.into() {
        return None;
    }
    let budget = strategy.query_bound();
    automaton
        .words(n)
        .map(|w| trace_strategy(&strategy, &w, budget).ok().map(|t| t.queries.len()))
        .try_fold(0, |acc, q| q.map(|q| acc.max(q)))
}

fn profile_row(
    language: &Language,
    n: usize,
    measures: &[Measure],
    allow_constructed: bool,
    caps: &OracleCaps,
) -> ProfileRow {
    let cell = |m: Measure| {
        if !measures.contains(&m) {
            return Cell::SKIPPED;
        }
        let exact = match m {
            Measure::Rd => exact_h_rd(language, n, caps),
            Measure::Ra => exact_h_ra(language, n, caps),
            Measure::Md => exact_h_md(language, n, caps),
            Measure::Ma => exact_h_ma(language, n, caps),
        };
        match exact {
            Ok(v) => Cell::exact(v),
            Err(_) if m == Measure::Rd && allow_constructed => constructed_h_rd(language, n)
                .map_or(Cell::SKIPPED, |v| Cell { value: Some(v), source: Source::Constructed }),
            Err(_) => Cell::SKIPPED,
        }
    };
    ProfileRow { n, rd: cell(Measure::Rd), ra: cell(Measure::Ra), md: cell(Measure::Md), ma: cell(Measure::Ma) }
}

/// Depth values for each `n` in `range`; rows are computed in parallel and
/// returned in increasing `n`.
pub fn depth_profile(
    language: &Language,
    range: RangeInclusive<usize>,
    measures: &[Measure],
    allow_constructed: bool,
    caps: &OracleCaps,
) -> DepthProfile {
    let rows = range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| profile_row(language, n, measures, allow_constructed, caps))
        .collect();
    DepthProfile { language: language.name().to_string(), class: classify(language).class_index, rows }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{validate_membership, validate_recognition};

    fn lang(forbidden: &[&str]) -> Language {
        Language::avoiding("x", forbidden).unwrap()
    }

    fn caps() -> OracleCaps {
        OracleCaps::default()
    }

    #[test]
    fn brute_slice_examples() {
        let words: Vec<String> =
            brute_slice(&lang(&["10"]), 2).unwrap().iter().map(Word::to_string).collect();
        assert_eq!(words, ["00", "01", "11"]);
        assert!(brute_slice(&lang(&[""]), 4).unwrap().is_empty());
        assert_eq!(brute_slice(&lang(&[]), 3).unwrap().len(), 8);
        assert!(brute_slice(&lang(&[]), 23).is_err());
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(exact_h_rd(&lang(&["10"]), 3, &caps()), Ok(2));
        assert_eq!(exact_h_rd(&lang(&["11"]), 3, &caps()), Ok(3));
        assert_eq!(exact_h_rd(&lang(&["1"]), 5, &caps()), Ok(0));
        assert_eq!(exact_h_ra(&lang(&["10"]), 3, &caps()), Ok(2));
        assert_eq!(exact_h_ra(&lang(&["11"]), 2, &caps()), Ok(2));
        assert_eq!(exact_h_ra(&lang(&["1"]), 9, &caps()), Ok(0));
    }

    #[test]
    fn membership_examples() {
        assert_eq!(exact_h_md(&lang(&["10"]), 2, &caps()), Ok(2));
        assert_eq!(exact_h_md(&lang(&[]), 6, &caps()), Ok(0));
        assert_eq!(exact_h_md(&lang(&["1"]), 4, &caps()), Ok(4));
        assert_eq!(exact_h_ma(&lang(&["1"]), 4, &caps()), Ok(4));
        assert_eq!(exact_h_ma(&lang(&["11"]), 3, &caps()), Ok(2));
        assert_eq!(exact_h_ma(&lang(&[]), 8, &caps()), Ok(0));
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            exact_h_md(&lang(&[]), 15, &caps()),
            Err(OracleError::LengthOverCap { n: 15, cap: 14 })
        ));
        assert!(matches!(exact_h_rd(&lang(&[]), 13, &caps()), Err(OracleError::SliceOverCap { .. })));
    }

    /// Minimum deterministic depth by plain recursion over sets of words.
    fn naive_rd(n: usize, words: &[Word]) -> usize {
        if words.len() <= 1 {
            return 0;
        }
        (1..=n)
            .filter_map(|p| {
                let (zero, one): (Vec<Word>, Vec<Word>) =
                    words.iter().cloned().partition(|w| w.letter(p) == 0);
                (!zero.is_empty() && !one.is_empty())
                    .then(|| 1 + naive_rd(n, &zero).max(naive_rd(n, &one)))
            })
            .min()
            .unwrap()
    }

    /// Minimum deterministic membership depth by recursion over restrictions.
    fn naive_md(language: &Language, fixed: &mut Vec<Option<u8>>) -> usize {
        let words: Vec<bool> = Word::all_of_length(fixed.len())
            .filter(|w| fixed.iter().enumerate().all(|(i, f)| f.is_none_or(|b| w.bits()[i] == b)))
            .map(|w| language.contains(&w))
            .collect();
        if words.iter().all(|&m| m == words[0]) {
            return 0;
        }
        let free: Vec<usize> = (0..fixed.len()).filter(|&i| fixed[i].is_none()).collect();
        free.into_iter()
            .map(|i| {
                let mut worst = 0;
                for b in 0..2 {
                    fixed[i] = Some(b);
                    worst = worst.max(naive_md(language, fixed));
                }
                fixed[i] = None;
                1 + worst
            })
            .min()
            .unwrap()
    }

    /// Largest over all words of the smallest constant subcube through it,
    /// by trying every subset of positions.
    fn naive_ma(language: &Language, n: usize) -> usize {
        let all: Vec<Word> = Word::all_of_length(n).collect();
        all.iter()
            .map(|w| {
                (0u32..1 << n)
                    .filter(|mask| {
                        let agree = |u: &Word| (0..n).all(|i| mask >> i & 1 == 0 || u.bits()[i] == w.bits()[i]);
                        all.iter().filter(|u| agree(u)).all(|u| language.contains(u) == language.contains(w))
                    })
                    .map(u32::count_ones)
                    .min()
                    .unwrap() as usize
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn agrees_with_naive_search() {
        let langs = [
            lang(&["10"]),
            lang(&["11"]),
            lang(&["010", "101"]),
            lang(&["11", "00"]),
            lang(&["0110"]),
            Language::closure_of("c", &["010"]).unwrap(),
        ];
        for l in &langs {
            for n in 0..=6 {
                let words = brute_slice(l, n).unwrap();
                assert_eq!(exact_h_rd(l, n, &caps()).unwrap(), naive_rd(n, &words), "{l} rd {n}");
                assert_eq!(exact_h_md(l, n, &caps()).unwrap(), naive_md(l, &mut vec![None; n]), "{l} md {n}");
                assert_eq!(exact_h_ma(l, n, &caps()).unwrap(), naive_ma(l, n), "{l} ma {n}");
            }
        }
    }

    #[test]
    fn optimal_trees_validate_at_their_depth() {
        let l = lang(&["010", "101"]);
        for n in 1..=7 {
            for mode in [Mode::Det, Mode::Nondet] {
                let t = exact_recognition_tree(&l, n, mode, &caps()).unwrap();
                assert!(validate_recognition(&t, &l, n, mode).unwrap().is_pass());
                let want = match mode {
                    Mode::Det => exact_h_rd(&l, n, &caps()),
                    Mode::Nondet => exact_h_ra(&l, n, &caps()),
                };
                assert_eq!(t.depth(), want.unwrap());
                let t = exact_membership_tree(&l, n, mode, &caps()).unwrap();
                assert!(validate_membership(&t, &l, n, mode).unwrap().is_pass());
                let want = match mode {
                    Mode::Det => exact_h_md(&l, n, &caps()),
                    Mode::Nondet => exact_h_ma(&l, n, &caps()),
                };
                assert_eq!(t.depth(), want.unwrap());
            }
        }
    }

    #[test]
    fn profile_examples() {
        let l3 = lang(&["10"]);
        let p = depth_profile(&l3, 1..=6, &Measure::ALL, false, &caps());
        let rd: Vec<_> = p.rows.iter().map(|r| r.rd.value.unwrap()).collect();
        let ra: Vec<_> = p.rows.iter().map(|r| r.ra.value.unwrap()).collect();
        assert_eq!(rd, [1, 2, 2, 3, 3, 3]);
        assert_eq!(ra, [1, 2, 2, 2, 2, 2]);

        let l5 = lang(&["1", "00"]);
        let p = depth_profile(&l5, 1..=5, &[Measure::Md], false, &caps());
        let md: Vec<_> = p.rows.iter().map(|r| r.md.value.unwrap()).collect();
        assert_eq!(md, [1, 0, 0, 0, 0]);
        assert_eq!(p.rows[0].rd, Cell::SKIPPED);

        let l2 = lang(&[]);
        let p = depth_profile(&l2, 1..=4, &[Measure::Rd], false, &caps());
        let rd: Vec<_> = p.rows.iter().map(|r| r.rd.value.unwrap()).collect();
        assert_eq!(rd, [1, 2, 3, 4]);
    }

    #[test]
    fn constructed_cells_fill_past_the_caps() {
        let l3 = lang(&["10"]);
        let tight = OracleCaps { recognition_max_n: 10, ..caps() };
        let p = depth_profile(&l3, 11..=12, &[Measure::Rd], true, &tight);
        for row in &p.rows {
            assert_eq!(row.rd.source, Source::Constructed);
            assert!(row.rd.value.unwrap() <= BlockHalvingStrategy::new(&l3, row.n).unwrap().query_bound());
        }
        let p = depth_profile(&l3, 11..=11, &[Measure::Rd], false, &tight);
        assert_eq!(p.rows[0].rd, Cell::SKIPPED);
    }
}
