//! The block-halving recognizer for languages with finite homogeneity
//! dimension.
//!
//! Words of length `n` are cut into a prefix `L1 L2`, a suffix `R2 R1` and a
//! middle region, each boundary block `t` letters wide. Every member has the
//! shape `w1 a^i w2 ā^j w3` with short free parts, so after the four boundary
//! blocks only a local neighbourhood of the `a`/`ā` switch is unknown. That
//! switch is located by halving over `t`-letter blocks of the middle region.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use super::BuildError;
use crate::dimensions::hom;
use crate::language::Language;
use crate::strategy::{QueryStrategy, Step};
use crate::word::Word;

/// Block width `t = max(2·hom, 1)`, or `None` when `hom` is infinite.
pub fn block_width(language: &Language) -> Option<usize> {
    hom(language).finite().map(|h| (2 * h as usize).max(1))
}

/// Which shape the boundary blocks `L2` and `R2` reveal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockCase {
    /// Both equal `a^t`.
    SameRun,
    /// `L2 = a^t`, `R2` mixed.
    RightMixed,
    /// `L2` mixed, `R2` uniform.
    LeftMixed,
    /// `L2 = a^t`, `R2 = ā^t`.
    Switch,
    /// Both mixed. Members never look like this; every letter is read.
    Unstructured,
}

#[derive(Debug, Clone, Copy)]
pub(super) struct Layout {
    pub n: usize,
    pub t: usize,
}

impl Layout {
    pub fn boundary(&self) -> impl Iterator<Item = usize> {
        let (n, t) = (self.n, self.t);
        (1..=2 * t).chain(n - 2 * t + 1..=n)
    }

    pub fn l2(&self) -> RangeInclusive<usize> {
        self.t + 1..=2 * self.t
    }

    pub fn r2(&self) -> RangeInclusive<usize> {
        self.n - 2 * self.t + 1..=self.n - self.t
    }

    pub fn l3(&self) -> RangeInclusive<usize> {
        2 * self.t + 1..=3 * self.t
    }

    pub fn r3(&self) -> RangeInclusive<usize> {
        self.n - 3 * self.t + 1..=self.n - 2 * self.t
    }

    /// Number of `t`-letter blocks tiling the middle region. The last block
    /// may reach into `R2`, whose letters are known by then.
    pub fn block_count(&self) -> usize {
        (self.n - 4 * self.t).div_ceil(self.t)
    }

    pub fn block_start(&self, r: usize) -> usize {
        2 * self.t + 1 + r * self.t
    }

    pub fn block(&self, r: usize) -> RangeInclusive<usize> {
        let start = self.block_start(r);
        start..=start + self.t - 1
    }

    /// Block `r` widened by `t` letters on each side, clamped to the middle
    /// region.
    pub fn window(&self, r: usize) -> RangeInclusive<usize> {
        let block = self.block(r);
        let lo = block.start().saturating_sub(self.t).max(2 * self.t + 1);
        let hi = (block.end() + self.t).min(self.n - 2 * self.t).max(*block.end());
        lo..=hi
    }

    pub fn case(&self, left: Run, right: Run) -> BlockCase {
        match (left, right) {
            (Run::Uniform(a), Run::Uniform(b)) if a == b => BlockCase::SameRun,
            (Run::Uniform(_), Run::Uniform(_)) => BlockCase::Switch,
            (Run::Uniform(_), Run::Mixed) => BlockCase::RightMixed,
            (Run::Mixed, Run::Uniform(_)) => BlockCase::LeftMixed,
            (Run::Mixed, Run::Mixed) => BlockCase::Unstructured,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Run {
    Uniform(u8),
    Mixed,
}

pub(super) fn run_of(range: RangeInclusive<usize>, letter: impl Fn(usize) -> u8) -> Run {
    let mut letters = range.map(letter);
    let first = letters.next().expect("blocks are nonempty");
    if letters.all(|b| b == first) {
        Run::Uniform(first)
    } else {
        Run::Mixed
    }
}

/// Deterministic recognizer for `L(n)` asking at most
/// `t·⌈log₂(n/t)⌉ + 7t` letters.
#[derive(Debug, Clone)]
pub struct BlockHalvingStrategy {
    layout: Layout,
}

impl BlockHalvingStrategy {
    pub fn new(language: &Language, n: usize) -> Result<Self, BuildError> {
        let t = block_width(language).ok_or(BuildError::HomInfinite)?;
        if n < 10 * t {
            return Err(BuildError::TooShort { n, min: 10 * t, t });
        }
        Ok(BlockHalvingStrategy { layout: Layout { n, t } })
    }

    pub fn block_width(&self) -> usize {
        self.layout.t
    }

    /// The worst-case query count guaranteed for this length.
    pub fn query_bound(&self) -> usize {
        let Layout { n, t } = self.layout;
        let mut halvings = 0;
        while t << halvings < n {
            halvings += 1;
        }
        t * halvings + 7 * t
    }

    /// The case the boundary blocks of `w` select.
    pub fn case_of(&self, w: &Word) -> BlockCase {
        let l = self.layout;
        l.case(run_of(l.l2(), |p| w.letter(p)), run_of(l.r2(), |p| w.letter(p)))
    }

    fn finish(&self, known: &BTreeMap<usize, u8>, fill: impl Fn(usize) -> u8) -> Step {
        let bits = (1..=self.layout.n).map(|p| known.get(&p).copied().unwrap_or_else(|| fill(p)));
        Step::Finish(Word::from(bits.collect::<Vec<_>>()))
    }

    fn first_unknown(
        known: &BTreeMap<usize, u8>,
        mut positions: impl Iterator<Item = usize>,
    ) -> Option<usize> {
        positions.find(|p| !known.contains_key(p))
    }

    /// Halving over the middle blocks once `L2 = a^t` and `R2 = ā^t`.
    fn locate_switch(&self, known: &BTreeMap<usize, u8>, a: u8) -> Step {
        let l = self.layout;
        let letter = |p: usize| known[&p];
        let (mut lo, mut hi) = (0isize, l.block_count() as isize - 1);
        while lo <= hi {
            let r = (lo + (hi - lo + 2) / 2 - 1) as usize;
            if let Some(p) = Self::first_unknown(known, l.block(r)) {
                return Step::Ask(p);
            }
            match run_of(l.block(r), letter) {
                Run::Uniform(b) if b == a => lo = r as isize + 1,
                Run::Uniform(_) => hi = r as isize - 1,
                Run::Mixed => {
                    let window = l.window(r);
                    if let Some(p) = Self::first_unknown(known, window.clone()) {
                        return Step::Ask(p);
                    }
                    let (start, end) = (*window.start(), *window.end());
                    return self.finish(known, |p| if p < start { a } else { debug_assert!(p > end); 1 - a });
                }
            }
        }
        let split = l.block_start(lo as usize);
        self.finish(known, |p| if p < split { a } else { 1 - a })
    }
}

impl QueryStrategy for BlockHalvingStrategy {
    /// Letters read so far, by position.
    type State = BTreeMap<usize, u8>;

    fn word_length(&self) -> usize {
        self.layout.n
    }

    fn start(&self) -> Self::State {
        BTreeMap::new()
    }

    fn next(&self, known: &Self::State) -> Step {
        let l = self.layout;
        if let Some(p) = Self::first_unknown(known, l.boundary()) {
            return Step::Ask(p);
        }
        let letter = |p: usize| known[&p];
        let (left, right) = (run_of(l.l2(), letter), run_of(l.r2(), letter));
        match (l.case(left, right), left, right) {
            (BlockCase::SameRun, Run::Uniform(a), _) => self.finish(known, |_| a),
            (BlockCase::RightMixed, Run::Uniform(a), _) => match Self::first_unknown(known, l.r3()) {
                Some(p) => Step::Ask(p),
                None => self.finish(known, |_| a),
            },
            (BlockCase::LeftMixed, _, Run::Uniform(b)) => match Self::first_unknown(known, l.l3()) {
                Some(p) => Step::Ask(p),
                None => self.finish(known, |_| b),
            },
            (BlockCase::Switch, Run::Uniform(a), _) => self.locate_switch(known, a),
            _ => match Self::first_unknown(known, 1..=l.n) {
                Some(p) => Step::Ask(p),
                None => self.finish(known, |_| 0),
            },
        }
    }

    fn step(&self, known: &Self::State, bit: u8) -> Self::State {
        let Step::Ask(p) = self.next(known) else {
            panic!("step called after the strategy finished");
        };
        let mut known = known.clone();
        known.insert(p, bit);
        known
    }
}
