use std::collections::HashMap;

use crate::hitting::{min_hitting_set, PosSet};
use crate::tree::{Certificate, DecisionTree, Node};
use crate::word::Word;

/// Subset of the enumerated slice, one bit per word index.
type Subset = Box<[u64]>;

/// The slice `L(n)` with, for each position, the subset of words carrying 1.
pub(crate) struct IndexedSlice {
    pub n: usize,
    pub words: Vec<Word>,
    ones: Vec<Subset>,
}

impl IndexedSlice {
    pub fn new(n: usize, words: Vec<Word>) -> Self {
        let blocks = words.len().div_ceil(64).max(1);
        let ones = (1..=n)
            .map(|p| {
                let mut mask = vec![0u64; blocks].into_boxed_slice();
                for (i, w) in words.iter().enumerate() {
                    if w.letter(p) == 1 {
                        mask[i / 64] |= 1 << (i % 64);
                    }
                }
                mask
            })
            .collect();
        IndexedSlice { n, words, ones }
    }

    fn full(&self) -> Subset {
        let mut s = vec![0u64; self.words.len().div_ceil(64).max(1)].into_boxed_slice();
        for i in 0..self.words.len() {
            s[i / 64] |= 1 << (i % 64);
        }
        s
    }

    /// Words of `s` with letter 0 and with letter 1 at `position`.
    fn split(&self, s: &Subset, position: usize) -> (Subset, Subset) {
        let ones = &self.ones[position - 1];
        let zero = s.iter().zip(ones.iter()).map(|(a, b)| a & !b).collect();
        let one = s.iter().zip(ones.iter()).map(|(a, b)| a & b).collect();
        (zero, one)
    }
}

fn size(s: &Subset) -> usize {
    s.iter().map(|b| b.count_ones() as usize).sum()
}

fn first_member(s: &Subset) -> usize {
    let (i, b) = s.iter().enumerate().find(|(_, b)| **b != 0).expect("nonempty subset");
    i * 64 + b.trailing_zeros() as usize
}

fn ceil_log2(k: usize) -> usize {
    if k <= 1 {
        0
    } else {
        (usize::BITS - (k - 1).leading_zeros()) as usize
    }
}

/// Memoized minimax over candidate sets reachable by queries.
pub(crate) struct RecognitionMinimax<'a> {
    slice: &'a IndexedSlice,
    memo: HashMap<Subset, (u8, usize)>,
}

impl<'a> RecognitionMinimax<'a> {
    pub fn new(slice: &'a IndexedSlice) -> Self {
        RecognitionMinimax { slice, memo: HashMap::new() }
    }

    /// Minimum deterministic depth, with the position chosen at the root of
    /// an optimal subtree (0 when no query is needed).
    fn solve(&mut self, s: &Subset) -> (u8, usize) {
        let k = size(s);
        if k <= 1 {
            return (0, 0);
        }
        if let Some(&hit) = self.memo.get(s) {
            return hit;
        }
        let lower = ceil_log2(k) as u8;
        let mut best = (u8::MAX, 0);
        let mut seen_splits: Vec<Subset> = Vec::new();
        for p in 1..=self.slice.n {
            let (zero, one) = self.slice.split(s, p);
            let kz = size(&zero);
            if kz == 0 || kz == k {
                continue;
            }
            // Complementary splits are the same partition.
            let key = if zero < one { zero.clone() } else { one.clone() };
            if seen_splits.contains(&key) {
                continue;
            }
            seen_splits.push(key);
            let bound = 1 + ceil_log2(kz.max(k - kz)) as u8;
            if bound >= best.0 {
                continue;
            }
            let (dz, _) = self.solve(&zero);
            if 1 + dz >= best.0 {
                continue;
            }
            let (d1, _) = self.solve(&one);
            let value = 1 + dz.max(d1);
            if value < best.0 {
                best = (value, p);
                if value == lower {
                    break;
                }
            }
        }
        self.memo.insert(s.clone(), best);
        best
    }

    pub fn depth(&mut self) -> u8 {
        let full = self.slice.full();
        self.solve(&full).0
    }

    pub fn tree(&mut self) -> DecisionTree {
        if self.slice.words.is_empty() {
            return DecisionTree::empty();
        }
        let full = self.slice.full();
        DecisionTree::deterministic(self.build(&full))
    }

    fn build(&mut self, s: &Subset) -> Node {
        let (_, p) = self.solve(s);
        if p == 0 {
            return Node::word_leaf(self.slice.words[first_member(s)].clone());
        }
        let (zero, one) = self.slice.split(s, p);
        Node::branch(p, vec![(0, self.build(&zero)), (1, self.build(&one))])
    }
}

/// Minimum certificate of `w` within the slice: the smallest set of positions
/// on which every other slice word differs from `w` somewhere.
pub(crate) fn min_recognition_certificate(slice: &IndexedSlice, w: &Word) -> Certificate {
    let n = slice.n;
    let diffs: Vec<PosSet> = slice
        .words
        .iter()
        .filter(|u| *u != w)
        .map(|u| PosSet::from_positions(n, (0..n).filter(|&i| u.bits()[i] != w.bits()[i])))
        .collect();
    let hs = min_hitting_set(n, &diffs).expect("distinct words differ somewhere");
    Certificate::from_word(w, hs.iter().map(|p| p + 1))
}

pub(crate) fn all_min_certificates(slice: &IndexedSlice) -> Vec<(Word, Certificate)> {
    slice
        .words
        .iter()
        .map(|w| (w.clone(), min_recognition_certificate(slice, w)))
        .collect()
}

pub(crate) fn certificate_tree(certs: &[(Word, Certificate)]) -> DecisionTree {
    if certs.is_empty() {
        return DecisionTree::empty();
    }
    DecisionTree::nondeterministic(
        certs
            .iter()
            .map(|(w, c)| Node::chain(&c.assignments(), Node::word_leaf(w.clone())))
            .collect(),
    )
}
