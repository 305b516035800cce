//! Minimum hitting sets over small position universes.

use std::fmt;

/// A set of 0-based positions stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosSet {
    blocks: Vec<u64>,
}

impl PosSet {
    pub fn new(universe: usize) -> Self {
        PosSet { blocks: vec![0; universe.div_ceil(64).max(1)] }
    }

    pub fn from_positions(universe: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut s = PosSet::new(universe);
        for p in positions {
            s.insert(p);
        }
        s
    }

    pub fn insert(&mut self, p: usize) {
        self.blocks[p / 64] |= 1 << (p % 64);
    }

    pub fn remove(&mut self, p: usize) {
        self.blocks[p / 64] &= !(1 << (p % 64));
    }

    pub fn contains(&self, p: usize) -> bool {
        self.blocks[p / 64] >> (p % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn intersects(&self, other: &PosSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &PosSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for PosSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Drops duplicates and every set that contains another one; hitting the
/// survivors hits everything.
pub fn minimal_sets(mut sets: Vec<PosSet>) -> Vec<PosSet> {
    sets.sort_by_key(PosSet::len);
    sets.dedup();
    let mut kept: Vec<PosSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// Greedy cover: repeatedly take the position hitting the most unhit sets.
pub fn greedy_hitting_set(universe: usize, sets: &[PosSet]) -> PosSet {
    let mut chosen = PosSet::new(universe);
    let mut unhit: Vec<&PosSet> = sets.iter().collect();
    while !unhit.is_empty() {
        let mut counts = vec![0usize; universe];
        for s in &unhit {
            for p in s.iter() {
                counts[p] += 1;
            }
        }
        let (best, _) = counts
            .iter()
            .enumerate()
            .max_by_key(|&(p, &c)| (c, std::cmp::Reverse(p)))
            .expect("nonempty universe");
        chosen.insert(best);
        unhit.retain(|s| !s.contains(best));
    }
    chosen
}

/// Exact minimum hitting set by branch and bound.
///
/// Returns `None` if some set is empty (nothing can hit it).
pub fn min_hitting_set(universe: usize, sets: &[PosSet]) -> Option<PosSet> {
    if sets.iter().any(PosSet::is_empty) {
        return None;
    }
    let sets = minimal_sets(sets.to_vec());
    let mut search = Search {
        sets: &sets,
        best: greedy_hitting_set(universe, &sets),
        chosen: PosSet::new(universe),
        banned: PosSet::new(universe),
    };
    search.branch(0);
    Some(search.best)
}

struct Search<'a> {
    sets: &'a [PosSet],
    best: PosSet,
    chosen: PosSet,
    banned: PosSet,
}

impl Search<'_> {
    fn branch(&mut self, depth: usize) {
        let unhit: Vec<&PosSet> = self.sets.iter().filter(|s| !s.intersects(&self.chosen)).collect();
        if unhit.is_empty() {
            if depth < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        // Pairwise-disjoint unhit sets each need their own position.
        let mut packed: Vec<&PosSet> = Vec::new();
        for s in &unhit {
            if !packed.iter().any(|p| p.intersects(s)) {
                packed.push(s);
            }
        }
        if depth + packed.len() >= self.best.len() {
            return;
        }
        let pivot = unhit
            .iter()
            .min_by_key(|s| s.iter().filter(|&p| !self.banned.contains(p)).count())
            .expect("unhit is nonempty");
        let options: Vec<usize> = pivot.iter().filter(|&p| !self.banned.contains(p)).collect();
        let mut newly_banned = Vec::new();
        for p in options {
            self.chosen.insert(p);
            self.branch(depth + 1);
            self.chosen.remove(p);
            // Later siblings never pick `p`: those covers were just explored.
            self.banned.insert(p);
            newly_banned.push(p);
        }
        for p in newly_banned {
            self.banned.remove(p);
        }
    }
}
