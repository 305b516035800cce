//! Subsequence-product automaton used to enumerate and count `L(n)`.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::language::Language;
use crate::word::Word;

/// States are tuples of greedy-match progress counters, one per obstruction.
/// A state is dead once some counter reaches the length of its obstruction.
#[derive(Debug, Clone)]
pub struct SliceAutomaton {
    counters: Vec<Vec<u16>>,
    transitions: Vec<[usize; 2]>,
    dead: Vec<bool>,
}

impl SliceAutomaton {
    pub const START: usize = 0;

    pub fn new(language: &Language) -> Self {
        let obstructions = language.obstructions().members();
        let is_dead = |c: &[u16]| obstructions.iter().zip(c).any(|(f, &k)| k as usize == f.len());
        let start = vec![0u16; obstructions.len()];

        let mut index: HashMap<Vec<u16>, usize> = HashMap::new();
        let mut counters = vec![start.clone()];
        let mut dead = vec![is_dead(&start)];
        index.insert(start, 0);
        let mut transitions = Vec::new();

        let mut cursor = 0;
        while cursor < counters.len() {
            let mut row = [cursor; 2];
            if !dead[cursor] {
                for bit in 0..2u8 {
                    let next: Vec<u16> = counters[cursor]
                        .iter()
                        .zip(obstructions)
                        .map(|(&k, f)| {
                            let k = k as usize;
                            if k < f.len() && f.bits()[k] == bit {
                                (k + 1) as u16
                            } else {
                                k as u16
                            }
                        })
                        .collect();
                    let id = *index.entry(next.clone()).or_insert_with(|| {
                        dead.push(is_dead(&next));
                        counters.push(next);
                        counters.len() - 1
                    });
                    row[bit as usize] = id;
                }
            }
            transitions.push(row);
            cursor += 1;
        }
        SliceAutomaton { counters, transitions, dead }
    }

    pub fn state_count(&self) -> usize {
        self.counters.len()
    }

    pub fn counters(&self, state: usize) -> &[u16] {
        &self.counters[state]
    }

    pub fn step(&self, state: usize, bit: u8) -> usize {
        self.transitions[state][bit as usize]
    }

    pub fn is_dead(&self, state: usize) -> bool {
        self.dead[state]
    }

    pub fn run(&self, w: &Word) -> usize {
        w.bits().iter().fold(Self::START, |s, &b| self.step(s, b))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        !self.is_dead(self.run(w))
    }

    /// `live[r][s]`: some word of length `r` leads from `s` to a live state.
    fn completion_table(&self, n: usize) -> Vec<Vec<bool>> {
        let mut table = Vec::with_capacity(n + 1);
        table.push(self.dead.iter().map(|d| !d).collect::<Vec<_>>());
        for r in 1..=n {
            let prev: &Vec<bool> = &table[r - 1];
            let row = (0..self.state_count())
                .map(|s| !self.dead[s] && (prev[self.step(s, 0)] || prev[self.step(s, 1)]))
                .collect();
            table.push(row);
        }
        table
    }

    /// Lazily enumerates `L(n)` in lexicographic order.
    pub fn words(&self, n: usize) -> SliceIter<'_> {
        let live = self.completion_table(n);
        let stack = if live[n][Self::START] { vec![(Self::START, 0u8)] } else { Vec::new() };
        SliceIter { automaton: self, live, n, stack, prefix: Vec::with_capacity(n) }
    }

    pub fn count(&self, n: usize) -> BigUint {
        let mut counts = vec![BigUint::from(0u32); self.state_count()];
        counts[Self::START] = BigUint::from(1u32);
        for _ in 0..n {
            let mut next = vec![BigUint::from(0u32); self.state_count()];
            for (s, c) in counts.iter().enumerate() {
                if self.dead[s] || c.bits() == 0 {
                    continue;
                }
                for bit in 0..2 {
                    next[self.step(s, bit)] += c;
                }
            }
            counts = next;
        }
        counts
            .into_iter()
            .enumerate()
            .filter(|&(s, _)| !self.dead[s])
            .map(|(_, c)| c)
            .sum()
    }
}

/// Depth-first walk over live paths; each stack frame is the state reached
/// before the current letter plus the next letter to try there.
pub struct SliceIter<'a> {
    automaton: &'a SliceAutomaton,
    live: Vec<Vec<bool>>,
    n: usize,
    stack: Vec<(usize, u8)>,
    prefix: Vec<u8>,
}

impl Iterator for SliceIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.n == 0 {
            return self.stack.pop().map(|_| Word::empty());
        }
        while let Some(&mut (state, ref mut bit)) = self.stack.last_mut() {
            if *bit > 1 {
                self.stack.pop();
                self.prefix.pop();
                continue;
            }
            let b = *bit;
            *bit += 1;
            let next = self.automaton.step(state, b);
            let depth = self.stack.len();
            if !self.live[self.n - depth][next] {
                continue;
            }
            if depth == self.n {
                let mut bits = self.prefix.clone();
                bits.push(b);
                return Some(Word::from(bits));
            }
            self.prefix.push(b);
            self.stack.push((next, 0));
        }
        None
    }
}

/// `L(n)`, lexicographically sorted.
pub fn slice(language: &Language, n: usize) -> Vec<Word> {
    SliceAutomaton::new(language).words(n).collect()
}

/// `|L(n)|` by dynamic programming over the automaton.
pub fn count_slice(language: &Language, n: usize) -> BigUint {
    SliceAutomaton::new(language).count(n)
}
