use std::collections::BTreeSet;

use crate::language::Language;
use crate::tree::{DecisionTree, Node};
use crate::word::Word;

const HAS_MEMBER: u8 = 1;
const HAS_NON_MEMBER: u8 = 2;
const MIXED: u8 = HAS_MEMBER | HAS_NON_MEMBER;

/// Every restriction (subcube) of `E*(n)`, encoded in base 3 with digit `d_p`
/// for position `p`: 0 or 1 fixes the letter, 2 leaves it free. Replacing a 2
/// by 0 or 1 lowers the code, so increasing code order visits subcubes before
/// the cubes containing them.
pub(crate) struct SubcubeTable {
    n: usize,
    pow3: Vec<usize>,
    /// Which answers occur on the subcube.
    flags: Vec<u8>,
}

impl SubcubeTable {
    pub fn new(language: &Language, n: usize) -> Self {
        let pow3: Vec<usize> = (0..=n).map(|i| 3usize.pow(i as u32)).collect();
        let total = pow3[n];
        let mut flags = vec![0u8; total];
        for code in 0..total {
            flags[code] = match first_free(code, n, &pow3) {
                Some(p) => flags[code - 2 * pow3[p]] | flags[code - pow3[p]],
                None => {
                    let w = point_word(code, n, &pow3);
                    if language.contains(&w) {
                        HAS_MEMBER
                    } else {
                        HAS_NON_MEMBER
                    }
                }
            };
        }
        SubcubeTable { n, pow3, flags }
    }

    fn digit(&self, code: usize, p: usize) -> usize {
        code / self.pow3[p] % 3
    }

    fn full_code(&self) -> usize {
        self.pow3[self.n] - 1
    }

    fn point_code(&self, w: &Word) -> usize {
        (0..self.n).map(|p| w.bits()[p] as usize * self.pow3[p]).sum()
    }

    /// Minimum deterministic depth on every subcube.
    pub fn deterministic_depths(&self) -> Vec<u8> {
        let mut depth = vec![0u8; self.flags.len()];
        for code in 0..self.flags.len() {
            if self.flags[code] != MIXED {
                continue;
            }
            let mut best = u8::MAX;
            for p in 0..self.n {
                if self.digit(code, p) == 2 {
                    let zero = code - 2 * self.pow3[p];
                    let one = code - self.pow3[p];
                    best = best.min(1 + depth[zero].max(depth[one]));
                }
            }
            depth[code] = best;
        }
        depth
    }

    pub fn deterministic_depth(&self) -> u8 {
        self.deterministic_depths()[self.full_code()]
    }

    pub fn deterministic_tree(&self) -> DecisionTree {
        let depth = self.deterministic_depths();
        DecisionTree::deterministic(self.build(self.full_code(), &depth))
    }

    fn build(&self, code: usize, depth: &[u8]) -> Node {
        if self.flags[code] != MIXED {
            return Node::bit_leaf((self.flags[code] == HAS_MEMBER) as u8);
        }
        let (p, _) = (0..self.n)
            .filter(|&p| self.digit(code, p) == 2)
            .map(|p| {
                let zero = code - 2 * self.pow3[p];
                let one = code - self.pow3[p];
                (p, 1 + depth[zero].max(depth[one]))
            })
            .min_by_key(|&(p, d)| (d, p))
            .expect("mixed subcube has a free position");
        let zero = code - 2 * self.pow3[p];
        let one = code - self.pow3[p];
        Node::branch(p + 1, vec![(0, self.build(zero, depth)), (1, self.build(one, depth))])
    }

    /// For every subcube `r`, the fewest fixed letters of a constant subcube
    /// containing `r`, and the code of one such subcube. Freeing a letter
    /// raises the code, so this runs in decreasing code order.
    fn certificate_table(&self) -> (Vec<u8>, Vec<usize>) {
        let total = self.flags.len();
        let mut best = vec![u8::MAX; total];
        let mut witness = vec![usize::MAX; total];
        for code in (0..total).rev() {
            if self.flags[code] != MIXED {
                best[code] = (0..self.n).filter(|&p| self.digit(code, p) != 2).count() as u8;
                witness[code] = code;
            }
            for p in 0..self.n {
                let d = self.digit(code, p);
                if d == 2 {
                    continue;
                }
                let freed = code + (2 - d) * self.pow3[p];
                if best[freed] < best[code] {
                    best[code] = best[freed];
                    witness[code] = witness[freed];
                }
            }
        }
        (best, witness)
    }

    /// Maximum over all points of the minimum certificate size.
    pub fn nondeterministic_depth(&self) -> u8 {
        let (best, _) = self.certificate_table();
        Word::all_of_length(self.n).map(|w| best[self.point_code(&w)]).max().unwrap_or(0)
    }

    /// Union of one minimum certificate path per point, deduplicated.
    pub fn nondeterministic_tree(&self) -> DecisionTree {
        let (_, witness) = self.certificate_table();
        let cubes: BTreeSet<usize> =
            Word::all_of_length(self.n).map(|w| witness[self.point_code(&w)]).collect();
        DecisionTree::nondeterministic(
            cubes
                .into_iter()
                .map(|code| {
                    let fixed: Vec<(usize, u8)> = (0..self.n)
                        .filter_map(|p| match self.digit(code, p) {
                            2 => None,
                            d => Some((p + 1, d as u8)),
                        })
                        .collect();
                    let label = (self.flags[code] == HAS_MEMBER) as u8;
                    Node::chain(&fixed, Node::bit_leaf(label))
                })
                .collect(),
        )
    }
}

fn first_free(code: usize, n: usize, pow3: &[usize]) -> Option<usize> {
    (0..n).find(|&p| code / pow3[p] % 3 == 2)
}

fn point_word(code: usize, n: usize, pow3: &[usize]) -> Word {
    Word::from((0..n).map(|p| (code / pow3[p] % 3) as u8).collect::<Vec<_>>())
}
