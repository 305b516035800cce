use super::BuildError;
use crate::automaton::SliceAutomaton;
use crate::dimensions::{het, hom, slice_size_bound};
use crate::hitting::{greedy_hitting_set, min_hitting_set, PosSet};
use crate::language::Language;
use crate::tree::{DecisionTree, Node, RECOGNITION_VALIDATION_MAX_SLICE};
use crate::word::Word;

/// Largest `n` for which the complete membership tree is built.
pub const MEMBERSHIP_TREE_MAX_N: usize = 20;

/// Slices up to this size get an exact minimum distinguishing set.
const EXACT_DISTINGUISHING_MAX: usize = 64;

/// Positions (1-based, increasing) on which every two words of `words`
/// differ somewhere. Minimum size for small inputs, greedy otherwise.
pub fn distinguishing_set(n: usize, words: &[Word]) -> Vec<usize> {
    let mut pairs = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            pairs.push(PosSet::from_positions(
                n,
                (0..n).filter(|&p| u.bits()[p] != v.bits()[p]),
            ));
        }
    }
    let set = if words.len() <= EXACT_DISTINGUISHING_MAX {
        min_hitting_set(n, &pairs).expect("distinct words differ somewhere")
    } else {
        greedy_hitting_set(n, &crate::hitting::minimal_sets(pairs))
    };
    set.iter().map(|p| p + 1).collect()
}

/// Reads a distinguishing set of positions in a fixed order and names the
/// one slice word consistent with the answers.
pub fn build_distinguishing_set_tree(
    language: &Language,
    n: usize,
) -> Result<DecisionTree, BuildError> {
    let automaton = SliceAutomaton::new(language);
    let size = automaton.count(n);
    if size > RECOGNITION_VALIDATION_MAX_SLICE.into() {
        return Err(BuildError::TooLarge(format!("|L({n})| = {size}")));
    }
    let words: Vec<Word> = automaton.words(n).collect();
    if words.is_empty() {
        return Ok(DecisionTree::empty());
    }
    let set = distinguishing_set(n, &words);
    if let (Some(h), Some(g)) = (hom(language).finite(), het(language).finite()) {
        if let Some(bound) = slice_size_bound(h.max(g)).and_then(|p| p.checked_mul(p)) {
            if set.len() as u128 > bound {
                return Err(BuildError::BoundViolated { size: set.len(), bound });
            }
        }
    }
    let refs: Vec<&Word> = words.iter().collect();
    Ok(DecisionTree::deterministic(trie(&set, &refs)))
}

fn trie(order: &[usize], words: &[&Word]) -> Node {
    let Some((&p, rest)) = order.split_first() else {
        debug_assert_eq!(words.len(), 1);
        return Node::word_leaf(words[0].clone());
    };
    let edges = (0..2u8)
        .filter_map(|bit| {
            let part: Vec<&Word> = words.iter().copied().filter(|w| w.letter(p) == bit).collect();
            (!part.is_empty()).then(|| (bit, trie(rest, &part)))
        })
        .collect();
    Node::branch(p, edges)
}

/// The trivial membership trees: a single leaf when `L(n)` is empty or all of
/// `E*(n)`, otherwise the complete tree reading every position.
pub fn build_membership_trees(language: &Language, n: usize) -> Result<DecisionTree, BuildError> {
    let automaton = SliceAutomaton::new(language);
    if automaton.count(n) == 0u32.into() {
        return Ok(DecisionTree::deterministic(Node::bit_leaf(0)));
    }
    if language.is_full() {
        return Ok(DecisionTree::deterministic(Node::bit_leaf(1)));
    }
    if n > MEMBERSHIP_TREE_MAX_N {
        return Err(BuildError::TooLarge(format!("complete tree of depth {n}")));
    }
    Ok(DecisionTree::deterministic(full_read(language, &mut Vec::with_capacity(n), n)))
}

fn full_read(language: &Language, prefix: &mut Vec<u8>, n: usize) -> Node {
    if prefix.len() == n {
        return Node::bit_leaf(language.contains(&Word::from(prefix.clone())) as u8);
    }
    let position = prefix.len() + 1;
    let mut edges = Vec::with_capacity(2);
    for bit in 0..2u8 {
        prefix.push(bit);
        edges.push((bit, full_read(language, prefix, n)));
        prefix.pop();
    }
    Node::branch(position, edges)
}
