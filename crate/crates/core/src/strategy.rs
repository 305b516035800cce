//! Adaptive recognizers: deterministic decision trees given as state machines
//! rather than materialized node graphs.

use thiserror::Error;

use crate::tree::{DecisionTree, Node};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// Query the letter at this 1-based position.
    Ask(usize),
    Finish(Word),
}

pub trait QueryStrategy {
    type State: Clone;

    /// Length of the words this strategy recognizes.
    fn word_length(&self) -> usize;

    fn start(&self) -> Self::State;

    fn next(&self, state: &Self::State) -> Step;

    /// State after answering the pending `Ask` with `bit`.
    fn step(&self, state: &Self::State, bit: u8) -> Self::State;
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StrategyError {
    #[error("word has length {got}, strategy recognizes length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("strategy exceeded its budget of {0} queries")]
    BudgetExceeded(usize),
    #[error("strategy asked for position {position} outside 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub queries: Vec<usize>,
    pub label: Word,
}

/// Replays `strategy` against `w`, answering each query truthfully.
pub fn trace_strategy<S: QueryStrategy>(
    strategy: &S,
    w: &Word,
    budget: usize,
) -> Result<Trace, StrategyError> {
    let n = strategy.word_length();
    if w.len() != n {
        return Err(StrategyError::LengthMismatch { expected: n, got: w.len() });
    }
    let mut state = strategy.start();
    let mut queries = Vec::new();
    loop {
        match strategy.next(&state) {
            Step::Finish(label) => return Ok(Trace { queries, label }),
            Step::Ask(position) => {
                if position == 0 || position > n {
                    return Err(StrategyError::PositionOutOfRange { position, n });
                }
                if queries.len() == budget {
                    return Err(StrategyError::BudgetExceeded(budget));
                }
                queries.push(position);
                state = strategy.step(&state, w.letter(position));
            }
        }
    }
}

/// Explicit deterministic tree obtained by playing the strategy out on every
/// answer sequence some word of `words` can produce.
pub fn materialize<S: QueryStrategy>(
    strategy: &S,
    words: &[Word],
    budget: usize,
) -> Result<DecisionTree, StrategyError> {
    if words.is_empty() {
        return Ok(DecisionTree::empty());
    }
    let refs: Vec<&Word> = words.iter().collect();
    let root = expand(strategy, strategy.start(), &refs, budget)?;
    Ok(DecisionTree::deterministic(root))
}

fn expand<S: QueryStrategy>(
    strategy: &S,
    state: S::State,
    words: &[&Word],
    budget: usize,
) -> Result<Node, StrategyError> {
    match strategy.next(&state) {
        Step::Finish(label) => Ok(Node::word_leaf(label)),
        Step::Ask(position) => {
            let n = strategy.word_length();
            if position == 0 || position > n {
                return Err(StrategyError::PositionOutOfRange { position, n });
            }
            if budget == 0 {
                return Err(StrategyError::BudgetExceeded(0));
            }
            let mut edges = Vec::new();
            for bit in 0..2u8 {
                let part: Vec<&Word> =
                    words.iter().copied().filter(|w| w.letter(position) == bit).collect();
                if part.is_empty() {
                    continue;
                }
                let child = expand(strategy, strategy.step(&state, bit), &part, budget - 1)?;
                edges.push((bit, child));
            }
            Ok(Node::branch(position, edges))
        }
    }
}
