//! Decision-tree depth of binary subword-closed languages.
//!
//! A language is given by its finite antichain of forbidden subwords. The
//! crate classifies languages by their homogeneity and heterogeneity
//! dimensions, builds recognition and membership decision trees, and computes
//! exact minimum depths by brute force for small word lengths.

pub mod automaton;
pub mod cli;
pub mod builders;
pub mod dimensions;
pub mod hitting;
pub mod language;
pub mod oracle;
pub mod strategy;
pub mod tree;
pub mod word;

pub use automaton::{count_slice, slice, SliceAutomaton};
pub use dimensions::{classify, het, hom, DimensionReport, ExtendedNat, Growth, LanguageClass};
pub use language::{
    canonicalize_antichain, closure_to_antichain, load_language, parse_language_spec,
    ForbiddenAntichain, Language, LanguageError,
};
pub use strategy::{trace_strategy, QueryStrategy, Step};
pub use tree::{Certificate, DecisionTree, Label, Mode, Node, Problem, Validation, Violation};
pub use word::{is_subsequence, Word, WordError};
