//! Constructive recognizers and membership trees with provable depth bounds.

mod certificates;
mod decompose;
mod strategy;
mod trees;

use thiserror::Error;

use crate::word::Word;

pub use certificates::{build_certificate_7t, nondet_tree_from_certificates};
pub use decompose::{decompose, Decomposition};
pub use strategy::{block_width, BlockCase, BlockHalvingStrategy};
pub use trees::{
    build_distinguishing_set_tree, build_membership_trees, distinguishing_set,
    MEMBERSHIP_TREE_MAX_N,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("homogeneity dimension is infinite")]
    HomInfinite,
    #[error("word {0} is not in the language")]
    NotInLanguage(Word),
    #[error("word length {n} is below the minimum {min} for block width {t}")]
    TooShort { n: usize, min: usize, t: usize },
    #[error("word has length {got}, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("certificate of {word} does not rule out {other}")]
    NonSeparating { word: Word, other: Word },
    #[error("no certificate for slice word {0}")]
    MissingCertificate(Word),
    #[error("certificate given for {0}, which is not in the slice")]
    UnexpectedCertificate(Word),
    #[error("distinguishing set has {size} positions, above the bound {bound}")]
    BoundViolated { size: usize, bound: u128 },
    #[error("tree too large to build: {0}")]
    TooLarge(String),
}
