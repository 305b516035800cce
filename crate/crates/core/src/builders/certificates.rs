use std::collections::{BTreeMap, BTreeSet};

use super::strategy::{block_width, run_of, BlockCase, Layout, Run};
use super::BuildError;
use crate::automaton::SliceAutomaton;
use crate::language::Language;
use crate::tree::{Certificate, DecisionTree, Node, RECOGNITION_VALIDATION_MAX_SLICE};
use crate::word::Word;

/// A set of at most `7t` letters of `w` that no other word of `L(n)` shares.
///
/// The four boundary blocks are always included. Depending on their shape
/// one more block next to them, or the `3t` letters around the `a`/`ā`
/// switch, complete the certificate.
pub fn build_certificate_7t(
    language: &Language,
    n: usize,
    w: &Word,
) -> Result<Certificate, BuildError> {
    let t = block_width(language).ok_or(BuildError::HomInfinite)?;
    if n < 10 * t {
        return Err(BuildError::TooShort { n, min: 10 * t, t });
    }
    if w.len() != n {
        return Err(BuildError::WrongLength { expected: n, got: w.len() });
    }
    if !language.contains(w) {
        return Err(BuildError::NotInLanguage(w.clone()));
    }
    let layout = Layout { n, t };
    let letter = |p: usize| w.letter(p);
    let left = run_of(layout.l2(), letter);
    let right = run_of(layout.r2(), letter);
    let mut positions: BTreeSet<usize> = layout.boundary().collect();
    match layout.case(left, right) {
        BlockCase::SameRun => {}
        BlockCase::RightMixed => positions.extend(layout.r3()),
        BlockCase::LeftMixed => positions.extend(layout.l3()),
        BlockCase::Switch => {
            let Run::Uniform(a) = left else { unreachable!() };
            let k = layout.block_count();
            let runs: Vec<Run> = (0..k).map(|r| run_of(layout.block(r), letter)).collect();
            match runs.iter().position(|r| *r == Run::Mixed) {
                Some(r) => {
                    positions.extend(layout.block(r));
                    positions.extend(layout.window(r));
                }
                None => {
                    let s = runs.iter().position(|r| *r != Run::Uniform(a)).unwrap_or(k);
                    if s > 0 {
                        positions.extend(layout.block(s - 1));
                    }
                    if s < k {
                        positions.extend(layout.block(s));
                    }
                }
            }
        }
        BlockCase::Unstructured => positions.extend(1..=n),
    }
    Ok(Certificate::from_word(w, positions))
}

/// Union of one path per slice word, each path fixing that word's
/// certificate and ending at a leaf naming the word.
pub fn nondet_tree_from_certificates(
    language: &Language,
    n: usize,
    certs: &BTreeMap<Word, Certificate>,
) -> Result<DecisionTree, BuildError> {
    let automaton = SliceAutomaton::new(language);
    let size = automaton.count(n);
    if size > RECOGNITION_VALIDATION_MAX_SLICE.into() {
        return Err(BuildError::TooLarge(format!("|L({n})| = {size}")));
    }
    let words: Vec<Word> = automaton.words(n).collect();
    let members: BTreeSet<&Word> = words.iter().collect();
    if let Some(extra) = certs.keys().find(|w| !members.contains(w)) {
        return Err(BuildError::UnexpectedCertificate(extra.clone()));
    }
    let mut paths = Vec::with_capacity(words.len());
    for w in &words {
        let cert = certs.get(w).ok_or_else(|| BuildError::MissingCertificate(w.clone()))?;
        if cert.max_position() > n || !cert.admits(w) {
            return Err(BuildError::NonSeparating { word: w.clone(), other: w.clone() });
        }
        if let Some(other) = cert.first_unseparated(w, &words) {
            return Err(BuildError::NonSeparating { word: w.clone(), other: other.clone() });
        }
        paths.push(Node::chain(&cert.assignments(), Node::word_leaf(w.clone())));
    }
    if paths.is_empty() {
        return Ok(DecisionTree::empty());
    }
    Ok(DecisionTree::nondeterministic(paths))
}
