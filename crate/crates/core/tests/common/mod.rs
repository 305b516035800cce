#![allow(dead_code)]

use std::path::PathBuf;

use subword_trees::{load_language, ExtendedNat, Language, Word};

pub fn languages_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../languages")
}

pub fn bundled(file: &str) -> Language {
    load_language(languages_dir().join(file)).expect("bundled language loads")
}

/// The reference languages L1-L5 followed by the three extra corpus languages.
pub fn corpus() -> Vec<Language> {
    [
        "L1.json",
        "L2.json",
        "L3.json",
        "L4.json",
        "L5.json",
        "avoid_11_00.json",
        "avoid_010_101.json",
        "closure_010.json",
    ]
    .iter()
    .map(|f| bundled(f))
    .collect()
}

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn ceil_log2(k: usize) -> usize {
    let mut bits = 0;
    while (1usize << bits) < k {
        bits += 1;
    }
    bits
}

/// Slice size bound `2^(3t+3)·(2t+4)` with `t = 2·max(hom, het)`.
pub fn slice_bound_formula(hom: u64, het: u64) -> u128 {
    let t = 2 * hom.max(het) as u32;
    (1u128 << (3 * t + 3)) * (2 * t as u128 + 4)
}

fn max_obstruction_len(l: &Language) -> usize {
    l.obstructions().members().iter().map(Word::len).max().unwrap_or(0)
}

/// Largest `m` with `family(a, m)` in `l` for some letter `a`, scanning `m`
/// directly. Membership at a length past every obstruction means the whole
/// family is in `l`.
fn scan(l: &Language, family: impl Fn(u8, usize) -> Word) -> ExtendedNat {
    let top = max_obstruction_len(l) + 1;
    if (0..2).any(|a| l.contains(&family(a, top))) {
        return ExtendedNat::Infinity;
    }
    let best = (0..top).filter(|&m| (0..2).any(|a| l.contains(&family(a, m)))).max();
    ExtendedNat::Finite(best.unwrap_or(0) as u64)
}

pub fn scan_hom(l: &Language) -> ExtendedNat {
    scan(l, |a, m| {
        let run = Word::repeat(a, m);
        Word::concat(&[&run, &Word::repeat(1 - a, 1), &run])
    })
}

pub fn scan_het(l: &Language) -> ExtendedNat {
    scan(l, |a, m| Word::concat(&[&Word::repeat(a, m), &Word::repeat(1 - a, m)]))
}

/// An infinite binary subword-closed language contains arbitrarily long runs
/// of one letter.
pub fn scan_is_infinite(l: &Language) -> bool {
    let top = max_obstruction_len(l) + 1;
    (0..2).any(|a| l.contains(&Word::repeat(a, top)))
}

/// Every word not in `l` contains an obstruction, and an obstruction padded
/// to the longest obstruction length is still outside `l`.
pub fn scan_complement_empty(l: &Language) -> bool {
    let m = max_obstruction_len(l);
    Word::all_of_length(m).all(|u| l.contains(&u))
}
