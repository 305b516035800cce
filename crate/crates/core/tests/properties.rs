mod common;

use proptest::prelude::*;
use subword_trees::builders::{block_width, build_certificate_7t, decompose};
use subword_trees::oracle::{
    brute_slice, exact_h_ma, exact_h_md, exact_h_ra, exact_h_rd, exact_recognition_tree,
    OracleCaps,
};
use subword_trees::{
    canonicalize_antichain, count_slice, hom, is_subsequence, slice, DecisionTree, Language,
    Mode, Problem, Word,
};

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_len).prop_flat_map(|len| (0..1u64 << len).prop_map(move |c| Word::from_code(c, len)))
}

fn language() -> impl Strategy<Value = Language> {
    prop::collection::vec(word(5), 1..=4)
        .prop_map(|ws| Language::new("p", canonicalize_antichain(ws)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_is_downward_closed(l in language(), w in word(8)) {
        if l.contains(&w) {
            for i in 0..w.len() {
                let mut bits = w.bits().to_vec();
                bits.remove(i);
                prop_assert!(l.contains(&Word::from(bits)));
            }
        }
        let blocked = l.obstructions().members().iter().any(|f| is_subsequence(f, &w));
        prop_assert_eq!(l.contains(&w), !blocked);
    }

    #[test]
    fn slices_match_the_filter(l in language(), n in 0usize..=9) {
        let s = slice(&l, n);
        prop_assert_eq!(&s, &brute_slice(&l, n).unwrap());
        prop_assert_eq!(count_slice(&l, n), s.len().into());
    }

    #[test]
    fn depth_sandwich(l in language(), n in 1usize..=6) {
        let caps = OracleCaps::default();
        let (rd, ra) = (exact_h_rd(&l, n, &caps).unwrap(), exact_h_ra(&l, n, &caps).unwrap());
        let (md, ma) = (exact_h_md(&l, n, &caps).unwrap(), exact_h_ma(&l, n, &caps).unwrap());
        prop_assert!(ra <= rd && rd <= n);
        prop_assert!(ma <= md && md <= n);
        let size = slice(&l, n).len();
        prop_assert!(rd >= common::ceil_log2(size.max(1)));
    }

    #[test]
    fn tree_documents_round_trip(l in language(), n in 1usize..=6, det in any::<bool>()) {
        let mode = if det { Mode::Det } else { Mode::Nondet };
        let tree = exact_recognition_tree(&l, n, mode, &OracleCaps::default()).unwrap();
        let back = DecisionTree::from_json(&tree.to_json(), Problem::Recognition).unwrap();
        prop_assert_eq!(back, tree);
    }

    #[test]
    fn members_decompose(l in language(), n in 0usize..=10) {
        if let Some(h) = hom(&l).finite() {
            for u in slice(&l, n) {
                let d = decompose(&l, &u).unwrap();
                prop_assert_eq!(d.word(), u);
                prop_assert!(d.width() <= 2 * h as usize);
            }
        }
    }

    #[test]
    fn certificates_separate(l in language()) {
        if let Some(t) = block_width(&l) {
            let n = 10 * t;
            prop_assume!(n <= 20);
            let words = slice(&l, n);
            for u in &words {
                let c = build_certificate_7t(&l, n, u).unwrap();
                prop_assert!(c.len() <= 7 * t);
                prop_assert!(c.first_unseparated(u, &words).is_none());
            }
        }
    }
}
