//! Decision trees over `L(n)`: structure, depth, solving-condition
//! validators, the JSON document format and DOT export.
//!
//! The unlabeled root of a tree is implicit; [`DecisionTree::root_children`]
//! lists the nodes entered by the root's outgoing edges. A deterministic tree
//! has exactly one such child. A complete path runs from the root to a leaf,
//! and its constraint set `E(n, ξ)` is every length-`n` word that agrees with
//! each `(position, bit)` pair on the path.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::SliceAutomaton;
use crate::language::Language;
use crate::word::{Word, WordError};

/// Largest `n` for which membership validation enumerates `E*(n)`.
pub const MEMBERSHIP_VALIDATION_MAX_N: usize = 16;
/// Largest slice recognition validation will enumerate.
pub const RECOGNITION_VALIDATION_MAX_SLICE: usize = 65536;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Recognition,
    Membership,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Det,
    Nondet,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Recognition => "recognition",
            Problem::Membership => "membership",
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Det => "det",
            Mode::Nondet => "nondet",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Word(Word),
    Bit(u8),
}

impl Label {
    fn problem(&self) -> Problem {
        match self {
            Label::Word(_) => Problem::Recognition,
            Label::Bit(_) => Problem::Membership,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Word(w) => write!(f, "{w}"),
            Label::Bit(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub bit: u8,
    pub child: Node,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Node {
    /// Queries the letter at a 1-based position.
    Branch { position: usize, edges: Vec<Edge> },
    Leaf(Label),
}

impl Node {
    pub fn word_leaf(w: Word) -> Node {
        Node::Leaf(Label::Word(w))
    }

    pub fn bit_leaf(b: u8) -> Node {
        Node::Leaf(Label::Bit(b))
    }

    pub fn branch(position: usize, edges: Vec<(u8, Node)>) -> Node {
        Node::Branch {
            position,
            edges: edges.into_iter().map(|(bit, child)| Edge { bit, child }).collect(),
        }
    }

    /// A chain that checks each `(position, bit)` in turn and ends in `leaf`.
    pub fn chain(assignments: &[(usize, u8)], leaf: Node) -> Node {
        assignments
            .iter()
            .rev()
            .fold(leaf, |child, &(position, bit)| Node::branch(position, vec![(bit, child)]))
    }

    fn depth(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Branch { edges, .. } => 1 + edges.iter().map(|e| e.child.depth()).max().unwrap_or(0),
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Node)) {
        f(self);
        if let Node::Branch { edges, .. } = self {
            for e in edges {
                e.child.visit(f);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DecisionTree {
    root_children: Vec<Node>,
}

impl DecisionTree {
    pub fn deterministic(node: Node) -> Self {
        DecisionTree { root_children: vec![node] }
    }

    pub fn nondeterministic(children: Vec<Node>) -> Self {
        DecisionTree { root_children: children }
    }

    /// The tree used when `L(n) = ∅`: nothing to recognize, depth 0.
    pub fn empty() -> Self {
        DecisionTree { root_children: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.root_children.is_empty()
    }

    pub fn root_children(&self) -> &[Node] {
        &self.root_children
    }

    /// Maximum number of query nodes on a complete path.
    pub fn depth(&self) -> usize {
        self.root_children.iter().map(Node::depth).max().unwrap_or(0)
    }

    fn nodes(&self) -> Vec<&Node> {
        let mut out = Vec::new();
        for c in &self.root_children {
            c.visit(&mut |n| out.push(n));
        }
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes().into_iter().filter(|n| matches!(n, Node::Leaf(_))).count()
    }

    /// Structural determinism: one root child and pairwise different edge bits.
    pub fn is_deterministic(&self) -> bool {
        self.determinism_defect().is_none()
    }

    fn determinism_defect(&self) -> Option<String> {
        if self.root_children.len() != 1 {
            return Some(format!("root has {} outgoing edges", self.root_children.len()));
        }
        self.nodes().into_iter().find_map(|n| match n {
            Node::Branch { position, edges } => {
                let mut seen = [false; 2];
                for e in edges {
                    if std::mem::replace(&mut seen[e.bit as usize], true) {
                        return Some(format!("node x_{position} has two edges labeled {}", e.bit));
                    }
                }
                None
            }
            Node::Leaf(_) => None,
        })
    }

    fn check_shape(&self, n: usize, problem: Problem) -> Result<(), TreeError> {
        for node in self.nodes() {
            match node {
                Node::Branch { position, edges } => {
                    if *position == 0 || *position > n {
                        return Err(TreeError::PositionOutOfRange { position: *position, n });
                    }
                    if let Some(e) = edges.iter().find(|e| e.bit > 1) {
                        return Err(TreeError::InvalidBit(e.bit));
                    }
                }
                Node::Leaf(label) => {
                    if label.problem() != problem {
                        return Err(TreeError::LabelKind { expected: problem });
                    }
                    if let Label::Bit(b) = label {
                        if *b > 1 {
                            return Err(TreeError::InvalidBit(*b));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("query position {position} outside 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("edge or leaf value {0} is not a bit")]
    InvalidBit(u8),
    #[error("leaf labels do not match the {expected} problem")]
    LabelKind { expected: Problem },
    #[error("validation universe too large: {0}")]
    TooLarge(String),
    #[error("malformed tree document: {0}")]
    Malformed(String),
    #[error("invalid leaf word {word:?}: {source}")]
    InvalidLeaf {
        word: String,
        #[source]
        source: WordError,
    },
}

/// A complete path: index of the root child followed by `(position, bit)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathTrace {
    pub root_child: usize,
    pub steps: Vec<(usize, u8)>,
}

impl fmt::Display for PathTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root[{}]", self.root_child)?;
        for (p, b) in &self.steps {
            write!(f, " x_{p}={b}")?;
        }
        Ok(())
    }
}

/// Why a tree fails to solve its problem. Bullets follow the three solving
/// conditions: leaf labels are admissible, every word reaches a leaf, and
/// every leaf a word reaches carries the right answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotDeterministic(String),
    InadmissibleLeaf { label: String, path: PathTrace },
    Uncovered { word: Word },
    WrongAnswer { word: Word, label: String, path: PathTrace },
}

impl Violation {
    pub fn bullet(&self) -> Option<u8> {
        match self {
            Violation::NotDeterministic(_) => None,
            Violation::InadmissibleLeaf { .. } => Some(1),
            Violation::Uncovered { .. } => Some(2),
            Violation::WrongAnswer { .. } => Some(3),
        }
    }

    pub fn witness(&self) -> Option<&Word> {
        match self {
            Violation::Uncovered { word } | Violation::WrongAnswer { word, .. } => Some(word),
            _ => None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotDeterministic(why) => write!(f, "not deterministic: {why}"),
            Violation::InadmissibleLeaf { label, path } => {
                write!(f, "condition 1: leaf label {label:?} not admissible on path {path}")
            }
            Violation::Uncovered { word } => {
                write!(f, "condition 2: word {word} lies on no complete path")
            }
            Violation::WrongAnswer { word, label, path } => {
                write!(f, "condition 3: word {word} reaches leaf {label:?} via {path}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Pass,
    Fail(Violation),
}

impl Validation {
    pub fn is_pass(&self) -> bool {
        matches!(self, Validation::Pass)
    }
}

fn leaf_paths<'a>(
    node: &'a Node,
    steps: &mut Vec<(usize, u8)>,
    out: &mut Vec<(Vec<(usize, u8)>, &'a Label)>,
) {
    match node {
        Node::Leaf(l) => out.push((steps.clone(), l)),
        Node::Branch { position, edges } => {
            for e in edges {
                steps.push((*position, e.bit));
                leaf_paths(&e.child, steps, out);
                steps.pop();
            }
        }
    }
}

/// Every leaf whose path constraints `w` satisfies.
fn reached<'a>(
    node: &'a Node,
    w: &Word,
    steps: &mut Vec<(usize, u8)>,
    out: &mut Vec<(Vec<(usize, u8)>, &'a Label)>,
) {
    match node {
        Node::Leaf(l) => out.push((steps.clone(), l)),
        Node::Branch { position, edges } => {
            let letter = w.letter(*position);
            for e in edges.iter().filter(|e| e.bit == letter) {
                steps.push((*position, e.bit));
                reached(&e.child, w, steps, out);
                steps.pop();
            }
        }
    }
}

fn check_paths(
    tree: &DecisionTree,
    universe: impl Iterator<Item = Word>,
    admissible: impl Fn(&Label) -> bool,
    answer: impl Fn(&Word) -> Label,
) -> Validation {
    for (i, child) in tree.root_children.iter().enumerate() {
        let mut leaves = Vec::new();
        leaf_paths(child, &mut Vec::new(), &mut leaves);
        if let Some((steps, label)) = leaves.into_iter().find(|(_, l)| !admissible(l)) {
            return Validation::Fail(Violation::InadmissibleLeaf {
                label: label.to_string(),
                path: PathTrace { root_child: i, steps },
            });
        }
    }
    for w in universe {
        let expected = answer(&w);
        let mut covered = false;
        for (i, child) in tree.root_children.iter().enumerate() {
            let mut hits = Vec::new();
            reached(child, &w, &mut Vec::new(), &mut hits);
            for (steps, label) in hits {
                covered = true;
                if *label != expected {
                    return Validation::Fail(Violation::WrongAnswer {
                        word: w.clone(),
                        label: label.to_string(),
                        path: PathTrace { root_child: i, steps },
                    });
                }
            }
        }
        if !covered {
            return Validation::Fail(Violation::Uncovered { word: w });
        }
    }
    Validation::Pass
}

/// Checks that `tree` solves recognition for `L(n)` in the given mode.
pub fn validate_recognition(
    tree: &DecisionTree,
    language: &Language,
    n: usize,
    mode: Mode,
) -> Result<Validation, TreeError> {
    tree.check_shape(n, Problem::Recognition)?;
    let automaton = SliceAutomaton::new(language);
    let size = automaton.count(n);
    if size > RECOGNITION_VALIDATION_MAX_SLICE.into() {
        return Err(TreeError::TooLarge(format!("|L({n})| = {size}")));
    }
    let members: HashSet<Word> = automaton.words(n).collect();
    if members.is_empty() && tree.is_empty() {
        return Ok(Validation::Pass);
    }
    if mode == Mode::Det {
        if let Some(why) = tree.determinism_defect() {
            return Ok(Validation::Fail(Violation::NotDeterministic(why)));
        }
    }
    let mut universe: Vec<Word> = members.iter().cloned().collect();
    universe.sort();
    Ok(check_paths(
        tree,
        universe.into_iter(),
        |l| matches!(l, Label::Word(w) if members.contains(w)),
        |w| Label::Word(w.clone()),
    ))
}

/// Checks that `tree` solves membership for `L(n)` over all of `E*(n)`.
pub fn validate_membership(
    tree: &DecisionTree,
    language: &Language,
    n: usize,
    mode: Mode,
) -> Result<Validation, TreeError> {
    tree.check_shape(n, Problem::Membership)?;
    if n > MEMBERSHIP_VALIDATION_MAX_N {
        return Err(TreeError::TooLarge(format!("2^{n} words")));
    }
    if mode == Mode::Det {
        if let Some(why) = tree.determinism_defect() {
            return Ok(Validation::Fail(Violation::NotDeterministic(why)));
        }
    }
    Ok(check_paths(
        tree,
        Word::all_of_length(n),
        |l| matches!(l, Label::Bit(_)),
        |w| Label::Bit(language.contains(w) as u8),
    ))
}

pub fn validate(
    tree: &DecisionTree,
    language: &Language,
    n: usize,
    problem: Problem,
    mode: Mode,
) -> Result<Validation, TreeError> {
    match problem {
        Problem::Recognition => validate_recognition(tree, language, n, mode),
        Problem::Membership => validate_membership(tree, language, n, mode),
    }
}

// Document format.

#[derive(Serialize, Deserialize)]
struct TreeDoc {
    children: Vec<NodeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NodeDoc {
    Branch { query: usize, edges: Vec<EdgeDoc> },
    Leaf { leaf: String },
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    bit: u8,
    child: NodeDoc,
}

impl From<&Node> for NodeDoc {
    fn from(node: &Node) -> Self {
        match node {
            Node::Leaf(l) => NodeDoc::Leaf { leaf: l.to_string() },
            Node::Branch { position, edges } => NodeDoc::Branch {
                query: *position,
                edges: edges.iter().map(|e| EdgeDoc { bit: e.bit, child: (&e.child).into() }).collect(),
            },
        }
    }
}

impl NodeDoc {
    fn into_node(self, problem: Problem) -> Result<Node, TreeError> {
        match self {
            NodeDoc::Leaf { leaf } => match problem {
                Problem::Recognition => leaf
                    .parse()
                    .map(Node::word_leaf)
                    .map_err(|source| TreeError::InvalidLeaf { word: leaf, source }),
                Problem::Membership => match leaf.as_str() {
                    "0" => Ok(Node::bit_leaf(0)),
                    "1" => Ok(Node::bit_leaf(1)),
                    _ => Err(TreeError::Malformed(format!("membership leaf {leaf:?} is not a bit"))),
                },
            },
            NodeDoc::Branch { query, edges } => Ok(Node::Branch {
                position: query,
                edges: edges
                    .into_iter()
                    .map(|e| Ok(Edge { bit: e.bit, child: e.child.into_node(problem)? }))
                    .collect::<Result<_, TreeError>>()?,
            }),
        }
    }
}

impl DecisionTree {
    pub fn to_json(&self) -> String {
        let doc = TreeDoc { children: self.root_children.iter().map(NodeDoc::from).collect() };
        serde_json::to_string_pretty(&doc).expect("tree documents always serialize")
    }

    /// Parses a tree document; leaf strings are read as words for recognition
    /// and as bits for membership.
    pub fn from_json(text: &str, problem: Problem) -> Result<Self, TreeError> {
        let mut de = serde_json::Deserializer::from_str(text);
        de.disable_recursion_limit();
        let doc = TreeDoc::deserialize(&mut de).map_err(|e| TreeError::Malformed(e.to_string()))?;
        de.end().map_err(|e| TreeError::Malformed(e.to_string()))?;
        let children = doc
            .children
            .into_iter()
            .map(|c| c.into_node(problem))
            .collect::<Result<_, _>>()?;
        Ok(DecisionTree { root_children: children })
    }

    /// Graphviz rendering: query nodes `x_i`, edge labels 0/1, boxed leaves.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph decision_tree {\n  root [shape=point];\n");
        let mut next_id = 0usize;
        for child in &self.root_children {
            let id = dot_node(child, &mut next_id, &mut out);
            let _ = writeln!(out, "  root -> n{id};");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_node(node: &Node, next_id: &mut usize, out: &mut String) -> usize {
    let id = *next_id;
    *next_id += 1;
    match node {
        Node::Leaf(label) => {
            let text = match label {
                Label::Word(w) if w.is_empty() => "λ".to_string(),
                l => l.to_string(),
            };
            let _ = writeln!(out, "  n{id} [label=\"{text}\", shape=box];");
        }
        Node::Branch { position, edges } => {
            let _ = writeln!(out, "  n{id} [label=\"x_{position}\"];");
            for e in edges {
                let child = dot_node(&e.child, next_id, out);
                let _ = writeln!(out, "  n{id} -> n{child} [label=\"{}\"];", e.bit);
            }
        }
    }
    id
}

/// A set of `(position, bit)` assignments with distinct 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Certificate {
    assignments: BTreeMap<usize, u8>,
}

impl Certificate {
    /// The letters of `w` at `positions`.
    pub fn from_word(w: &Word, positions: impl IntoIterator<Item = usize>) -> Self {
        Certificate { assignments: positions.into_iter().map(|p| (p, w.letter(p))).collect() }
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn assignments(&self) -> Vec<(usize, u8)> {
        self.assignments.iter().map(|(&p, &b)| (p, b)).collect()
    }

    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignments.keys().copied()
    }

    pub fn max_position(&self) -> usize {
        self.assignments.keys().next_back().copied().unwrap_or(0)
    }

    /// `u` agrees with every assignment.
    pub fn admits(&self, u: &Word) -> bool {
        self.assignments.iter().all(|(&p, &b)| p <= u.len() && u.letter(p) == b)
    }

    /// First word of `others`, other than `w`, that the certificate fails to
    /// rule out.
    pub fn first_unseparated<'a>(&self, w: &Word, others: &'a [Word]) -> Option<&'a Word> {
        others.iter().find(|u| *u != w && self.admits(u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn l3() -> Language {
        Language::avoiding("L3", &["10"]).unwrap()
    }

    fn l1() -> Language {
        Language::avoiding("L1", &["11"]).unwrap()
    }

    /// Optimal tree for L3(3) = {000, 001, 011, 111}: ask x_2, then x_1 or x_3.
    fn l3_tree(swap: bool) -> DecisionTree {
        let (a, b) = if swap { ("001", "000") } else { ("000", "001") };
        DecisionTree::deterministic(Node::branch(
            2,
            vec![
                (0, Node::branch(3, vec![(0, Node::word_leaf(w(a))), (1, Node::word_leaf(w(b)))])),
                (1, Node::branch(1, vec![(0, Node::word_leaf(w("011"))), (1, Node::word_leaf(w("111")))])),
            ],
        ))
    }

    #[test]
    fn depth_examples() {
        assert_eq!(DecisionTree::deterministic(Node::word_leaf(w("0"))).depth(), 0);
        let chain = Node::chain(&[(1, 0), (2, 1)], Node::bit_leaf(1));
        assert_eq!(DecisionTree::deterministic(chain).depth(), 2);
        assert_eq!(l3_tree(false).depth(), 2);
        assert_eq!(DecisionTree::empty().depth(), 0);
    }

    #[test]
    fn recognition_pass_and_swapped_leaves() {
        assert_eq!(validate_recognition(&l3_tree(false), &l3(), 3, Mode::Det).unwrap(), Validation::Pass);
        match validate_recognition(&l3_tree(true), &l3(), 3, Mode::Det).unwrap() {
            Validation::Fail(v) => {
                assert_eq!(v.bullet(), Some(3));
                assert_eq!(v.witness(), Some(&w("000")));
            }
            Validation::Pass => panic!("swapped leaves must fail"),
        }
    }

    #[test]
    fn nondeterministic_union_of_paths_for_l1() {
        // Minimal certificates of 00, 01 and 10 within L1(2) = {00, 01, 10}.
        let tree = DecisionTree::nondeterministic(vec![
            Node::chain(&[(1, 0), (2, 0)], Node::word_leaf(w("00"))),
            Node::chain(&[(2, 1)], Node::word_leaf(w("01"))),
            Node::chain(&[(1, 1)], Node::word_leaf(w("10"))),
        ]);
        assert!(validate_recognition(&tree, &l1(), 2, Mode::Nondet).unwrap().is_pass());
        assert!(matches!(
            validate_recognition(&tree, &l1(), 2, Mode::Det).unwrap(),
            Validation::Fail(Violation::NotDeterministic(_))
        ));
    }

    #[test]
    fn membership_examples() {
        let full_read = DecisionTree::deterministic(Node::branch(
            1,
            vec![
                (0, Node::branch(2, vec![(0, Node::bit_leaf(1)), (1, Node::bit_leaf(1))])),
                (1, Node::branch(2, vec![(0, Node::bit_leaf(1)), (1, Node::bit_leaf(0))])),
            ],
        ));
        assert!(validate_membership(&full_read, &l1(), 2, Mode::Det).unwrap().is_pass());

        let accept_all = DecisionTree::deterministic(Node::bit_leaf(1));
        let full = Language::avoiding("L2", &[]).unwrap();
        assert!(validate_membership(&accept_all, &full, 5, Mode::Det).unwrap().is_pass());

        match validate_membership(&accept_all, &l1(), 2, Mode::Det).unwrap() {
            Validation::Fail(v) => assert_eq!(v.witness(), Some(&w("11"))),
            Validation::Pass => panic!("11 is not in L1"),
        }
    }

    #[test]
    fn uncovered_word_is_reported() {
        let partial = DecisionTree::deterministic(Node::branch(1, vec![(0, Node::bit_leaf(1))]));
        match validate_membership(&partial, &l1(), 2, Mode::Det).unwrap() {
            Validation::Fail(Violation::Uncovered { word }) => assert_eq!(word, w("10")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn contradictory_repeat_has_empty_constraint_set() {
        // x_1=0 then x_1=1 is unreachable, so its wrong leaf is never checked.
        let tree = DecisionTree::deterministic(Node::branch(
            1,
            vec![
                (0, Node::branch(1, vec![(0, Node::bit_leaf(1)), (1, Node::bit_leaf(0))])),
                (1, Node::bit_leaf(0)),
            ],
        ));
        let l4 = Language::avoiding("L4", &["1"]).unwrap();
        assert!(validate_membership(&tree, &l4, 1, Mode::Det).unwrap().is_pass());
    }

    #[test]
    fn shape_errors() {
        let tree = DecisionTree::deterministic(Node::branch(4, vec![(0, Node::word_leaf(w("000")))]));
        assert!(matches!(
            validate_recognition(&tree, &l3(), 3, Mode::Det),
            Err(TreeError::PositionOutOfRange { position: 4, n: 3 })
        ));
        let bits = DecisionTree::deterministic(Node::bit_leaf(1));
        assert!(matches!(
            validate_recognition(&bits, &l3(), 3, Mode::Det),
            Err(TreeError::LabelKind { .. })
        ));
    }

    #[test]
    fn inadmissible_leaf_is_bullet_one() {
        let tree = DecisionTree::deterministic(Node::word_leaf(w("110")));
        let Validation::Fail(v) = validate_recognition(&tree, &l3(), 3, Mode::Det).unwrap() else {
            panic!()
        };
        assert_eq!(v.bullet(), Some(1));
    }

    #[test]
    fn empty_slice_accepts_empty_tree() {
        let none = Language::avoiding("none", &[""]).unwrap();
        assert!(validate_recognition(&DecisionTree::empty(), &none, 3, Mode::Det).unwrap().is_pass());
    }

    #[test]
    fn json_roundtrip_and_format() {
        let tree = l3_tree(false);
        let text = tree.to_json();
        assert!(text.contains("\"query\": 2"));
        assert_eq!(DecisionTree::from_json(&text, Problem::Recognition).unwrap(), tree);

        let doc = r#"{"children":[{"leaf":"1"}]}"#;
        let parsed = DecisionTree::from_json(doc, Problem::Membership).unwrap();
        assert_eq!(parsed, DecisionTree::deterministic(Node::bit_leaf(1)));
        let as_word = DecisionTree::from_json(doc, Problem::Recognition).unwrap();
        assert_eq!(as_word, DecisionTree::deterministic(Node::word_leaf(w("1"))));

        assert!(matches!(
            DecisionTree::from_json(r#"{"children":[{"leaf":"2"}]}"#, Problem::Membership),
            Err(TreeError::Malformed(_))
        ));
        assert!(DecisionTree::from_json("[]", Problem::Membership).is_err());
    }

    #[test]
    fn dot_export_labels() {
        let dot = l3_tree(false).to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("label=\"x_2\""));
        assert!(dot.contains("shape=box"));
        assert!(dot.contains("[label=\"1\"]"));
    }

    #[test]
    fn certificate_admits_and_separates() {
        let c = Certificate::from_word(&w("001"), [2, 3]);
        assert_eq!(c.assignments(), vec![(2, 0), (3, 1)]);
        let slice = vec![w("000"), w("001"), w("011"), w("111")];
        assert!(c.first_unseparated(&w("001"), &slice).is_none());
        let weak = Certificate::from_word(&w("001"), [3]);
        assert_eq!(weak.first_unseparated(&w("001"), &slice), Some(&w("011")));
    }
}
