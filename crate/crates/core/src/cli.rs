//! The `subword-trees` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or invalid input
//! document, 3 a builder or oracle precondition does not hold, 4 a tree
//! failed validation.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::automaton::SliceAutomaton;
use crate::builders::{
    build_certificate_7t, build_distinguishing_set_tree, build_membership_trees,
    nondet_tree_from_certificates, BlockHalvingStrategy,
};
use crate::dimensions::{classify, het, hom, DimensionReport};
use crate::language::{load_language, Language};
use crate::oracle::{
    constructed_h_rd, depth_profile, exact_membership_tree, exact_recognition_tree, Cell,
    DepthProfile, Measure, OracleCaps, ProfileRow, Source,
};
use crate::strategy::materialize;
use crate::tree::{validate, DecisionTree, Mode, Problem, TreeError, Validation};

/// Largest `n` for which the block-halving strategy is written out as a tree.
pub const MATERIALIZE_MAX_N: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "subword-trees", version, about = "Decision trees for binary subword-closed languages")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the dimensions, finiteness flags and class of a language.
    Classify {
        language: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// List the words of length n, or count them.
    Enumerate {
        language: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Minimum decision-tree depths over a range of word lengths.
    Depths(DepthsArgs),
    /// Build a decision tree and write it as a JSON document.
    BuildTree(BuildArgs),
    /// Check that a tree document solves its problem.
    Validate {
        tree: PathBuf,
        language: PathBuf,
        #[arg(short = 'n', long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = ProblemArg::Recognition)]
        problem: ProblemArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Det)]
        mode: ModeArg,
    },
}

#[derive(Debug, Args)]
struct DepthsArgs {
    #[arg(required = true)]
    languages: Vec<PathBuf>,
    /// A single length or an inclusive range `lo..hi`.
    #[arg(short = 'n', long = "n-range", visible_alias = "n")]
    n_range: NRange,
    #[arg(long, value_delimiter = ',', default_value = "rd,ra,md,ma")]
    measures: Vec<Measure>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Algorithm::Exact)]
    algorithm: Algorithm,
    /// Fill rd cells past the caps with the simulated strategy depth.
    #[arg(long)]
    allow_constructed: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Debug, Args)]
struct BuildArgs {
    language: PathBuf,
    #[arg(short = 'n', long = "n")]
    n: usize,
    #[arg(long, value_enum, default_value_t = ProblemArg::Recognition)]
    problem: ProblemArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Det)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Algorithm::Exact)]
    algorithm: Algorithm,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a Graphviz rendering of the tree.
    #[arg(long)]
    dot: Option<PathBuf>,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Largest word length the exact oracles accept.
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest slice the exact recognition oracles accept.
    #[arg(long)]
    max_slice: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> OracleCaps {
        let mut caps = OracleCaps::default();
        if let Some(n) = self.max_n {
            caps.recognition_max_n = n;
            caps.membership_max_n = n;
        }
        if let Some(s) = self.max_slice {
            caps.max_slice = s;
        }
        caps
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

/// Exhaustive optimal trees, or the constructive builders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Exact,
    /// Block-halving strategy, certificates, distinguishing sets and the
    /// trivial membership trees.
    #[value(name = "paper", alias = "constructive")]
    Constructive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemArg {
    Recognition,
    Membership,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Recognition => Problem::Recognition,
            ProblemArg::Membership => Problem::Membership,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Det,
    Nondet,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Det => Mode::Det,
            ModeArg::Nondet => Mode::Nondet,
        }
    }
}

/// Inclusive range of word lengths, written `lo..hi` or as a single number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!("range {s:?} must satisfy 1 <= lo <= hi"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Invalid(_) => 4,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Classify { language, format } => cmd_classify(&language, format, out),
        Command::Enumerate { language, n, count_only } => cmd_enumerate(&language, n, count_only, out),
        Command::Depths(args) => cmd_depths(&args, out),
        Command::BuildTree(args) => cmd_build_tree(&args, out, err),
        Command::Validate { tree, language, n, problem, mode } => {
            cmd_validate(&tree, &language, n, problem.into(), mode.into(), out)
        }
    }
}

fn language(path: &Path) -> Result<Language, CliError> {
    load_language(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct NamedReport<'a> {
    language: &'a str,
    #[serde(flatten)]
    report: &'a DimensionReport,
}

fn cmd_classify(path: &Path, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let lang = language(path)?;
    let r = classify(&lang);
    let p = r.predictions;
    let shortest = r.shortest_complement_word_length.map_or("none".to_string(), |l| l.to_string());
    match format {
        Format::Table => {
            writeln!(out, "language: {lang}")?;
            writeln!(
                out,
                "class={}, hom={}, het={}, finite={}, complement_empty={}, shortest_complement={}",
                r.class_index.index(),
                r.hom,
                r.het,
                r.is_finite_language,
                r.complement_empty,
                shortest
            )?;
            writeln!(out, "predictions: rd={} ra={} md={} ma={}", p.rd, p.ra, p.md, p.ma)?;
        }
        Format::Csv => {
            writeln!(out, "language,class,hom,het,finite,complement_empty,shortest_complement,rd,ra,md,ma")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                lang.name(),
                r.class_index.index(),
                r.hom,
                r.het,
                r.is_finite_language,
                r.complement_empty,
                r.shortest_complement_word_length.map_or(String::new(), |l| l.to_string()),
                p.rd,
                p.ra,
                p.md,
                p.ma
            )?;
        }
        Format::Json => {
            let doc = NamedReport { language: lang.name(), report: &r };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("reports serialize"))?;
        }
    }
    Ok(())
}

fn cmd_enumerate(path: &Path, n: usize, count_only: bool, out: &mut dyn Write) -> Result<(), CliError> {
    let lang = language(path)?;
    let automaton = SliceAutomaton::new(&lang);
    if count_only {
        writeln!(out, "{}", automaton.count(n))?;
    } else {
        for w in automaton.words(n) {
            writeln!(out, "{w}")?;
        }
    }
    Ok(())
}

/// Rows whose rd cell is the simulated worst case of the block-halving
/// strategy.
fn strategy_profile(lang: &Language, args: &DepthsArgs) -> DepthProfile {
    let skipped = Cell { value: None, source: Source::Skipped };
    let rows = (args.n_range.lo..=args.n_range.hi)
        .map(|n| ProfileRow {
            n,
            rd: constructed_h_rd(lang, n)
                .map_or(skipped, |v| Cell { value: Some(v), source: Source::Constructed }),
            ra: skipped,
            md: skipped,
            ma: skipped,
        })
        .collect();
    DepthProfile { language: lang.name().to_string(), class: classify(lang).class_index, rows }
}

const DEPTH_COLUMNS: [&str; 11] = [
    "language", "n", "h_rd", "h_ra", "h_md", "h_ma", "class", "source_rd", "source_ra", "source_md",
    "source_ma",
];

fn depth_record(profile: &DepthProfile, row: &ProfileRow) -> Vec<String> {
    let mut record = vec![profile.language.clone(), row.n.to_string()];
    for m in Measure::ALL {
        record.push(row.cell(m).value.map_or(String::new(), |v| v.to_string()));
    }
    record.push(profile.class.index().to_string());
    for m in Measure::ALL {
        record.push(row.cell(m).source.to_string());
    }
    record
}

fn cmd_depths(args: &DepthsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.algorithm == Algorithm::Constructive && args.measures.iter().any(|&m| m != Measure::Rd) {
        return Err(CliError::Usage("--algorithm paper only computes the rd measure".into()));
    }
    let caps = args.caps.caps();
    let langs = args.languages.iter().map(|p| language(p)).collect::<Result<Vec<_>, _>>()?;
    let profiles: Vec<DepthProfile> = langs
        .iter()
        .map(|lang| match args.algorithm {
            Algorithm::Exact => depth_profile(
                lang,
                args.n_range.lo..=args.n_range.hi,
                &args.measures,
                args.allow_constructed,
                &caps,
            ),
            Algorithm::Constructive => strategy_profile(lang, args),
        })
        .collect();
    let records: Vec<Vec<String>> = profiles
        .iter()
        .flat_map(|p| p.rows.iter().map(move |r| depth_record(p, r)))
        .collect();
    let mut text = String::new();
    match args.format {
        Format::Csv => {
            text.push_str(&DEPTH_COLUMNS.join(","));
            text.push('\n');
            for r in &records {
                text.push_str(&r.join(","));
                text.push('\n');
            }
        }
        Format::Table => {
            let mut widths: Vec<usize> = DEPTH_COLUMNS.iter().map(|c| c.len()).collect();
            for r in &records {
                for (w, cell) in widths.iter_mut().zip(r) {
                    *w = (*w).max(cell.len());
                }
            }
            let header: Vec<String> = DEPTH_COLUMNS.iter().map(|c| c.to_string()).collect();
            for r in std::iter::once(&header).chain(&records) {
                let line: Vec<String> =
                    r.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
                let _ = writeln!(text, "{}", line.join("  ").trim_end());
            }
        }
        Format::Json => {
            text = serde_json::to_string_pretty(&profiles).expect("profiles serialize");
            text.push('\n');
        }
    }
    emit(&text, args.out.as_deref(), out)
}

/// What the block-halving strategy reports when the tree is too large to
/// write out.
#[derive(Serialize)]
struct StrategyReport<'a> {
    language: &'a str,
    n: usize,
    strategy: &'static str,
    block_width: usize,
    query_bound: usize,
    /// Worst case over the slice, when it was small enough to simulate.
    max_queries: Option<usize>,
}

/// Result of [`build_tree`]: a tree, or for deterministic block-halving
/// recognition past [`MATERIALIZE_MAX_N`] a JSON report of its query bound.
pub enum Built {
    Tree(DecisionTree),
    Report(String),
}

/// Builds the tree `build-tree` writes. Errors describe the unmet
/// precondition of the chosen oracle or builder.
pub fn build_tree(
    lang: &Language,
    n: usize,
    problem: Problem,
    mode: Mode,
    algorithm: Algorithm,
    caps: &OracleCaps,
) -> Result<Built, String> {
    let pre = |e: &dyn std::fmt::Display| e.to_string();
    let tree = match (problem, algorithm) {
        (Problem::Membership, Algorithm::Exact) => {
            exact_membership_tree(lang, n, mode, caps).map_err(|e| pre(&e))?
        }
        (Problem::Membership, Algorithm::Constructive) => build_membership_trees(lang, n).map_err(|e| pre(&e))?,
        (Problem::Recognition, Algorithm::Exact) => {
            exact_recognition_tree(lang, n, mode, caps).map_err(|e| pre(&e))?
        }
        (Problem::Recognition, Algorithm::Constructive) => {
            if !hom(lang).is_finite() {
                return Err("the constructive recognizers need a finite homogeneity dimension".into());
            }
            if het(lang).is_finite() {
                build_distinguishing_set_tree(lang, n).map_err(|e| pre(&e))?
            } else {
                let strategy = BlockHalvingStrategy::new(lang, n).map_err(|e| pre(&e))?;
                let automaton = SliceAutomaton::new(lang);
                match mode {
                    Mode::Det if n <= MATERIALIZE_MAX_N => {
                        let words: Vec<_> = automaton.words(n).collect();
                        materialize(&strategy, &words, strategy.query_bound()).map_err(|e| pre(&e))?
                    }
                    Mode::Det => {
                        let report = StrategyReport {
                            language: lang.name(),
                            n,
                            strategy: "block-halving",
                            block_width: strategy.block_width(),
                            query_bound: strategy.query_bound(),
                            max_queries: constructed_h_rd(lang, n),
                        };
                        let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
                        text.push('\n');
                        return Ok(Built::Report(text));
                    }
                    Mode::Nondet => {
                        let certs = automaton
                            .words(n)
                            .map(|w| build_certificate_7t(lang, n, &w).map(|c| (w, c)))
                            .collect::<Result<_, _>>()
                            .map_err(|e| pre(&e))?;
                        nondet_tree_from_certificates(lang, n, &certs).map_err(|e| pre(&e))?
                    }
                }
            }
        }
    };
    Ok(Built::Tree(tree))
}

fn cmd_build_tree(args: &BuildArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let lang = language(&args.language)?;
    let built = build_tree(&lang, args.n, args.problem.into(), args.mode.into(), args.algorithm, &args.caps.caps())
        .map_err(CliError::Precondition)?;
    match built {
        Built::Report(text) => emit(&text, args.out.as_deref(), out),
        Built::Tree(tree) => {
            let mut text = tree.to_json();
            text.push('\n');
            emit(&text, args.out.as_deref(), out)?;
            if let Some(dot) = &args.dot {
                fs::write(dot, tree.to_dot())?;
            }
            writeln!(err, "depth {}, {} leaves", tree.depth(), tree.leaf_count())?;
            Ok(())
        }
    }
}

fn cmd_validate(
    tree_path: &Path,
    lang_path: &Path,
    n: usize,
    problem: Problem,
    mode: Mode,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let text = fs::read_to_string(tree_path)
        .map_err(|e| CliError::Input(format!("{}: {e}", tree_path.display())))?;
    let tree = DecisionTree::from_json(&text, problem)
        .map_err(|e| CliError::Input(format!("{}: {e}", tree_path.display())))?;
    let lang = language(lang_path)?;
    match validate(&tree, &lang, n, problem, mode) {
        Ok(Validation::Pass) => {
            writeln!(out, "pass: {problem} {mode} n={n} depth={}", tree.depth())?;
            Ok(())
        }
        Ok(Validation::Fail(v)) => {
            writeln!(out, "fail: {v}")?;
            if let Some(w) = v.witness() {
                writeln!(out, "witness: {w}")?;
            }
            Err(CliError::Invalid(format!("tree does not solve {problem} for n={n}")))
        }
        Err(e @ TreeError::TooLarge(_)) => Err(CliError::Precondition(e.to_string())),
        Err(e) => Err(CliError::Input(format!("{}: {e}", tree_path.display()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("1..6".parse::<NRange>(), Ok(NRange { lo: 1, hi: 6 }));
        assert_eq!("1..=6".parse::<NRange>(), Ok(NRange { lo: 1, hi: 6 }));
        assert_eq!("4".parse::<NRange>(), Ok(NRange { lo: 4, hi: 4 }));
        assert!("0..3".parse::<NRange>().is_err());
        assert!("5..3".parse::<NRange>().is_err());
        assert!("a..3".parse::<NRange>().is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(run(["subword-trees", "frobnicate"], &mut out, &mut err), 1);
        assert_eq!(run(["subword-trees", "--help"], &mut out, &mut err), 0);
    }
}
