//! reqlint — a requirements-document linter and corpus profiler.
//!
//! The library ingests specification files into corpora of requirements,
//! segments and tokenizes text under explicit counting conventions, tags
//! closed-class words (conjunctions, pronouns) with a lexicon plus
//! deterministic context rules, applies writing-rule checks derived from
//! requirements-engineering guidance, and computes genre statistics
//! (conjunction/pronoun frequencies, sentence-length distributions) that can
//! be compared across corpora.
//!
//! Every capability has a runnable example under `examples/`; the `reqlint`
//! binary exposes the same pipeline as `analyze` and `compare` subcommands.

pub mod cli;
pub mod corpus;
pub mod language;
pub mod lexicon;
pub mod pipeline;
pub mod report;
pub mod rules;
pub mod segment;
pub mod stats;

pub use corpus::{Corpus, CorpusContent, CorpusMode, IngestError, Requirement};
pub use language::Language;
pub use lexicon::{CategoryTag, Lexicon, LexiconError, Major, PronounSubtype, Provenance};
pub use pipeline::{
    analyze_corpus, analyze_with_builtins, segmenter_for, AnalyzedCorpus, AnalyzedUnit,
};
pub use report::{exit_status, ComparisonReport, FailOn, Report, Summary};
pub use rules::{run_all, Classification, ConfigError, Finding, RuleConfig, RuleId, Severity};
pub use segment::{Segmenter, Sentence, Token, TokenKind};
pub use stats::{
    compare_corpora, compute_stats, truncate_corpus, ComparisonTable, CorpusStats, StatsError,
    TruncateError,
};
