//! The `reqlint` command line: `analyze` lints requirement files and prints
//! findings plus statistics, `compare` profiles several corpora side by side.
//!
//! Requirement files are detected by their `[REQ <id>]` delimiters; files
//! without delimiters are treated as plain corpora (the whole file becomes
//! one unit for rule checks).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::corpus::{self, corpus_name_from_path, parse_plain_str, parse_requirement_str, Corpus};
use crate::language::Language;
use crate::lexicon::Lexicon;
use crate::pipeline::{analyze_corpus, segmenter_for};
use crate::report::{ComparisonReport, FailOn, Report, EXIT_DATA, EXIT_USAGE};
use crate::rules::{run_all, RuleConfig, RuleId};
use crate::segment::Segmenter;
use crate::stats::{compare_corpora, compute_stats, truncate_corpus_with, CorpusStats};

#[derive(Debug, Parser)]
#[command(
    name = "reqlint",
    version,
    about = "Requirements-document linter and corpus profiler"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check requirement files against the writing rules and report
    /// per-corpus statistics.
    Analyze(AnalyzeArgs),
    /// Compute and compare statistics across two or more corpora.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Input language (fr or en).
    #[arg(long, default_value = "fr")]
    lang: Language,
    /// Extra lexicon file layered over the builtin one.
    #[arg(long, value_name = "PATH")]
    lexicon: Option<PathBuf>,
    /// Rule configuration file (`key = value` lines).
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Flag sentences with more than this many words.
    #[arg(long, value_name = "N")]
    long_sentence_threshold: Option<usize>,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Disable rules (comma-separated, e.g. `R1,R4`).
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    disable: Vec<RuleId>,
    /// Also report mandatory (grammatically required) uses.
    #[arg(long)]
    report_mandatory: bool,
    /// Which severities make the exit status non-zero.
    #[arg(long, default_value = "warning", value_name = "error|warning|never")]
    fail_on: FailOn,
    /// Requirement or plain-text files to analyze.
    #[arg(required = true, value_name = "FILE")]
    files: Vec<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Truncate every corpus to this many words before comparing.
    #[arg(long, value_name = "N", conflicts_with = "truncate_to_smallest")]
    truncate_to: Option<usize>,
    /// Truncate every corpus to the size of the smallest one.
    #[arg(long)]
    truncate_to_smallest: bool,
    /// Corpus files to compare (at least two).
    #[arg(required = true, num_args = 2.., value_name = "FILE")]
    files: Vec<PathBuf>,
}

/// Parse `args` and run. Returns the process exit code; output goes to
/// stdout, diagnostics and errors to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not usage errors.
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = err.print();
                return 0;
            }
            let _ = err.print();
            return EXIT_USAGE;
        }
    };
    match cli.command {
        Command::Analyze(args) => match cmd_analyze(&args) {
            Ok((report, rendered)) => {
                print_stdout(&rendered);
                report.exit_status
            }
            Err(err) => {
                eprintln!("reqlint: {err}");
                EXIT_DATA
            }
        },
        Command::Compare(args) => match cmd_compare(&args) {
            Ok(rendered) => {
                print_stdout(&rendered);
                0
            }
            Err(err) => {
                eprintln!("reqlint: {err}");
                EXIT_DATA
            }
        },
    }
}

/// Write to stdout, tolerating a closed pipe (e.g. `reqlint … | head`).
fn print_stdout(rendered: &str) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    let _ = writeln!(handle, "{rendered}");
}

/// Anything that should exit with the data error code (65).
#[derive(Debug)]
pub struct DataError(String);

impl std::fmt::Display for DataError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DataError {}

fn data_error(err: impl std::fmt::Display) -> DataError {
    DataError(err.to_string())
}

struct LoadedSettings {
    language: Language,
    lexicon: Lexicon,
    segmenter: Segmenter,
    config: RuleConfig,
}

fn load_settings(common: &CommonArgs) -> Result<LoadedSettings, DataError> {
    let language = common.lang;
    let lexicon = match &common.lexicon {
        Some(path) => Lexicon::from_file(path, language).map_err(data_error)?,
        None => Lexicon::builtin(language).clone(),
    };
    let mut config = RuleConfig::new(language);
    if let Some(path) = &common.config {
        config.merge_file(path).map_err(data_error)?;
    }
    if let Some(threshold) = common.long_sentence_threshold {
        if threshold == 0 {
            return Err(DataError("threshold must be at least 1".to_string()));
        }
        config.long_sentence_threshold = threshold;
    }
    let segmenter = segmenter_for(&lexicon);
    Ok(LoadedSettings {
        language,
        lexicon,
        segmenter,
        config,
    })
}

/// Tagged mode when the file carries requirement delimiters, plain mode
/// otherwise.
fn load_corpus(path: &Path, language: Language) -> Result<Corpus, DataError> {
    let bytes = std::fs::read(path).map_err(|e| data_error(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes)
        .map_err(|_| data_error(format!("{}: file is not valid UTF-8", path.display())))?;
    let name = corpus_name_from_path(path);
    let corpus = if corpus::looks_tagged(&text) {
        parse_requirement_str(&name, &text, language).map_err(data_error)?
    } else {
        parse_plain_str(&name, &text, language).map_err(data_error)?
    };
    for diagnostic in corpus::table_artifact_lines(&text) {
        eprintln!(
            "reqlint: {}:{}: note: {}",
            path.display(),
            diagnostic.line,
            diagnostic.message
        );
    }
    Ok(corpus)
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(Report, String), DataError> {
    let mut settings = load_settings(&args.common)?;
    for rule in &args.disable {
        settings.config.disable(*rule);
    }
    if args.report_mandatory {
        settings.config.report_mandatory = true;
    }

    let mut corpora_stats: Vec<CorpusStats> = Vec::new();
    let mut findings = Vec::new();
    for path in &args.files {
        let corpus = load_corpus(path, settings.language)?;
        let analyzed = analyze_corpus(&corpus, &settings.lexicon, &settings.segmenter);
        findings.extend(run_all(&analyzed, &settings.lexicon, &settings.config));
        corpora_stats.push(compute_stats(&analyzed, &settings.config).map_err(data_error)?);
    }

    let report = Report::new(invocation_echo(), corpora_stats, findings, args.fail_on);
    let rendered = match args.common.format.as_str() {
        "json" => report.to_json(),
        _ => report.to_text(),
    };
    Ok((report, rendered))
}

fn cmd_compare(args: &CompareArgs) -> Result<String, DataError> {
    let settings = load_settings(&args.common)?;

    let mut corpora = Vec::new();
    for path in &args.files {
        corpora.push(load_corpus(path, settings.language)?);
    }

    let word_count = |corpus: &Corpus| -> usize {
        corpus
            .units()
            .iter()
            .map(|(_, body)| {
                settings
                    .segmenter
                    .split_sentences(body)
                    .iter()
                    .map(|s| s.word_count())
                    .sum::<usize>()
            })
            .sum()
    };

    let target = if args.truncate_to_smallest {
        corpora.iter().map(&word_count).min()
    } else {
        args.truncate_to
    };
    if let Some(target) = target {
        for corpus in &mut corpora {
            *corpus =
                truncate_corpus_with(corpus, target, &settings.segmenter).map_err(data_error)?;
        }
    }

    let mut stats = Vec::new();
    for corpus in &corpora {
        let analyzed = analyze_corpus(corpus, &settings.lexicon, &settings.segmenter);
        stats.push(compute_stats(&analyzed, &settings.config).map_err(data_error)?);
    }
    let report = ComparisonReport::new(invocation_echo(), compare_corpora(&stats));
    Ok(match args.common.format.as_str() {
        "json" => report.to_json(),
        _ => report.to_text(),
    })
}

fn invocation_echo() -> Vec<String> {
    std::env::args().skip(1).collect()
}
