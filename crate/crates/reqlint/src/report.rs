//! Run reports: a stable machine-readable document plus a human-readable
//! rendering, with CI-friendly exit codes.
//!
//! Exit codes: 0 clean, 1 warnings, 2 errors (tunable with `--fail-on`),
//! 64 usage errors, 65 IO/parse errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::rules::{Finding, RuleId, Severity};
use crate::stats::{ComparisonTable, CorpusStats, CountKey};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_WARNINGS: i32 = 1;
pub const EXIT_ERRORS: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

/// What makes the process exit non-zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FailOn {
    Error,
    Warning,
    Never,
}

impl FromStr for FailOn {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "error" => Ok(FailOn::Error),
            "warning" => Ok(FailOn::Warning),
            "never" => Ok(FailOn::Never),
            other => Err(format!("unknown fail-on policy `{other}`")),
        }
    }
}

/// Exit status as a pure function of the findings and the fail-on policy.
pub fn exit_status(findings: &[Finding], fail_on: FailOn) -> i32 {
    let has_error = findings.iter().any(|f| f.severity == Severity::Error);
    let has_warning = findings.iter().any(|f| f.severity == Severity::Warning);
    match fail_on {
        FailOn::Never => EXIT_CLEAN,
        FailOn::Error => {
            if has_error {
                EXIT_ERRORS
            } else {
                EXIT_CLEAN
            }
        }
        FailOn::Warning => {
            if has_error {
                EXIT_ERRORS
            } else if has_warning {
                EXIT_WARNINGS
            } else {
                EXIT_CLEAN
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub errors: u64,
    pub warnings: u64,
    pub infos: u64,
    pub by_rule: BTreeMap<RuleId, u64>,
}

impl Summary {
    pub fn of(findings: &[Finding]) -> Self {
        let mut summary = Summary {
            errors: 0,
            warnings: 0,
            infos: 0,
            by_rule: BTreeMap::new(),
        };
        for finding in findings {
            match finding.severity {
                Severity::Error => summary.errors += 1,
                Severity::Warning => summary.warnings += 1,
                Severity::Info => summary.infos += 1,
            }
            *summary.by_rule.entry(finding.rule_id).or_insert(0) += 1;
        }
        summary
    }
}

/// The analyze report: one structured document with a stable field schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub invocation: Vec<String>,
    pub corpora: Vec<CorpusStats>,
    pub findings: Vec<Finding>,
    pub summary: Summary,
    pub exit_status: i32,
}

impl Report {
    pub fn new(
        invocation: Vec<String>,
        corpora: Vec<CorpusStats>,
        findings: Vec<Finding>,
        fail_on: FailOn,
    ) -> Self {
        let summary = Summary::of(&findings);
        let exit_status = exit_status(&findings, fail_on);
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            invocation,
            corpora,
            findings,
            summary,
            exit_status,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.findings.is_empty() {
            out.push_str("findings:\n");
            for finding in &self.findings {
                out.push_str(&render_finding(finding));
                out.push('\n');
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "summary: {} error(s), {} warning(s), {} info(s)",
            self.summary.errors, self.summary.warnings, self.summary.infos
        );
        for (rule, count) in &self.summary.by_rule {
            let _ = writeln!(out, "  {rule}: {count}");
        }
        if !self.corpora.is_empty() {
            out.push('\n');
            out.push_str(&stats_table(&self.corpora));
        }
        out
    }
}

pub fn render_finding(finding: &Finding) -> String {
    let mut line = format!(
        "{}[{}] {}:{}: {} ({})",
        finding.severity.label(),
        finding.rule_id.name(),
        finding.requirement_id,
        finding.sentence_index,
        finding.message,
        finding.classification.name(),
    );
    if !finding.evidence.is_empty() {
        let _ = write!(line, " [evidence: {}]", finding.evidence.join(", "));
    }
    line
}

/// Tabular rendering with the Table 1 / Table 2 column set: category counts
/// with word-normalized percentages, then sentence-length statistics.
pub fn stats_table(rows: &[CorpusStats]) -> String {
    let threshold = rows.first().map(|r| r.threshold_used).unwrap_or(25);
    let headers = [
        "corpus".to_string(),
        "words".to_string(),
        "coordinators".to_string(),
        "subordinators".to_string(),
        "conjunctions".to_string(),
        "pronouns".to_string(),
        "sentences".to_string(),
        format!("long (>{threshold}w)"),
        "avg len".to_string(),
    ];
    let mut cells: Vec<Vec<String>> = vec![headers.to_vec()];
    for row in rows {
        cells.push(vec![
            row.corpus_name.clone(),
            row.total_words.to_string(),
            format!(
                "{} ({}%)",
                row.counts.coordinator, row.percentages.coordinator
            ),
            format!(
                "{} ({}%)",
                row.counts.subordinator, row.percentages.subordinator
            ),
            format!(
                "{} ({}%)",
                row.counts.conjunction_total, row.percentages.conjunction_total
            ),
            format!("{} ({}%)", row.counts.pronoun, row.percentages.pronoun),
            row.sentence_count.to_string(),
            format!(
                "{} ({}%)",
                row.long_sentence_count, row.long_sentence_percent
            ),
            row.avg_sentence_length.to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..cells[0].len())
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in &cells {
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                out.push_str("  ");
            }
            let pad = widths[c].saturating_sub(cell.chars().count());
            out.push_str(cell);
            for _ in 0..pad {
                out.push(' ');
            }
        }
        while out.ends_with(' ') {
            out.pop();
        }
        out.push('\n');
    }
    out
}

/// The compare report: corpus rows plus pairwise frequency ratios.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub invocation: Vec<String>,
    pub comparison: ComparisonTable,
}

impl ComparisonReport {
    pub fn new(invocation: Vec<String>, comparison: ComparisonTable) -> Self {
        ComparisonReport {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            invocation,
            comparison,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("comparison serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = stats_table(&self.comparison.rows);
        if self.comparison.rows.len() >= 2 {
            out.push('\n');
            out.push_str("frequency ratios (row/column frequency per category):\n");
            for ratio in &self.comparison.ratios {
                let value = match ratio.ratio {
                    Some(v) => format!("{v:.2}"),
                    None => "-".to_string(),
                };
                let _ = writeln!(
                    out,
                    "  {} {}/{}: {}",
                    label_singular(ratio.category),
                    ratio.numerator_corpus,
                    ratio.denominator_corpus,
                    value
                );
            }
        }
        out
    }
}

fn label_singular(key: CountKey) -> &'static str {
    match key {
        CountKey::Coordinator => "coordinator",
        CountKey::Subordinator => "subordinator",
        CountKey::ConjunctionTotal => "conjunction",
        CountKey::Pronoun => "pronoun",
    }
}
