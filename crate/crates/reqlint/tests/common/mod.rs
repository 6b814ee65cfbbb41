//! Shared fixtures for the integration tests: the sixteen-example corpus and
//! the expected-findings table built by hand from the source verdicts before
//! the rule engine was written.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use reqlint::rules::{Classification, Finding, RuleId, Severity};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// One expected visible finding under the default configuration
/// (report_mandatory off, French threshold 25).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedFinding {
    /// R1..R5 short code.
    pub rule: &'static str,
    pub severity: Severity,
    pub classification: Classification,
    /// First evidence surface, empty when the finding has no evidence.
    pub evidence: &'static str,
}

pub const fn expect(
    rule: &'static str,
    severity: Severity,
    classification: Classification,
    evidence: &'static str,
) -> ExpectedFinding {
    ExpectedFinding {
        rule,
        severity,
        classification,
        evidence,
    }
}

use Classification::{Ambiguous, NonAutonomous, Undesirable, Useful};
use Severity::{Error, Info, Warning};

/// Expected findings per example requirement, as an unordered multiset.
pub const EXPECTED_FINDINGS: &[(&str, &[ExpectedFinding])] = &[
    ("EX01", &[]),
    ("EX02", &[expect("R1", Info, Useful, "et")]),
    (
        "EX03",
        &[
            expect("R3", Warning, Undesirable, ""),
            expect("R2", Info, Useful, "c'"),
            expect("R1", Info, Useful, "et"),
        ],
    ),
    ("EX04", &[]),
    (
        "EX05",
        &[
            expect("R1", Info, Useful, "et"),
            expect("R1", Warning, Undesirable, "et"),
            expect("R3", Warning, Undesirable, ""),
        ],
    ),
    (
        "EX06",
        &[
            expect("R1", Warning, Undesirable, "et"),
            expect("R1", Info, Useful, "et"),
        ],
    ),
    (
        "EX07",
        &[
            expect("R2", Info, Useful, "on"),
            expect("R1", Info, Useful, "et"),
            expect("R1", Warning, Ambiguous, "ou"),
        ],
    ),
    (
        "EX08",
        &[
            expect("R1", Warning, Ambiguous, "et"),
            expect("R3", Warning, Undesirable, ""),
        ],
    ),
    (
        "EX09",
        &[
            expect("R1", Info, Useful, "et"),
            expect("R1", Info, Useful, "ou"),
            expect("R1", Info, Useful, "et"),
            expect("R4", Warning, Ambiguous, "et"),
        ],
    ),
    (
        "EX10",
        &[
            expect("R1", Info, Useful, "si"),
            expect("R5", Warning, Ambiguous, ":"),
            expect("R1", Info, Useful, "ou"),
        ],
    ),
    (
        "EX11",
        &[
            expect("R2", Error, NonAutonomous, "Il"),
            expect("R1", Warning, Ambiguous, "et"),
            expect("R2", Info, Useful, "la"),
            expect("R3", Warning, Undesirable, ""),
        ],
    ),
    ("EX12", &[]),
    ("EX13", &[]),
    ("EX14", &[expect("R2", Info, Useful, "Elle")]),
    (
        "EX15",
        &[
            expect("R1", Info, Useful, "s'"),
            expect("R2", Info, Useful, "il"),
        ],
    ),
    (
        "EX16",
        &[
            expect("R1", Info, Useful, "si"),
            expect("R2", Info, Useful, "celui-ci"),
        ],
    ),
];

/// Hand count of the long fixture sentence under the stated tokenization
/// rules (elision clitics split and counted, identifiers whole, spaced
/// hyphens and backticks excluded).
pub const LONG_SENTENCE_WORD_COUNT: usize = 71;

pub fn rule_code(rule: RuleId) -> &'static str {
    match rule {
        RuleId::Combinator => "R1",
        RuleId::Pronoun => "R2",
        RuleId::LongSentence => "R3",
        RuleId::MixedConnectives => "R4",
        RuleId::ListConnective => "R5",
    }
}

/// Compare findings grouped by requirement id against [`EXPECTED_FINDINGS`],
/// as unordered multisets. Panics with a description on the first mismatch.
pub fn assert_matches_expected_table(by_example: &HashMap<String, Vec<Finding>>) {
    assert_eq!(by_example.len(), EXPECTED_FINDINGS.len());
    for (id, expected) in EXPECTED_FINDINGS {
        let got = &by_example[*id];
        let mut remaining: Vec<(&Finding, &str)> =
            got.iter().map(|f| (f, rule_code(f.rule_id))).collect();
        for exp in *expected {
            let pos = remaining
                .iter()
                .position(|(f, code)| {
                    *code == exp.rule
                        && f.severity == exp.severity
                        && f.classification == exp.classification
                        && (exp.evidence.is_empty()
                            || f.evidence.first().map(String::as_str) == Some(exp.evidence))
                })
                .unwrap_or_else(|| {
                    panic!("{id}: expected finding {exp:?} not produced; got {got:#?}")
                });
            remaining.remove(pos);
        }
        assert!(
            remaining.is_empty(),
            "{id}: unexpected extra findings: {remaining:#?}"
        );
    }
}
