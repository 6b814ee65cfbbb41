//! The sixteen-example fixture corpus: tag assignments and the full
//! expected-findings table under the default configuration.

mod common;

use std::collections::HashMap;

use common::{fixture_path, LONG_SENTENCE_WORD_COUNT};
use reqlint::corpus::parse_requirement_file;
use reqlint::lexicon::{Lexicon, Major, PronounSubtype};
use reqlint::pipeline::{analyze_corpus, segmenter_for, AnalyzedCorpus};
use reqlint::rules::{run_all, Finding, RuleConfig, RuleId};
use reqlint::segment::word_count;
use reqlint::{Language, Severity};

fn analyzed_examples() -> AnalyzedCorpus {
    let corpus = parse_requirement_file(&fixture_path("examples.req"), Language::Fr).unwrap();
    let lexicon = Lexicon::builtin(Language::Fr);
    analyze_corpus(&corpus, lexicon, &segmenter_for(lexicon))
}

fn findings_by_example() -> HashMap<String, Vec<Finding>> {
    let analyzed = analyzed_examples();
    let lexicon = Lexicon::builtin(Language::Fr);
    let config = RuleConfig::new(Language::Fr);
    let mut map: HashMap<String, Vec<Finding>> = HashMap::new();
    for unit in &analyzed.units {
        map.entry(unit.id.clone()).or_default();
    }
    for finding in run_all(&analyzed, lexicon, &config) {
        map.entry(finding.requirement_id.clone())
            .or_default()
            .push(finding);
    }
    map
}

#[test]
fn fixture_corpus_has_sixteen_requirements() {
    let analyzed = analyzed_examples();
    assert_eq!(analyzed.units.len(), 16);
    for (i, unit) in analyzed.units.iter().enumerate() {
        assert_eq!(unit.id, format!("EX{:02}", i + 1));
    }
}

#[test]
fn expected_findings_table_matches_exactly() {
    common::assert_matches_expected_table(&findings_by_example());
}

#[test]
fn findings_are_ordered_by_requirement_sentence_and_span() {
    let analyzed = analyzed_examples();
    let lexicon = Lexicon::builtin(Language::Fr);
    let config = RuleConfig::new(Language::Fr);
    let order: HashMap<&str, usize> = analyzed
        .units
        .iter()
        .enumerate()
        .map(|(i, u)| (u.id.as_str(), i))
        .collect();
    let findings = run_all(&analyzed, lexicon, &config);
    let keys: Vec<(usize, usize, usize)> = findings
        .iter()
        .map(|f| {
            (
                order[f.requirement_id.as_str()],
                f.sentence_index,
                f.span.start,
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn spans_lie_within_their_sentence() {
    let analyzed = analyzed_examples();
    let lexicon = Lexicon::builtin(Language::Fr);
    let config = RuleConfig::new(Language::Fr);
    let units: HashMap<&str, _> = analyzed.units.iter().map(|u| (u.id.as_str(), u)).collect();
    for finding in run_all(&analyzed, lexicon, &config) {
        let unit = units[finding.requirement_id.as_str()];
        let sentence = &unit.sentences[finding.sentence_index];
        assert!(
            finding.span.start >= sentence.source_span.start
                && finding.span.end <= sentence.source_span.end,
            "finding span {:?} outside sentence span {:?} ({})",
            finding.span,
            sentence.source_span,
            finding.requirement_id
        );
    }
}

type TaggedWords<'a> = Vec<(&'a str, Major, Option<PronounSubtype>)>;

#[test]
fn tag_expectations_on_fixture_corpus() {
    let analyzed = analyzed_examples();
    let tags: HashMap<&str, TaggedWords> = analyzed
        .units
        .iter()
        .map(|u| {
            (
                u.id.as_str(),
                u.sentences
                    .iter()
                    .flat_map(|s| s.tokens.iter())
                    .filter(|t| t.is_word())
                    .map(|t| {
                        let tag = t.tag.unwrap();
                        (t.surface.as_str(), tag.major, tag.pronoun_subtype)
                    })
                    .collect(),
            )
        })
        .collect();

    let find = |id: &str, surface: &str| -> (Major, Option<PronounSubtype>) {
        tags[id]
            .iter()
            .find(|(s, _, _)| *s == surface)
            .map(|(_, m, p)| (*m, *p))
            .unwrap_or_else(|| panic!("{id}: token {surface} not found"))
    };

    assert_eq!(find("EX01", "que").0, Major::Subordinator);
    assert_eq!(find("EX01", "et").0, Major::Coordinator);
    assert_eq!(
        find("EX03", "c'"),
        (Major::Pronoun, Some(PronounSubtype::Demonstrative))
    );
    assert_eq!(find("EX04", "mais").0, Major::Coordinator);
    assert_eq!(
        find("EX07", "on"),
        (Major::Pronoun, Some(PronounSubtype::Indefinite))
    );
    assert_eq!(find("EX08", "l'").0, Major::Other);
    assert_eq!(find("EX10", "si").0, Major::Subordinator);
    assert_eq!(
        find("EX11", "Il"),
        (Major::Pronoun, Some(PronounSubtype::PersonalSubject))
    );
    assert_eq!(
        find("EX12", "qui"),
        (Major::Pronoun, Some(PronounSubtype::Relative))
    );
    assert_eq!(
        find("EX13", "Il"),
        (Major::Pronoun, Some(PronounSubtype::Impersonal))
    );
    assert_eq!(
        find("EX14", "Elle"),
        (Major::Pronoun, Some(PronounSubtype::PersonalSubject))
    );
    assert_eq!(find("EX14", "en").0, Major::Other);
    assert_eq!(
        find("EX15", "que"),
        (Major::Pronoun, Some(PronounSubtype::Relative))
    );
    assert_eq!(find("EX15", "s'").0, Major::Subordinator);
    assert_eq!(
        find("EX15", "il"),
        (Major::Pronoun, Some(PronounSubtype::PersonalSubject))
    );
    assert_eq!(
        find("EX16", "celui-ci"),
        (Major::Pronoun, Some(PronounSubtype::Demonstrative))
    );

    // The object clitic in EX11 (`la comparera`) vs its determiner uses.
    let ex11_la: Vec<Option<PronounSubtype>> = tags["EX11"]
        .iter()
        .filter(|(s, _, _)| *s == "la")
        .map(|(_, _, p)| *p)
        .collect();
    assert_eq!(
        ex11_la,
        vec![None, Some(PronounSubtype::PersonalObject), None]
    );
}

#[test]
fn long_sentence_word_count_and_single_r3() {
    let corpus = parse_requirement_file(&fixture_path("long_sentence.req"), Language::Fr).unwrap();
    let lexicon = Lexicon::builtin(Language::Fr);
    let analyzed = analyze_corpus(&corpus, lexicon, &segmenter_for(lexicon));

    assert_eq!(analyzed.units.len(), 1);
    assert_eq!(analyzed.units[0].sentences.len(), 1, "exactly one sentence");
    let sentence = &analyzed.units[0].sentences[0];
    assert_eq!(word_count(&sentence.tokens), LONG_SENTENCE_WORD_COUNT);
    assert!(word_count(&sentence.tokens) >= 70);

    let config = RuleConfig::new(Language::Fr);
    let findings = run_all(&analyzed, lexicon, &config);
    let r3: Vec<&Finding> = findings
        .iter()
        .filter(|f| f.rule_id == RuleId::LongSentence)
        .collect();
    assert_eq!(r3.len(), 1);
    assert!(r3[0]
        .message
        .contains(&LONG_SENTENCE_WORD_COUNT.to_string()));
    // No other warning or error fires on this sentence.
    assert!(findings
        .iter()
        .filter(|f| f.severity >= Severity::Warning)
        .all(|f| f.rule_id == RuleId::LongSentence));
}

#[test]
fn report_mandatory_reveals_suppressed_findings() {
    let analyzed = analyzed_examples();
    let lexicon = Lexicon::builtin(Language::Fr);
    let mut config = RuleConfig::new(Language::Fr);
    config.report_mandatory = true;
    let findings = run_all(&analyzed, lexicon, &config);
    let mandatory: Vec<&Finding> = findings
        .iter()
        .filter(|f| {
            f.classification == reqlint::Classification::Mandatory && f.requirement_id == "EX01"
        })
        .collect();
    // `que` complementizer and interval `et`.
    assert_eq!(mandatory.len(), 2);
    assert!(mandatory.iter().all(|f| f.severity == Severity::Info));
}
