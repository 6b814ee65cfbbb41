//! R2 pronoun checks: requirement autonomy.
//!
//! Relative, impersonal and reflexive pronouns are grammatically required
//! (mandatory). Subject and demonstrative pronouns must have a candidate
//! antecedent inside the same requirement, otherwise the requirement is not
//! autonomous and an error is reported; a pronoun opening the requirement is
//! always an error, since its referent can only lie in another requirement.

use crate::language::Language;
use crate::lexicon::{Major, PronounSubtype};
use crate::pipeline::AnalyzedUnit;
use crate::rules::{Classification, Finding, RuleConfig, RuleId, SentenceView};

const NEAREST_NOUN_DEMONSTRATIVES: &[&str] = &[
    "celui-ci",
    "celle-ci",
    "ceux-ci",
    "celles-ci",
    "celui-là",
    "celle-là",
    "ceux-là",
    "celles-là",
];

pub fn check_pronouns(
    unit: &AnalyzedUnit,
    language: Language,
    _config: &RuleConfig,
) -> Vec<Finding> {
    let views: Vec<SentenceView> = unit.sentences.iter().map(SentenceView::new).collect();

    // Candidate antecedents in reading order: (sentence, word) positions.
    let noun_positions: Vec<(usize, usize)> = views
        .iter()
        .enumerate()
        .flat_map(|(si, view)| {
            (0..view.words.len())
                .filter(move |&wi| view.is_noun_candidate(wi, language))
                .map(move |wi| (si, wi))
        })
        .collect();
    let has_antecedent = |si: usize, wi: usize| {
        noun_positions
            .iter()
            .any(|&(nsi, nwi)| nsi < si || (nsi == si && nwi < wi))
    };

    let mut findings = Vec::new();
    for (si, view) in views.iter().enumerate() {
        for wi in 0..view.words.len() {
            if view.major(wi) != Major::Pronoun {
                continue;
            }
            let token = &view.sentence.tokens[view.words[wi].token_idx];
            let subtype = token
                .tag
                .and_then(|t| t.pronoun_subtype)
                .unwrap_or(PronounSubtype::PersonalSubject);
            let lower = view.words[wi].lower.as_str();
            let surface = view.surface(wi).to_string();

            let (classification, message) = match subtype {
                PronounSubtype::Relative => (
                    Classification::Mandatory,
                    format!("relative pronoun `{surface}` specifies which noun is meant"),
                ),
                PronounSubtype::Impersonal => (
                    Classification::Mandatory,
                    format!("impersonal pronoun `{surface}` does not refer to a noun"),
                ),
                _ if matches!(lower, "se" | "s'") => (
                    Classification::Mandatory,
                    format!("reflexive pronoun `{surface}` is part of the verb"),
                ),
                PronounSubtype::PersonalSubject | PronounSubtype::Demonstrative => {
                    if si == 0 && wi == 0 {
                        (
                            Classification::NonAutonomous,
                            format!(
                                "`{surface}` opens the requirement; its referent lies in another \
                                 requirement, so this one cannot be understood by itself"
                            ),
                        )
                    } else if !has_antecedent(si, wi) {
                        (
                            Classification::NonAutonomous,
                            format!(
                                "`{surface}` has no candidate antecedent in this requirement; \
                                 repeat the noun to keep the requirement autonomous"
                            ),
                        )
                    } else {
                        let mut message = format!(
                            "`{surface}` refers to a noun earlier in the same requirement; \
                             avoids repetition"
                        );
                        if NEAREST_NOUN_DEMONSTRATIVES.contains(&lower) {
                            message.push_str(
                                "; the demonstrative points to the nearest noun and is unambiguous",
                            );
                        }
                        (Classification::Useful, message)
                    }
                }
                PronounSubtype::PersonalObject | PronounSubtype::Indefinite => {
                    let message = if has_antecedent(si, wi) {
                        format!(
                            "`{surface}` refers to a noun earlier in the same requirement; \
                             avoids repetition"
                        )
                    } else {
                        format!("pronoun `{surface}`")
                    };
                    (Classification::Useful, message)
                }
            };
            findings.push(Finding {
                rule_id: RuleId::Pronoun,
                requirement_id: unit.id.clone(),
                sentence_index: si,
                span: view.span(wi),
                severity: classification.default_severity(),
                classification,
                message,
                evidence: vec![surface],
            });
        }
    }
    findings
}
