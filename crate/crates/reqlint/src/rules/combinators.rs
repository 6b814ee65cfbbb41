//! R1 combinator classification, R4 mixed et/ou connectives, R5 list
//! connectives.

use crate::language::Language;
use crate::lexicon::{Lexicon, Major};
use crate::pipeline::AnalyzedUnit;
use crate::rules::{Classification, Finding, RuleConfig, RuleId, SentenceView};

/// Classify every coordinator/subordinator token of the requirement.
///
/// Coordinators are tested in order: mandatory patterns, clause coordination
/// (undesirable when the second clause has its own subject, ambiguous `et`
/// when the subject is shared and no ordering cue is present), unconditioned
/// `ou` alternatives, then noun-phrase coordination (useful).
pub fn check_combinators(
    unit: &AnalyzedUnit,
    language: Language,
    lexicon: &Lexicon,
    config: &RuleConfig,
) -> Vec<Finding> {
    let mut findings = Vec::new();
    for (sentence_index, sentence) in unit.sentences.iter().enumerate() {
        let view = SentenceView::with_cues(sentence, lexicon);
        let long_sentence = sentence.word_count() > config.long_sentence_threshold;
        for i in 0..view.words.len() {
            let (classification, message) = match view.major(i) {
                Major::Subordinator => classify_subordinator(&view, i),
                Major::Coordinator => classify_coordinator(&view, i, language, long_sentence),
                _ => continue,
            };
            findings.push(Finding {
                rule_id: RuleId::Combinator,
                requirement_id: unit.id.clone(),
                sentence_index,
                span: view.span(i),
                severity: classification.default_severity(),
                classification,
                message,
                evidence: vec![view.surface(i).to_string()],
            });
        }
    }
    findings
}

fn classify_subordinator(view: &SentenceView, i: usize) -> (Classification, String) {
    let lower = view.words[i].lower.as_str();
    if matches!(lower, "que" | "qu'") {
        (
            Classification::Mandatory,
            "complementizer introduces the dependent clause and cannot be avoided".to_string(),
        )
    } else {
        (
            Classification::Useful,
            format!("`{lower}` introduces a subordinate clause"),
        )
    }
}

fn classify_coordinator(
    view: &SentenceView,
    i: usize,
    language: Language,
    long_sentence: bool,
) -> (Classification, String) {
    let lower = view.words[i].lower.as_str();
    let (and_word, or_word) = connective_surfaces(language);

    if lower == and_word && interval_pattern(view, i, language) {
        return (
            Classification::Mandatory,
            "joins the lower and upper bounds of an interval".to_string(),
        );
    }
    if matches!(lower, "mais" | "but") {
        return (
            Classification::Mandatory,
            "adds logical information that helps the reader".to_string(),
        );
    }
    if matches!(lower, "alors" | "then") && has_condition_before(view, i, language) {
        return (
            Classification::Mandatory,
            "introduces the consequence of a stated condition".to_string(),
        );
    }

    // Clause coordination: a finite-verb cue on both sides at depth 0.
    if view.words[i].depth == 0 && view.any_cue_before(i) {
        if let Some(after) = view.first_cue_after(i) {
            let own_subject = (i + 1..after).any(|j| view.is_noun_candidate(j, language));
            if own_subject {
                let mut message = format!(
                    "`{lower}` coordinates two clauses; multiple requirements should be written"
                );
                if long_sentence {
                    message.push_str(
                        "; the sentence is also over the length limit, consider a bullet list",
                    );
                }
                return (Classification::Undesirable, message);
            }
            if lower == and_word && !has_ordering_cue(view, language) {
                return (
                    Classification::Ambiguous,
                    format!(
                        "`{and_word}` joins two operations on one subject; unclear whether they \
                         are simultaneous or ordered"
                    ),
                );
            }
        }
    }

    if lower == or_word && view.words[i].depth == 0 && !has_conditional_cue(view, language) {
        return (
            Classification::Ambiguous,
            format!(
                "`{or_word}` offers an alternative but no criterion for choosing between the \
                 options"
            ),
        );
    }

    if view.first_cue_after(i).is_none() {
        return (
            Classification::Useful,
            format!("`{lower}` coordinates noun phrases; avoids near-duplicate requirements"),
        );
    }
    (Classification::Useful, format!("`{lower}` coordination"))
}

fn connective_surfaces(language: Language) -> (&'static str, &'static str) {
    match language {
        Language::Fr => ("et", "ou"),
        Language::En => ("and", "or"),
    }
}

/// `entre <X> et` / `between <X> and` with X made of one to three word
/// tokens and no intervening punctuation.
fn interval_pattern(view: &SentenceView, i: usize, language: Language) -> bool {
    let opener = match language {
        Language::Fr => "entre",
        Language::En => "between",
    };
    let mut j = i;
    for steps in 1..=4usize {
        if j == 0 {
            return false;
        }
        if punctuation_between(view, j - 1, j) {
            return false;
        }
        j -= 1;
        if view.words[j].lower == opener {
            return steps >= 2;
        }
    }
    false
}

fn punctuation_between(view: &SentenceView, a: usize, b: usize) -> bool {
    let start = view.words[a].token_idx + 1;
    let end = view.words[b].token_idx;
    view.sentence.tokens[start..end]
        .iter()
        .any(|t| t.kind == crate::segment::TokenKind::Punctuation)
}

fn has_condition_before(view: &SentenceView, i: usize, language: Language) -> bool {
    let cond = match language {
        Language::Fr => "si",
        Language::En => "if",
    };
    view.words[..i].iter().any(|w| w.lower == cond)
}

fn has_ordering_cue(view: &SentenceView, language: Language) -> bool {
    let cues: &[&str] = match language {
        Language::Fr => &["puis", "ensuite", "alors"],
        Language::En => &["then", "afterwards", "subsequently"],
    };
    view.contains_surface(cues)
}

fn has_conditional_cue(view: &SentenceView, language: Language) -> bool {
    let cues: &[&str] = match language {
        Language::Fr => &["si", "s'", "sinon", "selon"],
        Language::En => &["if", "unless", "otherwise", "depending"],
    };
    view.contains_surface(cues)
}

/// R4: one finding per sentence containing both `et` and `ou` (en:
/// `and`/`or`) at the same parenthetical depth.
pub fn check_mixed_connectives(unit: &AnalyzedUnit, language: Language) -> Vec<Finding> {
    let (and_word, or_word) = connective_surfaces(language);
    let mut findings = Vec::new();
    for (sentence_index, sentence) in unit.sentences.iter().enumerate() {
        let view = SentenceView::new(sentence);
        let connectives: Vec<(usize, &crate::rules::WordRef)> = view
            .words
            .iter()
            .enumerate()
            .filter(|(_, w)| w.lower == and_word || w.lower == or_word)
            .collect();
        let mut depths: Vec<usize> = connectives.iter().map(|(_, w)| w.depth).collect();
        depths.sort_unstable();
        depths.dedup();
        for depth in depths {
            let group: Vec<&(usize, &crate::rules::WordRef)> = connectives
                .iter()
                .filter(|(_, w)| w.depth == depth)
                .collect();
            let has_and = group.iter().any(|(_, w)| w.lower == and_word);
            let has_or = group.iter().any(|(_, w)| w.lower == or_word);
            if has_and && has_or {
                let first = group.first().unwrap().0;
                let last = group.last().unwrap().0;
                findings.push(Finding {
                    rule_id: RuleId::MixedConnectives,
                    requirement_id: unit.id.clone(),
                    sentence_index,
                    span: view.span(first).start..view.span(last).end,
                    severity: Classification::Ambiguous.default_severity(),
                    classification: Classification::Ambiguous,
                    message: format!(
                        "`{and_word}` and `{or_word}` mix at the same depth; operator priority \
                         is unclear"
                    ),
                    evidence: group
                        .iter()
                        .map(|(i, _)| view.surface(*i).to_string())
                        .collect(),
                });
                break; // one finding per sentence
            }
        }
    }
    findings
}

const FR_QUANTIFIER_CUES: &[&str] = &[
    "l'une des",
    "l'un des",
    "une des",
    "un des",
    "toutes les",
    "tous les",
    "au moins un",
    "au moins une",
    "chacune des",
    "chacun des",
];

const EN_QUANTIFIER_CUES: &[&str] = &["any of", "all of", "at least one", "one of", "each of"];

/// R5: an intro sentence ending in `:` followed by two or more bullet items,
/// where neither the penultimate item ends with a coordinator nor the intro
/// carries an explicit quantifier cue.
pub fn check_list_connectives(unit: &AnalyzedUnit, language: Language) -> Vec<Finding> {
    let (and_word, or_word) = connective_surfaces(language);
    let quantifiers = match language {
        Language::Fr => FR_QUANTIFIER_CUES,
        Language::En => EN_QUANTIFIER_CUES,
    };
    let mut findings = Vec::new();
    let sentences = &unit.sentences;
    let mut i = 0;
    while i < sentences.len() {
        let intro = &sentences[i];
        if !intro.text.trim_end().ends_with(':') {
            i += 1;
            continue;
        }
        let mut items = Vec::new();
        let mut j = i + 1;
        while j < sentences.len() && sentences[j].is_bullet() {
            items.push(&sentences[j]);
            j += 1;
        }
        if items.len() >= 2 {
            let penultimate = items[items.len() - 2];
            let ends_with_coordinator = penultimate
                .tokens
                .iter()
                .rfind(|t| t.is_word())
                .map(|t| {
                    let lower = t.surface.to_lowercase();
                    lower == and_word || lower == or_word
                })
                .unwrap_or(false);
            let intro_lower = intro.text.to_lowercase().replace('\u{2019}', "'");
            let has_quantifier = quantifiers.iter().any(|q| intro_lower.contains(q));
            if !ends_with_coordinator && !has_quantifier {
                findings.push(Finding {
                    rule_id: RuleId::ListConnective,
                    requirement_id: unit.id.clone(),
                    sentence_index: i,
                    span: intro.source_span.clone(),
                    severity: Classification::Ambiguous.default_severity(),
                    classification: Classification::Ambiguous,
                    message: format!(
                        "list of {} items without an explicit `{and_word}`/`{or_word}` reading: \
                         is any single item sufficient, or are all of them required?",
                        items.len()
                    ),
                    evidence: vec![":".to_string()],
                });
            }
        }
        i = j.max(i + 1);
    }
    findings
}
