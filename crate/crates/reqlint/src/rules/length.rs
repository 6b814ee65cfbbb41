//! R3: sentences strictly longer than the configured word threshold.

use crate::pipeline::AnalyzedUnit;
use crate::rules::{Classification, Finding, RuleConfig, RuleId};

pub fn check_sentence_length(unit: &AnalyzedUnit, config: &RuleConfig) -> Vec<Finding> {
    let threshold = config.long_sentence_threshold;
    let mut findings = Vec::new();
    for (sentence_index, sentence) in unit.sentences.iter().enumerate() {
        let count = sentence.word_count();
        if count > threshold {
            findings.push(Finding {
                rule_id: RuleId::LongSentence,
                requirement_id: unit.id.clone(),
                sentence_index,
                span: sentence.source_span.clone(),
                severity: Classification::Undesirable.default_severity(),
                classification: Classification::Undesirable,
                message: format!(
                    "sentence has {count} words (more than {threshold}); long sentences are \
                     harder to process"
                ),
                evidence: Vec::new(),
            });
        }
    }
    findings
}
