//! Writing-rule checks over tagged requirements.
//!
//! Five rules:
//! - R1 combinator use (coordinating/subordinating conjunctions),
//! - R2 pronoun use and requirement autonomy,
//! - R3 long sentences,
//! - R4 mixed et/ou connectives at one parenthetical depth,
//! - R5 bullet lists without an explicit and/or reading.
//!
//! Each combinator or pronoun occurrence is classified as mandatory, useful,
//! undesirable, ambiguous or non-autonomous; mandatory findings are reported
//! only when `report_mandatory` is set.

mod combinators;
mod config;
mod length;
mod pronouns;

pub use combinators::{check_combinators, check_list_connectives, check_mixed_connectives};
pub use config::{ConfigError, RuleConfig};
pub use length::check_sentence_length;
pub use pronouns::check_pronouns;

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::language::Language;
use crate::lexicon::{Lexicon, Major};
use crate::pipeline::{AnalyzedCorpus, AnalyzedUnit};
use crate::segment::Sentence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "R1_combinator")]
    Combinator,
    #[serde(rename = "R2_pronoun")]
    Pronoun,
    #[serde(rename = "R3_long_sentence")]
    LongSentence,
    #[serde(rename = "R4_mixed_connectives")]
    MixedConnectives,
    #[serde(rename = "R5_list_connective")]
    ListConnective,
}

impl RuleId {
    pub const ALL: [RuleId; 5] = [
        RuleId::Combinator,
        RuleId::Pronoun,
        RuleId::LongSentence,
        RuleId::MixedConnectives,
        RuleId::ListConnective,
    ];

    pub fn code(self) -> &'static str {
        match self {
            RuleId::Combinator => "R1",
            RuleId::Pronoun => "R2",
            RuleId::LongSentence => "R3",
            RuleId::MixedConnectives => "R4",
            RuleId::ListConnective => "R5",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Combinator => "R1_combinator",
            RuleId::Pronoun => "R2_pronoun",
            RuleId::LongSentence => "R3_long_sentence",
            RuleId::MixedConnectives => "R4_mixed_connectives",
            RuleId::ListConnective => "R5_list_connective",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownRule(pub String);

impl fmt::Display for UnknownRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown rule `{}` (expected R1..R5)", self.0)
    }
}

impl std::error::Error for UnknownRule {}

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "R1" | "R1_combinator" => Ok(RuleId::Combinator),
            "R2" | "R2_pronoun" => Ok(RuleId::Pronoun),
            "R3" | "R3_long_sentence" => Ok(RuleId::LongSentence),
            "R4" | "R4_mixed_connectives" => Ok(RuleId::MixedConnectives),
            "R5" | "R5_list_connective" => Ok(RuleId::ListConnective),
            other => Err(UnknownRule(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn label(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "info" => Ok(Severity::Info),
            "warning" => Ok(Severity::Warning),
            "error" => Ok(Severity::Error),
            other => Err(format!("unknown severity `{other}`")),
        }
    }
}

/// Verdict for one combinator/pronoun occurrence (or sentence-level issue).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Grammatically or logically required; reported only in verbose mode.
    Mandatory,
    /// Not required, but prevents repetition or clarifies; informational.
    Useful,
    /// The requirement should be rewritten (typically split).
    Undesirable,
    /// The wording admits more than one reading.
    Ambiguous,
    /// Breaks requirement autonomy: the referent lies outside.
    NonAutonomous,
}

impl Classification {
    /// Default severity: undesirable/ambiguous warn, non-autonomous errors,
    /// mandatory/useful inform.
    pub fn default_severity(self) -> Severity {
        match self {
            Classification::Mandatory | Classification::Useful => Severity::Info,
            Classification::Undesirable | Classification::Ambiguous => Severity::Warning,
            Classification::NonAutonomous => Severity::Error,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Mandatory => "mandatory",
            Classification::Useful => "useful",
            Classification::Undesirable => "undesirable",
            Classification::Ambiguous => "ambiguous",
            Classification::NonAutonomous => "non_autonomous",
        }
    }
}

/// One rule violation or observation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub rule_id: RuleId,
    pub requirement_id: String,
    pub sentence_index: usize,
    /// Byte range within the requirement body (or plain corpus body).
    pub span: Range<usize>,
    pub severity: Severity,
    pub classification: Classification,
    pub message: String,
    pub evidence: Vec<String>,
}

/// Run every enabled rule over the corpus. Findings are ordered by
/// (requirement order, sentence index, span start); severity overrides are
/// applied last and mandatory findings are dropped unless `report_mandatory`.
pub fn run_all(corpus: &AnalyzedCorpus, lexicon: &Lexicon, config: &RuleConfig) -> Vec<Finding> {
    let mut findings = Vec::new();
    for unit in &corpus.units {
        let mut unit_findings = check_unit(unit, corpus.language, lexicon, config);
        unit_findings.sort_by(|a, b| {
            (a.sentence_index, a.span.start, a.rule_id).cmp(&(
                b.sentence_index,
                b.span.start,
                b.rule_id,
            ))
        });
        findings.extend(unit_findings);
    }
    findings
}

/// Rule checks for a single requirement-like unit.
pub fn check_unit(
    unit: &AnalyzedUnit,
    language: Language,
    lexicon: &Lexicon,
    config: &RuleConfig,
) -> Vec<Finding> {
    let mut findings = Vec::new();
    if config.is_enabled(RuleId::Combinator) {
        findings.extend(check_combinators(unit, language, lexicon, config));
    }
    if config.is_enabled(RuleId::Pronoun) {
        findings.extend(check_pronouns(unit, language, config));
    }
    if config.is_enabled(RuleId::LongSentence) {
        findings.extend(check_sentence_length(unit, config));
    }
    if config.is_enabled(RuleId::MixedConnectives) {
        findings.extend(check_mixed_connectives(unit, language));
    }
    if config.is_enabled(RuleId::ListConnective) {
        findings.extend(check_list_connectives(unit, language));
    }
    findings.retain(|f| config.report_mandatory || f.classification != Classification::Mandatory);
    for finding in &mut findings {
        if finding.classification != Classification::Mandatory {
            if let Some(&severity) = config.severity_overrides.get(&finding.rule_id) {
                finding.severity = severity;
            }
        }
    }
    findings
}

// --- Shared sentence view ---------------------------------------------------

/// A word token with its position, parenthetical depth and cached cue flag.
pub(crate) struct WordRef {
    /// Index into `Sentence::tokens`.
    pub token_idx: usize,
    pub depth: usize,
    pub lower: String,
    pub cue: bool,
}

/// Word-token level view of one sentence, shared by the rule checks.
pub(crate) struct SentenceView<'a> {
    pub sentence: &'a Sentence,
    pub words: Vec<WordRef>,
}

impl<'a> SentenceView<'a> {
    pub fn new(sentence: &'a Sentence) -> Self {
        Self::build(sentence, None)
    }

    /// View with verb-cue flags precomputed, for the combinator checks.
    pub fn with_cues(sentence: &'a Sentence, lexicon: &Lexicon) -> Self {
        Self::build(sentence, Some(lexicon))
    }

    fn build(sentence: &'a Sentence, lexicon: Option<&Lexicon>) -> Self {
        let mut words = Vec::new();
        let mut depth = 0usize;
        for (idx, token) in sentence.tokens.iter().enumerate() {
            match token.surface.as_str() {
                "(" => {
                    depth += 1;
                    continue;
                }
                ")" => {
                    depth = depth.saturating_sub(1);
                    continue;
                }
                _ => {}
            }
            if token.is_word() {
                words.push(WordRef {
                    token_idx: idx,
                    depth,
                    lower: token.surface.to_lowercase(),
                    cue: lexicon
                        .map(|l| l.is_verb_cue(&token.surface))
                        .unwrap_or(false),
                });
            }
        }
        SentenceView { sentence, words }
    }

    pub fn surface(&self, word_idx: usize) -> &str {
        &self.sentence.tokens[self.words[word_idx].token_idx].surface
    }

    pub fn span(&self, word_idx: usize) -> Range<usize> {
        self.sentence.tokens[self.words[word_idx].token_idx]
            .span
            .clone()
    }

    pub fn major(&self, word_idx: usize) -> Major {
        self.sentence.tokens[self.words[word_idx].token_idx]
            .tag
            .map(|t| t.major)
            .unwrap_or(Major::Other)
    }

    pub fn any_cue_before(&self, word_idx: usize) -> bool {
        self.words[..word_idx].iter().any(|w| w.cue)
    }

    pub fn first_cue_after(&self, word_idx: usize) -> Option<usize> {
        (word_idx + 1..self.words.len()).find(|&j| self.words[j].cue)
    }

    pub fn contains_surface(&self, surfaces: &[&str]) -> bool {
        self.words
            .iter()
            .any(|w| surfaces.contains(&w.lower.as_str()))
    }

    /// Noun-like word: tagged `other` and either preceded by a determiner or
    /// capitalized away from the sentence start (identifiers, proper nouns).
    pub fn is_noun_candidate(&self, word_idx: usize, language: Language) -> bool {
        if self.major(word_idx) != Major::Other {
            return false;
        }
        if word_idx > 0 && is_determiner(&self.words[word_idx - 1].lower, language) {
            return true;
        }
        word_idx > 0
            && self
                .surface(word_idx)
                .chars()
                .next()
                .map(|c| c.is_uppercase())
                .unwrap_or(false)
    }
}

const FR_DETERMINERS: &[&str] = &[
    "le",
    "la",
    "les",
    "l'",
    "un",
    "une",
    "des",
    "du",
    "au",
    "aux",
    "ce",
    "cet",
    "cette",
    "ces",
    "chaque",
    "tout",
    "toute",
    "tous",
    "toutes",
    "son",
    "sa",
    "ses",
    "leur",
    "leurs",
    "notre",
    "nos",
    "votre",
    "vos",
    "mon",
    "ma",
    "mes",
    "plusieurs",
    "certains",
    "certaines",
    "quelques",
];

const EN_DETERMINERS: &[&str] = &[
    "the", "a", "an", "this", "that", "these", "those", "its", "their", "his", "her", "each",
    "every", "any", "all", "some", "several", "no",
];

pub(crate) fn is_determiner(lower: &str, language: Language) -> bool {
    match language {
        Language::Fr => FR_DETERMINERS.contains(&lower),
        Language::En => EN_DETERMINERS.contains(&lower),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_requirement_str;
    use crate::pipeline::analyze_with_builtins;

    fn unit_fr(text: &str) -> (AnalyzedUnit, &'static Lexicon) {
        let corpus = parse_requirement_str(
            "t.req",
            &format!("[REQ T1]\n{text}\n[/REQ]\n"),
            Language::Fr,
        )
        .unwrap();
        let analyzed = analyze_with_builtins(&corpus);
        (
            analyzed.units.into_iter().next().unwrap(),
            Lexicon::builtin(Language::Fr),
        )
    }

    fn config_fr() -> RuleConfig {
        RuleConfig::new(Language::Fr)
    }

    #[test]
    fn interval_and_complementizer_are_mandatory() {
        let (unit, lexicon) = unit_fr(
            "Le générateur de TCH vérifiera que la valeur du champ PHASE est comprise entre 0 et `FREQ_DIV -1`.",
        );
        let findings = check_combinators(&unit, Language::Fr, lexicon, &config_fr());
        assert_eq!(findings.len(), 2);
        assert!(findings
            .iter()
            .all(|f| f.classification == Classification::Mandatory));
        assert_eq!(findings[0].evidence, vec!["que"]);
        assert_eq!(findings[1].evidence, vec!["et"]);
    }

    #[test]
    fn clause_coordination_is_undesirable() {
        let (unit, lexicon) = unit_fr(
            "Le format des données de mesure angulaire et Doppler est conforme au standard CCSDS décrit dans le document DA9 et le schéma XML respecte le standard décrit dans DA11.",
        );
        let findings = check_combinators(&unit, Language::Fr, lexicon, &config_fr());
        let undesirable: Vec<&Finding> = findings
            .iter()
            .filter(|f| f.classification == Classification::Undesirable)
            .collect();
        assert_eq!(undesirable.len(), 1);
        assert_eq!(undesirable[0].severity, Severity::Warning);
        assert!(undesirable[0].message.contains("multiple requirements"));
        // The first `et` (noun coordination) stays useful.
        let useful: Vec<&Finding> = findings
            .iter()
            .filter(|f| f.classification == Classification::Useful)
            .collect();
        assert_eq!(useful.len(), 1);
    }

    #[test]
    fn shared_subject_et_is_ambiguous() {
        let (unit, lexicon) = unit_fr(
            "Sur réception de cette TC, le LVC met à jour la table des surveillances standards de l'application destinataire et ré-initialise le compteur d'erreur (remise à 0) associé à cette surveillance.",
        );
        let findings = check_combinators(&unit, Language::Fr, lexicon, &config_fr());
        let ambiguous: Vec<&Finding> = findings
            .iter()
            .filter(|f| f.classification == Classification::Ambiguous)
            .collect();
        assert_eq!(ambiguous.len(), 1);
        assert_eq!(ambiguous[0].evidence, vec!["et"]);
    }

    #[test]
    fn unconditioned_ou_is_ambiguous() {
        let (unit, lexicon) = unit_fr(
            "Pour cela, on utilisera les données BDS (LENGTH et LOCATION_UNIT) de la table des OBCD (globaux) ou la description (LONGUEUR) des paramètres diagnostic déjà créés.",
        );
        let findings = check_combinators(&unit, Language::Fr, lexicon, &config_fr());
        let ambiguous: Vec<&Finding> = findings
            .iter()
            .filter(|f| f.classification == Classification::Ambiguous)
            .collect();
        assert_eq!(ambiguous.len(), 1);
        assert_eq!(ambiguous[0].evidence, vec!["ou"]);
        // The parenthesized `et` is mere noun coordination.
        assert!(findings
            .iter()
            .filter(|f| f.evidence == vec!["et"])
            .all(|f| f.classification == Classification::Useful));
    }

    #[test]
    fn no_combinators_no_findings() {
        let (unit, lexicon) = unit_fr("Le champ X sera extrait.");
        assert!(check_combinators(&unit, Language::Fr, lexicon, &config_fr()).is_empty());
    }

    #[test]
    fn mixed_connectives_same_depth() {
        let (unit, _) = unit_fr("(eg : 2 et 10 ou 3 et 11)");
        let findings = check_mixed_connectives(&unit, Language::Fr);
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].evidence, vec!["et", "ou", "et"]);
        assert_eq!(findings[0].severity, Severity::Warning);
    }

    #[test]
    fn mixed_connectives_different_depths_ok() {
        let (unit, _) = unit_fr("A et (B ou C)");
        assert!(check_mixed_connectives(&unit, Language::Fr).is_empty());
    }

    #[test]
    fn mixed_connectives_different_sentences_ok() {
        let (unit, _) = unit_fr("A et B.\nC ou D.");
        assert!(check_mixed_connectives(&unit, Language::Fr).is_empty());
    }

    #[test]
    fn list_without_connective_is_ambiguous() {
        let (unit, _) = unit_fr(
            "Cet ordre est rejeté si :\n- le mode NORM automatique est actif\n- le satellite est en mode MAN\n- le satellite n'est pas en mode convergé (GAP ou SUP)\n- un ordre MAN/CAP est déjà en attente d'exécution",
        );
        let findings = check_list_connectives(&unit, Language::Fr);
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].sentence_index, 0);
        assert_eq!(findings[0].rule_id, RuleId::ListConnective);
    }

    #[test]
    fn list_with_penultimate_coordinator_ok() {
        let (unit, _) = unit_fr(
            "Cet ordre est rejeté si :\n- le mode NORM automatique est actif\n- le satellite est en mode MAN, ou\n- un ordre MAN/CAP est déjà en attente d'exécution",
        );
        assert!(check_list_connectives(&unit, Language::Fr).is_empty());
    }

    #[test]
    fn list_with_quantified_intro_ok() {
        let (unit, _) = unit_fr(
            "Cet ordre est rejeté si l'une des conditions suivantes est vraie :\n- le mode NORM automatique est actif\n- le satellite est en mode MAN",
        );
        assert!(check_list_connectives(&unit, Language::Fr).is_empty());
    }

    #[test]
    fn no_list_no_finding() {
        let (unit, _) = unit_fr("Cet ordre est rejeté.");
        assert!(check_list_connectives(&unit, Language::Fr).is_empty());
    }

    #[test]
    fn opening_pronoun_breaks_autonomy() {
        let (unit, _) = unit_fr(
            "Il calculera aussi, a une fréquence paramétrable (ordre de grandeur 1 mois), la moyenne de mise en œuvre et la comparera à la moyenne maximum afin d'anticiper un problème éventuel.",
        );
        let findings = check_pronouns(&unit, Language::Fr, &config_fr());
        let errors: Vec<&Finding> = findings
            .iter()
            .filter(|f| f.severity == Severity::Error)
            .collect();
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].classification, Classification::NonAutonomous);
        assert_eq!(errors[0].evidence, vec!["Il"]);
    }

    #[test]
    fn pronoun_with_antecedent_is_useful() {
        let (unit, _) =
            unit_fr("La liste des TCD est définie en BDS. Elle est donnée ici à titre informatif:");
        let findings = check_pronouns(&unit, Language::Fr, &config_fr());
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].classification, Classification::Useful);
        assert_eq!(findings[0].evidence, vec!["Elle"]);
        assert_eq!(findings[0].sentence_index, 1);
    }

    #[test]
    fn demonstrative_gets_nearest_noun_note() {
        let (unit, _) = unit_fr(
            "Le générateur de TC ne rejettera pas la création du PARAM_ID diagnostic si celui-ci est déjà défini à bord.",
        );
        let findings = check_pronouns(&unit, Language::Fr, &config_fr());
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].classification, Classification::Useful);
        assert!(findings[0].message.contains("nearest noun"));
    }

    #[test]
    fn subject_pronoun_without_antecedent_is_error() {
        let (unit, _) = unit_fr("Ensuite il sera comparé à la moyenne.");
        let findings = check_pronouns(&unit, Language::Fr, &config_fr());
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].classification, Classification::NonAutonomous);
    }

    #[test]
    fn no_pronouns_no_findings() {
        let (unit, _) = unit_fr("Le paquet sera généré.");
        assert!(check_pronouns(&unit, Language::Fr, &config_fr()).is_empty());
    }

    #[test]
    fn sentence_length_strictly_greater() {
        let words26: String = (0..26)
            .map(|i| format!("mot{i}"))
            .collect::<Vec<_>>()
            .join(" ");
        let (unit, _) = unit_fr(&words26);
        let findings = check_sentence_length(&unit, &config_fr());
        assert_eq!(findings.len(), 1);
        assert!(findings[0].message.contains("26"));

        let words25: String = (0..25)
            .map(|i| format!("mot{i}"))
            .collect::<Vec<_>>()
            .join(" ");
        let (unit, _) = unit_fr(&words25);
        assert!(check_sentence_length(&unit, &config_fr()).is_empty());
    }

    #[test]
    fn run_all_respects_disabled_rules() {
        let corpus = parse_requirement_str(
            "t.req",
            &format!(
                "[REQ L1]\n{}\n[/REQ]\n",
                (0..30)
                    .map(|i| format!("mot{i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            Language::Fr,
        )
        .unwrap();
        let analyzed = analyze_with_builtins(&corpus);
        let lexicon = Lexicon::builtin(Language::Fr);
        let mut config = RuleConfig::new(Language::Fr);
        let findings = run_all(&analyzed, lexicon, &config);
        assert!(findings.iter().any(|f| f.rule_id == RuleId::LongSentence));
        config.disable(RuleId::LongSentence);
        let findings = run_all(&analyzed, lexicon, &config);
        assert!(findings.iter().all(|f| f.rule_id != RuleId::LongSentence));
    }

    #[test]
    fn run_all_hides_mandatory_by_default() {
        let corpus = parse_requirement_str(
            "t.req",
            "[REQ E1]\nLe générateur de TCH vérifiera que la valeur du champ PHASE est comprise entre 0 et `FREQ_DIV -1`.\n[/REQ]\n",
            Language::Fr,
        )
        .unwrap();
        let analyzed = analyze_with_builtins(&corpus);
        let lexicon = Lexicon::builtin(Language::Fr);
        let mut config = RuleConfig::new(Language::Fr);
        assert!(run_all(&analyzed, lexicon, &config).is_empty());
        config.report_mandatory = true;
        let findings = run_all(&analyzed, lexicon, &config);
        assert_eq!(findings.len(), 2);
        assert!(findings.iter().all(|f| f.severity == Severity::Info));
    }

    #[test]
    fn severity_overrides_applied_last() {
        let corpus = parse_requirement_str(
            "t.req",
            &format!(
                "[REQ L1]\n{}\n[/REQ]\n",
                (0..30)
                    .map(|i| format!("mot{i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            Language::Fr,
        )
        .unwrap();
        let analyzed = analyze_with_builtins(&corpus);
        let lexicon = Lexicon::builtin(Language::Fr);
        let mut config = RuleConfig::new(Language::Fr);
        config
            .severity_overrides
            .insert(RuleId::LongSentence, Severity::Error);
        let findings = run_all(&analyzed, lexicon, &config);
        assert!(findings
            .iter()
            .filter(|f| f.rule_id == RuleId::LongSentence)
            .all(|f| f.severity == Severity::Error));
    }
}
