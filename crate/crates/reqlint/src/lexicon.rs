//! Closed-class lexicons and the deterministic contextual tagger.
//!
//! Tagging is lexicon-driven: unambiguous entries tag directly, surfaces
//! marked ambiguous go through a fixed, ordered set of context rules, and
//! everything else is `other`. The tagger is sentence-local and pure, so
//! results do not depend on surrounding sentences or requirements.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::Language;
use crate::segment::Sentence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Major {
    Coordinator,
    Subordinator,
    Pronoun,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PronounSubtype {
    PersonalSubject,
    PersonalObject,
    Impersonal,
    Relative,
    Demonstrative,
    Indefinite,
}

/// How a tag was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Single-reading lexicon entry.
    LexiconUnambiguous,
    /// Ambiguous surface resolved by a context rule.
    ContextRule,
    /// Not in the lexicon, or ambiguous with no applicable rule.
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryTag {
    pub major: Major,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pronoun_subtype: Option<PronounSubtype>,
    pub provenance: Provenance,
}

impl CategoryTag {
    pub fn other(provenance: Provenance) -> Self {
        CategoryTag {
            major: Major::Other,
            pronoun_subtype: None,
            provenance,
        }
    }

    pub fn pronoun(subtype: PronounSubtype, provenance: Provenance) -> Self {
        CategoryTag {
            major: Major::Pronoun,
            pronoun_subtype: Some(subtype),
            provenance,
        }
    }

    fn from_spec(spec: TagSpec, provenance: Provenance) -> Self {
        CategoryTag {
            major: spec.major,
            pronoun_subtype: spec.subtype,
            provenance,
        }
    }
}

/// One possible reading of a lexicon surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TagSpec {
    pub major: Major,
    pub subtype: Option<PronounSubtype>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub possible: Vec<TagSpec>,
    pub ambiguous: bool,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{path}: cannot read lexicon: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: malformed lexicon line: {content}")]
    MalformedLine {
        path: String,
        line: usize,
        content: String,
    },
    #[error("{path}:{line}: unknown category `{word}`")]
    UnknownCategory {
        path: String,
        line: usize,
        word: String,
    },
}

/// Immutable closed-class word inventory for one language.
#[derive(Debug, Clone)]
pub struct Lexicon {
    language: Language,
    entries: HashMap<String, LexEntry>,
    verb_cue_forms: HashSet<String>,
    verb_cue_suffixes: Vec<String>,
    impersonal_adjectives: HashSet<String>,
}

const FR_LEXICON: &str = include_str!("../data/lexicon_fr.lex");
const EN_LEXICON: &str = include_str!("../data/lexicon_en.lex");

static BUILTIN_FR: OnceLock<Lexicon> = OnceLock::new();
static BUILTIN_EN: OnceLock<Lexicon> = OnceLock::new();

impl Lexicon {
    /// The builtin lexicon for `language`.
    pub fn builtin(language: Language) -> &'static Lexicon {
        let (cell, src) = match language {
            Language::Fr => (&BUILTIN_FR, FR_LEXICON),
            Language::En => (&BUILTIN_EN, EN_LEXICON),
        };
        cell.get_or_init(|| {
            let mut lex = Lexicon::empty(language);
            lex.merge_source(src, "<builtin>")
                .expect("builtin lexicon is well-formed");
            lex
        })
    }

    /// Builtin lexicon extended with a user file; user entries override
    /// builtin entries for the same surface.
    pub fn from_file(path: &Path, language: Language) -> Result<Lexicon, LexiconError> {
        let text = fs::read_to_string(path).map_err(|source| LexiconError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut lex = Lexicon::builtin(language).clone();
        lex.merge_source(&text, &path.display().to_string())?;
        Ok(lex)
    }

    fn empty(language: Language) -> Lexicon {
        Lexicon {
            language,
            entries: HashMap::new(),
            verb_cue_forms: HashSet::new(),
            verb_cue_suffixes: Vec::new(),
            impersonal_adjectives: HashSet::new(),
        }
    }

    fn merge_source(&mut self, text: &str, path: &str) -> Result<(), LexiconError> {
        #[derive(PartialEq)]
        enum Section {
            Entries,
            VerbCues,
            ImpersonalAdjectives,
        }
        let mut section = Section::Entries;
        // Surfaces already replaced during this merge: the first user line
        // for a surface overrides the base entry, later lines accumulate.
        let mut replaced: HashSet<String> = HashSet::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line {
                "[entries]" => {
                    section = Section::Entries;
                    continue;
                }
                "[verb_cues]" => {
                    section = Section::VerbCues;
                    continue;
                }
                "[impersonal_adjectives]" => {
                    section = Section::ImpersonalAdjectives;
                    continue;
                }
                _ => {}
            }
            if line.starts_with('[') && line.ends_with(']') {
                return Err(LexiconError::MalformedLine {
                    path: path.to_string(),
                    line: line_no,
                    content: line.to_string(),
                });
            }
            match section {
                Section::VerbCues => {
                    if let Some(suffix) = line.strip_prefix('*') {
                        self.verb_cue_suffixes.push(suffix.to_lowercase());
                    } else {
                        self.verb_cue_forms.insert(line.to_lowercase());
                    }
                }
                Section::ImpersonalAdjectives => {
                    self.impersonal_adjectives.insert(line.to_lowercase());
                }
                Section::Entries => {
                    let fields: Vec<&str> = line.split('\t').collect();
                    if fields.len() < 2 || fields.len() > 4 {
                        return Err(LexiconError::MalformedLine {
                            path: path.to_string(),
                            line: line_no,
                            content: line.to_string(),
                        });
                    }
                    let surface = fields[0].to_string();
                    if surface.is_empty() {
                        return Err(LexiconError::MalformedLine {
                            path: path.to_string(),
                            line: line_no,
                            content: line.to_string(),
                        });
                    }
                    let major =
                        parse_major(fields[1]).ok_or_else(|| LexiconError::UnknownCategory {
                            path: path.to_string(),
                            line: line_no,
                            word: fields[1].to_string(),
                        })?;
                    let mut subtype = None;
                    let mut ambiguous = false;
                    for &field in &fields[2..] {
                        if field == "ambiguous" {
                            ambiguous = true;
                        } else if let Some(st) = parse_subtype(field) {
                            if major != Major::Pronoun || subtype.is_some() {
                                return Err(LexiconError::MalformedLine {
                                    path: path.to_string(),
                                    line: line_no,
                                    content: line.to_string(),
                                });
                            }
                            subtype = Some(st);
                        } else {
                            return Err(LexiconError::UnknownCategory {
                                path: path.to_string(),
                                line: line_no,
                                word: field.to_string(),
                            });
                        }
                    }
                    if major == Major::Pronoun && subtype.is_none() {
                        return Err(LexiconError::MalformedLine {
                            path: path.to_string(),
                            line: line_no,
                            content: line.to_string(),
                        });
                    }
                    let spec = TagSpec { major, subtype };
                    let fresh = replaced.insert(surface.clone());
                    let entry = self.entries.entry(surface).or_insert_with(|| LexEntry {
                        possible: Vec::new(),
                        ambiguous: false,
                    });
                    if fresh && !entry.possible.is_empty() {
                        entry.possible.clear();
                        entry.ambiguous = false;
                    }
                    entry.possible.push(spec);
                    entry.ambiguous |= ambiguous;
                }
            }
        }
        Ok(())
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn lookup(&self, surface: &str) -> Option<&LexEntry> {
        self.entries.get(surface)
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.entries.contains_key(surface)
    }

    /// Finite-verb heuristic: explicit form list plus future-tense suffixes.
    /// Suffixes only apply to fully lowercase surfaces so that identifiers
    /// like `CAMERA` are not mistaken for verbs.
    pub fn is_verb_cue(&self, surface: &str) -> bool {
        self.is_verb_cue_lower(surface, &surface.to_lowercase())
    }

    pub(crate) fn is_verb_cue_lower(&self, surface: &str, lower: &str) -> bool {
        if self.verb_cue_forms.contains(lower) {
            return true;
        }
        if surface.chars().any(|c| c.is_uppercase()) || surface.chars().count() < 3 {
            return false;
        }
        self.verb_cue_suffixes.iter().any(|s| lower.ends_with(s))
    }

    pub fn is_impersonal_adjective(&self, surface: &str) -> bool {
        self.impersonal_adjectives.contains(&surface.to_lowercase())
    }

    /// Hyphenated entries, used by the tokenizer to keep compounds single.
    pub fn hyphen_compounds(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .entries
            .keys()
            .filter(|s| s.contains('-'))
            .cloned()
            .collect();
        out.sort();
        out
    }
}

fn parse_major(s: &str) -> Option<Major> {
    match s {
        "coordinator" => Some(Major::Coordinator),
        "subordinator" => Some(Major::Subordinator),
        "pronoun" => Some(Major::Pronoun),
        "other" => Some(Major::Other),
        _ => None,
    }
}

fn parse_subtype(s: &str) -> Option<PronounSubtype> {
    match s {
        "personal_subject" => Some(PronounSubtype::PersonalSubject),
        "personal_object" => Some(PronounSubtype::PersonalObject),
        "impersonal" => Some(PronounSubtype::Impersonal),
        "relative" => Some(PronounSubtype::Relative),
        "demonstrative" => Some(PronounSubtype::Demonstrative),
        "indefinite" => Some(PronounSubtype::Indefinite),
        _ => None,
    }
}

/// Convenience wrapper around [`Lexicon::builtin`] / [`Lexicon::from_file`].
pub fn load_lexicon(path: Option<&Path>, language: Language) -> Result<Lexicon, LexiconError> {
    match path {
        Some(p) => Lexicon::from_file(p, language),
        None => Ok(Lexicon::builtin(language).clone()),
    }
}

// --- Tagging ---------------------------------------------------------------

/// Negation tokens skipped by the impersonal-`il` rule.
const FR_NEGATION: &[&str] = &["ne", "n'", "pas", "plus", "jamais"];
const EN_NEGATION: &[&str] = &["not", "never"];

/// Impersonal verb forms for `il faut`-style constructions.
const FR_IMPERSONAL_VERBS: &[&str] =
    &["faut", "faudra", "fallait", "suffit", "convient", "importe"];

/// The être forms accepted by the impersonal rule (`il est utile de …`).
const FR_ETRE_FORMS: &[&str] = &["est", "sera", "serait", "était", "fut"];
const EN_BE_FORMS: &[&str] = &["is", "was"];
const EN_MODALS: &[&str] = &[
    "will", "would", "shall", "should", "must", "may", "might", "can", "could",
];

/// Adjectives that keep `si` a subordinator even though an adjective follows.
const FR_SI_SUBORDINATOR_ADJ: &[&str] = &["possible", "nécessaire", "besoin"];

/// Intensifier-adjective cues: `si grand`-type degree adverb readings.
const FR_INTENSIFIER_ADJ: &[&str] = &[
    "grand",
    "grande",
    "grands",
    "grandes",
    "petit",
    "petite",
    "petits",
    "petites",
    "élevé",
    "élevée",
    "élevés",
    "élevées",
    "faible",
    "faibles",
    "long",
    "longue",
    "longs",
    "longues",
    "court",
    "courte",
    "courts",
    "courtes",
    "rapide",
    "rapides",
    "lent",
    "lente",
    "lents",
    "lentes",
];

/// Assign a category tag to every word and number token of the sentence.
///
/// Lookups fold the case of the first letter for the first word token of the
/// sentence and are case-sensitive elsewhere.
pub fn tag_tokens(sentence: &mut Sentence, lexicon: &Lexicon) {
    let word_idx: Vec<usize> = sentence
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_word())
        .map(|(i, _)| i)
        .collect();

    let tags: Vec<CategoryTag> = {
        let words: Vec<&str> = word_idx
            .iter()
            .map(|&i| sentence.tokens[i].surface.as_str())
            .collect();
        let lowers: Vec<String> = words.iter().map(|w| w.to_lowercase()).collect();
        let cues: Vec<bool> = words
            .iter()
            .zip(&lowers)
            .map(|(w, l)| lexicon.is_verb_cue_lower(w, l))
            .collect();
        let ctx = TagContext {
            words: &words,
            lowers: &lowers,
            cues: &cues,
            lexicon,
        };

        let mut tags: Vec<CategoryTag> = Vec::with_capacity(words.len());
        for (pos, &surface) in words.iter().enumerate() {
            let folded;
            let (entry, key) = if let Some(entry) = lexicon.lookup(surface) {
                (Some(entry), surface)
            } else if pos == 0 {
                folded = fold_first(surface);
                (lexicon.lookup(&folded), folded.as_str())
            } else {
                (None, surface)
            };
            let tag = match entry {
                None => CategoryTag::other(Provenance::Default),
                Some(entry) if !entry.ambiguous => {
                    CategoryTag::from_spec(entry.possible[0], Provenance::LexiconUnambiguous)
                }
                Some(entry) => match resolve_ambiguous(key, pos, &ctx, &tags) {
                    Some(tag) => tag,
                    None => CategoryTag::from_spec(entry.possible[0], Provenance::Default),
                },
            };
            tags.push(tag);
        }
        tags
    };

    for (pos, &i) in word_idx.iter().enumerate() {
        sentence.tokens[i].tag = Some(tags[pos]);
    }
}

/// Per-sentence word context shared by the disambiguation rules.
struct TagContext<'a> {
    words: &'a [&'a str],
    lowers: &'a [String],
    cues: &'a [bool],
    lexicon: &'a Lexicon,
}

fn fold_first(surface: &str) -> String {
    let mut chars = surface.chars();
    match chars.next() {
        Some(first) => first.to_lowercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Tag every sentence of a list in place.
pub fn tag_sentences(sentences: &mut [Sentence], lexicon: &Lexicon) {
    for sentence in sentences {
        tag_tokens(sentence, lexicon);
    }
}

/// Ordered context rules for the known ambiguous surfaces. Returns None for
/// ambiguous surfaces with no rule (they fall back to the first reading).
fn resolve_ambiguous(
    key: &str,
    pos: usize,
    ctx: &TagContext,
    tags: &[CategoryTag],
) -> Option<CategoryTag> {
    match ctx.lexicon.language() {
        Language::Fr => resolve_fr(key, pos, ctx, tags),
        Language::En => resolve_en(key, pos, ctx, tags),
    }
}

fn subordinator(prov: Provenance) -> CategoryTag {
    CategoryTag {
        major: Major::Subordinator,
        pronoun_subtype: None,
        provenance: prov,
    }
}

fn resolve_fr(
    key: &str,
    pos: usize,
    ctx: &TagContext,
    tags: &[CategoryTag],
) -> Option<CategoryTag> {
    let prov = Provenance::ContextRule;
    let lowers = ctx.lowers;
    let n = ctx.words.len();
    match key {
        // Relative after a plain noun-like word, complementizer otherwise.
        "que" | "qu'" => {
            let relative = pos > 0 && tags[pos - 1].major == Major::Other && !ctx.cues[pos - 1];
            Some(if relative {
                CategoryTag::pronoun(PronounSubtype::Relative, prov)
            } else {
                subordinator(prov)
            })
        }
        // Object clitic next to a verb or after a subject clitic, determiner
        // otherwise.
        "le" | "la" | "les" | "l'" => {
            let after_subject = pos > 0
                && (tags[pos - 1].pronoun_subtype == Some(PronounSubtype::PersonalSubject)
                    || matches!(lowers[pos - 1].as_str(), "ne" | "n'"));
            let before_verb = pos + 1 < n && ctx.cues[pos + 1];
            Some(if after_subject || before_verb {
                CategoryTag::pronoun(PronounSubtype::PersonalObject, prov)
            } else {
                CategoryTag::other(prov)
            })
        }
        "il" | "ils" => {
            let subtype = if impersonal_il(pos, ctx) {
                PronounSubtype::Impersonal
            } else {
                PronounSubtype::PersonalSubject
            };
            Some(CategoryTag::pronoun(subtype, prov))
        }
        // Degree-adverb reading before an intensifier adjective, subordinator
        // otherwise (`si possible` stays a subordinator).
        "si" => {
            let intensifier = pos + 1 < n && {
                let next = lowers[pos + 1].as_str();
                FR_INTENSIFIER_ADJ.contains(&next) && !FR_SI_SUBORDINATOR_ADJ.contains(&next)
            };
            Some(if intensifier {
                CategoryTag::other(prov)
            } else {
                subordinator(prov)
            })
        }
        // Elided `si` before il/ils, reflexive clitic otherwise.
        "s'" => {
            let before_il = pos + 1 < n && matches!(lowers[pos + 1].as_str(), "il" | "ils");
            Some(if before_il {
                subordinator(prov)
            } else {
                CategoryTag::pronoun(PronounSubtype::PersonalObject, prov)
            })
        }
        // Clitic pronoun directly before a verb, preposition/adverb otherwise.
        "en" | "y" => {
            let before_verb = pos + 1 < n && ctx.cues[pos + 1];
            Some(if before_verb {
                CategoryTag::pronoun(PronounSubtype::PersonalObject, prov)
            } else {
                CategoryTag::other(prov)
            })
        }
        _ => None,
    }
}

/// `il`/`ils` is impersonal when followed, skipping up to two negation
/// tokens, by an impersonal verb (`faut`, `s'agit`, …) or by a être form
/// whose next word (negations skipped as well) is an impersonal adjective.
fn impersonal_il(pos: usize, ctx: &TagContext) -> bool {
    let lowers = ctx.lowers;
    let is_neg = |w: &str| FR_NEGATION.contains(&w);
    let n = lowers.len();
    let mut j = pos + 1;
    let mut skips = 0;
    while j < n && skips < 2 && is_neg(&lowers[j]) {
        j += 1;
        skips += 1;
    }
    if j >= n {
        return false;
    }
    let w = lowers[j].as_str();
    if FR_IMPERSONAL_VERBS.contains(&w) {
        return true;
    }
    // `il s'agit` tokenizes as il / s' / agit.
    if w == "s'" && j + 1 < n && lowers[j + 1] == "agit" {
        return true;
    }
    if FR_ETRE_FORMS.contains(&w) {
        let mut k = j + 1;
        let mut skips2 = 0;
        while k < n && skips2 < 2 && is_neg(&lowers[k]) {
            k += 1;
            skips2 += 1;
        }
        return k < n && ctx.lexicon.is_impersonal_adjective(&lowers[k]);
    }
    false
}

fn resolve_en(
    key: &str,
    pos: usize,
    ctx: &TagContext,
    tags: &[CategoryTag],
) -> Option<CategoryTag> {
    let prov = Provenance::ContextRule;
    let n = ctx.words.len();
    match key {
        // Subordinator after a verb cue, relative after a noun-like token,
        // demonstrative before a verb cue, determiner before another word.
        "that" => {
            if pos > 0 && ctx.cues[pos - 1] {
                return Some(subordinator(prov));
            }
            if pos > 0 && tags[pos - 1].major == Major::Other {
                return Some(CategoryTag::pronoun(PronounSubtype::Relative, prov));
            }
            if pos + 1 < n && ctx.cues[pos + 1] {
                return Some(CategoryTag::pronoun(PronounSubtype::Demonstrative, prov));
            }
            if pos + 1 < n {
                return Some(CategoryTag::other(prov));
            }
            Some(CategoryTag::pronoun(PronounSubtype::Demonstrative, prov))
        }
        "this" | "these" | "those" => {
            if pos + 1 < n && ctx.cues[pos + 1] {
                return Some(CategoryTag::pronoun(PronounSubtype::Demonstrative, prov));
            }
            if pos + 1 < n {
                return Some(CategoryTag::other(prov));
            }
            Some(CategoryTag::pronoun(PronounSubtype::Demonstrative, prov))
        }
        "it" => {
            let subtype = if impersonal_it(pos, ctx) {
                PronounSubtype::Impersonal
            } else {
                PronounSubtype::PersonalSubject
            };
            Some(CategoryTag::pronoun(subtype, prov))
        }
        _ => None,
    }
}

/// English mirror of the impersonal rule: `it is|was [not] <adjective>` or
/// `it <modal> [not] be <adjective>`.
fn impersonal_it(pos: usize, ctx: &TagContext) -> bool {
    let lowers = ctx.lowers;
    let is_neg = |w: &str| EN_NEGATION.contains(&w);
    let n = lowers.len();
    let mut j = pos + 1;
    let mut skips = 0;
    while j < n && skips < 2 && is_neg(&lowers[j]) {
        j += 1;
        skips += 1;
    }
    if j >= n {
        return false;
    }
    let adjective_after = |mut k: usize| {
        let mut skips2 = 0;
        while k < n && skips2 < 2 && is_neg(&lowers[k]) {
            k += 1;
            skips2 += 1;
        }
        k < n && ctx.lexicon.is_impersonal_adjective(&lowers[k])
    };
    if EN_BE_FORMS.contains(&lowers[j].as_str()) {
        return adjective_after(j + 1);
    }
    if EN_MODALS.contains(&lowers[j].as_str()) {
        let mut k = j + 1;
        let mut skips2 = 0;
        while k < n && skips2 < 2 && is_neg(&lowers[k]) {
            k += 1;
            skips2 += 1;
        }
        if k < n && lowers[k] == "be" {
            return adjective_after(k + 1);
        }
    }
    false
}
