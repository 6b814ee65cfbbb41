//! Per-corpus genre statistics and cross-corpus comparison: category counts,
//! word-normalized percentages and sentence-length distributions.
//!
//! Display precision is fixed: word-normalized percentages round half-up to
//! 2 decimals, sentence shares to 1 decimal, average sentence length to a
//! whole word.

use std::fmt;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::corpus::{Corpus, CorpusContent};
use crate::lexicon::Major;
use crate::pipeline::AnalyzedCorpus;
use crate::rules::RuleConfig;
use crate::segment::Segmenter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKey {
    Coordinator,
    Subordinator,
    ConjunctionTotal,
    Pronoun,
}

impl CountKey {
    pub const ALL: [CountKey; 4] = [
        CountKey::Coordinator,
        CountKey::Subordinator,
        CountKey::ConjunctionTotal,
        CountKey::Pronoun,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CountKey::Coordinator => "coordinators",
            CountKey::Subordinator => "subordinators",
            CountKey::ConjunctionTotal => "conjunctions (total)",
            CountKey::Pronoun => "pronouns",
        }
    }
}

/// Category counts; the conjunction total is always coordinator +
/// subordinator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryCounts {
    pub coordinator: u64,
    pub subordinator: u64,
    pub conjunction_total: u64,
    pub pronoun: u64,
}

impl CategoryCounts {
    pub fn new(coordinator: u64, subordinator: u64, pronoun: u64) -> Self {
        CategoryCounts {
            coordinator,
            subordinator,
            conjunction_total: coordinator + subordinator,
            pronoun,
        }
    }

    pub fn get(&self, key: CountKey) -> u64 {
        match key {
            CountKey::Coordinator => self.coordinator,
            CountKey::Subordinator => self.subordinator,
            CountKey::ConjunctionTotal => self.conjunction_total,
            CountKey::Pronoun => self.pronoun,
        }
    }
}

/// A percentage stored in hundredths, rendered as `X.YY`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pct2(pub u64);

impl fmt::Display for Pct2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:02}", self.0 / 100, self.0 % 100)
    }
}

/// A percentage stored in tenths, rendered as `X.Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pct1(pub u64);

impl fmt::Display for Pct1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.0 / 10, self.0 % 10)
    }
}

impl Serialize for Pct2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Pct2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_fixed(&s, 2)
            .map(Pct2)
            .ok_or_else(|| D::Error::custom(format!("invalid 2-decimal percentage `{s}`")))
    }
}

impl Serialize for Pct1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Pct1 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_fixed(&s, 1)
            .map(Pct1)
            .ok_or_else(|| D::Error::custom(format!("invalid 1-decimal percentage `{s}`")))
    }
}

fn parse_fixed(s: &str, decimals: u32) -> Option<u64> {
    let (whole, frac) = s.split_once('.')?;
    if frac.len() != decimals as usize {
        return None;
    }
    let whole: u64 = whole.parse().ok()?;
    let frac: u64 = frac.parse().ok()?;
    Some(whole * 10u64.pow(decimals) + frac)
}

/// Round `numer / denom` half-up to the nearest integer.
fn round_half_up(numer: u128, denom: u128) -> u64 {
    ((2 * numer + denom) / (2 * denom)) as u64
}

/// `count / total × 100`, half-up to 2 decimals (in hundredths).
pub fn percent_2dp(count: u64, total: u64) -> Pct2 {
    Pct2(round_half_up(count as u128 * 10_000, total as u128))
}

/// `count / total × 100`, half-up to 1 decimal (in tenths).
pub fn percent_1dp(count: u64, total: u64) -> Pct1 {
    Pct1(round_half_up(count as u128 * 1_000, total as u128))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryPercentages {
    pub coordinator: Pct2,
    pub subordinator: Pct2,
    pub conjunction_total: Pct2,
    pub pronoun: Pct2,
}

impl CategoryPercentages {
    pub fn get(&self, key: CountKey) -> Pct2 {
        match key {
            CountKey::Coordinator => self.coordinator,
            CountKey::Subordinator => self.subordinator,
            CountKey::ConjunctionTotal => self.conjunction_total,
            CountKey::Pronoun => self.pronoun,
        }
    }
}

/// Aggregate statistics for one corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub corpus_name: String,
    pub total_words: u64,
    pub counts: CategoryCounts,
    pub percentages: CategoryPercentages,
    pub sentence_count: u64,
    pub long_sentence_count: u64,
    pub long_sentence_percent: Pct1,
    pub avg_sentence_length: u64,
    pub threshold_used: usize,
}

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("corpus `{name}` has no words; averages are undefined")]
    EmptyCorpus { name: String },
}

#[derive(Debug, Error)]
pub enum TruncateError {
    #[error(
        "target of {target} words is too small: the first unit alone has {first_unit_words} words"
    )]
    TargetTooSmall {
        target: usize,
        first_unit_words: usize,
    },
}

impl CorpusStats {
    /// Derive every percentage and average from raw counts. This is the one
    /// place the display arithmetic lives.
    pub fn from_raw(
        corpus_name: impl Into<String>,
        total_words: u64,
        counts: CategoryCounts,
        sentence_count: u64,
        long_sentence_count: u64,
        threshold_used: usize,
    ) -> Result<Self, StatsError> {
        let corpus_name = corpus_name.into();
        if total_words == 0 {
            return Err(StatsError::EmptyCorpus { name: corpus_name });
        }
        let percentages = CategoryPercentages {
            coordinator: percent_2dp(counts.coordinator, total_words),
            subordinator: percent_2dp(counts.subordinator, total_words),
            conjunction_total: percent_2dp(counts.conjunction_total, total_words),
            pronoun: percent_2dp(counts.pronoun, total_words),
        };
        let (long_sentence_percent, avg_sentence_length) = if sentence_count == 0 {
            (Pct1(0), 0)
        } else {
            (
                percent_1dp(long_sentence_count, sentence_count),
                round_half_up(total_words as u128, sentence_count as u128),
            )
        };
        Ok(CorpusStats {
            corpus_name,
            total_words,
            counts,
            percentages,
            sentence_count,
            long_sentence_count,
            long_sentence_percent,
            avg_sentence_length,
            threshold_used,
        })
    }
}

/// Compute the statistics of a tagged, segmented corpus. Counts come from
/// the category tags alone.
pub fn compute_stats(
    corpus: &AnalyzedCorpus,
    config: &RuleConfig,
) -> Result<CorpusStats, StatsError> {
    let threshold = config.long_sentence_threshold;
    let mut coordinator = 0u64;
    let mut subordinator = 0u64;
    let mut pronoun = 0u64;
    let mut total_words = 0u64;
    let mut sentence_count = 0u64;
    let mut long_sentence_count = 0u64;
    for unit in &corpus.units {
        for sentence in &unit.sentences {
            sentence_count += 1;
            let words = sentence.word_count() as u64;
            total_words += words;
            if words as usize > threshold {
                long_sentence_count += 1;
            }
            for token in sentence.tokens.iter().filter(|t| t.is_word()) {
                match token.tag.map(|t| t.major) {
                    Some(Major::Coordinator) => coordinator += 1,
                    Some(Major::Subordinator) => subordinator += 1,
                    Some(Major::Pronoun) => pronoun += 1,
                    _ => {}
                }
            }
        }
    }
    CorpusStats::from_raw(
        corpus.name.clone(),
        total_words,
        CategoryCounts::new(coordinator, subordinator, pronoun),
        sentence_count,
        long_sentence_count,
        threshold,
    )
}

/// Keep whole requirements (tagged mode) or whole sentences (plain mode), in
/// order, until adding the next unit would exceed `target_words`. Units are
/// never split, so the resulting word count is at most `target_words`.
pub fn truncate_corpus(corpus: &Corpus, target_words: usize) -> Result<Corpus, TruncateError> {
    truncate_corpus_with(corpus, target_words, &Segmenter::new(corpus.language))
}

/// [`truncate_corpus`] with an explicit segmenter, so word counting matches
/// a lexicon-aware pipeline.
pub fn truncate_corpus_with(
    corpus: &Corpus,
    target_words: usize,
    segmenter: &Segmenter,
) -> Result<Corpus, TruncateError> {
    let unit_words = |body: &str| -> usize {
        segmenter
            .split_sentences(body)
            .iter()
            .map(|s| s.word_count())
            .sum()
    };
    match &corpus.content {
        CorpusContent::Tagged(requirements) => {
            let mut kept = Vec::new();
            let mut words = 0usize;
            for (idx, req) in requirements.iter().enumerate() {
                let w = unit_words(&req.body);
                if words + w > target_words {
                    if idx == 0 {
                        return Err(TruncateError::TargetTooSmall {
                            target: target_words,
                            first_unit_words: w,
                        });
                    }
                    break;
                }
                words += w;
                kept.push(req.clone());
            }
            Ok(Corpus {
                name: corpus.name.clone(),
                language: corpus.language,
                content: CorpusContent::Tagged(kept),
            })
        }
        CorpusContent::Plain(body) => {
            let sentences = segmenter.split_sentences(body);
            let mut words = 0usize;
            let mut end = 0usize;
            for (idx, sentence) in sentences.iter().enumerate() {
                let w = sentence.word_count();
                if words + w > target_words {
                    if idx == 0 {
                        return Err(TruncateError::TargetTooSmall {
                            target: target_words,
                            first_unit_words: w,
                        });
                    }
                    break;
                }
                words += w;
                end = sentence.source_span.end;
            }
            if end == body.len() {
                return Ok(corpus.clone());
            }
            Ok(Corpus {
                name: corpus.name.clone(),
                language: corpus.language,
                content: CorpusContent::Plain(body[..end].to_string()),
            })
        }
    }
}

/// One frequency ratio between two corpora for one category: the
/// word-normalized frequency of the numerator corpus divided by the
/// denominator corpus. `None` when the denominator frequency is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyRatio {
    pub category: CountKey,
    pub numerator_corpus: String,
    pub denominator_corpus: String,
    pub ratio: Option<f64>,
}

/// Cross-corpus view: one row per corpus plus all pairwise frequency ratios
/// per category.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    pub rows: Vec<CorpusStats>,
    pub ratios: Vec<FrequencyRatio>,
}

impl ComparisonTable {
    pub fn ratio(&self, category: CountKey, numerator: &str, denominator: &str) -> Option<f64> {
        self.ratios
            .iter()
            .find(|r| {
                r.category == category
                    && r.numerator_corpus == numerator
                    && r.denominator_corpus == denominator
            })
            .and_then(|r| r.ratio)
    }
}

/// Build the comparison table for two or more corpora.
pub fn compare_corpora(stats: &[CorpusStats]) -> ComparisonTable {
    let mut ratios = Vec::new();
    for a in stats {
        for b in stats {
            if std::ptr::eq(a, b) {
                continue;
            }
            for category in CountKey::ALL {
                let freq_a = a.counts.get(category) as f64 / a.total_words as f64;
                let freq_b = b.counts.get(category) as f64 / b.total_words as f64;
                let ratio = (freq_b != 0.0).then(|| freq_a / freq_b);
                ratios.push(FrequencyRatio {
                    category,
                    numerator_corpus: a.corpus_name.clone(),
                    denominator_corpus: b.corpus_name.clone(),
                    ratio,
                });
            }
        }
    }
    ComparisonTable {
        rows: stats.to_vec(),
        ratios,
    }
}
