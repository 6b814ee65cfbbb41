//! Glue between ingestion, segmentation and tagging: turns a [`Corpus`] into
//! tagged sentences per requirement, ready for rule checks and statistics.

use crate::corpus::{Corpus, CorpusMode};
use crate::language::Language;
use crate::lexicon::{tag_sentences, Lexicon};
use crate::segment::{Segmenter, Sentence};

/// One analyzed text unit: a requirement in tagged mode, or the whole body
/// (named after the corpus) in plain mode.
#[derive(Debug, Clone)]
pub struct AnalyzedUnit {
    pub id: String,
    pub sentences: Vec<Sentence>,
}

impl AnalyzedUnit {
    pub fn word_count(&self) -> usize {
        self.sentences.iter().map(|s| s.word_count()).sum()
    }
}

#[derive(Debug, Clone)]
pub struct AnalyzedCorpus {
    pub name: String,
    pub language: Language,
    pub mode: CorpusMode,
    pub units: Vec<AnalyzedUnit>,
}

impl AnalyzedCorpus {
    pub fn word_count(&self) -> usize {
        self.units.iter().map(|u| u.word_count()).sum()
    }

    pub fn sentence_count(&self) -> usize {
        self.units.iter().map(|u| u.sentences.len()).sum()
    }
}

/// A segmenter whose hyphen-compound set comes from the lexicon, so that
/// user-supplied compound entries stay single tokens.
pub fn segmenter_for(lexicon: &Lexicon) -> Segmenter {
    let mut segmenter = Segmenter::new(lexicon.language());
    segmenter.set_hyphen_compounds(lexicon.hyphen_compounds());
    segmenter
}

/// Segment and tag every unit of the corpus.
pub fn analyze_corpus(corpus: &Corpus, lexicon: &Lexicon, segmenter: &Segmenter) -> AnalyzedCorpus {
    let units = corpus
        .units()
        .into_iter()
        .map(|(id, body)| {
            let mut sentences = segmenter.split_sentences(body);
            tag_sentences(&mut sentences, lexicon);
            AnalyzedUnit {
                id: id.to_string(),
                sentences,
            }
        })
        .collect();
    AnalyzedCorpus {
        name: corpus.name.clone(),
        language: corpus.language,
        mode: corpus.mode(),
        units,
    }
}

/// Full convenience pipeline with builtin lexicon and segmenter.
pub fn analyze_with_builtins(corpus: &Corpus) -> AnalyzedCorpus {
    let lexicon = Lexicon::builtin(corpus.language);
    let segmenter = segmenter_for(lexicon);
    analyze_corpus(corpus, lexicon, &segmenter)
}
