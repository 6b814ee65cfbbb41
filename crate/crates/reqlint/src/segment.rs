//! Sentence segmentation and tokenization.
//!
//! Counting conventions: a new sentence begins after each line break;
//! bullet-list items are one sentence each; within a line, `.` `!` `?`
//! followed by whitespace and an uppercase letter or digit end a sentence,
//! unless the period terminates a known abbreviation. A "word" for counting
//! purposes is a token of kind word or number.

use std::collections::HashSet;
use std::fs;
use std::ops::Range;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::Language;
use crate::lexicon::CategoryTag;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TokenKind {
    Word,
    Number,
    Punctuation,
    Symbol,
}

/// A surface form with its byte span in the segmented text. `tag` is filled
/// in later by the lexicon tagger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    pub span: Range<usize>,
    pub kind: TokenKind,
    pub tag: Option<CategoryTag>,
}

impl Token {
    pub fn is_word(&self) -> bool {
        matches!(self.kind, TokenKind::Word | TokenKind::Number)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub text: String,
    pub tokens: Vec<Token>,
    /// Byte range of `text` within the requirement body or plain corpus body.
    pub source_span: Range<usize>,
}

impl Sentence {
    /// Bullet-list item: the line starts with `-`, `•` or `*`.
    pub fn is_bullet(&self) -> bool {
        matches!(self.text.chars().next(), Some('-') | Some('•') | Some('*'))
    }

    pub fn word_count(&self) -> usize {
        word_count(&self.tokens)
    }

    /// Surfaces of the word/number tokens, in order.
    pub fn words(&self) -> Vec<&str> {
        self.tokens
            .iter()
            .filter(|t| t.is_word())
            .map(|t| t.surface.as_str())
            .collect()
    }
}

/// Count of word and number tokens; punctuation and symbols are excluded.
pub fn word_count(tokens: &[Token]) -> usize {
    tokens.iter().filter(|t| t.is_word()).count()
}

#[derive(Debug, Error)]
pub enum AbbreviationError {
    #[error("{path}: cannot read abbreviation file: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

const FR_ABBREVIATIONS: &str = include_str!("../data/abbreviations_fr.txt");
const EN_ABBREVIATIONS: &str = include_str!("../data/abbreviations_en.txt");

/// Hyphenated closed-class compounds kept as single word tokens. Mirrors the
/// hyphenated entries of the builtin lexicons.
const FR_HYPHEN_COMPOUNDS: &[&str] = &[
    "celui-ci",
    "celle-ci",
    "ceux-ci",
    "celles-ci",
    "celui-là",
    "celle-là",
    "ceux-là",
    "celles-là",
];

/// French elision clitics: a word-initial prefix followed by an apostrophe
/// splits off as its own token (`d'enchaîner` → `d'`, `enchaîner`).
const FR_CLITIC_PREFIXES: &[&str] = &[
    "c", "d", "j", "l", "m", "n", "s", "t", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu",
];

/// Configurable sentence splitter and tokenizer.
#[derive(Debug, Clone)]
pub struct Segmenter {
    language: Language,
    abbreviations: HashSet<String>,
    hyphen_compounds: HashSet<String>,
}

impl Segmenter {
    pub fn new(language: Language) -> Self {
        let data = match language {
            Language::Fr => FR_ABBREVIATIONS,
            Language::En => EN_ABBREVIATIONS,
        };
        let abbreviations = parse_abbreviation_list(data);
        let hyphen_compounds = match language {
            Language::Fr => FR_HYPHEN_COMPOUNDS.iter().map(|s| s.to_string()).collect(),
            Language::En => HashSet::new(),
        };
        Segmenter {
            language,
            abbreviations,
            hyphen_compounds,
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    /// Extend the abbreviation list from a file: UTF-8, one abbreviation per
    /// line, `#` comments.
    pub fn add_abbreviations_from_file(&mut self, path: &Path) -> Result<(), AbbreviationError> {
        let text = fs::read_to_string(path).map_err(|source| AbbreviationError::Io {
            path: path.display().to_string(),
            source,
        })?;
        self.abbreviations.extend(parse_abbreviation_list(&text));
        Ok(())
    }

    /// Replace the hyphen-compound set, typically with the hyphenated entries
    /// of a loaded lexicon.
    pub fn set_hyphen_compounds<I: IntoIterator<Item = String>>(&mut self, compounds: I) {
        self.hyphen_compounds = compounds.into_iter().map(|s| s.to_lowercase()).collect();
    }

    /// Split text into sentences and tokenize each one. Token spans are byte
    /// ranges into `text`.
    pub fn split_sentences(&self, text: &str) -> Vec<Sentence> {
        let mut sentences = Vec::new();
        for (offset, line_text) in split_keep_offsets(text) {
            let Some((seg_start, seg_text)) = trim_with_offset(line_text, offset) else {
                continue;
            };
            if is_bullet_line(seg_text) {
                self.push_sentence(text, seg_start, seg_text, &mut sentences);
            } else {
                for (start, piece) in self.split_line(seg_text, seg_start) {
                    if let Some((s, t)) = trim_with_offset(piece, start) {
                        self.push_sentence(text, s, t, &mut sentences);
                    }
                }
            }
        }
        sentences
    }

    fn push_sentence(&self, full: &str, start: usize, text: &str, out: &mut Vec<Sentence>) {
        debug_assert_eq!(&full[start..start + text.len()], text);
        let mut tokens = self.tokenize(text);
        for tok in &mut tokens {
            tok.span = tok.span.start + start..tok.span.end + start;
        }
        out.push(Sentence {
            text: text.to_string(),
            tokens,
            source_span: start..start + text.len(),
        });
    }

    /// Boundaries within one line: sentence-final `.` `!` `?` followed by
    /// whitespace and an uppercase letter or digit.
    fn split_line<'a>(&self, line: &'a str, base: usize) -> Vec<(usize, &'a str)> {
        let mut pieces = Vec::new();
        let mut piece_start = 0;
        let mut iter = line.char_indices().peekable();
        while let Some((i, c)) = iter.next() {
            if !matches!(c, '.' | '!' | '?') {
                continue;
            }
            // Look ahead: whitespace then uppercase or digit.
            let after = &line[i + c.len_utf8()..];
            let mut chars = after.chars();
            let Some(next) = chars.next() else { continue };
            if !next.is_whitespace() {
                continue;
            }
            let first_non_ws = after.chars().find(|ch| !ch.is_whitespace());
            let boundary = match first_non_ws {
                Some(ch) => ch.is_uppercase() || ch.is_ascii_digit(),
                None => false,
            };
            if !boundary {
                continue;
            }
            if c == '.' && self.ends_with_abbreviation(&line[..i]) {
                continue;
            }
            let end = i + c.len_utf8();
            pieces.push((base + piece_start, &line[piece_start..end]));
            piece_start = end;
            // Skip whitespace so the next piece starts at a visible char.
            while let Some(&(_, ch)) = iter.peek() {
                if ch.is_whitespace() {
                    iter.next();
                } else {
                    break;
                }
            }
        }
        if piece_start < line.len() {
            pieces.push((base + piece_start, &line[piece_start..]));
        }
        pieces
    }

    fn ends_with_abbreviation(&self, before_period: &str) -> bool {
        let mut chars: Vec<char> = Vec::new();
        for c in before_period.chars().rev() {
            if c.is_alphabetic() || c == '.' {
                chars.push(c);
            } else {
                break;
            }
        }
        if chars.is_empty() {
            return false;
        }
        chars.reverse();
        let candidate: String = chars.into_iter().collect::<String>().to_lowercase();
        self.abbreviations.contains(&candidate)
    }

    /// Tokenize one sentence. Splits on whitespace and punctuation; French
    /// elision clitics split from their host; hyphenated compounds from the
    /// compound set stay single tokens; `_` is a word character, so
    /// identifiers like `OPS_DELAI_INTER_FIN_LEC` stay whole.
    pub fn tokenize(&self, text: &str) -> Vec<Token> {
        let mut tokens = Vec::new();
        let mut pos = 0;
        while pos < text.len() {
            let c = next_char(text, pos);
            if c.is_whitespace() {
                pos += c.len_utf8();
                continue;
            }
            if is_word_char(c) {
                pos = self.scan_wordlike(text, pos, &mut tokens);
                continue;
            }
            // Single punctuation or symbol character.
            let end = pos + c.len_utf8();
            let kind = if is_symbol_char(c) {
                TokenKind::Symbol
            } else {
                TokenKind::Punctuation
            };
            tokens.push(Token {
                surface: text[pos..end].to_string(),
                span: pos..end,
                kind,
                tag: None,
            });
            pos = end;
        }
        tokens
    }

    fn scan_wordlike(&self, text: &str, start: usize, out: &mut Vec<Token>) -> usize {
        let mut pos = start;
        while let Some(c) = char_at(text, pos) {
            if is_word_char(c) {
                pos += c.len_utf8();
                continue;
            }
            if is_apostrophe(c) {
                let prefix = &text[start..pos];
                if self.language == Language::Fr && is_clitic_prefix(prefix) {
                    // Emit the clitic with its apostrophe; the host is a
                    // fresh token.
                    let end = pos + c.len_utf8();
                    push_word(text, start..end, out);
                    return end;
                }
                // Word-internal apostrophe between letters stays in the word
                // (aujourd'hui, don't); otherwise the word ends here.
                let next_alpha = char_at(text, pos + c.len_utf8())
                    .map(|n| n.is_alphabetic())
                    .unwrap_or(false);
                let prev_alpha = prefix.chars().next_back().map(|p| p.is_alphabetic());
                if next_alpha && prev_alpha == Some(true) {
                    pos += c.len_utf8();
                    continue;
                }
                break;
            }
            if (c == '.' || c == ',') && digit_before_and_after(text, pos, c) {
                pos += c.len_utf8();
                continue;
            }
            if c == '-' {
                if let Some(end) = self.match_hyphen_compound(text, start, pos) {
                    pos = end;
                    continue;
                }
                break;
            }
            break;
        }
        if pos > start {
            push_word(text, start..pos, out);
        }
        pos
    }

    /// At a hyphen inside a word run: if the maximal run of word characters
    /// and hyphens from `start` is a known compound, return the byte offset
    /// just past the hyphen (the caller keeps scanning); otherwise None and
    /// the token ends before the hyphen.
    fn match_hyphen_compound(&self, text: &str, start: usize, hyphen: usize) -> Option<usize> {
        let mut last_word_end = hyphen;
        let mut cursor = hyphen;
        while let Some(c) = char_at(text, cursor) {
            if is_word_char(c) {
                cursor += c.len_utf8();
                last_word_end = cursor;
            } else if c == '-' {
                cursor += 1;
            } else {
                break;
            }
        }
        let end = last_word_end;
        if end <= hyphen {
            return None;
        }
        let candidate = text[start..end].to_lowercase();
        if self.hyphen_compounds.contains(&candidate) {
            Some(hyphen + 1)
        } else {
            None
        }
    }
}

fn push_word(text: &str, span: Range<usize>, out: &mut Vec<Token>) {
    let surface = &text[span.clone()];
    let kind = if surface.chars().any(|c| c.is_alphabetic()) {
        TokenKind::Word
    } else if surface.chars().any(|c| c.is_ascii_digit()) {
        TokenKind::Number
    } else {
        TokenKind::Symbol
    };
    out.push(Token {
        surface: surface.to_string(),
        span,
        kind,
        tag: None,
    });
}

/// Split text into sentences with the builtin settings for `language`.
pub fn split_sentences(text: &str, language: Language) -> Vec<Sentence> {
    Segmenter::new(language).split_sentences(text)
}

/// Tokenize with the builtin settings for `language`.
pub fn tokenize(text: &str, language: Language) -> Vec<Token> {
    Segmenter::new(language).tokenize(text)
}

fn parse_abbreviation_list(text: &str) -> HashSet<String> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_lowercase())
        .collect()
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

fn is_symbol_char(c: char) -> bool {
    matches!(
        c,
        '`' | '~' | '@' | '#' | '$' | '%' | '^' | '&' | '*' | '+' | '=' | '<' | '>' | '|' | '\\'
    )
}

fn is_clitic_prefix(prefix: &str) -> bool {
    let lower = prefix.to_lowercase();
    FR_CLITIC_PREFIXES.contains(&lower.as_str())
}

fn is_bullet_line(line: &str) -> bool {
    matches!(line.chars().next(), Some('-') | Some('•') | Some('*'))
}

fn digit_before_and_after(text: &str, pos: usize, sep: char) -> bool {
    let before = text[..pos]
        .chars()
        .next_back()
        .map(|c| c.is_ascii_digit())
        .unwrap_or(false);
    let after = char_at(text, pos + sep.len_utf8())
        .map(|c| c.is_ascii_digit())
        .unwrap_or(false);
    before && after
}

fn char_at(text: &str, pos: usize) -> Option<char> {
    text[pos..].chars().next()
}

fn next_char(text: &str, pos: usize) -> char {
    text[pos..].chars().next().expect("pos within text")
}

/// Lines of `text` with their byte offsets; line terminators (`\n`, `\r\n`)
/// are excluded from the yielded slices.
fn split_keep_offsets(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, b) in text.bytes().enumerate() {
        if b == b'\n' {
            let mut end = i;
            if end > start && text.as_bytes()[end - 1] == b'\r' {
                end -= 1;
            }
            out.push((start, &text[start..end]));
            start = i + 1;
        }
    }
    if start < text.len() {
        out.push((start, &text[start..]));
    }
    out
}

fn trim_with_offset(s: &str, base: usize) -> Option<(usize, &str)> {
    let trimmed = s.trim_start();
    let lead = s.len() - trimmed.len();
    let trimmed = trimmed.trim_end();
    if trimmed.is_empty() {
        None
    } else {
        Some((base + lead, trimmed))
    }
}
