//! Corpus ingestion: requirement files framed by `[REQ <id>]` / `[/REQ]`
//! delimiters (tagged mode) and undifferentiated text files (plain mode).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::language::Language;

/// One requirement block extracted from a specification file.
///
/// A requirement is self-contained: rule checks never look outside its body.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Requirement {
    /// Identifier taken from the opening delimiter, unique within its corpus.
    pub id: String,
    /// Block content between the delimiters, without the delimiter lines.
    pub body: String,
    /// (file name, first body line, last body line), 1-based inclusive.
    pub source_span: (String, usize, usize),
    pub line_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    Tagged,
    Plain,
}

/// Corpus content: an ordered requirement list (tagged mode) or a single
/// undifferentiated body (plain mode, used for comparison corpora).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CorpusContent {
    Tagged(Vec<Requirement>),
    Plain(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub name: String,
    pub language: Language,
    pub content: CorpusContent,
}

impl Corpus {
    pub fn mode(&self) -> CorpusMode {
        match self.content {
            CorpusContent::Tagged(_) => CorpusMode::Tagged,
            CorpusContent::Plain(_) => CorpusMode::Plain,
        }
    }

    pub fn requirements(&self) -> &[Requirement] {
        match &self.content {
            CorpusContent::Tagged(reqs) => reqs,
            CorpusContent::Plain(_) => &[],
        }
    }

    /// The text units rule checks and statistics run over: the requirements
    /// in tagged mode, or the whole body as one unit (named after the corpus)
    /// in plain mode.
    pub fn units(&self) -> Vec<(&str, &str)> {
        match &self.content {
            CorpusContent::Tagged(reqs) => reqs
                .iter()
                .map(|r| (r.id.as_str(), r.body.as_str()))
                .collect(),
            CorpusContent::Plain(body) => vec![(self.name.as_str(), body.as_str())],
        }
    }
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{path}: cannot read file: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: file is not valid UTF-8")]
    DecodeError { path: String },
    #[error("{path}:{line}: unbalanced requirement delimiter: {detail}")]
    UnbalancedDelimiter {
        path: String,
        line: usize,
        detail: String,
    },
    #[error("{path}:{line}: duplicate requirement id `{id}`")]
    DuplicateId {
        path: String,
        line: usize,
        id: String,
    },
    #[error("{path}:{line}: requirement `{id}` has no content")]
    EmptyRequirement {
        path: String,
        line: usize,
        id: String,
    },
    #[error("{path}: file is empty")]
    EmptyFile { path: String },
    #[error("{path}: no requirement blocks found")]
    NoRequirements { path: String },
}

/// Courtesy diagnostic for table or diagram leftovers that should have been
/// removed upstream. Never an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestDiagnostic {
    pub line: usize,
    pub message: String,
}

/// Returns the requirement id if `line` is an opening delimiter `[REQ <id>]`.
///
/// The delimiter must occupy the whole line; `<id>` is one or more characters
/// from `[A-Za-z0-9_.-]`.
pub fn opening_delimiter_id(line: &str) -> Option<&str> {
    let rest = line.strip_prefix("[REQ ")?;
    let id = rest.strip_suffix(']')?;
    if !id.is_empty() && id.bytes().all(is_id_byte) {
        Some(id)
    } else {
        None
    }
}

fn is_id_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b'.' || b == b'-'
}

/// `true` if `line` is the closing delimiter `[/REQ]`.
pub fn is_closing_delimiter(line: &str) -> bool {
    line == "[/REQ]"
}

/// `true` if the text contains at least one opening delimiter line, i.e.
/// should be parsed in tagged mode.
pub fn looks_tagged(text: &str) -> bool {
    text.lines().any(|l| opening_delimiter_id(l).is_some())
}

/// Parse a requirement file: blocks between `[REQ <id>]` and `[/REQ]` become
/// requirements, in file order; text outside the delimiters is discarded.
pub fn parse_requirement_file(path: &Path, language: Language) -> Result<Corpus, IngestError> {
    let text = read_utf8(path)?;
    parse_requirement_str(&display_name(path), &text, language)
}

/// Same as [`parse_requirement_file`] but over an in-memory string; `name`
/// doubles as corpus name and file name in error messages.
pub fn parse_requirement_str(
    name: &str,
    text: &str,
    language: Language,
) -> Result<Corpus, IngestError> {
    let mut requirements: Vec<Requirement> = Vec::new();
    let mut open: Option<(String, usize, Vec<&str>)> = None; // (id, opener line, body lines)

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if let Some(id) = opening_delimiter_id(line) {
            if let Some((open_id, open_line, _)) = &open {
                return Err(IngestError::UnbalancedDelimiter {
                    path: name.to_string(),
                    line: line_no,
                    detail: format!(
                        "opening delimiter inside block `{open_id}` started at line {open_line}"
                    ),
                });
            }
            if requirements.iter().any(|r| r.id == id) {
                return Err(IngestError::DuplicateId {
                    path: name.to_string(),
                    line: line_no,
                    id: id.to_string(),
                });
            }
            open = Some((id.to_string(), line_no, Vec::new()));
        } else if is_closing_delimiter(line) {
            let Some((id, open_line, body_lines)) = open.take() else {
                return Err(IngestError::UnbalancedDelimiter {
                    path: name.to_string(),
                    line: line_no,
                    detail: "closing delimiter without an open block".to_string(),
                });
            };
            let body = body_lines.join("\n");
            if body.trim().is_empty() {
                return Err(IngestError::EmptyRequirement {
                    path: name.to_string(),
                    line: open_line,
                    id,
                });
            }
            let start_line = open_line + 1;
            let end_line = line_no - 1;
            requirements.push(Requirement {
                id,
                body,
                source_span: (name.to_string(), start_line, end_line),
                line_count: end_line - start_line + 1,
            });
        } else if let Some((_, _, body_lines)) = &mut open {
            body_lines.push(line);
        }
        // Lines outside any block are prose and are discarded.
    }

    if let Some((id, open_line, _)) = open {
        return Err(IngestError::UnbalancedDelimiter {
            path: name.to_string(),
            line: open_line,
            detail: format!("block `{id}` is never closed"),
        });
    }
    if requirements.is_empty() {
        return Err(IngestError::NoRequirements {
            path: name.to_string(),
        });
    }

    Ok(Corpus {
        name: name.to_string(),
        language,
        content: CorpusContent::Tagged(requirements),
    })
}

/// Parse a plain comparison corpus: the whole file becomes the corpus body,
/// with no delimiter interpretation.
pub fn parse_plain_corpus(path: &Path, language: Language) -> Result<Corpus, IngestError> {
    let text = read_utf8(path)?;
    parse_plain_str(&display_name(path), &text, language)
}

pub fn parse_plain_str(name: &str, text: &str, language: Language) -> Result<Corpus, IngestError> {
    if text.is_empty() {
        return Err(IngestError::EmptyFile {
            path: name.to_string(),
        });
    }
    Ok(Corpus {
        name: name.to_string(),
        language,
        content: CorpusContent::Plain(text.to_string()),
    })
}

/// Serialize a tagged corpus back to delimiter format. Re-parsing the result
/// yields the same requirement ids and bodies.
pub fn to_delimited_string(corpus: &Corpus) -> String {
    let mut out = String::new();
    for req in corpus.requirements() {
        out.push_str("[REQ ");
        out.push_str(&req.id);
        out.push_str("]\n");
        out.push_str(&req.body);
        out.push_str("\n[/REQ]\n");
    }
    out
}

/// Flag lines that look like table or diagram leftovers: mostly made of
/// `|`, `+` and `-` drawing characters, or several tab-separated cells.
pub fn table_artifact_lines(text: &str) -> Vec<IngestDiagnostic> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let non_ws = trimmed.chars().filter(|c| !c.is_whitespace()).count();
        let drawing = trimmed
            .chars()
            .filter(|c| matches!(c, '|' | '+' | '-'))
            .count();
        let tabs = trimmed.matches('\t').count();
        if (drawing >= 3 && drawing * 2 >= non_ws) || tabs >= 2 {
            out.push(IngestDiagnostic {
                line: idx + 1,
                message: format!("line looks like a table or diagram leftover: {trimmed}"),
            });
        }
    }
    out
}

fn read_utf8(path: &Path) -> Result<String, IngestError> {
    let bytes = fs::read(path).map_err(|source| IngestError::Io {
        path: display_name(path),
        source,
    })?;
    String::from_utf8(bytes).map_err(|_| IngestError::DecodeError {
        path: display_name(path),
    })
}

fn display_name(path: &Path) -> String {
    path.display().to_string()
}

/// Corpus name derived from a file path: the stem, or the full name when
/// there is no stem.
pub fn corpus_name_from_path(path: &Path) -> String {
    path.file_stem()
        .or_else(|| path.file_name())
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(text: &str) -> Result<Corpus, IngestError> {
        parse_requirement_str("test.req", text, Language::Fr)
    }

    #[test]
    fn minimal_well_formed_block() {
        let corpus = fr("[REQ R1]\nLe paquet sera généré.\n[/REQ]\n").unwrap();
        let reqs = corpus.requirements();
        assert_eq!(reqs.len(), 1);
        assert_eq!(reqs[0].id, "R1");
        assert_eq!(reqs[0].body, "Le paquet sera généré.");
        assert_eq!(reqs[0].line_count, 1);
        assert_eq!(reqs[0].source_span, ("test.req".to_string(), 2, 2));
    }

    #[test]
    fn prose_outside_blocks_is_discarded() {
        let text = "intro prose\n[REQ A]\ncorps A\n[/REQ]\nentre les blocs\n[REQ B]\ncorps B\nsuite B\n[/REQ]\nfin\n";
        let corpus = fr(text).unwrap();
        let reqs = corpus.requirements();
        assert_eq!(reqs.len(), 2);
        assert_eq!(reqs[0].body, "corps A");
        assert_eq!(reqs[1].body, "corps B\nsuite B");
        assert_eq!(reqs[1].line_count, 2);
    }

    #[test]
    fn many_blocks_preserve_order() {
        let mut text = String::from("préambule\n");
        for i in 0..1142 {
            text.push_str(&format!("[REQ R{i}]\ncontenu {i}\n[/REQ]\n"));
        }
        let corpus = fr(&text).unwrap();
        assert_eq!(corpus.requirements().len(), 1142);
        assert_eq!(corpus.requirements()[0].id, "R0");
        assert_eq!(corpus.requirements()[1141].id, "R1141");
    }

    #[test]
    fn missing_close_is_unbalanced() {
        let err = fr("[REQ R1]\ntexte\n").unwrap_err();
        match err {
            IngestError::UnbalancedDelimiter { line, .. } => assert_eq!(line, 1),
            other => panic!("expected UnbalancedDelimiter, got {other:?}"),
        }
    }

    #[test]
    fn close_without_open_is_unbalanced() {
        let err = fr("texte\n[/REQ]\n").unwrap_err();
        match err {
            IngestError::UnbalancedDelimiter { line, .. } => assert_eq!(line, 2),
            other => panic!("expected UnbalancedDelimiter, got {other:?}"),
        }
    }

    #[test]
    fn nested_opener_is_unbalanced() {
        let err = fr("[REQ R1]\n[REQ R2]\n[/REQ]\n").unwrap_err();
        match err {
            IngestError::UnbalancedDelimiter { line, .. } => assert_eq!(line, 2),
            other => panic!("expected UnbalancedDelimiter, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_id_rejected() {
        let err = fr("[REQ R1]\na\n[/REQ]\n[REQ R1]\nb\n[/REQ]\n").unwrap_err();
        match err {
            IngestError::DuplicateId { id, line, .. } => {
                assert_eq!(id, "R1");
                assert_eq!(line, 4);
            }
            other => panic!("expected DuplicateId, got {other:?}"),
        }
    }

    #[test]
    fn empty_block_rejected() {
        let err = fr("[REQ R1]\n   \n[/REQ]\n").unwrap_err();
        assert!(matches!(err, IngestError::EmptyRequirement { .. }));
    }

    #[test]
    fn delimiter_grammar_is_strict() {
        // Not delimiters: trailing spaces, bad id characters, missing space.
        assert_eq!(opening_delimiter_id("[REQ R1] "), None);
        assert_eq!(opening_delimiter_id("[REQ a b]"), None);
        assert_eq!(opening_delimiter_id("[REQ]"), None);
        assert_eq!(opening_delimiter_id("[REQ ]"), None);
        assert_eq!(opening_delimiter_id("[REQ R-1.a_b]"), Some("R-1.a_b"));
        assert!(is_closing_delimiter("[/REQ]"));
        assert!(!is_closing_delimiter("[/REQ] "));
        // Inside a block, a malformed delimiter-like line is plain body text.
        let corpus = fr("[REQ R1]\n[REQ not an id!]\n[/REQ]\n").unwrap();
        assert_eq!(corpus.requirements()[0].body, "[REQ not an id!]");
    }

    #[test]
    fn plain_corpus_keeps_whole_file() {
        let corpus = parse_plain_str("note.txt", "Bonjour.", Language::Fr).unwrap();
        assert_eq!(corpus.mode(), CorpusMode::Plain);
        assert_eq!(corpus.units(), vec![("note.txt", "Bonjour.")]);
    }

    #[test]
    fn empty_plain_file_rejected() {
        let err = parse_plain_str("empty.txt", "", Language::Fr).unwrap_err();
        assert!(matches!(err, IngestError::EmptyFile { .. }));
    }

    #[test]
    fn round_trip_preserves_ids_and_bodies() {
        let text = "[REQ A]\nligne 1\nligne 2\n[/REQ]\nprose\n[REQ B]\nautre corps\n[/REQ]\n";
        let corpus = fr(text).unwrap();
        let rendered = to_delimited_string(&corpus);
        let reparsed = fr(&rendered).unwrap();
        let pairs = |c: &Corpus| {
            c.requirements()
                .iter()
                .map(|r| (r.id.clone(), r.body.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(pairs(&corpus), pairs(&reparsed));
    }

    #[test]
    fn table_artifacts_detected() {
        let text = "texte normal\n| a | b | c |\n+---+---+\ncellule\tcellule\tcellule\n";
        let diags = table_artifact_lines(text);
        let lines: Vec<usize> = diags.iter().map(|d| d.line).collect();
        assert_eq!(lines, vec![2, 3, 4]);
        assert!(table_artifact_lines("Le paquet - ou non - sera généré.").is_empty());
    }

    #[test]
    fn crlf_input_accepted() {
        let corpus = fr("[REQ R1]\r\ncorps\r\n[/REQ]\r\n").unwrap();
        assert_eq!(corpus.requirements()[0].body, "corps");
    }

    #[test]
    fn non_utf8_input_is_a_decode_error() {
        use std::io::Write;
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(&[0x5b, 0x52, 0x45, 0x51, 0xff, 0xfe])
            .unwrap();
        let err = parse_requirement_file(file.path(), Language::Fr).unwrap_err();
        assert!(matches!(err, IngestError::DecodeError { .. }));
        let err = parse_plain_corpus(file.path(), Language::Fr).unwrap_err();
        assert!(matches!(err, IngestError::DecodeError { .. }));
    }

    #[test]
    fn tagged_mode_detection() {
        assert!(looks_tagged("préambule\n[REQ A]\nx\n[/REQ]\n"));
        assert!(!looks_tagged("du texte ordinaire\nsur deux lignes\n"));
        assert!(!looks_tagged("[REQ pas un id!]\n"));
    }
}
