use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::language::Language;
use crate::rules::{RuleId, Severity};

/// Rule-check configuration. The long-sentence threshold defaults to 25
/// words for French and 20 for English; sentences are flagged when strictly
/// longer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleConfig {
    pub long_sentence_threshold: usize,
    pub report_mandatory: bool,
    pub enabled_rules: BTreeSet<RuleId>,
    pub severity_overrides: BTreeMap<RuleId, Severity>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{path}: cannot read config: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: malformed config line: {content}")]
    MalformedLine {
        path: String,
        line: usize,
        content: String,
    },
    #[error("{path}:{line}: {message}")]
    BadValue {
        path: String,
        line: usize,
        message: String,
    },
}

impl RuleConfig {
    pub fn new(language: Language) -> Self {
        RuleConfig {
            long_sentence_threshold: language.default_long_sentence_threshold(),
            report_mandatory: false,
            enabled_rules: RuleId::ALL.iter().copied().collect(),
            severity_overrides: BTreeMap::new(),
        }
    }

    pub fn is_enabled(&self, rule: RuleId) -> bool {
        self.enabled_rules.contains(&rule)
    }

    pub fn disable(&mut self, rule: RuleId) {
        self.enabled_rules.remove(&rule);
    }

    /// Defaults for `language` overridden by a config file.
    pub fn from_file(path: &Path, language: Language) -> Result<Self, ConfigError> {
        let mut config = RuleConfig::new(language);
        config.merge_file(path)?;
        Ok(config)
    }

    /// Apply `key = value` lines from a config file on top of the current
    /// settings. Keys: `long_sentence_threshold`, `report_mandatory`,
    /// `disable = R1,R4`, `severity.R1 = error`.
    pub fn merge_file(&mut self, path: &Path) -> Result<(), ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        self.merge_str(&text, &path.display().to_string())
    }

    pub fn merge_str(&mut self, text: &str, path: &str) -> Result<(), ConfigError> {
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::MalformedLine {
                    path: path.to_string(),
                    line: line_no,
                    content: line.to_string(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            let bad = |message: String| ConfigError::BadValue {
                path: path.to_string(),
                line: line_no,
                message,
            };
            match key {
                "long_sentence_threshold" => {
                    let threshold: usize = value
                        .parse()
                        .map_err(|_| bad(format!("invalid threshold `{value}`")))?;
                    if threshold == 0 {
                        return Err(bad("threshold must be at least 1".to_string()));
                    }
                    self.long_sentence_threshold = threshold;
                }
                "report_mandatory" => {
                    self.report_mandatory = match value {
                        "true" => true,
                        "false" => false,
                        other => return Err(bad(format!("expected true/false, got `{other}`"))),
                    };
                }
                "disable" => {
                    for part in value.split(',').filter(|p| !p.trim().is_empty()) {
                        let rule: RuleId = part.parse().map_err(|e| bad(format!("{e}")))?;
                        self.enabled_rules.remove(&rule);
                    }
                }
                _ => {
                    if let Some(rule_name) = key.strip_prefix("severity.") {
                        let rule: RuleId = rule_name.parse().map_err(|e| bad(format!("{e}")))?;
                        let severity: Severity = value.parse().map_err(bad)?;
                        self.severity_overrides.insert(rule, severity);
                    } else {
                        return Err(bad(format!("unknown key `{key}`")));
                    }
                }
            }
        }
        Ok(())
    }
}
