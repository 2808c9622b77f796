//! JSON project configuration: lexicon overrides, label aliases, project scope,
//! conflict pairs and rule severities.
//!
//! ```json
//! {
//!   "lexicon":   { "Neurodivergence": { "protected": true, "terms": ["autistic", "ADHD"] } },
//!   "aliases":   { "Job": "Occupation" },
//!   "scope":     { "roles": [], "processes": [], "artifacts": ["FRASS"] },
//!   "conflicts": [[8, 9], [2, 3], [17, 20]],
//!   "severities": { "R1": "error" }
//! }
//! ```
//!
//! Every key is optional. Lexicon entries replace same-named built-in
//! dimensions; `conflicts`, when present, replaces the built-in pairs. If
//! `scope.protected_dimensions` is omitted it is taken from the lexicon's
//! `protected` flags.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::model::{ProjectScope, Rule, Severity};
use crate::taxonomy::{default_lexicon, AttributeLexicon, ConflictRegistry, LexiconEntry};
use crate::validator::RuleConfig;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("config syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid config at `{path}`: {message}")]
    Invalid { path: String, message: String },
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl ConfigError {
    fn invalid(path: impl Into<String>, message: impl ToString) -> Self {
        ConfigError::Invalid {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    lexicon: BTreeMap<String, LexiconEntry>,
    #[serde(default)]
    aliases: BTreeMap<String, String>,
    #[serde(default)]
    scope: RawScope,
    #[serde(default)]
    conflicts: Option<Vec<[i64; 2]>>,
    #[serde(default)]
    severities: BTreeMap<String, String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScope {
    #[serde(default)]
    roles: Vec<String>,
    #[serde(default)]
    processes: Vec<String>,
    #[serde(default)]
    artifacts: Vec<String>,
    #[serde(default)]
    protected_dimensions: Option<Vec<String>>,
}

/// A fully resolved project configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub lexicon: AttributeLexicon,
    pub scope: ProjectScope,
    pub conflicts: ConflictRegistry,
    pub rules: RuleConfig,
}

impl Default for Config {
    fn default() -> Self {
        let lexicon = default_lexicon();
        let scope = ProjectScope {
            protected_dimensions: lexicon.protected_dimensions(),
            ..ProjectScope::default()
        };
        Config {
            lexicon,
            scope,
            conflicts: ConflictRegistry::default(),
            rules: RuleConfig::default(),
        }
    }
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config, ConfigError> {
        if text.trim().is_empty() {
            return Ok(Config::default());
        }
        let raw: RawConfig = serde_json::from_str(text).map_err(|e| ConfigError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;

        for (name, entry) in &raw.lexicon {
            if entry.terms.is_empty() {
                return Err(ConfigError::invalid(
                    format!("lexicon.{name}.terms"),
                    "term list is empty",
                ));
            }
        }
        let lexicon = default_lexicon()
            .with_overrides(raw.lexicon, raw.aliases)
            .map_err(|e| ConfigError::invalid("lexicon", e))?;

        let protected_dimensions = match raw.scope.protected_dimensions {
            None => lexicon.protected_dimensions(),
            Some(list) => list
                .iter()
                .enumerate()
                .map(|(i, label)| {
                    lexicon.canonicalize(label).ok_or_else(|| {
                        ConfigError::invalid(
                            format!("scope.protected_dimensions[{i}]"),
                            format!("unknown dimension `{label}`"),
                        )
                    })
                })
                .collect::<Result<Vec<_>, _>>()?,
        };
        let scope = ProjectScope {
            roles: raw.scope.roles,
            processes: raw.scope.processes,
            artifacts: raw.scope.artifacts,
            protected_dimensions,
        };
        for (key, list) in [
            ("roles", &scope.roles),
            ("processes", &scope.processes),
            ("artifacts", &scope.artifacts),
        ] {
            if let Some(i) = list.iter().position(|name| name.trim().is_empty()) {
                return Err(ConfigError::invalid(
                    format!("scope.{key}[{i}]"),
                    "empty name",
                ));
            }
        }

        let conflicts = match raw.conflicts {
            None => ConflictRegistry::default(),
            Some(pairs) => ConflictRegistry::from_id_pairs(&pairs)
                .map_err(|e| ConfigError::invalid("conflicts", e))?,
        };

        let mut rules = RuleConfig::default();
        for (key, value) in &raw.severities {
            let rule = Rule::from_code(key)
                .ok_or_else(|| ConfigError::invalid(format!("severities.{key}"), "unknown rule"))?;
            let severity = Severity::parse(value).ok_or_else(|| {
                ConfigError::invalid(
                    format!("severities.{key}"),
                    format!("unknown severity `{value}` (expected error, warning or info)"),
                )
            })?;
            rules.set(rule, severity);
        }

        Ok(Config {
            lexicon,
            scope,
            conflicts,
            rules,
        })
    }

    pub fn from_path(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Config::from_json(&text)
    }
}

/// Reads the lexicon section of a config document, merged over the built-in defaults.
pub fn load_lexicon(text: &str) -> Result<AttributeLexicon, ConfigError> {
    Config::from_json(text).map(|config| config.lexicon)
}

#[derive(Serialize)]
struct StarterConfig<'a> {
    lexicon: &'a BTreeMap<String, LexiconEntry>,
    aliases: BTreeMap<String, String>,
    scope: StarterScope,
    conflicts: Vec<[u8; 2]>,
    severities: BTreeMap<&'static str, &'static str>,
}

#[derive(Serialize)]
struct StarterScope {
    roles: Vec<String>,
    processes: Vec<String>,
    artifacts: Vec<String>,
}

/// Pretty-printed starter config: the full default lexicon, an empty scope,
/// the default conflict pairs and default severities.
pub fn starter_config_json() -> String {
    let lexicon = default_lexicon();
    let rules = RuleConfig::default();
    let starter = StarterConfig {
        lexicon: lexicon.entries(),
        aliases: BTreeMap::new(),
        scope: StarterScope {
            roles: Vec::new(),
            processes: Vec::new(),
            artifacts: Vec::new(),
        },
        conflicts: ConflictRegistry::default()
            .pairs()
            .map(|(pair, _)| pair.as_array())
            .collect(),
        severities: Rule::ALL
            .into_iter()
            .map(|rule| (rule.code(), rules.severity(rule).as_str()))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&starter).expect("starter config serializes");
    out.push('\n');
    out
}
