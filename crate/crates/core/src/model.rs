//! Domain types shared by the parser, validator and analyzer.
//!
//! Everything here is plain data: immutable after construction and `Send + Sync`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of themes in the built-in taxonomy.
pub const THEME_COUNT: u8 = 23;

/// Collapses runs of whitespace to a single space and trims both ends.
///
/// Letter case is preserved.
pub fn normalize(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Converts a dimension label to its stored Title Case form ("health condition" -> "Health Condition").
pub fn title_case(label: &str) -> String {
    normalize(label)
        .split(' ')
        .map(|word| {
            let mut chars = word.chars();
            match chars.next() {
                Some(first) => first
                    .to_uppercase()
                    .chain(chars.flat_map(char::to_lowercase))
                    .collect(),
                None => String::new(),
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// A theme number, guaranteed to be in `1..=23`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct ThemeId(u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("theme id {0} is outside the range 1..=23")]
pub struct ThemeRangeError(pub i64);

impl ThemeId {
    pub fn new(id: i64) -> Result<Self, ThemeRangeError> {
        if (1..=i64::from(THEME_COUNT)).contains(&id) {
            Ok(ThemeId(id as u8))
        } else {
            Err(ThemeRangeError(id))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// All 23 ids in ascending order.
    pub fn all() -> impl Iterator<Item = ThemeId> {
        (1..=THEME_COUNT).map(ThemeId)
    }
}

impl TryFrom<u32> for ThemeId {
    type Error = ThemeRangeError;

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        ThemeId::new(i64::from(value))
    }
}

impl From<ThemeId> for u32 {
    fn from(id: ThemeId) -> u32 {
        u32::from(id.0)
    }
}

impl fmt::Display for ThemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// The five structuring categories of the taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pillar {
    Humans,
    Data,
    Process,
    System,
    Governance,
}

impl Pillar {
    pub const ALL: [Pillar; 5] = [
        Pillar::Humans,
        Pillar::Data,
        Pillar::Process,
        Pillar::System,
        Pillar::Governance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pillar::Humans => "Humans",
            Pillar::Data => "Data",
            Pillar::Process => "Process",
            Pillar::System => "System",
            Pillar::Governance => "Governance",
        }
    }
}

impl fmt::Display for Pillar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theme {
    pub id: ThemeId,
    pub pillar: Pillar,
    pub title: &'static str,
}

/// What kind of project element a story's subject refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SubjectKind {
    Role,
    Process,
    Artifact,
    #[default]
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TagOrigin {
    ExplicitAnnotation,
    LexiconInferred,
}

/// A diversity attribute attached to a story.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttributeTag {
    /// Canonical Title Case dimension name, a key of the active lexicon.
    pub dimension: String,
    pub value: Option<String>,
    pub origin: TagOrigin,
}

impl AttributeTag {
    pub fn explicit(dimension: impl Into<String>) -> Self {
        AttributeTag {
            dimension: dimension.into(),
            value: None,
            origin: TagOrigin::ExplicitAnnotation,
        }
    }

    pub fn inferred(dimension: impl Into<String>, value: impl Into<String>) -> Self {
        AttributeTag {
            dimension: dimension.into(),
            value: Some(value.into()),
            origin: TagOrigin::LexiconInferred,
        }
    }
}

/// Source location of a story block: file name plus 1-based inclusive line range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Span {
    pub file: String,
    pub line_start: usize,
    pub line_end: usize,
}

impl Span {
    pub fn new(file: impl Into<String>, line_start: usize, line_end: usize) -> Self {
        Span {
            file: file.into(),
            line_start,
            line_end,
        }
    }
}

impl Default for Span {
    fn default() -> Self {
        Span::new("<input>", 1, 1)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line_start == self.line_end {
            write!(f, "{}:{}", self.file, self.line_start)
        } else {
            write!(f, "{}:{}-{}", self.file, self.line_start, self.line_end)
        }
    }
}

/// One parsed user story.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UserStory {
    pub raw_text: String,
    pub role_phrase: String,
    pub context_clause: Option<String>,
    pub subject_phrase: String,
    pub subject_kind: SubjectKind,
    pub predicate: String,
    pub rationale: Option<String>,
    pub attributes: Vec<AttributeTag>,
    pub themes: Vec<ThemeId>,
    pub span: Span,
}

impl UserStory {
    /// Bare story with the three mandatory slots; everything else empty.
    pub fn new(role: &str, subject: &str, predicate: &str) -> Self {
        UserStory {
            raw_text: String::new(),
            role_phrase: normalize(role),
            context_clause: None,
            subject_phrase: normalize(subject),
            subject_kind: SubjectKind::Unknown,
            predicate: normalize(predicate),
            rationale: None,
            attributes: Vec::new(),
            themes: Vec::new(),
            span: Span::default(),
        }
    }

    pub fn with_rationale(mut self, rationale: &str) -> Self {
        self.rationale = Some(normalize(rationale));
        self
    }

    pub fn with_themes(mut self, themes: Vec<ThemeId>) -> Self {
        self.themes = themes;
        self
    }

    pub fn with_attributes(mut self, attributes: Vec<AttributeTag>) -> Self {
        self.attributes = attributes;
        self
    }

    pub fn with_span(mut self, span: Span) -> Self {
        self.span = span;
        self
    }

    pub fn explicit_attributes(&self) -> impl Iterator<Item = &AttributeTag> {
        self.attributes
            .iter()
            .filter(|tag| tag.origin == TagOrigin::ExplicitAnnotation)
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
    pub fn parse(text: &str) -> Option<Severity> {
        match text.trim().to_ascii_lowercase().as_str() {
            "info" => Some(Severity::Info),
            "warning" | "warn" => Some(Severity::Warning),
            "error" => Some(Severity::Error),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The lint rules. `P0` covers blocks that could not be parsed at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "P0")]
    ParseError,
    #[serde(rename = "R1")]
    TemplateCompleteness,
    #[serde(rename = "R2")]
    DiQualification,
    #[serde(rename = "R3")]
    Actionability,
    #[serde(rename = "R4")]
    ThemeTag,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::ParseError,
        Rule::TemplateCompleteness,
        Rule::DiQualification,
        Rule::Actionability,
        Rule::ThemeTag,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Rule::ParseError => "P0",
            Rule::TemplateCompleteness => "R1",
            Rule::DiQualification => "R2",
            Rule::Actionability => "R3",
            Rule::ThemeTag => "R4",
        }
    }

    pub fn from_code(code: &str) -> Option<Rule> {
        Rule::ALL
            .into_iter()
            .find(|rule| rule.code().eq_ignore_ascii_case(code.trim()))
    }

    pub fn default_severity(self) -> Severity {
        match self {
            Rule::TemplateCompleteness => Severity::Warning,
            _ => Severity::Error,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub rule: Rule,
    pub severity: Severity,
    pub span: Span,
    pub message: String,
}

impl Diagnostic {
    pub fn new(rule: Rule, severity: Severity, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            rule,
            severity,
            span,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}[{}]: {}",
            self.span, self.severity, self.rule, self.message
        )
    }
}

/// The roles, processes and artifacts a project owner actually controls, plus the
/// dimensions the project treats as protected.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ProjectScope {
    #[serde(default)]
    pub roles: Vec<String>,
    #[serde(default)]
    pub processes: Vec<String>,
    #[serde(default)]
    pub artifacts: Vec<String>,
    #[serde(default)]
    pub protected_dimensions: Vec<String>,
}

impl ProjectScope {
    /// With no roles, processes or artifacts declared there is nothing to check
    /// subjects against; R3 findings are then reported as info only.
    pub fn is_unchecked(&self) -> bool {
        self.roles.is_empty() && self.processes.is_empty() && self.artifacts.is_empty()
    }

    pub fn is_protected(&self, dimension: &str) -> bool {
        self.protected_dimensions
            .iter()
            .any(|d| d.eq_ignore_ascii_case(dimension))
    }
}
