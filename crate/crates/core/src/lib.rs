//! Parser, rule-based validator and corpus analyzer for diversity & inclusion
//! (D&I) user stories written against the template
//!
//! ```text
//! As a <role>, I want <role | process | artifact> to <predicate | behaviour> so that <rationale>
//! ```
//!
//! optionally followed by a `[Attribute, ..., Theme n, ...]` annotation.

pub mod analyzer;
pub mod config;
pub mod corpus;
pub mod model;
pub mod parser;
pub mod report;
pub mod taxonomy;
pub mod validator;

pub use analyzer::{
    attribute_distribution, conflict_findings, coverage_report, AttributeDistribution,
    ConflictFinding, CoverageReport,
};
pub use config::{load_lexicon, Config, ConfigError};
pub use model::{
    normalize, AttributeTag, Diagnostic, Pillar, ProjectScope, Rule, Severity, Span, SubjectKind,
    TagOrigin, Theme, ThemeId, UserStory,
};
pub use parser::{
    parse_annotation, parse_corpus, parse_corpus_str, parse_story, render_canonical, ParseError,
    ParseOutcome,
};
pub use report::LintReport;
pub use taxonomy::{
    default_lexicon, infer_attributes, pillar_of, theme_by_id, AttributeLexicon, ConflictRegistry,
};
pub use validator::{
    check_actionability, check_di_qualification, check_template_completeness, check_theme_tags,
    lint, RuleConfig,
};
