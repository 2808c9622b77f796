//! Story-file parser.
//!
//! Grammar, matched on whitespace-normalized text:
//!
//! ```text
//! story      := "As" article role context? ","? "I want" subject "to" predicate
//!               (","? "so that" rationale)? "."? annotation?
//! article    := "a" | "an" | "the"
//! role       := text up to the first "," or "I want"
//! context    := text between that comma and "I want"
//! annotation := "[" label (sep label)* ("," "Theme" int ("," int)*)? "]"
//! sep        := "," | "&" | "/"
//! ```
//!
//! Keywords are matched case-insensitively on word boundaries. Story files
//! (`.distories`) hold one story per blank-line separated block; lines whose
//! first non-blank character is `#` are comments.

use std::io::Read;
use std::sync::OnceLock;

use rayon::prelude::*;
use regex::Regex;

use crate::model::{normalize, AttributeTag, Diagnostic, Rule, Span, ThemeId, UserStory};
use crate::taxonomy::{infer_attributes, AttributeLexicon};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("expected story to start with \"As a\", \"As an\" or \"As the\" (at column 1)")]
    MissingAs,
    #[error("expected \"I want\" after the role phrase (from column {column})")]
    MissingIWant { column: usize },
    #[error("expected \"to\" after the subject following \"I want\" (from column {column})")]
    MissingTo { column: usize },
    #[error("{0} slot is empty")]
    EmptySlot(&'static str),
    #[error("annotation is empty")]
    EmptyAnnotation,
    #[error("annotation contains an empty label")]
    EmptyLabel,
    #[error("annotation label `{0}` is not a known attribute dimension")]
    UnknownDimension(String),
    #[error("\"Theme\" in annotation is not followed by any theme id")]
    MissingThemeIds,
    #[error("`{0}` is not a theme id")]
    BadThemeToken(String),
    #[error("theme id {0} is outside the range 1..=23")]
    ThemeOutOfRange(i64),
}

#[derive(Debug, thiserror::Error)]
#[error("cannot read story corpus {file}: {source}")]
pub struct CorpusError {
    pub file: String,
    #[source]
    pub source: std::io::Error,
}

/// Stories and P0 diagnostics from one corpus, in input order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseOutcome {
    pub stories: Vec<UserStory>,
    pub diagnostics: Vec<Diagnostic>,
    /// Source names in the order they were parsed.
    pub files: Vec<String>,
}

impl ParseOutcome {
    pub fn extend(&mut self, other: ParseOutcome) {
        self.stories.extend(other.stories);
        self.diagnostics.extend(other.diagnostics);
        for file in other.files {
            if !self.files.contains(&file) {
                self.files.push(file);
            }
        }
    }
}

fn regex(cell: &'static OnceLock<Regex>, pattern: &str) -> &'static Regex {
    cell.get_or_init(|| Regex::new(pattern).expect("static pattern"))
}

fn prefix_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    regex(&RE, r"^(?i)as\s+(?:a|an|the)\s+")
}

fn i_want_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    regex(&RE, r"(?i)\bI\s+want\b")
}

fn to_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    regex(&RE, r"(?i)\bto\b")
}

fn so_that_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    regex(&RE, r"(?i)\bso\s+that\b")
}

fn column(text: &str, byte: usize) -> usize {
    text[..byte].chars().count() + 1
}

/// Splits a trailing `[...]` group off the story. Returns `(body, annotation)`.
fn split_annotation(text: &str) -> (&str, Option<&str>) {
    let trimmed = text.trim_end();
    let closed = trimmed.strip_suffix('.').unwrap_or(trimmed).trim_end();
    if !closed.ends_with(']') {
        return (trimmed, None);
    }
    let mut depth = 0usize;
    for (idx, ch) in closed.char_indices().rev() {
        match ch {
            ']' => depth += 1,
            '[' => {
                depth -= 1;
                if depth == 0 {
                    return (closed[..idx].trim_end(), Some(&closed[idx..]));
                }
            }
            _ => {}
        }
    }
    (trimmed, None)
}

/// Trims whitespace and any run of trailing `ch` (e.g. `"leave,, "` -> `"leave"`).
fn strip_trailing(text: &str, ch: char) -> &str {
    text.trim()
        .trim_end_matches(|c: char| c == ch || c.is_whitespace())
}

/// Parses one story block.
pub fn parse_story(text: &str, lexicon: &AttributeLexicon) -> Result<UserStory, ParseError> {
    parse_story_at(text, lexicon, Span::default())
}

fn parse_story_at(
    text: &str,
    lexicon: &AttributeLexicon,
    span: Span,
) -> Result<UserStory, ParseError> {
    let normalized = normalize(text);
    let (body, annotation) = split_annotation(&normalized);
    let body = strip_trailing(body, '.');

    let prefix = prefix_re().find(body).ok_or(ParseError::MissingAs)?;
    let after_prefix = &body[prefix.end()..];

    let want = i_want_re()
        .find(after_prefix)
        .ok_or(ParseError::MissingIWant {
            column: column(body, prefix.end()),
        })?;
    let role_region = &after_prefix[..want.start()];
    let (role_phrase, context_clause) = match role_region.find(',') {
        Some(comma) => {
            let context = strip_trailing(&role_region[comma + 1..], ',');
            (
                role_region[..comma].trim(),
                (!context.is_empty()).then(|| context.to_string()),
            )
        }
        None => (role_region.trim(), None),
    };
    if role_phrase.is_empty() {
        return Err(ParseError::EmptySlot("role"));
    }

    let after_want = &after_prefix[want.end()..];
    let to = to_re().find(after_want).ok_or(ParseError::MissingTo {
        column: column(body, prefix.end() + want.end()),
    })?;
    let subject_phrase = after_want[..to.start()].trim();
    if subject_phrase.is_empty() {
        return Err(ParseError::EmptySlot("subject"));
    }

    let tail = &after_want[to.end()..];
    let (predicate, rationale) = match so_that_re().find(tail) {
        Some(m) => {
            let rationale = tail[m.end()..].trim();
            (
                strip_trailing(&tail[..m.start()], ','),
                (!rationale.is_empty()).then(|| rationale.to_string()),
            )
        }
        None => (tail.trim(), None),
    };
    if predicate.is_empty() {
        return Err(ParseError::EmptySlot("predicate"));
    }

    let (mut attributes, themes) = match annotation {
        Some(group) => parse_annotation(group, lexicon)?,
        None => (Vec::new(), Vec::new()),
    };
    attributes.extend(merge_inferred(
        &attributes,
        infer_attributes(role_phrase, lexicon),
        infer_attributes(predicate, lexicon),
    ));

    Ok(UserStory {
        raw_text: text.to_string(),
        role_phrase: role_phrase.to_string(),
        context_clause,
        subject_phrase: subject_phrase.to_string(),
        subject_kind: Default::default(),
        predicate: predicate.to_string(),
        rationale,
        attributes,
        themes,
        span,
    })
}

/// Role tags take precedence over predicate tags; dimensions already carried
/// by an explicit annotation are skipped. Result is ordered by dimension.
fn merge_inferred(
    explicit: &[AttributeTag],
    role: Vec<AttributeTag>,
    predicate: Vec<AttributeTag>,
) -> Vec<AttributeTag> {
    let mut merged: Vec<AttributeTag> = Vec::new();
    for tag in role.into_iter().chain(predicate) {
        let seen = explicit
            .iter()
            .chain(merged.iter())
            .any(|t| t.dimension == tag.dimension);
        if !seen {
            merged.push(tag);
        }
    }
    merged.sort_by(|a, b| a.dimension.cmp(&b.dimension));
    merged
}

/// Parses a `[Label, Label & Label, Theme 1, 12]` annotation group.
pub fn parse_annotation(
    text: &str,
    lexicon: &AttributeLexicon,
) -> Result<(Vec<AttributeTag>, Vec<ThemeId>), ParseError> {
    let inner = text.trim();
    let inner = inner.strip_prefix('[').unwrap_or(inner);
    let inner = inner.strip_suffix(']').unwrap_or(inner).trim();
    if inner.is_empty() {
        return Err(ParseError::EmptyAnnotation);
    }

    let mut attributes = Vec::new();
    let mut themes = Vec::new();
    let mut in_themes = false;
    for token in inner.split(',').map(str::trim) {
        if !in_themes {
            if let Some(rest) = theme_keyword(token) {
                in_themes = true;
                if rest.is_empty() {
                    continue;
                }
                themes.push(theme_token(rest)?);
                continue;
            }
            for label in token.split(['&', '/']).map(str::trim) {
                if label.is_empty() {
                    return Err(ParseError::EmptyLabel);
                }
                let dimension = lexicon
                    .canonicalize(label)
                    .ok_or_else(|| ParseError::UnknownDimension(label.to_string()))?;
                attributes.push(AttributeTag::explicit(dimension));
            }
        } else {
            themes.push(theme_token(token)?);
        }
    }
    if in_themes && themes.is_empty() {
        return Err(ParseError::MissingThemeIds);
    }
    Ok((attributes, themes))
}

/// Returns the text after a leading "Theme"/"Themes" keyword.
fn theme_keyword(token: &str) -> Option<&str> {
    let word_end = token
        .find(|c: char| !c.is_alphabetic())
        .unwrap_or(token.len());
    let word = &token[..word_end];
    (word.eq_ignore_ascii_case("theme") || word.eq_ignore_ascii_case("themes"))
        .then(|| token[word_end..].trim())
}

fn theme_token(token: &str) -> Result<ThemeId, ParseError> {
    let value: i64 = token
        .trim()
        .parse()
        .map_err(|_| ParseError::BadThemeToken(token.trim().to_string()))?;
    ThemeId::new(value).map_err(|_| ParseError::ThemeOutOfRange(value))
}

struct Block {
    text: String,
    line_start: usize,
    line_end: usize,
}

fn blocks(text: &str) -> Vec<Block> {
    let mut out = Vec::new();
    let mut current: Option<Block> = None;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            out.extend(current.take());
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        match current.as_mut() {
            Some(block) => {
                block.text.push('\n');
                block.text.push_str(line);
                block.line_end = line_no;
            }
            None => {
                current = Some(Block {
                    text: line.to_string(),
                    line_start: line_no,
                    line_end: line_no,
                })
            }
        }
    }
    out.extend(current);
    out
}

/// Parses a whole story file held in memory. Blocks are parsed in parallel;
/// the outcome is assembled in file order.
pub fn parse_corpus_str(text: &str, file: &str, lexicon: &AttributeLexicon) -> ParseOutcome {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let results: Vec<Result<UserStory, Diagnostic>> = blocks(text)
        .into_par_iter()
        .map(|block| {
            let span = Span::new(file, block.line_start, block.line_end);
            parse_story_at(&block.text, lexicon, span.clone()).map_err(|err| {
                Diagnostic::new(
                    Rule::ParseError,
                    Rule::ParseError.default_severity(),
                    span,
                    err.to_string(),
                )
            })
        })
        .collect();

    let mut outcome = ParseOutcome {
        files: vec![file.to_string()],
        ..ParseOutcome::default()
    };
    for result in results {
        match result {
            Ok(story) => outcome.stories.push(story),
            Err(diag) => outcome.diagnostics.push(diag),
        }
    }
    outcome
}

/// Reads and parses a story stream.
pub fn parse_corpus<R: Read>(
    mut input: R,
    file: &str,
    lexicon: &AttributeLexicon,
) -> Result<ParseOutcome, CorpusError> {
    let mut text = String::new();
    input
        .read_to_string(&mut text)
        .map_err(|source| CorpusError {
            file: file.to_string(),
            source,
        })?;
    Ok(parse_corpus_str(&text, file, lexicon))
}

/// Renders a story in canonical template form. Only explicit annotation
/// attributes are written; inferred ones are recomputed on re-parse.
pub fn render_canonical(story: &UserStory) -> String {
    let article = match story.role_phrase.chars().next() {
        Some(c) if "aeiouAEIOU".contains(c) => "an",
        _ => "a",
    };
    let mut out = format!("As {article} {}, ", story.role_phrase);
    if let Some(context) = &story.context_clause {
        out.push_str(context);
        out.push(' ');
    }
    out.push_str(&format!(
        "I want {} to {}",
        story.subject_phrase, story.predicate
    ));
    if let Some(rationale) = &story.rationale {
        out.push_str(" so that ");
        out.push_str(rationale);
    }
    out.push('.');

    let mut parts: Vec<String> = story
        .explicit_attributes()
        .map(|t| t.dimension.clone())
        .collect();
    if !story.themes.is_empty() {
        let ids: Vec<String> = story.themes.iter().map(ThemeId::to_string).collect();
        parts.push(format!("Theme {}", ids.join(", ")));
    }
    if !parts.is_empty() {
        out.push_str(&format!(" [{}]", parts.join(", ")));
    }
    out
}
