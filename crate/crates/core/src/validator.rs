//! Lint rules over parsed stories.
//!
//! | code | checks                                                        | default  |
//! |------|---------------------------------------------------------------|----------|
//! | P0   | block could not be parsed                                     | error    |
//! | R1   | rationale present, no slot reduced to articles/pronouns       | warning  |
//! | R2   | a protected attribute qualifies the role or the behaviour     | error    |
//! | R3   | the subject is a role/process/artifact the project controls   | error    |
//! | R4   | the story carries theme tags, without duplicates              | error    |
//!
//! Rules emit `Info` for purely informational findings (an untagged story, or
//! an R3 miss when the project declared no scope); those stay `Info`
//! regardless of the configured severity.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::model::{
    AttributeTag, Diagnostic, ProjectScope, Rule, Severity, SubjectKind, ThemeId, UserStory,
};
use crate::parser::ParseOutcome;
use crate::taxonomy::{infer_attributes, AttributeLexicon};

/// Severity per rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleConfig {
    severities: BTreeMap<Rule, Severity>,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            severities: Rule::ALL
                .into_iter()
                .map(|r| (r, r.default_severity()))
                .collect(),
        }
    }
}

impl RuleConfig {
    pub fn severity(&self, rule: Rule) -> Severity {
        self.severities[&rule]
    }

    pub fn set(&mut self, rule: Rule, severity: Severity) {
        self.severities.insert(rule, severity);
    }

    pub fn with(mut self, rule: Rule, severity: Severity) -> Self {
        self.set(rule, severity);
        self
    }

    fn apply(&self, mut diag: Diagnostic) -> Diagnostic {
        if diag.severity != Severity::Info {
            diag.severity = self.severity(diag.rule);
        }
        diag
    }
}

const VACUOUS_WORDS: &[&str] = &[
    "a",
    "an",
    "the",
    "it",
    "its",
    "this",
    "that",
    "these",
    "those",
    "them",
    "they",
    "he",
    "she",
    "him",
    "her",
    "me",
    "i",
    "we",
    "us",
    "you",
    "one",
    "something",
    "someone",
    "anything",
    "stuff",
    "thing",
    "things",
    "do",
    "does",
    "make",
    "get",
    "have",
    "handle",
];

fn is_vacuous(slot: &str) -> bool {
    let mut words = slot
        .split(|c: char| !(c.is_alphanumeric() || c == '\''))
        .filter(|w| !w.is_empty())
        .peekable();
    words.peek().is_some() && words.all(|w| VACUOUS_WORDS.contains(&w.to_lowercase().as_str()))
}

/// R1: the story names who, what and why.
pub fn check_template_completeness(story: &UserStory) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let diag = |message: String| {
        Diagnostic::new(
            Rule::TemplateCompleteness,
            Rule::TemplateCompleteness.default_severity(),
            story.span.clone(),
            message,
        )
    };
    if story.rationale.is_none() {
        out.push(diag(format!(
            "missing rationale: no \"so that\" clause after `{}`",
            story.predicate
        )));
    }
    let slots = [
        ("role", Some(&story.role_phrase)),
        ("subject", Some(&story.subject_phrase)),
        ("predicate", Some(&story.predicate)),
        ("rationale", story.rationale.as_ref()),
    ];
    for (name, text) in slots {
        if let Some(text) = text.filter(|t| is_vacuous(t)) {
            out.push(diag(format!(
                "{name} `{text}` has no content beyond articles and pronouns"
            )));
        }
    }
    out
}

/// How a story satisfies the D&I qualification constraint.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Qualification {
    /// First protected attribute attached to the role (explicit annotations count as role attributes).
    pub role: Option<AttributeTag>,
    /// First protected attribute referenced by the predicate or rationale.
    pub behaviour: Option<AttributeTag>,
}

impl Qualification {
    pub fn passes(&self) -> bool {
        self.role.is_some() || self.behaviour.is_some()
    }
}

pub fn qualification(
    story: &UserStory,
    lexicon: &AttributeLexicon,
    scope: &ProjectScope,
) -> Qualification {
    let protected = |tag: &&AttributeTag| scope.is_protected(&tag.dimension);
    let role_inferred = infer_attributes(&story.role_phrase, lexicon);
    let role = story
        .explicit_attributes()
        .chain(role_inferred.iter())
        .find(protected)
        .cloned();

    let mut behaviour_tags = infer_attributes(&story.predicate, lexicon);
    if let Some(rationale) = &story.rationale {
        behaviour_tags.extend(infer_attributes(rationale, lexicon));
    }
    let behaviour = behaviour_tags.iter().find(protected).cloned();
    Qualification { role, behaviour }
}

/// R2: at least one protected attribute qualifies the role, or the behaviour refers to one.
pub fn check_di_qualification(
    story: &UserStory,
    lexicon: &AttributeLexicon,
    scope: &ProjectScope,
) -> Vec<Diagnostic> {
    if qualification(story, lexicon, scope).passes() {
        return Vec::new();
    }
    vec![Diagnostic::new(
        Rule::DiQualification,
        Rule::DiQualification.default_severity(),
        story.span.clone(),
        format!(
            "not a D&I requirement: role `{}` carries no protected attribute, and neither predicate `{}` nor the rationale refers to one",
            story.role_phrase, story.predicate
        ),
    )]
}

/// Result of matching a subject against the project scope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Actionability {
    pub kind: SubjectKind,
    /// The scope entry that matched, if any.
    pub matched: Option<String>,
    pub diagnostics: Vec<Diagnostic>,
}

/// Longest scope entry contained (case-insensitively) in the subject.
/// Ties go to processes, then artifacts, then roles.
pub fn classify_subject(subject: &str, scope: &ProjectScope) -> Option<(SubjectKind, String)> {
    let subject = subject.to_lowercase();
    let candidates = scope
        .processes
        .iter()
        .map(|n| (SubjectKind::Process, n))
        .chain(scope.artifacts.iter().map(|n| (SubjectKind::Artifact, n)))
        .chain(scope.roles.iter().map(|n| (SubjectKind::Role, n)));
    let mut best: Option<(SubjectKind, &String)> = None;
    for (kind, name) in candidates {
        let needle = name.trim().to_lowercase();
        if needle.is_empty() || !subject.contains(&needle) {
            continue;
        }
        if best.is_none_or(|(_, b)| name.trim().len() > b.trim().len()) {
            best = Some((kind, name));
        }
    }
    best.map(|(kind, name)| (kind, name.trim().to_string()))
}

/// R3: the subject is under the project owner's control.
pub fn check_actionability(story: &UserStory, scope: &ProjectScope) -> Actionability {
    match classify_subject(&story.subject_phrase, scope) {
        Some((kind, name)) => Actionability {
            kind,
            matched: Some(name),
            diagnostics: Vec::new(),
        },
        None => {
            let severity = if scope.is_unchecked() {
                Severity::Info
            } else {
                Rule::Actionability.default_severity()
            };
            let hint = if scope.is_unchecked() {
                " (no project scope declared)"
            } else {
                ""
            };
            Actionability {
                kind: SubjectKind::Unknown,
                matched: None,
                diagnostics: vec![Diagnostic::new(
                    Rule::Actionability,
                    severity,
                    story.span.clone(),
                    format!(
                        "subject `{}` is not actionable within project scope{hint}",
                        story.subject_phrase
                    ),
                )],
            }
        }
    }
}

/// Sets `subject_kind` on each story from the project scope.
pub fn classify_stories(stories: &mut [UserStory], scope: &ProjectScope) {
    for story in stories {
        story.subject_kind = classify_subject(&story.subject_phrase, scope)
            .map(|(kind, _)| kind)
            .unwrap_or(SubjectKind::Unknown);
    }
}

/// R4: theme tags present and not repeated.
pub fn check_theme_tags(story: &UserStory) -> Vec<Diagnostic> {
    if story.themes.is_empty() {
        return vec![Diagnostic::new(
            Rule::ThemeTag,
            Severity::Info,
            story.span.clone(),
            "story carries no theme tag",
        )];
    }
    let mut seen: Vec<ThemeId> = Vec::new();
    let mut repeated: Vec<ThemeId> = Vec::new();
    for &id in &story.themes {
        if seen.contains(&id) {
            if !repeated.contains(&id) {
                repeated.push(id);
            }
        } else {
            seen.push(id);
        }
    }
    if repeated.is_empty() {
        return Vec::new();
    }
    let list: Vec<String> = repeated.iter().map(ThemeId::to_string).collect();
    vec![Diagnostic::new(
        Rule::ThemeTag,
        Rule::ThemeTag.default_severity(),
        story.span.clone(),
        format!("duplicate theme tag(s): {}", list.join(", ")),
    )]
}

fn check_story(
    story: &UserStory,
    lexicon: &AttributeLexicon,
    scope: &ProjectScope,
) -> Vec<Diagnostic> {
    let mut out = check_template_completeness(story);
    out.extend(check_di_qualification(story, lexicon, scope));
    out.extend(check_actionability(story, scope).diagnostics);
    out.extend(check_theme_tags(story));
    out
}

/// Runs every rule over a parse outcome. Output is ordered by file (in input
/// order), then line, then rule.
pub fn lint(
    outcome: &ParseOutcome,
    lexicon: &AttributeLexicon,
    scope: &ProjectScope,
    rules: &RuleConfig,
) -> Vec<Diagnostic> {
    let per_story: Vec<Vec<Diagnostic>> = outcome
        .stories
        .par_iter()
        .map(|story| check_story(story, lexicon, scope))
        .collect();

    let mut all: Vec<Diagnostic> = outcome
        .diagnostics
        .iter()
        .cloned()
        .chain(per_story.into_iter().flatten())
        .map(|d| rules.apply(d))
        .collect();

    let file_rank = |file: &str| {
        outcome
            .files
            .iter()
            .position(|f| f == file)
            .unwrap_or(usize::MAX)
    };
    all.sort_by(|a, b| {
        (
            file_rank(&a.span.file),
            &a.span.file,
            a.span.line_start,
            a.span.line_end,
            a.rule,
        )
            .cmp(&(
                file_rank(&b.span.file),
                &b.span.file,
                b.span.line_start,
                b.span.line_end,
                b.rule,
            ))
    });
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Span;
    use crate::parser::{parse_corpus_str, parse_story};
    use crate::taxonomy::default_lexicon;

    fn default_scope() -> ProjectScope {
        ProjectScope {
            protected_dimensions: default_lexicon().protected_dimensions(),
            ..ProjectScope::default()
        }
    }

    fn rules_of(diags: &[Diagnostic]) -> Vec<Rule> {
        diags.iter().map(|d| d.rule).collect()
    }

    #[test]
    fn r1_missing_rationale() {
        let story = parse_story(
            "As a transgender person who does not want to disclose my gender attribute, I want FRASS to respect my privacy.",
            &default_lexicon(),
        )
        .unwrap();
        let diags = check_template_completeness(&story);
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains("missing rationale"));
        assert_eq!(diags[0].severity, Severity::Warning);
    }

    #[test]
    fn r1_complete_story_passes() {
        let story = UserStory::new("X", "Y", "Z").with_rationale("W");
        assert!(check_template_completeness(&story).is_empty());
    }

    #[test]
    fn r1_pronoun_only_predicate() {
        let story = UserStory::new("blind user", "FRASS", "do it").with_rationale("I can enter");
        let diags = check_template_completeness(&story);
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.starts_with("predicate"));
        assert!(!is_vacuous("do the scan"));
        assert!(is_vacuous("the"));
        assert!(!is_vacuous(""));
    }

    #[test]
    fn r2_role_path_non_binary_user() {
        let lex = default_lexicon();
        let story = UserStory::new(
            "non-binary user of the system",
            "FRASS",
            "respect my pronouns",
        )
        .with_rationale("I feel respected");
        let q = qualification(&story, &lex, &default_scope());
        let tag = q.role.expect("role path");
        assert_eq!(tag.dimension, "Gender Identity");
        assert_eq!(tag.value.as_deref(), Some("non-binary"));
        assert!(check_di_qualification(&story, &lex, &default_scope()).is_empty());
    }

    #[test]
    fn r2_behaviour_path_audible_feedback() {
        let lex = default_lexicon();
        let story = UserStory::new("developer", "the system", "provide audible feedback")
            .with_rationale("visually impaired users are included");
        let q = qualification(&story, &lex, &default_scope());
        assert_eq!(
            q.behaviour.as_ref().map(|t| t.dimension.as_str()),
            Some("Disability")
        );
        assert!(check_di_qualification(&story, &lex, &default_scope()).is_empty());

        // With occupation unprotected only the behaviour path remains, and it suffices.
        let mut scope = default_scope();
        scope.protected_dimensions.retain(|d| d != "Occupation");
        let q = qualification(&story, &lex, &scope);
        assert!(q.role.is_none());
        assert!(q.passes());
    }

    #[test]
    fn r2_unqualified_story_fails() {
        let story = UserStory::new("user", "FRASS", "log in quickly").with_rationale("I save time");
        let diags = check_di_qualification(&story, &default_lexicon(), &default_scope());
        assert_eq!(rules_of(&diags), vec![Rule::DiQualification]);
    }

    #[test]
    fn r2_unprotected_explicit_attribute_does_not_count() {
        let story = UserStory::new("user", "FRASS", "log in quickly")
            .with_attributes(vec![AttributeTag::explicit("Race")]);
        let mut scope = default_scope();
        assert!(check_di_qualification(&story, &default_lexicon(), &scope).is_empty());
        scope.protected_dimensions.retain(|d| d != "Race");
        assert_eq!(
            check_di_qualification(&story, &default_lexicon(), &scope).len(),
            1
        );
    }

    #[test]
    fn r3_matches_artifact() {
        let scope = ProjectScope {
            artifacts: vec!["FRASS".into()],
            ..default_scope()
        };
        let result = check_actionability(&UserStory::new("u", "FRASS", "p"), &scope);
        assert_eq!(result.kind, SubjectKind::Artifact);
        assert!(result.diagnostics.is_empty());
    }

    #[test]
    fn r3_matches_process() {
        let scope = ProjectScope {
            processes: vec!["Work Hours Logging".into()],
            ..default_scope()
        };
        let result =
            check_actionability(&UserStory::new("u", "the Work Hours Logging", "p"), &scope);
        assert_eq!(result.kind, SubjectKind::Process);
        assert_eq!(result.matched.as_deref(), Some("Work Hours Logging"));
    }

    #[test]
    fn r3_national_government_is_out_of_scope() {
        let story = UserStory::new(
            "startup founder",
            "the national government",
            "fund training",
        );
        let result = check_actionability(&story, &default_scope());
        assert_eq!(result.kind, SubjectKind::Unknown);
        assert_eq!(rules_of(&result.diagnostics), vec![Rule::Actionability]);
        // no scope declared: reported as info
        assert_eq!(result.diagnostics[0].severity, Severity::Info);

        let scope = ProjectScope {
            artifacts: vec!["FRASS".into()],
            ..default_scope()
        };
        let result = check_actionability(&story, &scope);
        assert_eq!(result.diagnostics[0].severity, Severity::Error);
    }

    #[test]
    fn r3_longest_match_wins() {
        let mut scope = ProjectScope {
            artifacts: vec!["FRASS".into()],
            ..default_scope()
        };
        let subject = "Real-Time Alerts feature of the FRASS";
        assert_eq!(
            classify_subject(subject, &scope).unwrap().0,
            SubjectKind::Artifact
        );
        scope.processes.push("Real-Time Alerts".into());
        assert_eq!(
            classify_subject(subject, &scope),
            Some((SubjectKind::Process, "Real-Time Alerts".to_string()))
        );
    }

    #[test]
    fn classify_sets_subject_kind() {
        let scope = ProjectScope {
            roles: vec!["security team".into()],
            artifacts: vec!["FRASS".into()],
            ..default_scope()
        };
        let mut stories = vec![
            UserStory::new("u", "the security team", "p"),
            UserStory::new("u", "FRASS", "p"),
            UserStory::new("u", "the city council", "p"),
        ];
        classify_stories(&mut stories, &scope);
        let kinds: Vec<_> = stories.iter().map(|s| s.subject_kind).collect();
        assert_eq!(
            kinds,
            vec![
                SubjectKind::Role,
                SubjectKind::Artifact,
                SubjectKind::Unknown
            ]
        );
    }

    #[test]
    fn r4_theme_tags() {
        let t = |i| ThemeId::new(i).unwrap();
        let untagged = UserStory::new("u", "s", "p");
        let diags = check_theme_tags(&untagged);
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].severity, Severity::Info);

        let tagged = UserStory::new("u", "s", "p").with_themes(vec![t(1), t(12), t(18)]);
        assert!(check_theme_tags(&tagged).is_empty());

        let dup = UserStory::new("u", "s", "p").with_themes(vec![t(5), t(5)]);
        let diags = check_theme_tags(&dup);
        assert_eq!(diags.len(), 1);
        assert!(diags[0].message.contains('5'));
    }

    #[test]
    fn lint_empty_outcome() {
        let diags = lint(
            &ParseOutcome::default(),
            &default_lexicon(),
            &default_scope(),
            &RuleConfig::default(),
        );
        assert!(diags.is_empty());
    }

    #[test]
    fn lint_unscoped_attribute_free_story() {
        // Oracle by enumeration: R1 passes (rationale present), R2 fails, R3 fails
        // against a declared scope, R4 reports an untagged story as info.
        let lex = default_lexicon();
        let scope = ProjectScope {
            artifacts: vec!["FRASS".into()],
            ..default_scope()
        };
        let outcome = parse_corpus_str(
            "As a user, I want the portal to log me in quickly so that I save time\n",
            "one",
            &lex,
        );
        let diags = lint(&outcome, &lex, &scope, &RuleConfig::default());
        let errors: Vec<Rule> = diags
            .iter()
            .filter(|d| d.severity == Severity::Error)
            .map(|d| d.rule)
            .collect();
        assert_eq!(errors, vec![Rule::DiQualification, Rule::Actionability]);
        assert_eq!(diags.len(), 3);
    }

    #[test]
    fn lint_applies_configured_severities_and_orders_by_span() {
        let lex = default_lexicon();
        let text = "As a user, I want it to work\n\nnot a story\n";
        let outcome = parse_corpus_str(text, "f", &lex);
        let rules = RuleConfig::default()
            .with(Rule::TemplateCompleteness, Severity::Error)
            .with(Rule::ParseError, Severity::Warning);
        let diags = lint(&outcome, &lex, &default_scope(), &rules);
        let lines: Vec<usize> = diags.iter().map(|d| d.span.line_start).collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        for d in &diags {
            match d.rule {
                Rule::TemplateCompleteness => assert_eq!(d.severity, Severity::Error),
                Rule::ParseError => assert_eq!(d.severity, Severity::Warning),
                Rule::ThemeTag | Rule::Actionability => assert_eq!(d.severity, Severity::Info),
                Rule::DiQualification => assert_eq!(d.severity, Severity::Error),
            }
            assert_ne!(d.span, Span::default());
        }
        // R1 fires twice: no rationale, and subject `it` is a bare pronoun.
        assert_eq!(
            diags
                .iter()
                .filter(|d| d.rule == Rule::TemplateCompleteness)
                .count(),
            2
        );
    }
}
