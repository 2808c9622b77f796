use dilint_core::corpus::{FRASS_CONFIG, FRASS_HUMAN, GOLDEN, VRIMA_CONFIG, VRIMA_HUMAN};
use dilint_core::validator::qualification;
use dilint_core::{
    attribute_distribution, coverage_report, lint, parse_corpus_str, AttributeLexicon, Config,
    Pillar, ProjectScope, Rule, Severity, UserStory,
};

/// Theme annotations as printed for each story, in file order.
fn expected_themes(file: &str) -> Vec<Vec<u8>> {
    match file {
        "frass_human.distories" => vec![
            vec![20],
            vec![1],
            vec![3],
            vec![1],
            vec![13],
            vec![14],
            vec![21],
            vec![1],
            vec![1],
            vec![3],
            vec![6],
            vec![2],
        ],
        "frass_gpt4.distories" => vec![
            vec![1, 12, 18],
            vec![1, 12, 18],
            vec![1, 20],
            vec![5, 20],
            vec![1, 12, 18],
            vec![10, 15],
            vec![1, 2, 15],
        ],
        "vrima_human.distories" => vec![
            vec![17],
            vec![20],
            vec![13],
            vec![13],
            vec![20],
            vec![18],
            vec![20],
            vec![1],
            vec![20],
            vec![4],
            vec![13],
            vec![21],
        ],
        "vrima_gpt4.distories" => vec![vec![13], vec![3], vec![7], vec![20], vec![1], vec![1, 23]],
        other => panic!("unknown corpus file {other}"),
    }
}

fn explicit(story: &UserStory) -> Vec<&str> {
    story
        .explicit_attributes()
        .map(|t| t.dimension.as_str())
        .collect()
}

#[test]
fn every_golden_story_parses_with_expected_themes() {
    let lexicon = AttributeLexicon::default();
    let mut total = 0;
    for (file, text) in GOLDEN {
        let outcome = parse_corpus_str(text, file, &lexicon);
        assert!(
            outcome.diagnostics.is_empty(),
            "{file}: {:?}",
            outcome.diagnostics
        );
        let got: Vec<Vec<u8>> = outcome
            .stories
            .iter()
            .map(|s| s.themes.iter().map(|t| t.get()).collect())
            .collect();
        assert_eq!(got, expected_themes(file), "{file}");
        total += outcome.stories.len();
    }
    assert_eq!(total, 37);
}

#[test]
fn frass_human_explicit_attributes() {
    let outcome = parse_corpus_str(
        FRASS_HUMAN,
        "frass_human.distories",
        &AttributeLexicon::default(),
    );
    let attrs: Vec<Vec<&str>> = outcome.stories.iter().map(explicit).collect();
    assert_eq!(
        attrs,
        vec![
            vec!["Disability"],
            vec!["Lifestyle"],
            vec!["Occupation"],
            vec!["Religion", "Gender"],
            vec!["Physical Appearance"],
            vec!["Race"],
            vec!["Occupation"],
            vec!["Gender"],
            vec!["Occupation"],
            vec!["Occupation"],
            vec!["Physical Appearance"],
            vec!["Occupation"],
        ]
    );
}

#[test]
fn vrima_profession_aliases_to_occupation() {
    let outcome = parse_corpus_str(
        VRIMA_HUMAN,
        "vrima_human.distories",
        &AttributeLexicon::default(),
    );
    let with_occupation = outcome
        .stories
        .iter()
        .filter(|s| explicit(s).contains(&"Occupation"))
        .count();
    // "Profession" appears in every human VRIMA annotation except the visual-impairment story.
    assert_eq!(with_occupation, 11);
    assert_eq!(
        explicit(&outcome.stories[1]),
        vec!["Health Condition", "Occupation"]
    );
}

#[test]
fn frass_human_coverage_and_distribution() {
    let outcome = parse_corpus_str(
        FRASS_HUMAN,
        "frass_human.distories",
        &AttributeLexicon::default(),
    );
    let report = coverage_report(&outcome.stories);
    let covered: Vec<u8> = report.covered_themes.iter().map(|t| t.get()).collect();
    assert_eq!(covered, vec![1, 2, 3, 6, 13, 14, 20, 21]);
    let system = report.pillar_coverage[&Pillar::System];
    assert_eq!((system.covered, system.total), (0, 3));

    let dist = attribute_distribution(&outcome.stories);
    assert_eq!(dist.get("Occupation"), 5);
}

#[test]
fn frass_human_lints_clean_under_frass_scope() {
    let config = Config::from_json(FRASS_CONFIG).unwrap();
    let outcome = parse_corpus_str(FRASS_HUMAN, "frass_human.distories", &config.lexicon);
    let diags = lint(&outcome, &config.lexicon, &config.scope, &config.rules);
    let errors: Vec<_> = diags
        .iter()
        .filter(|d| d.severity == Severity::Error)
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
    // Stories 2, 3, 7 and 8 have no "so that" clause.
    let r1_lines: Vec<usize> = diags
        .iter()
        .filter(|d| d.rule == Rule::TemplateCompleteness)
        .map(|d| d.span.line_start)
        .collect();
    assert_eq!(r1_lines.len(), 4);
    let story_lines: Vec<usize> = outcome.stories.iter().map(|s| s.span.line_start).collect();
    assert_eq!(
        r1_lines,
        vec![
            story_lines[1],
            story_lines[2],
            story_lines[6],
            story_lines[7]
        ]
    );
}

#[test]
fn vrima_human_lints_clean_under_vrima_scope() {
    let config = Config::from_json(VRIMA_CONFIG).unwrap();
    let outcome = parse_corpus_str(VRIMA_HUMAN, "vrima_human.distories", &config.lexicon);
    let diags = lint(&outcome, &config.lexicon, &config.scope, &config.rules);
    assert!(
        diags.iter().all(|d| d.severity != Severity::Error),
        "{diags:?}"
    );
    assert_eq!(
        diags
            .iter()
            .filter(|d| d.rule == Rule::TemplateCompleteness)
            .count(),
        4
    );
}

/// Independent re-implementation of whole-word, case-insensitive term search
/// with an optional plural "s", written against plain string scanning.
fn mentions(text: &str, term: &str) -> bool {
    let hay = text.to_lowercase();
    let needle = term.to_lowercase();
    let is_word = |c: char| c.is_alphanumeric() || c == '_';
    let mut from = 0;
    while let Some(pos) = hay[from..].find(&needle) {
        let start = from + pos;
        let mut end = start + needle.len();
        let before_ok =
            !needle.starts_with(is_word) || hay[..start].chars().last().is_none_or(|c| !is_word(c));
        if needle.ends_with(is_word) && hay[end..].starts_with('s') {
            let after_s = hay[end + 1..].chars().next();
            if after_s.is_none_or(|c| !is_word(c)) {
                end += 1;
            }
        }
        let after_ok =
            !needle.ends_with(is_word) || hay[end..].chars().next().is_none_or(|c| !is_word(c));
        if before_ok && after_ok {
            return true;
        }
        from = start + hay[start..].chars().next().map_or(1, char::len_utf8);
    }
    false
}

fn brute_force_r2(story: &UserStory, lexicon: &AttributeLexicon, scope: &ProjectScope) -> bool {
    let protected = |dim: &str| scope.protected_dimensions.iter().any(|p| p == dim);
    if story.explicit_attributes().any(|t| protected(&t.dimension)) {
        return true;
    }
    let behaviour = format!(
        "{} | {}",
        story.predicate,
        story.rationale.as_deref().unwrap_or("")
    );
    lexicon.entries().iter().any(|(dim, entry)| {
        protected(dim)
            && entry
                .terms
                .iter()
                .any(|term| mentions(&story.role_phrase, term) || mentions(&behaviour, term))
    })
}

#[test]
fn r2_agrees_with_brute_force_scan_on_every_golden_story() {
    let lexicon = AttributeLexicon::default();
    let all = lexicon.protected_dimensions();
    let scopes = [
        all.clone(),
        Vec::new(),
        vec!["Disability".to_string()],
        vec!["Occupation".to_string(), "Gender".to_string()],
        all.iter().filter(|d| *d != "Occupation").cloned().collect(),
    ];
    let mut checked = 0;
    for (file, text) in GOLDEN {
        let mut outcome = parse_corpus_str(text, file, &lexicon);
        // strip annotations too, so the lexicon path is exercised on its own
        let stripped: Vec<UserStory> = outcome
            .stories
            .iter()
            .map(|s| UserStory {
                attributes: s
                    .attributes
                    .iter()
                    .filter(|t| t.origin == dilint_core::TagOrigin::LexiconInferred)
                    .cloned()
                    .collect(),
                ..s.clone()
            })
            .collect();
        outcome.stories.extend(stripped);
        for protected in &scopes {
            let scope = ProjectScope {
                protected_dimensions: protected.clone(),
                ..ProjectScope::default()
            };
            for story in &outcome.stories {
                assert_eq!(
                    qualification(story, &lexicon, &scope).passes(),
                    brute_force_r2(story, &lexicon, &scope),
                    "{file}: {}",
                    story.role_phrase
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 37 * 2 * 5);
}

#[test]
fn oracle_matcher_sanity() {
    assert!(mentions("Visually impaired users", "visually impaired"));
    assert!(mentions("two developers", "developer"));
    assert!(!mentions("management", "manager"));
    assert!(!mentions("human", "man"));
    assert!(mentions("a non-binary user", "non-binary"));
}
