//! Lint report assembly and rendering (human-readable text and JSON).
//!
//! The JSON document always has the top-level keys `diagnostics`, `coverage`,
//! `conflicts`, `attributes` and `diagnostics_summary`, in that order. Maps are
//! ordered, so identical inputs render byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::analyzer::{
    attribute_distribution, conflict_findings, coverage_report, AttributeDistribution,
    ConflictFinding, CoverageReport,
};
use crate::config::Config;
use crate::model::{Diagnostic, Rule, Severity};
use crate::parser::ParseOutcome;
use crate::taxonomy::theme_by_id;
use crate::validator::lint;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagnosticsSummary {
    pub stories: usize,
    pub total: usize,
    pub errors: usize,
    pub warnings: usize,
    pub infos: usize,
    pub by_rule: BTreeMap<Rule, usize>,
}

impl DiagnosticsSummary {
    pub fn tally(stories: usize, diagnostics: &[Diagnostic]) -> Self {
        let count = |sev| diagnostics.iter().filter(|d| d.severity == sev).count();
        let by_rule = Rule::ALL
            .into_iter()
            .map(|rule| (rule, diagnostics.iter().filter(|d| d.rule == rule).count()))
            .collect();
        DiagnosticsSummary {
            stories,
            total: diagnostics.len(),
            errors: count(Severity::Error),
            warnings: count(Severity::Warning),
            infos: count(Severity::Info),
            by_rule,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintReport {
    pub diagnostics: Vec<Diagnostic>,
    pub coverage: CoverageReport,
    pub conflicts: Vec<ConflictFinding>,
    pub attributes: AttributeDistribution,
    pub diagnostics_summary: DiagnosticsSummary,
}

impl LintReport {
    pub fn build(outcome: &ParseOutcome, config: &Config) -> Self {
        let diagnostics = lint(outcome, &config.lexicon, &config.scope, &config.rules);
        let diagnostics_summary = DiagnosticsSummary::tally(outcome.stories.len(), &diagnostics);
        LintReport {
            coverage: coverage_report(&outcome.stories),
            conflicts: conflict_findings(&outcome.stories, &config.conflicts),
            attributes: attribute_distribution(&outcome.stories),
            diagnostics,
            diagnostics_summary,
        }
    }

    pub fn max_severity(&self) -> Option<Severity> {
        self.diagnostics.iter().map(|d| d.severity).max()
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for diag in &self.diagnostics {
            let _ = writeln!(out, "{diag}");
        }
        if !self.diagnostics.is_empty() {
            out.push('\n');
        }

        let cov = &self.coverage;
        let _ = writeln!(
            out,
            "Theme coverage: {}/23 themes across {} stories",
            cov.covered_themes.len(),
            cov.story_count
        );
        for (pillar, pc) in &cov.pillar_coverage {
            let _ = writeln!(out, "  {:<10}  {}/{}", pillar.name(), pc.covered, pc.total);
        }
        if cov.gaps.is_empty() {
            let _ = writeln!(out, "  gaps: none");
        } else {
            let _ = writeln!(out, "  gaps:");
            for id in &cov.gaps {
                let theme = theme_by_id(i64::from(id.get())).expect("gap ids are valid");
                let _ = writeln!(out, "    {:>2}  {}", id, theme.title);
            }
        }

        let _ = writeln!(out, "\nConflicts to review:");
        if self.conflicts.is_empty() {
            let _ = writeln!(out, "  none");
        }
        for finding in &self.conflicts {
            let [a, b] = finding.pair.as_array();
            let spans = |refs: &[crate::model::Span]| {
                refs.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let _ = writeln!(out, "  themes {a} & {b}: {}", finding.rationale);
            let _ = writeln!(out, "    theme {a}: {}", spans(&finding.story_refs_a));
            let _ = writeln!(out, "    theme {b}: {}", spans(&finding.story_refs_b));
        }

        let _ = writeln!(out, "\nAttribute distribution (stories per dimension):");
        if self.attributes.counts.is_empty() {
            let _ = writeln!(out, "  none");
        }
        for (dim, n) in &self.attributes.counts {
            let _ = writeln!(out, "  {dim:<20}  {n}");
        }

        let s = &self.diagnostics_summary;
        let _ = writeln!(
            out,
            "\n{} stories: {} errors, {} warnings, {} info",
            s.stories, s.errors, s.warnings, s.infos
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_corpus_str;

    const SAMPLE: &str = "As a blind user, I want FRASS to read the screen aloud so that I can enter [Disability, Theme 20]\n\nAs a user, I want the portal to load\n\nbroken block\n";

    fn build() -> LintReport {
        let config = Config::default();
        let outcome = parse_corpus_str(SAMPLE, "s.distories", &config.lexicon);
        LintReport::build(&outcome, &config)
    }

    #[test]
    fn json_has_fixed_top_level_keys() {
        let value: serde_json::Value = serde_json::from_str(&build().to_json()).unwrap();
        let keys: Vec<&str> = value
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        for key in [
            "diagnostics",
            "coverage",
            "conflicts",
            "attributes",
            "diagnostics_summary",
        ] {
            assert!(keys.contains(&key), "missing {key}");
        }
        let text = build().to_json();
        let positions: Vec<usize> = [
            "\"diagnostics\"",
            "\"coverage\"",
            "\"conflicts\"",
            "\"attributes\"",
            "\"diagnostics_summary\"",
        ]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn json_is_stable() {
        assert_eq!(build().to_json(), build().to_json());
    }

    #[test]
    fn summary_counts() {
        let report = build();
        let s = &report.diagnostics_summary;
        assert_eq!(s.stories, 2);
        assert_eq!(s.total, report.diagnostics.len());
        assert_eq!(s.errors + s.warnings + s.infos, s.total);
        assert_eq!(s.by_rule[&Rule::ParseError], 1);
        assert_eq!(report.max_severity(), Some(Severity::Error));
    }

    #[test]
    fn text_lists_gaps_and_summary() {
        let text = build().to_text();
        assert!(text.contains("Theme coverage: 1/23 themes across 2 stories"));
        assert!(text.contains("AI Lifecycle: Representation, Diversity, and Inclusion"));
        assert!(text.contains("error[P0]"));
        assert!(text.trim_end().ends_with("info"));
    }
}
