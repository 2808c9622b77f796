//! Corpus-level analysis: theme and pillar coverage, attribute distribution
//! and conflict findings.
//!
//! Coverage and attribute counts are commutative-monoid folds, so they can be
//! computed over chunks in parallel and merged.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::model::{Pillar, Span, ThemeId, UserStory};
use crate::taxonomy::{pillar_of, ConflictPair, ConflictRegistry, PILLAR_TOTALS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PillarCoverage {
    pub covered: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub covered_themes: BTreeSet<ThemeId>,
    pub gaps: BTreeSet<ThemeId>,
    pub pillar_coverage: BTreeMap<Pillar, PillarCoverage>,
    pub story_count: usize,
}

/// Partial coverage state; merge is set union plus count addition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverageAccumulator {
    covered: BTreeSet<ThemeId>,
    stories: usize,
}

impl CoverageAccumulator {
    pub fn with_story(mut self, story: &UserStory) -> Self {
        self.covered.extend(story.themes.iter().copied());
        self.stories += 1;
        self
    }

    pub fn merge(mut self, other: CoverageAccumulator) -> Self {
        self.covered.extend(other.covered);
        self.stories += other.stories;
        self
    }

    pub fn finish(self) -> CoverageReport {
        let gaps = ThemeId::all()
            .filter(|id| !self.covered.contains(id))
            .collect();
        let pillar_coverage = PILLAR_TOTALS
            .iter()
            .map(|&(pillar, total)| {
                let covered = self
                    .covered
                    .iter()
                    .filter(|id| pillar_of(i64::from(id.get())) == Ok(pillar))
                    .count();
                (pillar, PillarCoverage { covered, total })
            })
            .collect();
        CoverageReport {
            covered_themes: self.covered,
            gaps,
            pillar_coverage,
            story_count: self.stories,
        }
    }
}

/// Themes covered by explicit tags; untagged stories contribute only to the count.
pub fn coverage_report(stories: &[UserStory]) -> CoverageReport {
    stories
        .iter()
        .fold(
            CoverageAccumulator::default(),
            CoverageAccumulator::with_story,
        )
        .finish()
}

/// Same result as [`coverage_report`], computed as a parallel fold.
pub fn coverage_report_parallel(stories: &[UserStory]) -> CoverageReport {
    stories
        .par_iter()
        .fold(
            CoverageAccumulator::default,
            CoverageAccumulator::with_story,
        )
        .reduce(CoverageAccumulator::default, CoverageAccumulator::merge)
        .finish()
}

/// Number of stories carrying each dimension (a story counts once per dimension).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AttributeDistribution {
    pub counts: BTreeMap<String, usize>,
}

impl AttributeDistribution {
    pub fn with_story(mut self, story: &UserStory) -> Self {
        let dims: BTreeSet<&str> = story
            .attributes
            .iter()
            .map(|t| t.dimension.as_str())
            .collect();
        for dim in dims {
            *self.counts.entry(dim.to_string()).or_default() += 1;
        }
        self
    }

    pub fn merge(mut self, other: AttributeDistribution) -> Self {
        for (dim, n) in other.counts {
            *self.counts.entry(dim).or_default() += n;
        }
        self
    }

    pub fn get(&self, dimension: &str) -> usize {
        self.counts.get(dimension).copied().unwrap_or(0)
    }
}

pub fn attribute_distribution(stories: &[UserStory]) -> AttributeDistribution {
    stories.iter().fold(
        AttributeDistribution::default(),
        AttributeDistribution::with_story,
    )
}

pub fn attribute_distribution_parallel(stories: &[UserStory]) -> AttributeDistribution {
    stories
        .par_iter()
        .fold(
            AttributeDistribution::default,
            AttributeDistribution::with_story,
        )
        .reduce(AttributeDistribution::default, AttributeDistribution::merge)
}

/// Both sides of a registered conflict pair are present in the corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConflictFinding {
    pub pair: ConflictPair,
    pub story_refs_a: Vec<Span>,
    pub story_refs_b: Vec<Span>,
    pub rationale: String,
}

/// One finding per registry pair whose two themes both occur, in ascending pair
/// order. `story_refs_a` lists stories tagged with the lower id.
pub fn conflict_findings(
    stories: &[UserStory],
    registry: &ConflictRegistry,
) -> Vec<ConflictFinding> {
    let refs = |id: ThemeId| -> Vec<Span> {
        stories
            .iter()
            .filter(|s| s.themes.contains(&id))
            .map(|s| s.span.clone())
            .collect()
    };
    registry
        .pairs()
        .filter_map(|(pair, rationale)| {
            let a = refs(pair.low());
            let b = refs(pair.high());
            (!a.is_empty() && !b.is_empty()).then(|| ConflictFinding {
                pair,
                story_refs_a: a,
                story_refs_b: b,
                rationale: rationale.to_string(),
            })
        })
        .collect()
}
