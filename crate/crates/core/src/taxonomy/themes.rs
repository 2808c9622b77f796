//! The 23 themes, grouped into five pillars.
//!
//! Theme 20 ("AI System Usability: Accessibility Assessment") is filed under
//! Governance, as in the published table, even though it is often discussed
//! together with the System themes.

use crate::model::{Pillar, Theme, ThemeId, ThemeRangeError, THEME_COUNT};

const TABLE: [(Pillar, &str); THEME_COUNT as usize] = [
    (
        Pillar::Humans,
        "AI Lifecycle: Representation, Diversity, and Inclusion",
    ),
    (
        Pillar::Humans,
        "AI Stakeholder: Engagement and Collaboration",
    ),
    (
        Pillar::Humans,
        "AI Context: Awareness and Conflict Management",
    ),
    (Pillar::Humans, "AI Foundations: Socio-technical Approach"),
    (
        Pillar::Humans,
        "AI Education: Inclusive Infrastructure and Training",
    ),
    (
        Pillar::Humans,
        "AI Opportunities: Equitable Practices and Challenges",
    ),
    (Pillar::Humans, "AI Challenges: Inclusion Aspects"),
    (Pillar::Data, "AI Data: Transparency and Explainability"),
    (
        Pillar::Data,
        "AI Data Security: Privacy, Sovereignty, and Infrastructure",
    ),
    (Pillar::Data, "AI Data Modelling: Selection and Development"),
    (
        Pillar::Data,
        "AI Data Management: Documentation and Examination",
    ),
    (Pillar::Data, "AI Data Analysis: Bias and Inequity"),
    (Pillar::Data, "AI Data Traits: Demographic Considerations"),
    (Pillar::Process, "AI Analysis: Bias and Marginalization"),
    (
        Pillar::Process,
        "AI Performance: Evaluation, Monitoring, and Refinement",
    ),
    (Pillar::Process, "AI Design: Trade-offs Considerations"),
    (
        Pillar::System,
        "AI System Design: Inclusive Design and Development",
    ),
    (
        Pillar::System,
        "AI Awareness: Bias Recognition and Understanding",
    ),
    (
        Pillar::System,
        "AI Tools Evaluation: Bias and Representation",
    ),
    (
        Pillar::Governance,
        "AI System Usability: Accessibility Assessment",
    ),
    (Pillar::Governance, "AI Strategy: Policy and Governance"),
    (
        Pillar::Governance,
        "AI Safety Protocols: Risk Management and Standards",
    ),
    (
        Pillar::Governance,
        "AI Ethical Directives: Equity, Diversity, and Inclusion Principles",
    ),
];

/// Number of themes per pillar, in [`Pillar::ALL`] order.
pub const PILLAR_TOTALS: [(Pillar, usize); 5] = [
    (Pillar::Humans, 7),
    (Pillar::Data, 6),
    (Pillar::Process, 3),
    (Pillar::System, 3),
    (Pillar::Governance, 4),
];

pub fn theme_by_id(id: i64) -> Result<Theme, ThemeRangeError> {
    let id = ThemeId::new(id)?;
    let (pillar, title) = TABLE[usize::from(id.get()) - 1];
    Ok(Theme { id, pillar, title })
}

pub fn pillar_of(id: i64) -> Result<Pillar, ThemeRangeError> {
    theme_by_id(id).map(|theme| theme.pillar)
}

/// All themes in table order.
pub fn themes() -> impl Iterator<Item = Theme> {
    ThemeId::all().map(|id| {
        let (pillar, title) = TABLE[usize::from(id.get()) - 1];
        Theme { id, pillar, title }
    })
}

/// Checks the registry against the fixed pillar totals.
pub fn verify_registry() -> Result<(), String> {
    for (pillar, expected) in PILLAR_TOTALS {
        let actual = TABLE.iter().filter(|(p, _)| *p == pillar).count();
        if actual != expected {
            return Err(format!(
                "pillar {pillar} has {actual} themes, expected {expected}"
            ));
        }
    }
    // Pillars must form contiguous id blocks.
    if TABLE.windows(2).any(|w| w[0].0 > w[1].0) {
        return Err("theme registry pillars are not contiguous".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_and_last_theme() {
        let first = theme_by_id(1).unwrap();
        assert_eq!(first.pillar, Pillar::Humans);
        assert_eq!(
            first.title,
            "AI Lifecycle: Representation, Diversity, and Inclusion"
        );
        let last = theme_by_id(23).unwrap();
        assert_eq!(last.pillar, Pillar::Governance);
        assert_eq!(
            last.title,
            "AI Ethical Directives: Equity, Diversity, and Inclusion Principles"
        );
    }

    #[test]
    fn out_of_range_ids() {
        assert_eq!(theme_by_id(24).unwrap_err(), ThemeRangeError(24));
        assert_eq!(theme_by_id(0).unwrap_err(), ThemeRangeError(0));
        assert!(pillar_of(-1).is_err());
    }

    #[test]
    fn pillar_examples() {
        assert_eq!(pillar_of(13).unwrap(), Pillar::Data);
        assert_eq!(pillar_of(16).unwrap(), Pillar::Process);
        assert_eq!(pillar_of(20).unwrap(), Pillar::Governance);
    }

    #[test]
    fn partition_matches_ranges() {
        for theme in themes() {
            let expected = match theme.id.get() {
                1..=7 => Pillar::Humans,
                8..=13 => Pillar::Data,
                14..=16 => Pillar::Process,
                17..=19 => Pillar::System,
                _ => Pillar::Governance,
            };
            assert_eq!(theme.pillar, expected, "theme {}", theme.id);
            assert_eq!(pillar_of(i64::from(theme.id.get())).unwrap(), theme.pillar);
        }
        verify_registry().unwrap();
        assert_eq!(PILLAR_TOTALS.iter().map(|(_, n)| n).sum::<usize>(), 23);
    }
}
