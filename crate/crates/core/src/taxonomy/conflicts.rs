//! Theme pairs whose simultaneous pursuit calls for trade-off analysis.

use serde::Serialize;

use crate::model::{ThemeId, ThemeRangeError};

/// An unordered pair of distinct themes, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "[u8; 2]")]
pub struct ConflictPair {
    low: ThemeId,
    high: ThemeId,
}

impl ConflictPair {
    pub fn new(a: ThemeId, b: ThemeId) -> Result<Self, ConflictRegistryError> {
        if a == b {
            return Err(ConflictRegistryError::SelfPair(a.get()));
        }
        Ok(ConflictPair {
            low: a.min(b),
            high: a.max(b),
        })
    }

    pub fn low(self) -> ThemeId {
        self.low
    }

    pub fn high(self) -> ThemeId {
        self.high
    }

    pub fn as_array(self) -> [u8; 2] {
        [self.low.get(), self.high.get()]
    }
}

impl From<ConflictPair> for [u8; 2] {
    fn from(pair: ConflictPair) -> Self {
        pair.as_array()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConflictRegistryError {
    #[error("theme {0} cannot conflict with itself")]
    SelfPair(u8),
    #[error(transparent)]
    Range(#[from] ThemeRangeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictRegistry {
    pairs: Vec<(ConflictPair, String)>,
}

const DEFAULT_PAIRS: [(u8, u8, &str); 3] = [
    (
        2,
        3,
        "broad stakeholder engagement vs. managing the conflicting viewpoints it brings",
    ),
    (
        8,
        9,
        "data transparency and explainability vs. data security and privacy",
    ),
    (
        17,
        20,
        "inclusive design breadth vs. system usability and accessibility",
    ),
];

impl ConflictRegistry {
    /// Builds a registry; duplicate pairs (in either order) are kept once, and
    /// pairs are held in ascending order.
    pub fn new(pairs: impl IntoIterator<Item = (ConflictPair, String)>) -> Self {
        let mut pairs: Vec<(ConflictPair, String)> = pairs.into_iter().collect();
        pairs.sort_by_key(|(pair, _)| *pair);
        pairs.dedup_by_key(|(pair, _)| *pair);
        ConflictRegistry { pairs }
    }

    /// Builds a registry from raw id pairs. Pairs matching a built-in pair keep
    /// the built-in rationale.
    pub fn from_id_pairs(raw: &[[i64; 2]]) -> Result<Self, ConflictRegistryError> {
        let defaults = ConflictRegistry::default();
        let mut pairs = Vec::with_capacity(raw.len());
        for [a, b] in raw {
            let pair = ConflictPair::new(ThemeId::new(*a)?, ThemeId::new(*b)?)?;
            let rationale = defaults
                .rationale(pair)
                .unwrap_or("project-declared conflict")
                .to_string();
            pairs.push((pair, rationale));
        }
        Ok(ConflictRegistry::new(pairs))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ConflictPair, &str)> {
        self.pairs.iter().map(|(p, r)| (*p, r.as_str()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: ThemeId, b: ThemeId) -> bool {
        ConflictPair::new(a, b).is_ok_and(|pair| self.rationale(pair).is_some())
    }

    pub fn rationale(&self, pair: ConflictPair) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(p, _)| *p == pair)
            .map(|(_, r)| r.as_str())
    }
}

impl Default for ConflictRegistry {
    fn default() -> Self {
        ConflictRegistry::new(DEFAULT_PAIRS.iter().map(|&(a, b, why)| {
            let pair = ConflictPair::new(
                ThemeId::new(i64::from(a)).unwrap(),
                ThemeId::new(i64::from(b)).unwrap(),
            )
            .unwrap();
            (pair, why.to_string())
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(id: i64) -> ThemeId {
        ThemeId::new(id).unwrap()
    }

    #[test]
    fn default_pairs() {
        let reg = ConflictRegistry::default();
        let arrays: Vec<[u8; 2]> = reg.pairs().map(|(p, _)| p.as_array()).collect();
        assert_eq!(arrays, vec![[2, 3], [8, 9], [17, 20]]);
        assert!(reg.contains(t(9), t(8)));
        assert!(reg.contains(t(20), t(17)));
        assert!(!reg.contains(t(1), t(2)));
    }

    #[test]
    fn symmetry_over_all_pairs() {
        let reg = ConflictRegistry::default();
        for a in ThemeId::all() {
            for b in ThemeId::all() {
                assert_eq!(reg.contains(a, b), reg.contains(b, a));
            }
        }
    }

    #[test]
    fn no_self_pairs() {
        assert_eq!(
            ConflictPair::new(t(4), t(4)),
            Err(ConflictRegistryError::SelfPair(4))
        );
        assert!(ConflictRegistry::from_id_pairs(&[[5, 5]]).is_err());
        assert!(ConflictRegistry::from_id_pairs(&[[5, 24]]).is_err());
    }

    #[test]
    fn from_ids_keeps_builtin_rationale_and_dedups() {
        let reg = ConflictRegistry::from_id_pairs(&[[9, 8], [8, 9], [1, 4]]).unwrap();
        assert_eq!(reg.len(), 2);
        let p = ConflictPair::new(t(8), t(9)).unwrap();
        assert_eq!(reg.rationale(p), ConflictRegistry::default().rationale(p));
        assert_eq!(
            reg.rationale(ConflictPair::new(t(4), t(1)).unwrap()),
            Some("project-declared conflict")
        );
    }
}
