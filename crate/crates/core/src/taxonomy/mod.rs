//! Built-in theme registry, attribute lexicon and conflict registry.

mod conflicts;
mod lexicon;
mod themes;

pub use conflicts::{ConflictPair, ConflictRegistry, ConflictRegistryError};
pub use lexicon::{
    default_lexicon, infer_attributes, AttributeLexicon, LexiconEntry, LexiconError,
};
pub use themes::{pillar_of, theme_by_id, themes, verify_registry, PILLAR_TOTALS};
