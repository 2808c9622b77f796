//! Attribute lexicon and lexicon-based attribute inference.
//!
//! Matching is case-insensitive, anchored on word boundaries and tolerates a
//! trailing plural "s". There is no stemming: what the lexicon lists is what
//! matches.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::model::{normalize, title_case, AttributeTag};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LexiconEntry {
    #[serde(default = "protected_by_default")]
    pub protected: bool,
    pub terms: Vec<String>,
}

fn protected_by_default() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LexiconError {
    #[error("dimension `{0}` declares no terms")]
    NoTerms(String),
    #[error("dimension `{0}` contains an empty term")]
    EmptyTerm(String),
    #[error("dimension name must not be empty")]
    EmptyDimension,
    #[error("alias `{alias}` points at unknown dimension `{target}`")]
    DanglingAlias { alias: String, target: String },
}

/// Dimensions with their term lists, plus the label alias table used when
/// reading story annotations.
#[derive(Debug, Clone)]
pub struct AttributeLexicon {
    entries: BTreeMap<String, LexiconEntry>,
    /// lower-cased label -> canonical dimension
    aliases: BTreeMap<String, String>,
    matchers: Vec<(String, Regex)>,
}

impl PartialEq for AttributeLexicon {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && self.aliases == other.aliases
    }
}

impl Eq for AttributeLexicon {}

impl AttributeLexicon {
    pub fn new<D, A>(entries: D, aliases: A) -> Result<Self, LexiconError>
    where
        D: IntoIterator<Item = (String, LexiconEntry)>,
        A: IntoIterator<Item = (String, String)>,
    {
        AttributeLexicon::build(entries, aliases, None)
    }

    fn build<D, A>(
        entries: D,
        aliases: A,
        previous: Option<&AttributeLexicon>,
    ) -> Result<Self, LexiconError>
    where
        D: IntoIterator<Item = (String, LexiconEntry)>,
        A: IntoIterator<Item = (String, String)>,
    {
        let mut map = BTreeMap::new();
        for (name, entry) in entries {
            let name = title_case(&name);
            if name.is_empty() {
                return Err(LexiconError::EmptyDimension);
            }
            if entry.terms.is_empty() {
                return Err(LexiconError::NoTerms(name));
            }
            let terms: Vec<String> = entry.terms.iter().map(|t| normalize(t)).collect();
            if terms.iter().any(String::is_empty) {
                return Err(LexiconError::EmptyTerm(name));
            }
            map.insert(
                name,
                LexiconEntry {
                    protected: entry.protected,
                    terms,
                },
            );
        }

        let mut alias_map = BTreeMap::new();
        for (alias, target) in aliases {
            let target = title_case(&target);
            if !map.contains_key(&target) {
                return Err(LexiconError::DanglingAlias { alias, target });
            }
            alias_map.insert(normalize(&alias).to_lowercase(), target);
        }

        let matchers = map
            .iter()
            .map(|(name, entry)| {
                let reused = previous.and_then(|prev| {
                    let idx = prev.matchers.binary_search_by(|(n, _)| n.cmp(name)).ok()?;
                    (prev.entries.get(name)?.terms == entry.terms)
                        .then(|| prev.matchers[idx].1.clone())
                });
                (
                    name.clone(),
                    reused.unwrap_or_else(|| term_regex(&entry.terms)),
                )
            })
            .collect();

        Ok(AttributeLexicon {
            entries: map,
            aliases: alias_map,
            matchers,
        })
    }

    /// Returns a new lexicon where `entries` replace same-named dimensions
    /// (compared case-insensitively) and `aliases` are added to the alias table.
    pub fn with_overrides<D, A>(&self, entries: D, aliases: A) -> Result<Self, LexiconError>
    where
        D: IntoIterator<Item = (String, LexiconEntry)>,
        A: IntoIterator<Item = (String, String)>,
    {
        let mut merged = self.entries.clone();
        for (name, entry) in entries {
            merged.insert(title_case(&name), entry);
        }
        let mut merged_aliases: Vec<(String, String)> = self
            .aliases
            .iter()
            .map(|(a, t)| (a.clone(), t.clone()))
            .collect();
        merged_aliases.extend(aliases);
        AttributeLexicon::build(merged, merged_aliases, Some(self))
    }

    pub fn entries(&self) -> &BTreeMap<String, LexiconEntry> {
        &self.entries
    }

    pub fn aliases(&self) -> &BTreeMap<String, String> {
        &self.aliases
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, dimension: &str) -> Option<&LexiconEntry> {
        self.entries.get(&title_case(dimension))
    }

    pub fn dimensions(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Dimensions flagged `protected`, in name order.
    pub fn protected_dimensions(&self) -> Vec<String> {
        self.entries
            .iter()
            .filter(|(_, e)| e.protected)
            .map(|(name, _)| name.clone())
            .collect()
    }

    /// Maps an annotation label to its canonical dimension, via the alias table
    /// first and then a case-insensitive dimension lookup.
    pub fn canonicalize(&self, label: &str) -> Option<String> {
        let key = normalize(label).to_lowercase();
        if let Some(target) = self.aliases.get(&key) {
            return Some(target.clone());
        }
        let name = title_case(label);
        self.entries.contains_key(&name).then_some(name)
    }

    fn matchers(&self) -> &[(String, Regex)] {
        &self.matchers
    }
}

impl Default for AttributeLexicon {
    fn default() -> Self {
        default_lexicon()
    }
}

fn term_regex(terms: &[String]) -> Regex {
    let mut sorted: Vec<&String> = terms.iter().collect();
    // Longest first so that "visual impairment" wins over "impairment" at the same offset.
    sorted.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let alternatives: Vec<String> = sorted
        .into_iter()
        .map(|term| {
            let body = term
                .split(' ')
                .map(regex::escape)
                .collect::<Vec<_>>()
                .join(r"\s+");
            let lead = if term.chars().next().is_some_and(is_word_char) {
                r"\b"
            } else {
                ""
            };
            let tail = if term.chars().last().is_some_and(is_word_char) {
                r"s?\b"
            } else {
                ""
            };
            format!("{lead}{body}{tail}")
        })
        .collect();
    Regex::new(&format!("(?i)(?:{})", alternatives.join("|")))
        .expect("escaped terms form a valid pattern")
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// One inferred tag per dimension whose terms occur in `phrase`, ordered by
/// dimension name. The tag value is the matched text.
pub fn infer_attributes(phrase: &str, lexicon: &AttributeLexicon) -> Vec<AttributeTag> {
    lexicon
        .matchers()
        .iter()
        .filter_map(|(dimension, re)| {
            re.find(phrase)
                .map(|m| AttributeTag::inferred(dimension.clone(), m.as_str()))
        })
        .collect()
}

const DEFAULT_TERMS: &[(&str, &[&str])] = &[
    ("Accent", &["accent", "accented", "dialect", "non-native"]),
    (
        "Age",
        &[
            "age",
            "elderly",
            "older",
            "senior",
            "young",
            "youth",
            "teenager",
            "teen",
            "child",
            "children",
            "years old",
            "aged",
            "middle-aged",
            "retiree",
            "retired",
        ],
    ),
    (
        "Birth",
        &[
            "birth",
            "place of birth",
            "birthplace",
            "born abroad",
            "born out of wedlock",
        ],
    ),
    (
        "Color",
        &[
            "colour",
            "skin tone",
            "skin colour",
            "skin color",
            "complexion",
            "dark-skinned",
            "fair-skinned",
        ],
    ),
    (
        "Culture",
        &[
            "culture",
            "cultural",
            "culturally",
            "traditional medicine",
            "customs",
            "tradition",
        ],
    ),
    (
        "Disability",
        &[
            "disability",
            "disabled",
            "visual impairment",
            "visually impaired",
            "blind",
            "low vision",
            "hearing impairment",
            "hearing impaired",
            "deaf",
            "speech disability",
            "speech impairment",
            "wheelchair",
            "wheelchair user",
            "mobility impairment",
            "impairment",
            "cognitive disability",
            "dyslexia",
            "dyslexic",
        ],
    ),
    (
        "Environment",
        &[
            "environment",
            "noisy",
            "noise",
            "loud",
            "rural",
            "remote area",
            "outdoors",
            "low light",
            "poor lighting",
        ],
    ),
    (
        "Ethnicity",
        &[
            "ethnicity",
            "ethnic",
            "asian",
            "persian",
            "african descent",
            "hispanic",
            "latino",
            "latina",
            "indigenous",
            "aboriginal",
            "sri lankan",
        ],
    ),
    (
        "Gender",
        &[
            "gender", "female", "male", "woman", "women", "lady", "ladies", "man", "men", "girl",
            "boy",
        ],
    ),
    (
        "Gender Identity",
        &[
            "gender identity",
            "non-binary",
            "nonbinary",
            "transgender",
            "trans",
            "genderqueer",
            "gender-fluid",
            "gender fluid",
            "cisgender",
        ],
    ),
    (
        "Health Condition",
        &[
            "health condition",
            "medical condition",
            "covid",
            "covid positive",
            "stammer",
            "stutter",
            "slow speech",
            "chronic illness",
            "illness",
            "diabetes",
            "diabetic",
            "speech disability",
        ],
    ),
    (
        "Language",
        &[
            "language",
            "non-native",
            "native speaker",
            "english-speaking",
            "bilingual",
            "multilingual",
            "non-english",
        ],
    ),
    (
        "Lifestyle",
        &[
            "lifestyle",
            "smoker",
            "smokes",
            "smoking",
            "vegan",
            "vegetarian",
            "night shift",
            "shift worker",
        ],
    ),
    (
        "National Origin",
        &[
            "nationality",
            "national origin",
            "immigrant",
            "migrant",
            "refugee",
            "foreign-born",
            "foreign national",
        ],
    ),
    (
        "Occupation",
        &[
            "occupation",
            "profession",
            "developer",
            "doctor",
            "nurse",
            "physician",
            "surgeon",
            "clinician",
            "health professional",
            "healthcare professional",
            "health worker",
            "health care manager",
            "manager",
            "ceo",
            "delivery person",
            "fire brigade",
            "firefighter",
            "security team",
        ],
    ),
    (
        "Parenthood",
        &[
            "parent",
            "parenthood",
            "mom",
            "mother",
            "father",
            "dad",
            "baby",
            "childcare",
            "single parent",
            "pregnant",
        ],
    ),
    (
        "Personality Trait",
        &[
            "personality",
            "soft spoken",
            "soft-spoken",
            "shy",
            "introvert",
            "introverted",
            "extrovert",
            "slow speech",
        ],
    ),
    (
        "Physical Appearance",
        &[
            "physical appearance",
            "glasses",
            "tattoo",
            "tattooed",
            "beard",
            "facial hair",
            "makeup",
            "half-burnt",
            "burnt face",
            "burned",
            "scar",
            "scarred",
            "facial surgery",
            "headgear",
            "birthmark",
        ],
    ),
    (
        "Property",
        &[
            "property",
            "homeless",
            "low-income",
            "low income",
            "wealthy",
            "unbanked",
        ],
    ),
    (
        "Race",
        &[
            "race",
            "racial",
            "asian",
            "african",
            "african descent",
            "black",
            "white",
            "caucasian",
            "person of colour",
            "person of color",
        ],
    ),
    (
        "Religion",
        &[
            "religion",
            "religious",
            "faith",
            "muslim",
            "christian",
            "jewish",
            "hindu",
            "buddhist",
            "sikh",
            "hijab",
            "niqab",
            "turban",
            "headscarf",
            "kippah",
        ],
    ),
    ("Sex", &["sex", "intersex", "biological sex"]),
    (
        "Social Origin",
        &[
            "social origin",
            "social background",
            "working-class",
            "working class",
            "caste",
            "first-generation",
        ],
    ),
];

const DEFAULT_ALIASES: &[(&str, &str)] = &[
    ("Profession", "Occupation"),
    ("Sex", "Sex"),
    ("Health condition", "Health Condition"),
    ("Colour", "Color"),
    ("Personality", "Personality Trait"),
];

/// The built-in lexicon. Every dimension is protected; projects narrow or
/// widen this through their config.
pub fn default_lexicon() -> AttributeLexicon {
    static DEFAULT: OnceLock<AttributeLexicon> = OnceLock::new();
    DEFAULT
        .get_or_init(|| {
            let entries = DEFAULT_TERMS.iter().map(|(name, terms)| {
                (
                    name.to_string(),
                    LexiconEntry {
                        protected: true,
                        terms: terms.iter().map(|t| t.to_string()).collect(),
                    },
                )
            });
            let aliases = DEFAULT_ALIASES
                .iter()
                .map(|(a, t)| (a.to_string(), t.to_string()));
            AttributeLexicon::new(entries, aliases).expect("built-in lexicon is well formed")
        })
        .clone()
}
