//! The bundled golden corpus: focus-group and GPT-4 stories for two case-study
//! systems, FRASS (facial recognition attendance) and VRIMA (voice medical
//! assistant), plus a scope config for each system.

pub const FRASS_HUMAN: &str = include_str!("../corpus/frass_human.distories");
pub const FRASS_GPT4: &str = include_str!("../corpus/frass_gpt4.distories");
pub const VRIMA_HUMAN: &str = include_str!("../corpus/vrima_human.distories");
pub const VRIMA_GPT4: &str = include_str!("../corpus/vrima_gpt4.distories");

pub const FRASS_CONFIG: &str = include_str!("../corpus/frass.json");
pub const VRIMA_CONFIG: &str = include_str!("../corpus/vrima.json");

/// `(file name, contents)` for every bundled story file.
pub const GOLDEN: [(&str, &str); 4] = [
    ("frass_human.distories", FRASS_HUMAN),
    ("frass_gpt4.distories", FRASS_GPT4),
    ("vrima_human.distories", VRIMA_HUMAN),
    ("vrima_gpt4.distories", VRIMA_GPT4),
];
