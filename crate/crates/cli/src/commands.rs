use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use dilint_core::config::starter_config_json;
use dilint_core::corpus;
use dilint_core::taxonomy::themes;
use dilint_core::{parse_corpus_str, Config, LintReport, ParseOutcome};
use rayon::prelude::*;

use crate::exit::ExitStatus;

pub const CONFIG_FILE: &str = "dilint.json";
pub const EXAMPLE_FILE: &str = "example.distories";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Parses, lints and analyzes `paths`. Errors returned here are usage/config/I-O
/// failures; lint findings are reflected in the returned status.
pub fn lint(
    paths: &[PathBuf],
    config_path: Option<&Path>,
    format: Format,
    out: &mut dyn Write,
) -> Result<ExitStatus> {
    let config = match config_path {
        Some(path) => Config::from_path(path)?,
        None => Config::default(),
    };

    let texts: Vec<(String, String)> = paths
        .par_iter()
        .map(|path| {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            Ok((path.display().to_string(), text))
        })
        .collect::<Result<_>>()?;

    let parsed: Vec<ParseOutcome> = texts
        .par_iter()
        .map(|(name, text)| parse_corpus_str(text, name, &config.lexicon))
        .collect();
    let mut outcome = ParseOutcome::default();
    for part in parsed {
        outcome.extend(part);
    }

    let report = LintReport::build(&outcome, &config);
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    out.write_all(rendered.as_bytes())?;
    Ok(ExitStatus::from_max_severity(report.max_severity()))
}

pub fn themes_listing() -> String {
    themes()
        .map(|t| format!("{:>2}  {:<10}  {}\n", t.id, t.pillar.name(), t.title))
        .collect()
}

fn example_stories() -> String {
    let lexicon = dilint_core::default_lexicon();
    let frass = parse_corpus_str(corpus::FRASS_HUMAN, "frass", &lexicon);
    let vrima = parse_corpus_str(corpus::VRIMA_GPT4, "vrima", &lexicon);
    format!(
        "# Example D&I user stories, one per blank-line separated block.\n\
         # As a <role>, I want <role | process | artifact> to <behaviour> so that <rationale>. [Attributes, Theme n]\n\n\
         {}\n\n{}\n",
        frass.stories[0].raw_text.trim(),
        vrima.stories[3].raw_text.trim()
    )
}

/// Writes a starter config and example story file into `dir`.
pub fn init(dir: &Path, force: bool, out: &mut dyn Write) -> Result<ExitStatus> {
    let config_path = dir.join(CONFIG_FILE);
    if config_path.exists() && !force {
        bail!(
            "{} already exists (use --force to overwrite)",
            config_path.display()
        );
    }
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    fs::write(&config_path, starter_config_json())
        .with_context(|| format!("cannot write {}", config_path.display()))?;
    let example_path = dir.join(EXAMPLE_FILE);
    fs::write(&example_path, example_stories())
        .with_context(|| format!("cannot write {}", example_path.display()))?;
    writeln!(out, "created {}", config_path.display())?;
    writeln!(out, "created {}", example_path.display())?;
    Ok(ExitStatus::CLEAN)
}
