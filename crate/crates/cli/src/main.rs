//! `dilint`: lint diversity & inclusion user stories.

mod commands;
mod exit;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand};

use crate::commands::Format;
use crate::exit::ExitStatus;

#[derive(Parser)]
#[command(
    name = "dilint",
    version,
    about = "Lint diversity & inclusion user stories for AI systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, validate and analyze story files.
    Lint {
        #[arg(required = true, value_name = "FILES")]
        files: Vec<PathBuf>,
        /// Project config (JSON).
        #[arg(long, env = "DILINT_CONFIG", value_name = "PATH")]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the 23 themes with their pillar.
    Themes,
    /// Write a starter config and example story file into DIR.
    Init {
        dir: PathBuf,
        /// Overwrite an existing config.
        #[arg(long)]
        force: bool,
    },
}

fn main() {
    if let Err(msg) = dilint_core::taxonomy::verify_registry() {
        eprintln!("dilint: internal error: {msg}");
        process::exit(ExitStatus::FAILURE.code);
    }

    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Lint {
            files,
            config,
            format,
        } => commands::lint(&files, config.as_deref(), format, &mut out),
        Command::Themes => out
            .write_all(commands::themes_listing().as_bytes())
            .map(|_| ExitStatus::CLEAN)
            .map_err(Into::into),
        Command::Init { dir, force } => commands::init(&dir, force, &mut out),
    };
    let status = match result {
        Ok(status) => status,
        Err(err) => {
            eprintln!("dilint: {err:#}");
            ExitStatus::FAILURE
        }
    };
    let _ = out.flush();
    process::exit(status.code);
}
