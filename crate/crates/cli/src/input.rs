use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use triplewise::profile_file::{parse_lenient, parse_profile_file};
use triplewise::{AlternativeSet, Profile, Triple};

/// Profile plus any diagnostics tolerated under `--keep-going`.
pub struct Loaded {
    pub profile: Profile,
    pub diagnostics: Vec<String>,
}

pub fn load(path: &Path, keep_going: bool) -> Result<Loaded> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    if !keep_going {
        let file = parse_profile_file(&text).with_context(|| path.display().to_string())?;
        return Ok(Loaded {
            profile: file.profile,
            diagnostics: Vec::new(),
        });
    }
    let (file, errors) = parse_lenient(&text);
    let diagnostics: Vec<String> = errors
        .iter()
        .map(|e| format!("{}: {e}", path.display()))
        .collect();
    match file {
        Some(f) => Ok(Loaded {
            profile: f.profile,
            diagnostics,
        }),
        None => match errors.into_iter().next() {
            Some(first) => Err(first).with_context(|| path.display().to_string()),
            None => bail!("{}: no ballots and no alternatives header", path.display()),
        },
    }
}

/// The `--triple a,b,c` selection, or every `i < j < k` triple.
pub fn triples(alts: &AlternativeSet, selection: Option<&str>) -> Result<Vec<Triple>> {
    match selection {
        Some(text) => {
            let names: Vec<&str> = text.split(',').map(str::trim).collect();
            let [x, y, z] = names[..] else {
                bail!("--triple expects three comma-separated alternatives, got `{text}`");
            };
            Ok(vec![alts.triple(x, y, z)?])
        }
        None => {
            if alts.len() < 3 {
                bail!(
                    "the profile has {} alternatives; at least three are needed",
                    alts.len()
                );
            }
            Ok(alts.triples())
        }
    }
}

/// Labels for commands that work on an abstract triple.
pub fn labels(selection: Option<&str>) -> Result<[String; 3]> {
    let text = selection.unwrap_or("x,y,z");
    let alts = AlternativeSet::from_names(text.split(',').map(str::trim))?;
    if alts.len() != 3 {
        bail!("--triple expects three comma-separated alternatives, got `{text}`");
    }
    Ok(alts.labels(Triple::first()))
}

pub fn profile_path(path: &Option<PathBuf>) -> Result<&Path> {
    path.as_deref()
        .context("this command needs --profile <path>")
}
