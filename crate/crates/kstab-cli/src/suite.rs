//! Runs single cases and whole suites.

use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::bundled::BUNDLED;
use crate::case::{CaseFile, LoadedCase};
use crate::error::CliError;
use crate::report::{Row, StabilityReport};
use crate::runner::{self, RunContext};

/// Name of the optional manifest listing a directory's case files.
pub const MANIFEST: &str = "suite.json";

pub fn run_loaded(loaded: &LoadedCase, ctx: RunContext) -> Result<Row, CliError> {
    let outcome = runner::run(loaded, ctx)?;
    Ok(Row::from_outcome(loaded, outcome))
}

/// Loads and runs one case file.
pub fn run_case(path: &Path, ctx: RunContext) -> Result<Row, CliError> {
    run_loaded(&CaseFile::load(path)?, ctx)
}

/// Where a suite's cases come from.
#[derive(Debug, Clone)]
pub enum Source {
    Bundled,
    Dir(PathBuf),
}

enum Entry {
    Text {
        name: &'static str,
        text: &'static str,
    },
    File(PathBuf),
}

impl Entry {
    fn name(&self) -> String {
        match self {
            Entry::Text { name, .. } => (*name).to_string(),
            Entry::File(p) => p.display().to_string(),
        }
    }

    fn load(&self) -> Result<LoadedCase, CliError> {
        match self {
            Entry::Text { name, text } => Ok(LoadedCase {
                case: CaseFile::parse(text, name)?,
                location: (*name).to_string(),
                base_dir: None,
            }),
            Entry::File(p) => CaseFile::load(p),
        }
    }
}

fn collect_json(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
    for e in std::fs::read_dir(dir)? {
        let p = e?.path();
        if p.is_dir() {
            if p.file_name().is_some_and(|n| n != "fixtures") {
                collect_json(&p, out)?;
            }
        } else if p.extension().is_some_and(|x| x == "json")
            && p.file_name().is_some_and(|n| n != MANIFEST)
        {
            out.push(p);
        }
    }
    Ok(())
}

fn entries(source: &Source) -> Result<Vec<Entry>, CliError> {
    match source {
        Source::Bundled => Ok(BUNDLED
            .iter()
            .map(|&(name, text)| Entry::Text { name, text })
            .collect()),
        Source::Dir(dir) => {
            let manifest = dir.join(MANIFEST);
            let io = |e: std::io::Error| CliError::FixtureMissing {
                location: dir.display().to_string(),
                name: e.to_string(),
            };
            if manifest.exists() {
                let text = std::fs::read_to_string(&manifest).map_err(io)?;
                let names: Vec<String> =
                    serde_json::from_str(&text).map_err(|e| CliError::Parse {
                        location: manifest.display().to_string(),
                        message: e.to_string(),
                    })?;
                Ok(names
                    .into_iter()
                    .map(|n| Entry::File(dir.join(n)))
                    .collect())
            } else {
                let mut files = Vec::new();
                collect_json(dir, &mut files).map_err(io)?;
                files.sort();
                Ok(files.into_iter().map(Entry::File).collect())
            }
        }
    }
}

/// Runs every case of `source` on `jobs` workers. Per-case failures become
/// error rows; only an unreadable manifest fails the whole suite.
pub fn run_suite(
    source: &Source,
    ctx: RunContext,
    jobs: usize,
) -> Result<StabilityReport, CliError> {
    let entries = entries(source)?;
    let work = || -> Vec<Row> {
        entries
            .par_iter()
            .map(|e| match e.load().and_then(|l| run_loaded(&l, ctx)) {
                Ok(row) => row,
                Err(err) => Row::from_error(e.name(), &err),
            })
            .collect()
    };
    let rows = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map(|pool| pool.install(work))
        .unwrap_or_else(|_| work());
    Ok(StabilityReport::new(ctx.seed, rows))
}
