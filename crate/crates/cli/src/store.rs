//! Results directory: `results.jsonl` with one line per case, `summary.csv`
//! and the final `report.json`.

use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const RESULTS: &str = "results.jsonl";
pub const SUMMARY: &str = "summary.csv";
pub const REPORT: &str = "report.json";

/// Hex SHA-256 of a canonical case description.
pub fn case_hash(canonical: &str) -> String {
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

pub struct ResultStore {
    dir: PathBuf,
    file: File,
}

impl ResultStore {
    /// Opens `dir`, truncating earlier results unless `resume` is set.
    pub fn open(dir: &Path, resume: bool) -> Result<(ResultStore, BTreeMap<String, Value>)> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(RESULTS);
        let mut done = BTreeMap::new();
        let mut kept = String::new();
        if resume && path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for line in reader.lines() {
                let line = line?;
                // A torn last line is dropped and its case recomputed.
                let Ok(v) = serde_json::from_str::<Value>(&line) else {
                    continue;
                };
                if let Some(h) = v.get("hash").and_then(Value::as_str) {
                    done.insert(h.to_string(), v);
                    kept.push_str(&line);
                    kept.push('\n');
                }
            }
        }
        fs::write(&path, kept)?;
        let file = OpenOptions::new().append(true).open(&path)?;
        Ok((
            ResultStore {
                dir: dir.to_path_buf(),
                file,
            },
            done,
        ))
    }

    pub fn append(&mut self, records: &[Value]) -> Result<()> {
        for r in records {
            writeln!(self.file, "{}", serde_json::to_string(r)?)?;
        }
        self.file.flush()?;
        Ok(())
    }

    pub fn write_summary(&self, header: &str, rows: &[String]) -> Result<()> {
        let mut f = File::create(self.dir.join(SUMMARY))?;
        writeln!(f, "{header}")?;
        for r in rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

pub fn write_report(dir: &Path, report: &Value) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(REPORT), serde_json::to_string_pretty(report)? + "\n")?;
    Ok(())
}
