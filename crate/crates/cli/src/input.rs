//! Parsing of roots, weights and limits from flags.

use std::path::Path;

use anyhow::{bail, Context, Result};
use regwide::wideness::default_lambda_test_set;
use regwide::{Root, Weight};

use crate::RunArgs;

/// Default module dimension cap.
pub const DEFAULT_MAX_DIM: usize = 200;

/// `"[1,0];[1,1]"`; the empty string is the empty set.
pub fn parse_roots(text: &str, rank: usize) -> Result<Vec<Root>> {
    let text = text.trim();
    let items: Vec<Vec<i64>> = if text.starts_with("[[") || text == "[]" {
        serde_json::from_str(text).context("malformed JSON root list")?
    } else {
        text.split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| serde_json::from_str(s).with_context(|| format!("malformed root {s:?}")))
            .collect::<Result<_>>()?
    };
    items
        .into_iter()
        .map(|c| {
            if c.len() != rank {
                bail!("root {c:?} has {} coordinates, expected {rank}", c.len());
            }
            Ok(Root(c))
        })
        .collect()
}

pub fn read_roots_file(path: &Path, rank: usize) -> Result<Vec<Root>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_roots(&text, rank)
}

pub fn parse_weight(text: &str, rank: usize) -> Result<Weight> {
    let w: Weight = text.trim().parse()?;
    if w.rank() != rank {
        bail!("weight {text:?} has {} coordinates, expected {rank}", w.rank());
    }
    if !w.is_dominant() {
        return Err(regwide::Error::NotDominant(w.to_string()).into());
    }
    Ok(w)
}

/// `--lambda` values followed by `--lambda-set`, or the default test set.
pub fn lambdas(run: &RunArgs, rank: usize) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for l in &run.lambda {
        out.push(parse_weight(l, rank)?);
    }
    if let Some(set) = &run.lambda_set {
        for l in set.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            out.push(parse_weight(l, rank)?);
        }
    }
    if out.is_empty() {
        out = default_lambda_test_set(rank);
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|w| seen.insert(w.clone()));
    Ok(out)
}

/// `REGWIDE_MAX_DIM` if set, then `--max-dim`, then the default.
pub fn max_dim(run: &RunArgs) -> Result<usize> {
    match std::env::var("REGWIDE_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("REGWIDE_MAX_DIM={v:?} is not a positive integer")),
        Err(_) => Ok(run.max_dim.unwrap_or(DEFAULT_MAX_DIM)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_in_both_formats() {
        let a = parse_roots("[1,0]; [1,1]", 2).unwrap();
        let b = parse_roots("[[1,0],[1,1]]", 2).unwrap();
        assert_eq!(a, b);
        assert!(parse_roots("", 2).unwrap().is_empty());
        assert!(parse_roots("[]", 2).unwrap().is_empty());
        assert!(parse_roots("[1,0,0]", 2).is_err());
        assert!(parse_roots("[1,x]", 2).is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("1, 0", 2).unwrap(), Weight(vec![1, 0]));
        assert!(parse_weight("1", 2).is_err());
        assert!(parse_weight("-1,0", 2).is_err());
    }
}
