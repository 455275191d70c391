//! Plain-text endomorphism files.
//!
//! ```text
//! # comments and blank lines are ignored
//! generators: x, y
//! x -> x
//! y -> y + x^2
//! ```
//!
//! The `generators:` line comes first; then every generator gets exactly one
//! `name -> polynomial` line. Without that line the generators are the
//! left-hand names in order of appearance. [`Endomorphism`]'s `Display` writes
//! this format.

use thiserror::Error;

use super::Endomorphism;
use crate::freealg::{parse_poly, GeneratorSet, NcPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct EndoFileError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> EndoFileError {
    EndoFileError { line, message: message.into() }
}

/// Generators named by the mapping lines, for files without a header.
fn implied_generators(text: &str) -> Result<Option<GeneratorSet>, EndoFileError> {
    let mut names: Vec<&str> = Vec::new();
    let mut first = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with("generators:") {
            return Ok(None);
        }
        if let Some((name, _)) = line.split_once("->") {
            first = if names.is_empty() { idx + 1 } else { first };
            let name = name.trim();
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    if names.is_empty() {
        return Ok(None);
    }
    GeneratorSet::new(names).map(Some).map_err(|e| err(first, e.to_string()))
}

pub fn parse_endo_file(text: &str) -> Result<Endomorphism, EndoFileError> {
    let mut gens = implied_generators(text)?;
    let mut images: Vec<Option<NcPoly>> = gens.as_ref().map_or_else(Vec::new, |g| vec![None; g.len()]);
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("generators:") {
            if gens.is_some() {
                return Err(err(line_no, "duplicate generators line"));
            }
            let names: Vec<&str> = rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let set = GeneratorSet::new(names).map_err(|e| err(line_no, e.to_string()))?;
            images = vec![None; set.len()];
            gens = Some(set);
            continue;
        }
        let Some(set) = gens.as_ref() else {
            return Err(err(line_no, "expected 'generators:' before any mapping"));
        };
        let Some((name, poly)) = line.split_once("->") else {
            return Err(err(line_no, "expected 'name -> polynomial'"));
        };
        let name = name.trim();
        let Some(i) = set.index_of(name) else {
            return Err(err(line_no, format!("unknown generator '{name}'")));
        };
        if images[i].is_some() {
            return Err(err(line_no, format!("generator '{name}' mapped twice")));
        }
        let f = parse_poly(poly, set).map_err(|e| err(line_no, e.to_string()))?;
        images[i] = Some(f);
    }
    let gens = gens.ok_or_else(|| err(last_line.max(1), "missing 'generators:' line"))?;
    let mut out = Vec::with_capacity(gens.len());
    for (i, img) in images.into_iter().enumerate() {
        out.push(img.ok_or_else(|| err(last_line.max(1), format!("no image for generator '{}'", gens.name(i))))?);
    }
    Endomorphism::new(&gens, out).map_err(|e| err(last_line.max(1), e.to_string()))
}
