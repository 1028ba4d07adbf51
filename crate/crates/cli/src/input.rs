//! Reading complexes and resolving vertex names.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use pathcat_core::json::{parse_complex, PosetMonoJson};
use pathcat_core::{Complex, CubicalComplex, Error, PosetMono, SimplicialComplex, Vertex, VertexSet};
use serde_json::{json, Value};

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

pub fn load_complex(path: &str) -> Result<Complex> {
    let text = read_text(path)?;
    parse_complex(&text).with_context(|| format!("{path} is not a valid complex"))
}

pub fn load_alpha(path: &Path) -> Result<PosetMono> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let raw: PosetMonoJson =
        serde_json::from_str(&text).with_context(|| format!("{} is not a poset map", path.display()))?;
    Ok(raw.into_mono()?)
}

/// Splits on commas outside `{}` / `[]`.
pub fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0i32, String::new());
    for c in text.chars() {
        match c {
            '{' | '[' => depth += 1,
            '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_set(text: &str, ambient: usize) -> Result<VertexSet> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .or_else(|| text.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
        .ok_or_else(|| anyhow!("expected a set like {{1,2}}, got {text:?}"))?;
    let elements = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| anyhow!("bad set element {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::try_from_elements(&elements, ambient)?)
}

pub fn cubical_vertex(text: &str, k: &CubicalComplex) -> Result<VertexSet> {
    let vs = k.vertices();
    let f = match text.trim() {
        "init" => *vs.first().ok_or_else(|| anyhow!("the complex is empty"))?,
        "term" => *vs.last().ok_or_else(|| anyhow!("the complex is empty"))?,
        t if t.starts_with('{') || t.starts_with('[') => parse_set(t, k.ambient())?,
        t => {
            let i: usize = t.parse().map_err(|_| anyhow!("cannot read vertex {t:?}"))?;
            *vs.get(i).ok_or_else(|| Error::UnknownVertex(t.to_string()))?
        }
    };
    if !k.contains_vertex(f) {
        bail!(Error::UnknownVertex(f.to_string()));
    }
    Ok(f)
}

pub fn simplicial_vertex(text: &str, l: &SimplicialComplex) -> Result<Vertex> {
    let vs = l.vertices();
    let v = match text.trim() {
        "init" => *vs.first().ok_or_else(|| anyhow!("the complex is empty"))?,
        "term" => *vs.last().ok_or_else(|| anyhow!("the complex is empty"))?,
        t => t.parse().map_err(|_| anyhow!("cannot read vertex {t:?}"))?,
    };
    if !l.has_vertex(v) {
        bail!(Error::UnknownVertex(v.to_string()));
    }
    Ok(v)
}

pub fn cubical_list(text: &str, k: &CubicalComplex) -> Result<BTreeSet<VertexSet>> {
    split_list(text).iter().map(|t| cubical_vertex(t, k)).collect()
}

pub fn set_name(f: VertexSet) -> Value {
    json!(f)
}
