//! Plain-text and JSON poset files.
//!
//! Text:
//! ```text
//! # comment
//! elements a b c
//! cover a b
//! cover b c
//! ```
//! JSON: `{"elements":["a","b","c"],"covers":[["a","b"],["b","c"]]}`.

use serde::{Deserialize, Serialize};

use super::{Poset, PosetError};

#[derive(Debug, Serialize, Deserialize)]
struct PosetJson {
    covers: Vec<(String, String)>,
    elements: Vec<String>,
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_poset(text: &str) -> Result<Poset, PosetError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn parse_text(text: &str) -> Result<Poset, PosetError> {
    let mut elements: Option<Vec<String>> = None;
    let mut covers = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| PosetError::Parse {
            line: ln + 1,
            message,
        };
        let mut words = line.split_whitespace();
        match words.next() {
            Some("elements") => {
                if elements.is_some() {
                    return Err(err("repeated elements line".into()));
                }
                elements = Some(words.map(str::to_string).collect());
            }
            Some("cover") => {
                let v: Vec<&str> = words.collect();
                let [x, y] = v.as_slice() else {
                    return Err(err(format!("cover needs two labels, got {}", v.len())));
                };
                if elements.is_none() {
                    return Err(err("cover before elements line".into()));
                }
                covers.push((ln + 1, x.to_string(), y.to_string()));
            }
            Some(other) => return Err(err(format!("unknown directive {other:?}"))),
            None => unreachable!(),
        }
    }
    let elements = elements.ok_or(PosetError::Parse {
        line: 1,
        message: "missing elements line".into(),
    })?;
    for (ln, x, y) in &covers {
        for l in [x, y] {
            if !elements.contains(l) {
                return Err(PosetError::Parse {
                    line: *ln,
                    message: format!("unknown element {l:?}"),
                });
            }
        }
    }
    let pairs: Vec<(String, String)> = covers.into_iter().map(|(_, x, y)| (x, y)).collect();
    Poset::from_relations(&elements, &pairs)
}

pub fn parse_json(text: &str) -> Result<Poset, PosetError> {
    let parsed: PosetJson = serde_json::from_str(text).map_err(|e| PosetError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Poset::from_relations(&parsed.elements, &parsed.covers)
}

fn sorted_cover_labels(p: &Poset) -> Vec<(String, String)> {
    let mut covers: Vec<(String, String)> = p
        .covers()
        .iter()
        .map(|&(x, y)| (p.label(x).to_string(), p.label(y).to_string()))
        .collect();
    covers.sort();
    covers
}

/// Canonical JSON: keys sorted, covers sorted lexicographically by label.
pub fn to_json(p: &Poset) -> String {
    serde_json::to_string(&to_json_value(p)).expect("serialisable")
}

pub fn to_json_value(p: &Poset) -> serde_json::Value {
    serde_json::to_value(PosetJson {
        covers: sorted_cover_labels(p),
        elements: p.labels().to_vec(),
    })
    .expect("serialisable")
}

pub fn to_text(p: &Poset) -> String {
    let mut s = format!("elements {}\n", p.labels().join(" "));
    for (x, y) in sorted_cover_labels(p) {
        s.push_str(&format!("cover {x} {y}\n"));
    }
    s
}
