//! Quivers, their text format, and path enumeration.
//!
//! ```text
//! # the Kronecker quiver
//! vertices: a b
//! arrows:
//! x: a -> b
//! y: a -> b
//! ```

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path: a trivial path at `start` when `arrows` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s != "->" && !s.contains([':', '#']) && !s.chars().any(char::is_whitespace)
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !valid_label(v) {
                return Err(Error::Malformed(format!("invalid vertex label `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut seen = HashSet::new();
        for a in &arrows {
            if !valid_label(&a.label) {
                return Err(Error::Malformed(format!("invalid arrow label `{}`", a.label)));
            }
            if !seen.insert(a.label.as_str()) {
                return Err(Error::DuplicateLabel(a.label.clone()));
            }
            for end in [a.source, a.target] {
                if end >= vertices.len() {
                    return Err(Error::DanglingEndpoint {
                        arrow: a.label.clone(),
                        vertex: format!("#{end}"),
                    });
                }
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from `(label, source, target)` triples given by vertex label.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let idx = |arrow: &str, v: &str| {
            vertices.iter().position(|w| *w == v).ok_or_else(|| Error::DanglingEndpoint {
                arrow: arrow.to_string(),
                vertex: v.to_string(),
            })
        };
        let arrows = arrows
            .iter()
            .map(|(l, s, t)| {
                Ok(Arrow {
                    label: l.to_string(),
                    source: idx(l, s)?,
                    target: idx(l, t)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices.iter().map(|s| s.to_string()).collect(), arrows)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle leaves vertices with positive in-degree.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        removed < n
    }

    /// `v_<vertex>` for trivial paths, arrow labels joined by `.` otherwise.
    pub fn path_label(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("v_{}", self.vertices[p.start])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// All paths of length at most `max_len`, ordered by length, then
    /// lexicographically by vertex (length 0) or arrow sequence.
    pub fn enumerate_paths(&self, max_len: Option<usize>) -> Result<Vec<Path>> {
        if max_len.is_none() && self.has_cycle() {
            return Err(Error::CyclicWithoutBound);
        }
        let mut all: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        let mut layer = all.clone();
        let mut len = 0;
        while !layer.is_empty() && max_len.is_none_or(|m| len < m) {
            let next: Vec<Path> = layer
                .iter()
                .flat_map(|p| {
                    self.arrows
                        .iter()
                        .enumerate()
                        .filter(move |(_, a)| a.source == p.end)
                        .map(move |(i, a)| {
                            let mut arrows = p.arrows.clone();
                            arrows.push(i);
                            Path {
                                start: p.start,
                                end: a.target,
                                arrows,
                            }
                        })
                })
                .collect();
            all.extend(next.iter().cloned());
            layer = next;
            len += 1;
        }
        Ok(all)
    }

    /// For every sink, the number of paths (trivial one included) ending there,
    /// in vertex order.
    pub fn sinks_and_path_counts(&self) -> Result<Vec<(String, usize)>> {
        if self.has_cycle() {
            return Err(Error::CyclicQuiver);
        }
        let paths = self.enumerate_paths(None)?;
        Ok((0..self.vertices.len())
            .filter(|&v| self.arrows.iter().all(|a| a.source != v))
            .map(|v| {
                (
                    self.vertices[v].clone(),
                    paths.iter().filter(|p| p.end == v).count(),
                )
            })
            .collect())
    }

    /// Canonical text form; `parse_quiver` inverts it exactly.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        writeln!(f, "arrows:")?;
        for a in &self.arrows {
            writeln!(
                f,
                "{}: {} -> {}",
                a.label, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits `s` into whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((offset + s[..b].chars().count() + 1, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((offset + s[..b].chars().count() + 1, &s[b..]));
    }
    out
}

fn parse_arrow<'a>(
    text: &'a str,
    line: usize,
    offset: usize,
) -> Result<(&'a str, (usize, &'a str), (usize, &'a str))> {
    let Some(colon) = text.find(':') else {
        return Err(parse_err(line, offset + 1, "expected `<label>: <source> -> <target>`"));
    };
    let label = text[..colon].trim();
    if !valid_label(label) {
        return Err(parse_err(line, offset + 1, format!("invalid arrow label `{label}`")));
    }
    let rest_off = offset + text[..=colon].chars().count();
    let toks = tokens(&text[colon + 1..], rest_off);
    match toks.as_slice() {
        [s, (_, "->"), t] => Ok((label, *s, *t)),
        _ => Err(parse_err(
            line,
            toks.first().map_or(rest_off + 1, |t| t.0),
            "expected `<source> -> <target>`",
        )),
    }
}

/// Parses the line-oriented quiver format. `#` starts a comment.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let mut vertices: Option<Vec<String>> = None;
    let mut in_arrows = false;
    let mut raw_arrows: Vec<(usize, &str, (usize, &str), (usize, &str))> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = line.chars().count() - trimmed.chars().count();
        if let Some(rest) = trimmed.strip_prefix("vertices:") {
            if vertices.is_some() {
                return Err(parse_err(line_no, indent + 1, "duplicate `vertices:` section"));
            }
            let off = indent + "vertices:".len();
            let mut vs = Vec::new();
            let mut seen = HashSet::new();
            for (col, tok) in tokens(rest, off) {
                if !valid_label(tok) {
                    return Err(parse_err(line_no, col, format!("invalid vertex label `{tok}`")));
                }
                if !seen.insert(tok) {
                    return Err(Error::DuplicateLabel(tok.to_string()));
                }
                vs.push(tok.to_string());
            }
            vertices = Some(vs);
        } else if let Some(rest) = trimmed.strip_prefix("arrows:") {
            if vertices.is_none() {
                return Err(parse_err(line_no, indent + 1, "`arrows:` before `vertices:`"));
            }
            if in_arrows {
                return Err(parse_err(line_no, indent + 1, "duplicate `arrows:` section"));
            }
            in_arrows = true;
            if !rest.trim().is_empty() {
                let off = indent + "arrows:".len();
                let lead = rest.chars().count() - rest.trim_start().chars().count();
                let (l, s, t) = parse_arrow(rest.trim_start(), line_no, off + lead)?;
                raw_arrows.push((line_no, l, s, t));
            }
        } else if in_arrows {
            let (l, s, t) = parse_arrow(trimmed, line_no, indent)?;
            raw_arrows.push((line_no, l, s, t));
        } else {
            return Err(parse_err(line_no, indent + 1, "expected `vertices:` or `arrows:`"));
        }
    }

    let vertices = vertices.ok_or_else(|| parse_err(1, 1, "missing `vertices:` section"))?;
    let mut arrows = Vec::new();
    let mut seen = HashSet::new();
    for (_, label, (_, s), (_, t)) in raw_arrows {
        if !seen.insert(label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let find = |v: &str| {
            vertices.iter().position(|w| w == v).ok_or_else(|| Error::DanglingEndpoint {
                arrow: label.to_string(),
                vertex: v.to_string(),
            })
        };
        arrows.push(Arrow {
            label: label.to_string(),
            source: find(s)?,
            target: find(t)?,
        });
    }
    Quiver::new(vertices, arrows)
}
