//! Line-oriented text files for skeletons, weights and pins.
//!
//! Skeleton:
//!
//! ```text
//! field sqrt5
//! v a 0 1 1/2+1/2r5
//! ...
//! e a b            # or a single `autoedges <S>` line instead of any `e`
//! f a b c          # optional faces
//! ```
//!
//! Weight and pin files: an optional `default 0` line and `w <n1> <n2> <S>`
//! lines. Scalars inside files are single words, so `1/2+1/2r5` but not
//! `1/2 + 1/2r5`. Everything after `#` is a comment.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::balance::WeightVector;
use crate::field::{format_scalar, parse_scalar_in, FieldError, QuadraticScalar as Q, Radicand};
use crate::linalg::Vec3;
use crate::skeleton::{edges_from_squared_distance, Diagnostic, PolytopeSkeleton, SkeletonError, Vertex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid skeleton: {}", list(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("no weight for edge {0} and no `default 0`")]
    MissingEdge(String),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
}

fn list(diags: &[Diagnostic]) -> String {
    diags.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// How geometric problems found by validation are handled on read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Validation {
    /// Any diagnostic is an error.
    #[default]
    Strict,
    /// Diagnostics are returned alongside the skeleton.
    Lenient,
}

#[derive(Clone, Debug)]
pub struct SkeletonRead {
    pub skeleton: PolytopeSkeleton<Q>,
    pub warnings: Vec<Diagnostic>,
}

/// A whitespace-separated word with its 1-based column.
struct Word<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    words: Vec<Word<'a>>,
}

impl Line<'_> {
    fn error(&self, column: usize, message: impl Into<String>) -> IoError {
        IoError::Parse { line: self.number, column, message: message.into() }
    }

    fn end_column(&self) -> usize {
        self.words.last().map_or(1, |w| w.column + w.text.chars().count())
    }

    fn expect_len(&self, n: usize, usage: &str) -> Result<(), IoError> {
        match self.words.len().cmp(&n) {
            std::cmp::Ordering::Equal => Ok(()),
            std::cmp::Ordering::Less => Err(self.error(self.end_column(), format!("expected `{usage}`"))),
            std::cmp::Ordering::Greater => {
                Err(self.error(self.words[n].column, format!("unexpected `{}`", self.words[n].text)))
            }
        }
    }

    fn scalar(&self, i: usize, radicand: Radicand) -> Result<Q, IoError> {
        let w = &self.words[i];
        parse_scalar_in(w.text, radicand).map_err(|e| match e {
            FieldError::Parse { position, message } => self.error(w.column + position, message),
            other => self.error(w.column, other.to_string()),
        })
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut start = None;
        for (col, (byte, ch)) in body.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, c))) => {
                    words.push(Word { text: &body[b..byte], column: c + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            words.push(Word { text: &body[b..], column: c + 1 });
        }
        (!words.is_empty()).then_some(Line { number: i + 1, words })
    })
}

fn read_file(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File { path: path.to_path_buf(), source })
}

fn parse_field(line: &Line) -> Result<Radicand, IoError> {
    line.expect_len(2, "field sqrt<d>")?;
    let w = &line.words[1];
    w.text
        .strip_prefix("sqrt")
        .and_then(|d| d.parse::<u32>().ok())
        .and_then(|d| Radicand::new(d).ok())
        .ok_or_else(|| line.error(w.column, format!("bad field `{}` (expected e.g. sqrt5)", w.text)))
}

/// Parses skeleton text.
pub fn parse_skeleton(text: &str, validation: Validation) -> Result<SkeletonRead, IoError> {
    let mut radicand: Option<Radicand> = None;
    let mut vertices: Vec<Vertex<Q>> = Vec::new();
    let mut edge_lines = Vec::new();
    let mut face_lines = Vec::new();
    let mut autoedges: Option<(Q, Line)> = None;

    for line in lines(text) {
        let head = &line.words[0];
        if radicand.is_none() {
            if head.text != "field" {
                return Err(line.error(head.column, "expected `field sqrt<d>` header"));
            }
            radicand = Some(parse_field(&line)?);
            continue;
        }
        let rad = radicand.unwrap_or_default();
        match head.text {
            "v" => {
                line.expect_len(5, "v <name> <x> <y> <z>")?;
                let position = Vec3::new(line.scalar(2, rad)?, line.scalar(3, rad)?, line.scalar(4, rad)?);
                vertices.push(Vertex { name: line.words[1].text.to_string(), position });
            }
            "e" => {
                line.expect_len(3, "e <name1> <name2>")?;
                edge_lines.push(line);
            }
            "f" => {
                if line.words.len() < 4 {
                    return Err(line.error(line.end_column(), "expected `f <name> <name> <name> ...`"));
                }
                face_lines.push(line);
            }
            "autoedges" => {
                line.expect_len(2, "autoedges <squared length>")?;
                if autoedges.is_some() {
                    return Err(line.error(head.column, "repeated `autoedges`"));
                }
                autoedges = Some((line.scalar(1, rad)?, line));
            }
            "field" => return Err(line.error(head.column, "repeated `field` header")),
            other => return Err(line.error(head.column, format!("unknown directive `{other}`"))),
        }
    }
    if radicand.is_none() {
        return Err(IoError::Parse { line: 1, column: 1, message: "missing `field sqrt<d>` header".into() });
    }

    let index: BTreeMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.name.as_str(), i)).collect();
    let lookup = |line: &Line, k: usize| {
        let w = &line.words[k];
        index.get(w.text).copied().ok_or_else(|| line.error(w.column, format!("unknown vertex `{}`", w.text)))
    };
    let edges = match autoedges {
        Some((d2, line)) => {
            if let Some(e) = edge_lines.first() {
                return Err(e.error(1, format!("`e` lines cannot be combined with `autoedges` (line {})", line.number)));
            }
            edges_from_squared_distance(&vertices, &d2)
        }
        None => edge_lines.iter().map(|l| Ok((lookup(l, 1)?, lookup(l, 2)?))).collect::<Result<_, IoError>>()?,
    };
    let faces = if face_lines.is_empty() {
        None
    } else {
        let parsed = face_lines
            .iter()
            .map(|l| (1..l.words.len()).map(|k| lookup(l, k)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Some(parsed)
    };
    let skeleton = PolytopeSkeleton::new(vertices, edges, faces)?;
    let warnings = skeleton.validate();
    if validation == Validation::Strict && !warnings.is_empty() {
        return Err(IoError::Invalid(warnings));
    }
    Ok(SkeletonRead { skeleton, warnings })
}

pub fn read_skeleton(path: &Path, validation: Validation) -> Result<SkeletonRead, IoError> {
    parse_skeleton(&read_file(path)?, validation)
}

/// Canonical text: vertices in stored order, then every edge explicitly.
pub fn format_skeleton(skel: &PolytopeSkeleton<Q>) -> String {
    let radicand = skel
        .vertices()
        .iter()
        .flat_map(|v| v.position.components())
        .find(|x| !x.is_rational())
        .map(|x| x.radicand())
        .unwrap_or_default();
    let mut out = format!("field sqrt{radicand}\n");
    for v in skel.vertices() {
        let [x, y, z] = v.position.components().map(format_scalar);
        out.push_str(&format!("v {} {x} {y} {z}\n", v.name));
    }
    for e in skel.edges() {
        out.push_str(&format!("e {} {}\n", skel.name(e.a), skel.name(e.b)));
    }
    for face in skel.faces().unwrap_or_default() {
        let names: Vec<&str> = face.iter().map(|&i| skel.name(i)).collect();
        out.push_str(&format!("f {}\n", names.join(" ")));
    }
    out
}

pub fn write_skeleton(skel: &PolytopeSkeleton<Q>, path: &Path) -> Result<(), IoError> {
    write_file(path, &format_skeleton(skel))
}

/// Edge values listed in a weight or pin file, keyed by edge index.
fn parse_entries(text: &str, skel: &PolytopeSkeleton<Q>) -> Result<(BTreeMap<usize, Q>, bool), IoError> {
    let radicand = skel
        .vertices()
        .iter()
        .flat_map(|v| v.position.components())
        .find(|x| !x.is_rational())
        .map(|x| x.radicand())
        .unwrap_or_default();
    let mut entries = BTreeMap::new();
    let mut default_zero = false;
    for line in lines(text) {
        let head = &line.words[0];
        match head.text {
            "default" => {
                line.expect_len(2, "default 0")?;
                if line.words[1].text != "0" {
                    return Err(line.error(line.words[1].column, "only `default 0` is supported"));
                }
                default_zero = true;
            }
            "w" => {
                line.expect_len(4, "w <name1> <name2> <value>")?;
                let (a, b) = (&line.words[1], &line.words[2]);
                let edge = skel
                    .edge_by_names(a.text, b.text)
                    .map_err(|_| line.error(a.column, format!("unknown edge {}:{}", a.text, b.text)))?;
                let value = line.scalar(3, radicand)?;
                if entries.insert(edge, value).is_some() {
                    return Err(line.error(a.column, format!("edge {} listed twice", skel.edge_label(edge))));
                }
            }
            other => return Err(line.error(head.column, format!("unknown directive `{other}`"))),
        }
    }
    Ok((entries, default_zero))
}

/// Parses a complete weight; edges may be omitted only under `default 0`.
pub fn parse_weight(text: &str, skel: &PolytopeSkeleton<Q>) -> Result<WeightVector<Q>, IoError> {
    let (mut entries, default_zero) = parse_entries(text, skel)?;
    let mut values = Vec::with_capacity(skel.edge_count());
    for e in 0..skel.edge_count() {
        match entries.remove(&e) {
            Some(v) => values.push(v),
            None if default_zero => values.push(Q::from_int(0)),
            None => return Err(IoError::MissingEdge(skel.edge_label(e))),
        }
    }
    Ok(WeightVector::new(values))
}

pub fn read_weight(path: &Path, skel: &PolytopeSkeleton<Q>) -> Result<WeightVector<Q>, IoError> {
    parse_weight(&read_file(path)?, skel)
}

/// Parses a partial assignment. `default 0` is accepted and ignored.
pub fn parse_pins(text: &str, skel: &PolytopeSkeleton<Q>) -> Result<BTreeMap<usize, Q>, IoError> {
    Ok(parse_entries(text, skel)?.0)
}

pub fn read_pins(path: &Path, skel: &PolytopeSkeleton<Q>) -> Result<BTreeMap<usize, Q>, IoError> {
    parse_pins(&read_file(path)?, skel)
}

/// One `w` line per edge in canonical edge order.
pub fn format_weight(skel: &PolytopeSkeleton<Q>, w: &WeightVector<Q>) -> String {
    assert_eq!(w.len(), skel.edge_count(), "weight length must match edge count");
    let mut out = String::new();
    for (e, value) in skel.edges().iter().zip(w.values()) {
        out.push_str(&format!("w {} {} {}\n", skel.name(e.a), skel.name(e.b), format_scalar(value)));
    }
    out
}

pub fn write_weight(skel: &PolytopeSkeleton<Q>, w: &WeightVector<Q>, path: &Path) -> Result<(), IoError> {
    write_file(path, &format_weight(skel, w))
}
