//! File formats: quivers, maps and points as JSON, dimension vectors and
//! A-degrees as `key:n` lists, and the path expression grammar
//!
//! ```text
//! expr := term (('+' | '-') term)*
//! term := [rational '*'] path
//! path := 'e_' vertex | arrow ('.' arrow)*
//! ```

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{ADegree, Ambient, RepPoint};
use crate::quiver::{id, AddMap, Arrow, DimVector, Id, Path, PathComb, Quiver};
use crate::rational::{self, Rational};

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

pub fn quiver_from_json(text: &str) -> Result<Quiver> {
    let f: QuiverFile = serde_json::from_str(text).map_err(json_error)?;
    Quiver::new(
        f.vertices,
        f.arrows
            .into_iter()
            .map(|a| (a.id.to_string(), a.from.to_string(), a.to.to_string())),
    )
}

pub fn quiver_to_json(q: &Quiver) -> String {
    let f = QuiverFile {
        vertices: q.vertices().iter().map(|v| v.to_string()).collect(),
        arrows: q.arrows().to_vec(),
    };
    serde_json::to_string_pretty(&f).unwrap()
}

fn key_list(text: &str) -> Result<Vec<(String, usize)>> {
    let mut out = Vec::new();
    let mut col = 1;
    for part in text.split(',') {
        let at = |message: String| Error::Parse {
            line: 1,
            column: col,
            message,
        };
        let p = part.trim();
        if !p.is_empty() {
            let (k, n) = p
                .rsplit_once(':')
                .ok_or_else(|| at(format!("expected `key:n`, found `{p}`")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| at(format!("`{n}` is not a natural number")))?;
            out.push((k.trim().to_string(), n));
        }
        col += part.chars().count() + 1;
    }
    Ok(out)
}

/// `"1:2,2:2"`; unlisted vertices get 0.
pub fn parse_dims(q: &Quiver, text: &str) -> Result<DimVector> {
    let entries = key_list(text)?;
    let refs: Vec<(&str, usize)> = entries.iter().map(|(k, n)| (k.as_str(), *n)).collect();
    DimVector::new(q, &refs)
}

/// `"a:1,b:1"`; unlisted arrows get degree 0.
pub fn parse_degree(q: &Quiver, text: &str) -> Result<ADegree> {
    let entries = key_list(text)?;
    for (a, _) in &entries {
        q.arrow(a)?;
    }
    let refs: Vec<(&str, usize)> = entries.iter().map(|(k, n)| (k.as_str(), *n)).collect();
    Ok(ADegree::new(&refs))
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.text[..self.pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let end = rest
            .find(|c: char| c.is_whitespace() || "+-*/.".contains(c))
            .unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn number(&mut self) -> Result<Rational> {
        let start = self.pos;
        let n = self.word();
        let num: num_bigint::BigInt = n.parse().map_err(|_| {
            self.pos = start;
            self.error(format!("`{n}` is not an integer"))
        })?;
        if self.eat('/') {
            let at = self.pos;
            let d = self.word();
            let den: num_bigint::BigInt = d.parse().map_err(|_| {
                self.pos = at;
                self.error(format!("`{d}` is not a positive integer"))
            })?;
            if den <= num_bigint::BigInt::zero() {
                self.pos = at;
                return Err(self.error("denominator must be positive"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn path(&mut self, q: &Quiver) -> Result<Path> {
        let start = self.pos;
        let first = self.word();
        if first.is_empty() {
            return Err(self.error("expected a path"));
        }
        if let Some(v) = first.strip_prefix("e_") {
            if q.arrow(first).is_err() {
                if !q.has_vertex(v) {
                    self.pos = start;
                    return Err(Error::UnknownVertex(v.to_string()));
                }
                return Ok(Path::trivial(id(v)));
            }
        }
        let mut p = Path::arrow(q.arrow(first)?);
        while self.eat('.') {
            let name = self.word();
            let a = q.arrow(name)?;
            if a.from != *p.target() {
                return Err(Error::EndpointMismatch(format!(
                    "t({}) = {} but i({}) = {}",
                    p.arrows().last().unwrap(),
                    p.target(),
                    a.id,
                    a.from
                )));
            }
            p = p.extend(a);
        }
        Ok(p)
    }

    fn term(&mut self, q: &Quiver) -> Result<(Path, Rational)> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let save = self.pos;
            if let Ok(c) = self.number() {
                if self.eat('*') {
                    return Ok((self.path(q)?, c));
                }
            }
            // A vertex or arrow name may start with a digit.
            self.pos = save;
        }
        Ok((self.path(q)?, Rational::one()))
    }
}

fn parse_terms(q: &Quiver, text: &str) -> Result<Vec<(Path, Rational)>> {
    let mut sc = Scanner { text, pos: 0 };
    let mut out = Vec::new();
    let mut sign = if sc.eat('-') { -1 } else { 1 };
    loop {
        let (p, c) = sc.term(q)?;
        out.push((p, if sign < 0 { -c } else { c }));
        if sc.eat('+') {
            sign = 1;
        } else if sc.eat('-') {
            sign = -1;
        } else if sc.peek().is_none() {
            return Ok(out);
        } else {
            return Err(sc.error("expected `+`, `-` or end of input"));
        }
    }
}

/// Parses a combination of paths with common endpoints, inferred from the
/// terms.
pub fn parse_path_expr(q: &Quiver, text: &str) -> Result<PathComb> {
    let terms = parse_terms(q, text)?;
    let (v, w) = (terms[0].0.source().clone(), terms[0].0.target().clone());
    if let Some((p, _)) = terms
        .iter()
        .find(|(p, _)| *p.source() != v || *p.target() != w)
    {
        return Err(Error::EndpointMismatch(format!(
            "term {p} runs {}->{}, the first term runs {v}->{w}",
            p.source(),
            p.target()
        )));
    }
    PathComb::from_terms(v, w, terms)
}

/// Like [`parse_path_expr`] with known endpoints; also accepts `0`.
pub fn parse_entry(q: &Quiver, text: &str, source: &Id, target: &Id) -> Result<PathComb> {
    if text.trim() == "0" {
        return Ok(PathComb::zero(source.clone(), target.clone()));
    }
    let c = parse_path_expr(q, text)?;
    if c.source() != source || c.target() != target {
        return Err(Error::EndpointMismatch(format!(
            "entry `{text}` runs {}->{}, its slots are {source}->{target}",
            c.source(),
            c.target()
        )));
    }
    Ok(c)
}

/// Builds a map from slot vertices and entry strings, source-slot-major.
pub fn map_from_strs(
    q: &Quiver,
    sources: &[&str],
    targets: &[&str],
    entries: &[&[&str]],
) -> Result<AddMap> {
    let src: Vec<Id> = sources
        .iter()
        .map(|v| q.check_vertex(v))
        .collect::<Result<_>>()?;
    let tgt: Vec<Id> = targets
        .iter()
        .map(|v| q.check_vertex(v))
        .collect::<Result<_>>()?;
    if entries.len() != src.len() || entries.iter().any(|r| r.len() != tgt.len()) {
        return Err(Error::ShapeMismatch(format!(
            "expected {}x{} entries",
            src.len(),
            tgt.len()
        )));
    }
    let rows = entries
        .iter()
        .zip(&src)
        .map(|(row, s)| {
            row.iter()
                .zip(&tgt)
                .map(|(e, t)| parse_entry(q, e, s, t))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    AddMap::new(src, tgt, rows)
}

/// Slots either as `{vertex: multiplicity}` (quiver order) or as an
/// explicit list of vertices.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Slots {
    Mult(BTreeMap<String, usize>),
    List(Vec<String>),
}

#[derive(Serialize, Deserialize)]
struct MapFile {
    source: Slots,
    target: Slots,
    entries: Vec<Vec<String>>,
}

fn slots(q: &Quiver, s: Slots) -> Result<Vec<String>> {
    Ok(match s {
        Slots::List(l) => l,
        Slots::Mult(m) => {
            let entries: Vec<(&str, usize)> = m.iter().map(|(k, n)| (k.as_str(), *n)).collect();
            AddMap::slots_for(q, &DimVector::new(q, &entries)?)
                .into_iter()
                .map(|v| v.to_string())
                .collect()
        }
    })
}

pub fn map_from_json(q: &Quiver, text: &str) -> Result<AddMap> {
    let f: MapFile = serde_json::from_str(text).map_err(json_error)?;
    let src = slots(q, f.source)?;
    let tgt = slots(q, f.target)?;
    let src: Vec<&str> = src.iter().map(String::as_str).collect();
    let tgt: Vec<&str> = tgt.iter().map(String::as_str).collect();
    let rows: Vec<Vec<&str>> = f
        .entries
        .iter()
        .map(|r| r.iter().map(String::as_str).collect())
        .collect();
    // A map with no targets has no way to list its (empty) rows.
    let rows = if rows.is_empty() && tgt.is_empty() {
        vec![Vec::new(); src.len()]
    } else {
        rows
    };
    let refs: Vec<&[&str]> = rows.iter().map(Vec::as_slice).collect();
    map_from_strs(q, &src, &tgt, &refs)
}

pub fn map_to_json(q: &Quiver, phi: &AddMap) -> String {
    let mult = |d: DimVector| {
        Slots::Mult(
            d.0.into_iter()
                .filter(|(_, n)| *n > 0)
                .map(|(v, n)| (v.to_string(), n))
                .collect(),
        )
    };
    let list = |s: &[Id]| Slots::List(s.iter().map(|v| v.to_string()).collect());
    let (source, target) = if phi.is_canonical(q) {
        (mult(phi.source_mult(q)), mult(phi.target_mult(q)))
    } else {
        (list(phi.source_slots()), list(phi.target_slots()))
    };
    let f = MapFile {
        source,
        target,
        entries: phi
            .entries()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&f).unwrap()
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => rational::parse(s),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().unwrap())),
        other => Err(Error::Invalid(format!(
            "expected a rational as a string or integer, found {other}"
        ))),
    }
}

/// Reads a point `{"arrow": [[rational, ...], ...]}`; every arrow must be
/// present with the shape the ambient space requires.
pub fn point_from_json(amb: &Ambient, text: &str) -> Result<RepPoint> {
    let raw: BTreeMap<String, Vec<Vec<Value>>> = serde_json::from_str(text).map_err(json_error)?;
    let mut maps = BTreeMap::new();
    for (a, rows) in raw {
        let (r, c) = amb.shape(&a)?;
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(format!(
                "arrow {a} needs a {r}x{c} matrix"
            )));
        }
        let entries = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(rational_from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        maps.insert(id(&a), Matrix::from_rows(r, c, entries)?);
    }
    RepPoint::new(amb, maps)
}

pub fn point_to_json(p: &RepPoint) -> String {
    let raw: BTreeMap<String, Vec<Vec<String>>> = p
        .maps()
        .iter()
        .map(|(a, m)| {
            (
                a.to_string(),
                m.row_vecs()
                    .iter()
                    .map(|r| r.iter().map(rational::render).collect())
                    .collect(),
            )
        })
        .collect();
    serde_json::to_string_pretty(&raw).unwrap()
}
