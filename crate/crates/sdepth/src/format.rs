//! Line-oriented text formats for ideals, complexes, certificates and
//! partition witnesses.
//!
//! Ideal files: a header `n=<int>`, then one generator per nonempty line,
//! written either as a monomial `x3*x4` or as whitespace-separated indices
//! `3 4`. The bare line `1` is the unit generator (the monomial 1); the
//! singleton {1} must therefore be written `x1`. Comments start with `#`.
//! Facet-list files are identical except for the header `complex n=<int>`.

use crate::collapse::CollapseCertificate;
use crate::complexes::{MonomialIdeal, SimplicialComplex};
use crate::error::{Error, Result};
use crate::poset::IntervalPartition;
use crate::sets::VertexSet;

/// A parsed input file: either an ideal or a facet-list complex, depending on
/// the header.
#[derive(Debug, Clone)]
pub enum Input {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines with content: (1-based line number, trimmed text), comments and
/// blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Certificate set syntax: space-separated indices, empty for ∅. The `1` =
/// unit-generator rule applies only to ideal and complex files.
fn parse_index_set(text: &str, lineno: usize) -> Result<VertexSet> {
    let indices: Vec<u32> = text
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| parse_err(lineno, format!("bad vertex index `{tok}`")))
        })
        .collect::<Result<_>>()?;
    if indices.contains(&0) {
        return Err(parse_err(lineno, "vertex indices start at 1"));
    }
    VertexSet::from_vertices(indices).map_err(|e| parse_err(lineno, e.to_string()))
}

fn parse_header(line: &str, lineno: usize) -> Result<(bool, u32)> {
    let (is_complex, rest) = match line.strip_prefix("complex") {
        Some(rest) => (true, rest.trim()),
        None => (false, line),
    };
    let Some(value) = rest.strip_prefix("n=") else {
        return Err(parse_err(
            lineno,
            format!("expected header `n=<int>` or `complex n=<int>`, got `{line}`"),
        ));
    };
    let n: u32 = value
        .trim()
        .parse()
        .map_err(|_| parse_err(lineno, format!("bad ground-set size `{value}`")))?;
    Ok((is_complex, n))
}

/// One generator / facet line: `x<i>*x<j>*...`, whitespace-separated indices,
/// or the bare `1` for the empty support.
fn parse_set_line(line: &str, lineno: usize) -> Result<VertexSet> {
    if line == "1" {
        return Ok(VertexSet::empty());
    }
    let indices: Vec<u32> = if line.contains('x') {
        line.split('*')
            .map(|part| {
                let part = part.trim();
                let Some(idx) = part.strip_prefix('x') else {
                    return Err(parse_err(
                        lineno,
                        format!("expected `x<i>` factor, got `{part}`"),
                    ));
                };
                idx.parse::<u32>()
                    .map_err(|_| parse_err(lineno, format!("bad variable index `{idx}`")))
            })
            .collect::<Result<_>>()?
    } else {
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| parse_err(lineno, format!("bad vertex index `{tok}`")))
            })
            .collect::<Result<_>>()?
    };
    if indices.is_empty() {
        return Err(parse_err(lineno, "empty set line"));
    }
    if indices.contains(&0) {
        return Err(parse_err(lineno, "vertex indices start at 1"));
    }
    VertexSet::from_vertices(indices).map_err(|e| parse_err(lineno, e.to_string()))
}

/// Parses either file kind, deciding by the header.
pub fn parse_input(text: &str) -> Result<Input> {
    let mut lines = content_lines(text);
    let Some((lineno, header)) = lines.next() else {
        return Err(parse_err(1, "empty input"));
    };
    let (is_complex, n) = parse_header(header, lineno)?;
    let mut sets = Vec::new();
    let mut last_line = lineno;
    for (lineno, line) in lines {
        sets.push(parse_set_line(line, lineno)?);
        last_line = lineno;
    }
    if sets.is_empty() {
        return Err(parse_err(
            last_line,
            if is_complex {
                "a complex needs at least one facet line"
            } else {
                "an ideal needs at least one generator line"
            },
        ));
    }
    if is_complex {
        Ok(Input::Complex(
            SimplicialComplex::new(n, sets).map_err(|e| parse_err(last_line, e.to_string()))?,
        ))
    } else {
        Ok(Input::Ideal(
            MonomialIdeal::new(n, sets).map_err(|e| parse_err(last_line, e.to_string()))?,
        ))
    }
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    match parse_input(text)? {
        Input::Ideal(i) => Ok(i),
        Input::Complex(_) => Err(parse_err(
            1,
            "expected an ideal file, found `complex` header",
        )),
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    match parse_input(text)? {
        Input::Complex(c) => Ok(c),
        Input::Ideal(_) => Err(parse_err(
            1,
            "expected a complex file (header `complex n=<int>`)",
        )),
    }
}

fn render_monomial(s: VertexSet) -> String {
    if s.is_empty() {
        "1".to_string()
    } else {
        s.vertices()
            .map(|v| format!("x{v}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// The ideal file format; generators in (degree, rev-lex) order.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("n={}\n", ideal.n());
    for g in ideal.generators() {
        out.push_str(&render_monomial(*g));
        out.push('\n');
    }
    out
}

/// The facet-list file format.
pub fn render_complex(complex: &SimplicialComplex) -> String {
    let mut out = format!("complex n={}\n", complex.n());
    for f in complex.facets() {
        out.push_str(&render_monomial(*f));
        out.push('\n');
    }
    out
}

/// A parsed certificate file: a collapse certificate or an interval
/// partition, decided by the first content line.
#[derive(Debug, Clone)]
pub enum Certificate {
    Collapse(CollapseCertificate),
    Partition(IntervalPartition),
}

/// Parses `SDR` / `VIOLATOR` certificate files and `interval ... -> ...`
/// partition files.
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let mut lines = content_lines(text).peekable();
    let Some((lineno, first)) = lines.next() else {
        return Err(parse_err(1, "empty certificate"));
    };
    match first {
        "SDR" => {
            let mut entries = Vec::new();
            for (lineno, line) in lines {
                let Some(rest) = line.strip_prefix("facet ") else {
                    return Err(parse_err(
                        lineno,
                        format!("expected `facet <set> drop <v>`, got `{line}`"),
                    ));
                };
                let Some((set_part, drop_part)) = rest.split_once(" drop ") else {
                    return Err(parse_err(lineno, "missing ` drop ` separator"));
                };
                let facet = parse_index_set(set_part, lineno)?;
                let v: u32 = drop_part
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad dropped vertex `{drop_part}`")))?;
                entries.push((facet, v));
            }
            if entries.is_empty() {
                return Err(parse_err(lineno, "SDR without entries"));
            }
            Ok(Certificate::Collapse(CollapseCertificate::Sdr(entries)))
        }
        "VIOLATOR" => {
            let mut facets = Vec::new();
            for (lineno, line) in lines {
                facets.push(parse_index_set(line, lineno)?);
            }
            if facets.is_empty() {
                return Err(parse_err(lineno, "VIOLATOR without facets"));
            }
            Ok(Certificate::Collapse(CollapseCertificate::Violator(facets)))
        }
        _ if first.starts_with("interval") => {
            let mut intervals = Vec::new();
            let mut handle = |lineno: usize, line: &str| -> Result<()> {
                let Some(rest) = line.strip_prefix("interval") else {
                    return Err(parse_err(
                        lineno,
                        format!("expected `interval <bottom> -> <top>`, got `{line}`"),
                    ));
                };
                let Some((bottom_part, top_part)) = rest.split_once("->") else {
                    return Err(parse_err(lineno, "missing `->` separator"));
                };
                let bottom = parse_index_set(bottom_part, lineno)?;
                let top = parse_index_set(top_part, lineno)?;
                intervals.push((bottom, top));
                Ok(())
            };
            handle(lineno, first)?;
            for (lineno, line) in lines {
                handle(lineno, line)?;
            }
            Ok(Certificate::Partition(IntervalPartition::new(intervals)))
        }
        _ => Err(parse_err(
            lineno,
            "certificate must start with `SDR`, `VIOLATOR` or `interval` lines",
        )),
    }
}
