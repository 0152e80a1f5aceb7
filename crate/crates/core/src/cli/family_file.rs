//! Plain-text family files.
//!
//! ```text
//! # optional comments
//! d=4 k=3
//! 11**
//! 0*01
//! ```
//!
//! The first line that is neither blank nor a comment is the header. Every
//! following non-comment line holds one member of exactly `d` symbols.
//! Trailing whitespace is ignored and duplicate members are rejected.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::vector::JokerVector;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut d = None;
    let mut k = None;
    for token in text.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| parse_error(line, format!("expected `key=value`, found {token:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| parse_error(line, format!("{key} is not a nonnegative integer")))?;
        let slot = match key {
            "d" => &mut d,
            "k" => &mut k,
            _ => return Err(parse_error(line, format!("unknown header key {key:?}"))),
        };
        if slot.replace(value).is_some() {
            return Err(parse_error(line, format!("header repeats {key}")));
        }
    }
    match (d, k) {
        (Some(d), Some(k)) => Ok((d, k)),
        _ => Err(parse_error(line, "header must be `d=<int> k=<int>`")),
    }
}

/// Parses a family file. The result is not yet checked for neighborliness.
pub fn parse(text: &str) -> Result<Family> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut members = Vec::new();
    let mut seen: HashMap<JokerVector, usize> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim_end();
        if body.starts_with('#') {
            continue;
        }
        let Some((d, _, _)) = header else {
            if body.trim().is_empty() {
                continue;
            }
            let (d, k) = parse_header(line, body)?;
            header = Some((d, k, line));
            continue;
        };
        if body.is_empty() {
            continue;
        }
        let len = body.chars().count();
        if len != d {
            return Err(parse_error(
                line,
                format!("expected {d} symbols, found {len}"),
            ));
        }
        let v: JokerVector = body.parse().map_err(|e: Error| parse_error(line, e.to_string()))?;
        if let Some(first) = seen.insert(v, line) {
            return Err(parse_error(
                line,
                format!("duplicate of line {first} (distance 0)"),
            ));
        }
        members.push(v);
    }
    let (d, k, header_line) = header.ok_or_else(|| parse_error(1, "missing header"))?;
    Family::new(d, k, members).map_err(|e| parse_error(header_line, e.to_string()))
}

pub fn read(path: &Path) -> Result<Family> {
    let text = fs::read_to_string(path)
        .map_err(|e| parse_error(0, format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}

/// Header line followed by one member per line.
pub fn render(family: &Family) -> String {
    let mut out = format!("d={} k={}\n", family.d(), family.k());
    for m in family.members() {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

pub fn write_to(family: &Family, out: &mut impl Write) -> std::io::Result<()> {
    out.write_all(render(family).as_bytes())
}

pub fn write(family: &Family, path: &Path) -> std::io::Result<()> {
    fs::write(path, render(family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::codimension_one_family;

    #[test]
    fn round_trip() {
        let f = codimension_one_family(4).unwrap();
        let parsed = parse(&render(&f)).unwrap();
        assert_eq!(parsed.members(), f.members());
        assert_eq!((parsed.d(), parsed.k()), (4, 3));
        assert!(!parsed.is_validated());
    }

    #[test]
    fn comments_blank_lines_and_whitespace() {
        let text = "# hello\n\n  d=2   k=1 \n# body\n00  \n01\t\n\n";
        let f = parse(text).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("d=2 k=1\n00\n011\n", 3),
            ("d=2 k=1\n00\n00\n", 3),
            ("# c\nd=2\n00\n", 2),
            ("d=2 k=1\n0x\n", 2),
            ("d=2 k=3\n00\n", 1),
            ("d=2 k=1 d=3\n", 1),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
