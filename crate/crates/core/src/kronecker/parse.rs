//! Text grammar for Kronecker objects, sums and complexes.
//!
//! `P3`, `Q2`, `R(1:0,2)`, `Pruefer(1:0)`, `Lukas`, `Generic`, `P1[1]`,
//! `[P1^2 -> P2 | (1,0) (0,1)]`; sums are joined with `+`.

use super::glue::{Row, Term};
use super::{Entry, KroneckerObject, Point, Proj, ProjSum, Summand, TwoTermComplex};
use crate::error::ParseError;
use num_traits::Zero;

use crate::exactlin::{parse_scalar, Scalar};

fn err(input: &str, pos: usize, msg: &str) -> ParseError {
    ParseError::new(input, pos, msg)
}

/// Splits at `sep` outside brackets and parentheses; yields `(offset, piece)`.
fn split_top(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out
}

fn trimmed(offset: usize, piece: &str) -> (usize, &str) {
    (offset + piece.len() - piece.trim_start().len(), piece.trim())
}

fn parse_index(full: &str, pos: usize, digits: &str) -> Result<usize, ParseError> {
    match digits.parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i),
        _ => Err(err(full, pos, "expected an index of at least 1")),
    }
}

fn parse_point(full: &str, pos: usize, text: &str) -> Result<Point, ParseError> {
    let Some((a, b)) = text.split_once(':') else { return Err(err(full, pos, "expected a point 'a:b'")) };
    let a = parse_scalar(a).ok_or_else(|| err(full, pos, "bad first coordinate"))?;
    let b = parse_scalar(b).ok_or_else(|| err(full, pos + text.find(':').unwrap_or(0) + 1, "bad second coordinate"))?;
    Point::new(a, b).map_err(|_| err(full, pos, "the point (0:0) does not exist"))
}

fn object_at(full: &str, pos: usize, t: &str) -> Result<Summand, ParseError> {
    let module = |o| Ok(Summand::Module(o));
    if t == "Lukas" {
        return module(KroneckerObject::Lukas);
    }
    if t == "Generic" {
        return module(KroneckerObject::Generic);
    }
    if let Some(inner) = t.strip_prefix("Pruefer(").and_then(|r| r.strip_suffix(')')) {
        return module(KroneckerObject::Pruefer(parse_point(full, pos + 8, inner)?));
    }
    if let Some(inner) = t.strip_prefix("R(").and_then(|r| r.strip_suffix(')')) {
        let Some(comma) = inner.rfind(',') else { return Err(err(full, pos + 2, "expected 'R(a:b,length)'")) };
        let point = parse_point(full, pos + 2, &inner[..comma])?;
        let len = parse_index(full, pos + 3 + comma, inner[comma + 1..].trim())?;
        return module(KroneckerObject::Regular(point, len));
    }
    if let Some(base) = t.strip_suffix("[1]") {
        return match base {
            "P1" => Ok(Summand::Shifted(Proj::P1)),
            "P2" => Ok(Summand::Shifted(Proj::P2)),
            _ => Err(err(full, pos, "only P1[1] and P2[1] can be shifted")),
        };
    }
    if let Some(rest) = t.strip_prefix('P') {
        return module(KroneckerObject::Preprojective(parse_index(full, pos + 1, rest)?));
    }
    if let Some(rest) = t.strip_prefix('Q') {
        return module(KroneckerObject::Preinjective(parse_index(full, pos + 1, rest)?));
    }
    Err(err(full, pos, "unknown object"))
}

/// A single named object such as `P3`, `R(1:0,2)` or `P1[1]`.
pub fn parse_object(text: &str) -> Result<Summand, ParseError> {
    let (pos, t) = trimmed(0, text);
    if t.is_empty() {
        return Err(err(text, pos, "expected an object"));
    }
    object_at(text, pos, t)
}

fn proj_list(full: &str, pos: usize, text: &str) -> Result<ProjSum, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for word in text.split(|c: char| c.is_whitespace() || c == '+') {
        let here = pos + offset;
        offset += word.len() + 1;
        if word.is_empty() || word == "0" {
            continue;
        }
        let (name, count) = match word.split_once('^') {
            Some((n, c)) => (n, c.parse::<usize>().map_err(|_| err(full, here + n.len() + 1, "bad multiplicity"))?),
            None => (word, 1),
        };
        let p = match name {
            "P1" => Proj::P1,
            "P2" => Proj::P2,
            _ => return Err(err(full, here, "expected P1 or P2")),
        };
        out.extend(std::iter::repeat_n(p, count));
    }
    Ok(ProjSum(out))
}

fn entry(full: &str, pos: usize, t: &str) -> Result<Entry, ParseError> {
    if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let Some((a, b)) = inner.split_once(',') else { return Err(err(full, pos, "expected a pair '(a,b)'")) };
        let a = parse_scalar(a).ok_or_else(|| err(full, pos + 1, "bad scalar"))?;
        let b = parse_scalar(b).ok_or_else(|| err(full, pos + 2 + a.to_string().len(), "bad scalar"))?;
        return Ok(Entry::Pair(a, b));
    }
    parse_scalar(t).map(Entry::Scalar).ok_or_else(|| err(full, pos, "bad scalar"))
}

/// Entries of one row: scalars and `(a,b)` pairs separated by spaces.
fn row_entries(full: &str, pos: usize, text: &str) -> Result<Vec<Entry>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        if bytes[i] == b'(' {
            let close = text[i..].find(')').ok_or_else(|| err(full, pos + i, "unclosed '('"))?;
            i += close + 1;
        } else {
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
        }
        out.push(entry(full, pos + start, &text[start..i])?);
    }
    Ok(out)
}

fn complex_at(full: &str, pos: usize, t: &str) -> Result<TwoTermComplex, ParseError> {
    let Some(body) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) else {
        return Err(err(full, pos, "expected '[src -> dst | rows]'"));
    };
    let (terms, rows) = match body.split_once('|') {
        Some((a, b)) => (a, Some(b)),
        None => (body, None),
    };
    let Some(arrow) = terms.find("->") else { return Err(err(full, pos + 1, "expected '->'")) };
    let src = proj_list(full, pos + 1, &terms[..arrow])?;
    let dst = proj_list(full, pos + 3 + arrow, &terms[arrow + 2..])?;
    let rows_pos = pos + 2 + terms.len();
    let matrix: Vec<Vec<Entry>> = match rows {
        Some(r) if !r.trim().is_empty() => {
            split_top(r, ';').into_iter().map(|(o, row)| row_entries(full, rows_pos + o, row)).collect::<Result<Vec<_>, _>>()?
        }
        _ => vec![vec![Entry::Scalar(Scalar::zero()); src.0.len()]; dst.0.len()],
    };
    TwoTermComplex::from_blocks(src, dst, &matrix).map_err(|e| err(full, rows_pos, &e.to_string()))
}

/// A complex such as `[P1^2 -> P2 | (1,0) (0,1)]`.
pub fn parse_complex(text: &str) -> Result<TwoTermComplex, ParseError> {
    let (pos, t) = trimmed(0, text);
    complex_at(text, pos, t)
}

/// A `+`-separated sum of objects and complexes.
pub fn parse_terms(text: &str) -> Result<Vec<Term>, ParseError> {
    let mut out = Vec::new();
    for (offset, piece) in split_top(text, '+') {
        let (pos, t) = trimmed(offset, piece);
        if t.is_empty() {
            return Err(err(text, pos, "empty summand"));
        }
        if t == "0" {
            continue;
        }
        if t.starts_with('[') {
            out.push(Term::Complex(complex_at(text, pos, t)?));
        } else {
            out.push(Term::Object(object_at(text, pos, t)?));
        }
    }
    Ok(out)
}

/// A recollement row: `P3`, `Q1` or `Pruefer(1:0)`.
pub fn parse_row(text: &str) -> Result<Row, ParseError> {
    match parse_object(text)? {
        Summand::Module(KroneckerObject::Preprojective(i)) => Ok(Row::P(i)),
        Summand::Module(KroneckerObject::Preinjective(i)) => Ok(Row::Q(i)),
        Summand::Module(KroneckerObject::Pruefer(p)) => Ok(Row::Pruefer(p)),
        _ => Err(err(text, 0, "a row is P<i>, Q<i> or Pruefer(a:b)")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::glue::normalize;

    #[test]
    fn objects() {
        assert_eq!(parse_object("P3").unwrap().to_string(), "P3");
        assert_eq!(parse_object(" R(2:4,3) ").unwrap().to_string(), "R(1:2,3)");
        assert_eq!(parse_object("Pruefer(0:5)").unwrap().to_string(), "Pruefer(0:1)");
        assert_eq!(parse_object("P2[1]").unwrap(), Summand::Shifted(Proj::P2));
        assert_eq!(parse_object("Lukas").unwrap().to_string(), "Lukas");
        let e = parse_object("X7").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_object("Q0").unwrap_err();
        assert_eq!(e.position, 1);
        assert!(parse_object("R(0:0,1)").is_err());
    }

    #[test]
    fn complexes_and_sums() {
        let c = parse_complex("[P1^2 -> P2 | (1,0) (0,1)]").unwrap();
        assert_eq!(c.to_string(), "[P1^2 -> P2 | (1,0) (0,1)]");
        let terms = parse_terms("P1[1] + [P1^2 -> P2 | (1,0) (0,1)]").unwrap();
        assert_eq!(normalize(&terms).unwrap().to_string(), "Q1 + P1[1]");
        let c = parse_complex("[P1 -> P1 P2 | 1; (0,1)]").unwrap();
        assert_eq!(c.src.0.len(), 1);
        assert_eq!(parse_complex("[P1 -> 0]").unwrap(), TwoTermComplex::shifted(ProjSum::repeat(Proj::P1, 1)));
        assert!(parse_complex("[P2 -> P1 | 1]").is_err());
        assert!(parse_terms("P1 + + P2").is_err());
        assert_eq!(parse_terms("0").unwrap(), Vec::new());
    }

    #[test]
    fn rows() {
        assert_eq!(parse_row("P3").unwrap(), Row::P(3));
        assert_eq!(parse_row("Q1").unwrap(), Row::Q(1));
        assert!(parse_row("Lukas").is_err());
    }
}
