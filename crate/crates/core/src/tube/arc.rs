use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Right end of an arc: a lift coordinate or the Prüfer spiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    At(i64),
    Infinite,
}

/// An arc `[i,j]` in the universal cover of the annulus, or `[i,inf)`.
///
/// The finite arc `[i,j]` stands for the uniserial object with socle
/// `S_{i+1}` and composition factors `S_{i+1}, ..., S_{j-1}`. The infinite
/// arc `[i,inf)` is the Prüfer object with socle `S_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub start: i64,
    pub end: End,
}

impl Arc {
    /// A finite arc; `None` unless `end >= start + 2`.
    pub fn new(start: i64, end: i64) -> Option<Arc> {
        (end >= start + 2).then_some(Arc { start, end: End::At(end) })
    }

    /// Shorthand for a finite arc that is known to be valid.
    pub fn fin(start: i64, end: i64) -> Arc {
        Arc::new(start, end).unwrap_or_else(|| panic!("[{start},{end}] is not an arc"))
    }

    pub fn pruefer(start: i64) -> Arc {
        Arc { start, end: End::Infinite }
    }

    /// The simple `S_i`, i.e. the arc `[i-1,i+1]`.
    pub fn simple(i: i64) -> Arc {
        Arc::fin(i - 1, i + 1)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.end, End::At(_))
    }

    pub fn finite_end(&self) -> Option<i64> {
        match self.end {
            End::At(j) => Some(j),
            End::Infinite => None,
        }
    }

    /// Composition length; `None` for Prüfer arcs.
    pub fn length(&self) -> Option<i64> {
        self.finite_end().map(|j| j - self.start - 1)
    }

    pub fn is_simple(&self) -> bool {
        self.length() == Some(1)
    }

    /// Shifts both endpoints by `k`.
    pub fn shift(&self, k: i64) -> Arc {
        let end = match self.end {
            End::At(j) => End::At(j + k),
            End::Infinite => End::Infinite,
        };
        Arc { start: self.start + k, end }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.end {
            End::At(j) => write!(f, "[{},{}]", self.start, j),
            End::Infinite => write!(f, "[{},inf)", self.start),
        }
    }
}

impl FromStr for Arc {
    type Err = ParseError;

    /// Accepts `[i,j]`, `[i,inf)`, `[i,inf]` and `∞` for `inf`.
    fn from_str(text: &str) -> Result<Arc, ParseError> {
        let t = text.trim();
        let offset = text.len() - text.trim_start().len();
        let err = |pos: usize, msg: &str| ParseError::new(text, offset + pos, msg);
        if !t.starts_with('[') {
            return Err(err(0, "expected '['"));
        }
        let close = t.len() - 1;
        if !(t.ends_with(']') || t.ends_with(')')) || t.len() < 2 {
            return Err(err(t.len(), "expected ']' or ')'"));
        }
        let body = &t[1..close];
        let Some(comma) = body.find(',') else {
            return Err(err(1, "expected ',' between endpoints"));
        };
        let (a, b) = (body[..comma].trim(), body[comma + 1..].trim());
        let start: i64 = a.parse().map_err(|_| err(1, "start is not an integer"))?;
        let bpos = 2 + comma;
        if b == "inf" || b == "∞" {
            return Ok(Arc::pruefer(start));
        }
        if t.ends_with(')') {
            return Err(err(close, "')' closes only infinite arcs"));
        }
        let end: i64 = b.parse().map_err(|_| err(bpos, "end is not an integer or 'inf'"))?;
        Arc::new(start, end).ok_or_else(|| err(bpos, "finite arcs need end >= start + 2"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("[0,2]".parse::<Arc>().unwrap(), Arc::fin(0, 2));
        assert_eq!(" [3,inf) ".parse::<Arc>().unwrap(), Arc::pruefer(3));
        assert_eq!("[-1,∞]".parse::<Arc>().unwrap(), Arc::pruefer(-1));
        assert_eq!(Arc::pruefer(3).to_string(), "[3,inf)");
        assert_eq!(Arc::fin(-1, 4).to_string(), "[-1,4]");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = "[0,1]".parse::<Arc>().unwrap_err();
        assert_eq!(e.position, 3);
        let e = "0,2]".parse::<Arc>().unwrap_err();
        assert_eq!(e.position, 0);
        let e = "[x,2]".parse::<Arc>().unwrap_err();
        assert_eq!(e.position, 1);
        assert!("[0,3)".parse::<Arc>().is_err());
    }

    #[test]
    fn infinite_sorts_last() {
        assert!(Arc::fin(0, 100) < Arc::pruefer(0));
    }
}
