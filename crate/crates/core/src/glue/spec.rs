//! Tube data of a large tilting sheaf and its text format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::tube::{Arc, ArcCollection, TubeCtx};

use super::wings;

/// The torsion part of a tilting sheaf `T_(B,V)`, one arc collection per
/// point, plus the set `V`. The torsionfree part is `V`-divisible and is
/// never materialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiltingSpec {
    pub tubes: BTreeMap<String, ArcCollection>,
    pub v: BTreeSet<String>,
}

/// Outcome of [`verify_tilting_spec`]: empty `reasons` means valid.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verdict {
    pub reasons: Vec<String>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.reasons.is_empty()
    }
}

impl TiltingSpec {
    /// A spec with the given `(point, collection)` pairs.
    pub fn new<'a>(tubes: impl IntoIterator<Item = (&'a str, ArcCollection)>, v: impl IntoIterator<Item = &'a str>) -> TiltingSpec {
        TiltingSpec { tubes: tubes.into_iter().map(|(x, c)| (x.to_string(), c)).collect(), v: v.into_iter().map(str::to_string).collect() }
    }

    pub fn tube(&self, x: &str) -> Option<&ArcCollection> {
        self.tubes.get(x)
    }

    pub fn in_v(&self, x: &str) -> bool {
        self.v.contains(x)
    }

    /// The same spec with the collection at `x` replaced.
    pub fn with_tube(&self, x: &str, c: ArcCollection) -> TiltingSpec {
        let mut out = self.clone();
        out.tubes.insert(x.to_string(), c);
        out
    }

    pub fn verify(&self) -> Verdict {
        verify_tilting_spec(self)
    }
}

/// Checks the `(B,V)` shape: rigidity in each tube, branch configuration
/// of the finite arcs, and in `V`-tubes exactly the Prüfer arcs whose
/// socle `S` has `τS` outside the wings.
pub fn verify_tilting_spec(t: &TiltingSpec) -> Verdict {
    let mut reasons = Vec::new();
    if t.v.is_empty() {
        reasons.push("V is empty".to_string());
    }
    for x in &t.v {
        if !t.tubes.contains_key(x) {
            reasons.push(format!("V names unknown point {x}"));
        }
    }
    for (x, c) in &t.tubes {
        let ctx = c.ctx();
        let n = c.rank as i64;
        for a in &c.arcs {
            for b in &c.arcs {
                let e = ctx.ext_dim(a, b);
                if e > 0 {
                    reasons.push(format!("{x}: Ext¹({a}, {b}) = {e}"));
                }
            }
        }
        let finite: Vec<Arc> = c.arcs.iter().filter(|a| a.is_finite()).copied().collect();
        let roots = wings::roots(&ctx, &finite);
        for r in &roots {
            if r.length().unwrap_or(0) >= n {
                reasons.push(format!("{x}: root {r} is not exceptional"));
                continue;
            }
            let inside = finite.iter().filter(|a| wings::contains(&ctx, r, a)).count() as i64;
            if Some(inside) != r.length() {
                reasons.push(format!("{x}: wing of {r} holds {inside} arcs, expected {}", r.length().unwrap_or(0)));
            }
        }
        for (i, r) in roots.iter().enumerate() {
            for s in &roots[i + 1..] {
                if !wings::non_adjacent(&ctx, r, s) {
                    reasons.push(format!("{x}: wings of {r} and {s} are adjacent"));
                }
            }
        }
        let w = wings::base_union(&ctx, &roots);
        let pruefer: BTreeSet<Arc> = c.arcs.iter().filter(|a| !a.is_finite()).copied().collect();
        if t.in_v(x) {
            let expected: BTreeSet<Arc> =
                (0..n).filter(|s| !w.contains(&(s - 1).rem_euclid(n))).map(|s| ctx.normalize(&Arc::pruefer(s - 1))).collect();
            if pruefer != expected {
                let show = |s: &BTreeSet<Arc>| s.iter().map(Arc::to_string).collect::<Vec<_>>().join(" ");
                reasons.push(format!("{x}: Prüfer arcs {{{}}}, expected {{{}}}", show(&pruefer), show(&expected)));
            }
        } else if let Some(p) = pruefer.first() {
            reasons.push(format!("{x}: Prüfer arc {p} outside V"));
        }
    }
    Verdict { reasons }
}

impl fmt::Display for TiltingSpec {
    /// Canonical form: points and arcs in sorted order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let points: Vec<String> = self.tubes.iter().map(|(x, c)| format!("{x}:{}", c.rank)).collect();
        let v: Vec<&str> = self.v.iter().map(String::as_str).collect();
        writeln!(f, "curve points=[{}] V={{{}}}", points.join(", "), v.join(", "))?;
        for (x, c) in &self.tubes {
            writeln!(f, "point {x}")?;
            for a in &c.arcs {
                writeln!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Byte offset of `sub` inside `line` (both from the same buffer).
fn offset_in(line: &str, sub: &str) -> usize {
    sub.as_ptr() as usize - line.as_ptr() as usize
}

/// Point names with their ranks, and the names in `V`.
type Header = (Vec<(String, usize)>, Vec<String>);

fn parse_header(line: &str) -> Result<Header, ParseError> {
    let err = |pos: usize, msg: &str| ParseError::new(line, pos, msg);
    let rest = line.strip_prefix("curve").ok_or_else(|| err(0, "expected 'curve points=[...] V={...}'"))?;
    let p0 = rest.find("points=[").ok_or_else(|| err(line.len(), "missing 'points=[...]'"))?;
    let body_start = "curve".len() + p0 + "points=[".len();
    let close = line[body_start..].find(']').ok_or_else(|| err(body_start, "unclosed '['"))? + body_start;
    let mut points = Vec::new();
    for piece in line[body_start..close].split(',') {
        let item = piece.trim();
        let pos = offset_in(line, item);
        let Some((name, rank)) = item.split_once(':') else { return Err(err(pos, "expected 'name:rank'")) };
        if !is_ident(name.trim()) {
            return Err(err(pos, "point names are letters, digits and '_'"));
        }
        let rank = rank.trim().parse::<usize>().ok().filter(|&r| r >= 1);
        let rank = rank.ok_or_else(|| err(pos + name.len() + 1, "expected a rank of at least 1"))?;
        if points.iter().any(|(p, _)| p == name.trim()) {
            return Err(err(pos, "point listed twice"));
        }
        points.push((name.trim().to_string(), rank));
    }
    let after = &line[close + 1..];
    let v0 = after.find("V={").ok_or_else(|| err(close + 1, "missing 'V={...}'"))? + close + 1 + 3;
    let vclose = line[v0..].find('}').ok_or_else(|| err(v0, "unclosed '{'"))? + v0;
    let mut v = Vec::new();
    for piece in line[v0..vclose].split(',') {
        let name = piece.trim();
        if name.is_empty() {
            continue;
        }
        if !points.iter().any(|(p, _)| p == name) {
            return Err(err(offset_in(line, name), "V names a point not in 'points'"));
        }
        v.push(name.to_string());
    }
    if !line[vclose + 1..].trim().is_empty() {
        return Err(err(vclose + 1, "unexpected text after 'V={...}'"));
    }
    Ok((points, v))
}

impl FromStr for TiltingSpec {
    type Err = ParseError;

    /// A `curve points=[x:4, y:2] V={x}` header, then `point x` lines each
    /// followed by that tube's arcs. `#` starts a comment.
    fn from_str(text: &str) -> Result<TiltingSpec, ParseError> {
        let mut lines =
            text.lines().enumerate().map(|(k, l)| (k + 1, l.split('#').next().unwrap_or(""))).filter(|(_, l)| !l.trim().is_empty());
        let at_line = |k: usize, e: ParseError| ParseError { message: format!("line {k}: {}", e.message), ..e };
        let (k, header) = lines.next().ok_or_else(|| ParseError::new(text, 0, "missing 'curve' header"))?;
        let header = header.trim();
        let (points, v) = parse_header(header).map_err(|e| at_line(k, e))?;
        let mut arcs: BTreeMap<String, Vec<Arc>> = points.iter().map(|(p, _)| (p.clone(), Vec::new())).collect();
        let mut seen = BTreeSet::new();
        let mut current: Option<String> = None;
        for (k, raw) in lines {
            let line = raw.trim();
            if let Some(name) = line.strip_prefix("point ") {
                let name = name.trim();
                if !arcs.contains_key(name) {
                    return Err(at_line(k, ParseError::new(line, offset_in(line, name), "unknown point")));
                }
                if !seen.insert(name.to_string()) {
                    return Err(at_line(k, ParseError::new(line, offset_in(line, name), "second block for this point")));
                }
                current = Some(name.to_string());
                continue;
            }
            let Some(x) = &current else {
                return Err(at_line(k, ParseError::new(line, 0, "arc before any 'point' line")));
            };
            let a = line.parse::<Arc>().map_err(|e| at_line(k, e))?;
            arcs.get_mut(x).expect("known point").push(a);
        }
        let tubes = points
            .into_iter()
            .map(|(p, rank)| {
                let c = ArcCollection::new(rank, arcs.remove(&p).unwrap_or_default()).expect("rank >= 1");
                (p, c)
            })
            .collect();
        Ok(TiltingSpec { tubes, v: v.into_iter().collect() })
    }
}

/// Every valid single-tube spec at a point `x` of rank `n`, with a
/// homogeneous point `h` in `V` so that `x` may lie outside `V`.
pub fn single_tube_specs(n: usize) -> Vec<TiltingSpec> {
    let ctx = TubeCtx::new(n).expect("rank >= 1");
    let homogeneous = ArcCollection::new(1, [Arc::pruefer(0)]).expect("rank 1");
    let exceptional: Vec<Arc> = ctx.arcs_up_to(n.saturating_sub(1), false);
    let mut out = Vec::new();
    for mask in 0u64..(1 << exceptional.len()) {
        let finite: Vec<Arc> = (0..exceptional.len()).filter(|k| mask >> k & 1 == 1).map(|k| exceptional[k]).collect();
        if !ctx.is_rigid(&finite) {
            continue;
        }
        let outside =
            TiltingSpec::new([("h", homogeneous.clone()), ("x", ArcCollection::new(n, finite.clone()).expect("rank >= 1"))], ["h"]);
        if outside.verify().is_valid() {
            out.push(outside);
        }
        let roots = wings::roots(&ctx, &finite);
        let w = wings::base_union(&ctx, &roots);
        let ni = n as i64;
        let pruefer = (0..ni).filter(|s| !w.contains(&(s - 1).rem_euclid(ni))).map(|s| Arc::pruefer(s - 1));
        let inside = TiltingSpec::new(
            [("h", homogeneous.clone()), ("x", ArcCollection::new(n, finite.iter().copied().chain(pruefer)).expect("rank >= 1"))],
            ["h", "x"],
        );
        if inside.verify().is_valid() {
            out.push(inside);
        }
    }
    out
}
