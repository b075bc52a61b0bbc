//! The arc model of a rank-`n` tube and its Prüfer closure.
//!
//! Ext¹ between two objects is the number of negative crossings of their
//! arcs: lifts `[i,j]`, `[i',j']` to the universal cover with
//! `i' < i < j' < j` contribute one each. Hom is recovered through Serre
//! duality, `Hom(X, Y) ≅ D Ext¹(τ⁻Y, X)`.

mod arc;
mod quiver;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use arc::{Arc, End};
pub use quiver::TranslationQuiver;

use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TubeError {
    #[error("tube rank must be at least 1")]
    ZeroRank,
    #[error("Hom between two Prüfer objects is not given by the arc model ({0} -> {1})")]
    PrueferHom(Arc, Arc),
    #[error("{0} is infinite and has no top")]
    NoTop(Arc),
    #[error("extension class not unique: dim Ext¹({0}, {1}) = {2}")]
    ExtensionNotUnique(Arc, Arc, usize),
}

/// A tube of rank `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TubeCtx {
    n: i64,
}

/// Number of integers `k` with `lo < k·n < hi`.
fn multiples_between(lo: i64, hi: i64, n: i64) -> usize {
    if hi <= lo + 1 {
        return 0;
    }
    ((hi - 1).div_euclid(n) - lo.div_euclid(n)).max(0) as usize
}

impl TubeCtx {
    pub fn new(n: usize) -> Result<TubeCtx, TubeError> {
        if n == 0 {
            return Err(TubeError::ZeroRank);
        }
        Ok(TubeCtx { n: n as i64 })
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    /// The representative with `0 <= start < n`.
    pub fn normalize(&self, a: &Arc) -> Arc {
        a.shift(-(a.start.div_euclid(self.n) * self.n))
    }

    /// Number of lifts of `b` crossing the given lift of `a` negatively.
    fn negative(&self, a: &Arc, b: &Arc) -> usize {
        let End::At(jb) = b.end else { return 0 };
        let hi = match a.end {
            End::At(ja) => (a.start - b.start).min(ja - jb),
            End::Infinite => a.start - b.start,
        };
        multiples_between(a.start - jb, hi, self.n)
    }

    /// `(I⁺(a,b), I⁻(a,b))`.
    pub fn crossings(&self, a: &Arc, b: &Arc) -> (usize, usize) {
        (self.negative(b, a), self.negative(a, b))
    }

    /// dim Ext¹(M_a, M_b), the negative crossing number.
    pub fn ext_dim(&self, a: &Arc, b: &Arc) -> usize {
        self.negative(a, b)
    }

    /// dim Hom(M_a, M_b).
    ///
    /// Finite targets and finite-to-Prüfer maps go through Serre duality;
    /// a Prüfer object has no nonzero finite-length quotient, so maps out of
    /// it into finite objects vanish. Maps between two Prüfer objects are
    /// not covered.
    pub fn hom_dim(&self, a: &Arc, b: &Arc) -> Result<usize, TubeError> {
        match (a.is_finite(), b.is_finite()) {
            (false, false) => Err(TubeError::PrueferHom(*a, *b)),
            (false, true) => Ok(0),
            _ => Ok(self.ext_dim(&self.tau_inverse(b), a)),
        }
    }

    pub fn tau(&self, a: &Arc) -> Arc {
        self.normalize(&a.shift(-1))
    }

    pub fn tau_inverse(&self, a: &Arc) -> Arc {
        self.normalize(&a.shift(1))
    }

    /// The simple socle `S_{i+1} = [i, i+2]`.
    pub fn socle(&self, a: &Arc) -> Arc {
        self.normalize(&Arc::fin(a.start, a.start + 2))
    }

    /// The simple top `S_{j−1} = [j−2, j]`.
    pub fn top(&self, a: &Arc) -> Result<Arc, TubeError> {
        let j = a.finite_end().ok_or(TubeError::NoTop(*a))?;
        Ok(self.normalize(&Arc::fin(j - 2, j)))
    }

    /// Subobjects share the start. For a Prüfer arc the finite ones are
    /// listed up to length `bound`, followed by the arc itself.
    pub fn subobjects(&self, a: &Arc, bound: usize) -> Vec<Arc> {
        let last = match a.end {
            End::At(j) => j,
            End::Infinite => a.start + 1 + bound as i64,
        };
        let mut out: Vec<Arc> = (a.start + 2..=last).map(|j| self.normalize(&Arc::fin(a.start, j))).collect();
        if !a.is_finite() {
            out.push(self.normalize(a));
        }
        out
    }

    /// Quotients share the end, shortest first. Every nonzero quotient of
    /// a Prüfer object is again Prüfer; the `n` distinct ones are listed.
    pub fn quotients(&self, a: &Arc) -> Vec<Arc> {
        match a.end {
            End::At(j) => (a.start..=j - 2).rev().map(|i| self.normalize(&Arc::fin(i, j))).collect(),
            End::Infinite => (0..self.n).map(|m| self.normalize(&Arc::pruefer(a.start + m))).collect(),
        }
    }

    /// Middle term of the non-split extension `0 → M_b → E → M_a → 0`.
    pub fn extension_middle(&self, a: &Arc, b: &Arc) -> Result<Vec<Arc>, TubeError> {
        let dim = self.ext_dim(a, b);
        if dim != 1 {
            return Err(TubeError::ExtensionNotUnique(*a, *b, dim));
        }
        let End::At(jb) = b.end else { unreachable!("Ext into a Prüfer object vanishes") };
        // the only multiple of n strictly above a.start − jb that crosses
        let k = (a.start - jb).div_euclid(self.n) + 1;
        let (bi, bj) = (b.start + k * self.n, jb + k * self.n);
        let mut out = vec![self.normalize(&Arc { start: bi, end: a.end })];
        if bj - a.start >= 2 {
            out.push(self.normalize(&Arc::fin(a.start, bj)));
        }
        out.sort();
        Ok(out)
    }

    pub fn is_rigid<'a>(&self, arcs: impl IntoIterator<Item = &'a Arc> + Clone) -> bool {
        arcs.clone().into_iter().all(|a| arcs.clone().into_iter().all(|b| self.ext_dim(a, b) == 0))
    }

    /// Rigid with exactly `n` distinct arcs.
    pub fn is_maximal_rigid(&self, c: &ArcCollection) -> bool {
        c.arcs.len() == self.rank() && self.is_rigid(&c.arcs)
    }

    /// All canonical arcs of length `1..=max_len`, plus the `n` Prüfer arcs
    /// when asked, in lexicographic order.
    pub fn arcs_up_to(&self, max_len: usize, include_infinite: bool) -> Vec<Arc> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for len in 1..=max_len as i64 {
                out.push(Arc::fin(i, i + len + 1));
            }
            if include_infinite {
                out.push(Arc::pruefer(i));
            }
        }
        out.sort();
        out
    }

    /// Rigid collections that cannot be enlarged by any candidate arc,
    /// where candidates are the self-rigid arcs of length at most `max_len`
    /// (and the Prüfer arcs when `include_infinite`). With Prüfer arcs these
    /// are the maximal rigid objects; without them the bound is `n − 1`.
    pub fn enumerate_maximal_rigid(&self, max_len: usize, include_infinite: bool) -> Vec<ArcCollection> {
        let cand: Vec<Arc> = self.arcs_up_to(max_len, include_infinite).into_iter().filter(|a| self.ext_dim(a, a) == 0).collect();
        let m = cand.len();
        let compat: Vec<Vec<bool>> = (0..m)
            .map(|x| (0..m).map(|y| self.ext_dim(&cand[x], &cand[y]) == 0 && self.ext_dim(&cand[y], &cand[x]) == 0).collect())
            .collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend_cliques(&cand, &compat, 0, &mut chosen, &mut out);
        out
    }

    fn extend_cliques(&self, cand: &[Arc], compat: &[Vec<bool>], from: usize, chosen: &mut Vec<usize>, out: &mut Vec<ArcCollection>) {
        let fits = |x: usize, chosen: &[usize]| chosen.iter().all(|&y| compat[x][y]);
        let mut extended = false;
        for x in from..cand.len() {
            if fits(x, chosen) {
                extended = true;
                chosen.push(x);
                self.extend_cliques(cand, compat, x + 1, chosen, out);
                chosen.pop();
            }
        }
        if !extended {
            let maximal = (0..cand.len()).all(|x| chosen.contains(&x) || !fits(x, chosen));
            if maximal && !chosen.is_empty() {
                out.push(ArcCollection::new(self.rank(), chosen.iter().map(|&x| cand[x])).expect("rank is nonzero"));
            }
        }
    }

    /// The translation quiver on arcs `[i,j]` with `j − i <= max_span`.
    pub fn translation_quiver(&self, max_span: usize) -> TranslationQuiver {
        TranslationQuiver::build(self, max_span as i64)
    }
}

/// A set of arcs in one tube, held in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcCollection {
    pub rank: usize,
    pub arcs: BTreeSet<Arc>,
}

impl ArcCollection {
    pub fn new(rank: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<ArcCollection, TubeError> {
        let ctx = TubeCtx::new(rank)?;
        Ok(ArcCollection { rank, arcs: arcs.into_iter().map(|a| ctx.normalize(&a)).collect() })
    }

    pub fn ctx(&self) -> TubeCtx {
        TubeCtx { n: self.rank as i64 }
    }

    pub fn is_rigid(&self) -> bool {
        self.ctx().is_rigid(&self.arcs)
    }
}

impl fmt::Display for ArcCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tube rank={}", self.rank)?;
        for a in &self.arcs {
            writeln!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for ArcCollection {
    type Err = ParseError;

    /// Header `tube rank=N`, then one arc per line; `#` starts a comment.
    fn from_str(text: &str) -> Result<ArcCollection, ParseError> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| ParseError::new(text, 0, "missing 'tube rank=N' header"))?;
        let rank = header
            .strip_prefix("tube")
            .map(str::trim)
            .and_then(|r| r.strip_prefix("rank="))
            .and_then(|r| r.trim().parse::<usize>().ok())
            .filter(|&r| r > 0)
            .ok_or_else(|| ParseError::new(header, 0, "expected 'tube rank=N' with N >= 1"))?;
        let arcs = lines.map(str::parse::<Arc>).collect::<Result<Vec<_>, _>>()?;
        Ok(ArcCollection::new(rank, arcs).expect("rank checked above"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize) -> TubeCtx {
        TubeCtx::new(n).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(t(3).normalize(&Arc::fin(3, 5)), Arc::fin(0, 2));
        assert_eq!(t(3).normalize(&Arc::fin(0, 2)), Arc::fin(0, 2));
        assert_eq!(t(3).normalize(&Arc::pruefer(-1)), Arc::pruefer(2));
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(t(3).crossings(&Arc::fin(0, 2), &Arc::fin(0, 2)), (0, 0));
        assert_eq!(t(3).crossings(&Arc::fin(1, 3), &Arc::fin(0, 2)).1, 1);
        assert_eq!(t(2).crossings(&Arc::pruefer(0), &Arc::pruefer(1)), (0, 0));
        assert_eq!(t(2).crossings(&Arc::pruefer(1), &Arc::pruefer(0)), (0, 0));
    }

    #[test]
    fn ext_examples() {
        assert_eq!(t(3).ext_dim(&Arc::fin(0, 2), &Arc::fin(0, 2)), 0);
        assert_eq!(t(3).ext_dim(&Arc::fin(1, 3), &Arc::fin(0, 2)), 1);
        assert!(t(2).ext_dim(&Arc::fin(0, 4), &Arc::fin(0, 4)) >= 1);
    }

    #[test]
    fn hom_examples() {
        let c = t(3);
        assert_eq!(c.hom_dim(&Arc::fin(0, 2), &Arc::fin(0, 2)), Ok(1));
        assert_eq!(c.hom_dim(&Arc::fin(0, 2), &Arc::fin(0, 3)), Ok(1));
        assert_eq!(c.hom_dim(&Arc::fin(0, 2), &Arc::fin(1, 3)), Ok(0));
        assert_eq!(c.hom_dim(&Arc::pruefer(0), &Arc::fin(0, 2)), Ok(0));
        assert_eq!(c.hom_dim(&Arc::fin(0, 2), &Arc::pruefer(0)), Ok(1));
        assert!(c.hom_dim(&Arc::pruefer(0), &Arc::pruefer(1)).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(t(3).tau(&Arc::fin(1, 3)), Arc::fin(0, 2));
        assert_eq!(t(4).tau(&Arc::pruefer(0)), Arc::pruefer(3));
        let c = t(4);
        let a = Arc::fin(1, 7);
        assert_eq!((0..4).fold(a, |x, _| c.tau(&x)), c.normalize(&a));
    }

    #[test]
    fn socle_top_sub_quot() {
        let c = t(5);
        let a = Arc::fin(0, 4);
        assert_eq!(c.socle(&a), Arc::fin(0, 2));
        assert_eq!(c.top(&a), Ok(Arc::fin(2, 4)));
        assert_eq!(c.socle(&Arc::fin(1, 3)), Arc::fin(1, 3));
        assert!(c.top(&Arc::pruefer(0)).is_err());
        assert_eq!(c.subobjects(&a, 0), vec![Arc::fin(0, 2), Arc::fin(0, 3), Arc::fin(0, 4)]);
        assert_eq!(c.quotients(&a), vec![Arc::fin(2, 4), Arc::fin(1, 4), Arc::fin(0, 4)]);
        assert_eq!(c.subobjects(&Arc::fin(1, 3), 0), vec![Arc::fin(1, 3)]);
        assert_eq!(c.subobjects(&Arc::pruefer(1), 2), vec![Arc::fin(1, 3), Arc::fin(1, 4), Arc::pruefer(1)]);
    }

    #[test]
    fn extension_middles() {
        assert_eq!(t(3).extension_middle(&Arc::fin(1, 3), &Arc::fin(0, 2)), Ok(vec![Arc::fin(0, 3)]));
        assert_eq!(t(9).extension_middle(&Arc::fin(2, 6), &Arc::fin(0, 4)), Ok(vec![Arc::fin(0, 6), Arc::fin(2, 4)]));
        assert!(t(3).extension_middle(&Arc::fin(0, 2), &Arc::fin(1, 3)).is_err());
    }

    #[test]
    fn rigidity_examples() {
        let c = t(3);
        assert!(c.is_rigid(&[Arc::fin(0, 2), Arc::fin(0, 3)]));
        for n in 2..=5 {
            let simples: Vec<Arc> = (0..n as i64).map(|i| Arc::fin(i, i + 2)).collect();
            assert!(!t(n).is_rigid(&simples));
            let pr = ArcCollection::new(n, (0..n as i64).map(Arc::pruefer)).unwrap();
            assert!(t(n).is_maximal_rigid(&pr));
        }
    }

    #[test]
    fn rank_one_enumeration() {
        let all = t(1).enumerate_maximal_rigid(4, true);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].arcs.iter().copied().collect::<Vec<_>>(), vec![Arc::pruefer(0)]);
        assert!(t(1).enumerate_maximal_rigid(4, false).is_empty());
    }

    #[test]
    fn collection_file_round_trip() {
        let text = "tube rank=3\n[3,5]\n# comment\n[1,inf)\n";
        let c: ArcCollection = text.parse().unwrap();
        assert_eq!(c.to_string(), "tube rank=3\n[0,2]\n[1,inf)\n");
        assert!("tube rank=0\n".parse::<ArcCollection>().is_err());
        assert!("rank=3\n".parse::<ArcCollection>().is_err());
    }
}
