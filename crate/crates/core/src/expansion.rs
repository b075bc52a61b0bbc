//! Expansion of a rank-`(n−1)` tube into a rank-`n` tube at a simple `S_λ`,
//! and the two adjoints of the inclusion.
//!
//! The reduced tube has a distinguished simple `S̄` whose image is the
//! length-two arc with socle `S_ρ = τS_λ` and top `S_λ`. Marked points of the
//! reduced tube map to blocks of marked points of the big tube: the point
//! at the start of `S̄`'s top splits into the two big points around `S_ρ`'s
//! top, every other point maps to a single point.
//!
//! Worked table for `n = 4`, `λ = [1,3]` (so `S_λ = S_2`, `S_ρ = S_1`,
//! `S̄ = [0,2]` in rank 3):
//!
//! | reduced point | 0 | 1    | 2 | 3 | 4    |
//! |---------------|---|------|---|---|------|
//! | big points    | 0 | 1, 2 | 3 | 4 | 5, 6 |
//!
//! An arc `[a,b]` is sent to `[hi(a), lo(b)]`, where `lo`/`hi` are the ends
//! of the block; `[0,2] ↦ [0,3]`, `[1,3] ↦ [2,4]`, `[3,5] ↦ [4,7]`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::ParseError;
use crate::tube::{Arc, ArcCollection, End, TubeCtx};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error("an expansion needs rank at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("{0} is not a simple arc")]
    NotSimple(Arc),
    #[error("collection has rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },
}

/// Which adjoint of the inclusion to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adjoint {
    /// `i^*`: kills `S_λ`.
    Left,
    /// `i^!`: kills `S_ρ`.
    Right,
}

impl FromStr for Adjoint {
    type Err = String;

    fn from_str(s: &str) -> Result<Adjoint, String> {
        match s {
            "left" => Ok(Adjoint::Left),
            "right" => Ok(Adjoint::Right),
            _ => Err(format!("expected 'left' or 'right', got '{s}'")),
        }
    }
}

impl fmt::Display for Adjoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Adjoint::Left => "left",
            Adjoint::Right => "right",
        })
    }
}

/// The expansion of a rank-`(n−1)` tube at the simple `lambda` of the rank-`n` tube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExpansionSpec {
    n: i64,
    lambda: Arc,
}

impl ExpansionSpec {
    pub fn new(n: usize, lambda: Arc) -> Result<ExpansionSpec, ExpansionError> {
        if n < 2 {
            return Err(ExpansionError::RankTooSmall(n));
        }
        if !lambda.is_simple() {
            return Err(ExpansionError::NotSimple(lambda));
        }
        let lambda = TubeCtx::new(n).expect("n >= 2").normalize(&lambda);
        Ok(ExpansionSpec { n: n as i64, lambda })
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn reduced_rank(&self) -> usize {
        self.rank() - 1
    }

    pub fn big(&self) -> TubeCtx {
        TubeCtx::new(self.rank()).expect("n >= 2")
    }

    pub fn reduced(&self) -> TubeCtx {
        TubeCtx::new(self.reduced_rank()).expect("n >= 2")
    }

    pub fn lambda(&self) -> Arc {
        self.lambda
    }

    /// `S_ρ = τS_λ`.
    pub fn rho(&self) -> Arc {
        self.big().tau(&self.lambda)
    }

    /// The distinguished simple `S̄` of the reduced tube.
    pub fn sbar(&self) -> Arc {
        self.reduced().normalize(&Arc::simple(self.sbar_point()))
    }

    /// `l`, with `S_λ = S_l`.
    fn l(&self) -> i64 {
        self.lambda.start + 1
    }

    fn m(&self) -> i64 {
        self.n - 1
    }

    fn sbar_point(&self) -> i64 {
        (self.l() - 1).rem_euclid(self.m())
    }

    /// The block `[lo, hi]` of big points for reduced point `q`.
    fn block(&self, q: i64) -> (i64, i64) {
        let (t, r) = ((q - self.sbar_point()).div_euclid(self.m()), (q - self.sbar_point()).rem_euclid(self.m()));
        let base = self.l() - 1 + t * self.n;
        if r == 0 {
            (base, base + 1)
        } else {
            (base + r + 1, base + r + 1)
        }
    }

    /// The image of a reduced-tube arc in the big tube.
    pub fn push_forward(&self, a: &Arc) -> Arc {
        let start = self.block(a.start).1;
        let out = match a.end {
            End::At(j) => Arc::fin(start, self.block(j).0),
            End::Infinite => Arc::pruefer(start),
        };
        self.big().normalize(&out)
    }

    /// The reduced factor carrying big factor `S_k`, or `None` if `adj` kills it.
    fn reduced_factor(&self, k: i64, adj: Adjoint) -> Option<i64> {
        let (t, u) = ((k - (self.l() - 1)).div_euclid(self.n), (k - (self.l() - 1)).rem_euclid(self.n));
        let base = self.sbar_point() + t * self.m();
        match (u, adj) {
            (1, Adjoint::Left) | (0, Adjoint::Right) => None,
            (0, _) | (1, _) => Some(base),
            (u, _) => Some(base + u - 1),
        }
    }

    /// Deletes the composition factors killed by `adj` and relabels the
    /// rest; `None` when nothing survives.
    pub fn reduce(&self, a: &Arc, adj: Adjoint) -> Option<Arc> {
        let first = (a.start + 1..).find_map(|k| {
            if a.finite_end().is_some_and(|j| k >= j) {
                return Some(None);
            }
            self.reduced_factor(k, adj).map(Some)
        })??;
        let out = match a.end {
            End::At(j) => {
                let count = (a.start + 1..j).filter(|&k| self.reduced_factor(k, adj).is_some()).count() as i64;
                Arc::fin(first - 1, first + count)
            }
            End::Infinite => Arc::pruefer(first - 1),
        };
        Some(self.reduced().normalize(&out))
    }

    /// `i^* = i_λ`.
    pub fn reduce_left(&self, a: &Arc) -> Option<Arc> {
        self.reduce(a, Adjoint::Left)
    }

    /// `i^! = i_ρ`.
    pub fn reduce_right(&self, a: &Arc) -> Option<Arc> {
        self.reduce(a, Adjoint::Right)
    }

    pub fn push_collection(&self, c: &ArcCollection) -> Result<ArcCollection, ExpansionError> {
        if c.rank != self.reduced_rank() {
            return Err(ExpansionError::RankMismatch { expected: self.reduced_rank(), found: c.rank });
        }
        Ok(ArcCollection::new(self.rank(), c.arcs.iter().map(|a| self.push_forward(a))).expect("rank >= 2"))
    }

    /// Image of a collection under an adjoint; arcs sent to zero disappear
    /// and coinciding images merge.
    pub fn reduce_collection(&self, c: &ArcCollection, adj: Adjoint) -> Result<ArcCollection, ExpansionError> {
        if c.rank != self.rank() {
            return Err(ExpansionError::RankMismatch { expected: self.rank(), found: c.rank });
        }
        Ok(ArcCollection::new(self.reduced_rank(), c.arcs.iter().filter_map(|a| self.reduce(a, adj))).expect("rank >= 1"))
    }
}

impl fmt::Display for ExpansionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "expand rank={} lambda={}", self.n, self.lambda)
    }
}

impl FromStr for ExpansionSpec {
    type Err = ParseError;

    /// `expand rank=4 lambda=[1,3]`.
    fn from_str(text: &str) -> Result<ExpansionSpec, ParseError> {
        let err = |pos: usize, msg: &str| ParseError::new(text, pos, msg);
        let t = text.trim_start();
        let base = text.len() - t.len();
        let rest = t.strip_prefix("expand").ok_or_else(|| err(base, "expected 'expand'"))?;
        let (mut rank, mut lambda) = (None, None);
        let mut offset = base + "expand".len();
        for word in rest.split_whitespace() {
            let pos = offset + rest[offset - base - "expand".len()..].find(word).unwrap_or(0);
            offset = pos + word.len();
            if let Some(v) = word.strip_prefix("rank=") {
                rank = Some(v.parse::<usize>().map_err(|_| err(pos + 5, "expected a rank"))?);
            } else if let Some(v) = word.strip_prefix("lambda=") {
                lambda = Some(v.parse::<Arc>().map_err(|e| err(pos + 7 + e.position, &e.message))?);
            } else {
                return Err(err(pos, "expected 'rank=' or 'lambda='"));
            }
        }
        let rank = rank.ok_or_else(|| err(text.len(), "missing 'rank='"))?;
        let lambda = lambda.ok_or_else(|| err(text.len(), "missing 'lambda='"))?;
        ExpansionSpec::new(rank, lambda).map_err(|e| err(base, &e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, lambda: Arc) -> ExpansionSpec {
        ExpansionSpec::new(n, lambda).unwrap()
    }

    #[test]
    fn worked_table() {
        let s = spec(4, Arc::fin(1, 3));
        assert_eq!(s.sbar(), Arc::fin(0, 2));
        assert_eq!(s.push_forward(&Arc::fin(0, 2)), Arc::fin(0, 3));
        assert_eq!(s.push_forward(&Arc::fin(1, 3)), Arc::fin(2, 4));
        assert_eq!(s.push_forward(&Arc::fin(0, 5)), Arc::fin(0, 7));
        assert_eq!(s.push_forward(&Arc::pruefer(0)), Arc::pruefer(0));
        assert_eq!(s.push_forward(&Arc::pruefer(1)), Arc::pruefer(2));
    }

    #[test]
    fn sbar_pushes_to_rho_lambda_extension() {
        for n in 2..=5 {
            for i in 0..n as i64 {
                let s = spec(n, Arc::fin(i, i + 2));
                let image = s.push_forward(&s.sbar());
                let big = s.big();
                assert_eq!(image.length(), Some(2));
                assert_eq!(big.socle(&image), s.rho());
                assert_eq!(big.top(&image).unwrap(), s.lambda());
            }
        }
    }

    #[test]
    fn adjoints_on_simples() {
        let s = spec(4, Arc::fin(1, 3));
        assert_eq!(s.reduce_left(&s.lambda()), None);
        assert_eq!(s.reduce_left(&s.rho()), Some(s.sbar()));
        assert_eq!(s.reduce_right(&s.rho()), None);
        assert_eq!(s.reduce_right(&s.lambda()), Some(s.sbar()));
        // S_3 = [2,4] is neither S_λ nor S_ρ
        assert_eq!(s.reduce_left(&Arc::fin(2, 4)), Some(Arc::fin(1, 3)));
        assert_eq!(s.reduce_right(&Arc::fin(2, 4)), Some(Arc::fin(1, 3)));
    }

    #[test]
    fn pruefer_with_socle_lambda_merges() {
        let s = spec(3, Arc::fin(0, 2));
        let all = ArcCollection::new(3, (0..3).map(Arc::pruefer)).unwrap();
        let reduced = s.reduce_collection(&all, Adjoint::Left).unwrap();
        assert_eq!(reduced, ArcCollection::new(2, (0..2).map(Arc::pruefer)).unwrap());
    }

    #[test]
    fn interior_factor_is_deleted() {
        let s = spec(3, Arc::fin(0, 2));
        // [0,4] has factors S_1, S_2, S_3 = S_λ, S_2, S_0 ≡ S_3
        assert_eq!(s.reduce_left(&Arc::fin(0, 4)).unwrap().length(), Some(2));
        assert_eq!(s.reduce_right(&Arc::fin(0, 4)).unwrap().length(), Some(2));
    }

    #[test]
    fn parse_round_trip() {
        let s: ExpansionSpec = "expand rank=4 lambda=[1,3]".parse().unwrap();
        assert_eq!(s, spec(4, Arc::fin(1, 3)));
        assert_eq!(s.to_string().parse::<ExpansionSpec>().unwrap(), s);
        let e = "expand rank=4 lambda=[1,4]".parse::<ExpansionSpec>().unwrap_err();
        assert!(e.message.contains("not a simple"));
        assert!("expand rank=1 lambda=[0,2]".parse::<ExpansionSpec>().is_err());
        let e = "expand rank=4 lam=[1,3]".parse::<ExpansionSpec>().unwrap_err();
        assert_eq!(e.position, 14);
    }
}
