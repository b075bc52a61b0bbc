//! Brute-force Hom/Ext¹ for the rank-`n` tube, realized as nilpotent
//! representations of the cyclic quiver on `n` vertices.
//!
//! Arrows run from vertex `v` to vertex `v − 1 (mod n)`, so that
//! `Ext¹(S_v, S_{v−1}) ≠ 0` and the translate of `S_v` is `S_{v−1}`, matching
//! the labelling of the arc model. This module knows nothing about crossings;
//! it is the ground truth the arc formulas are tested against.

use thiserror::Error;

use crate::exactlin::{int, Mat};
use crate::quiver::{Quiver, Rep};
use rayon::prelude::*;

use crate::tube::{Arc, End, TubeCtx};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the oracle only handles finite arcs, got {0}")]
    InfiniteArc(Arc),
    #[error("rank must be at least 1")]
    ZeroRank,
}

/// A nilpotent representation of the cyclic quiver.
///
/// `maps[v]` is the matrix of the arrow `v → v − 1 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpRep {
    pub n: usize,
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

fn cyclic_quiver(n: usize) -> Quiver {
    Quiver { vertices: n, arrows: (0..n).map(|v| (v, (v + n - 1) % n)).collect() }
}

fn vertex(m: i64, n: usize) -> usize {
    m.rem_euclid(n as i64) as usize
}

impl NilpRep {
    fn as_rep(&self) -> Rep {
        Rep { dims: self.dims.clone(), maps: self.maps.clone() }
    }

    /// True when going around the cycle `total_dim` times gives zero.
    pub fn is_nilpotent(&self) -> bool {
        let total: usize = self.dims.iter().sum();
        (0..self.n).all(|v0| {
            let mut acc = Mat::identity(self.dims[v0]);
            let mut v = v0;
            for _ in 0..(total.max(1) * self.n) {
                acc = self.maps[v].mul(&acc);
                v = (v + self.n - 1) % self.n;
            }
            acc.is_zero()
        })
    }
}

/// The uniserial representation with composition factors
/// `S_{i+1}, ..., S_{j−1}` (socle first), with shift matrices as arrow maps.
pub fn rep_of_arc(a: &Arc, n: usize) -> Result<NilpRep, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroRank);
    }
    let End::At(j) = a.end else { return Err(OracleError::InfiniteArc(*a)) };
    let factors: Vec<i64> = (a.start + 1..j).collect();
    let mut dims = vec![0usize; n];
    let mut slot = Vec::with_capacity(factors.len());
    for &m in &factors {
        let v = vertex(m, n);
        slot.push(dims[v]);
        dims[v] += 1;
    }
    let mut maps: Vec<Mat> = (0..n).map(|v| Mat::zeros(dims[(v + n - 1) % n], dims[v])).collect();
    for (k, &m) in factors.iter().enumerate().skip(1) {
        // the basis vector of factor m maps to the one of factor m − 1
        maps[vertex(m, n)].set(slot[k - 1], slot[k], int(1));
    }
    Ok(NilpRep { n, dims, maps })
}

pub fn hom_dim_oracle(x: &NilpRep, y: &NilpRep) -> usize {
    cyclic_quiver(x.n).hom_dim(&x.as_rep(), &y.as_rep())
}

/// `Σ_arrows d_s e_t − Σ_v d_v e_v + dim Hom(x, y)`.
pub fn ext_dim_oracle(x: &NilpRep, y: &NilpRep) -> usize {
    let q = cyclic_quiver(x.n);
    let hom = q.hom_dim(&x.as_rep(), &y.as_rep()) as i64;
    let ext = hom - q.euler(&x.dims, &y.dims);
    assert!(ext >= 0, "negative Ext dimension {ext}: oracle is inconsistent");
    ext as usize
}

/// The Euler form of the cyclic quiver with arrows `v → v − 1`.
pub fn euler_cyclic(x: &NilpRep, y: &NilpRep) -> i64 {
    cyclic_quiver(x.n).euler(&x.dims, &y.dims)
}

/// Ext¹ computed directly as the cokernel of the coboundary map, without
/// going through Hom.
pub fn ext_dim_cokernel(x: &NilpRep, y: &NilpRep) -> usize {
    cyclic_quiver(x.n).ext_dim(&x.as_rep(), &y.as_rep())
}

/// One disagreement between the arc formulas and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub a: Arc,
    pub b: Arc,
    pub what: &'static str,
    pub arcs: usize,
    pub oracle: usize,
}

/// Result of comparing the arc model with the oracle on every ordered pair
/// of finite arcs up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub rank: usize,
    pub max_len: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl std::fmt::Display for OracleReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "rank {} max-len {}: {} pairs, {} mismatches", self.rank, self.max_len, self.pairs, self.mismatches.len())?;
        for m in &self.mismatches {
            writeln!(f, "{} {} {}: arcs {} oracle {}", m.what, m.a, m.b, m.arcs, m.oracle)?;
        }
        Ok(())
    }
}

/// Compares Hom and Ext¹ from crossings with the oracle, and checks Serre
/// duality `Ext¹(a,b) = Hom(b, τa)` with arc Ext against oracle Hom.
pub fn compare_with_arcs(n: usize, max_len: usize) -> Result<OracleReport, OracleError> {
    let ctx = TubeCtx::new(n).map_err(|_| OracleError::ZeroRank)?;
    let arcs = ctx.arcs_up_to(max_len, false);
    let reps: Vec<NilpRep> = arcs.iter().map(|a| rep_of_arc(a, n)).collect::<Result<_, _>>()?;
    let index: std::collections::HashMap<Arc, usize> = arcs.iter().enumerate().map(|(k, a)| (*a, k)).collect();
    let mismatches: Vec<Mismatch> = (0..arcs.len() * arcs.len())
        .into_par_iter()
        .flat_map_iter(|k| {
            let (x, y) = (k / arcs.len(), k % arcs.len());
            let (a, b) = (arcs[x], arcs[y]);
            let ext = ctx.ext_dim(&a, &b);
            let hom = ctx.hom_dim(&a, &b).expect("finite arcs");
            let serre = hom_dim_oracle(&reps[y], &reps[index[&ctx.tau(&a)]]);
            let checks =
                [("ext", ext, ext_dim_oracle(&reps[x], &reps[y])), ("hom", hom, hom_dim_oracle(&reps[x], &reps[y])), ("serre", ext, serre)];
            checks.into_iter().filter(|c| c.1 != c.2).map(move |(what, arcs, oracle)| Mismatch { a, b, what, arcs, oracle })
        })
        .collect();
    Ok(OracleReport { rank: n, max_len, pairs: arcs.len() * arcs.len(), mismatches })
}
