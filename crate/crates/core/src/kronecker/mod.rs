//! Modules over the Kronecker algebra.
//!
//! A representation has spaces `V1`, `V2` and two maps `α, β: V1 → V2`,
//! stored as `d2 × d1` matrices. With this orientation the simple at vertex
//! 2 is projective (it is `P1`, dimension vector `(0,1)`), the simple at
//! vertex 1 is injective (`Q1`, dimension vector `(1,0)`), and the Euler form
//! is `⟨d,e⟩ = d1·e1 + d2·e2 − 2·d1·e2`.

mod complex;
mod glue;
mod parse;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use complex::{
    chain_maps, cocone, derived_hom_dim, in_d_sigma, in_perp_gt0, in_y_sigma, phi_surjective, shift1_basis, universal_map, ChainMap, Entry,
    Proj, ProjSum, Summand, TwoTermComplex,
};
pub use glue::{
    admissible, classify_silting, glue_kronecker, hom_terms, normalize, to_complex, ClassEntry, ClassKind, GluedSilting, ObjectSum, Row,
    Term,
};
pub use parse::{parse_complex, parse_object, parse_row, parse_terms};

use crate::exactlin::{int, Mat, Scalar};
use crate::quiver::{Morphism, Quiver, Rep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KroneckerError {
    #[error("{0} is not finite-dimensional")]
    NotFiniteDimensional(KroneckerObject),
    #[error("{0} is symbolic; use the symbolic classification")]
    Symbolic(KroneckerObject),
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("the point (0:0) does not exist")]
    ZeroPoint,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("could not decompose: a summand of dimension vector {0} is left over")]
    Undecomposed(DimVector),
    #[error("hypothesis {hypothesis} fails: {detail}")]
    Hypothesis { hypothesis: &'static str, detail: String },
    #[error("inadmissible pair for row {row}: {detail}")]
    Inadmissible { row: String, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub d1: usize,
    pub d2: usize,
}

impl DimVector {
    pub fn new(d1: usize, d2: usize) -> DimVector {
        DimVector { d1, d2 }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// A rational point `(a:b)` of the projective line, stored as coprime
/// integers with the first nonzero coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    a: BigInt,
    b: BigInt,
}

impl Point {
    pub fn new(a: Scalar, b: Scalar) -> Result<Point, KroneckerError> {
        if a.is_zero() && b.is_zero() {
            return Err(KroneckerError::ZeroPoint);
        }
        let l = Scalar::from_integer(a.denom().lcm(b.denom()));
        let (mut x, mut y) = ((a * &l).to_integer(), (b * &l).to_integer());
        let g = x.gcd(&y);
        x /= &g;
        y /= &g;
        if x.is_negative() || (x.is_zero() && y.is_negative()) {
            x = -x;
            y = -y;
        }
        Ok(Point { a: x, b: y })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Point, KroneckerError> {
        Point::new(int(a), int(b))
    }

    pub fn coords(&self) -> (Scalar, Scalar) {
        (Scalar::from_integer(self.a.clone()), Scalar::from_integer(self.b.clone()))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a, self.b)
    }
}

/// An indecomposable, or one of the two symbolic large modules.
///
/// The variant order is the canonical summand order used when printing sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KroneckerObject {
    Preprojective(usize),
    Regular(Point, usize),
    Pruefer(Point),
    Preinjective(usize),
    Generic,
    Lukas,
}

impl KroneckerObject {
    pub fn is_finite(&self) -> bool {
        matches!(self, KroneckerObject::Preprojective(_) | KroneckerObject::Preinjective(_) | KroneckerObject::Regular(..))
    }
}

impl fmt::Display for KroneckerObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KroneckerObject::Preprojective(i) => write!(f, "P{i}"),
            KroneckerObject::Preinjective(i) => write!(f, "Q{i}"),
            KroneckerObject::Regular(p, l) => write!(f, "R({p},{l})"),
            KroneckerObject::Pruefer(p) => write!(f, "Pruefer({p})"),
            KroneckerObject::Generic => write!(f, "Generic"),
            KroneckerObject::Lukas => write!(f, "Lukas"),
        }
    }
}

/// A finite-dimensional representation `α, β: V1 → V2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitRep {
    pub dim: DimVector,
    pub m_alpha: Mat,
    pub m_beta: Mat,
}

pub(crate) fn kronecker_quiver() -> Quiver {
    Quiver { vertices: 2, arrows: vec![(0, 1), (0, 1)] }
}

impl ExplicitRep {
    pub fn new(dim: DimVector, m_alpha: Mat, m_beta: Mat) -> Result<ExplicitRep, KroneckerError> {
        for (name, m) in [("alpha", &m_alpha), ("beta", &m_beta)] {
            if m.rows() != dim.d2 || m.cols() != dim.d1 {
                return Err(KroneckerError::Shape(format!("{name} is {}x{}, expected {}x{}", m.rows(), m.cols(), dim.d2, dim.d1)));
            }
        }
        Ok(ExplicitRep { dim, m_alpha, m_beta })
    }

    pub fn zero() -> ExplicitRep {
        ExplicitRep { dim: DimVector::new(0, 0), m_alpha: Mat::zeros(0, 0), m_beta: Mat::zeros(0, 0) }
    }

    pub(crate) fn as_rep(&self) -> Rep {
        Rep { dims: vec![self.dim.d1, self.dim.d2], maps: vec![self.m_alpha.clone(), self.m_beta.clone()] }
    }

    pub(crate) fn from_rep(r: Rep) -> ExplicitRep {
        let mut maps = r.maps.into_iter();
        ExplicitRep {
            dim: DimVector::new(r.dims[0], r.dims[1]),
            m_alpha: maps.next().expect("two arrows"),
            m_beta: maps.next().expect("two arrows"),
        }
    }

    pub fn direct_sum(parts: &[ExplicitRep]) -> ExplicitRep {
        if parts.is_empty() {
            return ExplicitRep::zero();
        }
        ExplicitRep::from_rep(Rep::direct_sum(&parts.iter().map(ExplicitRep::as_rep).collect::<Vec<_>>()))
    }

    pub fn is_zero(&self) -> bool {
        self.dim.d1 == 0 && self.dim.d2 == 0
    }

    /// The quotient by the subrepresentation spanned by the columns of
    /// `sub1 ⊆ V1` and `sub2 ⊆ V2`, which must be stable under `α, β`.
    pub(crate) fn quotient(&self, sub1: &Mat, sub2: &Mat) -> ExplicitRep {
        let (p1, k1) = adapted_basis(sub1, self.dim.d1);
        let (p2, k2) = adapted_basis(sub2, self.dim.d2);
        let inv2 = p2.inverse().expect("adapted basis is invertible");
        let keep1: Vec<usize> = (k1..self.dim.d1).collect();
        let keep2: Vec<usize> = (k2..self.dim.d2).collect();
        let induced = |m: &Mat| inv2.mul(m).mul(&p1).select(&keep2, &keep1);
        ExplicitRep { dim: DimVector::new(keep1.len(), keep2.len()), m_alpha: induced(&self.m_alpha), m_beta: induced(&self.m_beta) }
    }
}

/// A basis of the whole space whose first vectors span the columns of `sub`;
/// returns the change-of-basis matrix and the dimension of the span.
fn adapted_basis(sub: &Mat, dim: usize) -> (Mat, usize) {
    let span = sub.select(&(0..sub.rows()).collect::<Vec<_>>(), &sub.pivot_columns());
    let all = span.hstack(&Mat::identity(dim));
    let cols = all.pivot_columns();
    (all.select(&(0..dim).collect::<Vec<_>>(), &cols), span.cols())
}

pub fn dim_vector(x: &KroneckerObject) -> Result<DimVector, KroneckerError> {
    match x {
        KroneckerObject::Preprojective(0) | KroneckerObject::Preinjective(0) | KroneckerObject::Regular(_, 0) => {
            Err(KroneckerError::ZeroIndex)
        }
        KroneckerObject::Preprojective(i) => Ok(DimVector::new(i - 1, *i)),
        KroneckerObject::Preinjective(i) => Ok(DimVector::new(*i, i - 1)),
        KroneckerObject::Regular(_, l) => Ok(DimVector::new(*l, *l)),
        other => Err(KroneckerError::NotFiniteDimensional(other.clone())),
    }
}

pub fn euler_form(d: DimVector, e: DimVector) -> i64 {
    (d.d1 * e.d1 + d.d2 * e.d2) as i64 - 2 * (d.d1 * e.d2) as i64
}

/// Nilpotent Jordan block with ones on the superdiagonal.
fn jordan(l: usize) -> Mat {
    Mat::from_fn(l, l, |r, c| if c == r + 1 { Scalar::one() } else { Scalar::zero() })
}

pub fn explicit_rep(x: &KroneckerObject) -> Result<ExplicitRep, KroneckerError> {
    let dim = dim_vector(x)?;
    let (alpha, beta) = match x {
        KroneckerObject::Preprojective(i) => {
            // α = [I; 0], β = [0; I] as i × (i−1) matrices
            let m = i - 1;
            (Mat::from_fn(*i, m, |r, c| int((r == c) as i64)), Mat::from_fn(*i, m, |r, c| int((r == c + 1) as i64)))
        }
        KroneckerObject::Preinjective(i) => {
            // α = [I | 0], β = [0 | I] as (i−1) × i matrices
            let m = i - 1;
            (Mat::from_fn(m, *i, |r, c| int((r == c) as i64)), Mat::from_fn(m, *i, |r, c| int((c == r + 1) as i64)))
        }
        KroneckerObject::Regular(p, l) => {
            let (a, b) = p.coords();
            if a.is_zero() {
                (jordan(*l), Mat::identity(*l))
            } else {
                (Mat::identity(*l), Mat::identity(*l).scale(&(b / a)).add(&jordan(*l)))
            }
        }
        _ => unreachable!("dim_vector rejected infinite objects"),
    };
    ExplicitRep::new(dim, alpha, beta)
}

pub fn hom_dim(x: &ExplicitRep, y: &ExplicitRep) -> usize {
    kronecker_quiver().hom_dim(&x.as_rep(), &y.as_rep())
}

pub(crate) fn hom_basis(x: &ExplicitRep, y: &ExplicitRep) -> Vec<Morphism> {
    kronecker_quiver().hom_basis(&x.as_rep(), &y.as_rep())
}

/// `dim Hom(x,y) − ⟨dim x, dim y⟩`. Panics if negative, which would mean the
/// Euler form and the representation convention disagree.
pub fn ext_dim(x: &ExplicitRep, y: &ExplicitRep) -> usize {
    let ext = hom_dim(x, y) as i64 - euler_form(x.dim, y.dim);
    assert!(ext >= 0, "negative Ext dimension {ext}: Euler form convention is inconsistent");
    ext as usize
}

/// Ext¹ as the cokernel of `Hom_0 → Hom_1` in the standard projective
/// resolution, without using the Euler form.
pub fn ext_dim_cokernel(x: &ExplicitRep, y: &ExplicitRep) -> usize {
    kronecker_quiver().ext_dim(&x.as_rep(), &y.as_rep())
}

/// The Auslander–Reiten translate; `None` for the projectives `P1`, `P2`.
pub fn ar_translate(x: &KroneckerObject) -> Option<KroneckerObject> {
    match x {
        KroneckerObject::Preprojective(i) if *i >= 3 => Some(KroneckerObject::Preprojective(i - 2)),
        KroneckerObject::Preprojective(_) => None,
        KroneckerObject::Preinjective(i) => Some(KroneckerObject::Preinjective(i + 2)),
        other => Some(other.clone()),
    }
}

/// The universal extension `0 → u → t̃ → t^I → 0` with `|I| = dim Ext¹(t,u)`.
/// Returns `t̃` and `|I|`.
pub fn bongartz_extension(t: &ExplicitRep, u: &ExplicitRep) -> (ExplicitRep, usize) {
    let q = kronecker_quiver();
    let cob = q.coboundary(&t.as_rep(), &u.as_rep());
    // cocycle representatives: standard vectors completing the coboundary image
    let image = cob.transpose();
    let rows = cob.rows();
    let with_std = image.vstack(&Mat::identity(rows)).transpose();
    let pivots = with_std.pivot_columns();
    let reps: Vec<usize> = pivots.iter().filter(|&&p| p >= cob.cols()).map(|p| p - cob.cols()).collect();
    let count = reps.len();
    let (d1, d2, e1, e2) = (t.dim.d1, t.dim.d2, u.dim.d1, u.dim.d2);
    let dim = DimVector::new(e1 + count * d1, e2 + count * d2);
    let mut maps = Vec::new();
    for (a, (ua, ta)) in [(&u.m_alpha, &t.m_alpha), (&u.m_beta, &t.m_beta)].into_iter().enumerate() {
        let mut m = Mat::zeros(dim.d2, dim.d1);
        m.paste(0, 0, ua);
        for (k, &r) in reps.iter().enumerate() {
            // coboundary rows for arrow a are indexed (row of U_2, column of T_1)
            let local = r as i64 - (a * e2 * d1) as i64;
            let mut cocycle = Mat::zeros(e2, d1);
            if (0..(e2 * d1) as i64).contains(&local) {
                let local = local as usize;
                cocycle.set(local / d1, local % d1, Scalar::one());
            }
            m.paste(0, e1 + k * d1, &cocycle);
            m.paste(e2 + k * d2, e1 + k * d1, ta);
        }
        maps.push(m);
    }
    let mut maps = maps.into_iter();
    let ext = ExplicitRep { dim, m_alpha: maps.next().expect("alpha"), m_beta: maps.next().expect("beta") };
    (ext, count)
}

/// Points tried for regular summands when decomposing.
pub fn sample_points() -> Vec<Point> {
    [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)].iter().map(|&(a, b)| Point::from_ints(a, b).expect("nonzero")).collect()
}

/// Multiplicities of indecomposable summands of `x`, read off from the
/// Auslander–Reiten sequences: for `0 → A → B → C → 0` almost split,
/// `dim Hom(A, x) − dim Hom(B, x) + dim Hom(C, x)` counts copies of `A`.
/// Regular summands are only looked for at `points`.
pub fn decompose(x: &ExplicitRep, points: &[Point]) -> Result<Vec<(KroneckerObject, usize)>, KroneckerError> {
    use KroneckerObject::*;
    let rep = |o: &KroneckerObject| explicit_rep(o).expect("finite object");
    let hom_from = |o: KroneckerObject| hom_dim(&rep(&o), x) as i64;
    let hom_to = |o: KroneckerObject| hom_dim(x, &rep(&o)) as i64;
    let mut out = Vec::new();
    let mut found = DimVector::new(0, 0);
    let mut record = |o: KroneckerObject, m: i64, out: &mut Vec<(KroneckerObject, usize)>| {
        assert!(m >= 0, "negative multiplicity for {o}");
        if m > 0 {
            let d = dim_vector(&o).expect("finite");
            found.d1 += d.d1 * m as usize;
            found.d2 += d.d2 * m as usize;
            out.push((o, m as usize));
        }
    };
    for i in 1..=x.dim.d2 {
        let m = hom_from(Preprojective(i)) - 2 * hom_from(Preprojective(i + 1)) + hom_from(Preprojective(i + 2));
        record(Preprojective(i), m, &mut out);
    }
    for p in points {
        for l in 1..=x.dim.d1.min(x.dim.d2) {
            let r = |k: usize| if k == 0 { 0 } else { hom_to(Regular(p.clone(), k)) };
            let m = 2 * r(l) - r(l + 1) - r(l - 1);
            record(Regular(p.clone(), l), m, &mut out);
        }
    }
    for i in 1..=x.dim.d1 {
        let m = hom_to(Preinjective(i)) - 2 * hom_to(Preinjective(i + 1)) + hom_to(Preinjective(i + 2));
        record(Preinjective(i), m, &mut out);
    }
    if found != x.dim {
        return Err(KroneckerError::Undecomposed(DimVector::new(x.dim.d1 - found.d1, x.dim.d2 - found.d2)));
    }
    out.sort();
    Ok(out)
}

/// The trace of `P_e` in the regular module `R = P1 ⊕ P2`, as a dimension vector.
pub fn trace_in_regular(e: usize) -> Result<DimVector, KroneckerError> {
    let (sub1, sub2) = trace_spaces(e)?;
    Ok(DimVector::new(sub1.rank(), sub2.rank()))
}

fn regular_module() -> ExplicitRep {
    ExplicitRep::direct_sum(&[
        explicit_rep(&KroneckerObject::Preprojective(1)).expect("finite"),
        explicit_rep(&KroneckerObject::Preprojective(2)).expect("finite"),
    ])
}

fn trace_spaces(e: usize) -> Result<(Mat, Mat), KroneckerError> {
    if e != 1 && e != 2 {
        return Err(KroneckerError::Shape(format!("vertex {e} is not 1 or 2")));
    }
    let r = regular_module();
    let pe = explicit_rep(&KroneckerObject::Preprojective(e))?;
    let maps = hom_basis(&pe, &r);
    let gather = |v: usize, d: usize| maps.iter().fold(Mat::zeros(d, 0), |acc, f| acc.hstack(&f.comps[v]));
    Ok((gather(0, r.dim.d1), gather(1, r.dim.d2)))
}

/// `R / R e R` identified as an indecomposable.
pub fn quotient_by_idempotent_trace(e: usize) -> Result<KroneckerObject, KroneckerError> {
    let (sub1, sub2) = trace_spaces(e)?;
    let q = regular_module().quotient(&sub1, &sub2);
    match decompose(&q, &sample_points())?.as_slice() {
        [(o, 1)] => Ok(o.clone()),
        other => Err(KroneckerError::Shape(format!("quotient is not indecomposable: {other:?}"))),
    }
}

/// Largest total dimension of the test modules in the generation check.
pub const GENERATION_BOUND: usize = 20;

/// Tilting test for a finite-dimensional module given by its summands.
///
/// Rigidity and the summand count are exact. Generation is a semi-decision:
/// no indecomposable of total dimension at most `bound` (regulars only at
/// [`sample_points`]) may be both Hom- and Ext-orthogonal to `t`.
pub fn is_tilting_module(t: &[KroneckerObject], bound: usize) -> Result<bool, KroneckerError> {
    if let Some(s) = t.iter().find(|o| !o.is_finite()) {
        return Err(KroneckerError::Symbolic(s.clone()));
    }
    let mut distinct = t.to_vec();
    distinct.sort();
    distinct.dedup();
    let reps: Vec<ExplicitRep> = distinct.iter().map(explicit_rep).collect::<Result<_, _>>()?;
    if reps.iter().any(|x| reps.iter().any(|y| ext_dim(x, y) != 0)) {
        return Ok(false);
    }
    if distinct.len() != 2 {
        return Ok(false);
    }
    let sum = ExplicitRep::direct_sum(&reps);
    let generated = test_modules(bound).iter().all(|m| {
        let mr = explicit_rep(m).expect("finite");
        hom_dim(&sum, &mr) != 0 || ext_dim(&sum, &mr) != 0
    });
    Ok(generated)
}

/// Indecomposables of total dimension at most `bound`.
pub fn test_modules(bound: usize) -> Vec<KroneckerObject> {
    let mut out = Vec::new();
    for i in 1..=bound.div_ceil(2) {
        out.push(KroneckerObject::Preprojective(i));
        out.push(KroneckerObject::Preinjective(i));
    }
    for p in sample_points() {
        for l in 1..=bound / 2 {
            out.push(KroneckerObject::Regular(p.clone(), l));
        }
    }
    out
}
