//! Two-term complexes of finitely generated projectives and their Hom spaces
//! in the homotopy category.

use std::fmt;

use num_traits::{One, Zero};

use super::{decompose, explicit_rep, hom_basis, hom_dim, sample_points, ExplicitRep, KroneckerError, KroneckerObject};
use crate::exactlin::{span_dim, Mat, Scalar};
use crate::quiver::Morphism;

/// An indecomposable projective: `P1` (simple projective) or `P2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Proj {
    P1,
    P2,
}

impl Proj {
    pub fn index(self) -> usize {
        match self {
            Proj::P1 => 1,
            Proj::P2 => 2,
        }
    }

    pub fn from_index(i: usize) -> Option<Proj> {
        match i {
            1 => Some(Proj::P1),
            2 => Some(Proj::P2),
            _ => None,
        }
    }

    fn dims(self) -> (usize, usize) {
        match self {
            Proj::P1 => (0, 1),
            Proj::P2 => (1, 2),
        }
    }
}

/// An ordered direct sum of indecomposable projectives.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProjSum(pub Vec<Proj>);

impl ProjSum {
    pub fn new(parts: Vec<Proj>) -> ProjSum {
        ProjSum(parts)
    }

    pub fn repeat(p: Proj, count: usize) -> ProjSum {
        ProjSum(vec![p; count])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &ProjSum) -> ProjSum {
        ProjSum(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn rep(&self) -> ExplicitRep {
        let parts: Vec<ExplicitRep> =
            self.0.iter().map(|p| explicit_rep(&KroneckerObject::Preprojective(p.index())).expect("projectives are finite")).collect();
        ExplicitRep::direct_sum(&parts)
    }

    /// Offsets of each summand inside `V1` and `V2`.
    fn offsets(&self) -> Vec<(usize, usize)> {
        let mut acc = (0, 0);
        self.0
            .iter()
            .map(|p| {
                let here = acc;
                let (a, b) = p.dims();
                acc = (acc.0 + a, acc.1 + b);
                here
            })
            .collect()
    }
}

impl fmt::Display for ProjSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut runs: Vec<(Proj, usize)> = Vec::new();
        for &p in &self.0 {
            match runs.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => runs.push((p, 1)),
            }
        }
        let text: Vec<String> =
            runs.iter().map(|&(p, k)| if k == 1 { format!("P{}", p.index()) } else { format!("P{}^{k}", p.index()) }).collect();
        write!(f, "{}", text.join(" + "))
    }
}

/// One block of a differential: a scalar for `P_a → P_a`, a pair `(c_α, c_β)`
/// for `P1 → P2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Scalar(Scalar),
    Pair(Scalar, Scalar),
}

/// `src → dst` in degrees −1 and 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTermComplex {
    pub src: ProjSum,
    pub dst: ProjSum,
    pub d: Morphism,
}

/// A chain map given by its components in degrees −1 and 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    pub deg_minus1: Morphism,
    pub deg0: Morphism,
}

fn zero_morphism(x: &ExplicitRep, y: &ExplicitRep) -> Morphism {
    Morphism { comps: vec![Mat::zeros(y.dim.d1, x.dim.d1), Mat::zeros(y.dim.d2, x.dim.d2)] }
}

fn block_diag(ms: &[&Morphism]) -> Morphism {
    let comps = (0..2).map(|v| Mat::block_diag(&ms.iter().map(|m| m.comps[v].clone()).collect::<Vec<_>>())).collect();
    Morphism { comps }
}

fn combine(basis: &[Morphism], coeffs: &[Scalar], x: &ExplicitRep, y: &ExplicitRep) -> Morphism {
    basis.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).fold(zero_morphism(x, y), |acc, (b, c)| Morphism {
        comps: acc.comps.iter().zip(&b.comps).map(|(a, m)| a.add(&m.scale(c))).collect(),
    })
}

impl TwoTermComplex {
    pub fn new(src: ProjSum, dst: ProjSum, d: Morphism) -> Result<TwoTermComplex, KroneckerError> {
        let (s, t) = (src.rep(), dst.rep());
        let shapes_ok = d.comps.len() == 2
            && d.comps[0].rows() == t.dim.d1
            && d.comps[0].cols() == s.dim.d1
            && d.comps[1].rows() == t.dim.d2
            && d.comps[1].cols() == s.dim.d2;
        if !shapes_ok {
            return Err(KroneckerError::Shape("differential has the wrong shape".into()));
        }
        let is_map =
            super::kronecker_quiver().coboundary(&s.as_rep(), &t.as_rep()).mul_vec(&d.flatten()).map(|v| v.iter().all(Zero::is_zero));
        if is_map != Ok(true) {
            return Err(KroneckerError::Shape("differential is not a module map".into()));
        }
        Ok(TwoTermComplex { src, dst, d })
    }

    /// Builds the differential from blocks: `rows[t][s]` is the block from
    /// source summand `s` to target summand `t`.
    pub fn from_blocks(src: ProjSum, dst: ProjSum, rows: &[Vec<Entry>]) -> Result<TwoTermComplex, KroneckerError> {
        if rows.len() != dst.0.len() || rows.iter().any(|r| r.len() != src.0.len()) {
            return Err(KroneckerError::Shape(format!("expected {} rows of {} entries", dst.0.len(), src.0.len())));
        }
        let (s_rep, t_rep) = (src.rep(), dst.rep());
        let mut f1 = Mat::zeros(t_rep.dim.d1, s_rep.dim.d1);
        let mut f2 = Mat::zeros(t_rep.dim.d2, s_rep.dim.d2);
        let (so, to) = (src.offsets(), dst.offsets());
        for (ti, row) in rows.iter().enumerate() {
            for (si, entry) in row.iter().enumerate() {
                let ((s1, s2), (t1, t2)) = (so[si], to[ti]);
                match (dst.0[ti], src.0[si], entry) {
                    (Proj::P1, Proj::P1, Entry::Scalar(c)) => f2.set(t2, s2, c.clone()),
                    (Proj::P2, Proj::P2, Entry::Scalar(c)) => {
                        f1.set(t1, s1, c.clone());
                        f2.set(t2, s2, c.clone());
                        f2.set(t2 + 1, s2 + 1, c.clone());
                    }
                    (Proj::P2, Proj::P1, Entry::Pair(a, b)) => {
                        f2.set(t2, s2, a.clone());
                        f2.set(t2 + 1, s2, b.clone());
                    }
                    (_, _, Entry::Scalar(c)) if c.is_zero() => {}
                    (t, s, e) => return Err(KroneckerError::Shape(format!("block {e:?} is not a map P{} -> P{}", s.index(), t.index()))),
                }
            }
        }
        TwoTermComplex::new(src, dst, Morphism { comps: vec![f1, f2] })
    }

    /// `0 → p` with `p` in degree 0.
    pub fn stalk(p: ProjSum) -> TwoTermComplex {
        let d = zero_morphism(&ProjSum::default().rep(), &p.rep());
        TwoTermComplex { src: ProjSum::default(), dst: p, d }
    }

    /// `p → 0`, that is `p[1]`.
    pub fn shifted(p: ProjSum) -> TwoTermComplex {
        let d = zero_morphism(&p.rep(), &ProjSum::default().rep());
        TwoTermComplex { src: p, dst: ProjSum::default(), d }
    }

    pub fn zero() -> TwoTermComplex {
        TwoTermComplex::stalk(ProjSum::default())
    }

    pub fn is_zero(&self) -> bool {
        self.src.is_empty() && self.dst.is_empty()
    }

    /// The minimal projective presentation of `x`.
    pub fn presentation(x: &ExplicitRep) -> TwoTermComplex {
        let (d1, d2) = (x.dim.d1, x.dim.d2);
        let image = x.m_alpha.hstack(&x.m_beta);
        // standard vectors completing the image of α, β to all of V2
        let with_std = image.hstack(&Mat::identity(d2));
        let tops: Vec<usize> = with_std.pivot_columns().into_iter().filter(|&c| c >= image.cols()).map(|c| c - image.cols()).collect();
        let p0 = ProjSum(std::iter::repeat_n(Proj::P1, tops.len()).chain(std::iter::repeat_n(Proj::P2, d1)).collect());
        let mut pi2 = Mat::zeros(d2, tops.len() + 2 * d1);
        for (l, &t) in tops.iter().enumerate() {
            pi2.set(t, l, Scalar::one());
        }
        for j in 0..d1 {
            for r in 0..d2 {
                pi2.set(r, tops.len() + 2 * j, x.m_alpha.get(r, j).clone());
                pi2.set(r, tops.len() + 2 * j + 1, x.m_beta.get(r, j).clone());
            }
        }
        let kernel = pi2.kernel_basis();
        let p1 = ProjSum::repeat(Proj::P1, kernel.len());
        let mut f2 = Mat::zeros(pi2.cols(), kernel.len());
        for (c, v) in kernel.iter().enumerate() {
            f2.paste(0, c, &Mat::column(v));
        }
        let d = Morphism { comps: vec![Mat::zeros(d1, 0), f2] };
        TwoTermComplex { src: p1, dst: p0, d }
    }

    pub fn direct_sum(parts: &[TwoTermComplex]) -> TwoTermComplex {
        let src = parts.iter().fold(ProjSum::default(), |acc, c| acc.concat(&c.src));
        let dst = parts.iter().fold(ProjSum::default(), |acc, c| acc.concat(&c.dst));
        let d = block_diag(&parts.iter().map(|c| &c.d).collect::<Vec<_>>());
        TwoTermComplex { src, dst, d }
    }

    pub fn power(&self, count: usize) -> TwoTermComplex {
        TwoTermComplex::direct_sum(&vec![self.clone(); count])
    }

    /// `H⁰ = coker d` as an explicit representation.
    pub fn h0(&self) -> ExplicitRep {
        self.dst.rep().quotient(&self.d.comps[0], &self.d.comps[1])
    }

    /// `H⁻¹ = ker d`, a projective module, as multiplicities `(#P1, #P2)`.
    pub fn h_minus1(&self) -> (usize, usize) {
        let s = self.src.rep();
        let k1 = s.dim.d1 - self.d.comps[0].rank();
        let k2 = s.dim.d2 - self.d.comps[1].rank();
        (k2 - 2 * k1, k1)
    }

    /// Indecomposable summands up to homotopy: the cohomology modules, with
    /// `H⁻¹` shifted. Over a hereditary algebra the complex is the sum of
    /// its shifted cohomologies.
    pub fn summands(&self) -> Result<Vec<(Summand, usize)>, KroneckerError> {
        let mut out: Vec<(Summand, usize)> =
            decompose(&self.h0(), &sample_points())?.into_iter().map(|(o, m)| (Summand::Module(o), m)).collect();
        let (a, b) = self.h_minus1();
        for (p, m) in [(Proj::P1, a), (Proj::P2, b)] {
            if m > 0 {
                out.push((Summand::Shifted(p), m));
            }
        }
        Ok(out)
    }

    fn entries(&self) -> Vec<Vec<Entry>> {
        let (so, to) = (self.src.offsets(), self.dst.offsets());
        let (f1, f2) = (&self.d.comps[0], &self.d.comps[1]);
        self.dst
            .0
            .iter()
            .enumerate()
            .map(|(ti, &t)| {
                self.src
                    .0
                    .iter()
                    .enumerate()
                    .map(|(si, &s)| {
                        let ((s1, s2), (t1, t2)) = (so[si], to[ti]);
                        match (t, s) {
                            (Proj::P1, Proj::P1) => Entry::Scalar(f2.get(t2, s2).clone()),
                            (Proj::P2, Proj::P2) => Entry::Scalar(f1.get(t1, s1).clone()),
                            (Proj::P2, Proj::P1) => Entry::Pair(f2.get(t2, s2).clone(), f2.get(t2 + 1, s2).clone()),
                            (Proj::P1, Proj::P2) => Entry::Scalar(Scalar::zero()),
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Scalar(c) => write!(f, "{c}"),
            Entry::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl fmt::Display for TwoTermComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.entries().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
        let src = self.src.to_string().replace(" + ", " ");
        let dst = self.dst.to_string().replace(" + ", " ");
        if rows.iter().all(String::is_empty) {
            write!(f, "[{src} -> {dst}]")
        } else {
            write!(f, "[{src} -> {dst} | {}]", rows.join("; "))
        }
    }
}

/// A summand of a normalized silting object: a module, or a shifted projective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Module(KroneckerObject),
    Shifted(Proj),
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Module(o) => write!(f, "{o}"),
            Summand::Shifted(p) => write!(f, "P{}[1]", p.index()),
        }
    }
}

fn flat_pair(a: &Morphism, b: &Morphism) -> Vec<Scalar> {
    let mut v = a.flatten();
    v.extend(b.flatten());
    v
}

/// The chain maps `c → d` (degree 0) as a basis of the cycle space.
pub fn chain_maps(c: &TwoTermComplex, d: &TwoTermComplex) -> Vec<ChainMap> {
    let (c1, c0, d1, d0) = (c.src.rep(), c.dst.rep(), d.src.rep(), d.dst.rep());
    let a = hom_basis(&c1, &d1);
    let b = hom_basis(&c0, &d0);
    // columns: dD ∘ a_k and −(b_l ∘ dC), flattened in Hom(C⁻¹, D⁰)
    let mut cols: Vec<Vec<Scalar>> = a.iter().map(|f| d.d.compose(f).flatten()).collect();
    cols.extend(b.iter().map(|g| g.compose(&c.d).flatten().into_iter().map(|x| -x).collect::<Vec<_>>()));
    let rows = cols.first().map_or(0, Vec::len);
    let m = Mat::from_fn(rows, cols.len(), |r, k| cols[k][r].clone());
    m.kernel_basis()
        .iter()
        .map(|v| ChainMap { deg_minus1: combine(&a, &v[..a.len()], &c1, &d1), deg0: combine(&b, &v[a.len()..], &c0, &d0) })
        .collect()
}

fn null_homotopic_span(c: &TwoTermComplex, d: &TwoTermComplex) -> Vec<Vec<Scalar>> {
    hom_basis(&c.dst.rep(), &d.src.rep()).iter().map(|h| flat_pair(&h.compose(&c.d), &d.d.compose(h))).collect()
}

/// The homotopies' image inside `Hom(C⁻¹, D⁰)`, flattened.
fn shift1_boundaries(c: &TwoTermComplex, d: &TwoTermComplex) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = hom_basis(&c.dst.rep(), &d.dst.rep()).iter().map(|h| h.compose(&c.d).flatten()).collect();
    out.extend(hom_basis(&c.src.rep(), &d.src.rep()).iter().map(|h| d.d.compose(h).flatten()));
    out
}

/// `dim Hom(c, d[shift])` in the homotopy category.
pub fn derived_hom_dim(c: &TwoTermComplex, d: &TwoTermComplex, shift: i64) -> usize {
    match shift {
        0 => {
            let cycles = chain_maps(c, d);
            let flat: Vec<Vec<Scalar>> = cycles.iter().map(|f| flat_pair(&f.deg_minus1, &f.deg0)).collect();
            let mut all = flat;
            let z = all.len();
            all.extend(null_homotopic_span(c, d));
            // homotopies are cycles, so the joint span has dimension z
            debug_assert_eq!(span_dim(&all), z);
            z - span_dim(&null_homotopic_span(c, d))
        }
        1 => hom_dim(&c.src.rep(), &d.dst.rep()) - span_dim(&shift1_boundaries(c, d)),
        -1 => {
            let basis = hom_basis(&c.dst.rep(), &d.src.rep());
            let images: Vec<Vec<Scalar>> = basis.iter().map(|h| flat_pair(&h.compose(&c.d), &d.d.compose(h))).collect();
            basis.len() - span_dim(&images)
        }
        _ => 0,
    }
}

/// Representatives of a basis of `Hom(c, d[1]) = Hom(C⁻¹, D⁰) / boundaries`.
pub fn shift1_basis(c: &TwoTermComplex, d: &TwoTermComplex) -> Vec<Morphism> {
    let mut span = shift1_boundaries(c, d);
    let mut rank = span_dim(&span);
    let mut out = Vec::new();
    for f in hom_basis(&c.src.rep(), &d.dst.rep()) {
        span.push(f.flatten());
        let r = span_dim(&span);
        if r > rank {
            rank = r;
            out.push(f);
        } else {
            span.pop();
        }
    }
    out
}

/// Surjectivity of `Hom(σ⁰, X) → Hom(σ⁻¹, X)`, `f ↦ f ∘ d`.
pub fn in_d_sigma(sigma: &TwoTermComplex, x: &ExplicitRep) -> bool {
    let images: Vec<Vec<Scalar>> = hom_basis(&sigma.dst.rep(), x).iter().map(|f| f.compose(&sigma.d).flatten()).collect();
    span_dim(&images) == hom_dim(&sigma.src.rep(), x)
}

/// Bijectivity of `Hom(σ⁰, X) → Hom(σ⁻¹, X)`.
pub fn in_y_sigma(sigma: &TwoTermComplex, x: &ExplicitRep) -> bool {
    let basis = hom_basis(&sigma.dst.rep(), x);
    let images: Vec<Vec<Scalar>> = basis.iter().map(|f| f.compose(&sigma.d).flatten()).collect();
    let rank = span_dim(&images);
    rank == basis.len() && rank == hom_dim(&sigma.src.rep(), x)
}

/// `H⁰ ∈ D_σ` and `Hⁱ ∈ Y_σ` for `i ≥ 1`; negative degrees are ignored.
pub fn in_perp_gt0(sigma: &TwoTermComplex, cohomologies: &[(i64, ExplicitRep)]) -> bool {
    cohomologies.iter().all(|(i, h)| match i {
        0 => in_d_sigma(sigma, h),
        i if *i >= 1 => in_y_sigma(sigma, h),
        _ => true,
    })
}

/// The cocone of `α: σ2 → σ1[1]`, given by a module map `σ2⁻¹ → σ1⁰`:
/// `σ1⁻¹ ⊕ σ2⁻¹ → σ1⁰ ⊕ σ2⁰` with differential `[[d1, α], [0, d2]]`.
pub fn cocone(sigma1: &TwoTermComplex, sigma2: &TwoTermComplex, alpha: &Morphism) -> TwoTermComplex {
    let src = sigma1.src.concat(&sigma2.src);
    let dst = sigma1.dst.concat(&sigma2.dst);
    let comps = (0..2)
        .map(|v| {
            let (d1, d2, a) = (&sigma1.d.comps[v], &sigma2.d.comps[v], &alpha.comps[v]);
            let mut m = Mat::zeros(d1.rows() + d2.rows(), d1.cols() + d2.cols());
            m.paste(0, 0, d1);
            m.paste(0, d1.cols(), a);
            m.paste(d1.rows(), d1.cols(), d2);
            m
        })
        .collect();
    TwoTermComplex { src, dst, d: Morphism { comps } }
}

/// Checks the standing hypotheses on `(σ1, σ2)`: each is self-orthogonal in
/// positive degrees and `Hom(σ1, σ2[k]) = 0` for `k ≥ 0`. The condition
/// `Hom(σ2, σ1[k]) = 0` for `k ≥ 2` holds for all two-term complexes.
pub fn check_pair_hypotheses(sigma1: &TwoTermComplex, sigma2: &TwoTermComplex) -> Result<(), KroneckerError> {
    for (name, s) in [("sigma1", sigma1), ("sigma2", sigma2)] {
        let k = derived_hom_dim(s, s, 1);
        if k != 0 {
            return Err(KroneckerError::Hypothesis {
                hypothesis: "self-orthogonality",
                detail: format!("Hom({name}, {name}[1]) has dimension {k}"),
            });
        }
    }
    for k in [0, 1] {
        let h = derived_hom_dim(sigma1, sigma2, k);
        if h != 0 {
            return Err(KroneckerError::Hypothesis { hypothesis: "(A1)", detail: format!("Hom(sigma1, sigma2[{k}]) has dimension {h}") });
        }
    }
    Ok(())
}

/// Whether `(f, g) ↦ α∘f + g∘α`, `End(σ2) ⊕ End(σ1[1]) → Hom(σ2, σ1[1])`, is onto.
pub fn phi_surjective(sigma1: &TwoTermComplex, sigma2: &TwoTermComplex, alpha: &Morphism) -> Result<bool, KroneckerError> {
    check_pair_hypotheses(sigma1, sigma2)?;
    let mut span = shift1_boundaries(sigma2, sigma1);
    span.extend(chain_maps(sigma2, sigma2).iter().map(|f| alpha.compose(&f.deg_minus1).flatten()));
    span.extend(chain_maps(sigma1, sigma1).iter().map(|g| g.deg0.compose(alpha).flatten()));
    Ok(span_dim(&span) == hom_dim(&sigma2.src.rep(), &sigma1.dst.rep()))
}

/// The left-universal map `σ^(I) → ω[1]` with `I` a basis of `Hom(σ, ω[1])`,
/// as `(σ^(I), α, |I|)`.
pub fn universal_map(sigma: &TwoTermComplex, omega: &TwoTermComplex) -> (TwoTermComplex, Morphism, usize) {
    let basis = shift1_basis(sigma, omega);
    let count = basis.len();
    let power = sigma.power(count);
    let alpha = if count == 0 {
        zero_morphism(&power.src.rep(), &omega.dst.rep())
    } else {
        Morphism { comps: (0..2).map(|v| basis.iter().skip(1).fold(basis[0].comps[v].clone(), |acc, f| acc.hstack(&f.comps[v]))).collect() }
    };
    (power, alpha, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::kronecker::{KroneckerObject::*, Point};

    fn pres(o: KroneckerObject) -> TwoTermComplex {
        TwoTermComplex::presentation(&explicit_rep(&o).unwrap())
    }

    fn q1_presentation() -> TwoTermComplex {
        TwoTermComplex::from_blocks(
            ProjSum::repeat(Proj::P1, 2),
            ProjSum::repeat(Proj::P2, 1),
            &[vec![Entry::Pair(int(1), int(0)), Entry::Pair(int(0), int(1))]],
        )
        .unwrap()
    }

    #[test]
    fn presentations_have_expected_terms() {
        let q1 = pres(Preinjective(1));
        assert_eq!((q1.src.clone(), q1.dst.clone()), (ProjSum::repeat(Proj::P1, 2), ProjSum::repeat(Proj::P2, 1)));
        let p3 = pres(Preprojective(3));
        assert_eq!((p3.src.0.len(), p3.dst.clone()), (1, ProjSum::repeat(Proj::P2, 2)));
        assert_eq!(pres(Preprojective(1)), TwoTermComplex::stalk(ProjSum::repeat(Proj::P1, 1)));
        let s = pres(Regular(Point::from_ints(1, 0).unwrap(), 1));
        assert_eq!(s.summands().unwrap(), vec![(Summand::Module(Regular(Point::from_ints(1, 0).unwrap(), 1)), 1)]);
    }

    #[test]
    fn block_builder_matches_presentation() {
        let q = q1_presentation();
        assert_eq!(q.summands().unwrap(), vec![(Summand::Module(Preinjective(1)), 1)]);
        assert_eq!(q.to_string(), "[P1^2 -> P2 | (1,0) (0,1)]");
        assert!(TwoTermComplex::from_blocks(ProjSum::repeat(Proj::P2, 1), ProjSum::repeat(Proj::P1, 1), &[vec![Entry::Scalar(int(1))]])
            .is_err());
    }

    #[test]
    fn derived_hom_values() {
        let p1s = TwoTermComplex::shifted(ProjSum::repeat(Proj::P1, 1));
        let p2s = TwoTermComplex::shifted(ProjSum::repeat(Proj::P2, 1));
        assert_eq!(derived_hom_dim(&p1s, &p2s, 0), 2);
        let p1 = TwoTermComplex::stalk(ProjSum::repeat(Proj::P1, 1));
        assert_eq!(derived_hom_dim(&q1_presentation(), &p1, 1), 2);
        assert_eq!(derived_hom_dim(&q1_presentation(), &q1_presentation(), 0), 1);
        assert_eq!(derived_hom_dim(&p1, &p1s, -1), 1);
        assert_eq!(derived_hom_dim(&p1, &p1, 2), 0);
        // a contractible complex has no endomorphisms up to homotopy
        let cone = TwoTermComplex::from_blocks(ProjSum::repeat(Proj::P1, 1), ProjSum::repeat(Proj::P1, 1), &[vec![Entry::Scalar(int(1))]])
            .unwrap();
        assert_eq!(derived_hom_dim(&cone, &cone, 0), 0);
        assert!(cone.summands().unwrap().is_empty());
    }

    #[test]
    fn derived_hom_agrees_with_modules() {
        let objs = [
            Preprojective(1),
            Preprojective(2),
            Preprojective(3),
            Preinjective(1),
            Preinjective(2),
            Regular(Point::from_ints(1, 1).unwrap(), 2),
        ];
        for x in &objs {
            for y in &objs {
                let (rx, ry) = (explicit_rep(x).unwrap(), explicit_rep(y).unwrap());
                assert_eq!(derived_hom_dim(&pres(x.clone()), &pres(y.clone()), 0), hom_dim(&rx, &ry), "{x} {y}");
                assert_eq!(derived_hom_dim(&pres(x.clone()), &pres(y.clone()), 1), super::super::ext_dim(&rx, &ry), "{x} {y}");
                assert_eq!(in_d_sigma(&pres(x.clone()), &ry), super::super::ext_dim(&rx, &ry) == 0);
            }
        }
    }

    #[test]
    fn d_and_y_membership() {
        let q1 = explicit_rep(&Preinjective(1)).unwrap();
        let p1 = explicit_rep(&Preprojective(1)).unwrap();
        assert!(in_d_sigma(&q1_presentation(), &q1));
        assert!(!in_d_sigma(&q1_presentation(), &p1));
        assert!(in_d_sigma(&TwoTermComplex::stalk(ProjSum::repeat(Proj::P1, 1)), &q1));
        let s = pres(Regular(Point::from_ints(1, 0).unwrap(), 1));
        let other = explicit_rep(&Regular(Point::from_ints(0, 1).unwrap(), 2)).unwrap();
        assert!(in_y_sigma(&s, &other));
        assert!(!in_y_sigma(&s, &explicit_rep(&Regular(Point::from_ints(1, 0).unwrap(), 1)).unwrap()));
        assert!(in_y_sigma(&TwoTermComplex::stalk(ProjSum::repeat(Proj::P1, 1)), &ExplicitRep::zero()));
        assert!(in_perp_gt0(&q1_presentation(), &[(0, q1.clone())]));
        assert!(!in_perp_gt0(&q1_presentation(), &[(0, p1)]));
        assert!(in_perp_gt0(&q1_presentation(), &[(-1, ExplicitRep::zero()), (0, ExplicitRep::zero())]));
    }

    #[test]
    fn phi_for_universal_and_zero_maps() {
        let omega = TwoTermComplex::stalk(ProjSum::repeat(Proj::P1, 1));
        let sigma = q1_presentation();
        let (power, alpha, count) = universal_map(&sigma, &omega);
        assert_eq!(count, 2);
        assert_eq!(phi_surjective(&omega, &power, &alpha), Ok(true));
        let zero = Morphism { comps: vec![Mat::zeros(0, 0), Mat::zeros(1, 2)] };
        assert_eq!(phi_surjective(&omega, &sigma, &zero), Ok(false));
        let tilde = cocone(&omega, &power, &alpha);
        assert_eq!(derived_hom_dim(&tilde, &tilde, 1), 0);
        assert_eq!(tilde.summands().unwrap(), vec![(Summand::Module(Preinjective(2)), 1)]);
    }

    #[test]
    fn hypothesis_failure_is_named() {
        let omega = q1_presentation();
        let sigma = TwoTermComplex::stalk(ProjSum::repeat(Proj::P1, 1));
        let zero = Morphism { comps: vec![Mat::zeros(1, 0), Mat::zeros(2, 0)] };
        let err = phi_surjective(&omega, &sigma, &zero);
        assert!(matches!(err, Err(KroneckerError::Hypothesis { hypothesis: "(A1)", .. })), "{err:?}");
    }
}
