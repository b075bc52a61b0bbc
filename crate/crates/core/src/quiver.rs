//! Representations of a finite quiver and the intertwiner linear system.
//!
//! Both the Kronecker module and the cyclic oracle reduce Hom and Ext¹ to
//! the kernel and cokernel of the map
//! `⊕_v Hom(X_v, Y_v) → ⊕_arrows Hom(X_s, Y_t)`,
//! `(f_v) ↦ (f_t X_a − Y_a f_s)`.

use num_traits::Zero;

use crate::exactlin::{Mat, Scalar};

/// Arrow list of a quiver as `(source, target)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

/// A representation: one space per vertex, one matrix per arrow of shape
/// `dims[target] × dims[source]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

/// A morphism given by one matrix per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub comps: Vec<Mat>,
}

impl Quiver {
    pub fn check(&self, x: &Rep) -> bool {
        x.dims.len() == self.vertices
            && x.maps.len() == self.arrows.len()
            && self.arrows.iter().zip(&x.maps).all(|(&(s, t), m)| m.rows() == x.dims[t] && m.cols() == x.dims[s])
    }

    fn offsets(x: &Rep, y: &Rep) -> (Vec<usize>, usize) {
        let mut off = Vec::with_capacity(x.dims.len());
        let mut total = 0;
        for v in 0..x.dims.len() {
            off.push(total);
            total += y.dims[v] * x.dims[v];
        }
        (off, total)
    }

    /// The matrix of `(f_v) ↦ (f_t X_a − Y_a f_s)_a`, with unknowns `f_v`
    /// flattened row-major vertex by vertex.
    pub fn coboundary(&self, x: &Rep, y: &Rep) -> Mat {
        let (off, unknowns) = Quiver::offsets(x, y);
        let eqs: usize = self.arrows.iter().map(|&(s, t)| y.dims[t] * x.dims[s]).sum();
        let mut m = Mat::zeros(eqs, unknowns);
        let mut row0 = 0;
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            let (xa, ya) = (&x.maps[a], &y.maps[a]);
            let (ds, dt, es, et) = (x.dims[s], x.dims[t], y.dims[s], y.dims[t]);
            for r in 0..et {
                for c in 0..ds {
                    let row = row0 + r * ds + c;
                    // (f_t X_a)[r,c] = sum_k f_t[r,k] X_a[k,c]
                    for k in 0..dt {
                        let v = xa.get(k, c);
                        if !v.is_zero() {
                            let col = off[t] + r * dt + k;
                            let cur = m.get(row, col).clone();
                            m.set(row, col, cur + v);
                        }
                    }
                    // (Y_a f_s)[r,c] = sum_k Y_a[r,k] f_s[k,c]
                    for k in 0..es {
                        let v = ya.get(r, k);
                        if !v.is_zero() {
                            let col = off[s] + k * ds + c;
                            let cur = m.get(row, col).clone();
                            m.set(row, col, cur - v);
                        }
                    }
                }
            }
            row0 += et * ds;
        }
        m
    }

    pub fn hom_dim(&self, x: &Rep, y: &Rep) -> usize {
        let m = self.coboundary(x, y);
        m.cols() - m.rank()
    }

    /// dim Ext¹ as the cokernel dimension of the coboundary.
    pub fn ext_dim(&self, x: &Rep, y: &Rep) -> usize {
        let m = self.coboundary(x, y);
        m.rows() - m.rank()
    }

    /// `Σ_v x_v y_v − Σ_arrows x_s y_t`.
    pub fn euler(&self, x: &[usize], y: &[usize]) -> i64 {
        let diag: i64 = x.iter().zip(y).map(|(a, b)| (a * b) as i64).sum();
        let arrows: i64 = self.arrows.iter().map(|&(s, t)| (x[s] * y[t]) as i64).sum();
        diag - arrows
    }

    pub fn hom_basis(&self, x: &Rep, y: &Rep) -> Vec<Morphism> {
        self.coboundary(x, y).kernel_basis().iter().map(|v| self.unflatten(x, y, v)).collect()
    }

    /// Reads a flattened coefficient vector as a morphism `x → y`.
    pub fn unflatten(&self, x: &Rep, y: &Rep, v: &[Scalar]) -> Morphism {
        let (off, _) = Quiver::offsets(x, y);
        let comps = (0..self.vertices).map(|w| Mat::from_fn(y.dims[w], x.dims[w], |r, c| v[off[w] + r * x.dims[w] + c].clone())).collect();
        Morphism { comps }
    }
}

impl Morphism {
    pub fn flatten(&self) -> Vec<Scalar> {
        self.comps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        Morphism { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn zero(x: &Rep, y: &Rep) -> Morphism {
        Morphism { comps: x.dims.iter().zip(&y.dims).map(|(&d, &e)| Mat::zeros(e, d)).collect() }
    }
}

impl Rep {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(parts: &[Rep]) -> Rep {
        let vertices = parts.first().map_or(0, |p| p.dims.len());
        let arrows = parts.first().map_or(0, |p| p.maps.len());
        let dims = (0..vertices).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..arrows).map(|a| Mat::block_diag(&parts.iter().map(|p| p.maps[a].clone()).collect::<Vec<_>>())).collect();
        Rep { dims, maps }
    }
}
