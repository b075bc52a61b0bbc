//! Wings of exceptional arcs. Simples are indexed by `i mod n` for `S_i`.

use std::collections::BTreeSet;

use crate::tube::{Arc, TubeCtx};

/// The lift of `inner` inside `outer`'s span, if it is in the wing of `outer`.
pub fn lift_inside(ctx: &TubeCtx, outer: &Arc, inner: &Arc) -> Option<Arc> {
    let (oe, ie) = (outer.finite_end()?, inner.finite_end()?);
    let n = ctx.rank() as i64;
    let k = (outer.start - inner.start).div_euclid(n) + i64::from((outer.start - inner.start).rem_euclid(n) != 0);
    (ie + k * n <= oe).then(|| inner.shift(k * n))
}

pub fn contains(ctx: &TubeCtx, outer: &Arc, inner: &Arc) -> bool {
    lift_inside(ctx, outer, inner).is_some()
}

/// Finite arcs that lie in no other arc's wing, in sorted order.
pub fn roots(ctx: &TubeCtx, arcs: &[Arc]) -> Vec<Arc> {
    let arcs: BTreeSet<Arc> = arcs.iter().filter(|a| a.is_finite()).map(|a| ctx.normalize(a)).collect();
    arcs.iter().filter(|a| !arcs.iter().any(|b| b != *a && contains(ctx, b, a))).copied().collect()
}

/// Composition factors of a finite arc, as simple indices.
pub fn base(ctx: &TubeCtx, root: &Arc) -> BTreeSet<i64> {
    let n = ctx.rank() as i64;
    (root.start + 1..root.finite_end().unwrap_or(root.start)).map(|i| i.rem_euclid(n)).collect()
}

pub fn base_union(ctx: &TubeCtx, roots: &[Arc]) -> BTreeSet<i64> {
    roots.iter().flat_map(|r| base(ctx, r)).collect()
}

/// Index of a simple arc.
pub fn simple_index(ctx: &TubeCtx, s: &Arc) -> i64 {
    (s.start + 1).rem_euclid(ctx.rank() as i64)
}

/// A nonempty proper set of simples forming one cyclic run.
fn is_segment(n: i64, set: &BTreeSet<i64>) -> bool {
    set.iter().filter(|&&i| !set.contains(&(i - 1).rem_euclid(n))).count() == 1
}

/// Disjoint bases whose union has fewer than `n` simples and is not a segment.
pub fn non_adjacent(ctx: &TubeCtx, r: &Arc, s: &Arc) -> bool {
    let n = ctx.rank() as i64;
    let (br, bs) = (base(ctx, r), base(ctx, s));
    if !br.is_disjoint(&bs) {
        return false;
    }
    let union: BTreeSet<i64> = br.union(&bs).copied().collect();
    (union.len() as i64) < n && !is_segment(n, &union)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment_wraps() {
        let c = TubeCtx::new(4).unwrap();
        assert!(contains(&c, &Arc::fin(3, 6), &Arc::fin(0, 2)));
        assert_eq!(lift_inside(&c, &Arc::fin(3, 6), &Arc::fin(0, 2)), Some(Arc::fin(4, 6)));
        assert!(!contains(&c, &Arc::fin(3, 6), &Arc::fin(1, 3)));
        assert_eq!(roots(&c, &[Arc::fin(0, 2), Arc::fin(3, 6)]), vec![Arc::fin(3, 6)]);
    }

    #[test]
    fn adjacency() {
        let c = TubeCtx::new(5).unwrap();
        assert!(!non_adjacent(&c, &Arc::simple(1), &Arc::simple(2)));
        assert!(non_adjacent(&c, &Arc::simple(1), &Arc::simple(3)));
        assert!(!non_adjacent(&c, &Arc::simple(0), &Arc::simple(4)));
        assert!(!non_adjacent(&c, &Arc::fin(0, 3), &Arc::simple(2)));
    }
}
