//! Gluing tilting sheaves along the recollement of a tube expansion.
//!
//! A tilting sheaf with large torsion part is held as its tube data
//! ([`TiltingSpec`]). Gluing at a simple `S_λ` of the tube at `x̄` pushes the
//! reduced data forward and adds one new summand `S̃`:
//!
//! * [`glue_left`] (left universal map): `S̃` has socle `S_λ`;
//! * [`glue_right`] (right universal map): `S̃` has top `S_ρ = τS_λ`, when
//!   the configuration allows a conclusion at all.
//!
//! [`choose_seed`] picks `S_λ`, the side and the reduced data so that gluing
//! gives back the original spec; [`round_trip`] checks exactly that.

mod spec;
pub mod wings;

use thiserror::Error;

use crate::expansion::{Adjoint, ExpansionError, ExpansionSpec};
use crate::tube::{Arc, ArcCollection, TubeCtx};

pub use spec::{single_tube_specs, verify_tilting_spec, TiltingSpec, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("no tube at point {0}")]
    UnknownPoint(String),
    #[error("tube at {point} has rank {found}, the expansion needs {expected}")]
    RankMismatch { point: String, expected: usize, found: usize },
    #[error("the tube at {0} has rank 1 and admits no expansion")]
    RankOne(String),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error("expected exactly one new summand ({context}), found {}: {}", .candidates.len(), show(.candidates))]
    NotUnique { context: &'static str, candidates: Vec<Arc> },
    #[error("branch data at {0} is not a branch configuration: {1}")]
    NotBranch(String, String),
    #[error("glued spec is not a valid (B,V) pair: {}", .0.join("; "))]
    InvalidOutput(Vec<String>),
    #[error("the seed produced the open right-gluing configuration (τS_ρ in a wing, S_ρ outside)")]
    Undetermined,
    #[error("round trip mismatch at {point}: missing {}, extra {}", show(.missing), show(.extra))]
    RoundTrip { point: String, missing: Vec<Arc>, extra: Vec<Arc> },
}

fn show(arcs: &[Arc]) -> String {
    if arcs.is_empty() {
        return "none".to_string();
    }
    arcs.iter().map(Arc::to_string).collect::<Vec<_>>().join(" ")
}

/// Result of gluing through a right universal map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GlueOutcome {
    NewSummand(Arc),
    TorsionUnchanged,
    Undetermined,
}

/// The four configurations of right gluing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RightCase {
    /// `x̄ ∈ V`.
    InV,
    /// `x̄ ∉ V` and `S_ρ` lies in a wing of the pushed branch.
    RhoInWing,
    /// `x̄ ∉ V` and `τS_ρ` is Hom- and Ext-orthogonal to the pushed branch.
    Orthogonal,
    /// `x̄ ∉ V`, `τS_ρ` in a wing and `S_ρ` not.
    TauRhoInWing,
}

/// A seed for reconstructing the tube data at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub side: Adjoint,
    pub lambda: Arc,
    pub reduced: TiltingSpec,
}

fn tube_at<'a>(t: &'a TiltingSpec, x: &str) -> Result<&'a ArcCollection, GlueError> {
    t.tube(x).ok_or_else(|| GlueError::UnknownPoint(x.to_string()))
}

fn pushed_tube(spec: &ExpansionSpec, t: &TiltingSpec, x: &str) -> Result<ArcCollection, GlueError> {
    let c = tube_at(t, x)?;
    if c.rank != spec.reduced_rank() {
        return Err(GlueError::RankMismatch { point: x.to_string(), expected: spec.reduced_rank(), found: c.rank });
    }
    Ok(spec.push_collection(c)?)
}

fn rigid_with(ctx: &TubeCtx, a: &Arc, others: &ArcCollection) -> bool {
    ctx.ext_dim(a, a) == 0 && others.arcs.iter().all(|b| ctx.ext_dim(a, b) == 0 && ctx.ext_dim(b, a) == 0)
}

/// The pushed collection plus one arc, checked against the `(B,V)` shape.
fn extended(t: &TiltingSpec, x: &str, pushed: &ArcCollection, new: Option<Arc>) -> Result<TiltingSpec, GlueError> {
    let c = ArcCollection::new(pushed.rank, pushed.arcs.iter().copied().chain(new)).expect("rank >= 2");
    let out = t.with_tube(x, c);
    let verdict = out.verify();
    if !verdict.is_valid() {
        return Err(GlueError::InvalidOutput(verdict.reasons));
    }
    Ok(out)
}

fn branch_roots(ctx: &TubeCtx, x: &str, pushed: &ArcCollection) -> Result<Vec<Arc>, GlueError> {
    let finite: Vec<Arc> = pushed.arcs.iter().filter(|a| a.is_finite()).copied().collect();
    if finite.len() != pushed.arcs.len() {
        return Err(GlueError::NotBranch(x.to_string(), "Prüfer arc outside V".to_string()));
    }
    Ok(wings::roots(ctx, &finite))
}

/// Arcs with socle `S_λ` that can join the pushed collection.
///
/// In a `V`-tube these are the exceptional arcs and the Prüfer arc with
/// socle `S_λ` that are rigid against everything pushed. Outside `V` the
/// search stays in the wing of the branch that has extensions with `S_λ`;
/// with no such branch the answer is `S_λ`.
pub fn left_candidates(spec: &ExpansionSpec, pushed: &ArcCollection, in_v: bool, x: &str) -> Result<Vec<Arc>, GlueError> {
    let ctx = spec.big();
    let n = ctx.rank() as i64;
    let l0 = spec.lambda().start;
    let fits = |a: &Arc| rigid_with(&ctx, a, pushed);
    if in_v {
        let all = (1..n).map(|len| Arc::fin(l0, l0 + len + 1)).chain([Arc::pruefer(l0)]);
        return Ok(all.filter(fits).collect());
    }
    let roots = branch_roots(&ctx, x, pushed)?;
    let hits: Vec<&Arc> = pushed.arcs.iter().filter(|a| ctx.ext_dim(a, &spec.lambda()) > 0).collect();
    let Some(hit) = hits.first() else { return Ok(vec![spec.lambda()].into_iter().filter(fits).collect()) };
    let lifted = hit.shift(l0 + 1 - hit.start);
    let root = roots
        .iter()
        .find_map(|r| wings::lift_inside(&ctx, r, &lifted).map(|inner| r.shift(lifted.start - inner.start)))
        .ok_or_else(|| GlueError::NotBranch(x.to_string(), format!("{hit} lies in no wing")))?;
    let end = root.finite_end().expect("roots are finite");
    Ok((l0 + 2..=end).map(|b| Arc::fin(l0, b)).filter(fits).collect())
}

/// Arcs with top `S_ρ` that can join the pushed collection, for the
/// configurations that admit a new summand.
fn right_candidates(spec: &ExpansionSpec, pushed: &ArcCollection, window_start: i64) -> Vec<Arc> {
    let ctx = spec.big();
    let r_end = spec.rho().finite_end().expect("simple");
    (window_start..=r_end - 2).rev().map(|a| Arc::fin(a, r_end)).filter(|a| rigid_with(&ctx, a, pushed)).collect()
}

fn unique(context: &'static str, candidates: Vec<Arc>) -> Result<Arc, GlueError> {
    match candidates.as_slice() {
        [a] => Ok(*a),
        _ => Err(GlueError::NotUnique { context, candidates }),
    }
}

/// Glues `S_λ` and the reduced spec `t` through a left universal map.
/// The tube at `x` must have rank `spec.rank() − 1`.
pub fn glue_left(spec: &ExpansionSpec, t: &TiltingSpec, x: &str) -> Result<TiltingSpec, GlueError> {
    let pushed = pushed_tube(spec, t, x)?;
    let in_v = t.in_v(x);
    let new = unique(if in_v { "left, x in V" } else { "left, x outside V" }, left_candidates(spec, &pushed, in_v, x)?)?;
    extended(t, x, &pushed, Some(new))
}

/// Which of the four right-gluing configurations applies.
pub fn classify_right(spec: &ExpansionSpec, pushed: &ArcCollection, in_v: bool, x: &str) -> Result<RightCase, GlueError> {
    if in_v {
        return Ok(RightCase::InV);
    }
    let ctx = spec.big();
    let roots = branch_roots(&ctx, x, pushed)?;
    let w = wings::base_union(&ctx, &roots);
    let rho = spec.rho();
    let tau_rho = ctx.tau(&rho);
    if w.contains(&wings::simple_index(&ctx, &rho)) {
        return Ok(RightCase::RhoInWing);
    }
    let orthogonal = pushed.arcs.iter().all(|a| ctx.hom_dim(a, &tau_rho).expect("finite target") == 0 && ctx.ext_dim(a, &tau_rho) == 0);
    if orthogonal {
        Ok(RightCase::Orthogonal)
    } else if w.contains(&wings::simple_index(&ctx, &tau_rho)) {
        Ok(RightCase::TauRhoInWing)
    } else {
        unreachable!("τS_ρ outside the wings is orthogonal to the branch")
    }
}

/// Glues through a right universal map. An `Undetermined` outcome returns
/// the pushed spec unchanged.
pub fn glue_right(spec: &ExpansionSpec, t: &TiltingSpec, x: &str) -> Result<(GlueOutcome, TiltingSpec), GlueError> {
    let pushed = pushed_tube(spec, t, x)?;
    let ctx = spec.big();
    let n = ctx.rank() as i64;
    let r_end = spec.rho().finite_end().expect("simple");
    match classify_right(spec, &pushed, t.in_v(x), x)? {
        RightCase::InV => {
            let new = unique("right, x in V", right_candidates(spec, &pushed, r_end - n))?;
            Ok((GlueOutcome::NewSummand(new), extended(t, x, &pushed, Some(new))?))
        }
        RightCase::RhoInWing => {
            let roots = branch_roots(&ctx, x, &pushed)?;
            let rho_pos = r_end - 1;
            let root = roots
                .iter()
                .find_map(|r| {
                    let k = (rho_pos - r.start - 1).div_euclid(n);
                    let lr = r.shift(k * n);
                    (lr.start < rho_pos && rho_pos < lr.finite_end().expect("finite")).then_some(lr)
                })
                .expect("S_ρ lies in some wing");
            let new = unique("right, S_ρ in a wing", right_candidates(spec, &pushed, root.start))?;
            Ok((GlueOutcome::NewSummand(new), extended(t, x, &pushed, Some(new))?))
        }
        RightCase::Orthogonal => Ok((GlueOutcome::TorsionUnchanged, extended(t, x, &pushed, None)?)),
        RightCase::TauRhoInWing => Ok((GlueOutcome::Undetermined, t.with_tube(x, pushed))),
    }
}

/// Applies `i^*` or `i^!` to the tube at `x`.
pub fn reduce_spec(spec: &ExpansionSpec, t: &TiltingSpec, x: &str, adj: Adjoint) -> Result<TiltingSpec, GlueError> {
    let c = tube_at(t, x)?;
    if c.rank != spec.rank() {
        return Err(GlueError::RankMismatch { point: x.to_string(), expected: spec.rank(), found: c.rank });
    }
    Ok(t.with_tube(x, spec.reduce_collection(c, adj)?))
}

/// Picks `S_λ`, the side and the reduced spec for the tube at `x`.
///
/// Empty tube data: the least simple, glued on the right. Prüfer arcs only:
/// the least simple, on the left. Otherwise take the least simple summand
/// `S₁` and the rest `B₁` (Prüfer arcs included): if `Hom(B₁,S₁) ≠ 0` or
/// both Hom spaces vanish, `S_λ = S₁` on the left; if `Hom(S₁,B₁) ≠ 0`,
/// `S_λ = τ⁻S₁` on the right.
pub fn choose_seed(t: &TiltingSpec, x: &str) -> Result<Seed, GlueError> {
    let c = tube_at(t, x)?;
    if c.rank < 2 {
        return Err(GlueError::RankOne(x.to_string()));
    }
    let ctx = c.ctx();
    let least = Arc::fin(0, 2);
    let (side, lambda) = if c.arcs.is_empty() {
        (Adjoint::Right, least)
    } else if c.arcs.iter().all(|a| !a.is_finite()) {
        (Adjoint::Left, least)
    } else {
        let s1 =
            *c.arcs.iter().find(|a| a.is_simple()).ok_or_else(|| GlueError::NotBranch(x.to_string(), "no simple summand".to_string()))?;
        let rest = || c.arcs.iter().filter(move |a| **a != s1);
        let into = rest().any(|b| ctx.hom_dim(b, &s1).expect("finite target") > 0);
        let from = rest().any(|b| ctx.hom_dim(&s1, b).expect("finite source") > 0);
        if !into && from {
            (Adjoint::Right, ctx.tau_inverse(&s1))
        } else {
            (Adjoint::Left, s1)
        }
    };
    let spec = ExpansionSpec::new(c.rank, lambda)?;
    Ok(Seed { side, lambda, reduced: reduce_spec(&spec, t, x, side)? })
}

/// Glues on the given side; a left gluing always reports its new summand.
pub fn glue(spec: &ExpansionSpec, t: &TiltingSpec, x: &str, side: Adjoint) -> Result<(GlueOutcome, TiltingSpec), GlueError> {
    match side {
        Adjoint::Left => {
            let out = glue_left(spec, t, x)?;
            let new = out.tube(x).and_then(|c| c.arcs.iter().find(|a| a.start == spec.lambda().start).copied());
            Ok((GlueOutcome::NewSummand(new.expect("left gluing adds an arc with socle S_λ")), out))
        }
        Adjoint::Right => glue_right(spec, t, x),
    }
}

/// Glues a seed back at `x`.
pub fn glue_seed(seed: &Seed, rank: usize, x: &str) -> Result<(GlueOutcome, TiltingSpec), GlueError> {
    glue(&ExpansionSpec::new(rank, seed.lambda)?, &seed.reduced, x, seed.side)
}

/// `choose_seed` followed by gluing gives back `t`.
pub fn round_trip(t: &TiltingSpec, x: &str) -> Result<(), GlueError> {
    let rank = tube_at(t, x)?.rank;
    let seed = choose_seed(t, x)?;
    let (outcome, glued) = glue_seed(&seed, rank, x)?;
    if outcome == GlueOutcome::Undetermined {
        return Err(GlueError::Undetermined);
    }
    if glued != *t {
        let (want, got) = (&tube_at(t, x)?.arcs, &tube_at(&glued, x)?.arcs);
        return Err(GlueError::RoundTrip {
            point: x.to_string(),
            missing: want.difference(got).copied().collect(),
            extra: got.difference(want).copied().collect(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(n: usize, arcs: &[Arc]) -> ArcCollection {
        ArcCollection::new(n, arcs.iter().copied()).unwrap()
    }

    fn homogeneous() -> (&'static str, ArcCollection) {
        ("h", coll(1, &[Arc::pruefer(0)]))
    }

    #[test]
    fn left_outside_v_with_empty_branch_adds_s_lambda() {
        let spec = ExpansionSpec::new(4, Arc::fin(1, 3)).unwrap();
        let t = TiltingSpec::new([("x", coll(3, &[])), homogeneous()], ["h"]);
        let out = glue_left(&spec, &t, "x").unwrap();
        assert_eq!(out.tube("x").unwrap(), &coll(4, &[Arc::fin(1, 3)]));
    }

    #[test]
    fn left_in_v_with_all_pruefers_gives_all_pruefers() {
        for n in 2..=5usize {
            for l in 0..n as i64 {
                let spec = ExpansionSpec::new(n, Arc::fin(l, l + 2)).unwrap();
                let t = TiltingSpec::new([("x", coll(n - 1, &(0..n as i64 - 1).map(Arc::pruefer).collect::<Vec<_>>()))], ["x"]);
                let out = glue_left(&spec, &t, "x").unwrap();
                let all = coll(n, &(0..n as i64).map(Arc::pruefer).collect::<Vec<_>>());
                assert_eq!(out.tube("x").unwrap(), &all);
            }
        }
    }

    #[test]
    fn tau_rho_in_a_wing_is_undetermined() {
        // rank 4, S_λ = S_2, S_ρ = S_1; the pushed branch is the simple τS_ρ = S_0
        let spec = ExpansionSpec::new(4, Arc::fin(1, 3)).unwrap();
        let t = TiltingSpec::new([("x", coll(3, &[Arc::fin(2, 4)])), homogeneous()], ["h"]);
        let pushed = spec.push_collection(t.tube("x").unwrap()).unwrap();
        assert_eq!(pushed, coll(4, &[Arc::simple(0)]));
        assert_eq!(classify_right(&spec, &pushed, false, "x"), Ok(RightCase::TauRhoInWing));
        let (outcome, out) = glue_right(&spec, &t, "x").unwrap();
        assert_eq!(outcome, GlueOutcome::Undetermined);
        assert_eq!(out.tube("x").unwrap(), &pushed);
    }

    #[test]
    fn orthogonal_tau_rho_leaves_torsion_unchanged() {
        let spec = ExpansionSpec::new(4, Arc::fin(1, 3)).unwrap();
        let t = TiltingSpec::new([("x", coll(3, &[])), homogeneous()], ["h"]);
        let (outcome, out) = glue_right(&spec, &t, "x").unwrap();
        assert_eq!(outcome, GlueOutcome::TorsionUnchanged);
        assert!(out.tube("x").unwrap().arcs.is_empty());
    }

    #[test]
    fn right_in_v_adds_an_arc_with_top_rho() {
        let spec = ExpansionSpec::new(3, Arc::fin(1, 3)).unwrap();
        let t = TiltingSpec::new([("x", coll(2, &[Arc::pruefer(0), Arc::pruefer(1)]))], ["x"]);
        let (outcome, out) = glue_right(&spec, &t, "x").unwrap();
        let GlueOutcome::NewSummand(a) = outcome else { panic!("{outcome:?}") };
        assert_eq!(spec.big().top(&a).unwrap(), spec.rho());
        assert!(out.verify().is_valid());
    }

    #[test]
    fn seed_cases() {
        // a single simple is its own root: left at that simple
        let t = TiltingSpec::new([("x", coll(3, &[Arc::simple(2)])), homogeneous()], ["h"]);
        let seed = choose_seed(&t, "x").unwrap();
        assert_eq!((seed.side, seed.lambda), (Adjoint::Left, Arc::simple(2)));
        // nothing in the tube: right
        let t = TiltingSpec::new([("x", coll(3, &[])), homogeneous()], ["h"]);
        assert_eq!(choose_seed(&t, "x").unwrap().side, Adjoint::Right);
        // all Prüfer arcs: left, and the one with socle S_λ merges away
        let t = TiltingSpec::new([("x", coll(3, &[Arc::pruefer(0), Arc::pruefer(1), Arc::pruefer(2)]))], ["x"]);
        let seed = choose_seed(&t, "x").unwrap();
        assert_eq!(seed.side, Adjoint::Left);
        assert_eq!(seed.reduced.tube("x").unwrap().arcs.len(), 2);
        // S_1 ⊂ [0,3]: Hom(S₁, B₁) ≠ 0 routes right at τ⁻S₁
        let t = TiltingSpec::new([("x", coll(4, &[Arc::fin(0, 2), Arc::fin(0, 3)])), homogeneous()], ["h"]);
        let seed = choose_seed(&t, "x").unwrap();
        assert_eq!((seed.side, seed.lambda), (Adjoint::Right, Arc::simple(2)));
        let t = TiltingSpec::new([("x", coll(1, &[Arc::pruefer(0)]))], ["x"]);
        assert_eq!(choose_seed(&t, "x"), Err(GlueError::RankOne("x".into())));
    }

    #[test]
    fn round_trip_small_cases() {
        for n in 2..=3 {
            for t in single_tube_specs(n) {
                assert_eq!(round_trip(&t, "x"), Ok(()), "{t}");
            }
        }
    }

    #[test]
    fn errors_name_the_problem() {
        let spec = ExpansionSpec::new(4, Arc::fin(1, 3)).unwrap();
        let t = TiltingSpec::new([("x", coll(2, &[]))], ["x"]);
        assert!(matches!(glue_left(&spec, &t, "x"), Err(GlueError::RankMismatch { .. })));
        assert!(matches!(glue_left(&spec, &t, "y"), Err(GlueError::UnknownPoint(_))));
    }
}
