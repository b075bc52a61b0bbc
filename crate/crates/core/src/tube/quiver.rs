use std::fmt::Write;

use super::{Arc, TubeCtx};

/// Truncated translation quiver of a tube: arcs of bounded span, the
/// irreducible maps between them, and the translate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationQuiver {
    pub rank: usize,
    pub vertices: Vec<Arc>,
    pub arrows: Vec<(Arc, Arc)>,
    pub tau: Vec<(Arc, Arc)>,
}

impl TranslationQuiver {
    pub(super) fn build(ctx: &TubeCtx, max_span: i64) -> TranslationQuiver {
        let n = ctx.rank() as i64;
        let mut vertices = Vec::new();
        let mut arrows = Vec::new();
        for i in 0..n {
            for span in 2..=max_span {
                let a = Arc::fin(i, i + span);
                vertices.push(a);
                if span < max_span {
                    arrows.push((a, ctx.normalize(&Arc::fin(i, i + span + 1))));
                }
                if span > 2 {
                    arrows.push((a, ctx.normalize(&Arc::fin(i + 1, i + span))));
                }
            }
        }
        vertices.sort();
        arrows.sort();
        let tau = vertices.iter().map(|a| (*a, ctx.tau(a))).collect();
        TranslationQuiver { rank: ctx.rank(), vertices, arrows, tau }
    }

    pub fn arrow_count(&self, from: &Arc, to: &Arc) -> usize {
        self.arrows.iter().filter(|(s, t)| s == from && t == to).count()
    }

    pub fn tau_of(&self, a: &Arc) -> Option<Arc> {
        self.tau.iter().find(|(x, _)| x == a).map(|(_, t)| *t)
    }

    /// Number of meshes: vertices `a` whose translate `τa` has an arrow
    /// into some middle vertex that itself maps to `a`.
    pub fn mesh_count(&self) -> usize {
        self.vertices
            .iter()
            .filter(|a| {
                let t = self.tau_of(a).expect("every vertex has a translate");
                self.vertices.iter().any(|b| self.arrow_count(&t, b) > 0 && self.arrow_count(b, a) > 0)
            })
            .count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph tube_rank_{} {{", self.rank);
        for v in &self.vertices {
            let _ = writeln!(s, "  \"{v}\";");
        }
        for (a, b) in &self.arrows {
            let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
        }
        for (a, b) in &self.tau {
            let _ = writeln!(s, "  \"{a}\" -> \"{b}\" [style=dashed, label=\"tau\"];");
        }
        s.push_str("}\n");
        s
    }
}
