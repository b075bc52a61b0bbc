//! Every valid single-tube spec of rank `n − 1`, glued at every simple of
//! the rank-`n` tube from both sides.

use std::collections::BTreeMap;

use siltglue::expansion::{Adjoint, ExpansionSpec};
use siltglue::glue::{classify_right, glue, single_tube_specs, GlueOutcome, RightCase};
use siltglue::tube::Arc;

#[test]
fn new_summands_are_unique_and_outputs_valid() {
    let mut cases: BTreeMap<String, usize> = BTreeMap::new();
    for n in 3..=5usize {
        for t in single_tube_specs(n - 1) {
            for l in 0..n as i64 {
                let spec = ExpansionSpec::new(n, Arc::simple(l)).unwrap();
                for side in [Adjoint::Left, Adjoint::Right] {
                    let (outcome, out) = glue(&spec, &t, "x", side).unwrap_or_else(|e| panic!("n={n} {} {side}: {e}", spec.lambda()));
                    if outcome != GlueOutcome::Undetermined {
                        assert!(out.verify().is_valid(), "n={n} {side}: {:?}", out.verify());
                    }
                    if side == Adjoint::Right {
                        let pushed = spec.push_collection(t.tube("x").unwrap()).unwrap();
                        let case = classify_right(&spec, &pushed, t.in_v("x"), "x").unwrap();
                        let undetermined = outcome == GlueOutcome::Undetermined;
                        assert_eq!(case == RightCase::TauRhoInWing, undetermined);
                        *cases.entry(format!("{case:?}")).or_default() += 1;
                    }
                }
            }
        }
    }
    // every case of the right gluing occurs
    assert_eq!(cases.len(), 4, "{cases:?}");
}
