//! Greedy reduction of failing instances.

use super::instance::{Context, Instance};
use super::registry::{Theorem, Verdict};

/// Upper bound on accepted reductions; each one strictly lowers
/// `(objects, parameters, unsnapped endpoints)` so this is never reached in practice.
const MAX_STEPS: usize = 10_000;

fn failure(theorem: &Theorem, inst: &Instance) -> Option<String> {
    match theorem.run(&Context::new(inst)) {
        Verdict::Fail(detail) => Some(detail),
        _ => None,
    }
}

fn measure(inst: &Instance) -> (usize, usize, usize) {
    (
        inst.universe().len(),
        inst.space.mapping().parameters().len(),
        inst.unsnapped(),
    )
}

fn candidates(inst: &Instance) -> impl Iterator<Item = Instance> + '_ {
    let objects = (0..inst.universe().len()).filter_map(|i| inst.without_object(i));
    let params =
        (0..inst.space.mapping().parameters().len()).filter_map(|j| inst.without_parameter(j));
    let snaps = (0..inst.interval_count()).filter_map(|k| inst.snap_interval(k));
    objects.chain(params).chain(snaps)
}

/// Repeatedly takes the first candidate edit that still fails `theorem`: drop an
/// object, drop a parameter, or snap an interval to `{0, 1/2, 1}`. Returns the
/// reduced instance and its failure detail.
pub(crate) fn shrink(theorem: &Theorem, inst: &Instance, detail: String) -> (Instance, String) {
    let mut current = inst.clone();
    let mut detail = detail;
    for _ in 0..MAX_STEPS {
        let next = candidates(&current).find_map(|c| failure(theorem, &c).map(|d| (c, d)));
        match next {
            Some((c, d)) => {
                debug_assert!(measure(&c) < measure(&current));
                current = c;
                detail = d;
            }
            None => break,
        }
    }
    (current, detail)
}
