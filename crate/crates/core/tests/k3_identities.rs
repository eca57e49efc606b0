//! The kind 3 operators are not the union/intersection of kinds 1 and 2 in
//! general: a meet of joins can exceed the join of the meets. The kind 4
//! identities do hold. A minimal three-object instance pins this down.

mod common;

use common::{pairs, Reference};
use ivsoft_core::approximations::{fuzzy_lower, fuzzy_upper};
use ivsoft_core::{
    IVFuzzySet, IntervalValue, Kind, NeighborhoodSystem, SoftMapping, SoftSpace, Universe,
};

fn iv(s: &str) -> IntervalValue {
    s.parse().unwrap()
}

fn instance() -> (SoftSpace, IVFuzzySet) {
    let u = Universe::new(["x1", "x2", "x3"]).unwrap();
    let set = |g: [&str; 3]| IVFuzzySet::new(u.clone(), g.map(iv).to_vec()).unwrap();
    let mapping = SoftMapping::new(
        u.clone(),
        [
            ("e1", set(["[0,0]", "[0,1]", "[0,0]"])),
            ("e2", set(["[0,0]", "[0,1]", "[0,1]"])),
            ("e3", set(["[1,1]", "[0,1]", "[0,1]"])),
        ],
    )
    .unwrap();
    let space = SoftSpace::new(mapping, iv("[0,1]")).unwrap();
    (space, set(["[0,1]", "[0,1]", "[1,1]"]))
}

#[test]
fn lower3_exceeds_union_of_lower1_and_lower2() {
    let (space, x) = instance();
    let sys = NeighborhoodSystem::new(&space);
    let l1 = fuzzy_lower(&sys, Kind::K1, &x).unwrap();
    let l2 = fuzzy_lower(&sys, Kind::K2, &x).unwrap();
    let l3 = fuzzy_lower(&sys, Kind::K3, &x).unwrap();
    let all_unit = vec![iv("[0,1]"); 3];
    assert_eq!(l1.grades(), all_unit.as_slice());
    assert_eq!(l2.grades(), all_unit.as_slice());
    assert_eq!(l3.grades(), &[iv("[0,1]"), iv("[0,1]"), iv("[1,1]")]);
    assert_ne!(l3, l1.union(&l2).unwrap());

    let r = Reference::of(&space);
    assert_eq!(pairs(&l3), r.lower(3, &pairs(&x)));
}

#[test]
fn dual_failure_for_upper3() {
    let (space, x) = instance();
    let sys = NeighborhoodSystem::new(&space);
    let xc = x.complement();
    let u1 = fuzzy_upper(&sys, Kind::K1, &xc).unwrap();
    let u2 = fuzzy_upper(&sys, Kind::K2, &xc).unwrap();
    let u3 = fuzzy_upper(&sys, Kind::K3, &xc).unwrap();
    assert_ne!(u3, u1.intersect(&u2).unwrap());
    assert!(u3.is_subset(&u1.intersect(&u2).unwrap()).unwrap());
}

#[test]
fn kind4_identities_hold_here() {
    let (space, x) = instance();
    let sys = NeighborhoodSystem::new(&space);
    let lower = |k| fuzzy_lower(&sys, k, &x).unwrap();
    let upper = |k| fuzzy_upper(&sys, k, &x).unwrap();
    assert_eq!(
        lower(Kind::K4),
        lower(Kind::K1).intersect(&lower(Kind::K2)).unwrap()
    );
    assert_eq!(
        upper(Kind::K4),
        upper(Kind::K1).union(&upper(Kind::K2)).unwrap()
    );
}
