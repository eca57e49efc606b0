//! Slow evaluators that follow the definitions literally, recomputing every
//! neighborhood grade from the soft mapping on demand. No matrices are cached.
//! They exist to cross-check [`crate::approximations`] and are not meant for
//! large spaces.

use crate::approximations::Kind;
use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::interval::{family_join, family_meet, IntervalValue};
use crate::ivfs::{same_universe, IVFuzzySet};
use crate::soft_space::SoftSpace;

/// `SÑ_x(y)`: meet of `F(e)(y)` over every `e` with `β ≤ F(e)(x)`, or `[1,1]`.
pub fn sn(space: &SoftSpace, x: usize, y: usize) -> IntervalValue {
    let beta = space.beta();
    let grades: Vec<IntervalValue> = space
        .mapping()
        .sets()
        .iter()
        .filter(|f| beta.leq(&f.grade_at(x)))
        .map(|f| f.grade_at(y))
        .collect();
    family_meet(grades).unwrap_or(IntervalValue::TOP)
}

/// `SM̃_x(y)`.
pub fn sm(space: &SoftSpace, x: usize, y: usize) -> IntervalValue {
    sn(space, y, x)
}

/// `y ∈ S̄N_x`.
pub fn in_sn(space: &SoftSpace, x: usize, y: usize) -> bool {
    space.beta().leq(&sn(space, x, y))
}

/// `y ∈ S̄M_x`, read as `x ∈ S̄N_y`.
pub fn in_sm(space: &SoftSpace, x: usize, y: usize) -> bool {
    in_sn(space, y, x)
}

fn checked(space: &SoftSpace, universe: &std::sync::Arc<crate::ivfs::Universe>) -> Result<usize> {
    if !same_universe(space.universe(), universe) {
        return Err(Error::UniverseMismatch);
    }
    Ok(space.universe().len())
}

pub fn fuzzy_lower(space: &SoftSpace, kind: Kind, set: &IVFuzzySet) -> Result<IVFuzzySet> {
    let n = checked(space, set.universe())?;
    let mut grades = Vec::with_capacity(n);
    for x in 0..n {
        let mut terms = Vec::with_capacity(n);
        for y in 0..n {
            let nc = sn(space, x, y).complement();
            let mc = sm(space, x, y).complement();
            let kernel = match kind {
                Kind::K1 => nc,
                Kind::K2 => mc,
                Kind::K3 => family_join([nc, mc])?,
                Kind::K4 => family_meet([nc, mc])?,
            };
            terms.push(kernel.join(set.grade_at(y)));
        }
        grades.push(family_meet(terms)?);
    }
    IVFuzzySet::new(set.universe().clone(), grades)
}

pub fn fuzzy_upper(space: &SoftSpace, kind: Kind, set: &IVFuzzySet) -> Result<IVFuzzySet> {
    let n = checked(space, set.universe())?;
    let mut grades = Vec::with_capacity(n);
    for x in 0..n {
        let mut terms = Vec::with_capacity(n);
        for y in 0..n {
            let a = sn(space, x, y);
            let b = sm(space, x, y);
            let kernel = match kind {
                Kind::K1 => a,
                Kind::K2 => b,
                Kind::K3 => family_meet([a, b])?,
                Kind::K4 => family_join([a, b])?,
            };
            terms.push(kernel.meet(set.grade_at(y)));
        }
        grades.push(family_join(terms)?);
    }
    IVFuzzySet::new(set.universe().clone(), grades)
}

fn crisp_neighborhoods(space: &SoftSpace, x: usize) -> (Vec<usize>, Vec<usize>) {
    let n = space.universe().len();
    let sn_x = (0..n).filter(|&y| in_sn(space, x, y)).collect();
    let sm_x = (0..n).filter(|&y| in_sm(space, x, y)).collect();
    (sn_x, sm_x)
}

pub fn crisp_lower(space: &SoftSpace, kind: Kind, set: &CrispSubset) -> Result<CrispSubset> {
    let n = checked(space, set.universe())?;
    let mut mask = Vec::with_capacity(n);
    for x in 0..n {
        let (a, b) = crisp_neighborhoods(space, x);
        let a_in = a.iter().all(|&y| set.contains_index(y));
        let b_in = b.iter().all(|&y| set.contains_index(y));
        mask.push(match kind {
            Kind::K1 => a_in,
            Kind::K2 => b_in,
            Kind::K3 => a_in || b_in,
            Kind::K4 => a_in && b_in,
        });
    }
    CrispSubset::from_mask(set.universe().clone(), mask)
}

pub fn crisp_upper(space: &SoftSpace, kind: Kind, set: &CrispSubset) -> Result<CrispSubset> {
    let n = checked(space, set.universe())?;
    let mut mask = Vec::with_capacity(n);
    for x in 0..n {
        let (a, b) = crisp_neighborhoods(space, x);
        let a_meets = a.iter().any(|&y| set.contains_index(y));
        let b_meets = b.iter().any(|&y| set.contains_index(y));
        mask.push(match kind {
            Kind::K1 => a_meets,
            Kind::K2 => b_meets,
            Kind::K3 => a_meets && b_meets,
            Kind::K4 => a_meets || b_meets,
        });
    }
    CrispSubset::from_mask(set.universe().clone(), mask)
}
