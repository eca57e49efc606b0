//! Fuzzy and crisp β-neighborhoods.
//!
//! For an object `x`, the fuzzy neighborhood `SÑ_x` is the intersection of every
//! `F(e)` whose grade at `x` dominates β. The product order is partial, so a valid
//! β-covering can still leave that index set empty at some `x` (the join of the
//! grades dominates β while no single grade does). The empty intersection is taken
//! to be `I^U`; [`NeighborhoodSystem::index_set_is_empty`] reports where this
//! happened.
//!
//! The crisp neighborhood `S̄N_x` collects the objects whose `SÑ_x` grade dominates
//! β. The complementary neighborhoods are transposes: `SM̃_x(y) = SÑ_y(x)`, and
//! `S̄M_x = {y : β ≤ SM̃_x(y)}`, equivalently `{y : x ∈ S̄N_y}`.

use std::sync::Arc;

use crate::crisp::CrispSubset;
use crate::error::Result;
use crate::interval::IntervalValue;
use crate::ivfs::{IVFuzzySet, Universe};
use crate::soft_space::SoftSpace;

/// Parameters whose grade at object `i` dominates β.
pub fn index_set(space: &SoftSpace, i: usize) -> Vec<usize> {
    let beta = space.beta();
    space
        .mapping()
        .sets()
        .iter()
        .enumerate()
        .filter(|(_, s)| beta.leq(&s.grade_at(i)))
        .map(|(j, _)| j)
        .collect()
}

fn neighborhood_row(space: &SoftSpace, i: usize) -> (Vec<IntervalValue>, bool) {
    let n = space.universe().len();
    let sets = space.mapping().sets();
    let indices = index_set(space, i);
    let row = (0..n)
        .map(|y| {
            indices
                .iter()
                .fold(IntervalValue::TOP, |acc, &j| acc.meet(sets[j].grade_at(y)))
        })
        .collect();
    (row, indices.is_empty())
}

/// `{y : β ≤ G(y)}` for an arbitrary interval-valued fuzzy set `G`.
pub fn crisp_of(set: &IVFuzzySet, beta: IntervalValue) -> CrispSubset {
    CrispSubset::from_fn(set.universe().clone(), |y| beta.leq(&set.grade_at(y)))
}

/// `SÑ_x`, computed directly from the space.
pub fn fuzzy_neighborhood(space: &SoftSpace, object: &str) -> Result<IVFuzzySet> {
    let i = space.universe().position(object)?;
    let (row, _) = neighborhood_row(space, i);
    IVFuzzySet::new(space.universe().clone(), row)
}

/// `S̄N_x`, computed directly from the space.
pub fn crisp_neighborhood(space: &SoftSpace, object: &str) -> Result<CrispSubset> {
    Ok(crisp_of(&fuzzy_neighborhood(space, object)?, space.beta()))
}

/// `SM̃_x`, computed directly from the space.
pub fn complementary_fuzzy_neighborhood(space: &SoftSpace, object: &str) -> Result<IVFuzzySet> {
    let x = space.universe().position(object)?;
    let sets = space.mapping().sets();
    let column = (0..space.universe().len())
        .map(|y| {
            index_set(space, y)
                .into_iter()
                .fold(IntervalValue::TOP, |acc, j| acc.meet(sets[j].grade_at(x)))
        })
        .collect();
    IVFuzzySet::new(space.universe().clone(), column)
}

/// `S̄M_x`, computed directly from the space.
pub fn complementary_crisp_neighborhood(space: &SoftSpace, object: &str) -> Result<CrispSubset> {
    Ok(crisp_of(
        &complementary_fuzzy_neighborhood(space, object)?,
        space.beta(),
    ))
}

/// All four neighborhood families of a space, precomputed as `|U| × |U|` matrices.
#[derive(Debug, Clone)]
pub struct NeighborhoodSystem {
    universe: Arc<Universe>,
    beta: IntervalValue,
    /// Row-major: `fuzzy[x * n + y] = SÑ_x(y)`.
    fuzzy: Vec<IntervalValue>,
    /// Row-major: `crisp[x * n + y]` iff `y ∈ S̄N_x`.
    crisp: Vec<bool>,
    empty_index: Vec<bool>,
}

impl NeighborhoodSystem {
    pub fn new(space: &SoftSpace) -> Self {
        let n = space.universe().len();
        let beta = space.beta();
        let mut fuzzy = Vec::with_capacity(n * n);
        let mut empty_index = Vec::with_capacity(n);
        for x in 0..n {
            let (row, empty) = neighborhood_row(space, x);
            fuzzy.extend(row);
            empty_index.push(empty);
        }
        let crisp = fuzzy.iter().map(|g| beta.leq(g)).collect();
        NeighborhoodSystem {
            universe: space.universe().clone(),
            beta,
            fuzzy,
            crisp,
            empty_index,
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn beta(&self) -> IntervalValue {
        self.beta
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    /// `SÑ_x(y)`.
    #[inline]
    pub fn fuzzy_grade(&self, x: usize, y: usize) -> IntervalValue {
        self.fuzzy[x * self.len() + y]
    }

    /// `SM̃_x(y) = SÑ_y(x)`.
    #[inline]
    pub fn complementary_grade(&self, x: usize, y: usize) -> IntervalValue {
        self.fuzzy_grade(y, x)
    }

    /// `y ∈ S̄N_x`.
    #[inline]
    pub fn in_crisp(&self, x: usize, y: usize) -> bool {
        self.crisp[x * self.len() + y]
    }

    /// `y ∈ S̄M_x`.
    #[inline]
    pub fn in_complementary_crisp(&self, x: usize, y: usize) -> bool {
        self.in_crisp(y, x)
    }

    /// Whether no parameter's grade at `x` dominated β, so `SÑ_x = I^U` by convention.
    pub fn index_set_is_empty(&self, x: usize) -> bool {
        self.empty_index[x]
    }

    pub fn fuzzy_row(&self, x: usize) -> IVFuzzySet {
        let n = self.len();
        IVFuzzySet::new(
            self.universe.clone(),
            self.fuzzy[x * n..(x + 1) * n].to_vec(),
        )
        .expect("row length matches universe")
    }

    pub fn complementary_row(&self, x: usize) -> IVFuzzySet {
        let column = (0..self.len())
            .map(|y| self.complementary_grade(x, y))
            .collect();
        IVFuzzySet::new(self.universe.clone(), column).expect("column length matches universe")
    }

    pub fn crisp_row(&self, x: usize) -> CrispSubset {
        CrispSubset::from_fn(self.universe.clone(), |y| self.in_crisp(x, y))
    }

    pub fn complementary_crisp_row(&self, x: usize) -> CrispSubset {
        CrispSubset::from_fn(self.universe.clone(), |y| self.in_complementary_crisp(x, y))
    }

    pub fn fuzzy_neighborhood(&self, object: &str) -> Result<IVFuzzySet> {
        Ok(self.fuzzy_row(self.universe.position(object)?))
    }

    pub fn crisp_neighborhood(&self, object: &str) -> Result<CrispSubset> {
        Ok(self.crisp_row(self.universe.position(object)?))
    }

    pub fn complementary_fuzzy_neighborhood(&self, object: &str) -> Result<IVFuzzySet> {
        Ok(self.complementary_row(self.universe.position(object)?))
    }

    pub fn complementary_crisp_neighborhood(&self, object: &str) -> Result<CrispSubset> {
        Ok(self.complementary_crisp_row(self.universe.position(object)?))
    }

    /// The full fuzzy grade matrix, one row per object.
    pub fn matrix(&self) -> Vec<Vec<IntervalValue>> {
        self.fuzzy.chunks(self.len()).map(<[_]>::to_vec).collect()
    }
}
