//! Crisp subsets of a universe.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::interval::IntervalValue;
use crate::ivfs::{same_universe, IVFuzzySet, Universe};

/// A classical subset of `U`, stored as a membership mask in universe order.
#[derive(Clone)]
pub struct CrispSubset {
    universe: Arc<Universe>,
    members: Vec<bool>,
}

impl CrispSubset {
    pub fn from_mask(universe: Arc<Universe>, members: Vec<bool>) -> Result<Self> {
        if members.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(CrispSubset { universe, members })
    }

    pub fn from_members<'a, I>(universe: Arc<Universe>, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut mask = vec![false; universe.len()];
        for m in members {
            mask[universe.position(m)?] = true;
        }
        Ok(CrispSubset {
            universe,
            members: mask,
        })
    }

    pub fn empty(universe: Arc<Universe>) -> Self {
        let members = vec![false; universe.len()];
        CrispSubset { universe, members }
    }

    pub fn full(universe: Arc<Universe>) -> Self {
        let members = vec![true; universe.len()];
        CrispSubset { universe, members }
    }

    pub(crate) fn from_fn(universe: Arc<Universe>, f: impl Fn(usize) -> bool) -> Self {
        let members = (0..universe.len()).map(f).collect();
        CrispSubset { universe, members }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn mask(&self) -> &[bool] {
        &self.members
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn contains(&self, object: &str) -> Result<bool> {
        Ok(self.members[self.universe.position(object)?])
    }

    pub fn members(&self) -> impl Iterator<Item = &str> + '_ {
        self.universe
            .objects()
            .iter()
            .zip(&self.members)
            .filter(|(_, m)| **m)
            .map(|(o, _)| o.as_str())
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|m| **m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|m| *m)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Result<Self> {
        if !same_universe(&self.universe, &other.universe) {
            return Err(Error::UniverseMismatch);
        }
        let members = self
            .members
            .iter()
            .zip(&other.members)
            .map(|(a, b)| f(*a, *b))
            .collect();
        Ok(CrispSubset {
            universe: self.universe.clone(),
            members,
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        CrispSubset {
            universe: self.universe.clone(),
            members: self.members.iter().map(|m| !m).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        if !same_universe(&self.universe, &other.universe) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self
            .members
            .iter()
            .zip(&other.members)
            .all(|(a, b)| !a || *b))
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        Ok(self.intersection(other)?.is_empty())
    }

    /// Characteristic embedding: members get `[1,1]`, everything else `[0,0]`.
    pub fn to_fuzzy(&self) -> IVFuzzySet {
        let grades = self
            .members
            .iter()
            .map(|m| {
                if *m {
                    IntervalValue::TOP
                } else {
                    IntervalValue::BOTTOM
                }
            })
            .collect();
        IVFuzzySet::new(self.universe.clone(), grades).expect("mask matches universe")
    }

    pub(crate) fn restricted(&self, universe: Arc<Universe>, drop: usize) -> Self {
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != drop)
            .map(|(_, m)| *m)
            .collect();
        CrispSubset { universe, members }
    }
}

impl PartialEq for CrispSubset {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.members == other.members
    }
}

impl Eq for CrispSubset {}

impl fmt::Debug for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}
