//! Interval-valued fuzzy sets over a fixed finite universe.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::interval::IntervalValue;

/// Ordered, nonempty list of distinct object identifiers.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe {
    objects: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(objects: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        if objects.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(objects.len());
        for (i, id) in objects.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind: "object",
                    id: id.clone(),
                });
            }
        }
        Ok(Arc::new(Universe { objects, index }))
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn name(&self, i: usize) -> &str {
        &self.objects[i]
    }

    pub fn position(&self, object: &str) -> Result<usize> {
        self.index
            .get(object)
            .copied()
            .ok_or_else(|| Error::UnknownObject(object.to_string()))
    }

    /// Same universe, minus the object at `i`. `None` if that would empty it.
    pub(crate) fn without(&self, i: usize) -> Option<Arc<Universe>> {
        if self.len() <= 1 {
            return None;
        }
        let rest = self
            .objects
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, o)| o.clone());
        Universe::new(rest).ok()
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.objects).finish()
    }
}

pub(crate) fn same_universe(a: &Arc<Universe>, b: &Arc<Universe>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Pointwise binary operation on interval-valued fuzzy sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwiseOp {
    Intersect,
    Union,
}

/// Assignment of one interval value to every object of a universe.
#[derive(Clone)]
pub struct IVFuzzySet {
    universe: Arc<Universe>,
    grades: Vec<IntervalValue>,
}

impl IVFuzzySet {
    pub fn new(universe: Arc<Universe>, grades: Vec<IntervalValue>) -> Result<Self> {
        if grades.len() != universe.len() {
            return Err(Error::UniverseMismatch);
        }
        Ok(IVFuzzySet { universe, grades })
    }

    pub fn constant(universe: Arc<Universe>, value: IntervalValue) -> Self {
        let grades = vec![value; universe.len()];
        IVFuzzySet { universe, grades }
    }

    /// `I^U`: every grade is `[1,1]`.
    pub fn full(universe: Arc<Universe>) -> Self {
        Self::constant(universe, IntervalValue::TOP)
    }

    /// `I^∅`: every grade is `[0,0]`.
    pub fn empty(universe: Arc<Universe>) -> Self {
        Self::constant(universe, IntervalValue::BOTTOM)
    }

    /// Builds a set from `(object, grade)` pairs covering the universe exactly once.
    pub fn from_pairs<'a, I>(universe: Arc<Universe>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, IntervalValue)>,
    {
        let mut grades: Vec<Option<IntervalValue>> = vec![None; universe.len()];
        for (object, grade) in pairs {
            let i = universe.position(object)?;
            if grades[i].replace(grade).is_some() {
                return Err(Error::DuplicateIdentifier {
                    kind: "object",
                    id: object.to_string(),
                });
            }
        }
        let grades = grades
            .into_iter()
            .enumerate()
            .map(|(i, g)| g.ok_or_else(|| Error::MissingGrade(universe.name(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(IVFuzzySet { universe, grades })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn grades(&self) -> &[IntervalValue] {
        &self.grades
    }

    pub fn grade_at(&self, i: usize) -> IntervalValue {
        self.grades[i]
    }

    pub fn grade(&self, object: &str) -> Result<IntervalValue> {
        Ok(self.grades[self.universe.position(object)?])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, IntervalValue)> + '_ {
        self.universe
            .objects()
            .iter()
            .map(String::as_str)
            .zip(self.grades.iter().copied())
    }

    fn check_universe(&self, other: &Self) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn pointwise(op: PointwiseOp, f: &Self, g: &Self) -> Result<Self> {
        f.check_universe(g)?;
        let combine = match op {
            PointwiseOp::Intersect => IntervalValue::meet,
            PointwiseOp::Union => IntervalValue::join,
        };
        let grades = f
            .grades
            .iter()
            .zip(&g.grades)
            .map(|(a, b)| combine(*a, *b))
            .collect();
        Ok(IVFuzzySet {
            universe: f.universe.clone(),
            grades,
        })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Self::pointwise(PointwiseOp::Intersect, self, other)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        Self::pointwise(PointwiseOp::Union, self, other)
    }

    pub fn complement(&self) -> Self {
        IVFuzzySet {
            universe: self.universe.clone(),
            grades: self.grades.iter().map(|g| g.complement()).collect(),
        }
    }

    /// Fuzzy inclusion: every grade of `self` is below the matching grade of `other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a.leq(b)))
    }

    pub(crate) fn map_grades(&self, f: impl Fn(usize, IntervalValue) -> IntervalValue) -> Self {
        IVFuzzySet {
            universe: self.universe.clone(),
            grades: self
                .grades
                .iter()
                .enumerate()
                .map(|(i, g)| f(i, *g))
                .collect(),
        }
    }

    pub(crate) fn restricted(&self, universe: Arc<Universe>, drop: usize) -> Self {
        let grades = self
            .grades
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != drop)
            .map(|(_, g)| *g)
            .collect();
        IVFuzzySet { universe, grades }
    }
}

impl PartialEq for IVFuzzySet {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.grades == other.grades
    }
}

impl Eq for IVFuzzySet {}

impl fmt::Debug for IVFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}
