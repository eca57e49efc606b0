//! Interval-valued fuzzy soft sets, β-covering validation, and the approximation
//! space `(U, F, A)_β`.
//!
//! A [`SoftSpace`] can only be obtained through [`build_space`], which enforces the
//! β-covering condition: at every object the join of all parameter grades
//! dominates β. Under [`CoveringPolicy::Repair`] the designated parameter is raised
//! to `F(e0)(x) ∨ β` at each failing object, which also guarantees that the
//! neighborhood index set `{e : β ≤ F(e)(x)}` is nonempty there.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::{family_join, IntervalValue};
use crate::ivfs::{same_universe, IVFuzzySet, Universe};

/// The soft set `(F, A)`: one interval-valued fuzzy set per parameter.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftMapping {
    universe: Arc<Universe>,
    parameters: Vec<String>,
    sets: Vec<IVFuzzySet>,
}

impl SoftMapping {
    pub fn new<I, S>(universe: Arc<Universe>, assignment: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, IVFuzzySet)>,
        S: Into<String>,
    {
        let mut parameters = Vec::new();
        let mut sets = Vec::new();
        let mut seen = HashSet::new();
        for (p, set) in assignment {
            let p = p.into();
            if !seen.insert(p.clone()) {
                return Err(Error::DuplicateIdentifier {
                    kind: "parameter",
                    id: p,
                });
            }
            if !same_universe(&universe, set.universe()) {
                return Err(Error::UniverseMismatch);
            }
            parameters.push(p);
            sets.push(set);
        }
        if parameters.is_empty() {
            return Err(Error::EmptyParameters);
        }
        Ok(SoftMapping {
            universe,
            parameters,
            sets,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn sets(&self) -> &[IVFuzzySet] {
        &self.sets
    }

    pub fn parameter_position(&self, parameter: &str) -> Result<usize> {
        self.parameters
            .iter()
            .position(|p| p == parameter)
            .ok_or_else(|| Error::UnknownParameter(parameter.to_string()))
    }

    /// `F(e)`.
    pub fn set(&self, parameter: &str) -> Result<&IVFuzzySet> {
        Ok(&self.sets[self.parameter_position(parameter)?])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &IVFuzzySet)> + '_ {
        self.parameters.iter().map(String::as_str).zip(&self.sets)
    }

    /// `(⋃_{e∈A} F(e))(x)` for the object at index `i`.
    pub fn joined_grade(&self, i: usize) -> IntervalValue {
        family_join(self.sets.iter().map(|s| s.grade_at(i))).expect("parameter set is nonempty")
    }

    /// Soft inclusion `(F, A) ⊂ (G, B)`: `A ⊏ B` and `F(e) ⊂ G(e)` for every `e ∈ A`.
    pub fn is_soft_subset(&self, other: &SoftMapping) -> Result<bool> {
        for (p, set) in self.iter() {
            let Ok(theirs) = other.set(p) else {
                return Ok(false);
            };
            if !set.is_subset(theirs)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn with_set(&self, j: usize, set: IVFuzzySet) -> Self {
        let mut out = self.clone();
        out.sets[j] = set;
        out
    }

    pub(crate) fn without_parameter(&self, j: usize) -> Option<Self> {
        if self.parameters.len() <= 1 {
            return None;
        }
        let mut out = self.clone();
        out.parameters.remove(j);
        out.sets.remove(j);
        Some(out)
    }

    pub(crate) fn without_object(&self, universe: Arc<Universe>, i: usize) -> Self {
        SoftMapping {
            sets: self
                .sets
                .iter()
                .map(|s| s.restricted(universe.clone(), i))
                .collect(),
            parameters: self.parameters.clone(),
            universe,
        }
    }
}

impl fmt::Debug for SoftMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

/// One object at which the β-covering condition fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringFailure {
    pub object: String,
    /// Join over all parameters at this object.
    pub attained: IntervalValue,
}

/// Outcome of [`validate_beta_covering`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub ok: bool,
    pub failures: Vec<CoveringFailure>,
}

/// Checks `β ≤ (⋃_{e∈A} F(e))(x)` at every object.
pub fn validate_beta_covering(mapping: &SoftMapping, beta: IntervalValue) -> CoveringReport {
    let failures: Vec<CoveringFailure> = (0..mapping.universe.len())
        .filter_map(|i| {
            let attained = mapping.joined_grade(i);
            (!beta.leq(&attained)).then(|| CoveringFailure {
                object: mapping.universe.name(i).to_string(),
                attained,
            })
        })
        .collect();
    CoveringReport {
        ok: failures.is_empty(),
        failures,
    }
}

/// True iff the join over parameters is `[1,1]` at every object.
pub fn is_full_covering(mapping: &SoftMapping) -> bool {
    validate_beta_covering(mapping, IntervalValue::TOP).ok
}

/// What [`build_space`] does with a mapping that is not a β-covering.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum CoveringPolicy {
    /// Reject with [`Error::NotACovering`].
    #[default]
    Strict,
    /// Raise the named parameter to `F(e0)(x) ∨ β` at every failing object.
    Repair(String),
}

impl FromStr for CoveringPolicy {
    type Err = Error;

    /// `strict` or `repair:<parameter>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "strict" => Ok(CoveringPolicy::Strict),
            other => match other.strip_prefix("repair:") {
                Some(p) if !p.is_empty() => Ok(CoveringPolicy::Repair(p.to_string())),
                _ => Err(Error::Syntax {
                    context: format!("policy {other:?}"),
                    message: "expected `strict` or `repair:<parameter>`".into(),
                }),
            },
        }
    }
}

impl fmt::Display for CoveringPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoveringPolicy::Strict => f.write_str("strict"),
            CoveringPolicy::Repair(p) => write!(f, "repair:{p}"),
        }
    }
}

/// An interval-valued fuzzy soft β-covering approximation space `(U, F, A)_β`.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftSpace {
    mapping: SoftMapping,
    beta: IntervalValue,
}

impl SoftSpace {
    /// Strict construction.
    pub fn new(mapping: SoftMapping, beta: IntervalValue) -> Result<Self> {
        build_space(mapping, beta, &CoveringPolicy::Strict)
    }

    pub fn mapping(&self) -> &SoftMapping {
        &self.mapping
    }

    pub fn beta(&self) -> IntervalValue {
        self.beta
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.mapping.universe
    }

    /// Same mapping at another threshold, strictly validated.
    pub fn with_beta(&self, beta: IntervalValue) -> Result<Self> {
        SoftSpace::new(self.mapping.clone(), beta)
    }
}

impl fmt::Debug for SoftSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SoftSpace")
            .field("beta", &self.beta)
            .field("mapping", &self.mapping)
            .finish()
    }
}

pub fn build_space(
    mapping: SoftMapping,
    beta: IntervalValue,
    policy: &CoveringPolicy,
) -> Result<SoftSpace> {
    let report = validate_beta_covering(&mapping, beta);
    match policy {
        CoveringPolicy::Strict => {
            if report.ok {
                Ok(SoftSpace { mapping, beta })
            } else {
                Err(Error::NotACovering(report))
            }
        }
        CoveringPolicy::Repair(target) => {
            let j = mapping.parameter_position(target)?;
            if report.ok {
                return Ok(SoftSpace { mapping, beta });
            }
            let failing: HashSet<usize> = report
                .failures
                .iter()
                .map(|f| mapping.universe.position(&f.object))
                .collect::<Result<_>>()?;
            let repaired = mapping.sets[j].map_grades(|i, g| {
                if failing.contains(&i) {
                    g.join(beta)
                } else {
                    g
                }
            });
            let mapping = mapping.with_set(j, repaired);
            debug_assert!(validate_beta_covering(&mapping, beta).ok);
            Ok(SoftSpace { mapping, beta })
        }
    }
}
