//! One audit trial's inputs, its serialized form, and the structural edits the
//! shrinker applies to it.

use std::sync::Arc;

use indexmap::IndexMap;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::gen::{self, GenConfig};
use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::interval::{is_snapped, snap, IntervalValue};
use crate::io::{json_error, mapping_from_table, SpaceDocument};
use crate::ivfs::{IVFuzzySet, Universe};
use crate::neighborhoods::NeighborhoodSystem;
use crate::soft_space::{SoftMapping, SoftSpace};

/// Everything a theorem check may look at. All sets live over `space`'s universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub space: SoftSpace,
    /// A threshold below `space.beta()`, for β-monotonicity.
    pub lower_beta: IntervalValue,
    pub x: IVFuzzySet,
    pub y: IVFuzzySet,
    pub w: IVFuzzySet,
    /// Sampled inside the boundedness rectangle; `None` when it is empty.
    pub bounded: Option<IVFuzzySet>,
    pub cx: CrispSubset,
    pub cy: CrispSubset,
    pub family: Vec<IntervalValue>,
    pub extra: Vec<IntervalValue>,
    pub probe: IntervalValue,
    /// Same universe and β, different parameter set.
    pub paired: SoftSpace,
}

/// Derived data shared by every check of one instance.
pub struct Context<'a> {
    pub inst: &'a Instance,
    pub sys: NeighborhoodSystem,
    pub paired_sys: NeighborhoodSystem,
    pub lower_sys: Option<NeighborhoodSystem>,
}

impl<'a> Context<'a> {
    pub fn new(inst: &'a Instance) -> Self {
        let lower_sys = inst
            .space
            .with_beta(inst.lower_beta)
            .ok()
            .map(|s| NeighborhoodSystem::new(&s));
        Context {
            inst,
            sys: NeighborhoodSystem::new(&inst.space),
            paired_sys: NeighborhoodSystem::new(&inst.paired),
            lower_sys,
        }
    }

    pub fn n(&self) -> usize {
        self.sys.len()
    }

    pub fn name(&self, i: usize) -> &str {
        self.sys.universe().name(i)
    }
}

impl Instance {
    pub fn sample(config: &GenConfig, trial: u64) -> Result<Instance> {
        let mut rng = config.trial_rng(trial);
        let space = gen::gen_space_with(config, &mut rng)?;
        let d = i64::from(config.grid_denominator);
        let u = space.universe().clone();
        let lower_beta = gen::grid_interval_below(&mut rng, d, space.beta());
        let x = gen::grid_set(&mut rng, d, &u);
        let y = gen::grid_set(&mut rng, d, &u);
        let w = gen::grid_set(&mut rng, d, &u);
        let bounded = gen::bounded_sample(&mut rng, d, &NeighborhoodSystem::new(&space));
        let cx = gen::crisp_sample(&mut rng, &u);
        let cy = gen::crisp_sample(&mut rng, &u);
        let (family, extra, probe) = gen::family_sample(&mut rng, d);
        let paired = pair_space(&mut rng, d, &space);
        Ok(Instance {
            space,
            lower_beta,
            x,
            y,
            w,
            bounded,
            cx,
            cy,
            family,
            extra,
            probe,
            paired,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.space.universe()
    }

    /// Instance with object `i` removed everywhere, if any object would remain.
    pub(crate) fn without_object(&self, i: usize) -> Option<Instance> {
        let u = self.universe().without(i)?;
        let space =
            |s: &SoftSpace| SoftSpace::new(s.mapping().without_object(u.clone(), i), s.beta()).ok();
        Some(Instance {
            space: space(&self.space)?,
            paired: space(&self.paired)?,
            lower_beta: self.lower_beta,
            x: self.x.restricted(u.clone(), i),
            y: self.y.restricted(u.clone(), i),
            w: self.w.restricted(u.clone(), i),
            bounded: self.bounded.as_ref().map(|b| b.restricted(u.clone(), i)),
            cx: self.cx.restricted(u.clone(), i),
            cy: self.cy.restricted(u.clone(), i),
            family: self.family.clone(),
            extra: self.extra.clone(),
            probe: self.probe,
        })
    }

    /// Instance with parameter `j` of the main space removed, if it stays a covering.
    pub(crate) fn without_parameter(&self, j: usize) -> Option<Instance> {
        let mapping = self.space.mapping().without_parameter(j)?;
        Some(Instance {
            space: SoftSpace::new(mapping, self.space.beta()).ok()?,
            ..self.clone()
        })
    }

    /// Applies `f` to every interval of the instance in a fixed order. `None` if
    /// the result is no longer a pair of β-coverings.
    pub(crate) fn map_intervals(
        &self,
        f: &mut dyn FnMut(IntervalValue) -> IntervalValue,
    ) -> Option<Instance> {
        let beta = f(self.space.beta());
        let map_mapping = |m: &SoftMapping, f: &mut dyn FnMut(IntervalValue) -> IntervalValue| {
            let sets: Vec<_> = m
                .iter()
                .map(|(p, s)| {
                    let grades = s.grades().iter().map(|g| f(*g)).collect();
                    (
                        p.to_string(),
                        IVFuzzySet::new(s.universe().clone(), grades).expect("same length"),
                    )
                })
                .collect();
            SoftMapping::new(m.universe().clone(), sets).expect("same parameters")
        };
        let mapping = map_mapping(self.space.mapping(), f);
        let map_set = |s: &IVFuzzySet, f: &mut dyn FnMut(IntervalValue) -> IntervalValue| {
            let grades = s.grades().iter().map(|g| f(*g)).collect();
            IVFuzzySet::new(s.universe().clone(), grades).expect("same length")
        };
        let lower_beta = f(self.lower_beta);
        let x = map_set(&self.x, f);
        let y = map_set(&self.y, f);
        let w = map_set(&self.w, f);
        let bounded = self.bounded.as_ref().map(|b| map_set(b, f));
        let family = self.family.iter().map(|g| f(*g)).collect();
        let extra = self.extra.iter().map(|g| f(*g)).collect();
        let probe = f(self.probe);
        let paired_mapping = map_mapping(self.paired.mapping(), f);
        Some(Instance {
            space: SoftSpace::new(mapping, beta).ok()?,
            paired: SoftSpace::new(paired_mapping, beta).ok()?,
            lower_beta,
            x,
            y,
            w,
            bounded,
            cx: self.cx.clone(),
            cy: self.cy.clone(),
            family,
            extra,
            probe,
        })
    }

    /// Endpoints not already in `{0, 1/2, 1}`.
    pub(crate) fn unsnapped(&self) -> usize {
        let mut count = 0;
        self.map_intervals(&mut |g| {
            count += usize::from(!is_snapped(g.lo())) + usize::from(!is_snapped(g.hi()));
            g
        });
        count
    }

    /// Snaps both endpoints of the `k`-th interval (in [`Self::map_intervals`] order).
    pub(crate) fn snap_interval(&self, k: usize) -> Option<Instance> {
        let mut seen = 0;
        let mut changed = false;
        let out = self.map_intervals(&mut |g| {
            let here = seen == k;
            seen += 1;
            if !here {
                return g;
            }
            let s = IntervalValue::new(snap(g.lo()), snap(g.hi())).expect("snap is monotone");
            changed = s != g;
            s
        })?;
        changed.then_some(out)
    }

    pub(crate) fn interval_count(&self) -> usize {
        let mut seen = 0;
        self.map_intervals(&mut |g| {
            seen += 1;
            g
        });
        seen
    }

    pub fn to_document(&self) -> InstanceDocument {
        let grades = |s: &IVFuzzySet| s.iter().map(|(o, g)| (o.to_string(), g)).collect();
        let members = |s: &CrispSubset| s.members().map(str::to_string).collect();
        InstanceDocument {
            space: SpaceDocument::from_mapping(self.space.mapping(), self.space.beta()),
            lower_beta: self.lower_beta,
            x: grades(&self.x),
            y: grades(&self.y),
            w: grades(&self.w),
            bounded: self.bounded.as_ref().map(grades),
            cx: members(&self.cx),
            cy: members(&self.cy),
            family: self.family.clone(),
            extra: self.extra.clone(),
            probe: self.probe,
            paired: PairedDocument {
                parameters: self.paired.mapping().parameters().to_vec(),
                membership: SpaceDocument::from_mapping(self.paired.mapping(), self.paired.beta())
                    .membership,
            },
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_document()).expect("instances serialize")
    }

    pub fn from_json(text: &str) -> Result<Instance> {
        let doc: InstanceDocument =
            serde_json::from_str(text).map_err(|e| json_error("instance document", e))?;
        doc.to_instance()
    }
}

/// The second space of a two-space check shares universe and β with the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairedDocument {
    pub parameters: Vec<String>,
    pub membership: IndexMap<String, IndexMap<String, IntervalValue>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub space: SpaceDocument,
    pub lower_beta: IntervalValue,
    pub x: IndexMap<String, IntervalValue>,
    pub y: IndexMap<String, IntervalValue>,
    pub w: IndexMap<String, IntervalValue>,
    pub bounded: Option<IndexMap<String, IntervalValue>>,
    pub cx: Vec<String>,
    pub cy: Vec<String>,
    pub family: Vec<IntervalValue>,
    pub extra: Vec<IntervalValue>,
    pub probe: IntervalValue,
    pub paired: PairedDocument,
}

impl InstanceDocument {
    pub fn to_instance(&self) -> Result<Instance> {
        let (mapping, beta) = self.space.to_mapping()?;
        let space = SoftSpace::new(mapping, beta)?;
        let u = space.universe().clone();
        let set = |g: &IndexMap<String, IntervalValue>| {
            IVFuzzySet::from_pairs(u.clone(), g.iter().map(|(o, v)| (o.as_str(), *v)))
        };
        let crisp =
            |m: &[String]| CrispSubset::from_members(u.clone(), m.iter().map(String::as_str));
        if self.family.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let paired_mapping =
            mapping_from_table(&u, &self.paired.parameters, &self.paired.membership)?;
        Ok(Instance {
            lower_beta: self.lower_beta,
            x: set(&self.x)?,
            y: set(&self.y)?,
            w: set(&self.w)?,
            bounded: self.bounded.as_ref().map(set).transpose()?,
            cx: crisp(&self.cx)?,
            cy: crisp(&self.cy)?,
            family: self.family.clone(),
            extra: self.extra.clone(),
            probe: self.probe,
            paired: SoftSpace::new(paired_mapping, beta)?,
            space,
        })
    }
}

/// Attempts at a random second parameter set before falling back to a renamed copy.
const PAIRING_ATTEMPTS: usize = 8;

/// A second space over the same universe and β whose parameters are drawn from
/// `A` plus fresh parameters, accepted once it is a covering with the same crisp
/// neighborhoods as `space`. Falls back to `A` with one parameter duplicated under
/// a new name.
fn pair_space(rng: &mut impl Rng, d: i64, space: &SoftSpace) -> SoftSpace {
    let u = space.universe().clone();
    let mapping = space.mapping();
    let target = NeighborhoodSystem::new(space);
    let same_crisp = |other: &SoftSpace| {
        let sys = NeighborhoodSystem::new(other);
        (0..u.len()).all(|x| sys.crisp_row(x) == target.crisp_row(x))
    };
    for _ in 0..PAIRING_ATTEMPTS {
        let mut sets: Vec<(String, IVFuzzySet)> = mapping
            .iter()
            .filter(|_| rng.random_bool(0.5))
            .map(|(p, s)| (p.to_string(), s.clone()))
            .collect();
        let fresh = rng.random_range(0..=2);
        for k in 0..fresh {
            sets.push((format!("f{}", k + 1), gen::grid_set(rng, d, &u)));
        }
        if sets.is_empty() {
            continue;
        }
        if let Ok(candidate) =
            SoftMapping::new(u.clone(), sets).and_then(|m| SoftSpace::new(m, space.beta()))
        {
            if same_crisp(&candidate) {
                return candidate;
            }
        }
    }
    let mut sets: Vec<(String, IVFuzzySet)> = mapping
        .iter()
        .map(|(p, s)| (p.to_string(), s.clone()))
        .collect();
    sets.push(("f1".to_string(), mapping.sets()[0].clone()));
    SoftSpace::new(SoftMapping::new(u, sets).expect("fresh name"), space.beta())
        .expect("adding a parameter keeps the covering")
}
