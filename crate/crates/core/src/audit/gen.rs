//! Random β-covering spaces and audit inputs on rational grids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::interval::{family_meet, grid_ceil, grid_floor, IntervalValue, Rational};
use crate::ivfs::{IVFuzzySet, Universe};
use crate::neighborhoods::NeighborhoodSystem;
use crate::soft_space::{
    build_space, validate_beta_covering, CoveringPolicy, SoftMapping, SoftSpace,
};

/// Samples drawn before giving up under [`CoveringMode::Reject`].
pub const REJECTION_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetaPolicy {
    Fixed(IntervalValue),
    Random,
}

/// What the generator does when a sampled mapping is not a β-covering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoveringMode {
    /// Resample (mapping, and β when it is random) until the covering holds.
    #[default]
    Reject,
    /// Raise the first parameter to `F(e1)(x) ∨ β` where needed.
    Repair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub universe_size: usize,
    pub parameter_count: usize,
    pub grid_denominator: u32,
    pub beta_policy: BetaPolicy,
    pub covering_policy: CoveringMode,
    pub seed: u64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            universe_size: 4,
            parameter_count: 3,
            grid_denominator: 10,
            beta_policy: BetaPolicy::Random,
            covering_policy: CoveringMode::Reject,
            seed: 0,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.universe_size == 0 {
            return Err(Error::InvalidConfig(
                "universe_size must be at least 1".into(),
            ));
        }
        if self.parameter_count == 0 {
            return Err(Error::InvalidConfig(
                "parameter_count must be at least 1".into(),
            ));
        }
        if self.grid_denominator == 0 || self.grid_denominator > 1_000_000 {
            return Err(Error::InvalidConfig(
                "grid_denominator must lie in 1..=1000000".into(),
            ));
        }
        Ok(())
    }

    /// Independent stream for trial `index`.
    pub(crate) fn trial_rng(&self, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index);
        rng
    }
}

pub(crate) fn grid_point(rng: &mut impl Rng, d: i64, lo_k: i64, hi_k: i64) -> Rational {
    Rational::new(rng.random_range(lo_k..=hi_k), d).expect("grid denominator is positive")
}

/// Two grid samples ordered into an interval.
pub(crate) fn grid_interval(rng: &mut impl Rng, d: i64) -> IntervalValue {
    let a = rng.random_range(0..=d);
    let b = rng.random_range(0..=d);
    IntervalValue::from_fractions((a.min(b), d), (a.max(b), d)).expect("ordered grid endpoints")
}

/// A grid interval below `top` in the product order.
pub(crate) fn grid_interval_below(rng: &mut impl Rng, d: i64, top: IntervalValue) -> IntervalValue {
    let lo = grid_point(rng, d, 0, grid_floor(top.lo(), d));
    let hi = grid_point(rng, d, grid_ceil(lo, d), grid_floor(top.hi(), d));
    IntervalValue::new(lo, hi).expect("lo <= hi by construction")
}

pub(crate) fn grid_set(
    rng: &mut impl Rng,
    d: i64,
    universe: &std::sync::Arc<Universe>,
) -> IVFuzzySet {
    let grades = (0..universe.len()).map(|_| grid_interval(rng, d)).collect();
    IVFuzzySet::new(universe.clone(), grades).expect("one grade per object")
}

pub(crate) fn crisp_sample(rng: &mut impl Rng, universe: &std::sync::Arc<Universe>) -> CrispSubset {
    let mask = (0..universe.len()).map(|_| rng.random_bool(0.5)).collect();
    CrispSubset::from_mask(universe.clone(), mask).expect("one flag per object")
}

fn object_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub(crate) fn parameter_name(j: usize) -> String {
    format!("e{}", j + 1)
}

fn sample_beta(rng: &mut impl Rng, d: i64, policy: &BetaPolicy) -> IntervalValue {
    match policy {
        BetaPolicy::Fixed(b) => *b,
        BetaPolicy::Random => grid_interval(rng, d),
    }
}

pub(crate) fn gen_space_with(config: &GenConfig, rng: &mut impl Rng) -> Result<SoftSpace> {
    config.validate()?;
    let d = i64::from(config.grid_denominator);
    let universe = Universe::new(object_names(config.universe_size))?;
    let sample_mapping = |rng: &mut _| {
        let sets =
            (0..config.parameter_count).map(|j| (parameter_name(j), grid_set(rng, d, &universe)));
        SoftMapping::new(universe.clone(), sets.collect::<Vec<_>>())
    };
    match config.covering_policy {
        CoveringMode::Repair => {
            let beta = sample_beta(rng, d, &config.beta_policy);
            let mapping = sample_mapping(rng)?;
            build_space(mapping, beta, &CoveringPolicy::Repair(parameter_name(0)))
        }
        CoveringMode::Reject => {
            for _ in 0..REJECTION_BUDGET {
                let beta = sample_beta(rng, d, &config.beta_policy);
                let mapping = sample_mapping(rng)?;
                if validate_beta_covering(&mapping, beta).ok {
                    return SoftSpace::new(mapping, beta);
                }
            }
            Err(Error::RejectionBudgetExceeded(REJECTION_BUDGET))
        }
    }
}

/// A random β-covering space, fully determined by the config (including its seed).
pub fn gen_space(config: &GenConfig) -> Result<SoftSpace> {
    gen_space_with(config, &mut ChaCha8Rng::seed_from_u64(config.seed))
}

/// Samples `X` uniformly from the grid rectangle `[kernel^c(x), kernel(x)]` at every
/// object, where `kernel(x) = SÑ_x(x)`. `None` when the rectangle is empty somewhere.
pub(crate) fn bounded_sample(
    rng: &mut impl Rng,
    d: i64,
    sys: &NeighborhoodSystem,
) -> Option<IVFuzzySet> {
    let mut grades = Vec::with_capacity(sys.len());
    for x in 0..sys.len() {
        let k = sys.fuzzy_grade(x, x);
        let floor = k.complement();
        if !floor.leq(&k) {
            return None;
        }
        let lo_range = (grid_ceil(floor.lo(), d), grid_floor(k.lo(), d));
        let hi_range = (grid_ceil(floor.hi(), d), grid_floor(k.hi(), d));
        if lo_range.0 > lo_range.1 || hi_range.0 > hi_range.1 {
            // Off-grid kernel (a repaired cell joined with an off-grid β).
            grades.push(IntervalValue::new(floor.lo(), k.hi()).expect("feasible"));
            continue;
        }
        let grade = loop {
            let lo = rng.random_range(lo_range.0..=lo_range.1);
            let hi = rng.random_range(hi_range.0..=hi_range.1);
            if lo <= hi {
                break IntervalValue::from_fractions((lo, d), (hi, d)).expect("ordered");
            }
        };
        grades.push(grade);
    }
    IVFuzzySet::new(sys.universe().clone(), grades).ok()
}

/// A family of grid intervals and a probe. Half the time the probe is drawn below
/// the family meet, so the universally quantified side of the lemma is exercised.
pub(crate) fn family_sample(
    rng: &mut impl Rng,
    d: i64,
) -> (Vec<IntervalValue>, Vec<IntervalValue>, IntervalValue) {
    let len = rng.random_range(1..=4);
    let family: Vec<_> = (0..len).map(|_| grid_interval(rng, d)).collect();
    let extra_len = rng.random_range(0..=3);
    let extra = (0..extra_len).map(|_| grid_interval(rng, d)).collect();
    let probe = if rng.random_bool(0.5) {
        grid_interval_below(
            rng,
            d,
            family_meet(family.iter().copied()).expect("nonempty"),
        )
    } else {
        grid_interval(rng, d)
    };
    (family, extra, probe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::grid_intervals;

    fn config(seed: u64) -> GenConfig {
        GenConfig {
            universe_size: 3,
            parameter_count: 3,
            grid_denominator: 10,
            seed,
            ..GenConfig::default()
        }
    }

    #[test]
    fn same_seed_same_space() {
        assert_eq!(
            gen_space(&config(7)).unwrap(),
            gen_space(&config(7)).unwrap()
        );
        assert_ne!(
            gen_space(&config(7)).unwrap(),
            gen_space(&config(8)).unwrap()
        );
    }

    #[test]
    fn repair_always_covers() {
        for seed in 0..50 {
            let c = GenConfig {
                covering_policy: CoveringMode::Repair,
                beta_policy: BetaPolicy::Fixed("[0.9,1]".parse().unwrap()),
                ..config(seed)
            };
            let space = gen_space(&c).unwrap();
            assert!(validate_beta_covering(space.mapping(), space.beta()).ok);
        }
    }

    #[test]
    fn unit_grid_uses_three_intervals() {
        let allowed = grid_intervals(1);
        let c = GenConfig {
            grid_denominator: 1,
            ..config(3)
        };
        let space = gen_space(&c).unwrap();
        for set in space.mapping().sets() {
            assert!(set.grades().iter().all(|g| allowed.contains(g)));
        }
    }

    #[test]
    fn rejection_budget() {
        let c = GenConfig {
            beta_policy: BetaPolicy::Fixed(IntervalValue::TOP),
            universe_size: 6,
            parameter_count: 1,
            grid_denominator: 1000,
            ..config(1)
        };
        assert_eq!(
            gen_space(&c).unwrap_err(),
            Error::RejectionBudgetExceeded(REJECTION_BUDGET)
        );
    }

    #[test]
    fn invalid_configs() {
        assert!(gen_space(&GenConfig {
            universe_size: 0,
            ..config(0)
        })
        .is_err());
        assert!(gen_space(&GenConfig {
            parameter_count: 0,
            ..config(0)
        })
        .is_err());
        assert!(gen_space(&GenConfig {
            grid_denominator: 0,
            ..config(0)
        })
        .is_err());
    }

    #[test]
    fn bounded_samples_satisfy_the_hypothesis() {
        use crate::approximations::{satisfies_boundedness, Kind};
        let mut hits = 0;
        for seed in 0..200 {
            let space = gen_space(&config(seed)).unwrap();
            let sys = NeighborhoodSystem::new(&space);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if let Some(x) = bounded_sample(&mut rng, 10, &sys) {
                hits += 1;
                for kind in Kind::ALL {
                    assert!(satisfies_boundedness(&sys, kind, &x));
                }
            } else {
                assert!(!crate::approximations::boundedness_feasible(&sys, Kind::K1));
            }
        }
        assert!(hits > 0);
    }
}
