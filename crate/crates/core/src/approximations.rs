//! The four kinds of lower and upper approximation operators, fuzzy and crisp.
//!
//! Writing `N = SÑ_x(y)` and `M = SM̃_x(y)`, the fuzzy operators are
//!
//! | kind | lower kernel, met over `y`  | upper kernel, joined over `y` |
//! |------|-----------------------------|-------------------------------|
//! | K1   | `N^c ∨ X(y)`                | `N ∧ X(y)`                    |
//! | K2   | `M^c ∨ X(y)`                | `M ∧ X(y)`                    |
//! | K3   | `N^c ∨ M^c ∨ X(y)`          | `N ∧ M ∧ X(y)`                |
//! | K4   | `(N^c ∧ M^c) ∨ X(y)`        | `(N ∨ M) ∧ X(y)`              |
//!
//! The K4 grouping is the one under which `lower_4 = lower_1 ∩ lower_2` and
//! `upper_4 = upper_1 ∪ upper_2` hold.
//!
//! The crisp operators use `S̄N_x` and `S̄M_x`: K1 and K2 test one neighborhood,
//! K3 lower/upper combine the two tests with or/and, K4 with and/or.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::interval::IntervalValue;
use crate::ivfs::{same_universe, IVFuzzySet};
use crate::neighborhoods::NeighborhoodSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    K1,
    K2,
    K3,
    K4,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::K1, Kind::K2, Kind::K3, Kind::K4];

    pub fn number(self) -> u8 {
        match self {
            Kind::K1 => 1,
            Kind::K2 => 2,
            Kind::K3 => 3,
            Kind::K4 => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<Kind> {
        Kind::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }

    fn lower_kernel(self, n: IntervalValue, m: IntervalValue) -> IntervalValue {
        match self {
            Kind::K1 => n.complement(),
            Kind::K2 => m.complement(),
            Kind::K3 => n.complement().join(m.complement()),
            Kind::K4 => n.complement().meet(m.complement()),
        }
    }

    fn upper_kernel(self, n: IntervalValue, m: IntervalValue) -> IntervalValue {
        match self {
            Kind::K1 => n,
            Kind::K2 => m,
            Kind::K3 => n.meet(m),
            Kind::K4 => n.join(m),
        }
    }

    fn crisp_lower_rule(self, in_n: bool, in_m: bool) -> bool {
        match self {
            Kind::K1 => in_n,
            Kind::K2 => in_m,
            Kind::K3 => in_n || in_m,
            Kind::K4 => in_n && in_m,
        }
    }

    fn crisp_upper_rule(self, meets_n: bool, meets_m: bool) -> bool {
        match self {
            Kind::K1 => meets_n,
            Kind::K2 => meets_m,
            Kind::K3 => meets_n && meets_m,
            Kind::K4 => meets_n || meets_m,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix(['K', 'k']).unwrap_or(t);
        t.parse::<u8>()
            .ok()
            .and_then(Kind::from_number)
            .ok_or_else(|| Error::Syntax {
                context: format!("kind {s:?}"),
                message: "expected 1, 2, 3 or 4".into(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Fuzzy,
    Crisp,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "fuzzy" => Ok(Mode::Fuzzy),
            "crisp" => Ok(Mode::Crisp),
            other => Err(Error::Syntax {
                context: format!("mode {other:?}"),
                message: "expected `fuzzy` or `crisp`".into(),
            }),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fuzzy => "fuzzy",
            Mode::Crisp => "crisp",
        })
    }
}

fn check(
    sys: &NeighborhoodSystem,
    set_universe: &std::sync::Arc<crate::ivfs::Universe>,
) -> Result<()> {
    if same_universe(sys.universe(), set_universe) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

pub fn fuzzy_lower(sys: &NeighborhoodSystem, kind: Kind, set: &IVFuzzySet) -> Result<IVFuzzySet> {
    check(sys, set.universe())?;
    let n = sys.len();
    let grades = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    kind.lower_kernel(sys.fuzzy_grade(x, y), sys.complementary_grade(x, y))
                        .join(set.grade_at(y))
                })
                .reduce(IntervalValue::meet)
                .expect("universe is nonempty")
        })
        .collect();
    IVFuzzySet::new(set.universe().clone(), grades)
}

pub fn fuzzy_upper(sys: &NeighborhoodSystem, kind: Kind, set: &IVFuzzySet) -> Result<IVFuzzySet> {
    check(sys, set.universe())?;
    let n = sys.len();
    let grades = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    kind.upper_kernel(sys.fuzzy_grade(x, y), sys.complementary_grade(x, y))
                        .meet(set.grade_at(y))
                })
                .reduce(IntervalValue::join)
                .expect("universe is nonempty")
        })
        .collect();
    IVFuzzySet::new(set.universe().clone(), grades)
}

pub fn crisp_lower(sys: &NeighborhoodSystem, kind: Kind, set: &CrispSubset) -> Result<CrispSubset> {
    check(sys, set.universe())?;
    let n = sys.len();
    let inside = |row: &dyn Fn(usize) -> bool| (0..n).all(|y| !row(y) || set.contains_index(y));
    let mask = (0..n)
        .map(|x| {
            kind.crisp_lower_rule(
                inside(&|y| sys.in_crisp(x, y)),
                inside(&|y| sys.in_complementary_crisp(x, y)),
            )
        })
        .collect();
    CrispSubset::from_mask(set.universe().clone(), mask)
}

pub fn crisp_upper(sys: &NeighborhoodSystem, kind: Kind, set: &CrispSubset) -> Result<CrispSubset> {
    check(sys, set.universe())?;
    let n = sys.len();
    let meets = |row: &dyn Fn(usize) -> bool| (0..n).any(|y| row(y) && set.contains_index(y));
    let mask = (0..n)
        .map(|x| {
            kind.crisp_upper_rule(
                meets(&|y| sys.in_crisp(x, y)),
                meets(&|y| sys.in_complementary_crisp(x, y)),
            )
        })
        .collect();
    CrispSubset::from_mask(set.universe().clone(), mask)
}

/// Sets that have lower and upper approximations. Fuzzy and crisp sets are
/// approximated by separate operator families and never coerced into each other.
pub trait Approximable: Sized + PartialEq {
    const MODE: Mode;
    fn lower(&self, sys: &NeighborhoodSystem, kind: Kind) -> Result<Self>;
    fn upper(&self, sys: &NeighborhoodSystem, kind: Kind) -> Result<Self>;
}

impl Approximable for IVFuzzySet {
    const MODE: Mode = Mode::Fuzzy;

    fn lower(&self, sys: &NeighborhoodSystem, kind: Kind) -> Result<Self> {
        fuzzy_lower(sys, kind, self)
    }

    fn upper(&self, sys: &NeighborhoodSystem, kind: Kind) -> Result<Self> {
        fuzzy_upper(sys, kind, self)
    }
}

impl Approximable for CrispSubset {
    const MODE: Mode = Mode::Crisp;

    fn lower(&self, sys: &NeighborhoodSystem, kind: Kind) -> Result<Self> {
        crisp_lower(sys, kind, self)
    }

    fn upper(&self, sys: &NeighborhoodSystem, kind: Kind) -> Result<Self> {
        crisp_upper(sys, kind, self)
    }
}

/// Lower and upper approximation of one set under one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationPair<S> {
    pub kind: Kind,
    pub lower: S,
    pub upper: S,
}

impl<S: Approximable> ApproximationPair<S> {
    pub fn mode(&self) -> Mode {
        S::MODE
    }

    /// A set is definable when its two approximations coincide.
    pub fn definable(&self) -> bool {
        self.lower == self.upper
    }
}

pub fn approximate<S: Approximable>(
    sys: &NeighborhoodSystem,
    kind: Kind,
    set: &S,
) -> Result<ApproximationPair<S>> {
    Ok(ApproximationPair {
        kind,
        lower: set.lower(sys, kind)?,
        upper: set.upper(sys, kind)?,
    })
}

pub fn is_definable<S: Approximable>(
    sys: &NeighborhoodSystem,
    kind: Kind,
    set: &S,
) -> Result<bool> {
    Ok(approximate(sys, kind, set)?.definable())
}

/// The interval that bounds `X(x)` in the kind's boundedness hypothesis:
/// `SÑ_x(x)`, `SM̃_x(x)`, their meet (K3) or their join (K4).
pub fn boundedness_kernel(sys: &NeighborhoodSystem, kind: Kind, x: usize) -> IntervalValue {
    let n = sys.fuzzy_grade(x, x);
    let m = sys.complementary_grade(x, x);
    match kind {
        Kind::K1 => n,
        Kind::K2 => m,
        Kind::K3 => n.meet(m),
        Kind::K4 => n.join(m),
    }
}

/// `kernel^c(x) ≤ X(x) ≤ kernel(x)` at every object.
pub fn satisfies_boundedness(sys: &NeighborhoodSystem, kind: Kind, set: &IVFuzzySet) -> bool {
    (0..sys.len()).all(|x| {
        let k = boundedness_kernel(sys, kind, x);
        let g = set.grade_at(x);
        k.complement().leq(&g) && g.leq(&k)
    })
}

/// Whether some `X` satisfies the boundedness hypothesis, i.e. `kernel^c ≤ kernel`
/// (equivalently `lo + hi ≥ 1`) at every object.
pub fn boundedness_feasible(sys: &NeighborhoodSystem, kind: Kind) -> bool {
    (0..sys.len()).all(|x| {
        let k = boundedness_kernel(sys, kind, x);
        k.complement().leq(&k)
    })
}
