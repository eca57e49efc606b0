//! Exact interval values on `[0,1]`.
//!
//! An [`IntervalValue`] is a closed subinterval `[lo, hi]` of the unit interval with
//! rational endpoints. Meet and join act componentwise, the complement maps
//! `[lo, hi]` to `[1 - hi, 1 - lo]`, and the order is the product order: `a <= b`
//! iff both endpoints of `a` are below the matching endpoints of `b`. The product
//! order is partial, so [`IntervalValue::relation`] reports incomparable pairs
//! explicitly instead of folding them into "not less".

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number stored in lowest terms with a positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const HALF: Rational = Rational(Ratio::new_raw(1, 2));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Syntax {
                context: format!("{numer}/{denom}"),
                message: "zero denominator".into(),
            });
        }
        Ok(Rational(Ratio::new(numer, denom)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// `1 - self`. Exact for every endpoint in `[0,1]`.
    pub fn one_minus(self) -> Self {
        Rational(Ratio::one() - self.0)
    }

    pub fn is_unit(&self) -> bool {
        self.0 >= Ratio::zero() && self.0 <= Ratio::one()
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Rational(r)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text: an integer, an exact decimal when the denominator has no prime
/// factors other than 2 and 5, and `p/q` otherwise.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        if d == 1 {
            return write!(f, "{n}");
        }
        match decimal_digits(d) {
            Some(k) => {
                // d divides 10^k, so n * (10^k / d) is exact.
                let scaled = 10i64.checked_pow(k).and_then(|p| n.checked_mul(p / d));
                match scaled {
                    Some(s) => {
                        let p = 10i64.pow(k);
                        let sign = if s < 0 { "-" } else { "" };
                        let s = s.unsigned_abs();
                        let p = p as u64;
                        write!(f, "{sign}{}.{:0width$}", s / p, s % p, width = k as usize)
                    }
                    None => write!(f, "{n}/{d}"),
                }
            }
            None => write!(f, "{n}/{d}"),
        }
    }
}

/// Number of decimal places needed to write `1/d` exactly, if finite.
fn decimal_digits(mut d: i64) -> Option<u32> {
    let (mut twos, mut fives) = (0u32, 0u32);
    while d % 2 == 0 {
        d /= 2;
        twos += 1;
    }
    while d % 5 == 0 {
        d /= 5;
        fives += 1;
    }
    (d == 1).then_some(twos.max(fives))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"3"`, `"0.55"`, `".5"` and `"11/20"`. Decimals convert exactly.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = |message: &str| Error::Syntax {
            context: format!("number {text:?}"),
            message: message.to_string(),
        };
        if text.is_empty() {
            return Err(bad("empty number"));
        }
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let digits = |part: &str| -> Result<i64> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected decimal digits"));
            }
            part.parse::<i64>().map_err(|_| bad("number too large"))
        };
        let value = if let Some((p, q)) = body.split_once('/') {
            let q = digits(q.trim())?;
            if q == 0 {
                return Err(bad("zero denominator"));
            }
            Ratio::new(digits(p.trim())?, q)
        } else if let Some((whole, frac)) = body.split_once('.') {
            let whole = if whole.is_empty() { 0 } else { digits(whole)? };
            let scale = 10i64
                .checked_pow(frac.len() as u32)
                .ok_or_else(|| bad("too many decimal places"))?;
            let frac = digits(frac)?;
            let numer = whole
                .checked_mul(scale)
                .and_then(|w| w.checked_add(frac))
                .ok_or_else(|| bad("number too large"))?;
            Ratio::new(numer, scale)
        } else {
            Ratio::from_integer(digits(body)?)
        };
        Ok(Rational(if negative { -value } else { value }))
    }
}

/// Ordering of two interval values under the product order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    /// `a <= b` and `a != b`.
    Less,
    /// `b <= a` and `a != b`.
    Greater,
    Incomparable,
}

/// A closed subinterval `[lo, hi]` of `[0,1]` with exact endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalValue {
    lo: Rational,
    hi: Rational,
}

impl IntervalValue {
    /// `[1,1]`, the grade of every object in the full set.
    pub const TOP: IntervalValue = IntervalValue {
        lo: Rational::ONE,
        hi: Rational::ONE,
    };
    /// `[0,0]`, the grade of every object in the empty set.
    pub const BOTTOM: IntervalValue = IntervalValue {
        lo: Rational::ZERO,
        hi: Rational::ZERO,
    };

    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        let invalid = |reason| Error::InvalidInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
            reason,
        };
        if !lo.is_unit() || !hi.is_unit() {
            return Err(invalid("endpoints must lie in [0,1]"));
        }
        if lo > hi {
            return Err(invalid("lower endpoint exceeds upper endpoint"));
        }
        Ok(IntervalValue { lo, hi })
    }

    /// Interval from two `numerator/denominator` pairs.
    pub fn from_fractions(lo: (i64, i64), hi: (i64, i64)) -> Result<Self> {
        Self::new(Rational::new(lo.0, lo.1)?, Rational::new(hi.0, hi.1)?)
    }

    /// The degenerate interval `[a, a]`.
    pub fn degenerate(a: Rational) -> Result<Self> {
        Self::new(a, a)
    }

    pub fn lo(&self) -> Rational {
        self.lo
    }

    pub fn hi(&self) -> Rational {
        self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn meet(self, other: Self) -> Self {
        IntervalValue {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn join(self, other: Self) -> Self {
        IntervalValue {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn complement(self) -> Self {
        IntervalValue {
            lo: self.hi.one_minus(),
            hi: self.lo.one_minus(),
        }
    }

    /// `self <= other` in the product order.
    pub fn leq(&self, other: &Self) -> bool {
        self.lo <= other.lo && self.hi <= other.hi
    }

    pub fn relation(&self, other: &Self) -> Relation {
        match (self.leq(other), other.leq(self)) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::Less,
            (false, true) => Relation::Greater,
            (false, false) => Relation::Incomparable,
        }
    }
}

impl PartialOrd for IntervalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.relation(other) {
            Relation::Equal => Some(Ordering::Equal),
            Relation::Less => Some(Ordering::Less),
            Relation::Greater => Some(Ordering::Greater),
            Relation::Incomparable => None,
        }
    }
}

/// Componentwise infimum of a nonempty family.
pub fn family_meet<I>(family: I) -> Result<IntervalValue>
where
    I: IntoIterator<Item = IntervalValue>,
{
    family
        .into_iter()
        .reduce(IntervalValue::meet)
        .ok_or(Error::EmptyFamily)
}

/// Componentwise supremum of a nonempty family.
pub fn family_join<I>(family: I) -> Result<IntervalValue>
where
    I: IntoIterator<Item = IntervalValue>,
{
    family
        .into_iter()
        .reduce(IntervalValue::join)
        .ok_or(Error::EmptyFamily)
}

impl fmt::Debug for IntervalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntervalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl FromStr for IntervalValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax {
                context: format!("interval {text:?}"),
                message: "expected the form [lo,hi]".into(),
            })?;
        let (lo, hi) = inner.split_once(',').ok_or_else(|| Error::Syntax {
            context: format!("interval {text:?}"),
            message: "expected a comma between the endpoints".into(),
        })?;
        let lo: Rational = lo.parse()?;
        let hi: Rational = hi.parse()?;
        IntervalValue::new(lo, hi).map_err(|e| Error::Syntax {
            context: format!("interval {text:?}"),
            message: e.to_string(),
        })
    }
}

impl Serialize for IntervalValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntervalValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Every interval whose endpoints lie on the grid `{0, 1/d, ..., 1}`.
pub fn grid_intervals(denominator: u32) -> Vec<IntervalValue> {
    let d = i64::from(denominator.max(1));
    let mut out = Vec::new();
    for lo in 0..=d {
        for hi in lo..=d {
            out.push(IntervalValue {
                lo: Rational(Ratio::new(lo, d)),
                hi: Rational(Ratio::new(hi, d)),
            });
        }
    }
    out
}

/// Smallest `k` with `k / d >= r`, clamped to `[0, d]`.
pub(crate) fn grid_ceil(r: Rational, d: i64) -> i64 {
    let scaled = r.0 * Ratio::from_integer(d);
    scaled.ceil().to_integer().clamp(0, d)
}

/// Largest `k` with `k / d <= r`, clamped to `[0, d]`.
pub(crate) fn grid_floor(r: Rational, d: i64) -> i64 {
    let scaled = r.0 * Ratio::from_integer(d);
    scaled.floor().to_integer().clamp(0, d)
}

/// Nearest of `0`, `1/2` and `1`; ties go to `1/2`.
pub(crate) fn snap(r: Rational) -> Rational {
    let candidates = [Rational::HALF, Rational::ZERO, Rational::ONE];
    let dist = |c: Rational| {
        let d = r.0 - c.0;
        if d < Ratio::zero() {
            -d
        } else {
            d
        }
    };
    candidates
        .into_iter()
        .min_by(|a, b| dist(*a).cmp(&dist(*b)))
        .unwrap_or(r)
}

pub(crate) fn is_snapped(r: Rational) -> bool {
    r == Rational::ZERO || r == Rational::HALF || r == Rational::ONE
}
