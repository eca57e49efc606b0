//! Independent reference implementations used by the integration tests. They
//! share no code with the library beyond reading its public accessors.

#![allow(dead_code)]

use num_rational::Ratio;

use ivsoft_core::{CrispSubset, IVFuzzySet, IntervalValue, SoftSpace};

pub type Q = Ratio<i64>;

/// `[lo, hi]` as a plain pair.
pub type Pair = (Q, Q);

pub fn pair(v: IntervalValue) -> Pair {
    (v.lo().as_ratio(), v.hi().as_ratio())
}

pub fn pairs(s: &IVFuzzySet) -> Vec<Pair> {
    s.grades().iter().map(|g| pair(*g)).collect()
}

pub fn mask(s: &CrispSubset) -> Vec<bool> {
    s.mask().to_vec()
}

fn one() -> Q {
    Q::from_integer(1)
}

fn below(a: Pair, b: Pair) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

fn inf(a: Pair, b: Pair) -> Pair {
    (a.0.min(b.0), a.1.min(b.1))
}

fn sup(a: Pair, b: Pair) -> Pair {
    (a.0.max(b.0), a.1.max(b.1))
}

fn neg(a: Pair) -> Pair {
    (one() - a.1, one() - a.0)
}

/// A space as raw tables: `table[e][x]`.
pub struct Reference {
    pub n: usize,
    pub beta: Pair,
    pub table: Vec<Vec<Pair>>,
}

impl Reference {
    pub fn of(space: &SoftSpace) -> Self {
        Reference {
            n: space.universe().len(),
            beta: pair(space.beta()),
            table: space.mapping().sets().iter().map(pairs).collect(),
        }
    }

    /// Fuzzy neighborhood grade of `y` around `x`; `[1,1]` when no parameter qualifies.
    pub fn n(&self, x: usize, y: usize) -> Pair {
        let mut acc = (one(), one());
        for row in &self.table {
            if below(self.beta, row[x]) {
                acc = inf(acc, row[y]);
            }
        }
        acc
    }

    pub fn m(&self, x: usize, y: usize) -> Pair {
        self.n(y, x)
    }

    pub fn n_crisp(&self, x: usize) -> Vec<bool> {
        (0..self.n)
            .map(|y| below(self.beta, self.n(x, y)))
            .collect()
    }

    pub fn m_crisp(&self, x: usize) -> Vec<bool> {
        (0..self.n)
            .map(|y| below(self.beta, self.m(x, y)))
            .collect()
    }

    fn lower_kernel(&self, kind: u8, x: usize, y: usize) -> Pair {
        let (a, b) = (neg(self.n(x, y)), neg(self.m(x, y)));
        match kind {
            1 => a,
            2 => b,
            3 => sup(a, b),
            _ => inf(a, b),
        }
    }

    fn upper_kernel(&self, kind: u8, x: usize, y: usize) -> Pair {
        let (a, b) = (self.n(x, y), self.m(x, y));
        match kind {
            1 => a,
            2 => b,
            3 => inf(a, b),
            _ => sup(a, b),
        }
    }

    pub fn lower(&self, kind: u8, set: &[Pair]) -> Vec<Pair> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| sup(self.lower_kernel(kind, x, y), set[y]))
                    .fold((one(), one()), inf)
            })
            .collect()
    }

    pub fn upper(&self, kind: u8, set: &[Pair]) -> Vec<Pair> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| inf(self.upper_kernel(kind, x, y), set[y]))
                    .fold((Q::from_integer(0), Q::from_integer(0)), sup)
            })
            .collect()
    }

    pub fn crisp_lower(&self, kind: u8, set: &[bool]) -> Vec<bool> {
        (0..self.n)
            .map(|x| {
                let inside = |nb: Vec<bool>| nb.iter().zip(set).all(|(&a, &s)| !a || s);
                let (a, b) = (inside(self.n_crisp(x)), inside(self.m_crisp(x)));
                match kind {
                    1 => a,
                    2 => b,
                    3 => a || b,
                    _ => a && b,
                }
            })
            .collect()
    }

    pub fn crisp_upper(&self, kind: u8, set: &[bool]) -> Vec<bool> {
        (0..self.n)
            .map(|x| {
                let meets = |nb: Vec<bool>| nb.iter().zip(set).any(|(&a, &s)| a && s);
                let (a, b) = (meets(self.n_crisp(x)), meets(self.m_crisp(x)));
                match kind {
                    1 => a,
                    2 => b,
                    3 => a && b,
                    _ => a || b,
                }
            })
            .collect()
    }
}

/// Ordinary fuzzy sets: one rational grade per object.
pub struct Scalar {
    pub n: usize,
    pub beta: Q,
    pub table: Vec<Vec<Q>>,
}

impl Scalar {
    /// Reads a space whose grades and β are all degenerate.
    pub fn of(space: &SoftSpace) -> Self {
        let point = |v: IntervalValue| {
            assert_eq!(v.lo(), v.hi(), "degenerate grades only");
            v.lo().as_ratio()
        };
        Scalar {
            n: space.universe().len(),
            beta: point(space.beta()),
            table: space
                .mapping()
                .sets()
                .iter()
                .map(|s| s.grades().iter().map(|g| point(*g)).collect())
                .collect(),
        }
    }

    pub fn n(&self, x: usize, y: usize) -> Q {
        self.table
            .iter()
            .filter(|row| row[x] >= self.beta)
            .map(|row| row[y])
            .min()
            .unwrap_or_else(one)
    }

    pub fn n_crisp(&self, x: usize) -> Vec<bool> {
        (0..self.n).map(|y| self.n(x, y) >= self.beta).collect()
    }

    pub fn lower(&self, set: &[Q]) -> Vec<Q> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| (one() - self.n(x, y)).max(set[y]))
                    .min()
                    .expect("nonempty")
            })
            .collect()
    }

    pub fn upper(&self, set: &[Q]) -> Vec<Q> {
        (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| self.n(x, y).min(set[y]))
                    .max()
                    .expect("nonempty")
            })
            .collect()
    }

    pub fn crisp_lower(&self, set: &[bool]) -> Vec<bool> {
        (0..self.n)
            .map(|x| self.n_crisp(x).iter().zip(set).all(|(&a, &s)| !a || s))
            .collect()
    }

    pub fn crisp_upper(&self, set: &[bool]) -> Vec<bool> {
        (0..self.n)
            .map(|x| self.n_crisp(x).iter().zip(set).any(|(&a, &s)| a && s))
            .collect()
    }
}
