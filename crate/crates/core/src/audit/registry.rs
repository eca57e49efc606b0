//! The closed registry of audited statements and their executable checks.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use super::instance::{Context, Instance};
use crate::approximations::{
    crisp_lower, crisp_upper, fuzzy_lower, fuzzy_upper, satisfies_boundedness, Kind,
};
use crate::crisp::CrispSubset;
use crate::error::{Error, Result};
use crate::interval::{family_join, family_meet};
use crate::ivfs::IVFuzzySet;
use crate::literal;
use crate::neighborhoods::{
    complementary_crisp_neighborhood, complementary_fuzzy_neighborhood, crisp_of,
};

/// Where a statement's authority comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Stated and proved in the source theory. A failure is a bug or a false theorem.
    PaperProved,
    /// Follows from the definitions as implemented. A failure is a bug.
    Derived,
    /// Unstated analogue checked empirically. Failures are reported, not fatal.
    Conjecture,
}

impl Status {
    pub fn is_fatal(self) -> bool {
        !matches!(self, Status::Conjecture)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Must hold on every instance.
    Universal,
    /// Some instance must show it. Each check tests the refuted equality, so a
    /// failing trial is a witness.
    Existence,
}

impl Claim {
    pub fn is_universal(self) -> bool {
        self == Claim::Universal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

type Outcome = std::result::Result<(), Verdict>;

fn require(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Verdict::Fail(detail()))
    }
}

fn skip(reason: &str) -> Outcome {
    Err(Verdict::Skip(reason.to_string()))
}

type KindCheck = fn(&Context, Kind) -> Outcome;

enum Check {
    Plain(fn(&Context) -> Outcome),
    Kinded(KindCheck, Kind),
}

pub struct Theorem {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub claim: Claim,
    check: Check,
}

impl Theorem {
    pub fn run(&self, ctx: &Context) -> Verdict {
        let outcome = match self.check {
            Check::Plain(f) => f(ctx),
            Check::Kinded(f, k) => f(ctx, k),
        };
        match outcome {
            Ok(()) => Verdict::Pass,
            Err(v) => v,
        }
    }
}

impl fmt::Debug for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Theorem")
            .field("id", &self.id)
            .field("status", &self.status)
            .field("claim", &self.claim)
            .finish()
    }
}

/// Index into [`registry`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TheoremId(usize);

impl TheoremId {
    pub fn theorem(self) -> &'static Theorem {
        &registry()[self.0]
    }

    pub fn as_str(self) -> &'static str {
        &self.theorem().id
    }

    pub fn all() -> Vec<TheoremId> {
        (0..registry().len()).map(TheoremId).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        registry()
            .iter()
            .position(|t| t.id == s)
            .map(TheoremId)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// `all` or a comma-separated list of ids.
pub fn parse_selection(selection: &str) -> Result<Vec<TheoremId>> {
    if selection.trim() == "all" {
        return Ok(TheoremId::all());
    }
    let mut ids: Vec<TheoremId> = selection
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    ids.sort();
    ids.dedup();
    if ids.is_empty() {
        return Err(Error::InvalidConfig("no theorem ids selected".into()));
    }
    Ok(ids)
}

pub fn registry() -> &'static [Theorem] {
    &REGISTRY
}

/// Runs one check on one instance.
pub fn check(id: TheoremId, instance: &Instance) -> Verdict {
    id.theorem().run(&Context::new(instance))
}

// ---------------------------------------------------------------------------
// set helpers; every operand in a check shares the instance universe

fn cap(a: &IVFuzzySet, b: &IVFuzzySet) -> IVFuzzySet {
    a.intersect(b).expect("shared universe")
}

fn cup(a: &IVFuzzySet, b: &IVFuzzySet) -> IVFuzzySet {
    a.union(b).expect("shared universe")
}

fn sub(a: &IVFuzzySet, b: &IVFuzzySet) -> bool {
    a.is_subset(b).expect("shared universe")
}

fn ccap(a: &CrispSubset, b: &CrispSubset) -> CrispSubset {
    a.intersection(b).expect("shared universe")
}

fn ccup(a: &CrispSubset, b: &CrispSubset) -> CrispSubset {
    a.union(b).expect("shared universe")
}

fn csub(a: &CrispSubset, b: &CrispSubset) -> bool {
    a.is_subset(b).expect("shared universe")
}

fn fl(ctx: &Context, k: Kind, x: &IVFuzzySet) -> IVFuzzySet {
    fuzzy_lower(&ctx.sys, k, x).expect("shared universe")
}

fn fu(ctx: &Context, k: Kind, x: &IVFuzzySet) -> IVFuzzySet {
    fuzzy_upper(&ctx.sys, k, x).expect("shared universe")
}

fn cl(ctx: &Context, k: Kind, x: &CrispSubset) -> CrispSubset {
    crisp_lower(&ctx.sys, k, x).expect("shared universe")
}

fn cu(ctx: &Context, k: Kind, x: &CrispSubset) -> CrispSubset {
    crisp_upper(&ctx.sys, k, x).expect("shared universe")
}

fn fuzzy_inputs<'a>(ctx: &'a Context) -> [(&'static str, &'a IVFuzzySet); 2] {
    [("X", &ctx.inst.x), ("Y", &ctx.inst.y)]
}

fn crisp_inputs<'a>(ctx: &'a Context) -> [(&'static str, &'a CrispSubset); 2] {
    [("X", &ctx.inst.cx), ("Y", &ctx.inst.cy)]
}

/// Nonempty subsets of `0..n` as index lists.
fn nonempty_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

// ---------------------------------------------------------------------------
// interval family lemma

fn l_fam_1(ctx: &Context) -> Outcome {
    let i = ctx.inst;
    let all = i.family.iter().all(|g| i.probe.leq(g));
    let meet = family_meet(i.family.iter().copied()).expect("nonempty family");
    require(all == i.probe.leq(&meet), || {
        format!(
            "probe {} vs family meet {meet}: each-member test gave {all}",
            i.probe
        )
    })
}

fn l_fam_2(ctx: &Context) -> Outcome {
    let i = ctx.inst;
    let join = family_join(i.family.iter().copied()).expect("nonempty family");
    let some = i.family.iter().any(|g| i.probe.leq(g));
    require(!some || i.probe.leq(&join), || {
        format!(
            "probe {} is below a member but not below the join {join}",
            i.probe
        )
    })
}

fn l_fam_3(ctx: &Context) -> Outcome {
    let i = ctx.inst;
    let small = family_meet(i.family.iter().copied()).expect("nonempty family");
    let big = family_meet(i.family.iter().chain(&i.extra).copied()).expect("nonempty family");
    require(big.leq(&small), || {
        format!("meet of the larger family {big} is not below {small}")
    })
}

fn w_l_fam_2(ctx: &Context) -> Outcome {
    let i = ctx.inst;
    let join = family_join(i.family.iter().copied()).expect("nonempty family");
    let witness = i.probe.leq(&join) && !i.family.iter().any(|g| i.probe.leq(g));
    require(!witness, || {
        format!(
            "probe {} is below the join {join} and below no member",
            i.probe
        )
    })
}

// ---------------------------------------------------------------------------
// pointwise algebra of interval-valued fuzzy sets

fn ivfs_commutative(ctx: &Context) -> Outcome {
    let (x, y) = (&ctx.inst.x, &ctx.inst.y);
    require(cap(x, y) == cap(y, x), || "X ∩ Y differs from Y ∩ X".into())?;
    require(cup(x, y) == cup(y, x), || "X ∪ Y differs from Y ∪ X".into())
}

fn ivfs_associative(ctx: &Context) -> Outcome {
    let (x, y, w) = (&ctx.inst.x, &ctx.inst.y, &ctx.inst.w);
    require(cap(&cap(x, y), w) == cap(x, &cap(y, w)), || {
        "∩ is not associative".into()
    })?;
    require(cup(&cup(x, y), w) == cup(x, &cup(y, w)), || {
        "∪ is not associative".into()
    })
}

fn ivfs_distributive(ctx: &Context) -> Outcome {
    let (x, y, w) = (&ctx.inst.x, &ctx.inst.y, &ctx.inst.w);
    require(cap(&cup(x, y), w) == cup(&cap(x, w), &cap(y, w)), || {
        "(X ∪ Y) ∩ W differs from (X ∩ W) ∪ (Y ∩ W)".into()
    })?;
    require(cup(&cap(x, y), w) == cap(&cup(x, w), &cup(y, w)), || {
        "(X ∩ Y) ∪ W differs from (X ∪ W) ∩ (Y ∪ W)".into()
    })
}

fn ivfs_involution(ctx: &Context) -> Outcome {
    let x = &ctx.inst.x;
    require(x.complement().complement() == *x, || {
        "(X^c)^c differs from X".into()
    })
}

fn ivfs_de_morgan(ctx: &Context) -> Outcome {
    let (x, y) = (&ctx.inst.x, &ctx.inst.y);
    require(
        cap(x, y).complement() == cup(&x.complement(), &y.complement()),
        || "(X ∩ Y)^c differs from X^c ∪ Y^c".into(),
    )?;
    require(
        cup(x, y).complement() == cap(&x.complement(), &y.complement()),
        || "(X ∪ Y)^c differs from X^c ∩ Y^c".into(),
    )
}

// ---------------------------------------------------------------------------
// fuzzy neighborhoods

fn n_refl(ctx: &Context) -> Outcome {
    let beta = ctx.sys.beta();
    for x in 0..ctx.n() {
        let g = ctx.sys.fuzzy_grade(x, x);
        require(beta.leq(&g), || {
            format!("SÑ_{0}({0}) = {g} is not above β = {beta}", ctx.name(x))
        })?;
    }
    Ok(())
}

fn n_trans(ctx: &Context) -> Outcome {
    let (s, beta, n) = (&ctx.sys, ctx.sys.beta(), ctx.n());
    for x in 0..n {
        for y in 0..n {
            if !beta.leq(&s.fuzzy_grade(x, y)) {
                continue;
            }
            for z in 0..n {
                let ok = !beta.leq(&s.fuzzy_grade(y, z)) || beta.leq(&s.fuzzy_grade(x, z));
                require(ok, || {
                    format!(
                        "β ≤ SÑ_{x}({y}) and β ≤ SÑ_{y}({z}) but SÑ_{x}({z}) = {}",
                        s.fuzzy_grade(x, z),
                        x = ctx.name(x),
                        y = ctx.name(y),
                        z = ctx.name(z)
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn n_mono(ctx: &Context) -> Outcome {
    let lower_beta = ctx.inst.lower_beta;
    if !lower_beta.leq(&ctx.sys.beta()) {
        return skip("lower threshold is not below β");
    }
    let Some(low) = &ctx.lower_sys else {
        return skip("space is not a covering at the lower threshold");
    };
    for x in 0..ctx.n() {
        let (a, b) = (low.fuzzy_row(x), ctx.sys.fuzzy_row(x));
        require(sub(&a, &b), || {
            format!(
                "at β' = {lower_beta}, SÑ_{} = {a:?} is not inside {b:?}",
                ctx.name(x)
            )
        })?;
    }
    Ok(())
}

fn n_contain(ctx: &Context) -> Outcome {
    let (s, beta, n) = (&ctx.sys, ctx.sys.beta(), ctx.n());
    for x in 0..n {
        for y in 0..n {
            let member = beta.leq(&s.fuzzy_grade(x, y));
            let inside = sub(&s.fuzzy_row(y), &s.fuzzy_row(x));
            require(member == inside, || {
                format!(
                    "β ≤ SÑ_{x}({y}) is {member} but SÑ_{y} ⊂ SÑ_{x} is {inside}",
                    x = ctx.name(x),
                    y = ctx.name(y)
                )
            })?;
            let mutual = member && beta.leq(&s.fuzzy_grade(y, x));
            let equal = s.fuzzy_row(x) == s.fuzzy_row(y);
            require(mutual == equal, || {
                format!(
                    "mutual domination of {x}, {y} is {mutual} but SÑ_{x} = SÑ_{y} is {equal}",
                    x = ctx.name(x),
                    y = ctx.name(y)
                )
            })?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// crisp neighborhoods

fn cn_refl(ctx: &Context) -> Outcome {
    for x in 0..ctx.n() {
        require(ctx.sys.in_crisp(x, x), || {
            format!("{0} ∉ S̄N_{0}", ctx.name(x))
        })?;
    }
    Ok(())
}

fn cn_memb(ctx: &Context) -> Outcome {
    let (s, n) = (&ctx.sys, ctx.n());
    for x in 0..n {
        for y in 0..n {
            let member = s.in_crisp(x, y);
            let inside = csub(&s.crisp_row(y), &s.crisp_row(x));
            require(member == inside, || {
                format!(
                    "{y} ∈ S̄N_{x} is {member} but S̄N_{y} ⊏ S̄N_{x} is {inside}",
                    x = ctx.name(x),
                    y = ctx.name(y)
                )
            })?;
        }
    }
    Ok(())
}

fn cn_trans(ctx: &Context) -> Outcome {
    let (s, n) = (&ctx.sys, ctx.n());
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ok = !(s.in_crisp(x, y) && s.in_crisp(y, z)) || s.in_crisp(x, z);
                require(ok, || {
                    format!(
                        "{y} ∈ S̄N_{x}, {z} ∈ S̄N_{y}, {z} ∉ S̄N_{x}",
                        x = ctx.name(x),
                        y = ctx.name(y),
                        z = ctx.name(z)
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn cn_eq(ctx: &Context) -> Outcome {
    let (s, n) = (&ctx.sys, ctx.n());
    for x in 0..n {
        for y in 0..n {
            let fuzzy = sub(&s.fuzzy_row(y), &s.fuzzy_row(x));
            let crisp = csub(&s.crisp_row(y), &s.crisp_row(x));
            require(fuzzy == crisp, || {
                format!(
                    "SÑ_{y} ⊂ SÑ_{x} is {fuzzy} but S̄N_{y} ⊏ S̄N_{x} is {crisp}",
                    x = ctx.name(x),
                    y = ctx.name(y)
                )
            })?;
            let fuzzy = s.fuzzy_row(x) == s.fuzzy_row(y);
            let crisp = s.crisp_row(x) == s.crisp_row(y);
            require(fuzzy == crisp, || {
                format!(
                    "SÑ_{x} = SÑ_{y} is {fuzzy} but S̄N_{x} = S̄N_{y} is {crisp}",
                    x = ctx.name(x),
                    y = ctx.name(y)
                )
            })?;
        }
    }
    Ok(())
}

/// `(⊔ S̄N, crisp_of(⋃ SÑ))` or `(⊓ S̄N, crisp_of(⋂ SÑ))` over the objects in `lambda`.
fn lattice_sides(ctx: &Context, lambda: &[usize], union: bool) -> (CrispSubset, CrispSubset) {
    let s = &ctx.sys;
    let mut crisp = s.crisp_row(lambda[0]);
    let mut fuzzy = s.fuzzy_row(lambda[0]);
    for &v in &lambda[1..] {
        if union {
            crisp = ccup(&crisp, &s.crisp_row(v));
            fuzzy = cup(&fuzzy, &s.fuzzy_row(v));
        } else {
            crisp = ccap(&crisp, &s.crisp_row(v));
            fuzzy = cap(&fuzzy, &s.fuzzy_row(v));
        }
    }
    (crisp, crisp_of(&fuzzy, s.beta()))
}

fn names(ctx: &Context, lambda: &[usize]) -> String {
    lambda
        .iter()
        .map(|&i| ctx.name(i))
        .collect::<Vec<_>>()
        .join(",")
}

fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |x| (0..n).map(move |y| vec![x, y]))
}

fn cn_lattice_union(ctx: &Context, lambdas: impl Iterator<Item = Vec<usize>>) -> Outcome {
    for lambda in lambdas {
        let (joined, of_union) = lattice_sides(ctx, &lambda, true);
        require(csub(&joined, &of_union), || {
            format!(
                "over {{{}}}: {joined:?} ⋢ {of_union:?}",
                names(ctx, &lambda)
            )
        })?;
    }
    Ok(())
}

fn cn_lattice_meet(ctx: &Context, lambdas: impl Iterator<Item = Vec<usize>>) -> Outcome {
    for lambda in lambdas {
        let (met, of_meet) = lattice_sides(ctx, &lambda, false);
        require(met == of_meet, || {
            format!("over {{{}}}: {met:?} ≠ {of_meet:?}", names(ctx, &lambda))
        })?;
    }
    Ok(())
}

fn strict_union(ctx: &Context, lambdas: impl Iterator<Item = Vec<usize>>) -> Outcome {
    for lambda in lambdas {
        let (joined, of_union) = lattice_sides(ctx, &lambda, true);
        require(joined == of_union, || {
            format!(
                "over {{{}}}: {joined:?} ⊊ {of_union:?}",
                names(ctx, &lambda)
            )
        })?;
    }
    Ok(())
}

fn cn_lattice_1(ctx: &Context) -> Outcome {
    cn_lattice_union(ctx, pairs(ctx.n()))
}

fn cn_lattice_2(ctx: &Context) -> Outcome {
    cn_lattice_meet(ctx, pairs(ctx.n()))
}

fn cn_lattice_3(ctx: &Context) -> Outcome {
    cn_lattice_union(ctx, nonempty_subsets(ctx.n()))
}

fn cn_lattice_4(ctx: &Context) -> Outcome {
    cn_lattice_meet(ctx, nonempty_subsets(ctx.n()))
}

fn w_cn_lattice_1(ctx: &Context) -> Outcome {
    strict_union(ctx, pairs(ctx.n()))
}

fn w_cn_lattice_3(ctx: &Context) -> Outcome {
    strict_union(ctx, nonempty_subsets(ctx.n()).filter(|l| l.len() >= 3))
}

fn cm_transpose(ctx: &Context) -> Outcome {
    let space = &ctx.inst.space;
    let n = ctx.n();
    for x in 0..n {
        let name = ctx.name(x);
        let m = complementary_fuzzy_neighborhood(space, name).expect("known object");
        let mc = complementary_crisp_neighborhood(space, name).expect("known object");
        require(mc.contains_index(x), || format!("{name} ∉ S̄M_{name}"))?;
        for y in 0..n {
            require(m.grade_at(y) == ctx.sys.fuzzy_grade(y, x), || {
                format!(
                    "SM̃_{name}({}) differs from SÑ_{}({name})",
                    ctx.name(y),
                    ctx.name(y)
                )
            })?;
            require(mc.contains_index(y) == ctx.sys.in_crisp(y, x), || {
                format!(
                    "{} ∈ S̄M_{name} disagrees with {name} ∈ S̄N_{}",
                    ctx.name(y),
                    ctx.name(y)
                )
            })?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// fuzzy approximation operators, per kind

fn a_p1(ctx: &Context, k: Kind) -> Outcome {
    let u = ctx.sys.universe().clone();
    let top = IVFuzzySet::full(u.clone());
    let bottom = IVFuzzySet::empty(u);
    let lower = fl(ctx, k, &top);
    let upper = fu(ctx, k, &bottom);
    require(lower == top, || format!("lower(I^U) = {lower:?}"))?;
    require(upper == bottom, || format!("upper(I^∅) = {upper:?}"))
}

fn a_p2(ctx: &Context, k: Kind) -> Outcome {
    for (name, x) in fuzzy_inputs(ctx) {
        let xc = x.complement();
        require(fl(ctx, k, &xc) == fu(ctx, k, x).complement(), || {
            format!("lower({name}^c) differs from upper({name})^c")
        })?;
        require(fu(ctx, k, &xc) == fl(ctx, k, x).complement(), || {
            format!("upper({name}^c) differs from lower({name})^c")
        })?;
    }
    Ok(())
}

fn a_p3(ctx: &Context, k: Kind) -> Outcome {
    let (x, y) = (&ctx.inst.x, &ctx.inst.y);
    let (a, b) = (fl(ctx, k, &cap(x, y)), cap(&fl(ctx, k, x), &fl(ctx, k, y)));
    require(a == b, || {
        format!("lower(X ∩ Y) = {a:?} but lower(X) ∩ lower(Y) = {b:?}")
    })?;
    let (a, b) = (fu(ctx, k, &cup(x, y)), cup(&fu(ctx, k, x), &fu(ctx, k, y)));
    require(a == b, || {
        format!("upper(X ∪ Y) = {a:?} but upper(X) ∪ upper(Y) = {b:?}")
    })
}

/// Comparable pairs built from X and Y: `X ∩ Y ⊂ Y` and `X ⊂ X ∪ Y`.
fn nested_pairs(ctx: &Context) -> [(IVFuzzySet, IVFuzzySet); 2] {
    let (x, y) = (&ctx.inst.x, &ctx.inst.y);
    [(cap(x, y), y.clone()), (x.clone(), cup(x, y))]
}

fn a_p4(ctx: &Context, k: Kind) -> Outcome {
    for (small, big) in nested_pairs(ctx) {
        require(sub(&fl(ctx, k, &small), &fl(ctx, k, &big)), || {
            format!("lower not monotone on {small:?} ⊂ {big:?}")
        })?;
        require(sub(&fu(ctx, k, &small), &fu(ctx, k, &big)), || {
            format!("upper not monotone on {small:?} ⊂ {big:?}")
        })?;
    }
    Ok(())
}

fn a_p5(ctx: &Context, k: Kind) -> Outcome {
    let (x, y) = (&ctx.inst.x, &ctx.inst.y);
    let (a, b) = (cup(&fl(ctx, k, x), &fl(ctx, k, y)), fl(ctx, k, &cup(x, y)));
    require(sub(&a, &b), || {
        format!("lower(X) ∪ lower(Y) = {a:?} ⊄ lower(X ∪ Y) = {b:?}")
    })?;
    let (a, b) = (fu(ctx, k, &cap(x, y)), cap(&fu(ctx, k, x), &fu(ctx, k, y)));
    require(sub(&a, &b), || {
        format!("upper(X ∩ Y) = {a:?} ⊄ upper(X) ∩ upper(Y) = {b:?}")
    })
}

fn bounded_input<'a>(ctx: &'a Context, k: Kind) -> std::result::Result<&'a IVFuzzySet, Verdict> {
    let Some(b) = &ctx.inst.bounded else {
        return Err(Verdict::Skip("boundedness hypothesis infeasible".into()));
    };
    if !satisfies_boundedness(&ctx.sys, k, b) {
        return Err(Verdict::Skip(
            "sampled set violates the boundedness hypothesis".into(),
        ));
    }
    Ok(b)
}

fn a_p6(ctx: &Context, k: Kind) -> Outcome {
    let b = bounded_input(ctx, k)?;
    let (lower, upper) = (fl(ctx, k, b), fu(ctx, k, b));
    require(sub(&lower, b), || {
        format!("lower(X) = {lower:?} ⊄ X = {b:?}")
    })?;
    require(sub(b, &upper), || {
        format!("X = {b:?} ⊄ upper(X) = {upper:?}")
    })
}

fn a_p7(ctx: &Context, k: Kind) -> Outcome {
    let b = bounded_input(ctx, k)?;
    let (lower, upper) = (fl(ctx, k, b), fu(ctx, k, b));
    let (lower2, upper2) = (fl(ctx, k, &lower), fu(ctx, k, &upper));
    let chain = [&lower2, &lower, b, &upper, &upper2];
    for (i, w) in chain.windows(2).enumerate() {
        require(sub(w[0], w[1]), || {
            format!(
                "chain lower²(X) ⊂ lower(X) ⊂ X ⊂ upper(X) ⊂ upper²(X) breaks at link {}",
                i + 1
            )
        })?;
    }
    Ok(())
}

fn a_p8(ctx: &Context, k: Kind) -> Outcome {
    for (small, big) in nested_pairs(ctx) {
        let (a, b) = (
            cup(&fl(ctx, k, &small), &fl(ctx, k, &big)),
            fl(ctx, k, &cup(&small, &big)),
        );
        require(a == b, || {
            format!("X ⊂ Y but lower(X) ∪ lower(Y) = {a:?} ≠ lower(X ∪ Y) = {b:?}")
        })?;
        let (a, b) = (
            fu(ctx, k, &cap(&small, &big)),
            cap(&fu(ctx, k, &small), &fu(ctx, k, &big)),
        );
        require(a == b, || {
            format!("X ⊂ Y but upper(X ∩ Y) = {a:?} ≠ upper(X) ∩ upper(Y) = {b:?}")
        })?;
    }
    Ok(())
}

fn w_a1_p5(ctx: &Context) -> Outcome {
    let (x, y) = (&ctx.inst.x, &ctx.inst.y);
    let (a, b) = (
        cup(&fl(ctx, Kind::K1, x), &fl(ctx, Kind::K1, y)),
        fl(ctx, Kind::K1, &cup(x, y)),
    );
    require(a == b, || {
        format!("lower(X) ∪ lower(Y) = {a:?} ⊊ lower(X ∪ Y) = {b:?}")
    })
}

// ---------------------------------------------------------------------------
// crisp approximation operators, per kind

fn ca_p1(ctx: &Context, k: Kind) -> Outcome {
    let u = ctx.sys.universe().clone();
    let (empty, full) = (CrispSubset::empty(u.clone()), CrispSubset::full(u));
    let (a, b) = (cl(ctx, k, &empty), cl(ctx, k, &full));
    require(a == empty, || format!("lower(∅) = {a:?}"))?;
    require(b == full, || format!("lower(U) = {b:?}"))
}

fn ca_p2(ctx: &Context, k: Kind) -> Outcome {
    let u = ctx.sys.universe().clone();
    let (empty, full) = (CrispSubset::empty(u.clone()), CrispSubset::full(u));
    let (a, b) = (cu(ctx, k, &empty), cu(ctx, k, &full));
    require(a == empty, || format!("upper(∅) = {a:?}"))?;
    require(b == full, || format!("upper(U) = {b:?}"))
}

fn ca_p3(ctx: &Context, k: Kind) -> Outcome {
    let (x, y) = (&ctx.inst.cx, &ctx.inst.cy);
    for (small, big) in [(ccap(x, y), y.clone()), (x.clone(), ccup(x, y))] {
        require(csub(&cl(ctx, k, &small), &cl(ctx, k, &big)), || {
            format!("lower not monotone on {small:?} ⊏ {big:?}")
        })?;
        require(csub(&cu(ctx, k, &small), &cu(ctx, k, &big)), || {
            format!("upper not monotone on {small:?} ⊏ {big:?}")
        })?;
    }
    Ok(())
}

fn ca_p4(ctx: &Context, k: Kind) -> Outcome {
    let (x, y) = (&ctx.inst.cx, &ctx.inst.cy);
    let (a, b) = (
        ccup(&cl(ctx, k, x), &cl(ctx, k, y)),
        cl(ctx, k, &ccup(x, y)),
    );
    require(csub(&a, &b), || {
        format!("lower(X) ⊔ lower(Y) = {a:?} ⋢ lower(X ⊔ Y) = {b:?}")
    })?;
    let (a, b) = (
        cu(ctx, k, &ccap(x, y)),
        ccap(&cu(ctx, k, x), &cu(ctx, k, y)),
    );
    require(csub(&a, &b), || {
        format!("upper(X ⊓ Y) = {a:?} ⋢ upper(X) ⊓ upper(Y) = {b:?}")
    })
}

fn ca_p5(ctx: &Context, k: Kind) -> Outcome {
    let (x, y) = (&ctx.inst.cx, &ctx.inst.cy);
    let (a, b) = (
        ccap(&cl(ctx, k, x), &cl(ctx, k, y)),
        cl(ctx, k, &ccap(x, y)),
    );
    require(a == b, || {
        format!("lower(X) ⊓ lower(Y) = {a:?} ≠ lower(X ⊓ Y) = {b:?}")
    })?;
    let (a, b) = (
        cu(ctx, k, &ccup(x, y)),
        ccup(&cu(ctx, k, x), &cu(ctx, k, y)),
    );
    require(a == b, || {
        format!("upper(X ⊔ Y) = {a:?} ≠ upper(X) ⊔ upper(Y) = {b:?}")
    })
}

fn ca_p6(ctx: &Context, k: Kind) -> Outcome {
    for (name, x) in crisp_inputs(ctx) {
        let xc = x.complement();
        require(cl(ctx, k, &xc) == cu(ctx, k, x).complement(), || {
            format!("lower({name}^c) differs from upper({name})^c")
        })?;
        require(cu(ctx, k, &xc) == cl(ctx, k, x).complement(), || {
            format!("upper({name}^c) differs from lower({name})^c")
        })?;
    }
    Ok(())
}

fn ca_p7(ctx: &Context, k: Kind) -> Outcome {
    for (name, x) in crisp_inputs(ctx) {
        let (lower, upper) = (cl(ctx, k, x), cu(ctx, k, x));
        require(csub(&lower, x), || {
            format!("lower({name}) = {lower:?} ⋢ {name} = {x:?}")
        })?;
        require(csub(x, &upper), || {
            format!("{name} = {x:?} ⋢ upper({name}) = {upper:?}")
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// relationships between the four kinds

use Kind::{K1, K2, K3, K4};

fn rel_f_eq(
    ctx: &Context,
    label: &str,
    lhs: impl Fn(&IVFuzzySet) -> IVFuzzySet,
    rhs: impl Fn(&IVFuzzySet) -> IVFuzzySet,
) -> Outcome {
    for (name, x) in fuzzy_inputs(ctx) {
        let (a, b) = (lhs(x), rhs(x));
        require(a == b, || {
            format!("{label} fails on {name}: {a:?} vs {b:?}")
        })?;
    }
    Ok(())
}

fn rel_f_chain(
    ctx: &Context,
    label: &str,
    chain: impl Fn(&IVFuzzySet) -> [IVFuzzySet; 3],
) -> Outcome {
    for (name, x) in fuzzy_inputs(ctx) {
        let [a, b, c] = chain(x);
        require(sub(&a, &b) && sub(&b, &c), || {
            format!("{label} fails on {name}: {a:?}, {b:?}, {c:?}")
        })?;
    }
    Ok(())
}

fn rel_f1(ctx: &Context) -> Outcome {
    rel_f_eq(
        ctx,
        "lower3 = lower1 ∪ lower2",
        |x| fl(ctx, K3, x),
        |x| cup(&fl(ctx, K1, x), &fl(ctx, K2, x)),
    )
}

fn rel_f2(ctx: &Context) -> Outcome {
    rel_f_eq(
        ctx,
        "upper3 = upper1 ∩ upper2",
        |x| fu(ctx, K3, x),
        |x| cap(&fu(ctx, K1, x), &fu(ctx, K2, x)),
    )
}

fn rel_f3(ctx: &Context) -> Outcome {
    rel_f_eq(
        ctx,
        "lower4 = lower1 ∩ lower2",
        |x| fl(ctx, K4, x),
        |x| cap(&fl(ctx, K1, x), &fl(ctx, K2, x)),
    )
}

fn rel_f4(ctx: &Context) -> Outcome {
    rel_f_eq(
        ctx,
        "upper4 = upper1 ∪ upper2",
        |x| fu(ctx, K4, x),
        |x| cup(&fu(ctx, K1, x), &fu(ctx, K2, x)),
    )
}

fn rel_f5(ctx: &Context) -> Outcome {
    rel_f_chain(ctx, "lower4 ⊂ lower1 ⊂ lower3", |x| {
        [fl(ctx, K4, x), fl(ctx, K1, x), fl(ctx, K3, x)]
    })
}

fn rel_f6(ctx: &Context) -> Outcome {
    rel_f_chain(ctx, "lower4 ⊂ lower2 ⊂ lower3", |x| {
        [fl(ctx, K4, x), fl(ctx, K2, x), fl(ctx, K3, x)]
    })
}

fn rel_f7(ctx: &Context) -> Outcome {
    rel_f_chain(ctx, "upper3 ⊂ upper1 ⊂ upper4", |x| {
        [fu(ctx, K3, x), fu(ctx, K1, x), fu(ctx, K4, x)]
    })
}

fn rel_f8(ctx: &Context) -> Outcome {
    rel_f_chain(ctx, "upper3 ⊂ upper2 ⊂ upper4", |x| {
        [fu(ctx, K3, x), fu(ctx, K2, x), fu(ctx, K4, x)]
    })
}

fn rel_c_eq(
    ctx: &Context,
    label: &str,
    lhs: impl Fn(&CrispSubset) -> CrispSubset,
    rhs: impl Fn(&CrispSubset) -> CrispSubset,
) -> Outcome {
    for (name, x) in crisp_inputs(ctx) {
        let (a, b) = (lhs(x), rhs(x));
        require(a == b, || {
            format!("{label} fails on {name}: {a:?} vs {b:?}")
        })?;
    }
    Ok(())
}

fn rel_c_chain(
    ctx: &Context,
    label: &str,
    chain: impl Fn(&CrispSubset) -> [CrispSubset; 3],
) -> Outcome {
    for (name, x) in crisp_inputs(ctx) {
        let [a, b, c] = chain(x);
        require(csub(&a, &b) && csub(&b, &c), || {
            format!("{label} fails on {name}: {a:?}, {b:?}, {c:?}")
        })?;
    }
    Ok(())
}

fn rel_c1(ctx: &Context) -> Outcome {
    rel_c_eq(
        ctx,
        "lower3 = lower1 ⊔ lower2",
        |x| cl(ctx, K3, x),
        |x| ccup(&cl(ctx, K1, x), &cl(ctx, K2, x)),
    )
}

fn rel_c2(ctx: &Context) -> Outcome {
    rel_c_eq(
        ctx,
        "upper3 = upper1 ⊓ upper2",
        |x| cu(ctx, K3, x),
        |x| ccap(&cu(ctx, K1, x), &cu(ctx, K2, x)),
    )
}

fn rel_c3(ctx: &Context) -> Outcome {
    rel_c_eq(
        ctx,
        "lower4 = lower1 ⊓ lower2",
        |x| cl(ctx, K4, x),
        |x| ccap(&cl(ctx, K1, x), &cl(ctx, K2, x)),
    )
}

fn rel_c4(ctx: &Context) -> Outcome {
    rel_c_eq(
        ctx,
        "upper4 = upper1 ⊔ upper2",
        |x| cu(ctx, K4, x),
        |x| ccup(&cu(ctx, K1, x), &cu(ctx, K2, x)),
    )
}

fn rel_c5(ctx: &Context) -> Outcome {
    rel_c_chain(ctx, "lower4 ⊏ lower1 ⊏ lower3", |x| {
        [cl(ctx, K4, x), cl(ctx, K1, x), cl(ctx, K3, x)]
    })
}

fn rel_c6(ctx: &Context) -> Outcome {
    rel_c_chain(ctx, "lower4 ⊏ lower2 ⊏ lower3", |x| {
        [cl(ctx, K4, x), cl(ctx, K2, x), cl(ctx, K3, x)]
    })
}

fn rel_c7(ctx: &Context) -> Outcome {
    rel_c_chain(ctx, "upper3 ⊏ upper1 ⊏ upper4", |x| {
        [cu(ctx, K3, x), cu(ctx, K1, x), cu(ctx, K4, x)]
    })
}

fn rel_c8(ctx: &Context) -> Outcome {
    rel_c_chain(ctx, "upper3 ⊏ upper2 ⊏ upper4", |x| {
        [cu(ctx, K3, x), cu(ctx, K2, x), cu(ctx, K4, x)]
    })
}

fn sandwich(ctx: &Context) -> Outcome {
    let b = bounded_input(ctx, K1)?;
    let chain = [
        fl(ctx, K4, b),
        fl(ctx, K2, b),
        fl(ctx, K3, b),
        b.clone(),
        fu(ctx, K3, b),
        fu(ctx, K1, b),
        fu(ctx, K4, b),
    ];
    const LABELS: [&str; 7] = [
        "lower4", "lower2", "lower3", "X", "upper3", "upper1", "upper4",
    ];
    for i in 0..6 {
        require(sub(&chain[i], &chain[i + 1]), || {
            format!(
                "{} = {:?} ⊄ {} = {:?}",
                LABELS[i],
                chain[i],
                LABELS[i + 1],
                chain[i + 1]
            )
        })?;
    }
    Ok(())
}

fn two_space(ctx: &Context) -> Outcome {
    let (a, b) = (&ctx.sys, &ctx.paired_sys);
    if (0..ctx.n()).any(|x| a.crisp_row(x) != b.crisp_row(x)) {
        return skip("paired space has different crisp neighborhoods");
    }
    for (name, x) in crisp_inputs(ctx) {
        let (la, lb) = (
            crisp_lower(a, K1, x).expect("same universe"),
            crisp_lower(b, K1, x).expect("same universe"),
        );
        require(la == lb, || {
            format!("lower({name}) is {la:?} in one space and {lb:?} in the other")
        })?;
        let (ua, ub) = (
            crisp_upper(a, K1, x).expect("same universe"),
            crisp_upper(b, K1, x).expect("same universe"),
        );
        require(ua == ub, || {
            format!("upper({name}) is {ua:?} in one space and {ub:?} in the other")
        })?;
    }
    Ok(())
}

fn oracle_eq(ctx: &Context) -> Outcome {
    let space = &ctx.inst.space;
    let n = ctx.n();
    for x in 0..n {
        for y in 0..n {
            require(
                ctx.sys.fuzzy_grade(x, y) == literal::sn(space, x, y),
                || {
                    format!(
                        "SÑ_{}({}) disagrees with the literal evaluator",
                        ctx.name(x),
                        ctx.name(y)
                    )
                },
            )?;
            require(
                ctx.sys.in_crisp(x, y) == literal::in_sn(space, x, y),
                || format!("S̄N_{} membership of {} disagrees", ctx.name(x), ctx.name(y)),
            )?;
            require(
                ctx.sys.in_complementary_crisp(x, y) == literal::in_sm(space, x, y),
                || format!("S̄M_{} membership of {} disagrees", ctx.name(x), ctx.name(y)),
            )?;
        }
    }
    for k in Kind::ALL {
        for (name, x) in fuzzy_inputs(ctx) {
            require(
                fl(ctx, k, x) == literal::fuzzy_lower(space, k, x).expect("same universe"),
                || format!("fuzzy lower {k} of {name} disagrees"),
            )?;
            require(
                fu(ctx, k, x) == literal::fuzzy_upper(space, k, x).expect("same universe"),
                || format!("fuzzy upper {k} of {name} disagrees"),
            )?;
        }
        for (name, x) in crisp_inputs(ctx) {
            require(
                cl(ctx, k, x) == literal::crisp_lower(space, k, x).expect("same universe"),
                || format!("crisp lower {k} of {name} disagrees"),
            )?;
            require(
                cu(ctx, k, x) == literal::crisp_upper(space, k, x).expect("same universe"),
                || format!("crisp upper {k} of {name} disagrees"),
            )?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------

static REGISTRY: LazyLock<Vec<Theorem>> = LazyLock::new(build);

fn build() -> Vec<Theorem> {
    use Claim::{Existence, Universal};
    use Status::{Conjecture, Derived, PaperProved};

    let mut r = Vec::new();
    let mut plain = |id: &str, statement: &str, status, claim, f| {
        r.push(Theorem {
            id: id.into(),
            statement: statement.into(),
            status,
            claim,
            check: Check::Plain(f),
        })
    };

    plain(
        "L-FAM-1",
        "I* ≤ I for every I in a family iff I* ≤ the family meet",
        PaperProved,
        Universal,
        l_fam_1,
    );
    plain(
        "L-FAM-2",
        "I* ≤ some member implies I* ≤ the family join",
        PaperProved,
        Universal,
        l_fam_2,
    );
    plain(
        "L-FAM-3",
        "a larger family has a smaller meet",
        PaperProved,
        Universal,
        l_fam_3,
    );
    plain(
        "W-L-FAM-2",
        "some I* lies below the family join but below no member",
        PaperProved,
        Existence,
        w_l_fam_2,
    );
    plain(
        "IVFS-ALG-1",
        "∩ and ∪ are commutative",
        PaperProved,
        Universal,
        ivfs_commutative,
    );
    plain(
        "IVFS-ALG-2",
        "∩ and ∪ are associative",
        PaperProved,
        Universal,
        ivfs_associative,
    );
    plain(
        "IVFS-ALG-3",
        "∩ and ∪ distribute over each other",
        PaperProved,
        Universal,
        ivfs_distributive,
    );
    plain(
        "IVFS-ALG-4",
        "(X^c)^c = X",
        PaperProved,
        Universal,
        ivfs_involution,
    );
    plain(
        "IVFS-ALG-5",
        "De Morgan laws for ∩ and ∪",
        PaperProved,
        Universal,
        ivfs_de_morgan,
    );
    plain(
        "N-REFL",
        "β ≤ SÑ_x(x) for every x",
        PaperProved,
        Universal,
        n_refl,
    );
    plain(
        "N-TRANS",
        "β ≤ SÑ_x(y) and β ≤ SÑ_y(z) imply β ≤ SÑ_x(z)",
        PaperProved,
        Universal,
        n_trans,
    );
    plain(
        "N-MONO",
        "β1 ≤ β2 implies SÑ^β1_x ⊂ SÑ^β2_x",
        PaperProved,
        Universal,
        n_mono,
    );
    plain(
        "N-CONTAIN",
        "β ≤ SÑ_x(y) iff SÑ_y ⊂ SÑ_x; mutual domination iff SÑ_x = SÑ_y",
        PaperProved,
        Universal,
        n_contain,
    );
    plain(
        "CN-REFL",
        "x ∈ S̄N_x for every x",
        PaperProved,
        Universal,
        cn_refl,
    );
    plain(
        "CN-MEMB",
        "y ∈ S̄N_x iff S̄N_y ⊏ S̄N_x",
        PaperProved,
        Universal,
        cn_memb,
    );
    plain(
        "CN-TRANS",
        "y ∈ S̄N_x and z ∈ S̄N_y imply z ∈ S̄N_x",
        PaperProved,
        Universal,
        cn_trans,
    );
    plain(
        "CN-EQ",
        "SÑ_y ⊂ SÑ_x iff S̄N_y ⊏ S̄N_x; S̄N_x = S̄N_y iff SÑ_x = SÑ_y",
        PaperProved,
        Universal,
        cn_eq,
    );
    plain(
        "CN-LATTICE-1",
        "S̄N_x ⊔ S̄N_y ⊏ crisp_of(SÑ_x ∪ SÑ_y)",
        PaperProved,
        Universal,
        cn_lattice_1,
    );
    plain(
        "CN-LATTICE-2",
        "S̄N_x ⊓ S̄N_y = crisp_of(SÑ_x ∩ SÑ_y)",
        PaperProved,
        Universal,
        cn_lattice_2,
    );
    plain(
        "CN-LATTICE-3",
        "⊔_Λ S̄N ⊏ crisp_of(⋃_Λ SÑ) for every nonempty Λ",
        PaperProved,
        Universal,
        cn_lattice_3,
    );
    plain(
        "CN-LATTICE-4",
        "⊓_Λ S̄N = crisp_of(⋂_Λ SÑ) for every nonempty Λ",
        PaperProved,
        Universal,
        cn_lattice_4,
    );
    plain(
        "W-CN-LATTICE-1",
        "some x, y with S̄N_x ⊔ S̄N_y ⊊ crisp_of(SÑ_x ∪ SÑ_y)",
        PaperProved,
        Existence,
        w_cn_lattice_1,
    );
    plain(
        "W-CN-LATTICE-3",
        "some Λ of at least three objects with ⊔_Λ S̄N ⊊ crisp_of(⋃_Λ SÑ)",
        PaperProved,
        Existence,
        w_cn_lattice_3,
    );
    plain(
        "CM-TRANSPOSE",
        "SM̃_x(y) = SÑ_y(x), y ∈ S̄M_x iff x ∈ S̄N_y, and x ∈ S̄M_x",
        Derived,
        Universal,
        cm_transpose,
    );

    let fuzzy_props: [(&str, &str, KindCheck); 8] = [
        ("P1", "lower(I^U) = I^U and upper(I^∅) = I^∅", a_p1),
        ("P2", "lower(X^c) = upper(X)^c and upper(X^c) = lower(X)^c", a_p2),
        ("P3", "lower(X ∩ Y) = lower(X) ∩ lower(Y) and upper(X ∪ Y) = upper(X) ∪ upper(Y)", a_p3),
        ("P4", "X ⊂ Y implies lower(X) ⊂ lower(Y) and upper(X) ⊂ upper(Y)", a_p4),
        ("P5", "lower(X) ∪ lower(Y) ⊂ lower(X ∪ Y) and upper(X ∩ Y) ⊂ upper(X) ∩ upper(Y)", a_p5),
        ("P6", "under the boundedness hypothesis, lower(X) ⊂ X ⊂ upper(X)", a_p6),
        ("P7", "under the boundedness hypothesis, lower²(X) ⊂ lower(X) ⊂ X ⊂ upper(X) ⊂ upper²(X)", a_p7),
        ("P8", "X ⊂ Y implies lower(X) ∪ lower(Y) = lower(X ∪ Y) and upper(X ∩ Y) = upper(X) ∩ upper(Y)", a_p8),
    ];
    let crisp_props: [(&str, &str, KindCheck); 7] = [
        ("P1", "lower(∅) = ∅ and lower(U) = U", ca_p1),
        ("P2", "upper(∅) = ∅ and upper(U) = U", ca_p2),
        (
            "P3",
            "X ⊏ Y implies lower(X) ⊏ lower(Y) and upper(X) ⊏ upper(Y)",
            ca_p3,
        ),
        (
            "P4",
            "lower(X) ⊔ lower(Y) ⊏ lower(X ⊔ Y) and upper(X ⊓ Y) ⊏ upper(X) ⊓ upper(Y)",
            ca_p4,
        ),
        (
            "P5",
            "lower(X) ⊓ lower(Y) = lower(X ⊓ Y) and upper(X ⊔ Y) = upper(X) ⊔ upper(Y)",
            ca_p5,
        ),
        (
            "P6",
            "lower(X^c) = upper(X)^c and upper(X^c) = lower(X)^c",
            ca_p6,
        ),
        ("P7", "lower(X) ⊏ X ⊏ upper(X)", ca_p7),
    ];
    for k in Kind::ALL {
        for (p, statement, f) in fuzzy_props {
            r.push(Theorem {
                id: format!("A{k}-{p}"),
                statement: format!("kind {k} fuzzy: {statement}"),
                status: PaperProved,
                claim: Universal,
                check: Check::Kinded(f, k),
            });
        }
    }
    r.push(Theorem {
        id: "W-A1-P5".into(),
        statement: "some X, Y with lower1(X) ∪ lower1(Y) ⊊ lower1(X ∪ Y)".into(),
        status: PaperProved,
        claim: Existence,
        check: Check::Plain(w_a1_p5),
    });
    for k in Kind::ALL {
        for (p, statement, f) in crisp_props {
            r.push(Theorem {
                id: format!("CA{k}-{p}"),
                statement: format!("kind {k} crisp: {statement}"),
                status: if k == K1 { PaperProved } else { Conjecture },
                claim: Universal,
                check: Check::Kinded(f, k),
            });
        }
    }

    let mut plain = |id: &str, statement: &str, status, f| {
        r.push(Theorem {
            id: id.into(),
            statement: statement.into(),
            status,
            claim: Universal,
            check: Check::Plain(f),
        })
    };
    plain(
        "REL-F1",
        "lower3(X) = lower1(X) ∪ lower2(X)",
        PaperProved,
        rel_f1,
    );
    plain(
        "REL-F2",
        "upper3(X) = upper1(X) ∩ upper2(X)",
        PaperProved,
        rel_f2,
    );
    plain(
        "REL-F3",
        "lower4(X) = lower1(X) ∩ lower2(X)",
        PaperProved,
        rel_f3,
    );
    plain(
        "REL-F4",
        "upper4(X) = upper1(X) ∪ upper2(X)",
        PaperProved,
        rel_f4,
    );
    plain(
        "REL-F5",
        "lower4(X) ⊂ lower1(X) ⊂ lower3(X)",
        PaperProved,
        rel_f5,
    );
    plain(
        "REL-F6",
        "lower4(X) ⊂ lower2(X) ⊂ lower3(X)",
        PaperProved,
        rel_f6,
    );
    plain(
        "REL-F7",
        "upper3(X) ⊂ upper1(X) ⊂ upper4(X)",
        PaperProved,
        rel_f7,
    );
    plain(
        "REL-F8",
        "upper3(X) ⊂ upper2(X) ⊂ upper4(X)",
        PaperProved,
        rel_f8,
    );
    plain(
        "REL-C1",
        "crisp lower3(X) = lower1(X) ⊔ lower2(X)",
        PaperProved,
        rel_c1,
    );
    plain(
        "REL-C2",
        "crisp upper3(X) = upper1(X) ⊓ upper2(X)",
        PaperProved,
        rel_c2,
    );
    plain(
        "REL-C3",
        "crisp lower4(X) = lower1(X) ⊓ lower2(X)",
        PaperProved,
        rel_c3,
    );
    plain(
        "REL-C4",
        "crisp upper4(X) = upper1(X) ⊔ upper2(X)",
        PaperProved,
        rel_c4,
    );
    plain(
        "REL-C5",
        "crisp lower4(X) ⊏ lower1(X) ⊏ lower3(X)",
        PaperProved,
        rel_c5,
    );
    plain(
        "REL-C6",
        "crisp lower4(X) ⊏ lower2(X) ⊏ lower3(X)",
        PaperProved,
        rel_c6,
    );
    plain(
        "REL-C7",
        "crisp upper3(X) ⊏ upper1(X) ⊏ upper4(X)",
        PaperProved,
        rel_c7,
    );
    plain(
        "REL-C8",
        "crisp upper3(X) ⊏ upper2(X) ⊏ upper4(X)",
        PaperProved,
        rel_c8,
    );
    plain(
        "SANDWICH",
        "under the boundedness hypothesis, lower4 ⊂ lower2 ⊂ lower3 ⊂ X ⊂ upper3 ⊂ upper1 ⊂ upper4",
        PaperProved,
        sandwich,
    );
    plain(
        "TWO-SPACE",
        "two spaces with equal S̄N_x for every x have equal crisp kind 1 approximations",
        PaperProved,
        two_space,
    );
    plain(
        "ORACLE-EQ",
        "matrix-based neighborhoods and operators equal the definition-literal evaluator",
        Derived,
        oracle_eq,
    );
    r
}
