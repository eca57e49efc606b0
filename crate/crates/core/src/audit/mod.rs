//! Randomized property audit: sample instances, run every selected check, shrink
//! the first failure of each statement, and summarize.

pub mod gen;
pub mod instance;
pub mod registry;
mod shrink;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use gen::{gen_space, BetaPolicy, CoveringMode, GenConfig, REJECTION_BUDGET};
pub use instance::{Context, Instance, InstanceDocument};
pub use registry::{parse_selection, registry, Claim, Status, Theorem, TheoremId, Verdict};

use crate::error::Result;
use crate::io::{SCHEMA_VERSION, VERSION};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Shrunk {
    pub detail: String,
    pub instance: serde_json::Value,
}

/// A failing trial, or for an existence statement a witnessing one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub trial: u64,
    pub detail: String,
    pub instance: serde_json::Value,
    pub shrunk: Shrunk,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub claim: Claim,
    pub trials: u64,
    pub passes: u64,
    /// Always zero for existence statements; see `witnesses`.
    pub failures: u64,
    pub skips: u64,
    pub skip_reasons: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witnesses: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Finding>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Finding>,
}

impl TheoremReport {
    /// Failed on some trial, for a universal statement.
    pub fn failed(&self) -> bool {
        self.failures > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub theorems: usize,
    /// Proved or derived statements with at least one failing trial.
    pub proved_failures: Vec<String>,
    pub conjecture_failures: Vec<String>,
    pub missing_witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub schema_version: u32,
    pub version: String,
    pub config: GenConfig,
    pub trials: u64,
    pub theorems: Vec<TheoremReport>,
    pub summary: Summary,
}

impl AuditReport {
    pub fn theorem(&self, id: &str) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.id == id)
    }

    /// 1 when a proved or derived statement failed, else 0.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.summary.proved_failures.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

struct Tally {
    passes: u64,
    fails: u64,
    skips: u64,
    reasons: BTreeMap<String, u64>,
    first: Option<(u64, String, Instance)>,
}

/// Runs `trials` sampled instances through the selected checks. Trials run in
/// parallel; the report depends only on `config` and `trials`.
pub fn run_audit(config: &GenConfig, theorems: &[TheoremId], trials: u64) -> Result<AuditReport> {
    config.validate()?;
    let per_trial: Vec<(Instance, Vec<Verdict>)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let inst = Instance::sample(config, t)?;
            let ctx = Context::new(&inst);
            let verdicts = theorems.iter().map(|id| id.theorem().run(&ctx)).collect();
            drop(ctx);
            Ok((inst, verdicts))
        })
        .collect::<Result<_>>()?;

    let mut tallies: Vec<Tally> = theorems
        .iter()
        .map(|_| Tally {
            passes: 0,
            fails: 0,
            skips: 0,
            reasons: BTreeMap::new(),
            first: None,
        })
        .collect();
    for (t, (inst, verdicts)) in per_trial.iter().enumerate() {
        for (tally, verdict) in tallies.iter_mut().zip(verdicts) {
            match verdict {
                Verdict::Pass => tally.passes += 1,
                Verdict::Skip(r) => {
                    tally.skips += 1;
                    *tally.reasons.entry(r.clone()).or_default() += 1;
                }
                Verdict::Fail(d) => {
                    tally.fails += 1;
                    if tally.first.is_none() {
                        tally.first = Some((t as u64, d.clone(), inst.clone()));
                    }
                }
            }
        }
    }
    drop(per_trial);

    let reports: Vec<TheoremReport> = theorems
        .par_iter()
        .zip(tallies.into_par_iter())
        .map(|(id, tally)| report_for(id.theorem(), tally, trials))
        .collect();

    let mut summary = Summary {
        theorems: reports.len(),
        ..Summary::default()
    };
    for r in &reports {
        match (r.claim, r.status) {
            (Claim::Existence, _) if r.witness_found != Some(true) => {
                summary.missing_witnesses.push(r.id.clone())
            }
            (Claim::Existence, _) => {}
            (Claim::Universal, s) if r.failed() && s.is_fatal() => {
                summary.proved_failures.push(r.id.clone())
            }
            (Claim::Universal, _) if r.failed() => summary.conjecture_failures.push(r.id.clone()),
            _ => {}
        }
    }
    Ok(AuditReport {
        schema_version: SCHEMA_VERSION,
        version: VERSION.to_string(),
        config: config.clone(),
        trials,
        theorems: reports,
        summary,
    })
}

fn report_for(theorem: &Theorem, tally: Tally, trials: u64) -> TheoremReport {
    let finding = tally.first.map(|(trial, detail, inst)| {
        let (small, small_detail) = shrink::shrink(theorem, &inst, detail.clone());
        Finding {
            trial,
            detail,
            instance: inst.to_json(),
            shrunk: Shrunk {
                detail: small_detail,
                instance: small.to_json(),
            },
        }
    });
    let existence = theorem.claim == Claim::Existence;
    TheoremReport {
        id: theorem.id.clone(),
        statement: theorem.statement.clone(),
        status: theorem.status,
        claim: theorem.claim,
        trials,
        passes: tally.passes,
        failures: if existence { 0 } else { tally.fails },
        skips: tally.skips,
        skip_reasons: tally.reasons,
        witnesses: existence.then_some(tally.fails),
        witness_found: existence.then_some(tally.fails > 0),
        counterexample: if existence { None } else { finding.clone() },
        witness: if existence { finding } else { None },
    }
}

/// Re-runs one check on a stored instance.
pub fn replay(id: TheoremId, instance: &Instance) -> Verdict {
    registry::check(id, instance)
}
