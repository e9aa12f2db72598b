use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{registry::lookup, CheckKind, Corpus, Instance, InstanceRecord, PropositionCheck};
use crate::error::Result;

/// Outcome of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    pub failed_clauses: Vec<&'static str>,
}

/// Evaluates hypothesis and conclusion on `inst`. The conclusion is
/// evaluated even when the hypothesis fails.
pub fn check(prop: &PropositionCheck, inst: &Instance) -> Result<CheckRecord> {
    prop.validate(inst)?;
    let hypothesis_holds = prop.hypothesis(inst)?;
    let failed_clauses = prop.failed_clauses(inst)?;
    Ok(CheckRecord { hypothesis_holds, conclusion_holds: failed_clauses.is_empty(), failed_clauses })
}

/// An instance together with the clauses that failed on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(flatten)]
    pub instance: InstanceRecord,
    pub failed: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub proposition: &'static str,
    pub kind: CheckKind,
    pub corpus: String,
    pub instances_examined: usize,
    pub hypothesis_satisfied: usize,
    /// Theorem failures: hypothesis holds and conclusion fails.
    pub violations: Vec<Violation>,
    /// The same records for checks registered as findings.
    pub findings: Vec<Violation>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub proposition: &'static str,
    pub kind: CheckKind,
    pub corpus: String,
    /// What qualifies an instance as a finding.
    pub criterion: &'static str,
    pub instances_examined: usize,
    pub findings: Vec<Violation>,
    pub elapsed_ms: u64,
}

fn evaluate_all(prop: &PropositionCheck, instances: &[Instance]) -> Result<Vec<(usize, CheckRecord)>> {
    instances.par_iter().enumerate().map(|(i, inst)| check(prop, inst).map(|r| (i, r))).collect()
}

fn collect(
    instances: &[Instance],
    records: Vec<(usize, CheckRecord)>,
    keep: impl Fn(&CheckRecord) -> bool,
) -> Vec<Violation> {
    let mut hits: Vec<_> =
        records.into_iter().filter(|(_, r)| keep(r)).map(|(i, r)| (instances[i].key(), i, r)).collect();
    hits.sort_by(|a, b| a.0.cmp(&b.0));
    hits.into_iter().map(|(_, i, r)| Violation { instance: instances[i].record(), failed: r.failed_clauses }).collect()
}

/// Runs `id` over every instance of `corpus`.
pub fn sweep(id: &str, corpus: &Corpus) -> Result<SweepReport> {
    let prop = lookup(id)?;
    let start = Instant::now();
    let instances = corpus.instances(prop)?;
    sweep_over(prop, corpus.name(), &instances, start)
}

/// Runs `id` over explicitly given instances.
pub fn sweep_instances(id: &str, label: &str, instances: &[Instance]) -> Result<SweepReport> {
    sweep_over(lookup(id)?, label, instances, Instant::now())
}

fn sweep_over(
    prop: &'static PropositionCheck,
    label: &str,
    instances: &[Instance],
    start: Instant,
) -> Result<SweepReport> {
    let records = evaluate_all(prop, instances)?;
    let hypothesis_satisfied = records.iter().filter(|(_, r)| r.hypothesis_holds).count();
    let failures = collect(instances, records, |r| r.hypothesis_holds && !r.conclusion_holds);
    let (violations, findings) = match prop.kind {
        CheckKind::Theorem => (failures, Vec::new()),
        CheckKind::Finding => (Vec::new(), failures),
    };
    Ok(SweepReport {
        proposition: prop.id,
        kind: prop.kind,
        corpus: label.to_string(),
        instances_examined: instances.len(),
        hypothesis_satisfied,
        violations,
        findings,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Theorems: instances where the hypothesis fails and the conclusion fails
/// too. Findings: instances where the observed statement fails.
pub fn necessity_search(id: &str, corpus: &Corpus) -> Result<SearchReport> {
    let prop = lookup(id)?;
    let start = Instant::now();
    let instances = corpus.instances(prop)?;
    search_over(prop, corpus.name(), &instances, start)
}

pub fn necessity_search_instances(id: &str, label: &str, instances: &[Instance]) -> Result<SearchReport> {
    search_over(lookup(id)?, label, instances, Instant::now())
}

fn search_over(
    prop: &'static PropositionCheck,
    label: &str,
    instances: &[Instance],
    start: Instant,
) -> Result<SearchReport> {
    let records = evaluate_all(prop, instances)?;
    let (criterion, findings) = match prop.kind {
        CheckKind::Theorem => (
            "hypothesis fails and conclusion fails",
            collect(instances, records, |r| !r.hypothesis_holds && !r.conclusion_holds),
        ),
        CheckKind::Finding => (
            "hypothesis holds and conclusion fails",
            collect(instances, records, |r| r.hypothesis_holds && !r.conclusion_holds),
        ),
    };
    Ok(SearchReport {
        proposition: prop.id,
        kind: prop.kind,
        corpus: label.to_string(),
        criterion,
        instances_examined: instances.len(),
        findings,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
