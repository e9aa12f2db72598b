//! Structured report records shared by the command line and tests.
//!
//! Every structured document carries the top-level `schema` tag
//! [`SCHEMA`]. Field order is fixed and all collections are sorted, so
//! identical inputs serialize identically apart from `elapsed_ms`.

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::harness::{SearchReport, SweepReport};
use crate::instance::LoadedInstance;
use crate::localization::{localize_module, FractionClasses};
use crate::module::{FiniteModule, Submodule};
use crate::properties;
use crate::set::ElementSet;

pub const SCHEMA: &str = "modloc.report/v1";

/// Top-level document: schema tag, command name, and the command's payload.
#[derive(Debug, Clone, Serialize)]
pub struct Document<T: Serialize> {
    pub schema: &'static str,
    pub command: &'static str,
    #[serde(flatten)]
    pub body: T,
}

impl<T: Serialize> Document<T> {
    pub fn new(command: &'static str, body: T) -> Self {
        Self { schema: SCHEMA, command, body }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// One row of the submodule table. Entries that are only defined for
/// proper submodules are `None` on `M` itself.
#[derive(Debug, Clone, Serialize)]
pub struct SubmoduleRow {
    pub submodule: ElementSet,
    pub colon: ElementSet,
    pub not_prime: Option<ElementSet>,
    pub prime: bool,
    pub primal: Option<bool>,
    pub complementary: Option<bool>,
    pub small: Option<bool>,
    pub essential: bool,
    pub maximal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleVerdicts {
    pub hollow: bool,
    pub lifting: bool,
    pub coatomic: bool,
    pub reduced: bool,
    pub local: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealSummary {
    pub ideal: ElementSet,
    pub prime: bool,
    pub primal: Option<bool>,
    pub not_prime: ElementSet,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExploreReport {
    pub ring: String,
    pub module: String,
    pub ring_size: usize,
    pub module_size: usize,
    pub labels: Vec<String>,
    pub submodules: Vec<SubmoduleRow>,
    pub rad: ElementSet,
    pub p_sum: ElementSet,
    pub verdicts: ModuleVerdicts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealSummary>,
}

fn check_cap(m: &FiniteModule, cap: usize) -> Result<()> {
    if m.size() > cap {
        Err(AlgebraError::CapExceeded { size: m.size(), cap })
    } else {
        Ok(())
    }
}

fn row(m: &FiniteModule, n: &Submodule) -> Result<SubmoduleRow> {
    let proper = m.is_proper(n);
    Ok(SubmoduleRow {
        submodule: n.elements().clone(),
        colon: m.annihilator_colon(n)?.into_elements(),
        not_prime: if proper { Some(m.not_prime_set(n)?.into_elements()) } else { None },
        prime: properties::is_prime_submodule(m, n)?.holds,
        primal: if proper { Some(properties::is_primal(m, n)?.holds) } else { None },
        complementary: if proper { Some(properties::is_complementary(m, n)?.holds) } else { None },
        small: if proper { Some(properties::is_small(m, n)?.holds) } else { None },
        essential: properties::is_essential(m, n)?.holds,
        maximal: properties::is_maximal(m, n)?.holds,
    })
}

pub fn module_verdicts(m: &FiniteModule) -> Result<ModuleVerdicts> {
    Ok(ModuleVerdicts {
        hollow: properties::is_hollow(m)?.holds,
        lifting: properties::is_lifting(m)?.holds,
        coatomic: properties::is_coatomic(m)?.holds,
        reduced: properties::is_reduced(m)?.holds,
        local: properties::is_local_module(m)?.holds,
    })
}

/// Lattice, per-submodule table, radicals and module-level verdicts.
pub fn explore(inst: &LoadedInstance, max_module_size: usize) -> Result<ExploreReport> {
    let m = &*inst.module;
    check_cap(m, max_module_size)?;
    let submodules = m.submodules()?.iter().map(|n| row(m, n)).collect::<Result<Vec<_>>>()?;
    let ideal = match &inst.ideal {
        None => None,
        Some(i) => {
            let ring = &inst.ring;
            let elements = i.elements().clone();
            let proper = !elements.is_full();
            Some(IdealSummary {
                prime: ring.is_prime_ideal(&elements)?,
                primal: if proper { Some(ring.is_primal_ideal(&elements)?) } else { None },
                not_prime: ring.not_prime_subset(&elements),
                ideal: elements,
            })
        }
    };
    Ok(ExploreReport {
        ring: inst.ring.name().to_string(),
        module: m.name().to_string(),
        ring_size: inst.ring.size(),
        module_size: m.size(),
        labels: m.labels().to_vec(),
        submodules,
        rad: m.rad()?.elements().clone(),
        p_sum: m.p_sum()?.elements().clone(),
        verdicts: module_verdicts(m)?,
        ideal,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub class: usize,
    pub label: String,
    pub representative: (usize, usize),
    pub members: Vec<(usize, usize)>,
}

fn class_rows(classes: &FractionClasses, labels: &[String]) -> Vec<ClassRow> {
    (0..classes.len())
        .map(|c| ClassRow {
            class: c,
            label: labels[c].clone(),
            representative: classes.representative(c),
            members: classes.members(c).to_vec(),
        })
        .collect()
}

/// `N ↦ N_S ↦ lift(N_S)`; the round trip is the identity exactly when `N`
/// is saturated with respect to `S`.
#[derive(Debug, Clone, Serialize)]
pub struct TransportRow {
    pub submodule: ElementSet,
    pub localized: ElementSet,
    pub lifted: ElementSet,
    pub round_trip: bool,
}

/// `N' ↦ lift(N') ↦ lift(N')_S`, which must return `N'`.
#[derive(Debug, Clone, Serialize)]
pub struct LiftRow {
    pub submodule: ElementSet,
    pub lifted: ElementSet,
    pub relocalized: ElementSet,
    pub identity: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalizeReport {
    pub ring: String,
    pub module: String,
    pub mulset: ElementSet,
    pub degenerate: bool,
    pub ring_size: usize,
    pub localized_ring_size: usize,
    pub module_size: usize,
    pub localized_module_size: usize,
    pub ring_classes: Vec<ClassRow>,
    pub module_classes: Vec<ClassRow>,
    pub ring_canonical: Vec<usize>,
    pub module_canonical: Vec<usize>,
    pub transported: Vec<TransportRow>,
    pub lifts: Vec<LiftRow>,
}

/// Fraction classes, canonical maps and the transported lattice.
pub fn localize(inst: &LoadedInstance, max_module_size: usize) -> Result<LocalizeReport> {
    check_cap(&inst.module, max_module_size)?;
    let mulset = inst
        .mulset
        .as_ref()
        .ok_or_else(|| AlgebraError::InvalidParameter("the instance has no multiplicative set".into()))?;
    let lm = localize_module(&inst.module, mulset)?;
    let lr = lm.localized_ring();
    let m = &*inst.module;
    let mut transported = Vec::new();
    for n in m.submodules()? {
        let localized = lm.localize_submodule(n)?;
        let lifted = lm.lift_submodule(&localized)?;
        transported.push(TransportRow {
            submodule: n.elements().clone(),
            localized: localized.elements().clone(),
            round_trip: lifted == *n,
            lifted: lifted.elements().clone(),
        });
    }
    let mut lifts = Vec::new();
    for nprime in lm.module().submodules()? {
        let lifted = lm.lift_submodule(nprime)?;
        let relocalized = lm.localize_submodule(&lifted)?;
        lifts.push(LiftRow {
            submodule: nprime.elements().clone(),
            lifted: lifted.elements().clone(),
            identity: relocalized == *nprime,
            relocalized: relocalized.elements().clone(),
        });
    }
    Ok(LocalizeReport {
        ring: inst.ring.name().to_string(),
        module: m.name().to_string(),
        mulset: mulset.elements().clone(),
        degenerate: lm.is_degenerate(),
        ring_size: inst.ring.size(),
        localized_ring_size: lr.ring().size(),
        module_size: m.size(),
        localized_module_size: lm.module().size(),
        ring_classes: class_rows(lr.classes(), lr.ring().labels()),
        module_classes: class_rows(lm.classes(), lm.module().labels()),
        ring_canonical: lr.canonical().table().to_vec(),
        module_canonical: lm.canonical_table().to_vec(),
        transported,
        lifts,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub corpus: String,
    pub total_violations: usize,
    pub results: Vec<SweepReport>,
}

impl VerifyReport {
    pub fn new(corpus: String, results: Vec<SweepReport>) -> Self {
        let total_violations = results.iter().map(|r| r.violations.len()).sum();
        Self { corpus, total_violations, results }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchSummary {
    pub corpus: String,
    pub results: Vec<SearchReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::InstanceFile;

    fn load(text: &str) -> LoadedInstance {
        InstanceFile::parse(text).unwrap().load().unwrap()
    }

    #[test]
    fn explore_z6() {
        let report = explore(&load("[ring]\nkind = \"zn\"\nn = 6"), 36).unwrap();
        let zero = &report.submodules[0];
        assert_eq!(zero.submodule.to_vec(), vec![0]);
        assert_eq!(zero.not_prime.as_ref().unwrap().to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(zero.primal, Some(false));
        let full = report.submodules.last().unwrap();
        assert_eq!(full.not_prime, None);
        assert!(!full.prime);
    }

    #[test]
    fn explore_small_rings() {
        let z2 = explore(&load("[ring]\nkind = \"zn\"\nn = 2"), 36).unwrap();
        assert!(z2.verdicts.hollow && z2.verdicts.local);
        let z4 = explore(&load("[ring]\nkind = \"zn\"\nn = 4"), 36).unwrap();
        assert_eq!(z4.rad.to_vec(), vec![0, 2]);
        assert!(z4.verdicts.local);
        assert!(matches!(
            explore(&load("[ring]\nkind = \"zn\"\nn = 12"), 8),
            Err(AlgebraError::CapExceeded { size: 12, cap: 8 })
        ));
    }

    #[test]
    fn localize_z6() {
        let units = localize(&load("mulset = [1, 5]\n[ring]\nkind = \"zn\"\nn = 6"), 36).unwrap();
        assert_eq!((units.localized_ring_size, units.localized_module_size), (6, 6));
        assert_eq!(units.transported.len(), 4);
        assert!(units.transported.iter().all(|t| t.round_trip));
        assert!(units.lifts.iter().all(|l| l.identity));

        let at_two = localize(&load("mulset = [2, 4]\n[ring]\nkind = \"zn\"\nn = 6"), 36).unwrap();
        assert_eq!((at_two.localized_ring_size, at_two.localized_module_size), (3, 3));
        let at_three = localize(&load("mulset = [3]\n[ring]\nkind = \"zn\"\nn = 6"), 36).unwrap();
        assert_eq!((at_three.localized_ring_size, at_three.localized_module_size), (2, 2));
        assert_eq!(at_three.ring_classes[0].representative, (0, 3));

        let missing = localize(&load("[ring]\nkind = \"zn\"\nn = 6"), 36);
        assert!(matches!(missing, Err(AlgebraError::InvalidParameter(_))));
    }

    #[test]
    fn documents_carry_the_schema_tag() {
        let doc = Document::new("explore", explore(&load("[ring]\nkind = \"zn\"\nn = 3"), 36).unwrap());
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["schema"], SCHEMA);
        assert_eq!(value["command"], "explore");
        assert_eq!(value["module_size"], 3);
    }
}
