//! Executable hypothesis/conclusion checks over finite instances.
//!
//! Every registered statement is a [`PropositionCheck`]: a hypothesis and a
//! conclusion, both evaluated on every instance of a corpus. Sweeps report
//! instances where the hypothesis holds and the conclusion fails; necessity
//! searches report instances where both fail.

mod corpus;
mod registry;
mod sweep;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::instance::{InstanceFile, LoadedInstance, ModuleSpec, RingSpec};
use crate::localization::{localize_module, LocalizedModule};
use crate::module::{FiniteModule, Submodule};
use crate::properties;
use crate::ring::{FiniteRing, MultiplicativeSet};
use crate::set::ElementSet;

pub use corpus::{standard_corpus, Corpus, CorpusConfig, ModuleSelection, LATTICE_SCAN_CAP, MODULE_SIZE_CAP};
pub use registry::{lookup, registry, theorem_ids};
pub use sweep::{
    check, necessity_search, necessity_search_instances, sweep, sweep_instances, CheckRecord, SearchReport,
    SweepReport, Violation,
};

/// What a check quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// One focus submodule `N`.
    Submodule,
    /// Two focus submodules `N`, `L`.
    SubmodulePair,
    /// The module as a whole.
    Module,
    /// A nonempty subset of the ring.
    RingSubset,
}

/// Theorems must never fail; findings record observed behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Theorem,
    Finding,
}

/// One registered statement.
pub struct PropositionCheck {
    pub id: &'static str,
    pub kind: CheckKind,
    pub shape: Shape,
    /// Needs a multiplicative set.
    pub localized: bool,
    /// Scans pairs of submodules or decompositions; swept under the tighter cap.
    pub lattice_heavy: bool,
    pub summary: &'static str,
    hypothesis: fn(&Instance) -> Result<bool>,
    conclusion: fn(&Instance) -> Result<Vec<&'static str>>,
}

impl fmt::Debug for PropositionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropositionCheck")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("shape", &self.shape)
            .finish_non_exhaustive()
    }
}

impl PropositionCheck {
    pub fn hypothesis(&self, inst: &Instance) -> Result<bool> {
        (self.hypothesis)(inst)
    }

    /// Labels of the conclusion clauses that fail; empty when it holds.
    pub fn failed_clauses(&self, inst: &Instance) -> Result<Vec<&'static str>> {
        (self.conclusion)(inst)
    }

    pub fn validate(&self, inst: &Instance) -> Result<()> {
        let mismatch = |why: &str| Err(AlgebraError::SignatureMismatch(format!("{}: {why}", self.id)));
        if self.localized && inst.mulset.is_none() {
            return mismatch("a multiplicative set is required");
        }
        let focus = inst.focus.len();
        match self.shape {
            Shape::Submodule if focus != 1 => mismatch("exactly one focus submodule is required"),
            Shape::SubmodulePair if focus != 2 => mismatch("exactly two focus submodules are required"),
            Shape::Module if focus != 0 => mismatch("module-level checks take no focus submodule"),
            Shape::RingSubset if inst.ring_subset.is_none() => mismatch("a ring subset is required"),
            Shape::RingSubset if inst.ring_subset.as_ref().is_some_and(ElementSet::is_empty) => {
                Err(AlgebraError::EmptySet)
            }
            _ => Ok(()),
        }
    }
}

/// Ordering key of an instance: corpus position first, then the sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InstanceKey {
    ring_ordinal: usize,
    module_ordinal: usize,
    ring: String,
    module: String,
    mulset: Option<ElementSet>,
    focus: Vec<ElementSet>,
    ring_subset: Option<ElementSet>,
}

impl fmt::Display for InstanceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.ring, self.module)?;
        if let Some(s) = &self.mulset {
            write!(f, " | S={s}")?;
        }
        for (label, n) in ["N", "L"].iter().zip(&self.focus) {
            write!(f, " | {label}={n}")?;
        }
        if let Some(a) = &self.ring_subset {
            write!(f, " | A={a}")?;
        }
        Ok(())
    }
}

/// Instance as it appears in reports: the key plus a loadable description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub key: String,
    pub instance: InstanceFile,
}

/// Module-level properties cached per module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ModuleProperty {
    Hollow,
    Lifting,
    Coatomic,
    Reduced,
    Local,
}

impl ModuleProperty {
    const ALL: [ModuleProperty; 5] = [
        ModuleProperty::Hollow,
        ModuleProperty::Lifting,
        ModuleProperty::Coatomic,
        ModuleProperty::Reduced,
        ModuleProperty::Local,
    ];

    fn evaluate(self, m: &FiniteModule) -> Result<bool> {
        let verdict = match self {
            ModuleProperty::Hollow => properties::is_hollow(m)?,
            ModuleProperty::Lifting => properties::is_lifting(m)?,
            ModuleProperty::Coatomic => properties::is_coatomic(m)?,
            ModuleProperty::Reduced => properties::is_reduced(m)?,
            ModuleProperty::Local => properties::is_local_module(m)?,
        };
        Ok(verdict.holds)
    }
}

#[derive(Default)]
struct VerdictCache {
    cells: [OnceLock<Result<bool>>; 5],
}

impl VerdictCache {
    fn get(&self, m: &FiniteModule, property: ModuleProperty) -> Result<bool> {
        let slot = ModuleProperty::ALL.iter().position(|p| *p == property).expect("listed");
        self.cells[slot].get_or_init(|| property.evaluate(m)).clone()
    }
}

/// A ring and module together with their descriptions and caches.
pub(crate) struct Source {
    ring_ordinal: usize,
    module_ordinal: usize,
    ring_spec: RingSpec,
    module_spec: ModuleSpec,
    ring: Arc<FiniteRing>,
    module: Arc<FiniteModule>,
    verdicts: VerdictCache,
}

impl Source {
    pub(crate) fn new(
        ring_ordinal: usize,
        module_ordinal: usize,
        ring_spec: RingSpec,
        module_spec: ModuleSpec,
        ring: Arc<FiniteRing>,
        module: Arc<FiniteModule>,
    ) -> Self {
        Self { ring_ordinal, module_ordinal, ring_spec, module_spec, ring, module, verdicts: VerdictCache::default() }
    }
}

/// A multiplicative set over a source, with the localization built on demand.
pub(crate) struct Context {
    mulset: Option<MultiplicativeSet>,
    local: OnceLock<Result<LocalizedModule>>,
    local_verdicts: VerdictCache,
    all_proper_disjoint: OnceLock<Result<bool>>,
    all_proper_stable: OnceLock<Result<bool>>,
}

impl Context {
    pub(crate) fn new(mulset: Option<MultiplicativeSet>) -> Self {
        Self {
            mulset,
            local: OnceLock::new(),
            local_verdicts: VerdictCache::default(),
            all_proper_disjoint: OnceLock::new(),
            all_proper_stable: OnceLock::new(),
        }
    }
}

/// A ring, a module over it, an optional multiplicative set, and the focus
/// objects a check quantifies over.
#[derive(Clone)]
pub struct Instance {
    source: Arc<Source>,
    context: Arc<Context>,
    mulset: Option<MultiplicativeSet>,
    focus: Vec<Submodule>,
    ring_subset: Option<ElementSet>,
}

impl fmt::Debug for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Instance({})", self.key())
    }
}

impl Instance {
    pub(crate) fn from_parts(
        source: Arc<Source>,
        context: Arc<Context>,
        focus: Vec<Submodule>,
        ring_subset: Option<ElementSet>,
    ) -> Self {
        let mulset = context.mulset.clone();
        Self { source, context, mulset, focus, ring_subset }
    }

    /// Builds a standalone instance, checking that every component belongs
    /// to the given ring and module.
    pub fn new(
        ring_spec: RingSpec,
        module_spec: ModuleSpec,
        ring: Arc<FiniteRing>,
        module: Arc<FiniteModule>,
        mulset: Option<MultiplicativeSet>,
        focus: Vec<Submodule>,
        ring_subset: Option<ElementSet>,
    ) -> Result<Self> {
        if **module.ring() != *ring {
            return Err(AlgebraError::InvalidParameter("module is not over the instance ring".into()));
        }
        if let Some(s) = &mulset {
            if !ring.is_multiplicative_set(s.elements()) {
                return Err(AlgebraError::InvalidParameter(format!("{} is not multiplicative", s.elements())));
            }
        }
        if focus.iter().any(|n| n.module_id() != module.id()) {
            return Err(AlgebraError::MixedModules);
        }
        if ring_subset.as_ref().is_some_and(|a| a.universe() != ring.size()) {
            return Err(AlgebraError::InvalidParameter("ring subset is not in the instance ring".into()));
        }
        let source = Arc::new(Source::new(0, 0, ring_spec, module_spec, ring, module));
        Ok(Self::from_parts(source, Arc::new(Context::new(mulset)), focus, ring_subset))
    }

    pub fn from_loaded(loaded: &LoadedInstance) -> Result<Self> {
        Self::new(
            loaded.spec.ring.clone(),
            loaded.spec.module.clone(),
            loaded.ring.clone(),
            loaded.module.clone(),
            loaded.mulset.clone(),
            loaded.submodules.clone(),
            loaded.ring_subset.clone(),
        )
    }

    /// Same ring, module and multiplicative set with different focus objects.
    pub fn refocus(&self, focus: Vec<Submodule>, ring_subset: Option<ElementSet>) -> Self {
        Self::from_parts(self.source.clone(), self.context.clone(), focus, ring_subset)
    }

    /// Splits into the instances a check of `shape` expects: listed focus
    /// submodules are used when present, otherwise every submodule.
    pub fn expand(&self, shape: Shape) -> Result<Vec<Instance>> {
        let pool: Vec<Submodule> =
            if self.focus.is_empty() { self.module().submodules()?.to_vec() } else { self.focus.clone() };
        Ok(match shape {
            Shape::Module => vec![self.refocus(vec![], None)],
            Shape::Submodule => pool.into_iter().map(|n| self.refocus(vec![n], None)).collect(),
            Shape::SubmodulePair => {
                let mut out = Vec::new();
                for (i, n) in pool.iter().enumerate() {
                    for l in &pool[i..] {
                        out.push(self.refocus(vec![n.clone(), l.clone()], None));
                    }
                }
                out
            }
            Shape::RingSubset => match &self.ring_subset {
                Some(a) => vec![self.refocus(vec![], Some(a.clone()))],
                None => Vec::new(),
            },
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.source.ring
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.source.module
    }

    pub fn ring_spec(&self) -> &RingSpec {
        &self.source.ring_spec
    }

    pub fn module_spec(&self) -> &ModuleSpec {
        &self.source.module_spec
    }

    pub fn mulset(&self) -> Option<&MultiplicativeSet> {
        self.mulset.as_ref()
    }

    pub fn focus(&self) -> &[Submodule] {
        &self.focus
    }

    pub fn ring_subset(&self) -> Option<&ElementSet> {
        self.ring_subset.as_ref()
    }

    pub fn key(&self) -> InstanceKey {
        InstanceKey {
            ring_ordinal: self.source.ring_ordinal,
            module_ordinal: self.source.module_ordinal,
            ring: self.ring().name().to_string(),
            module: self.module().name().to_string(),
            mulset: self.mulset.as_ref().map(|s| s.elements().clone()),
            focus: self.focus.iter().map(|n| n.elements().clone()).collect(),
            ring_subset: self.ring_subset.clone(),
        }
    }

    pub fn record(&self) -> InstanceRecord {
        InstanceRecord {
            key: self.key().to_string(),
            instance: InstanceFile {
                mulset: self.mulset.as_ref().map(|s| s.iter().collect()),
                ideal: None,
                submodules: self.focus.iter().map(Submodule::to_vec).collect(),
                ring_subset: self.ring_subset.as_ref().map(ElementSet::to_vec),
                ring: self.source.ring_spec.clone(),
                module: self.source.module_spec.clone(),
            },
        }
    }

    pub(crate) fn require_mulset(&self) -> Result<&MultiplicativeSet> {
        self.mulset.as_ref().ok_or_else(|| AlgebraError::SignatureMismatch("a multiplicative set is required".into()))
    }

    pub(crate) fn n(&self) -> Result<&Submodule> {
        self.focus.first().ok_or_else(|| AlgebraError::SignatureMismatch("a focus submodule is required".into()))
    }

    pub(crate) fn l(&self) -> Result<&Submodule> {
        self.focus.get(1).ok_or_else(|| AlgebraError::SignatureMismatch("a second focus submodule is required".into()))
    }

    /// `M_S`, built once per ring, module and multiplicative set.
    pub fn local(&self) -> Result<&LocalizedModule> {
        let s = self.require_mulset()?;
        self.context.local.get_or_init(|| localize_module(self.module(), s)).as_ref().map_err(Clone::clone)
    }

    pub(crate) fn base_property(&self, property: ModuleProperty) -> Result<bool> {
        self.source.verdicts.get(self.module(), property)
    }

    pub(crate) fn local_property(&self, property: ModuleProperty) -> Result<bool> {
        let local = self.local()?;
        self.context.local_verdicts.get(local.module(), property)
    }

    /// `S(K) ∩ S = ∅` for every proper submodule `K`.
    pub(crate) fn all_proper_disjoint(&self) -> Result<bool> {
        let s = self.require_mulset()?;
        self.context
            .all_proper_disjoint
            .get_or_init(|| {
                let m = self.module();
                for k in m.proper_submodules()? {
                    if !m.not_prime_set(k)?.elements().is_disjoint(s.elements()) {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
            .clone()
    }

    /// `K : s = K` for every proper submodule `K` and every `s ∈ S`.
    pub(crate) fn all_proper_stable(&self) -> Result<bool> {
        let s = self.require_mulset()?;
        self.context
            .all_proper_stable
            .get_or_init(|| {
                let m = self.module();
                for k in m.proper_submodules()? {
                    for t in s.iter() {
                        if m.colon_element(k, t)? != *k {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            })
            .clone()
    }
}
