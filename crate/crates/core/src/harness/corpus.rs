use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Context, Instance, PropositionCheck, Shape, Source};
use crate::error::{AlgebraError, Result};
use crate::instance::{ModuleSpec, RingSpec};
use crate::ring::{MultiplicativeSet, DEFAULT_SIZE_CAP};
use crate::set::ElementSet;

/// Default module-size cap for sweeps.
pub const MODULE_SIZE_CAP: usize = 36;
/// Cap for checks that scan pairs of submodules or decompositions.
pub const LATTICE_SCAN_CAP: usize = 16;

/// Which modules to build over each ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ModuleSelection {
    /// The regular module only.
    Regular,
    /// The regular module and its quotient by every nonzero submodule.
    #[default]
    All,
}

fn default_name() -> String {
    "custom".into()
}

fn default_module_cap() -> usize {
    MODULE_SIZE_CAP
}

fn default_scan_cap() -> usize {
    LATTICE_SCAN_CAP
}

/// Corpus description; also the format of corpus files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    #[serde(default = "default_name")]
    pub name: String,
    pub rings: Vec<RingSpec>,
    #[serde(default)]
    pub modules: ModuleSelection,
    /// Restricts every ring to these multiplicative sets; all of them when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mulsets: Option<Vec<Vec<usize>>>,
    #[serde(default = "default_module_cap")]
    pub max_module_size: usize,
    #[serde(default = "default_scan_cap")]
    pub max_lattice_scan_size: usize,
}

impl CorpusConfig {
    /// Z2 through Z12 and the four small products, every module.
    pub fn standard() -> Self {
        let mut rings: Vec<RingSpec> = (2..=12).map(RingSpec::zn).collect();
        rings.extend([
            RingSpec::product([RingSpec::zn(2), RingSpec::zn(2)]),
            RingSpec::product([RingSpec::zn(2), RingSpec::zn(4)]),
            RingSpec::product([RingSpec::zn(3), RingSpec::zn(3)]),
            RingSpec::product([RingSpec::zn(2), RingSpec::zn(2), RingSpec::zn(2)]),
        ]);
        Self::over("standard", rings)
    }

    pub fn z6() -> Self {
        Self::over("z6", vec![RingSpec::zn(6)])
    }

    pub fn over(name: &str, rings: Vec<RingSpec>) -> Self {
        Self {
            name: name.into(),
            rings,
            modules: ModuleSelection::All,
            mulsets: None,
            max_module_size: MODULE_SIZE_CAP,
            max_lattice_scan_size: LATTICE_SCAN_CAP,
        }
    }

    /// `standard`, `z6`, or `None` for an unknown name.
    pub fn named(name: &str) -> Option<Self> {
        match name {
            "standard" => Some(Self::standard()),
            "z6" => Some(Self::z6()),
            _ => None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))
    }

    fn check_caps(&self) -> Result<()> {
        for cap in [self.max_module_size, self.max_lattice_scan_size] {
            if cap == 0 {
                return Err(AlgebraError::InvalidParameter("size caps must be positive".into()));
            }
            if cap > DEFAULT_SIZE_CAP {
                return Err(AlgebraError::CapExceeded { size: cap, cap: DEFAULT_SIZE_CAP });
            }
        }
        Ok(())
    }
}

struct Entry {
    source: Arc<Source>,
    contexts: Vec<Arc<Context>>,
    plain: Arc<Context>,
}

/// A built corpus. Localizations and module-level verdicts are computed on
/// first use and shared by every check that sweeps it.
pub struct Corpus {
    config: CorpusConfig,
    entries: Vec<Entry>,
}

/// Builds every ring, module and multiplicative set named by `config`.
pub fn standard_corpus(config: &CorpusConfig) -> Result<Corpus> {
    Corpus::build(config.clone())
}

impl Corpus {
    pub fn build(config: CorpusConfig) -> Result<Self> {
        config.check_caps()?;
        let mut entries = Vec::new();
        for (ring_ordinal, ring_spec) in config.rings.iter().enumerate() {
            let ring = Arc::new(ring_spec.build()?);
            let mulsets: Vec<MultiplicativeSet> = match &config.mulsets {
                None => ring.multiplicative_sets()?,
                Some(list) => list
                    .iter()
                    .map(|s| MultiplicativeSet::new(&ring, ring.subset(s.iter().copied())?))
                    .collect::<Result<_>>()?,
            };
            let regular = Arc::new(ModuleSpec::Regular.build(&ring)?);
            let mut modules = vec![(ModuleSpec::Regular, regular.clone())];
            if config.modules == ModuleSelection::All {
                for n in regular.submodules()? {
                    if *n == regular.zero_submodule() {
                        continue;
                    }
                    let spec = ModuleSpec::quotient_of_regular(n.to_vec());
                    let module = Arc::new(spec.build(&ring)?);
                    modules.push((spec, module));
                }
            }
            for (module_ordinal, (module_spec, module)) in modules.into_iter().enumerate() {
                let source = Arc::new(Source::new(
                    ring_ordinal,
                    module_ordinal,
                    ring_spec.clone(),
                    module_spec,
                    ring.clone(),
                    module,
                ));
                let contexts = mulsets.iter().map(|s| Arc::new(Context::new(Some(s.clone())))).collect();
                entries.push(Entry { source, contexts, plain: Arc::new(Context::new(None)) });
            }
        }
        Ok(Self { config, entries })
    }

    pub fn named(name: &str) -> Result<Self> {
        let config = CorpusConfig::named(name)
            .ok_or_else(|| AlgebraError::InvalidParameter(format!("unknown corpus `{name}`")))?;
        Self::build(config)
    }

    pub fn config(&self) -> &CorpusConfig {
        &self.config
    }

    pub fn name(&self) -> &str {
        &self.config.name
    }

    /// Size cap applied to `prop`.
    pub fn cap_for(&self, prop: &PropositionCheck) -> usize {
        if prop.lattice_heavy {
            self.config.max_module_size.min(self.config.max_lattice_scan_size)
        } else {
            self.config.max_module_size
        }
    }

    /// Every (ring, module, multiplicative set) combination within the cap,
    /// with no focus objects.
    pub fn contexts(&self, localized: bool, cap: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for entry in &self.entries {
            if entry.source.module.size() > cap {
                continue;
            }
            if localized {
                for context in &entry.contexts {
                    out.push(Instance::from_parts(entry.source.clone(), context.clone(), vec![], None));
                }
            } else {
                out.push(Instance::from_parts(entry.source.clone(), entry.plain.clone(), vec![], None));
            }
        }
        out
    }

    /// The instances `prop` is swept over, in corpus order.
    pub fn instances(&self, prop: &PropositionCheck) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for base in self.contexts(prop.localized, self.cap_for(prop)) {
            match prop.shape {
                Shape::Module => out.push(base),
                Shape::Submodule | Shape::SubmodulePair => out.extend(base.expand(prop.shape)?),
                Shape::RingSubset => {
                    // Ring subsets do not depend on the module; take them once per ring.
                    if *base.module_spec() != ModuleSpec::Regular {
                        continue;
                    }
                    let n = base.ring().size();
                    for mask in 1u64..(1u64 << n) {
                        let a = ElementSet::from_indices(n, (0..n).filter(|x| mask >> x & 1 == 1));
                        out.push(base.refocus(vec![], Some(a)));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every module in the corpus with its full submodule lattice.
    pub fn modules(&self) -> impl Iterator<Item = Instance> + '_ {
        self.entries.iter().map(|e| Instance::from_parts(e.source.clone(), e.plain.clone(), vec![], None))
    }

    pub fn len_modules(&self) -> usize {
        self.entries.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::lookup;

    /// Oracle: scan every nonempty subset of Z_n for closure under products.
    fn zn_mulset_count(n: usize) -> usize {
        (1u32..1 << n)
            .filter(|mask| {
                (0..n)
                    .filter(|x| mask >> x & 1 == 1)
                    .all(|x| (0..n).filter(|y| mask >> y & 1 == 1).all(|y| mask >> (x * y % n) & 1 == 1))
            })
            .count()
    }

    #[test]
    fn z2_mulsets() {
        let config =
            CorpusConfig { modules: ModuleSelection::Regular, ..CorpusConfig::over("z2", vec![RingSpec::zn(2)]) };
        let corpus = Corpus::build(config).unwrap();
        let sets: Vec<Vec<usize>> =
            corpus.contexts(true, MODULE_SIZE_CAP).iter().map(|i| i.mulset().unwrap().iter().collect()).collect();
        assert_eq!(sets, vec![vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn z6_regular_instances() {
        let config = CorpusConfig { modules: ModuleSelection::Regular, ..CorpusConfig::z6() };
        let corpus = Corpus::build(config).unwrap();
        let mulsets = zn_mulset_count(6);
        let instances = corpus.instances(lookup("3.17").unwrap()).unwrap();
        assert_eq!(instances.len(), 4 * mulsets);
        let unlocalized = corpus.instances(lookup("3.1").unwrap()).unwrap();
        assert_eq!(unlocalized.len(), 4);
    }

    #[test]
    fn empty_ring_list() {
        let corpus = Corpus::build(CorpusConfig::over("none", vec![])).unwrap();
        assert!(corpus.contexts(true, MODULE_SIZE_CAP).is_empty());
        assert!(corpus.instances(lookup("3.3").unwrap()).unwrap().is_empty());
    }

    #[test]
    fn standard_corpus_shape() {
        let corpus = standard_corpus(&CorpusConfig::standard()).unwrap();
        // Z_n has one module per divisor of n; the products have 4, 6, 4 and 8 ideals.
        let divisors = |n: usize| (1..=n).filter(|d| n % d == 0).count();
        let expected: usize = (2..=12).map(divisors).sum::<usize>() + 4 + 6 + 4 + 8;
        assert_eq!(corpus.len_modules(), expected);
        for n in 2..=12 {
            let count = corpus
                .contexts(true, MODULE_SIZE_CAP)
                .iter()
                .filter(|i| i.ring().name() == format!("Z{n}") && i.module().name() == format!("Z{n}"))
                .count();
            assert_eq!(count, zn_mulset_count(n), "Z{n}");
        }
    }

    #[test]
    fn caps() {
        let mut config = CorpusConfig::z6();
        config.max_module_size = 0;
        assert!(matches!(Corpus::build(config.clone()), Err(AlgebraError::InvalidParameter(_))));
        config.max_module_size = 100;
        assert!(matches!(Corpus::build(config.clone()), Err(AlgebraError::CapExceeded { .. })));
        config.max_module_size = 3;
        let corpus = Corpus::build(config).unwrap();
        assert!(corpus.contexts(false, corpus.config().max_module_size).iter().all(|i| i.module().size() <= 3));
    }

    #[test]
    fn corpus_file() {
        let config = CorpusConfig::parse(
            r#"
            name = "tiny"
            rings = [{ kind = "zn", n = 6 }]
            modules = "regular"
            mulsets = [[1, 5], [2, 4]]
            "#,
        )
        .unwrap();
        let corpus = Corpus::build(config).unwrap();
        assert_eq!(corpus.contexts(true, MODULE_SIZE_CAP).len(), 2);
        let bad = CorpusConfig::parse("rings = [{ kind = \"zn\", n = 6 }]\nmulsets = [[2, 3]]").unwrap();
        assert!(Corpus::build(bad).is_err());
    }
}
