//! Instance file format.
//!
//! An instance names a ring, a module over it, and optionally a
//! multiplicative set, an ideal, focus submodules and a ring subset.
//! Files are TOML; JSON with the same shape is also accepted, which lets a
//! violation record copied out of a report be loaded back directly.
//!
//! ```toml
//! mulset = [1, 5]
//! submodules = [[0, 3]]
//!
//! [ring]
//! kind = "zn"
//! n = 6
//!
//! [module]
//! kind = "regular"
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::module::{quotient_module, regular_module, FiniteModule, Submodule};
use crate::ring::{make_zn, product_ring, quotient_ring, FiniteRing, IdealSet, MultiplicativeSet};
use crate::set::ElementSet;

/// How to build a ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum RingSpec {
    /// Integers modulo `n`.
    Zn { n: usize },
    /// Componentwise product, associated to the left.
    Product { factors: Vec<RingSpec> },
    /// `base / ideal`.
    Quotient { base: Box<RingSpec>, ideal: Vec<usize> },
    /// Explicit Cayley tables.
    Tables {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    },
}

impl RingSpec {
    pub fn zn(n: usize) -> Self {
        RingSpec::Zn { n }
    }

    pub fn product(factors: impl IntoIterator<Item = RingSpec>) -> Self {
        RingSpec::Product { factors: factors.into_iter().collect() }
    }

    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Zn { n } => make_zn(*n),
            RingSpec::Product { factors } => {
                let mut iter = factors.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| AlgebraError::Parse("a product needs at least one factor".into()))?
                    .build()?;
                iter.try_fold(first, |acc, f| product_ring(&acc, &f.build()?))
            }
            RingSpec::Quotient { base, ideal } => {
                let base = base.build()?;
                let ideal = base.subset(ideal.iter().copied())?;
                Ok(quotient_ring(&base, &ideal)?.0)
            }
            RingSpec::Tables { name, add, mul, zero, one } => FiniteRing::from_tables(
                name.clone().unwrap_or_else(|| format!("R{}", add.len())),
                add.clone(),
                mul.clone(),
                *zero,
                *one,
            ),
        }
    }
}

/// How to build a module over the instance ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ModuleSpec {
    /// The ring acting on itself.
    #[default]
    Regular,
    /// `base / submodule`.
    Quotient { base: Box<ModuleSpec>, submodule: Vec<usize> },
    /// Explicit addition and action tables; `action[r][m]` is `r·m`.
    Tables {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        zero: usize,
    },
}

impl ModuleSpec {
    pub fn quotient_of_regular(submodule: Vec<usize>) -> Self {
        ModuleSpec::Quotient { base: Box::new(ModuleSpec::Regular), submodule }
    }

    pub fn build(&self, ring: &Arc<FiniteRing>) -> Result<FiniteModule> {
        match self {
            ModuleSpec::Regular => Ok(regular_module(ring)),
            ModuleSpec::Quotient { base, submodule } => {
                let base = base.build(ring)?;
                let n = base.submodule_from(submodule.iter().copied())?;
                quotient_module(&base, &n)
            }
            ModuleSpec::Tables { name, add, action, zero } => FiniteModule::from_tables(
                name.clone().unwrap_or_else(|| format!("M{}", add.len())),
                ring.clone(),
                add.clone(),
                action.clone(),
                *zero,
            ),
        }
    }
}

/// Contents of an instance file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mulset: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub submodules: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring_subset: Option<Vec<usize>>,
    pub ring: RingSpec,
    #[serde(default)]
    pub module: ModuleSpec,
}

/// An instance file with every component built and validated.
#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub spec: InstanceFile,
    pub ring: Arc<FiniteRing>,
    pub module: Arc<FiniteModule>,
    pub mulset: Option<MultiplicativeSet>,
    pub ideal: Option<IdealSet>,
    pub submodules: Vec<Submodule>,
    pub ring_subset: Option<ElementSet>,
}

impl InstanceFile {
    /// Parses TOML, or JSON when the text starts with `{`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))
        } else {
            toml::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("instance files always serialize")
    }

    pub fn load(&self) -> Result<LoadedInstance> {
        let ring = Arc::new(self.ring.build()?);
        let module = Arc::new(self.module.build(&ring)?);
        let mulset =
            self.mulset.as_ref().map(|s| MultiplicativeSet::new(&ring, ring.subset(s.iter().copied())?)).transpose()?;
        let ideal = self.ideal.as_ref().map(|i| IdealSet::new(&ring, ring.subset(i.iter().copied())?)).transpose()?;
        let submodules =
            self.submodules.iter().map(|n| module.submodule_from(n.iter().copied())).collect::<Result<Vec<_>>>()?;
        let ring_subset = self.ring_subset.as_ref().map(|a| ring.subset(a.iter().copied())).transpose()?;
        Ok(LoadedInstance { spec: self.clone(), ring, module, mulset, ideal, submodules, ring_subset })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_toml_with_defaults() {
        let file = InstanceFile::parse(
            r#"
            mulset = [1, 5]
            submodules = [[0, 3], [0, 2, 4]]

            [ring]
            kind = "zn"
            n = 6
            "#,
        )
        .unwrap();
        assert_eq!(file.module, ModuleSpec::Regular);
        let loaded = file.load().unwrap();
        assert_eq!(loaded.ring.size(), 6);
        assert_eq!(loaded.module.size(), 6);
        assert_eq!(loaded.mulset.unwrap().iter().collect::<Vec<_>>(), vec![1, 5]);
        assert_eq!(loaded.submodules.len(), 2);
    }

    #[test]
    fn nested_kinds() {
        let file = InstanceFile::parse(
            r#"
            [ring]
            kind = "product"
            factors = [{ kind = "zn", n = 2 }, { kind = "zn", n = 4 }]

            [module]
            kind = "quotient"
            submodule = [0, 2]
            base = { kind = "regular" }
            "#,
        )
        .unwrap();
        let loaded = file.load().unwrap();
        assert_eq!(loaded.ring.size(), 8);
        assert_eq!(loaded.module.size(), 4);

        let quotient = InstanceFile {
            mulset: None,
            ideal: Some(vec![0]),
            submodules: vec![],
            ring_subset: None,
            ring: RingSpec::Quotient { base: Box::new(RingSpec::zn(12)), ideal: vec![0, 4, 8] },
            module: ModuleSpec::Regular,
        };
        assert_eq!(quotient.load().unwrap().ring.size(), 4);
    }

    #[test]
    fn toml_and_json_round_trip() {
        let file = InstanceFile {
            mulset: Some(vec![3]),
            ideal: None,
            submodules: vec![vec![0, 3]],
            ring_subset: Some(vec![2]),
            ring: RingSpec::product([RingSpec::zn(2), RingSpec::zn(3)]),
            module: ModuleSpec::quotient_of_regular(vec![0, 3]),
        };
        assert_eq!(InstanceFile::parse(&file.to_toml()).unwrap(), file);
        assert_eq!(InstanceFile::parse(&serde_json::to_string(&file).unwrap()).unwrap(), file);
    }

    #[test]
    fn tables_kind() {
        let file = InstanceFile::parse(
            r#"
            [ring]
            kind = "tables"
            add = [[0, 1], [1, 0]]
            mul = [[0, 0], [0, 1]]
            zero = 0
            one = 1
            "#,
        )
        .unwrap();
        assert_eq!(file.load().unwrap().ring.name(), "R2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(InstanceFile::parse("[ring]\nkind = \"zz\""), Err(AlgebraError::Parse(_))));
        assert!(matches!(InstanceFile::parse("[ring]\nkind = \"zn\"\nn = 6\nextra = 1"), Err(AlgebraError::Parse(_))));
        let bad_mulset = InstanceFile::parse("mulset = [2, 3]\n[ring]\nkind = \"zn\"\nn = 6").unwrap();
        assert!(matches!(bad_mulset.load(), Err(AlgebraError::InvalidParameter(_))));
        let bad_sub = InstanceFile::parse("submodules = [[0, 2]]\n[ring]\nkind = \"zn\"\nn = 6").unwrap();
        assert!(matches!(bad_sub.load(), Err(AlgebraError::NotASubmodule(_))));
    }
}
