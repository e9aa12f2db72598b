//! Deciders for submodule and module properties, each evaluated directly
//! from its definition over the enumerated lattice.
//!
//! Failing verdicts carry the lexicographically first violating tuple under
//! the canonical element and lattice orderings.

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::module::{FiniteModule, Submodule};
use crate::ring::IdealViolation;
use crate::set::ElementSet;

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The submodule is the whole module.
    NotProper,
    ZeroModule,
    /// `r·m ∈ N` with `m ∉ N` and `r ∉ (N:M)`.
    ScalarElement {
        r: usize,
        m: usize,
    },
    /// `I·L ⊆ N` with `L ⊄ N` and `I ⊄ (N:M)`.
    IdealSubmodule {
        ideal: ElementSet,
        submodule: ElementSet,
    },
    /// `y·L ⊆ N` with `L ⊄ N` and `y ∉ (N:M)`.
    ScalarSubmodule {
        y: usize,
        submodule: ElementSet,
    },
    /// `S(N)` and the reason it is not an ideal.
    NotIdeal {
        set: ElementSet,
        violation: IdealViolation,
    },
    /// `r·x ∉ N` and `r·y ∈ N` for `x, y ∉ N`.
    MixedScalar {
        r: usize,
        x: usize,
        y: usize,
    },
    /// A proper `L` with `N + L = M`.
    Complement {
        submodule: ElementSet,
    },
    /// A nonzero `L` with `N ∩ L = 0`.
    DisjointSubmodule {
        submodule: ElementSet,
    },
    /// `N ⊊ L ⊊ M`.
    Intermediate {
        submodule: ElementSet,
    },
    SumNotFull {
        sum: ElementSet,
    },
    /// `N ∩ L` is not small in `N`; `complement` is a proper submodule of `N` with `(N ∩ L) + complement = N`.
    IntersectionNotSmall {
        intersection: ElementSet,
        complement: ElementSet,
    },
    /// The supplement partner found for a supplemented submodule.
    Partner {
        submodule: ElementSet,
    },
    NoPartner {
        candidates: usize,
    },
    /// A proper submodule that is not small, with a proper complement.
    NotSmall {
        submodule: ElementSet,
        complement: ElementSet,
    },
    NoLiftingDecomposition {
        submodule: ElementSet,
    },
    NotInMaximal {
        submodule: ElementSet,
    },
    NonzeroPSum {
        p_sum: ElementSet,
    },
    MaximalSubmodules {
        maximal: Vec<ElementSet>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub property: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PropertyVerdict {
    fn yes(property: &'static str) -> Self {
        Self { property, holds: true, witness: None }
    }

    fn no(property: &'static str, witness: Witness) -> Self {
        Self { property, holds: false, witness: Some(witness) }
    }

    fn from_witness(property: &'static str, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::yes(property),
            Some(w) => Self::no(property, w),
        }
    }
}

fn require_proper(m: &FiniteModule, n: &Submodule) -> Result<()> {
    if n.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    if m.is_proper(n) {
        Ok(())
    } else {
        Err(AlgebraError::NotProper)
    }
}

/// First submodule `L ⊊ ambient` with `x + L = ambient`, if any.
///
/// `x ≪ ambient` exactly when this is `None`; in particular `0 ≪ 0`.
pub fn small_violation(m: &FiniteModule, x: &Submodule, ambient: &Submodule) -> Result<Option<Submodule>> {
    for l in m.submodules_within(ambient)? {
        if l != ambient && m.sum(x, l) == *ambient {
            return Ok(Some(l.clone()));
        }
    }
    Ok(None)
}

/// `x ≪ ambient`, where `x ⊆ ambient`.
pub fn is_small_in(m: &FiniteModule, x: &Submodule, ambient: &Submodule) -> Result<bool> {
    Ok(small_violation(m, x, ambient)?.is_none())
}

/// Proper, and `r·m ∈ N` forces `m ∈ N` or `r ∈ (N:M)`.
pub fn is_prime_submodule(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    const NAME: &str = "prime";
    if n.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    if !m.is_proper(n) {
        return Ok(PropertyVerdict::no(NAME, Witness::NotProper));
    }
    let colon = m.annihilator_colon(n)?;
    for r in m.ring().elements() {
        if colon.elements().contains(r) {
            continue;
        }
        for x in m.elements() {
            if !n.contains(x) && n.contains(m.act(r, x)) {
                return Ok(PropertyVerdict::no(NAME, Witness::ScalarElement { r, m: x }));
            }
        }
    }
    Ok(PropertyVerdict::yes(NAME))
}

/// Prime via ideals: `I·L ⊆ N` forces `L ⊆ N` or `I ⊆ (N:M)`.
pub fn is_prime_via_ideal_criterion(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    const NAME: &str = "prime_ideal_criterion";
    if n.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    if !m.is_proper(n) {
        return Ok(PropertyVerdict::no(NAME, Witness::NotProper));
    }
    let colon = m.annihilator_colon(n)?;
    let lattice = m.submodules()?;
    for ideal in m.ring().ideals() {
        if ideal.elements().is_subset(colon.elements()) {
            continue;
        }
        for l in lattice {
            if l.is_subset(n) {
                continue;
            }
            let product_inside = ideal.elements().iter().all(|i| l.elements().iter().all(|x| n.contains(m.act(i, x))));
            if product_inside {
                return Ok(PropertyVerdict::no(
                    NAME,
                    Witness::IdealSubmodule { ideal: ideal.elements().clone(), submodule: l.elements().clone() },
                ));
            }
        }
    }
    Ok(PropertyVerdict::yes(NAME))
}

/// Prime via single scalars: `y·L ⊆ N` forces `L ⊆ N` or `y ∈ (N:M)`.
pub fn is_prime_via_element_criterion(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    const NAME: &str = "prime_element_criterion";
    if n.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    if !m.is_proper(n) {
        return Ok(PropertyVerdict::no(NAME, Witness::NotProper));
    }
    let colon = m.annihilator_colon(n)?;
    let lattice = m.submodules()?;
    for y in m.ring().elements() {
        if colon.elements().contains(y) {
            continue;
        }
        for l in lattice {
            if !l.is_subset(n) && l.elements().iter().all(|x| n.contains(m.act(y, x))) {
                return Ok(PropertyVerdict::no(NAME, Witness::ScalarSubmodule { y, submodule: l.elements().clone() }));
            }
        }
    }
    Ok(PropertyVerdict::yes(NAME))
}

/// `S(N)` is an ideal of the ring.
pub fn is_primal(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    let s = m.not_prime_set(n)?.into_elements();
    let verdict = match m.ring().ideal_violation(&s) {
        None => PropertyVerdict::yes("primal"),
        Some(violation) => PropertyVerdict::no("primal", Witness::NotIdeal { set: s, violation }),
    };
    Ok(verdict)
}

/// Each scalar sends either all of `M ∖ N` into `N` or none of it.
pub fn is_complementary(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    require_proper(m, n)?;
    let outside = n.elements().complement();
    for r in m.ring().elements() {
        let escaping = outside.iter().find(|&x| !n.contains(m.act(r, x)));
        let captured = outside.iter().find(|&y| n.contains(m.act(r, y)));
        if let (Some(x), Some(y)) = (escaping, captured) {
            return Ok(PropertyVerdict::no("complementary", Witness::MixedScalar { r, x, y }));
        }
    }
    Ok(PropertyVerdict::yes("complementary"))
}

/// `N ≪ M` for proper `N`.
pub fn is_small(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    require_proper(m, n)?;
    let witness =
        small_violation(m, n, &m.full_submodule())?.map(|l| Witness::Complement { submodule: l.elements().clone() });
    Ok(PropertyVerdict::from_witness("small", witness))
}

/// `N ∩ L = 0` forces `L = 0`.
pub fn is_essential(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    if n.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    let zero = m.zero_submodule();
    let witness = m
        .submodules()?
        .iter()
        .find(|l| **l != zero && m.intersection(n, l) == zero)
        .map(|l| Witness::DisjointSubmodule { submodule: l.elements().clone() });
    Ok(PropertyVerdict::from_witness("essential", witness))
}

pub fn is_maximal(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    const NAME: &str = "maximal";
    if n.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    if !m.is_proper(n) {
        return Ok(PropertyVerdict::no(NAME, Witness::NotProper));
    }
    let witness = m
        .proper_submodules()?
        .find(|l| *l != n && n.is_subset(l))
        .map(|l| Witness::Intermediate { submodule: l.elements().clone() });
    Ok(PropertyVerdict::from_witness(NAME, witness))
}

/// `N + L = M` and `N ∩ L ≪ N`, smallness taken inside `N`.
pub fn is_supplement_of(m: &FiniteModule, n: &Submodule, l: &Submodule) -> Result<PropertyVerdict> {
    const NAME: &str = "supplement";
    if n.module_id() != m.id() || l.module_id() != m.id() {
        return Err(AlgebraError::MixedModules);
    }
    let sum = m.sum(n, l);
    if sum != m.full_submodule() {
        return Ok(PropertyVerdict::no(NAME, Witness::SumNotFull { sum: sum.elements().clone() }));
    }
    let meet = m.intersection(n, l);
    let witness = small_violation(m, &meet, n)?.map(|k| Witness::IntersectionNotSmall {
        intersection: meet.elements().clone(),
        complement: k.elements().clone(),
    });
    Ok(PropertyVerdict::from_witness(NAME, witness))
}

/// `N` is a supplement of some submodule (any `L`, including `0` and `M`).
pub fn is_supplemented_submodule(m: &FiniteModule, n: &Submodule) -> Result<PropertyVerdict> {
    const NAME: &str = "supplemented";
    let lattice = m.submodules()?;
    for l in lattice {
        if is_supplement_of(m, n, l)?.holds {
            return Ok(PropertyVerdict {
                property: NAME,
                holds: true,
                witness: Some(Witness::Partner { submodule: l.elements().clone() }),
            });
        }
    }
    Ok(PropertyVerdict::no(NAME, Witness::NoPartner { candidates: lattice.len() }))
}

/// Nonzero, and every proper submodule is small.
pub fn is_hollow(m: &FiniteModule) -> Result<PropertyVerdict> {
    if m.is_zero_module() {
        return Ok(PropertyVerdict::no("hollow", Witness::ZeroModule));
    }
    let full = m.full_submodule();
    for n in m.proper_submodules()? {
        if let Some(l) = small_violation(m, n, &full)? {
            return Ok(PropertyVerdict::no(
                "hollow",
                Witness::NotSmall { submodule: n.elements().clone(), complement: l.elements().clone() },
            ));
        }
    }
    Ok(PropertyVerdict::yes("hollow"))
}

/// Every `N` admits `M = K ⊕ L` with `K ⊆ N` and `N ∩ L ≪ L`.
pub fn is_lifting(m: &FiniteModule) -> Result<PropertyVerdict> {
    let lattice = m.submodules()?;
    let full = m.full_submodule();
    let zero = m.zero_submodule();
    let mut summands = Vec::new();
    for k in lattice {
        for l in lattice {
            if m.intersection(k, l) == zero && m.sum(k, l) == full {
                summands.push((k, l));
            }
        }
    }
    for n in lattice {
        let mut found = false;
        for (k, l) in &summands {
            if k.is_subset(n) && is_small_in(m, &m.intersection(n, l), l)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(PropertyVerdict::no(
                "lifting",
                Witness::NoLiftingDecomposition { submodule: n.elements().clone() },
            ));
        }
    }
    Ok(PropertyVerdict::yes("lifting"))
}

/// Every proper submodule lies in a maximal one.
pub fn is_coatomic(m: &FiniteModule) -> Result<PropertyVerdict> {
    let maximal = m.maximal_submodules()?;
    let witness = m
        .proper_submodules()?
        .find(|n| !maximal.iter().any(|k| n.is_subset(k)))
        .map(|n| Witness::NotInMaximal { submodule: n.elements().clone() });
    Ok(PropertyVerdict::from_witness("coatomic", witness))
}

/// `P(M) = 0`.
pub fn is_reduced(m: &FiniteModule) -> Result<PropertyVerdict> {
    let p = m.p_sum()?;
    if p == m.zero_submodule() {
        Ok(PropertyVerdict::yes("reduced"))
    } else {
        Ok(PropertyVerdict::no("reduced", Witness::NonzeroPSum { p_sum: p.elements().clone() }))
    }
}

/// Has a largest proper submodule; cross-checked against
/// "`Rad M` is maximal and `Rad M ≪ M`".
pub fn is_local_module(m: &FiniteModule) -> Result<PropertyVerdict> {
    if m.is_zero_module() {
        return Ok(PropertyVerdict::no("local", Witness::ZeroModule));
    }
    let proper_sum = m.proper_submodules()?.fold(m.zero_submodule(), |acc, n| m.sum(&acc, n));
    let has_largest = m.is_proper(&proper_sum);

    let rad = m.rad()?;
    let rad_criterion = is_maximal(m, &rad)?.holds && is_small_in(m, &rad, &m.full_submodule())?;

    if has_largest != rad_criterion {
        return Err(AlgebraError::InternalInconsistency(format!(
            "local-module characterizations disagree on {}",
            m.name()
        )));
    }
    if has_largest {
        Ok(PropertyVerdict::yes("local"))
    } else {
        let maximal = m.maximal_submodules()?.into_iter().map(|k| k.elements().clone()).collect();
        Ok(PropertyVerdict::no("local", Witness::MaximalSubmodules { maximal }))
    }
}
