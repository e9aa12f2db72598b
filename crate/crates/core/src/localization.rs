//! Localization of finite rings and modules at a multiplicative set.
//!
//! Fractions `x/s` are pairs `(x, s)` with `s ∈ S`, identified when
//! `t·(s'·x − s·x') = 0` for some `t ∈ S`. Classes are found by union-find
//! over the pairwise relation, and every class is then rechecked pairwise
//! so a non-transitive relation surfaces as an error instead of a silent
//! merge.

use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::module::{FiniteModule, Submodule};
use crate::ring::{FiniteRing, MultiplicativeSet, RingMap};
use crate::set::ElementSet;

/// Partition of the pairs `(x, s)` into fraction classes.
///
/// Classes are numbered by their least pair in `(x, s)` order; the least
/// pair is also the class representative.
#[derive(Debug, Clone, Serialize)]
pub struct FractionClasses {
    #[serde(skip)]
    denominators: Vec<usize>,
    #[serde(skip)]
    slot: Vec<Option<usize>>,
    #[serde(skip)]
    class_of: Vec<usize>,
    members: Vec<Vec<(usize, usize)>>,
}

impl FractionClasses {
    fn build(
        carrier_size: usize,
        scalar_count: usize,
        mulset: &MultiplicativeSet,
        related: impl Fn((usize, usize), (usize, usize)) -> bool,
    ) -> Result<Self> {
        let denominators: Vec<usize> = mulset.iter().collect();
        let k = denominators.len();
        let mut slot = vec![None; scalar_count];
        for (j, &s) in denominators.iter().enumerate() {
            slot[s] = Some(j);
        }
        let pairs: Vec<(usize, usize)> =
            (0..carrier_size).flat_map(|x| denominators.iter().map(move |&s| (x, s))).collect();
        let n = pairs.len();

        let mut relation = vec![false; n * n];
        let mut uf = UnionFind::<usize>::new(n);
        for p in 0..n {
            relation[p * n + p] = true;
            for q in p + 1..n {
                if related(pairs[p], pairs[q]) {
                    relation[p * n + q] = true;
                    relation[q * n + p] = true;
                    uf.union(p, q);
                }
            }
        }

        let mut class_of = vec![usize::MAX; n];
        let mut root_class = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for p in 0..n {
            let root = uf.find_mut(p);
            if root_class[root] == usize::MAX {
                root_class[root] = members.len();
                members.push(Vec::new());
            }
            class_of[p] = root_class[root];
            members[root_class[root]].push(p);
        }

        for class in &members {
            for &p in class {
                for &q in class {
                    if !relation[p * n + q] {
                        return Err(AlgebraError::InternalInconsistency(format!(
                            "fraction relation is not transitive: {:?} and {:?} share a class",
                            pairs[p], pairs[q]
                        )));
                    }
                }
            }
        }

        debug_assert_eq!(class_of.len(), carrier_size * k);
        Ok(Self {
            denominators,
            slot,
            class_of,
            members: members.into_iter().map(|c| c.into_iter().map(|p| pairs[p]).collect()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Class of the fraction `x/s`; `s` must lie in the multiplicative set.
    #[inline]
    pub fn class(&self, x: usize, s: usize) -> usize {
        let j = self.slot[s].expect("denominator outside the multiplicative set");
        self.class_of[x * self.denominators.len() + j]
    }

    pub fn representative(&self, class: usize) -> (usize, usize) {
        self.members[class][0]
    }

    pub fn members(&self, class: usize) -> &[(usize, usize)] {
        &self.members[class]
    }

    pub fn denominators(&self) -> &[usize] {
        &self.denominators
    }
}

fn check_mulset(ring: &FiniteRing, mulset: &MultiplicativeSet) -> Result<()> {
    if ring.is_multiplicative_set(mulset.elements()) {
        Ok(())
    } else {
        Err(AlgebraError::InvalidParameter(format!(
            "{} is not a multiplicative set of {}",
            mulset.elements(),
            ring.name()
        )))
    }
}

fn fraction_label(numerator: &str, denominator: &str) -> String {
    format!("{numerator}/{denominator}")
}

/// `R_S` with its fraction classes and the canonical map `R → R_S`.
#[derive(Debug, Clone)]
pub struct LocalizedRing {
    base: Arc<FiniteRing>,
    mulset: MultiplicativeSet,
    ring: Arc<FiniteRing>,
    classes: FractionClasses,
    canonical: RingMap,
}

/// Localizes `ring` at `mulset`. When zero lies in the set the result is
/// the zero ring; see [`LocalizedRing::is_degenerate`].
pub fn localize_ring(base: &Arc<FiniteRing>, mulset: &MultiplicativeSet) -> Result<LocalizedRing> {
    let r = &**base;
    check_mulset(r, mulset)?;
    let denominators: Vec<usize> = mulset.iter().collect();
    let classes = FractionClasses::build(r.size(), r.size(), mulset, |(x, s), (y, t)| {
        let cross = r.sub(r.mul(t, x), r.mul(s, y));
        denominators.iter().any(|&u| r.mul(u, cross) == r.zero())
    })?;

    let k = classes.len();
    let mut add = vec![usize::MAX; k * k];
    let mut mul = vec![usize::MAX; k * k];
    for a in 0..k {
        for b in 0..k {
            for &(x, s) in classes.members(a) {
                for &(y, t) in classes.members(b) {
                    let st = r.mul(s, t);
                    let sum = classes.class(r.add(r.mul(t, x), r.mul(s, y)), st);
                    let product = classes.class(r.mul(x, y), st);
                    let (slot_add, slot_mul) = (&mut add[a * k + b], &mut mul[a * k + b]);
                    if *slot_add == usize::MAX {
                        *slot_add = sum;
                        *slot_mul = product;
                    } else if *slot_add != sum || *slot_mul != product {
                        return Err(AlgebraError::InternalInconsistency(
                            "fraction operations depend on representatives".into(),
                        ));
                    }
                }
            }
        }
    }

    let s0 = mulset.least();
    let labels = (0..k)
        .map(|c| {
            let (x, s) = classes.representative(c);
            fraction_label(r.label(x), r.label(s))
        })
        .collect();
    let ring = Arc::new(FiniteRing::from_flat(
        format!("{}_{}", r.name(), mulset.elements()),
        k,
        add,
        mul,
        classes.class(r.zero(), s0),
        classes.class(s0, s0),
        labels,
    )?);

    let mut table = Vec::with_capacity(r.size());
    for x in r.elements() {
        let image = classes.class(r.mul(x, s0), s0);
        if mulset.iter().any(|s| classes.class(r.mul(x, s), s) != image) {
            return Err(AlgebraError::InternalInconsistency("canonical map depends on the chosen denominator".into()));
        }
        table.push(image);
    }
    let canonical = RingMap::new(r, &ring, table)
        .map_err(|e| AlgebraError::InternalInconsistency(format!("canonical map: {e}")))?;
    let units = ring.units();
    if mulset.iter().any(|s| !units.elements().contains(canonical.apply(s))) {
        return Err(AlgebraError::InternalInconsistency("a denominator does not become a unit".into()));
    }

    Ok(LocalizedRing { base: base.clone(), mulset: mulset.clone(), ring, classes, canonical })
}

impl LocalizedRing {
    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn mulset(&self) -> &MultiplicativeSet {
        &self.mulset
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn classes(&self) -> &FractionClasses {
        &self.classes
    }

    pub fn canonical(&self) -> &RingMap {
        &self.canonical
    }

    /// Zero lies in the multiplicative set, so everything collapses.
    pub fn is_degenerate(&self) -> bool {
        self.mulset.contains_zero(&self.base)
    }

    /// Class of `r/s`.
    pub fn fraction(&self, r: usize, s: usize) -> usize {
        self.classes.class(r, s)
    }

    /// `A_S = { a/s : a ∈ A, s ∈ S }`.
    pub fn localize_ring_subset(&self, a: &ElementSet) -> Result<ElementSet> {
        if a.is_empty() {
            return Err(AlgebraError::EmptySet);
        }
        if a.universe() != self.base.size() {
            return Err(AlgebraError::InvalidParameter("subset is not in the base ring".into()));
        }
        Ok(ElementSet::from_indices(
            self.ring.size(),
            a.iter().flat_map(|x| self.mulset.iter().map(move |s| (x, s))).map(|(x, s)| self.classes.class(x, s)),
        ))
    }
}

/// `M_S` as an `R_S`-module, with its fraction classes and canonical map.
#[derive(Debug, Clone)]
pub struct LocalizedModule {
    ring: LocalizedRing,
    base: Arc<FiniteModule>,
    module: Arc<FiniteModule>,
    classes: FractionClasses,
    canonical: Vec<usize>,
}

/// Localizes `base` at `mulset`, building `R_S` along the way.
pub fn localize_module(base: &Arc<FiniteModule>, mulset: &MultiplicativeSet) -> Result<LocalizedModule> {
    let ring = localize_ring(base.ring(), mulset)?;
    localize_module_over(ring, base)
}

/// Localizes `base` over an already localized ring.
pub fn localize_module_over(ring: LocalizedRing, base: &Arc<FiniteModule>) -> Result<LocalizedModule> {
    if **ring.base() != **base.ring() {
        return Err(AlgebraError::InvalidParameter("module is not over the localized ring's base".into()));
    }
    let m = &**base;
    let r = &**ring.base();
    let mulset = ring.mulset().clone();
    let denominators: Vec<usize> = mulset.iter().collect();
    let classes = FractionClasses::build(m.size(), r.size(), &mulset, |(x, s), (y, t)| {
        let cross = m.sub(m.act(t, x), m.act(s, y));
        denominators.iter().any(|&u| m.act(u, cross) == m.zero())
    })?;

    let k = classes.len();
    let mut add = vec![usize::MAX; k * k];
    for a in 0..k {
        for b in 0..k {
            for &(x, s) in classes.members(a) {
                for &(y, t) in classes.members(b) {
                    let sum = classes.class(m.add(m.act(t, x), m.act(s, y)), r.mul(s, t));
                    let slot = &mut add[a * k + b];
                    if *slot == usize::MAX {
                        *slot = sum;
                    } else if *slot != sum {
                        return Err(AlgebraError::InternalInconsistency(
                            "fraction addition depends on representatives".into(),
                        ));
                    }
                }
            }
        }
    }

    let rs = ring.ring().clone();
    let ring_classes = ring.classes();
    let mut action = vec![usize::MAX; rs.size() * k];
    for c in 0..rs.size() {
        for d in 0..k {
            for &(a, u) in ring_classes.members(c) {
                for &(x, s) in classes.members(d) {
                    let value = classes.class(m.act(a, x), r.mul(u, s));
                    let slot = &mut action[c * k + d];
                    if *slot == usize::MAX {
                        *slot = value;
                    } else if *slot != value {
                        return Err(AlgebraError::InternalInconsistency(
                            "fraction action depends on representatives".into(),
                        ));
                    }
                }
            }
        }
    }

    let s0 = mulset.least();
    let labels = (0..k)
        .map(|c| {
            let (x, s) = classes.representative(c);
            fraction_label(m.label(x), r.label(s))
        })
        .collect();
    let module = Arc::new(FiniteModule::from_flat(
        format!("{}_{}", m.name(), mulset.elements()),
        rs.clone(),
        k,
        add,
        action,
        classes.class(m.zero(), s0),
        labels,
    )?);

    let mut canonical = Vec::with_capacity(m.size());
    for x in m.elements() {
        let image = classes.class(m.act(s0, x), s0);
        if mulset.iter().any(|s| classes.class(m.act(s, x), s) != image) {
            return Err(AlgebraError::InternalInconsistency("canonical map depends on the chosen denominator".into()));
        }
        canonical.push(image);
    }
    for x in m.elements() {
        for y in m.elements() {
            if canonical[m.add(x, y)] != module.add(canonical[x], canonical[y]) {
                return Err(AlgebraError::InternalInconsistency("canonical map is not additive".into()));
            }
        }
        for a in r.elements() {
            if canonical[m.act(a, x)] != module.act(ring.canonical().apply(a), canonical[x]) {
                return Err(AlgebraError::InternalInconsistency("canonical map does not respect the action".into()));
            }
        }
    }

    Ok(LocalizedModule { ring, base: base.clone(), module, classes, canonical })
}

impl LocalizedModule {
    pub fn localized_ring(&self) -> &LocalizedRing {
        &self.ring
    }

    pub fn base(&self) -> &Arc<FiniteModule> {
        &self.base
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn classes(&self) -> &FractionClasses {
        &self.classes
    }

    pub fn mulset(&self) -> &MultiplicativeSet {
        self.ring.mulset()
    }

    pub fn is_degenerate(&self) -> bool {
        self.ring.is_degenerate()
    }

    /// Image of `x` under `M → M_S`.
    pub fn canonical(&self, x: usize) -> usize {
        self.canonical[x]
    }

    pub fn canonical_table(&self) -> &[usize] {
        &self.canonical
    }

    pub fn canonical_is_bijective(&self) -> bool {
        let mut seen = vec![false; self.module.size()];
        self.canonical.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
            && self.canonical.len() == self.module.size()
    }

    /// Class of `x/s`.
    pub fn fraction(&self, x: usize, s: usize) -> usize {
        self.classes.class(x, s)
    }

    /// `{ x/s : x ∈ X, s ∈ S }` for any subset `X` of the base module.
    pub fn localize_elements(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.module.size(),
            set.iter().flat_map(|x| self.mulset().iter().map(move |s| (x, s))).map(|(x, s)| self.classes.class(x, s)),
        )
    }

    /// `N_S`.
    pub fn localize_submodule(&self, n: &Submodule) -> Result<Submodule> {
        if n.module_id() != self.base.id() {
            return Err(AlgebraError::MixedModules);
        }
        self.module
            .submodule(self.localize_elements(n.elements()))
            .map_err(|e| AlgebraError::InternalInconsistency(format!("N_S is not a submodule: {e}")))
    }

    /// `N = { x : s·x/s ∈ N' }`, computed for every `s ∈ S` and required to agree.
    pub fn lift_submodule(&self, nprime: &Submodule) -> Result<Submodule> {
        if nprime.module_id() != self.module.id() {
            return Err(AlgebraError::MixedModules);
        }
        let m = &*self.base;
        let mut lifted: Option<ElementSet> = None;
        for s in self.mulset().iter() {
            let set = ElementSet::from_indices(
                m.size(),
                m.elements().filter(|&x| nprime.contains(self.classes.class(m.act(s, x), s))),
            );
            match &lifted {
                None => lifted = Some(set),
                Some(prev) if *prev != set => {
                    return Err(AlgebraError::InternalInconsistency("lift depends on the chosen denominator".into()))
                }
                Some(_) => {}
            }
        }
        let set = lifted.expect("multiplicative sets are nonempty");
        m.submodule(set).map_err(|e| AlgebraError::InternalInconsistency(format!("lift is not a submodule: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::ring::{find_isomorphism, make_zn};

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(make_zn(n).unwrap())
    }

    fn mulset(ring: &FiniteRing, xs: &[usize]) -> MultiplicativeSet {
        MultiplicativeSet::new(ring, ElementSet::from_indices(ring.size(), xs.iter().copied())).unwrap()
    }

    /// Oracle: classes as equivalence classes of the reflexive-transitive
    /// closure of the raw relation, closed by Warshall's algorithm.
    fn warshall_class_count(
        size: usize,
        s: &[usize],
        zero_after: impl Fn(usize, usize, usize, usize, usize) -> bool,
    ) -> usize {
        let pairs: Vec<(usize, usize)> = (0..size).flat_map(|x| s.iter().map(move |&t| (x, t))).collect();
        let n = pairs.len();
        let mut reach = vec![vec![false; n]; n];
        for p in 0..n {
            for q in 0..n {
                let ((x, a), (y, b)) = (pairs[p], pairs[q]);
                reach[p][q] = s.iter().any(|&u| zero_after(u, x, a, y, b));
            }
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut rows: Vec<&Vec<bool>> = reach.iter().collect();
        rows.sort();
        rows.dedup();
        rows.len()
    }

    fn zn_oracle(n: usize, s: &[usize]) -> usize {
        // u·(b·x − a·y) ≡ 0 mod n
        warshall_class_count(n, s, |u, x, a, y, b| {
            let cross = (b * x + n * n - a * y % n) % n;
            u * cross % n == 0
        })
    }

    #[test]
    fn localized_sizes_match_class_oracle() {
        assert_eq!(zn_oracle(6, &[2, 4]), 3);
        assert_eq!(zn_oracle(6, &[3]), 2);
        assert_eq!(zn_oracle(6, &[1, 5]), 6);
        let ring = z(6);
        for (s, size) in [(&[2, 4][..], 3), (&[3][..], 2), (&[1, 5][..], 6)] {
            let lr = localize_ring(&ring, &mulset(&ring, s)).unwrap();
            assert_eq!(lr.ring().size(), size, "S = {s:?}");
        }
    }

    #[test]
    fn class_counts_agree_with_oracle_for_all_zn_mulsets() {
        for n in 2..=8 {
            let ring = z(n);
            for s in ring.multiplicative_sets().unwrap() {
                let elems: Vec<usize> = s.iter().collect();
                let lr = localize_ring(&ring, &s).unwrap();
                assert_eq!(lr.ring().size(), zn_oracle(n, &elems), "Z{n} at {elems:?}");
            }
        }
    }

    #[test]
    fn z6_localizations_up_to_isomorphism() {
        let ring = z(6);
        let units = localize_ring(&ring, &mulset(&ring, &[1, 5])).unwrap();
        assert!(units.canonical().is_bijective());
        assert!(find_isomorphism(units.ring(), &ring).is_some());
        let at_two = localize_ring(&ring, &mulset(&ring, &[2, 4])).unwrap();
        assert!(find_isomorphism(at_two.ring(), &make_zn(3).unwrap()).is_some());
        let at_three = localize_ring(&ring, &mulset(&ring, &[3])).unwrap();
        assert!(find_isomorphism(at_three.ring(), &make_zn(2).unwrap()).is_some());
        // (r,3) ~ (r',3) iff r ≡ r' mod 2.
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(at_three.fraction(a, 3) == at_three.fraction(b, 3), a % 2 == b % 2);
            }
        }
    }

    #[test]
    fn zero_in_mulset_collapses() {
        let ring = z(6);
        let lr = localize_ring(&ring, &mulset(&ring, &[0, 1])).unwrap();
        assert!(lr.is_degenerate());
        assert!(lr.ring().is_zero_ring());
        let m = Arc::new(regular_module(&ring));
        let lm = localize_module(&m, &mulset(&ring, &[0])).unwrap();
        assert!(lm.module().is_zero_module());
    }

    #[test]
    fn module_sizes() {
        let ring = z(6);
        let m = Arc::new(regular_module(&ring));
        for (s, size) in [(&[1, 5][..], 6), (&[2, 4][..], 3), (&[3][..], 2)] {
            let lm = localize_module(&m, &mulset(&ring, s)).unwrap();
            assert_eq!(lm.module().size(), size);
        }
        let lm = localize_module(&m, &mulset(&ring, &[1, 5])).unwrap();
        assert!(lm.canonical_is_bijective());
    }

    #[test]
    fn submodule_transport() {
        let ring = z(6);
        let m = Arc::new(regular_module(&ring));
        let n = m.submodule_from([0, 2, 4]).unwrap();

        let units = localize_module(&m, &mulset(&ring, &[1, 5])).unwrap();
        assert_eq!(units.localize_submodule(&n).unwrap().len(), 3);
        assert_eq!(units.localize_submodule(&m.zero_submodule()).unwrap(), units.module().zero_submodule());
        assert_eq!(units.lift_submodule(&units.module().zero_submodule()).unwrap(), m.zero_submodule());

        let at_two = localize_module(&m, &mulset(&ring, &[2, 4])).unwrap();
        let three = m.submodule_from([0, 3]).unwrap();
        assert_eq!(at_two.localize_submodule(&three).unwrap(), at_two.module().zero_submodule());

        let at_three = localize_module(&m, &mulset(&ring, &[3])).unwrap();
        assert_eq!(at_three.lift_submodule(&at_three.module().zero_submodule()).unwrap().to_vec(), vec![0, 2, 4]);
        assert_eq!(at_three.lift_submodule(&at_three.module().full_submodule()).unwrap(), m.full_submodule());

        let other = Arc::new(regular_module(&ring));
        assert_eq!(units.localize_submodule(&other.zero_submodule()), Err(AlgebraError::MixedModules));
    }

    #[test]
    fn ring_subsets() {
        let ring = z(6);
        let lr = localize_ring(&ring, &mulset(&ring, &[1, 5])).unwrap();
        let a = ElementSet::from_indices(6, [0, 2, 4]);
        let image = lr.localize_ring_subset(&a).unwrap();
        assert_eq!(image.len(), 3);
        assert!(lr.ring().is_ideal(&image));
        let zero = lr.localize_ring_subset(&ElementSet::singleton(6, 0)).unwrap();
        assert_eq!(zero.to_vec(), vec![lr.ring().zero()]);
        let s_of_n = ElementSet::from_indices(6, [0, 3]);
        assert_eq!(lr.localize_ring_subset(&s_of_n).unwrap(), lr.canonical().image(&s_of_n));
        assert_eq!(lr.localize_ring_subset(&ElementSet::empty(6)), Err(AlgebraError::EmptySet));
    }
}
