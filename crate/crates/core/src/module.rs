//! Finite unitary modules over a [`FiniteRing`], their submodule lattices,
//! and the colon, radical and not-prime operators.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use crate::error::{AlgebraError, Result};
use crate::lattice::Carrier;
use crate::ring::{Cosets, FiniteRing, IdealSet, DEFAULT_SIZE_CAP};
use crate::set::ElementSet;

static NEXT_MODULE_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a module value; clones share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleId(u64);

impl ModuleId {
    fn fresh() -> Self {
        Self(NEXT_MODULE_ID.fetch_add(1, Ordering::Relaxed))
    }
}

/// A finite unitary module. `action[r * size + m]` is `r·m`.
#[derive(Clone)]
pub struct FiniteModule {
    id: ModuleId,
    name: String,
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    action: Vec<usize>,
    labels: Vec<String>,
    lattice: OnceLock<Vec<Submodule>>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("name", &self.name)
            .field("ring", &self.ring.name())
            .field("size", &self.size)
            .finish_non_exhaustive()
    }
}

/// A submodule, tied to the module it was built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submodule {
    module: ModuleId,
    elements: ElementSet,
}

impl Submodule {
    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn module_id(&self) -> ModuleId {
        self.module
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements.to_vec()
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.elements.cmp(&other.elements)
    }
}

impl fmt::Display for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elements.fmt(f)
    }
}

/// `S(N)`: ring elements that are not prime to a proper submodule `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotPrimeSet {
    submodule: Submodule,
    elements: ElementSet,
}

impl NotPrimeSet {
    pub fn submodule(&self) -> &Submodule {
        &self.submodule
    }

    pub fn elements(&self) -> &ElementSet {
        &self.elements
    }

    pub fn into_elements(self) -> ElementSet {
        self.elements
    }
}

impl FiniteModule {
    /// Builds a module from tables, checking the module axioms exhaustively.
    pub fn from_tables(
        name: impl Into<String>,
        ring: Arc<FiniteRing>,
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        zero: usize,
    ) -> Result<Self> {
        let size = add.len();
        if add.iter().any(|row| row.len() != size)
            || action.len() != ring.size()
            || action.iter().any(|row| row.len() != size)
        {
            return Err(AlgebraError::InvalidParameter(format!(
                "module tables must be {size}x{size} and {}x{size}",
                ring.size()
            )));
        }
        let labels = (0..size).map(|x| x.to_string()).collect();
        Self::from_flat(
            name.into(),
            ring,
            size,
            add.into_iter().flatten().collect(),
            action.into_iter().flatten().collect(),
            zero,
            labels,
        )
    }

    pub(crate) fn from_flat(
        name: String,
        ring: Arc<FiniteRing>,
        size: usize,
        add: Vec<usize>,
        action: Vec<usize>,
        zero: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(AlgebraError::InvalidParameter("a module needs at least one element".into()));
        }
        if size > DEFAULT_SIZE_CAP {
            return Err(AlgebraError::CapExceeded { size, cap: DEFAULT_SIZE_CAP });
        }
        if add.len() != size * size || action.len() != ring.size() * size || labels.len() != size {
            return Err(AlgebraError::InvalidParameter("table dimensions do not match size".into()));
        }
        if zero >= size || add.iter().chain(&action).any(|&x| x >= size) {
            return Err(AlgebraError::InvalidParameter("table entry out of range".into()));
        }
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add[a * size + b] == zero))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| AlgebraError::AxiomViolation("missing additive inverse".into()))?;
        let module =
            Self { id: ModuleId::fresh(), name, ring, size, add, neg, zero, action, labels, lattice: OnceLock::new() };
        module.check_axioms()?;
        Ok(module)
    }

    fn check_axioms(&self) -> Result<()> {
        let ring = &*self.ring;
        let n = self.size;
        let fail = |what: &str| Err(AlgebraError::AxiomViolation(what.to_string()));
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("zero is not an additive identity");
            }
            if self.act(ring.one(), a) != a {
                return fail("module is not unitary");
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("addition is not associative");
                    }
                }
                for r in ring.elements() {
                    if self.act(r, self.add(a, b)) != self.add(self.act(r, a), self.act(r, b)) {
                        return fail("action does not distribute over module addition");
                    }
                }
            }
            for r in ring.elements() {
                for s in ring.elements() {
                    if self.act(ring.add(r, s), a) != self.add(self.act(r, a), self.act(s, a)) {
                        return fail("action does not distribute over ring addition");
                    }
                    if self.act(ring.mul(r, s), a) != self.act(r, self.act(s, a)) {
                        return fail("action is not associative");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> ModuleId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `r·m`.
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.size + m]
    }

    pub fn is_zero_module(&self) -> bool {
        self.size == 1
    }

    fn carrier(&self) -> Carrier<'_> {
        Carrier { size: self.size, zero: self.zero, add: &self.add, scalars: self.ring.size(), action: &self.action }
    }

    fn wrap(&self, elements: ElementSet) -> Submodule {
        Submodule { module: self.id, elements }
    }

    fn check_owner(&self, n: &Submodule) -> Result<()> {
        if n.module == self.id {
            Ok(())
        } else {
            Err(AlgebraError::MixedModules)
        }
    }

    pub fn is_submodule(&self, set: &ElementSet) -> bool {
        set.universe() == self.size && self.carrier().is_closed(set)
    }

    /// Validates `set` as a submodule of this module.
    pub fn submodule(&self, set: ElementSet) -> Result<Submodule> {
        if self.is_submodule(&set) {
            Ok(self.wrap(set))
        } else {
            Err(AlgebraError::NotASubmodule(set.to_string()))
        }
    }

    pub fn submodule_from(&self, items: impl IntoIterator<Item = usize>) -> Result<Submodule> {
        let set = ElementSet::try_from_indices(self.size, items)
            .ok_or_else(|| AlgebraError::NotASubmodule("element index out of range".into()))?;
        self.submodule(set)
    }

    pub fn zero_submodule(&self) -> Submodule {
        self.wrap(ElementSet::singleton(self.size, self.zero))
    }

    pub fn full_submodule(&self) -> Submodule {
        self.wrap(ElementSet::full(self.size))
    }

    pub fn is_proper(&self, n: &Submodule) -> bool {
        !n.elements.is_full()
    }

    /// Smallest submodule containing `gens`.
    pub fn submodule_generated(&self, gens: &ElementSet) -> Submodule {
        self.wrap(self.carrier().close(gens))
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Submodule {
        self.submodule_generated(&a.elements.union(&b.elements))
    }

    pub fn intersection(&self, a: &Submodule, b: &Submodule) -> Submodule {
        self.wrap(a.elements.intersection(&b.elements))
    }

    /// All submodules under the default size cap.
    pub fn submodules(&self) -> Result<&[Submodule]> {
        self.enumerate_submodules(DEFAULT_SIZE_CAP)
    }

    /// All submodules sorted by (cardinality, elements); cached after the first call.
    pub fn enumerate_submodules(&self, cap: usize) -> Result<&[Submodule]> {
        if self.size > cap {
            return Err(AlgebraError::CapExceeded { size: self.size, cap });
        }
        Ok(self.lattice.get_or_init(|| self.carrier().enumerate().into_iter().map(|s| self.wrap(s)).collect()))
    }

    pub fn proper_submodules(&self) -> Result<impl Iterator<Item = &Submodule> + '_> {
        Ok(self.submodules()?.iter().filter(|n| !n.elements.is_full()))
    }

    /// Submodules of `m` contained in `n`, i.e. the submodules of `n` as a module.
    pub fn submodules_within<'a>(&'a self, n: &'a Submodule) -> Result<impl Iterator<Item = &'a Submodule> + 'a> {
        self.check_owner(n)?;
        Ok(self.submodules()?.iter().filter(move |k| k.is_subset(n)))
    }

    /// `N : L = { r : r·L ⊆ N }`.
    pub fn colon_ideal(&self, n: &Submodule, l: &Submodule) -> Result<IdealSet> {
        self.check_owner(n)?;
        self.check_owner(l)?;
        let elements = ElementSet::from_indices(
            self.ring.size(),
            self.ring.elements().filter(|&r| l.elements.iter().all(|x| n.contains(self.act(r, x)))),
        );
        IdealSet::new(&self.ring, elements)
            .map_err(|e| AlgebraError::InternalInconsistency(format!("colon is not an ideal: {e}")))
    }

    /// `N : M`.
    pub fn annihilator_colon(&self, n: &Submodule) -> Result<IdealSet> {
        self.colon_ideal(n, &self.full_submodule())
    }

    /// `N : r = { x : r·x ∈ N }`.
    pub fn colon_element(&self, n: &Submodule, r: usize) -> Result<Submodule> {
        self.check_owner(n)?;
        if r >= self.ring.size() {
            return Err(AlgebraError::InvalidParameter(format!("ring element {r} out of range")));
        }
        let set = ElementSet::from_indices(self.size, self.elements().filter(|&x| n.contains(self.act(r, x))));
        self.submodule(set).map_err(|e| AlgebraError::InternalInconsistency(format!("N:r is not a submodule: {e}")))
    }

    /// `N : S = { x : s·x ∈ N for every s ∈ S }`.
    pub fn colon_set(&self, n: &Submodule, s: &ElementSet) -> Result<Submodule> {
        self.check_owner(n)?;
        if s.is_empty() {
            return Err(AlgebraError::EmptySet);
        }
        if s.universe() != self.ring.size() {
            return Err(AlgebraError::InvalidParameter("scalar set is not a ring subset".into()));
        }
        let set = ElementSet::from_indices(
            self.size,
            self.elements().filter(|&x| s.iter().all(|r| n.contains(self.act(r, x)))),
        );
        self.submodule(set).map_err(|e| AlgebraError::InternalInconsistency(format!("N:S is not a submodule: {e}")))
    }

    /// `S(N) = { r : r·m ∈ N for some m ∉ N }`; requires `N` proper.
    pub fn not_prime_set(&self, n: &Submodule) -> Result<NotPrimeSet> {
        self.check_owner(n)?;
        if !self.is_proper(n) {
            return Err(AlgebraError::NotProper);
        }
        let outside = n.elements.complement();
        let elements = ElementSet::from_indices(
            self.ring.size(),
            self.ring.elements().filter(|&r| outside.iter().any(|m| n.contains(self.act(r, m)))),
        );
        Ok(NotPrimeSet { submodule: n.clone(), elements })
    }

    /// Proper submodules of `within` not strictly contained in another proper one.
    fn maximal_in(&self, within: &Submodule) -> Result<Vec<Submodule>> {
        let inside: Vec<&Submodule> = self.submodules_within(within)?.filter(|k| *k != within).collect();
        Ok(inside.iter().filter(|k| !inside.iter().any(|j| j != *k && k.is_subset(j))).map(|k| (*k).clone()).collect())
    }

    pub fn maximal_submodules(&self) -> Result<Vec<Submodule>> {
        self.maximal_in(&self.full_submodule())
    }

    /// Intersection of the maximal submodules; `M` itself when there are none.
    pub fn rad(&self) -> Result<Submodule> {
        self.rad_of_submodule(&self.full_submodule())
    }

    /// Radical of `N` regarded as a module, as a subset of this module.
    ///
    /// The submodules of `N` are exactly the submodules of `M` inside `N`.
    pub fn rad_of_submodule(&self, n: &Submodule) -> Result<Submodule> {
        let maximal = self.maximal_in(n)?;
        Ok(maximal.iter().fold(n.clone(), |acc, k| self.intersection(&acc, k)))
    }

    /// `P(M)`: sum of all submodules equal to their own radical.
    pub fn p_sum(&self) -> Result<Submodule> {
        let mut total = self.zero_submodule();
        for n in self.submodules()? {
            if self.rad_of_submodule(n)? == *n {
                total = self.sum(&total, n);
            }
        }
        Ok(total)
    }

    /// `rM` as a submodule.
    pub fn scalar_image(&self, r: usize) -> Submodule {
        let set = ElementSet::from_indices(self.size, self.elements().map(|m| self.act(r, m)));
        self.wrap(set)
    }

    /// `N` as a module in its own right, with the inclusion map into `M`.
    pub fn restrict(&self, n: &Submodule) -> Result<(FiniteModule, Vec<usize>)> {
        self.check_owner(n)?;
        let embedding = n.to_vec();
        let index = |x: usize| embedding.binary_search(&x).expect("closed under operations");
        let k = embedding.len();
        let mut add = Vec::with_capacity(k * k);
        for &a in &embedding {
            for &b in &embedding {
                add.push(index(self.add(a, b)));
            }
        }
        let mut action = Vec::with_capacity(self.ring.size() * k);
        for r in self.ring.elements() {
            for &a in &embedding {
                action.push(index(self.act(r, a)));
            }
        }
        let labels = embedding.iter().map(|&x| self.labels[x].clone()).collect();
        let module = Self::from_flat(
            format!("{} in {}", n, self.name),
            self.ring.clone(),
            k,
            add,
            action,
            index(self.zero),
            labels,
        )?;
        Ok((module, embedding))
    }

    pub fn image_of(&self, sub: &Submodule, embedding: &[usize], ambient: &FiniteModule) -> Result<Submodule> {
        self.check_owner(sub)?;
        ambient.submodule_from(sub.elements.iter().map(|x| embedding[x]))
    }
}

/// `R` as a module over itself.
pub fn regular_module(ring: &Arc<FiniteRing>) -> FiniteModule {
    let n = ring.size();
    FiniteModule::from_flat(
        ring.name().to_string(),
        ring.clone(),
        n,
        ring.add_table().to_vec(),
        ring.mul_table().to_vec(),
        ring.zero(),
        ring.labels().to_vec(),
    )
    .expect("a ring is a module over itself")
}

/// `M / N` with cosets numbered by their least element.
pub fn quotient_module(m: &FiniteModule, n: &Submodule) -> Result<FiniteModule> {
    if n.module != m.id || !m.is_submodule(&n.elements) {
        return Err(AlgebraError::NotASubmodule(n.to_string()));
    }
    let cosets = Cosets::new(m.size(), &n.elements, |a, b| m.add(a, b));
    let reps = &cosets.representatives;
    let k = reps.len();
    let mut add = Vec::with_capacity(k * k);
    for &a in reps {
        for &b in reps {
            add.push(cosets.class_of[m.add(a, b)]);
        }
    }
    let mut action = Vec::with_capacity(m.ring.size() * k);
    for r in m.ring.elements() {
        for &a in reps {
            action.push(cosets.class_of[m.act(r, a)]);
        }
    }
    let labels = reps.iter().map(|&x| format!("[{}]", m.label(x))).collect();
    FiniteModule::from_flat(
        format!("{}/{}", m.name(), n),
        m.ring.clone(),
        k,
        add,
        action,
        cosets.class_of[m.zero()],
        labels,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_zn, product_ring};

    fn regular(n: usize) -> FiniteModule {
        regular_module(&Arc::new(make_zn(n).unwrap()))
    }

    fn sub(m: &FiniteModule, xs: &[usize]) -> Submodule {
        m.submodule_from(xs.iter().copied()).unwrap()
    }

    fn lattice(m: &FiniteModule) -> Vec<Vec<usize>> {
        m.submodules().unwrap().iter().map(Submodule::to_vec).collect()
    }

    /// Oracle: test every subset against the submodule axioms.
    fn brute_force_lattice(m: &FiniteModule) -> Vec<Vec<usize>> {
        let n = m.size();
        let mut all: Vec<ElementSet> = (0u64..1 << n)
            .map(|mask| ElementSet::from_indices(n, (0..n).filter(|&x| mask >> x & 1 == 1)))
            .filter(|s| {
                s.contains(m.zero())
                    && s.iter().all(|a| s.iter().all(|b| s.contains(m.add(a, b))))
                    && s.iter().all(|a| m.ring().elements().all(|r| s.contains(m.act(r, a))))
            })
            .collect();
        all.sort();
        all.iter().map(ElementSet::to_vec).collect()
    }

    #[test]
    fn regular_lattices_match_subset_oracle() {
        let z6 = regular(6);
        assert_eq!(brute_force_lattice(&z6), vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]);
        assert_eq!(lattice(&z6), brute_force_lattice(&z6));
        assert_eq!(lattice(&regular(2)), vec![vec![0], vec![0, 1]]);
        let z4 = regular(4);
        assert_eq!(brute_force_lattice(&z4), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(lattice(&z4), brute_force_lattice(&z4));

        let z2 = make_zn(2).unwrap();
        let klein = regular_module(&Arc::new(product_ring(&z2, &z2).unwrap()));
        let oracle = brute_force_lattice(&klein);
        // Ideals of F2×F2: 0, F2×0, 0×F2, and the whole ring.
        assert_eq!(oracle.len(), 4);
        assert_eq!(lattice(&klein), oracle);
    }

    #[test]
    fn generated_submodules() {
        let m = regular(6);
        let set = |xs: &[usize]| ElementSet::from_indices(6, xs.iter().copied());
        assert_eq!(m.submodule_generated(&set(&[2])).to_vec(), vec![0, 2, 4]);
        assert_eq!(m.submodule_generated(&set(&[])).to_vec(), vec![0]);
        assert_eq!(m.submodule_generated(&set(&[1])).to_vec(), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(m.submodule_generated(&set(&[2, 3])).to_vec(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn quotients() {
        let m = regular(6);
        let q = quotient_module(&m, &sub(&m, &[0, 3])).unwrap();
        assert_eq!(q.size(), 3);
        assert_eq!(quotient_module(&m, &m.zero_submodule()).unwrap().size(), 6);
        let zero = quotient_module(&m, &m.full_submodule()).unwrap();
        assert!(zero.is_zero_module());
        let other = regular(6);
        assert!(matches!(quotient_module(&m, &other.zero_submodule()), Err(AlgebraError::NotASubmodule(_))));
    }

    #[test]
    fn colon_ideals() {
        let m = regular(6);
        let full = m.full_submodule();
        assert_eq!(m.colon_ideal(&sub(&m, &[0, 2, 4]), &full).unwrap().elements().to_vec(), vec![0, 2, 4]);
        assert_eq!(m.colon_ideal(&sub(&m, &[0, 3]), &full).unwrap().elements().to_vec(), vec![0, 3]);
        assert_eq!(m.colon_ideal(&sub(&m, &[0, 3]), &m.zero_submodule()).unwrap().elements().len(), 6);
        let other = regular(6);
        assert_eq!(m.colon_ideal(&full, &other.full_submodule()), Err(AlgebraError::MixedModules));
    }

    #[test]
    fn colon_elements_and_sets() {
        let m = regular(6);
        let n = sub(&m, &[0, 2, 4]);
        assert_eq!(m.colon_element(&n, 5).unwrap(), n);
        assert_eq!(m.colon_element(&n, 1).unwrap(), n);
        assert_eq!(m.colon_element(&m.zero_submodule(), 3).unwrap().to_vec(), vec![0, 2, 4]);

        let s = |xs: &[usize]| ElementSet::from_indices(6, xs.iter().copied());
        let zero = m.zero_submodule();
        assert_eq!(m.colon_set(&zero, &s(&[2, 4])).unwrap().to_vec(), vec![0, 3]);
        assert_eq!(m.colon_set(&zero, &s(&[1, 5])).unwrap().to_vec(), vec![0]);
        assert_eq!(m.colon_set(&zero, &s(&[])), Err(AlgebraError::EmptySet));
        for mulset in m.ring().multiplicative_sets().unwrap() {
            assert_eq!(m.colon_set(&m.full_submodule(), mulset.elements()).unwrap(), m.full_submodule());
            // N:S is the intersection of the N:s.
            for k in m.submodules().unwrap() {
                let meet = mulset
                    .iter()
                    .map(|r| m.colon_element(k, r).unwrap())
                    .fold(m.full_submodule(), |acc, x| m.intersection(&acc, &x));
                assert_eq!(m.colon_set(k, mulset.elements()).unwrap(), meet);
            }
        }
    }

    #[test]
    fn not_prime_sets() {
        let m = regular(6);
        let s = |xs: &[usize]| m.not_prime_set(&sub(&m, xs)).unwrap().elements().to_vec();
        assert_eq!(s(&[0]), vec![0, 2, 3, 4]);
        assert_eq!(s(&[0, 2, 4]), vec![0, 2, 4]);
        assert_eq!(s(&[0, 3]), vec![0, 3]);
        assert_eq!(m.not_prime_set(&m.full_submodule()), Err(AlgebraError::NotProper));
    }

    #[test]
    fn maximal_and_radical() {
        let z6 = regular(6);
        let maximal: Vec<_> = z6.maximal_submodules().unwrap().iter().map(Submodule::to_vec).collect();
        assert_eq!(maximal, vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(z6.rad().unwrap().to_vec(), vec![0]);
        assert_eq!(z6.p_sum().unwrap().to_vec(), vec![0]);
        assert_eq!(z6.rad_of_submodule(&sub(&z6, &[0, 2, 4])).unwrap().to_vec(), vec![0]);
        assert_eq!(z6.rad_of_submodule(&z6.zero_submodule()).unwrap().to_vec(), vec![0]);

        let z4 = regular(4);
        let maximal: Vec<_> = z4.maximal_submodules().unwrap().iter().map(Submodule::to_vec).collect();
        assert_eq!(maximal, vec![vec![0, 2]]);
        assert_eq!(z4.rad().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(z4.rad_of_submodule(&z4.full_submodule()).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(z4.p_sum().unwrap().to_vec(), vec![0]);

        let z2 = regular(2);
        assert_eq!(z2.maximal_submodules().unwrap(), vec![z2.zero_submodule()]);

        let zero = quotient_module(&z6, &z6.full_submodule()).unwrap();
        assert!(zero.maximal_submodules().unwrap().is_empty());
        assert_eq!(zero.rad().unwrap(), zero.full_submodule());
        assert_eq!(zero.p_sum().unwrap(), zero.zero_submodule());
    }

    #[test]
    fn radical_of_submodule_agrees_with_restricted_module() {
        let ring = Arc::new(make_zn(12).unwrap());
        let m = regular_module(&ring);
        for n in m.submodules().unwrap() {
            let (as_module, embedding) = m.restrict(n).unwrap();
            let rad = as_module.rad().unwrap();
            let lifted = as_module.image_of(&rad, &embedding, &m).unwrap();
            assert_eq!(m.rad_of_submodule(n).unwrap(), lifted, "{n}");
        }
    }

    #[test]
    fn lattice_closed_under_meet_and_join() {
        let ring = Arc::new(product_ring(&make_zn(2).unwrap(), &make_zn(4).unwrap()).unwrap());
        let m = regular_module(&ring);
        let all = m.submodules().unwrap();
        for a in all {
            for b in all {
                assert!(all.contains(&m.sum(a, b)));
                assert!(all.contains(&m.intersection(a, b)));
            }
        }
    }

    #[test]
    fn table_modules_are_validated() {
        let ring = Arc::new(make_zn(2).unwrap());
        // Z2 acting on Z2 by the zero action is not unitary.
        let bad = FiniteModule::from_tables(
            "bad",
            ring.clone(),
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![0, 0], vec![0, 0]],
            0,
        );
        assert!(matches!(bad, Err(AlgebraError::AxiomViolation(_))));
        let ok = FiniteModule::from_tables("Z2", ring, vec![vec![0, 1], vec![1, 0]], vec![vec![0, 0], vec![0, 1]], 0);
        assert!(ok.is_ok());
    }
}
