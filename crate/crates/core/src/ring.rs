//! Finite commutative rings with identity, stored as Cayley tables, together
//! with their ideals, multiplicative sets and units.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::lattice::Carrier;
use crate::set::ElementSet;

/// Upper bound on ring and module sizes accepted by the exhaustive deciders.
pub const DEFAULT_SIZE_CAP: usize = 64;

/// Rings above this size are not scanned for all multiplicative subsets.
pub const MULSET_ENUMERATION_CAP: usize = 20;

/// A finite commutative ring with identity.
///
/// Elements are the indices `0..size`; `add` and `mul` are row-major
/// `size × size` tables.
#[derive(Clone)]
pub struct FiniteRing {
    name: String,
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Vec<String>,
    ideals: OnceLock<Vec<IdealSet>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing").field("name", &self.name).field("size", &self.size).finish_non_exhaustive()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Builds a ring from nested tables, checking every ring axiom exhaustively.
    pub fn from_tables(
        name: impl Into<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let size = add.len();
        if mul.len() != size || add.iter().chain(&mul).any(|row| row.len() != size) {
            return Err(AlgebraError::InvalidParameter(format!("ring tables must both be {size}x{size}")));
        }
        let labels = (0..size).map(|x| x.to_string()).collect();
        Self::from_flat(
            name.into(),
            size,
            add.into_iter().flatten().collect(),
            mul.into_iter().flatten().collect(),
            zero,
            one,
            labels,
        )
    }

    pub(crate) fn from_flat(
        name: String,
        size: usize,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(AlgebraError::InvalidParameter("a ring needs at least one element".into()));
        }
        if size > DEFAULT_SIZE_CAP {
            return Err(AlgebraError::CapExceeded { size, cap: DEFAULT_SIZE_CAP });
        }
        if add.len() != size * size || mul.len() != size * size || labels.len() != size {
            return Err(AlgebraError::InvalidParameter("table dimensions do not match size".into()));
        }
        if zero >= size || one >= size || add.iter().chain(&mul).any(|&x| x >= size) {
            return Err(AlgebraError::InvalidParameter("table entry out of range".into()));
        }
        let neg = (0..size)
            .map(|a| (0..size).find(|&b| add[a * size + b] == zero))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| AlgebraError::AxiomViolation("missing additive inverse".into()))?;
        let ring = Self { name, size, add, mul, neg, zero, one, labels, ideals: OnceLock::new() };
        ring.check_axioms()?;
        Ok(ring)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let fail = |what: &str| Err(AlgebraError::AxiomViolation(what.to_string()));
        if n > 1 && self.zero == self.one {
            return fail("zero equals one in a nonzero ring");
        }
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("zero is not an additive identity");
            }
            if self.mul(a, self.one) != a {
                return fail("one is not a multiplicative identity");
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplication is not commutative");
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("addition is not associative");
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplication is not associative");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("multiplication does not distribute over addition");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub(crate) fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub(crate) fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    /// Checks that `set` lives in this ring's universe.
    pub fn subset(&self, items: impl IntoIterator<Item = usize>) -> Result<ElementSet> {
        ElementSet::try_from_indices(self.size, items)
            .ok_or_else(|| AlgebraError::InvalidParameter(format!("element index outside {}", self.name)))
    }

    fn carrier(&self) -> Carrier<'_> {
        Carrier { size: self.size, zero: self.zero, add: &self.add, scalars: self.size, action: &self.mul }
    }

    /// First failure of the ideal conditions, scanning in index order.
    pub fn ideal_violation(&self, a: &ElementSet) -> Option<IdealViolation> {
        debug_assert_eq!(a.universe(), self.size);
        if a.is_empty() {
            return Some(IdealViolation::Empty);
        }
        for x in a.iter() {
            for y in a.iter() {
                if !a.contains(self.sub(x, y)) {
                    return Some(IdealViolation::Difference { a: x, b: y });
                }
            }
        }
        for r in self.elements() {
            for x in a.iter() {
                if !a.contains(self.mul(r, x)) {
                    return Some(IdealViolation::Absorption { r, a: x });
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, a: &ElementSet) -> bool {
        a.universe() == self.size && self.ideal_violation(a).is_none()
    }

    pub fn is_multiplicative_set(&self, s: &ElementSet) -> bool {
        s.universe() == self.size && !s.is_empty() && s.iter().all(|x| s.iter().all(|y| s.contains(self.mul(x, y))))
    }

    pub fn units(&self) -> MultiplicativeSet {
        let units = ElementSet::from_indices(
            self.size,
            self.elements().filter(|&u| self.elements().any(|v| self.mul(u, v) == self.one)),
        );
        MultiplicativeSet(units)
    }

    pub fn ideal_generated(&self, gens: &ElementSet) -> IdealSet {
        IdealSet(self.carrier().close(gens))
    }

    /// All ideals, sorted by (cardinality, elements). Cached.
    pub fn ideals(&self) -> &[IdealSet] {
        self.ideals.get_or_init(|| self.carrier().enumerate().into_iter().map(IdealSet).collect())
    }

    pub fn is_prime_ideal(&self, i: &ElementSet) -> Result<bool> {
        if !self.is_ideal(i) {
            return Err(AlgebraError::InvalidIdeal(i.to_string()));
        }
        if i.is_full() {
            return Ok(false);
        }
        Ok(self
            .elements()
            .all(|a| self.elements().all(|b| !i.contains(self.mul(a, b)) || i.contains(a) || i.contains(b))))
    }

    pub fn prime_ideals(&self) -> Vec<IdealSet> {
        self.ideals().iter().filter(|i| self.is_prime_ideal(i.elements()).unwrap_or(false)).cloned().collect()
    }

    /// `R ∖ P` for a prime ideal `P`.
    pub fn complement_mulset(&self, p: &ElementSet) -> Result<MultiplicativeSet> {
        if !self.is_prime_ideal(p).unwrap_or(false) {
            return Err(AlgebraError::InvalidParameter(format!("{p} is not a prime ideal")));
        }
        Ok(MultiplicativeSet(p.complement()))
    }

    pub fn maximal_ideals(&self) -> Vec<IdealSet> {
        let ideals = self.ideals();
        ideals
            .iter()
            .filter(|i| !i.0.is_full())
            .filter(|i| !ideals.iter().any(|j| !j.0.is_full() && j.0 != i.0 && i.0.is_subset(&j.0)))
            .cloned()
            .collect()
    }

    /// The maximal ideal when the ring is local, otherwise `None`.
    pub fn local_ring_maximal_ideal(&self) -> Option<IdealSet> {
        let mut maximal = self.maximal_ideals();
        if maximal.len() == 1 {
            maximal.pop()
        } else {
            None
        }
    }

    /// Elements not prime to `a`: `{ r : r·x ∈ a for some x ∉ a }`.
    ///
    /// Defined for any subset; it is empty when `a` is the whole ring.
    pub fn not_prime_subset(&self, a: &ElementSet) -> ElementSet {
        let outside = a.complement();
        ElementSet::from_indices(
            self.size,
            self.elements().filter(|&r| outside.iter().any(|x| a.contains(self.mul(r, x)))),
        )
    }

    /// A proper ideal is primal when the elements not prime to it form an ideal.
    pub fn is_primal_ideal(&self, i: &ElementSet) -> Result<bool> {
        if !self.is_ideal(i) {
            return Err(AlgebraError::InvalidIdeal(i.to_string()));
        }
        if i.is_full() {
            return Err(AlgebraError::NotProper);
        }
        Ok(self.is_ideal(&self.not_prime_subset(i)))
    }

    /// Every nonempty multiplicatively closed subset, in canonical set order.
    pub fn multiplicative_sets(&self) -> Result<Vec<MultiplicativeSet>> {
        if self.size > MULSET_ENUMERATION_CAP {
            return Err(AlgebraError::CapExceeded { size: self.size, cap: MULSET_ENUMERATION_CAP });
        }
        let n = self.size;
        let mut found = Vec::new();
        for mask in 1u64..(1u64 << n) {
            let closed = (0..n)
                .filter(|&x| mask >> x & 1 == 1)
                .all(|x| (0..n).filter(|&y| mask >> y & 1 == 1).all(|y| mask >> self.mul(x, y) & 1 == 1));
            if closed {
                found.push(MultiplicativeSet(ElementSet::from_indices(n, (0..n).filter(|&x| mask >> x & 1 == 1))));
            }
        }
        found.sort();
        Ok(found)
    }
}

/// Why a subset fails to be an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealViolation {
    Empty,
    /// `a - b` escapes the set.
    Difference {
        a: usize,
        b: usize,
    },
    /// `r·a` escapes the set.
    Absorption {
        r: usize,
        a: usize,
    },
}

/// An ideal of a [`FiniteRing`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealSet(ElementSet);

impl IdealSet {
    pub fn new(ring: &FiniteRing, elements: ElementSet) -> Result<Self> {
        if elements.universe() != ring.size() {
            return Err(AlgebraError::InvalidIdeal("universe mismatch".into()));
        }
        match ring.ideal_violation(&elements) {
            None => Ok(Self(elements)),
            Some(v) => Err(AlgebraError::InvalidIdeal(format!("{elements}: {v:?}"))),
        }
    }

    pub fn elements(&self) -> &ElementSet {
        &self.0
    }

    pub fn into_elements(self) -> ElementSet {
        self.0
    }
}

/// A nonempty multiplicatively closed subset. Need not contain one, may contain zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiplicativeSet(ElementSet);

impl MultiplicativeSet {
    pub fn new(ring: &FiniteRing, elements: ElementSet) -> Result<Self> {
        if ring.is_multiplicative_set(&elements) {
            Ok(Self(elements))
        } else {
            Err(AlgebraError::InvalidParameter(format!("{elements} is not a multiplicative set of {}", ring.name())))
        }
    }

    pub fn elements(&self) -> &ElementSet {
        &self.0
    }

    pub fn contains_zero(&self, ring: &FiniteRing) -> bool {
        self.0.contains(ring.zero())
    }

    /// Least element; used as the default denominator.
    pub fn least(&self) -> usize {
        self.0.first().expect("multiplicative sets are nonempty")
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A ring homomorphism given by its value on each source element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    table: Vec<usize>,
    target_size: usize,
}

impl RingMap {
    /// Checks that `table` preserves addition, multiplication, zero and one.
    pub fn new(source: &FiniteRing, target: &FiniteRing, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.size() || table.iter().any(|&y| y >= target.size()) {
            return Err(AlgebraError::InvalidParameter("map table does not fit the rings".into()));
        }
        if table[source.zero()] != target.zero() || table[source.one()] != target.one() {
            return Err(AlgebraError::InvalidParameter("map does not preserve zero and one".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if table[source.add(a, b)] != target.add(table[a], table[b])
                    || table[source.mul(a, b)] != target.mul(table[a], table[b])
                {
                    return Err(AlgebraError::InvalidParameter(format!(
                        "map does not preserve operations at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self { table, target_size: target.size() })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        self.table.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target_size];
        for &y in &self.table {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn image(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.target_size, set.iter().map(|x| self.table[x]))
    }
}

/// The integers modulo `n`; index `k` is the residue `k`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter("modulus must be positive".into()));
    }
    if n > DEFAULT_SIZE_CAP {
        return Err(AlgebraError::CapExceeded { size: n, cap: DEFAULT_SIZE_CAP });
    }
    let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    let labels = (0..n).map(|k| k.to_string()).collect();
    FiniteRing::from_flat(format!("Z{n}"), n, add, mul, 0, 1 % n, labels)
}

/// Componentwise product; the pair `(a, b)` has index `a * |second| + b`.
pub fn product_ring(first: &FiniteRing, second: &FiniteRing) -> Result<FiniteRing> {
    let (n1, n2) = (first.size(), second.size());
    let n = n1 * n2;
    if n > DEFAULT_SIZE_CAP {
        return Err(AlgebraError::CapExceeded { size: n, cap: DEFAULT_SIZE_CAP });
    }
    let split = |x: usize| (x / n2, x % n2);
    let join = |a: usize, b: usize| a * n2 + b;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1) = split(x);
        for y in 0..n {
            let (a2, b2) = split(y);
            add.push(join(first.add(a1, a2), second.add(b1, b2)));
            mul.push(join(first.mul(a1, a2), second.mul(b1, b2)));
        }
    }
    let inner = |label: &str| {
        label
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .map(str::to_string)
            .unwrap_or_else(|| label.to_string())
    };
    let labels = (0..n)
        .map(|x| {
            let (a, b) = split(x);
            format!("({},{})", inner(first.label(a)), second.label(b))
        })
        .collect();
    FiniteRing::from_flat(
        format!("{}x{}", first.name(), second.name()),
        n,
        add,
        mul,
        join(first.zero(), second.zero()),
        join(first.one(), second.one()),
        labels,
    )
}

/// Partition of a carrier into cosets of a subgroup.
///
/// Cosets are numbered by their least element, so the coset of zero is
/// first whenever zero is index 0.
pub(crate) struct Cosets {
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl Cosets {
    pub fn new(size: usize, subgroup: &ElementSet, add: impl Fn(usize, usize) -> usize) -> Self {
        let mut rep_of = vec![usize::MAX; size];
        for x in 0..size {
            rep_of[x] = subgroup.iter().map(|h| add(x, h)).min().expect("subgroup contains zero");
        }
        let mut representatives: Vec<usize> = rep_of.clone();
        representatives.sort_unstable();
        representatives.dedup();
        let class_of =
            rep_of.iter().map(|r| representatives.binary_search(r).expect("representative present")).collect();
        Self { class_of, representatives }
    }
}

/// `R / I` with cosets as elements, and the canonical surjection.
pub fn quotient_ring(ring: &FiniteRing, ideal: &ElementSet) -> Result<(FiniteRing, RingMap)> {
    if !ring.is_ideal(ideal) {
        return Err(AlgebraError::InvalidIdeal(ideal.to_string()));
    }
    let cosets = Cosets::new(ring.size(), ideal, |a, b| ring.add(a, b));
    let reps = &cosets.representatives;
    let n = reps.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in reps {
        for &b in reps {
            add.push(cosets.class_of[ring.add(a, b)]);
            mul.push(cosets.class_of[ring.mul(a, b)]);
        }
    }
    let labels = reps.iter().map(|&r| format!("[{}]", ring.label(r))).collect();
    let quotient = FiniteRing::from_flat(
        format!("{}/{}", ring.name(), ideal),
        n,
        add,
        mul,
        cosets.class_of[ring.zero()],
        cosets.class_of[ring.one()],
        labels,
    )?;
    let map = RingMap::new(ring, &quotient, cosets.class_of)?;
    Ok((quotient, map))
}

/// Brute-force search for a ring isomorphism `a → b`.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<RingMap> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut table = vec![usize::MAX; n];
    let mut used = vec![false; n];
    table[a.zero()] = b.zero();
    used[b.zero()] = true;
    if a.one() != a.zero() {
        table[a.one()] = b.one();
        used[b.one()] = true;
    }

    fn consistent(a: &FiniteRing, b: &FiniteRing, table: &[usize]) -> bool {
        for x in a.elements().filter(|&x| table[x] != usize::MAX) {
            for y in a.elements().filter(|&y| table[y] != usize::MAX) {
                let s = table[a.add(x, y)];
                if s != usize::MAX && s != b.add(table[x], table[y]) {
                    return false;
                }
                let p = table[a.mul(x, y)];
                if p != usize::MAX && p != b.mul(table[x], table[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn extend(a: &FiniteRing, b: &FiniteRing, table: &mut [usize], used: &mut [bool]) -> bool {
        let Some(x) = table.iter().position(|&t| t == usize::MAX) else {
            return true;
        };
        for y in b.elements() {
            if used[y] {
                continue;
            }
            table[x] = y;
            used[y] = true;
            if consistent(a, b, table) && extend(a, b, table, used) {
                return true;
            }
            table[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if !consistent(a, b, &table) || !extend(a, b, &mut table, &mut used) {
        return None;
    }
    RingMap::new(a, b, table).ok()
}
