//! Closure and enumeration of subsets closed under addition and a scalar
//! action. Shared by ideal enumeration (ring acting on itself) and submodule
//! enumeration.

use std::collections::{HashSet, VecDeque};

use crate::set::ElementSet;

/// An abelian group carrier with a scalar action, both as flat tables.
///
/// `add[a * size + b]` is `a + b` and `action[r * size + m]` is `r·m`.
pub(crate) struct Carrier<'a> {
    pub size: usize,
    pub zero: usize,
    pub add: &'a [usize],
    pub scalars: usize,
    pub action: &'a [usize],
}

impl Carrier<'_> {
    /// Smallest subset containing `seed` and zero, closed under `+` and the action.
    pub fn close(&self, seed: &ElementSet) -> ElementSet {
        let mut set = seed.clone();
        set.insert(self.zero);
        let mut pending: Vec<usize> = set.iter().collect();
        while let Some(x) = pending.pop() {
            for r in 0..self.scalars {
                let y = self.action[r * self.size + x];
                if set.insert(y) {
                    pending.push(y);
                }
            }
            let snapshot: Vec<usize> = set.iter().collect();
            for y in snapshot {
                let z = self.add[x * self.size + y];
                if set.insert(z) {
                    pending.push(z);
                }
            }
        }
        set
    }

    pub fn is_closed(&self, set: &ElementSet) -> bool {
        if !set.contains(self.zero) {
            return false;
        }
        for x in set.iter() {
            if (0..self.scalars).any(|r| !set.contains(self.action[r * self.size + x])) {
                return false;
            }
            if set.iter().any(|y| !set.contains(self.add[x * self.size + y])) {
                return false;
            }
        }
        true
    }

    /// Every closed subset, sorted by (cardinality, elements).
    ///
    /// Breadth-first from the zero subset: each known closed set is extended
    /// by one outside element and closed again.
    pub fn enumerate(&self) -> Vec<ElementSet> {
        let cyclic: Vec<ElementSet> =
            (0..self.size).map(|x| self.close(&ElementSet::singleton(self.size, x))).collect();
        let bottom = self.close(&ElementSet::empty(self.size));
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(bottom.clone());
        queue.push_back(bottom);
        while let Some(current) = queue.pop_front() {
            for x in 0..self.size {
                if current.contains(x) {
                    continue;
                }
                let grown = self.close(&current.union(&cyclic[x]));
                if seen.insert(grown.clone()) {
                    queue.push_back(grown);
                }
            }
        }
        let mut all: Vec<ElementSet> = seen.into_iter().collect();
        all.sort();
        all
    }
}
