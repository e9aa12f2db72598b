//! Shared fixtures for the criterion benches.

use std::sync::Arc;

use modloc_core::{make_zn, product_ring, regular_module, FiniteModule, FiniteRing, MultiplicativeSet};

pub fn zn(n: usize) -> Arc<FiniteRing> {
    Arc::new(make_zn(n).expect("n is positive"))
}

/// `Z2 × Z2 × Z2`.
pub fn boolean_cube() -> Arc<FiniteRing> {
    let z2 = make_zn(2).expect("n is positive");
    let square = product_ring(&z2, &z2).expect("small product");
    Arc::new(product_ring(&square, &z2).expect("small product"))
}

/// A fresh regular module, so lattice caches start empty.
pub fn regular(ring: &Arc<FiniteRing>) -> Arc<FiniteModule> {
    Arc::new(regular_module(ring))
}

pub fn mulset(ring: &FiniteRing, elements: &[usize]) -> MultiplicativeSet {
    let set = ring.subset(elements.iter().copied()).expect("elements are in the ring");
    MultiplicativeSet::new(ring, set).expect("fixture sets are multiplicative")
}
