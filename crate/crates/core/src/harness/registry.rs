//! The registered statements.

use super::{CheckKind, Instance, ModuleProperty, PropositionCheck, Shape};
use crate::error::{AlgebraError, Result};
use crate::instance::{ModuleSpec, RingSpec};
use crate::module::{FiniteModule, Submodule};
use crate::properties::{
    is_complementary, is_essential, is_maximal, is_primal, is_prime_submodule, is_prime_via_element_criterion,
    is_prime_via_ideal_criterion, is_small_in, is_supplemented_submodule,
};
use crate::ring::FiniteRing;
use crate::set::ElementSet;

/// Collects the labels of failing clauses.
#[derive(Default)]
struct Clauses(Vec<&'static str>);

impl Clauses {
    fn require(&mut self, label: &'static str, holds: bool) {
        if !holds {
            self.0.push(label);
        }
    }

    fn iff(&mut self, label: &'static str, left: bool, right: bool) {
        self.require(label, left == right);
    }

    fn done(self) -> Result<Vec<&'static str>> {
        Ok(self.0)
    }
}

fn proper(inst: &Instance) -> Result<bool> {
    Ok(inst.module().is_proper(inst.n()?))
}

/// `S(N)`, taken as empty for `N = M` so that conclusions stay total.
fn s_of(m: &FiniteModule, n: &Submodule) -> Result<ElementSet> {
    if m.is_proper(n) {
        Ok(m.not_prime_set(n)?.into_elements())
    } else {
        Ok(ElementSet::empty(m.ring().size()))
    }
}

/// Primal ideal, false for the whole ring.
fn primal_ideal(ring: &FiniteRing, i: &ElementSet) -> Result<bool> {
    Ok(!i.is_full() && ring.is_primal_ideal(i)?)
}

fn primal(m: &FiniteModule, n: &Submodule) -> Result<bool> {
    Ok(m.is_proper(n) && is_primal(m, n)?.holds)
}

fn small(m: &FiniteModule, n: &Submodule) -> Result<bool> {
    is_small_in(m, n, &m.full_submodule())
}

fn disjoint_from_mulset(inst: &Instance) -> Result<bool> {
    let m = inst.module();
    let n = inst.n()?;
    Ok(m.is_proper(n) && s_of(m, n)?.is_disjoint(inst.require_mulset()?.elements()))
}

fn stable_under_mulset(m: &FiniteModule, n: &Submodule, inst: &Instance) -> Result<bool> {
    for s in inst.require_mulset()?.iter() {
        if m.colon_element(n, s)? != *n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `N_S` of the focus submodule.
fn n_local(inst: &Instance) -> Result<Submodule> {
    inst.local()?.localize_submodule(inst.n()?)
}

fn prime_agreement(
    inst: &Instance,
    criterion: fn(&FiniteModule, &Submodule) -> Result<crate::PropertyVerdict>,
) -> Result<bool> {
    let m = inst.module();
    let n = inst.n()?;
    Ok(is_prime_submodule(m, n)?.holds == criterion(m, n)?.holds)
}

// Shared clause groups.

fn module_transfers(inst: &Instance, clauses: &mut Clauses, which: &[(ModuleProperty, &'static str)]) -> Result<()> {
    for &(property, label) in which {
        clauses.iff(label, inst.base_property(property)?, inst.local_property(property)?);
    }
    Ok(())
}

const COATOMIC: (ModuleProperty, &str) = (ModuleProperty::Coatomic, "M coatomic iff M_S coatomic");
const REDUCED: (ModuleProperty, &str) = (ModuleProperty::Reduced, "M reduced iff M_S reduced");
const HOLLOW: (ModuleProperty, &str) = (ModuleProperty::Hollow, "M hollow iff M_S hollow");
const LIFTING: (ModuleProperty, &str) = (ModuleProperty::Lifting, "M lifting iff M_S lifting");
const LOCAL: (ModuleProperty, &str) = (ModuleProperty::Local, "M local iff M_S local");

fn rad_clause(inst: &Instance, clauses: &mut Clauses) -> Result<()> {
    let m = inst.module();
    let local = inst.local()?;
    let rad_of_local = local.module().rad_of_submodule(&n_local(inst)?)?;
    let local_of_rad = local.localize_submodule(&m.rad_of_submodule(inst.n()?)?)?;
    clauses.require("Rad(N_S) = (Rad N)_S", rad_of_local == local_of_rad);
    Ok(())
}

/// Items shared by the local-ring and unit-set corollaries: the five module
/// transfers, then maximal, essential, small, supplemented and Rad for `N`.
fn ten_transfers(inst: &Instance, clauses: &mut Clauses) -> Result<()> {
    module_transfers(inst, clauses, &[COATOMIC, REDUCED, HOLLOW, LIFTING, LOCAL])?;
    let m = inst.module();
    let n = inst.n()?;
    let ms = inst.local()?.module();
    let ns = n_local(inst)?;
    clauses.iff("N maximal iff N_S maximal", is_maximal(m, n)?.holds, is_maximal(ms, &ns)?.holds);
    clauses.iff("N essential iff N_S essential", is_essential(m, n)?.holds, is_essential(ms, &ns)?.holds);
    clauses.iff("N small iff N_S small", small(m, n)?, small(ms, &ns)?);
    clauses.iff(
        "N supplemented iff N_S supplemented",
        is_supplemented_submodule(m, n)?.holds,
        is_supplemented_submodule(ms, &ns)?.holds,
    );
    rad_clause(inst, clauses)
}

// Hypotheses.

fn hyp_proper(inst: &Instance) -> Result<bool> {
    proper(inst)
}

fn hyp_primal(inst: &Instance) -> Result<bool> {
    primal(inst.module(), inst.n()?)
}

fn hyp_complementary(inst: &Instance) -> Result<bool> {
    let m = inst.module();
    let n = inst.n()?;
    Ok(m.is_proper(n) && is_complementary(m, n)?.holds)
}

fn hyp_complementary_primal_colon(inst: &Instance) -> Result<bool> {
    if !hyp_complementary(inst)? {
        return Ok(false);
    }
    let colon = inst.module().annihilator_colon(inst.n()?)?;
    primal_ideal(inst.ring(), colon.elements())
}

fn hyp_subset_disjoint(inst: &Instance) -> Result<bool> {
    let a = inst.ring_subset().ok_or_else(|| AlgebraError::SignatureMismatch("ring subset required".into()))?;
    Ok(!a.is_empty() && inst.ring().not_prime_subset(a).is_disjoint(inst.require_mulset()?.elements()))
}

fn hyp_stable(inst: &Instance) -> Result<bool> {
    Ok(proper(inst)? && stable_under_mulset(inst.module(), inst.n()?, inst)?)
}

fn hyp_zero_colon_trivial(inst: &Instance) -> Result<bool> {
    let m = inst.module();
    let zero = m.zero_submodule();
    Ok(m.colon_set(&zero, inst.require_mulset()?.elements())? == zero)
}

fn hyp_lifts(_: &Instance) -> Result<bool> {
    Ok(true)
}

fn hyp_all_stable_proper_n(inst: &Instance) -> Result<bool> {
    Ok(proper(inst)? && inst.all_proper_stable()?)
}

fn hyp_all_stable(inst: &Instance) -> Result<bool> {
    inst.all_proper_stable()
}

fn hyp_all_disjoint(inst: &Instance) -> Result<bool> {
    inst.all_proper_disjoint()
}

/// `S = R ∖ P` for a prime ideal `P` containing `S(K)` for every proper `K`.
fn hyp_prime_complement(inst: &Instance) -> Result<bool> {
    let ring = inst.ring();
    let p = inst.require_mulset()?.elements().complement();
    if !ring.is_ideal(&p) || !ring.is_prime_ideal(&p)? {
        return Ok(false);
    }
    let m = inst.module();
    for k in m.proper_submodules()? {
        if !s_of(m, k)?.is_subset(&p) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn hyp_local_ring_primal(inst: &Instance) -> Result<bool> {
    let ring = inst.ring();
    let Some(p) = ring.local_ring_maximal_ideal() else {
        return Ok(false);
    };
    Ok(*inst.require_mulset()?.elements() == p.elements().complement() && hyp_primal(inst)?)
}

fn hyp_units_primal(inst: &Instance) -> Result<bool> {
    Ok(inst.require_mulset()? == &inst.ring().units() && hyp_primal(inst)?)
}

fn hyp_z6_regular(inst: &Instance) -> Result<bool> {
    Ok(*inst.ring_spec() == RingSpec::zn(6) && *inst.module_spec() == ModuleSpec::Regular && proper(inst)?)
}

// Conclusions.

fn concl_prime_ideal_criterion(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    c.require("prime iff ideal criterion", prime_agreement(inst, is_prime_via_ideal_criterion)?);
    c.done()
}

fn concl_prime_element_criterion(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    c.require("prime iff element criterion", prime_agreement(inst, is_prime_via_element_criterion)?);
    c.done()
}

fn concl_colon_inside_s(inst: &Instance) -> Result<Vec<&'static str>> {
    let m = inst.module();
    let n = inst.n()?;
    let colon = m.annihilator_colon(n)?.into_elements();
    let s_n = s_of(m, n)?;
    let mut c = Clauses::default();
    c.require("S(N:M) within S(N)", inst.ring().not_prime_subset(&colon).is_subset(&s_n));
    c.require("N:M within S(N)", colon.is_subset(&s_n));
    c.done()
}

fn concl_s_of_colon_covers(inst: &Instance) -> Result<Vec<&'static str>> {
    let m = inst.module();
    let n = inst.n()?;
    let colon = m.annihilator_colon(n)?.into_elements();
    let mut c = Clauses::default();
    c.require("S(N) within S(N:M)", s_of(m, n)?.is_subset(&inst.ring().not_prime_subset(&colon)));
    c.done()
}

fn concl_colon_primal(inst: &Instance) -> Result<Vec<&'static str>> {
    let colon = inst.module().annihilator_colon(inst.n()?)?;
    let mut c = Clauses::default();
    c.require("N:M primal", primal_ideal(inst.ring(), colon.elements())?);
    c.done()
}

fn concl_complementary_primal(inst: &Instance) -> Result<Vec<&'static str>> {
    let m = inst.module();
    let n = inst.n()?;
    let colon = m.annihilator_colon(n)?.into_elements();
    let mut c = Clauses::default();
    c.require("S(N) = S(N:M)", s_of(m, n)? == inst.ring().not_prime_subset(&colon));
    c.require("N primal", primal(m, n)?);
    c.done()
}

fn concl_primal_iff_colon_primal(inst: &Instance) -> Result<Vec<&'static str>> {
    let m = inst.module();
    let n = inst.n()?;
    let colon = m.annihilator_colon(n)?;
    let mut c = Clauses::default();
    c.iff("N primal iff N:M primal", primal(m, n)?, primal_ideal(inst.ring(), colon.elements())?);
    c.done()
}

fn concl_subset_ideal_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let a = inst.ring_subset().ok_or_else(|| AlgebraError::SignatureMismatch("ring subset required".into()))?;
    let lr = inst.local()?.localized_ring();
    let image = lr.localize_ring_subset(a)?;
    let mut c = Clauses::default();
    c.iff("A ideal iff A_S ideal", inst.ring().is_ideal(a), lr.ring().is_ideal(&image));
    c.done()
}

fn concl_s_ideal_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let s_n = s_of(inst.module(), inst.n()?)?;
    let lr = inst.local()?.localized_ring();
    let mut c = Clauses::default();
    let localized_is_ideal = !s_n.is_empty() && lr.ring().is_ideal(&lr.localize_ring_subset(&s_n)?);
    c.iff("S(N) ideal iff S(N)_S ideal", inst.ring().is_ideal(&s_n), localized_is_ideal);
    c.done()
}

fn concl_s_commutes(inst: &Instance) -> Result<Vec<&'static str>> {
    let local = inst.local()?;
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    if local.module().is_proper(&ns) {
        let s_n = s_of(inst.module(), inst.n()?)?;
        let expected = local.localized_ring().localize_ring_subset(&s_n)?;
        c.require("S(N_S) = S(N)_S", s_of(local.module(), &ns)? == expected);
    } else {
        c.require("N_S proper", false);
    }
    c.done()
}

fn concl_primal_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let local = inst.local()?;
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    let ns_proper = local.module().is_proper(&ns);
    c.require("N_S proper", ns_proper);
    if ns_proper {
        c.iff("N primal iff N_S primal", primal(inst.module(), inst.n()?)?, primal(local.module(), &ns)?);
    }
    c.done()
}

fn concl_prime_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    c.iff(
        "N prime iff N_S prime",
        is_prime_submodule(inst.module(), inst.n()?)?.holds,
        is_prime_submodule(inst.local()?.module(), &ns)?.holds,
    );
    c.done()
}

fn concl_lift_round_trip(inst: &Instance) -> Result<Vec<&'static str>> {
    let local = inst.local()?;
    let ms = local.module();
    let mut c = Clauses::default();
    let mut round_trip = true;
    let mut properness = true;
    for nprime in ms.submodules()? {
        let lifted = local.lift_submodule(nprime)?;
        round_trip &= local.localize_submodule(&lifted)? == *nprime;
        properness &= inst.module().is_proper(&lifted) == ms.is_proper(nprime);
    }
    c.require("lift then localize is the identity", round_trip);
    c.require("lift proper iff N' proper", properness);
    c.done()
}

fn concl_essential_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    c.iff(
        "N essential iff N_S essential",
        is_essential(inst.module(), inst.n()?)?.holds,
        is_essential(inst.local()?.module(), &ns)?.holds,
    );
    c.done()
}

fn concl_small_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    c.iff("N small iff N_S small", small(inst.module(), inst.n()?)?, small(inst.local()?.module(), &ns)?);
    c.done()
}

fn concl_supplemented_forward(inst: &Instance) -> Result<Vec<&'static str>> {
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    let base = is_supplemented_submodule(inst.module(), inst.n()?)?.holds;
    let local = is_supplemented_submodule(inst.local()?.module(), &ns)?.holds;
    c.require("N supplemented implies N_S supplemented", !base || local);
    c.done()
}

fn concl_supplemented_reverse(inst: &Instance) -> Result<Vec<&'static str>> {
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    let base = is_supplemented_submodule(inst.module(), inst.n()?)?.holds;
    let local = is_supplemented_submodule(inst.local()?.module(), &ns)?.holds;
    c.require("N_S supplemented implies N supplemented", !local || base);
    c.done()
}

fn concl_hollow(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    module_transfers(inst, &mut c, &[HOLLOW])?;
    c.done()
}

fn concl_lifting(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    module_transfers(inst, &mut c, &[LIFTING])?;
    c.done()
}

fn concl_coatomic(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    module_transfers(inst, &mut c, &[COATOMIC])?;
    c.done()
}

fn concl_reduced(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    module_transfers(inst, &mut c, &[REDUCED])?;
    c.done()
}

fn concl_local(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    module_transfers(inst, &mut c, &[LOCAL])?;
    c.done()
}

fn concl_maximal_transfer(inst: &Instance) -> Result<Vec<&'static str>> {
    let ns = n_local(inst)?;
    let mut c = Clauses::default();
    c.iff(
        "N maximal iff N_S maximal",
        is_maximal(inst.module(), inst.n()?)?.holds,
        is_maximal(inst.local()?.module(), &ns)?.holds,
    );
    c.done()
}

fn concl_rad(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    rad_clause(inst, &mut c)?;
    c.done()
}

fn concl_equality_detected(inst: &Instance) -> Result<Vec<&'static str>> {
    let local = inst.local()?;
    let n = inst.n()?;
    let l = inst.l()?;
    let mut c = Clauses::default();
    c.iff("N = L iff N_S = L_S", n == l, local.localize_submodule(n)? == local.localize_submodule(l)?);
    c.done()
}

fn concl_p_sum(inst: &Instance) -> Result<Vec<&'static str>> {
    let local = inst.local()?;
    let mut c = Clauses::default();
    c.require("P(M_S) = P(M)_S", local.module().p_sum()? == local.localize_submodule(&inst.module().p_sum()?)?);
    c.done()
}

fn concl_stable(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    c.require("N:p = N for every p in S", stable_under_mulset(inst.module(), inst.n()?, inst)?);
    c.done()
}

fn concl_prime_complement(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    module_transfers(inst, &mut c, &[COATOMIC, REDUCED, HOLLOW, LIFTING, LOCAL])?;
    let m = inst.module();
    let n = inst.n()?;
    let local = inst.local()?;
    let ms = local.module();
    let ns = n_local(inst)?;
    c.iff("N maximal iff N_S maximal", is_maximal(m, n)?.holds, is_maximal(ms, &ns)?.holds);
    if m.is_proper(n) {
        let ns_proper = ms.is_proper(&ns);
        c.require("N_S proper", ns_proper);
        if ns_proper {
            c.iff(
                "S(N) ideal iff S(N_S) ideal",
                inst.ring().is_ideal(&s_of(m, n)?),
                local.localized_ring().ring().is_ideal(&s_of(ms, &ns)?),
            );
            c.iff("N primal iff N_S primal", primal(m, n)?, primal(ms, &ns)?);
        }
        c.iff("N essential iff N_S essential", is_essential(m, n)?.holds, is_essential(ms, &ns)?.holds);
        c.iff("N small iff N_S small", small(m, n)?, small(ms, &ns)?);
        c.iff(
            "N supplemented iff N_S supplemented",
            is_supplemented_submodule(m, n)?.holds,
            is_supplemented_submodule(ms, &ns)?.holds,
        );
        rad_clause(inst, &mut c)?;
    }
    c.done()
}

fn concl_local_ring(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    let p = inst.require_mulset()?.elements().complement();
    c.require("S(N) within P", s_of(inst.module(), inst.n()?)?.is_subset(&p));
    ten_transfers(inst, &mut c)?;
    c.done()
}

fn concl_units(inst: &Instance) -> Result<Vec<&'static str>> {
    let mut c = Clauses::default();
    c.require("S(N) disjoint from S", disjoint_from_mulset(inst)?);
    ten_transfers(inst, &mut c)?;
    c.done()
}

fn concl_z6_goldens(inst: &Instance) -> Result<Vec<&'static str>> {
    if !hyp_z6_regular(inst)? {
        return Ok(vec!["no pinned value for this submodule"]);
    }
    let n = inst.n()?.to_vec();
    let expected: &[usize] = match n.as_slice() {
        [0] => &[0, 2, 3, 4],
        [0, 2, 4] => &[0, 2, 4],
        [0, 3] => &[0, 3],
        _ => return Ok(vec!["no pinned value for this submodule"]),
    };
    let s_n = s_of(inst.module(), inst.n()?)?;
    let mut c = Clauses::default();
    c.require("S(N) matches the pinned value", s_n.to_vec() == expected);
    c.require("S(N) is an ideal exactly when N is nonzero", inst.ring().is_ideal(&s_n) == (n != [0]));
    c.done()
}

macro_rules! check {
    ($id:literal, $kind:ident, $shape:ident, $localized:literal, $heavy:literal, $summary:literal, $hyp:ident, $concl:ident) => {
        PropositionCheck {
            id: $id,
            kind: CheckKind::$kind,
            shape: Shape::$shape,
            localized: $localized,
            lattice_heavy: $heavy,
            summary: $summary,
            hypothesis: $hyp,
            conclusion: $concl,
        }
    };
}

static REGISTRY: &[PropositionCheck] = &[
    check!(
        "3.1",
        Theorem,
        Submodule,
        false,
        false,
        "N proper: N prime iff the ideal criterion holds",
        hyp_proper,
        concl_prime_ideal_criterion
    ),
    check!(
        "3.2",
        Theorem,
        Submodule,
        false,
        false,
        "N proper: N prime iff the element criterion holds",
        hyp_proper,
        concl_prime_element_criterion
    ),
    check!(
        "3.3",
        Theorem,
        Submodule,
        false,
        false,
        "N proper: S(N:M) and N:M lie in S(N)",
        hyp_proper,
        concl_colon_inside_s
    ),
    check!("3.4", Theorem, Submodule, false, false, "N primal: N:M is a primal ideal", hyp_primal, concl_colon_primal),
    check!(
        "3.6",
        Theorem,
        Submodule,
        false,
        false,
        "N complementary, N:M primal: S(N) = S(N:M) and N primal",
        hyp_complementary_primal_colon,
        concl_complementary_primal
    ),
    check!(
        "3.7",
        Theorem,
        Submodule,
        false,
        false,
        "N complementary: N primal iff N:M primal",
        hyp_complementary,
        concl_primal_iff_colon_primal
    ),
    check!(
        "3.8",
        Theorem,
        RingSubset,
        true,
        false,
        "S(A) disjoint from S: A ideal iff A_S ideal",
        hyp_subset_disjoint,
        concl_subset_ideal_transfer
    ),
    check!(
        "3.9",
        Theorem,
        Submodule,
        true,
        false,
        "S(N) disjoint from S: S(N) ideal iff S(N)_S ideal",
        disjoint_from_mulset,
        concl_s_ideal_transfer
    ),
    check!(
        "3.10",
        Theorem,
        Submodule,
        true,
        false,
        "S(N) disjoint from S: S(N_S) = S(N)_S",
        disjoint_from_mulset,
        concl_s_commutes
    ),
    check!(
        "3.11",
        Theorem,
        Submodule,
        true,
        false,
        "S(N) disjoint from S: N_S proper, N primal iff N_S primal",
        disjoint_from_mulset,
        concl_primal_transfer
    ),
    check!(
        "3.13",
        Theorem,
        Submodule,
        true,
        false,
        "N:s = N for all s: N prime iff N_S prime",
        hyp_stable,
        concl_prime_transfer
    ),
    check!(
        "3.16",
        Theorem,
        Module,
        true,
        false,
        "every submodule of M_S is the localization of its lift",
        hyp_lifts,
        concl_lift_round_trip
    ),
    check!(
        "3.17",
        Theorem,
        Submodule,
        true,
        false,
        "0:S = 0: N essential iff N_S essential",
        hyp_zero_colon_trivial,
        concl_essential_transfer
    ),
    check!(
        "3.19.1",
        Theorem,
        Submodule,
        true,
        false,
        "K:s = K for all proper K: N small iff N_S small",
        hyp_all_stable_proper_n,
        concl_small_transfer
    ),
    check!(
        "3.19.2",
        Theorem,
        Submodule,
        true,
        true,
        "K:s = K for all proper K: N supplemented implies N_S supplemented",
        hyp_all_stable_proper_n,
        concl_supplemented_forward
    ),
    check!(
        "3.19.3",
        Theorem,
        Module,
        true,
        false,
        "K:s = K for all proper K: M hollow iff M_S hollow",
        hyp_all_stable,
        concl_hollow
    ),
    check!(
        "3.19.4",
        Theorem,
        Module,
        true,
        true,
        "K:s = K for all proper K: M lifting iff M_S lifting",
        hyp_all_stable,
        concl_lifting
    ),
    check!(
        "3.21",
        Theorem,
        Submodule,
        true,
        false,
        "S(K) disjoint from S for all K: N maximal iff N_S maximal",
        hyp_all_disjoint,
        concl_maximal_transfer
    ),
    check!(
        "3.22.1",
        Theorem,
        Submodule,
        true,
        false,
        "S(K) disjoint from S for all K: Rad(N_S) = (Rad N)_S",
        hyp_all_disjoint,
        concl_rad
    ),
    check!(
        "3.22.2",
        Theorem,
        SubmodulePair,
        true,
        false,
        "S(K) disjoint from S for all K: N = L iff N_S = L_S",
        hyp_all_disjoint,
        concl_equality_detected
    ),
    check!(
        "3.22.3",
        Theorem,
        Module,
        true,
        false,
        "S(K) disjoint from S for all K: P(M_S) = P(M)_S",
        hyp_all_disjoint,
        concl_p_sum
    ),
    check!(
        "3.23",
        Theorem,
        Submodule,
        true,
        false,
        "S(N) disjoint from S: N:p = N for every p in S",
        disjoint_from_mulset,
        concl_stable
    ),
    check!(
        "3.24.1",
        Theorem,
        Module,
        true,
        false,
        "S(K) disjoint from S for proper K: M coatomic iff M_S coatomic",
        hyp_all_disjoint,
        concl_coatomic
    ),
    check!(
        "3.24.2",
        Theorem,
        Module,
        true,
        false,
        "S(K) disjoint from S for proper K: M reduced iff M_S reduced",
        hyp_all_disjoint,
        concl_reduced
    ),
    check!(
        "3.24.3",
        Theorem,
        Module,
        true,
        false,
        "S(K) disjoint from S for proper K: M local iff M_S local",
        hyp_all_disjoint,
        concl_local
    ),
    check!(
        "3.26",
        Theorem,
        Submodule,
        true,
        true,
        "S = R minus a prime P containing every S(K): twelve transfers",
        hyp_prime_complement,
        concl_prime_complement
    ),
    check!(
        "3.28",
        Theorem,
        Submodule,
        true,
        true,
        "R local, S = R minus its maximal ideal, N primal: ten transfers",
        hyp_local_ring_primal,
        concl_local_ring
    ),
    check!("3.30", Theorem, Submodule, true, true, "S = units, N primal: ten transfers", hyp_units_primal, concl_units),
    check!(
        "3.3-converse",
        Finding,
        Submodule,
        false,
        false,
        "N proper: S(N) lies in S(N:M)",
        hyp_proper,
        concl_s_of_colon_covers
    ),
    check!(
        "3.19.2-reverse",
        Finding,
        Submodule,
        true,
        true,
        "K:s = K for all proper K: N_S supplemented implies N supplemented",
        hyp_all_stable_proper_n,
        concl_supplemented_reverse
    ),
    check!(
        "3.20-goldens",
        Finding,
        Submodule,
        false,
        false,
        "not-prime sets of the proper submodules of Z6",
        hyp_z6_regular,
        concl_z6_goldens
    ),
];

pub fn registry() -> &'static [PropositionCheck] {
    REGISTRY
}

/// Every theorem id, in registry order; what `all` expands to.
pub fn theorem_ids() -> Vec<&'static str> {
    REGISTRY.iter().filter(|p| p.kind == CheckKind::Theorem).map(|p| p.id).collect()
}

pub fn lookup(id: &str) -> Result<&'static PropositionCheck> {
    REGISTRY.iter().find(|p| p.id == id).ok_or_else(|| AlgebraError::UnknownProposition(id.to_string()))
}
