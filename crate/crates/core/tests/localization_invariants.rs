use std::sync::OnceLock;

use modloc_core::{Corpus, CorpusConfig, ElementSet, Instance, MODULE_SIZE_CAP};

fn contexts() -> &'static [Instance] {
    static CONTEXTS: OnceLock<Vec<Instance>> = OnceLock::new();
    CONTEXTS.get_or_init(|| Corpus::build(CorpusConfig::standard()).unwrap().contexts(true, MODULE_SIZE_CAP))
}

#[test]
fn canonical_ring_map_is_a_homomorphism() {
    for inst in contexts() {
        let lr = inst.local().unwrap().localized_ring();
        let (r, rs) = (lr.base(), lr.ring());
        let phi = lr.canonical();
        assert_eq!(phi.apply(r.one()), rs.one(), "{inst:?}");
        for a in r.elements() {
            for b in r.elements() {
                assert_eq!(phi.apply(r.add(a, b)), rs.add(phi.apply(a), phi.apply(b)), "{inst:?}");
                assert_eq!(phi.apply(r.mul(a, b)), rs.mul(phi.apply(a), phi.apply(b)), "{inst:?}");
            }
        }
    }
}

#[test]
fn canonical_module_map_is_linear() {
    for inst in contexts() {
        let lm = inst.local().unwrap();
        let phi = lm.localized_ring().canonical();
        let (m, ms) = (inst.module(), lm.module());
        for x in m.elements() {
            for y in m.elements() {
                assert_eq!(lm.canonical(m.add(x, y)), ms.add(lm.canonical(x), lm.canonical(y)), "{inst:?}");
            }
            for r in m.ring().elements() {
                assert_eq!(lm.canonical(m.act(r, x)), ms.act(phi.apply(r), lm.canonical(x)), "{inst:?}");
            }
        }
    }
}

#[test]
fn kernel_is_killed_by_the_mulset() {
    for inst in contexts() {
        let lm = inst.local().unwrap();
        let m = inst.module();
        let s = inst.mulset().unwrap();
        for x in m.elements() {
            let killed = s.iter().any(|q| m.act(q, x) == m.zero());
            assert_eq!(lm.canonical(x) == lm.module().zero(), killed, "{inst:?} x={x}");
        }
    }
}

#[test]
fn every_fraction_is_a_quotient_of_an_image() {
    for inst in contexts() {
        let lm = inst.local().unwrap();
        let ms = lm.module();
        let lr = lm.localized_ring();
        let s = inst.mulset().unwrap();
        for x in inst.module().elements() {
            for d in s.iter() {
                let f = lm.fraction(x, d);
                assert_eq!(ms.act(lr.fraction(d, d), f), f, "{inst:?}");
                assert_eq!(ms.act(lr.canonical().apply(d), f), lm.canonical(x), "{inst:?} {x}/{d}");
            }
        }
    }
}

#[test]
fn lift_of_a_localization_is_the_saturation() {
    for inst in contexts() {
        let lm = inst.local().unwrap();
        let m = inst.module();
        let s = inst.mulset().unwrap();
        for n in m.submodules().unwrap() {
            let lifted = lm.lift_submodule(&lm.localize_submodule(n).unwrap()).unwrap();
            let saturation =
                ElementSet::from_indices(m.size(), m.elements().filter(|&x| s.iter().any(|q| n.contains(m.act(q, x)))));
            assert_eq!(*lifted.elements(), saturation, "{inst:?} N={n}");
            assert!(n.is_subset(&lifted));
        }
    }
}

#[test]
fn localization_is_monotone_and_keeps_the_extremes() {
    for inst in contexts() {
        let lm = inst.local().unwrap();
        let (m, ms) = (inst.module(), lm.module());
        assert_eq!(lm.localize_submodule(&m.zero_submodule()).unwrap(), ms.zero_submodule());
        assert_eq!(lm.localize_submodule(&m.full_submodule()).unwrap(), ms.full_submodule());
        let subs = m.submodules().unwrap();
        for a in subs {
            for b in subs {
                if a.is_subset(b) {
                    let (la, lb) = (lm.localize_submodule(a).unwrap(), lm.localize_submodule(b).unwrap());
                    assert!(la.is_subset(&lb), "{inst:?} {a} ⊆ {b}");
                }
            }
        }
    }
}

#[test]
fn unit_denominators_give_isomorphisms() {
    for inst in contexts() {
        let lm = inst.local().unwrap();
        let units = inst.ring().units();
        let s = inst.mulset().unwrap();
        if s.elements().is_subset(units.elements()) {
            assert!(lm.canonical_is_bijective(), "{inst:?}");
            assert!(lm.localized_ring().canonical().is_bijective(), "{inst:?}");
        }
        if lm.is_degenerate() {
            assert_eq!(lm.module().size(), 1);
            assert_eq!(lm.localized_ring().ring().size(), 1);
        }
    }
}
