//! The eight acceptance criteria. Each test prints one `PASS`/`FAIL` line
//! straight to stdout, so the lines show even under output capture.

use std::io::Write;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use modloc_core::harness::{lookup, theorem_ids};
use modloc_core::properties::{
    is_coatomic, is_essential, is_hollow, is_lifting, is_local_module, is_maximal, is_prime_submodule,
    is_prime_via_element_criterion, is_prime_via_ideal_criterion, is_reduced, is_small_in, is_supplemented_submodule,
};
use modloc_core::{
    localize_module, localize_ring, make_zn, necessity_search, regular_module, sweep, Corpus, CorpusConfig, ElementSet,
    FiniteModule, FiniteRing, MultiplicativeSet, Submodule, MODULE_SIZE_CAP,
};

fn standard() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| Corpus::build(CorpusConfig::standard()).unwrap())
}

fn verdict(criterion: usize, title: &str, failures: &[String]) {
    let line = if failures.is_empty() {
        format!("PASS criterion {criterion}: {title}\n")
    } else {
        let shown: Vec<_> = failures.iter().take(6).cloned().collect();
        let more = failures.len().saturating_sub(shown.len());
        let tail = if more > 0 { format!(" (+{more} more)") } else { String::new() };
        format!("FAIL criterion {criterion}: {title}: {}{tail}\n", shown.join("; "))
    };
    std::io::stdout().lock().write_all(line.as_bytes()).unwrap();
    assert!(failures.is_empty(), "{line}");
}

fn within(limit: Duration, start: Instant, failures: &mut Vec<String>) {
    if start.elapsed() >= limit {
        failures.push(format!("took {:?}, limit {limit:?}", start.elapsed()));
    }
}

fn z6() -> (Arc<FiniteRing>, Arc<FiniteModule>) {
    let ring = Arc::new(make_zn(6).unwrap());
    let module = Arc::new(regular_module(&ring));
    (ring, module)
}

fn set(universe: usize, items: &[usize]) -> ElementSet {
    ElementSet::from_indices(universe, items.iter().copied())
}

fn expect(failures: &mut Vec<String>, what: &str, got: &ElementSet, want: &[usize]) {
    if got.to_vec() != want {
        failures.push(format!("{what} = {got}, expected {}", set(got.universe(), want)));
    }
}

#[test]
fn criterion_1_not_prime_set_goldens() {
    let start = Instant::now();
    let (ring, m) = z6();
    let mut failures = Vec::new();
    for (n, want) in [(&[0][..], &[0, 2, 3, 4][..]), (&[0, 2, 4], &[0, 2, 4]), (&[0, 3], &[0, 3])] {
        let sub = m.submodule_from(n.iter().copied()).unwrap();
        let s = m.not_prime_set(&sub).unwrap();
        expect(&mut failures, &format!("S({sub})"), s.elements(), want);
    }
    let s0 = m.not_prime_set(&m.zero_submodule()).unwrap();
    if ring.is_ideal(s0.elements()) {
        failures.push("S({0}) reported as an ideal".into());
    }
    within(Duration::from_secs(1), start, &mut failures);
    verdict(1, "not-prime sets of Z6", &failures);
}

#[test]
fn criterion_2_colon_goldens() {
    let start = Instant::now();
    let (_, m) = z6();
    let mut failures = Vec::new();
    let zero = m.zero_submodule();
    expect(&mut failures, "{0}:{1,5}", m.colon_set(&zero, &set(6, &[1, 5])).unwrap().elements(), &[0]);
    expect(&mut failures, "{0}:{2,4}", m.colon_set(&zero, &set(6, &[2, 4])).unwrap().elements(), &[0, 3]);
    for k in [&[0][..], &[0, 2, 4], &[0, 3]] {
        let sub = m.submodule_from(k.iter().copied()).unwrap();
        let colon = m.colon_set(&sub, &set(6, &[1, 5])).unwrap();
        expect(&mut failures, &format!("{sub}:{{1,5}}"), colon.elements(), k);
    }
    let n = m.submodule_from([0, 2, 4]).unwrap();
    for s in [1, 5] {
        expect(&mut failures, &format!("{n}:{s}"), m.colon_element(&n, s).unwrap().elements(), &[0, 2, 4]);
    }
    within(Duration::from_secs(1), start, &mut failures);
    verdict(2, "colon goldens on Z6", &failures);
}

#[test]
fn criterion_3_theorem_sweeps() {
    let start = Instant::now();
    let corpus = standard();
    let mut failures = Vec::new();
    for id in theorem_ids() {
        let report = sweep(id, corpus).unwrap();
        if !report.passed() {
            let first = &report.violations[0];
            failures.push(format!(
                "{id}: {} violations of {} instances, first {} [{}]",
                report.violations.len(),
                report.instances_examined,
                first.instance.key,
                first.failed.join(", ")
            ));
        }
    }
    within(Duration::from_secs(300), start, &mut failures);
    verdict(3, "zero violations for every theorem on the standard corpus", &failures);
}

#[test]
fn criterion_4_prime_deciders_agree() {
    let mut failures = Vec::new();
    let mut checked = 0;
    for inst in standard().modules() {
        let m = inst.module();
        for n in m.submodules().unwrap() {
            let direct = is_prime_submodule(m, n).unwrap().holds;
            let ideal = is_prime_via_ideal_criterion(m, n).unwrap().holds;
            let element = is_prime_via_element_criterion(m, n).unwrap().holds;
            checked += 1;
            if direct != ideal || direct != element {
                failures.push(format!("{} N={n}: {direct}/{ideal}/{element}", inst.key()));
            }
        }
    }
    assert!(checked > 0);
    verdict(4, &format!("three prime deciders agree on {checked} submodules"), &failures);
}

#[test]
fn criterion_5_localization_invariants() {
    let mut failures = Vec::new();
    let mut contexts = 0;
    for inst in standard().contexts(true, MODULE_SIZE_CAP) {
        let lm = inst.local().unwrap();
        let lr = lm.localized_ring();
        let (m, ms) = (inst.module(), lm.module());
        let key = inst.key();
        contexts += 1;
        let subs = m.submodules().unwrap();
        let local: Vec<Submodule> = subs.iter().map(|n| lm.localize_submodule(n).unwrap()).collect();
        for (i, l) in subs.iter().enumerate() {
            for (j, n) in subs.iter().enumerate().skip(i) {
                if lm.localize_submodule(&m.sum(l, n)).unwrap() != ms.sum(&local[i], &local[j]) {
                    failures.push(format!("{key}: (L+N)_S for L={l}, N={n}"));
                }
                if lm.localize_submodule(&m.intersection(l, n)).unwrap() != ms.intersection(&local[i], &local[j]) {
                    failures.push(format!("{key}: (L∩N)_S for L={l}, N={n}"));
                }
            }
        }
        for r in m.ring().elements() {
            let rm = lm.localize_submodule(&m.scalar_image(r)).unwrap();
            for s in inst.mulset().unwrap().iter() {
                let q = lr.fraction(r, s);
                let qm = ElementSet::from_indices(ms.size(), ms.elements().map(|y| ms.act(q, y)));
                if qm != *rm.elements() {
                    failures.push(format!("{key}: ({r}/{s})M_S"));
                }
            }
        }
        for nprime in ms.submodules().unwrap() {
            if lm.localize_submodule(&lm.lift_submodule(nprime).unwrap()).unwrap() != *nprime {
                failures.push(format!("{key}: lift of {nprime} does not localize back"));
            }
        }
    }
    assert!(contexts > 0);
    verdict(5, &format!("localization invariants on {contexts} (M, S) pairs"), &failures);
}

type ModuleCheck = fn(&FiniteModule) -> modloc_core::Result<modloc_core::PropertyVerdict>;

#[test]
fn criterion_6_unit_sets() {
    let module_checks: [(&str, ModuleCheck); 5] = [
        ("coatomic", is_coatomic),
        ("reduced", is_reduced),
        ("hollow", is_hollow),
        ("lifting", is_lifting),
        ("local", is_local_module),
    ];
    let mut failures = Vec::new();
    let mut modules = 0;
    for inst in standard().modules() {
        let m = inst.module();
        let units: MultiplicativeSet = m.ring().units();
        let lr = localize_ring(m.ring(), &units).unwrap();
        let lm = localize_module(m, &units).unwrap();
        let ms = lm.module();
        let key = inst.key();
        modules += 1;
        if !lr.canonical().is_bijective() {
            failures.push(format!("{key}: R -> R_S is not bijective"));
        }
        if !lm.canonical_is_bijective() {
            failures.push(format!("{key}: M -> M_S is not bijective"));
        }
        for (name, property) in module_checks {
            if property(m).unwrap().holds != property(ms).unwrap().holds {
                failures.push(format!("{key}: {name} differs"));
            }
        }
        let full = m.full_submodule();
        let full_s = ms.full_submodule();
        for n in m.submodules().unwrap() {
            let ns = lm.localize_submodule(n).unwrap();
            let pairs = [
                ("maximal", is_maximal(m, n).unwrap().holds, is_maximal(ms, &ns).unwrap().holds),
                ("essential", is_essential(m, n).unwrap().holds, is_essential(ms, &ns).unwrap().holds),
                ("small", is_small_in(m, n, &full).unwrap(), is_small_in(ms, &ns, &full_s).unwrap()),
                (
                    "supplemented",
                    is_supplemented_submodule(m, n).unwrap().holds,
                    is_supplemented_submodule(ms, &ns).unwrap().holds,
                ),
            ];
            for (name, base, local) in pairs {
                if base != local {
                    failures.push(format!("{key}: N={n} {name} differs"));
                }
            }
            let rad = lm.localize_submodule(&m.rad_of_submodule(n).unwrap()).unwrap();
            if rad != ms.rad_of_submodule(&ns).unwrap() {
                failures.push(format!("{key}: N={n} Rad differs"));
            }
        }
    }
    assert!(modules > 0);
    verdict(6, &format!("S = units: bijections and ten transfers on {modules} modules"), &failures);
}

#[test]
fn criterion_7_necessity_search() {
    let corpus = Corpus::build(CorpusConfig::z6()).unwrap();
    let first = necessity_search("3.17", &corpus).unwrap();
    let second = necessity_search("3.17", &corpus).unwrap();
    let mut failures = Vec::new();
    if first.findings != second.findings {
        failures.push("two runs disagree".into());
    }
    let (_, m) = z6();
    let s = set(6, &[2, 4]);
    if m.colon_set(&m.zero_submodule(), &s).unwrap() == m.zero_submodule() {
        failures.push("{0}:{2,4} is {0}".into());
    }
    let hit = first
        .findings
        .iter()
        .any(|f| f.instance.instance.mulset.as_deref() == Some(&[2, 4][..]) && f.instance.key.starts_with("Z6 | Z6 |"));
    if !hit {
        failures.push(format!("no S={{2,4}} finding among {}", first.findings.len()));
    }
    assert_eq!(lookup("3.17").unwrap().id, "3.17");
    verdict(7, "search(3.17) on Z6 finds the S={2,4} instance", &failures);
}

/// Independent oracle: fraction pairs over Z_n compared with integer
/// arithmetic, classes as connected components of the relation.
fn zn_fraction_classes(n: usize, s: &[usize]) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| s.iter().map(move |&d| (x, d))).collect();
    let related = |(x, a): (usize, usize), (y, b): (usize, usize)| {
        let diff = (b * x + n * n - a * y) % n;
        s.iter().any(|&u| u * diff % n == 0)
    };
    let mut seen = vec![false; pairs.len()];
    let mut classes = 0;
    for start in 0..pairs.len() {
        if seen[start] {
            continue;
        }
        classes += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for j in 0..pairs.len() {
                if !seen[j] && related(pairs[i], pairs[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    classes
}

#[test]
fn criterion_8_localization_sizes() {
    let (ring, m) = z6();
    let mut failures = Vec::new();
    for (s, pinned) in [(&[2, 4][..], 3), (&[3], 2), (&[1, 5], 6)] {
        let oracle = zn_fraction_classes(6, s);
        let mulset = MultiplicativeSet::new(&ring, set(6, s)).unwrap();
        let lr = localize_ring(&ring, &mulset).unwrap().ring().size();
        let lm = localize_module(&m, &mulset).unwrap().module().size();
        if oracle != pinned || lr != pinned || lm != pinned {
            failures.push(format!("S={s:?}: oracle {oracle}, R_S {lr}, M_S {lm}, pinned {pinned}"));
        }
    }
    verdict(8, "Z6 localization sizes 3/2/6 match the fraction-class oracle", &failures);
}
