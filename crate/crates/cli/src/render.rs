//! Plain-text rendering of reports. Nothing here depends on timing, so the
//! text output of identical inputs is byte-identical.

use std::fmt::Write;

use modloc_core::harness::{CheckKind, Violation};
use modloc_core::report::{ClassRow, ExploreReport, LocalizeReport, SearchSummary, VerifyReport};
use modloc_core::{ElementSet, LoadedInstance};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    Indices,
    Labels,
}

/// Element printer for one universe.
struct Names<'a> {
    labels: &'a [String],
    notation: Notation,
}

impl<'a> Names<'a> {
    fn new(labels: &'a [String], notation: Notation) -> Self {
        Self { labels, notation }
    }

    fn one(&self, x: usize) -> String {
        match self.notation {
            Notation::Indices => x.to_string(),
            Notation::Labels => self.labels[x].clone(),
        }
    }

    fn set(&self, s: &ElementSet) -> String {
        let items: Vec<_> = s.iter().map(|x| self.one(x)).collect();
        format!("{{{}}}", items.join(","))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn maybe(b: Option<bool>) -> &'static str {
    b.map_or("-", yes)
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{cell:<w$}");
        }
        s.trim_end().to_string()
    };
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
}

pub fn explore(report: &ExploreReport, inst: &LoadedInstance, notation: Notation) -> String {
    let ring = Names::new(inst.ring.labels(), notation);
    let module = Names::new(inst.module.labels(), notation);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "ring {} (order {}), module {} (order {}), {} submodules",
        report.ring,
        report.ring_size,
        report.module,
        report.module_size,
        report.submodules.len()
    );
    out.push('\n');
    let rows: Vec<Vec<String>> = report
        .submodules
        .iter()
        .map(|r| {
            vec![
                module.set(&r.submodule),
                ring.set(&r.colon),
                r.not_prime.as_ref().map_or("-".into(), |s| ring.set(s)),
                yes(r.prime).into(),
                maybe(r.primal).into(),
                maybe(r.complementary).into(),
                maybe(r.small).into(),
                yes(r.essential).into(),
                yes(r.maximal).into(),
            ]
        })
        .collect();
    table(&mut out, &["N", "N:M", "S(N)", "prime", "primal", "complementary", "small", "essential", "maximal"], &rows);
    out.push('\n');
    let _ = writeln!(out, "Rad M = {}", module.set(&report.rad));
    let _ = writeln!(out, "P(M)  = {}", module.set(&report.p_sum));
    let v = &report.verdicts;
    let _ = writeln!(
        out,
        "hollow {}, lifting {}, coatomic {}, reduced {}, local {}",
        yes(v.hollow),
        yes(v.lifting),
        yes(v.coatomic),
        yes(v.reduced),
        yes(v.local)
    );
    if let Some(ideal) = &report.ideal {
        let _ = writeln!(
            out,
            "ideal {}: prime {}, primal {}, S(I) = {}",
            ring.set(&ideal.ideal),
            yes(ideal.prime),
            maybe(ideal.primal),
            ring.set(&ideal.not_prime)
        );
    }
    out
}

fn classes(out: &mut String, rows: &[ClassRow], numer: &Names, denom: &Names) {
    let pair = |(x, s): (usize, usize)| format!("{}/{}", numer.one(x), denom.one(s));
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|c| {
            vec![
                c.class.to_string(),
                pair(c.representative),
                c.members.iter().map(|&p| pair(p)).collect::<Vec<_>>().join(" "),
            ]
        })
        .collect();
    table(out, &["class", "rep", "members"], &rows);
}

fn canonical(out: &mut String, title: &str, table: &[usize], source: &Names) {
    let maps: Vec<_> = table.iter().enumerate().map(|(x, c)| format!("{}->{c}", source.one(x))).collect();
    let _ = writeln!(out, "{title}: {}", maps.join(" "));
}

pub fn localize(report: &LocalizeReport, inst: &LoadedInstance, notation: Notation) -> String {
    let ring = Names::new(inst.ring.labels(), notation);
    let module = Names::new(inst.module.labels(), notation);
    let mut out = String::new();
    let _ = writeln!(out, "ring {}, module {}, S = {}", report.ring, report.module, ring.set(&report.mulset));
    let _ = writeln!(out, "|R| = {}, |R_S| = {}", report.ring_size, report.localized_ring_size);
    let _ = writeln!(out, "|M| = {}, |M_S| = {}", report.module_size, report.localized_module_size);
    if report.degenerate {
        out.push_str("S contains 0: the localization is zero\n");
    }
    out.push_str("\nring fractions\n");
    classes(&mut out, &report.ring_classes, &ring, &ring);
    canonical(&mut out, "R -> R_S", &report.ring_canonical, &ring);
    out.push_str("\nmodule fractions\n");
    classes(&mut out, &report.module_classes, &module, &ring);
    canonical(&mut out, "M -> M_S", &report.module_canonical, &module);

    out.push_str("\nsubmodules of M\n");
    let rows: Vec<Vec<String>> = report
        .transported
        .iter()
        .map(|t| {
            vec![module.set(&t.submodule), t.localized.to_string(), module.set(&t.lifted), yes(t.round_trip).into()]
        })
        .collect();
    table(&mut out, &["N", "N_S", "lift(N_S)", "lift(N_S) = N"], &rows);

    out.push_str("\nsubmodules of M_S\n");
    let rows: Vec<Vec<String>> = report
        .lifts
        .iter()
        .map(|l| {
            vec![l.submodule.to_string(), module.set(&l.lifted), l.relocalized.to_string(), yes(l.identity).into()]
        })
        .collect();
    table(&mut out, &["N'", "lift(N')", "lift(N')_S", "lift(N')_S = N'"], &rows);
    let failures = report.lifts.iter().filter(|l| !l.identity).count();
    let _ = writeln!(
        out,
        "\nround trip on M_S: {}",
        if failures == 0 { "identity".into() } else { format!("{failures} failures") }
    );
    out
}

fn instances(out: &mut String, title: &str, list: &[Violation]) {
    if list.is_empty() {
        return;
    }
    let _ = writeln!(out, "  {title}:");
    for v in list {
        let _ = writeln!(out, "    {}  [{}]", v.instance.key, v.failed.join("; "));
    }
}

pub fn verify(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "corpus {}", report.corpus);
    for r in &report.results {
        let status = match (r.kind, r.passed()) {
            (CheckKind::Finding, _) => "finding",
            (CheckKind::Theorem, true) => "ok",
            (CheckKind::Theorem, false) => "FAIL",
        };
        let _ = writeln!(
            out,
            "{:<8} {:<16} {} instances, hypothesis holds on {}, {} violations",
            status,
            r.proposition,
            r.instances_examined,
            r.hypothesis_satisfied,
            r.violations.len()
        );
        instances(&mut out, "violations", &r.violations);
        instances(&mut out, "findings", &r.findings);
    }
    let _ = writeln!(out, "total violations: {}", report.total_violations);
    out
}

pub fn search(report: &SearchSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "corpus {}", report.corpus);
    for r in &report.results {
        let _ = writeln!(
            out,
            "{:<16} {} instances, {} findings ({})",
            r.proposition,
            r.instances_examined,
            r.findings.len(),
            r.criterion
        );
        instances(&mut out, "findings", &r.findings);
    }
    out
}
