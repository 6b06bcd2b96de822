//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines are printed whether or not a criterion fails; the process
//! exits non-zero if any criterion fails.

use std::process::ExitCode;

use centra_core::catalog::Catalog;
use centra_core::centralizers::{cent_profile, center, two_cent, two_cent_naive};
use centra_core::constructions::parse_spec;
use centra_core::isomorphism::is_isomorphic;
use centra_core::theorems::{reports_to_json, run_suite, SuiteConfig, TheoremReport};
use centra_core::todd_coxeter::{presented_group, Presentation};
use centra_core::{CentProfile, Group};

struct Verdict {
    ok: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Self { ok: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.ok = false;
            self.notes.push(note.into());
        }
    }

    fn info(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn group(spec: &str) -> Group {
    parse_spec(spec).unwrap().build().unwrap()
}

fn profile(spec: &str) -> CentProfile {
    cent_profile(&group(spec), spec).unwrap()
}

fn suite(ids: &[&str], cap: usize) -> Vec<TheoremReport> {
    let config = SuiteConfig {
        theorem_ids: Some(ids.iter().map(|s| s.to_string()).collect()),
        order_cap: cap,
        ..SuiteConfig::default()
    };
    run_suite(&config).unwrap()
}

fn no_failures(v: &mut Verdict, reports: &[TheoremReport]) {
    for r in reports {
        v.check(r.failed == 0, format!("{} has {} failures: {:?}", r.theorem_id, r.failed, r.counterexamples));
    }
}

fn fixtures() -> Verdict {
    let mut v = Verdict::new();
    for (spec, expected) in [
        ("S(3)", 5),
        ("A(4)", 6),
        ("D(10)", 7),
        ("R", 7),
        ("D(8)", 5),
        ("D(12)", 6),
        ("D(14)", 9),
        ("Hol(7)", 9),
        ("G21", 9),
        ("A(5)", 22),
    ] {
        let got = profile(spec).n_2cent;
        v.check(got == expected, format!("|2-Cent({spec})| = {got}, expected {expected}"));
    }
    let a5 = profile("A(5)");
    v.check(a5.n_cent == 22, format!("|Cent(A(5))| = {}", a5.n_cent));
    v
}

fn oracle_equivalence(catalog: &Catalog) -> Verdict {
    let mut v = Verdict::new();
    let (mut as_sets, mut as_counts) = (0, 0);
    for e in catalog.entries() {
        let g = e.group().unwrap();
        if g.order() > 600 {
            continue;
        }
        if g.order() < 2 {
            v.check(two_cent(g).is_err() && two_cent_naive(g).is_err(), "trivial group must be rejected");
            continue;
        }
        let fast = two_cent(g).unwrap();
        let naive = two_cent_naive(g).unwrap();
        if g.order() <= 64 {
            v.check(fast == naive, format!("{}: subgroup sets differ", e.name));
            as_sets += 1;
        } else {
            v.check(fast.len() == naive.len(), format!("{}: {} vs {}", e.name, fast.len(), naive.len()));
            as_counts += 1;
        }
    }
    v.info(format!("{as_sets} groups compared as sets, {as_counts} by count"));
    v
}

fn product_formula() -> Verdict {
    let mut v = Verdict::new();
    let reports = suite(&["thm2.4", "cor2.6"], 600);
    no_failures(&mut v, &reports);
    let (pairs, triples) = (&reports[0], &reports[1]);
    v.check(pairs.instances == 28 && pairs.skipped.is_empty(), format!("{} pair instances", pairs.instances));
    v.check(triples.instances >= 3, format!("{} triple instances", triples.instances));
    v.info(format!("{} pairs, {} triples", pairs.instances, triples.instances));
    v
}

fn ca_counting(catalog: &Catalog) -> Verdict {
    let mut v = Verdict::new();
    let reports = suite(&["thm2.6", "thm2.13"], 100);
    no_failures(&mut v, &reports);
    let non_abelian: Vec<(&str, bool)> = catalog
        .entries()
        .iter()
        .filter_map(|e| {
            let g = e.group().ok()?;
            (g.order() <= 100 && !g.is_abelian()).then(|| (e.name.as_str(), e.profile().unwrap().is_ca))
        })
        .collect();
    let thm213 = &reports[1];
    v.check(thm213.instances == non_abelian.len(), format!("{} of {} checked", thm213.instances, non_abelian.len()));
    let ca = non_abelian.iter().filter(|(_, ca)| *ca).count();
    v.check(ca > 0 && ca < non_abelian.len(), "both CA and non-CA groups must occur");
    v.check(non_abelian.contains(&("S(4)", false)), "S(4) must appear as a non-CA group");
    v.info(format!("{} non-abelian groups, {ca} CA", non_abelian.len()));
    v
}

fn classification(catalog: &Catalog) -> Verdict {
    let mut v = Verdict::new();
    no_failures(
        &mut v,
        &suite(&["sec4.n2", "sec4.n3", "thm2.14", "thm2.18", "thm2.19", "thm2.20", "thm2.21", "thm2.22"], 600),
    );
    let profiles: Vec<(&str, &CentProfile)> =
        catalog.entries().iter().filter_map(|e| Some((e.name.as_str(), e.profile().ok()?))).collect();
    for (name, p) in &profiles {
        v.check(!(2..=4).contains(&p.n_2cent), format!("{name} has |2-Cent| = {}", p.n_2cent));
        v.check(!(p.n_2cent == 8 && p.primitive_2n), format!("{name} is primitive (2,8)-centralizer"));
    }
    for (name, n) in [("S(3)", 5), ("A(4)", 6), ("D(10)", 7), ("R", 7), ("D(14)", 9), ("Hol(7)", 9), ("G21", 9)] {
        let p = catalog.get(name).unwrap().profile().unwrap();
        v.check(p.n_2cent == n && p.primitive_2n, format!("{name} is not primitive (2,{n})-centralizer"));
    }
    let in_range = profiles.iter().filter(|(_, p)| (5..=9).contains(&p.n_2cent)).count();
    v.info(format!("{in_range} groups with |2-Cent| in 5..=9"));
    v
}

fn family_formulas() -> Verdict {
    let mut v = Verdict::new();
    let reports = suite(&["sec6.SD", "sec6.T", "sec6.V", "sec6.U"], 600);
    no_failures(&mut v, &reports);
    let total: usize = reports.iter().map(|r| r.instances).sum();
    v.check(total >= 30, format!("only {total} instances"));
    for n in 1..=8 {
        for m in [1, 2] {
            let got = profile(&format!("U({n},{m})")).n_2cent;
            v.check(got == 1, format!("|2-Cent(U({n},{m}))| = {got}"));
        }
    }
    v.info(format!("{total} family instances"));
    v
}

fn p_groups(catalog: &Catalog) -> Verdict {
    let mut v = Verdict::new();
    for (spec, p) in [("D(8)", 2), ("T(2)", 2), ("Heis(3)", 3)] {
        let pr = profile(spec);
        v.check(pr.n_cent == p + 2, format!("|Cent({spec})| = {}", pr.n_cent));
        v.check(pr.n_2cent == pr.n_cent + 1, format!("|2-Cent({spec})| = {}", pr.n_2cent));
    }
    let reports = suite(&["thm5.7", "sec6.p4"], 600);
    no_failures(&mut v, &reports);
    v.check(reports[0].instances > 0, "no instance satisfies the elementary abelian hypothesis");
    let mut order_p4 = 0;
    for e in catalog.entries() {
        let g = e.group().unwrap();
        let p = match g.order() {
            16 => 2,
            81 => 3,
            _ => continue,
        };
        if g.is_abelian() {
            continue;
        }
        order_p4 += 1;
        let pr = e.profile().unwrap();
        v.check(
            [p + 2, p * p + 2, p * p + p + 2].contains(&pr.n_cent) && pr.n_2cent == pr.n_cent + 1,
            format!("{}: |Cent| = {}, |2-Cent| = {}", e.name, pr.n_cent, pr.n_2cent),
        );
    }
    v.info(format!("{} elementary abelian quotient instances, {order_p4} groups of order p^4", reports[0].instances));
    v
}

fn solvability(catalog: &Catalog) -> Verdict {
    let mut v = Verdict::new();
    no_failures(&mut v, &suite(&["sec5.solv"], 600));
    let a5 = group("A(5)");
    let mut simple_22 = Vec::new();
    for e in catalog.entries() {
        let Ok(p) = e.profile() else { continue };
        let g = e.group().unwrap();
        if p.n_2cent < 22 {
            v.check(p.solvable, format!("{} is not solvable", e.name));
        }
        if p.n_2cent == 22 && !g.is_abelian() && g.is_simple() {
            v.check(is_isomorphic(g, &a5).unwrap(), format!("{} is simple with |2-Cent| = 22", e.name));
            simple_22.push(e.name.clone());
        }
    }
    v.check(simple_22.iter().any(|n| n == "A(5)"), "A(5) missing");
    for spec in ["PSL2(7)", "PSL2(8)"] {
        let n = two_cent_naive(&group(spec)).unwrap().len();
        v.check(n <= 100, format!("|2-Cent({spec})| = {n} by enumeration of pairs, above 100"));
        v.info(format!("|2-Cent({spec})| = {n}"));
    }
    v.info(format!("simple groups with |2-Cent| = 22: {}", simple_22.join(", ")));
    v
}

fn presented(gens: &[&str], relators: &[&str]) -> Group {
    presented_group(&Presentation::parse(gens, relators, None).unwrap()).unwrap()
}

fn construction_cross_checks() -> Verdict {
    let mut v = Verdict::new();
    for n in 2..=8 {
        for (spec, order) in [(format!("SD({n})"), 8 * n), (format!("T({n})"), 4 * n), (format!("V({n})"), 8 * n)] {
            let got = group(&spec).order();
            v.check(got == order, format!("{spec} has order {got}"));
        }
    }
    for n in 1..=8 {
        for m in 1..=8 {
            let got = group(&format!("U({n},{m})")).order();
            v.check(got == 2 * n * m, format!("U({n},{m}) has order {got}"));
        }
    }
    let r = presented(&["x", "y"], &["x^5", "y^4", "x y = y x^3"]);
    v.check(r.order() == 20 && is_isomorphic(&group("sdp(5,4,2)"), &r).unwrap(), "sdp(5,4,2) vs presented R");
    v.check(is_isomorphic(&group("PSL2(5)"), &group("A(5)")).unwrap(), "PSL2(5) vs A(5)");
    v.check(is_isomorphic(&group("D(6)"), &group("S(3)")).unwrap(), "D(6) vs S(3)");
    let d8 = group("D(8)");
    let q = d8.quotient(&center(&d8)).unwrap();
    v.check(is_isomorphic(&q, &group("EA(2,2)")).unwrap(), "D(8)/Z vs EA(2,2)");
    v
}

fn determinism() -> Verdict {
    let mut v = Verdict::new();
    let run = |jobs| reports_to_json(&run_suite(&SuiteConfig { jobs, ..SuiteConfig::default() }).unwrap());
    let one = run(1);
    let eight = run(8);
    v.check(one == eight, "jobs=1 and jobs=8 reports differ");
    let reports: Vec<TheoremReport> = serde_json::from_str(&one).unwrap();
    let failures: usize = reports.iter().map(|r| r.failed).sum();
    v.info(format!("{} reports, {} bytes, {failures} failures", reports.len(), one.len()));
    v
}

fn main() -> ExitCode {
    let catalog = Catalog::default();
    type Criterion<'a> = Box<dyn Fn() -> Verdict + 'a>;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("value fixtures", Box::new(fixtures)),
        ("fast and naive 2-Cent agree", Box::new(|| oracle_equivalence(&catalog))),
        ("product formulas", Box::new(product_formula)),
        ("CA counting", Box::new(|| ca_counting(&catalog))),
        ("classification for n <= 9", Box::new(|| classification(&catalog))),
        ("family closed forms", Box::new(family_formulas)),
        ("p-group counts", Box::new(|| p_groups(&catalog))),
        ("solvability threshold and PSL bound", Box::new(|| solvability(&catalog))),
        ("construction cross-checks", Box::new(construction_cross_checks)),
        ("deterministic reports", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let verdict = criterion();
        let status = if verdict.ok { "PASS" } else { "FAIL" };
        println!("criterion {:2} {status} {name}", i + 1);
        for note in &verdict.notes {
            println!("    {note}");
        }
        failed += usize::from(!verdict.ok);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
